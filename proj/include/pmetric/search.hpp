#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pmetric/code.hpp"
#include "pmetric/decomposition.hpp"
#include "pmetric/isometry.hpp"
#include "pmetric/poset.hpp"

namespace pmetric {

inline constexpr std::uint64_t kDefaultOrbitBudget = 100'000;

struct SearchBudget {
    std::uint64_t group = kDefaultGroupBudget;  // isometries scanned
    std::uint64_t orbit = kDefaultOrbitBudget;  // distinct orbit codes kept
};

/// The G_P-orbit of a code, in order of first appearance in the isometry stream.
struct Orbit {
    std::vector<LinearCode> codes;
    std::vector<std::uint64_t> first_index;  // isometry index that first produced codes[i]
    bool complete = true;                    // false when a budget cut the scan short
};

Orbit orbit_of(const LinearCode& code, const Poset& p, const SearchBudget& budget = {});

/// A decomposition of some code T(C) in the orbit of C, with the isometry T.
struct PDecomposition {
    PIsometry witness;
    std::uint64_t witness_index = 0;
    Decomposition dec;
    Complexity complexity;
    bool proven_minimal = true;
};

/// Primary P-decomposition: least complexity over the whole orbit. Ties go to
/// the lexicographically smallest orbit code, then to the first isometry that
/// reaches it. If a budget stops the scan, the best decomposition seen so far
/// is returned with proven_minimal = false.
PDecomposition primary_decomposition(const LinearCode& code, const Poset& p, const SearchBudget& budget = {});

/// O_P(C). Throws ResourceError if the orbit scan was truncated.
Complexity minimal_complexity(const LinearCode& code, const Poset& p, const SearchBudget& budget = {});

/// A component is P-irreducible when every code in its orbit under the
/// isometries of the induced poset on its support keeps the full support and
/// stays indecomposable.
bool is_p_irreducible(const LinearCode& component, const Poset& p, const SearchBudget& budget = {});

struct ProfileUniquenessReport {
    std::size_t orbit_size = 0;
    std::size_t maximal_count = 0;  // orbit codes whose finest decomposition is P-maximal
    std::optional<Profile> common_profile;
    /// Set when two maximal P-decompositions disagree.
    std::optional<std::pair<LinearCode, LinearCode>> counterexample;
    bool consistent() const { return common_profile.has_value() && !counterexample.has_value(); }
};

/// Scans the whole orbit and compares the profiles of all maximal
/// P-decompositions. Throws ResourceError if the orbit does not fit the budget.
ProfileUniquenessReport verify_profile_uniqueness(const LinearCode& code, const Poset& p, const SearchBudget& budget = {});

/// y_i = x_{τ(i)}
FieldVector permute_coordinates(const FieldVector& x, const Permutation& tau);

/// Conjugates away the permutation part of the witness: the result is a
/// decomposition of A(C) with witness A alone and the same complexity.
PDecomposition strip_permutation(const PDecomposition& pd);

/// True iff pd.witness is an isometry for Q as well and maps `code` onto pd.dec.code().
bool is_decomposition_for(const PDecomposition& pd, const LinearCode& code, const Poset& q);

/// P⁺: hierarchical on the levels of P.
Poset upper_neighbour(const Poset& p);
/// P⁻: hierarchical on blocks of consecutive levels delimited by H(P).
Poset lower_neighbour(const Poset& p);

struct BoundsReport {
    Poset upper_poset;
    Poset lower_poset;
    Complexity o_upper;
    std::optional<Complexity> o_p;  // absent if the P scan did not finish
    Complexity o_lower;
    bool sandwich_holds() const { return !o_p || (o_upper <= *o_p && *o_p <= o_lower); }
};

/// O_{P⁺}(C), O_P(C), O_{P⁻}(C). Throws ResourceError if a neighbour scan is truncated.
BoundsReport hierarchy_bounds(const LinearCode& code, const Poset& p, const SearchBudget& budget = {});

struct MonotonicityResult {
    Complexity o_p;
    Complexity o_q;
    bool holds() const { return o_q <= o_p; }
};

/// O_Q(C) ≤ O_P(C) for P ≤ Q. Throws ValidationError if P ≰ Q.
MonotonicityResult monotonicity_check(const LinearCode& code, const Poset& p, const Poset& q,
                                      const SearchBudget& budget = {});

struct RefinementWitness {
    LinearCode code;
    Complexity o_p;
    Complexity o_q;
    bool lower_complexity = false;  // O_Q < O_P
    bool finer_partition = false;   // primary Q-partition strictly refines the primary P-partition
};

/// First code, by dimension then generator matrix, whose primary decomposition
/// improves when P is replaced by Q. Requires P < Q. nullopt means nothing was
/// found within `max_codes` candidates, which is not a proof of absence.
std::optional<RefinementWitness> witness_refinement(const Poset& p, const Poset& q, PrimeField field,
                                                    std::size_t max_codes = 100'000,
                                                    const SearchBudget& budget = {});

}  // namespace pmetric
