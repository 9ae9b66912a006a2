#pragma once

#include <cstdint>
#include <vector>

#include "pmetric/code.hpp"
#include "pmetric/decomposition.hpp"
#include "pmetric/isometry.hpp"
#include "pmetric/poset.hpp"
#include "pmetric/search.hpp"

namespace pmetric {

/// Bound on the syndrome count q^(n_i - k_i) of one component.
inline constexpr std::uint64_t kCosetLimit = std::uint64_t{1} << 20;

/// Coset leaders of one component C_i inside its support-space V_i.
/// Everything is expressed in local coordinates 1..n_i of supp(C_i).
struct ComponentTable {
    ElementSet support;
    LinearCode local_code;
    Poset local_poset;  // P restricted to the support
    ParityData parity;
    std::vector<FieldVector> leaders;  // indexed by packed syndrome

    std::uint64_t entries() const { return leaders.size(); }
};

/// Componentwise syndrome decoder built on a P-decomposition of T(C).
struct SyndromeTable {
    LinearCode code;    // C, in received-word coordinates
    PIsometry witness;  // T with T(C) = decomposed code
    Matrix witness_inverse;
    ElementSet j0;
    std::vector<ComponentTable> components;
    Complexity complexity;  // complexity of the decomposition the table was built from

    std::uint64_t total_entries() const;
};

/// Packs a syndrome into an index, first entry most significant.
std::uint64_t syndrome_index(const FieldVector& syndrome);

/// Leaders minimise the induced-poset weight on each support-space; ties go
/// to the lexicographically smallest vector. Throws ResourceError when a
/// component has more than `coset_budget` cosets.
SyndromeTable build_table(const PDecomposition& pd, const LinearCode& code, const Poset& p,
                          std::uint64_t coset_budget = kCosetLimit);

struct DecodeResult {
    FieldVector codeword;
    /// Coordinates of J0 (in the decomposed frame) where the transported word
    /// was nonzero. They cannot be corrected and are zeroed.
    ElementSet flagged;
};

/// Transport by T, subtract each component's leader, zero J0, transport back.
/// The result is always a codeword of C.
DecodeResult decode(const SyndromeTable& table, const FieldVector& y);

struct NearestResult {
    FieldVector codeword;
    int distance;
};

/// Exhaustive minimum-d_P decoder; ties go to the lexicographically smallest codeword.
NearestResult nearest_codeword_oracle(const LinearCode& code, const Poset& p, const FieldVector& y);

struct TableStats {
    std::vector<std::uint64_t> entries_per_component;
    std::uint64_t total = 0;
    Complexity complexity;
    bool matches_complexity() const { return Complexity(total) == complexity; }
};

TableStats table_stats(const SyndromeTable& table);

}  // namespace pmetric
