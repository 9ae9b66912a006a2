#pragma once

#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pmetric/code.hpp"
#include "pmetric/partition.hpp"

namespace pmetric {

/// Table sizes grow as q^(n_i - k_i); kept exact.
using Complexity = boost::multiprecision::cpp_int;

/// Profile [(n_0,k_0), (n_1,k_1), ...]; the tail is sorted so that equal
/// profiles up to component order compare equal.
struct Profile {
    std::pair<int, int> outside;                 // (|J0|, |J0|)
    std::vector<std::pair<int, int>> components;  // (|supp C_i|, dim C_i), sorted

    std::string to_string() const;  // "[(0,0),(2,1),(2,1)]"
    bool operator==(const Profile&) const = default;
    auto operator<=>(const Profile&) const = default;
};

/// C = C_1 ⊕ … ⊕ C_r with pairwise disjoint supports. C_0 is implicit: the
/// full coordinate space on j0 = [n] \ supp(C).
class Decomposition {
public:
    /// Checks disjoint supports, nonzero components, containment in C and
    /// that dimensions add up to dim C. Components are reordered by least
    /// support element.
    Decomposition(LinearCode code, std::vector<LinearCode> components);

    const LinearCode& code() const { return code_; }
    const std::vector<LinearCode>& components() const { return components_; }
    ElementSet j0() const { return j0_; }
    /// (j0; supp C_1, ..., supp C_r)
    PointedPartition support_partition() const;

private:
    LinearCode code_;
    std::vector<LinearCode> components_;
    ElementSet j0_;
};

/// The unique finest decomposition: connected components of the graph on
/// supp(C) joining coordinates that share an RREF row.
Decomposition maximal_decomposition(const LinearCode& code);

/// The trivial decomposition (C; C0; C).
Decomposition trivial_decomposition(const LinearCode& code);

/// Merges components; `groups` lists, for each new component, indices into dec.components().
Decomposition coarsen(const Decomposition& dec, const std::vector<std::vector<std::size_t>>& groups);

Profile profile_of(const Decomposition& dec);

/// Σ_{i≥1} q^(n_i - k_i); C_0 does not contribute.
Complexity complexity_of(const Decomposition& dec);
Complexity complexity_of(const Profile& profile, std::uint32_t q);

/// Least complexity over all decompositions of `code`. With deficiencies
/// d_i = n_i - k_i of the maximal decomposition this is Σ_{d_i>0} q^{d_i},
/// or 1 when every d_i is zero.
Complexity min_complexity_over_groupings(const LinearCode& code);

/// A coarsening of the maximal decomposition that attains
/// min_complexity_over_groupings: zero-deficiency components are folded into
/// the first component with positive deficiency (or all into one when none has).
Decomposition min_complexity_grouping(const LinearCode& code);

}  // namespace pmetric
