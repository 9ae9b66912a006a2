#pragma once

#include <string>
#include <vector>

#include "pmetric/element_set.hpp"

namespace pmetric {

/// Pointed partition (J0; J_1, ..., J_r) of [n].
///
/// J0 may be empty; every other part is nonempty. Parts are kept sorted by
/// least element, so two partitions that differ only in part order compare equal.
class PointedPartition {
public:
    /// Validates disjointness, coverage of [n] and nonempty parts.
    PointedPartition(int n, ElementSet j0, std::vector<ElementSet> parts);

    int ground_size() const { return n_; }
    ElementSet j0() const { return j0_; }
    const std::vector<ElementSet>& parts() const { return parts_; }
    int part_count() const { return static_cast<int>(parts_.size()); }

    std::string to_string() const;  // "({1,3};{2},{4})"

    bool operator==(const PointedPartition&) const = default;
    auto operator<=>(const PointedPartition&) const = default;

private:
    int n_;
    ElementSet j0_;
    std::vector<ElementSet> parts_;
};

/// Splits part l (1-based, canonical order) into A and J_l \ A. Requires ∅ ≠ A ⊊ J_l.
PointedPartition l_split(const PointedPartition& j, int l, ElementSet a);

/// Moves A out of part l into J0. Requires ∅ ≠ A ⊊ J_l.
PointedPartition l_aggregate(const PointedPartition& j, int l, ElementSet a);

/// True iff `finer` is reachable from `coarser` by 1-step splits and aggregates.
///
/// Closed test: J0 ⊆ J0', every part of `finer` sits inside a part of
/// `coarser`, and every part of `coarser` keeps at least one descendant part.
bool is_refinement(const PointedPartition& finer, const PointedPartition& coarser);

/// All distinct results of one l-split or l-aggregate. When `allow_full_aggregate`
/// is set, a whole part may also be moved into J0 (non-strict reading of the
/// aggregate rule); the default is the strict reading. Requires n ≤ 8.
std::vector<PointedPartition> one_step_successors(const PointedPartition& j, bool allow_full_aggregate = false);

/// Every pointed partition of [n] (n ≤ 8).
std::vector<PointedPartition> all_pointed_partitions(int n);

/// Every set partition of `set` into nonempty blocks.
std::vector<std::vector<ElementSet>> set_partitions(ElementSet set);

}  // namespace pmetric
