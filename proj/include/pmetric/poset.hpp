#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pmetric/element_set.hpp"

namespace pmetric {

/// Permutation of [n]; entry i-1 holds the image of i.
using Permutation = std::vector<int>;

Permutation identity_permutation(int n);
Permutation inverse_permutation(const Permutation& sigma);
/// (a∘b)(i) = a(b(i))
Permutation compose(const Permutation& a, const Permutation& b);

/// Heights, levels and type vector of a poset.
struct LevelStructure {
    std::vector<int> heights;        // heights[i-1] = h(i), starting at 1
    std::vector<ElementSet> levels;  // levels[k-1] = H_k
    std::vector<int> type_vector;    // |H_1|, ..., |H_h|
};

/// Partial order on [n], stored as its reflexive-transitive closure.
///
/// Elements are 1-based. Row masks record, for each element i, the set of
/// elements below it (the principal ideal) and the set above it.
class Poset {
public:
    /// Closes `covers` reflexively and transitively. Each pair (a, b) means a ≺ b.
    /// Throws ValidationError on out-of-range indices, self-loops or cycles.
    static Poset from_covers(int n, const std::vector<std::pair<int, int>>& covers);
    /// Builds from an explicit relation matrix (leq[i][j] means i+1 ⪯ j+1) after
    /// checking the partial-order axioms.
    static Poset from_relation(const std::vector<std::vector<bool>>& leq);

    static Poset antichain(int n);
    static Poset chain(int n);
    /// Hierarchical poset with natural labelling: H_i is the i-th consecutive block.
    static Poset hierarchical(const std::vector<int>& type_vector);
    /// Every element of blocks[i] lies strictly below every element of blocks[j] for i < j.
    static Poset from_ordered_blocks(int n, const std::vector<ElementSet>& blocks);

    int size() const { return n_; }
    bool leq(int i, int j) const { return down_[j - 1].contains(i); }
    bool less(int i, int j) const { return i != j && leq(i, j); }
    ElementSet down_set(int i) const { return down_[i - 1]; }
    ElementSet up_set(int i) const { return up_[i - 1]; }

    /// ⟨X⟩: everything below some element of X.
    ElementSet ideal_of(ElementSet x) const;
    LevelStructure level_structure() const;

    /// All strict pairs (a, b) with a ≺ b, in lexicographic order.
    std::vector<std::pair<int, int>> strict_pairs() const;
    int strict_pair_count() const;
    /// Pairs (a, b) where b covers a.
    std::vector<std::pair<int, int>> cover_pairs() const;

    /// Restriction to `subset`, relabelled 1..|subset| in increasing order.
    Poset induced(ElementSet subset) const;

    bool operator==(const Poset& other) const { return n_ == other.n_ && down_ == other.down_; }

private:
    explicit Poset(int n) : n_(n), down_(static_cast<std::size_t>(n)), up_(static_cast<std::size_t>(n)) {}
    void rebuild_up_sets();

    int n_;
    std::vector<ElementSet> down_;
    std::vector<ElementSet> up_;
};

/// P ≤ Q: every strict pair of P is a strict pair of Q.
bool is_finer(const Poset& p, const Poset& q);

/// Which levels relate hierarchically to everything beneath them.
struct HierarchyFlags {
    std::vector<bool> per_level;    // per_level[k-1] for level H_k
    std::vector<int> hierarchical;  // H(P), ascending, always contains 1
};

/// Level k is flagged when every element of H_k dominates every element of
/// H_1 ∪ … ∪ H_{k-1}. Level 1 is always flagged.
HierarchyFlags hierarchy_flags(const Poset& p);
/// Adjacent-level variant: level k is flagged when H_k dominates H_{k-1} only.
/// Kept for comparison; it over-reports on posets with maximal elements below
/// the top level.
HierarchyFlags adjacent_level_flags(const Poset& p);
bool is_hierarchical(const Poset& p);

/// All automorphisms, lexicographically ordered. Requires n ≤ 10.
std::vector<Permutation> automorphisms(const Poset& p);
/// An isomorphism σ with i ⪯_P j ⟺ σ(i) ⪯_Q σ(j), if one exists. Requires n ≤ 10.
std::optional<Permutation> find_isomorphism(const Poset& p, const Poset& q);

/// Every labelled poset on [n] (n ≤ 5).
std::vector<Poset> all_posets(int n);
/// Every hierarchical poset on [n], one per ordered set partition (n ≤ 7).
std::vector<Poset> all_hierarchical_posets(int n);

/// Hasse diagram in DOT, drawn bottom-up with one rank per level.
std::string to_dot(const Poset& p, const std::string& name = "P");

}  // namespace pmetric
