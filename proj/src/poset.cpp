#include "pmetric/poset.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "pmetric/error.hpp"

namespace pmetric {

Permutation identity_permutation(int n) {
    Permutation p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    return p;
}

Permutation inverse_permutation(const Permutation& sigma) {
    Permutation inv(sigma.size());
    for (std::size_t i = 0; i < sigma.size(); ++i) inv[static_cast<std::size_t>(sigma[i] - 1)] = static_cast<int>(i) + 1;
    return inv;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    Permutation out(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[static_cast<std::size_t>(b[i] - 1)];
    return out;
}

namespace {

void check_size(int n) {
    if (n < 1 || n > kMaxElements)
        throw ValidationError("poset size " + std::to_string(n) + " outside [1, " + std::to_string(kMaxElements) + "]");
}

}  // namespace

void Poset::rebuild_up_sets() {
    for (auto& u : up_) u = ElementSet{};
    for (int j = 1; j <= n_; ++j)
        for (int i : down_[j - 1].elements()) up_[i - 1].insert(j);
}

Poset Poset::from_covers(int n, const std::vector<std::pair<int, int>>& covers) {
    check_size(n);
    Poset p(n);
    for (int i = 1; i <= n; ++i) p.down_[i - 1].insert(i);
    for (auto [a, b] : covers) {
        if (a < 1 || a > n || b < 1 || b > n)
            throw ValidationError("cover (" + std::to_string(a) + "," + std::to_string(b) + ") out of range");
        if (a == b) throw ValidationError("cover (" + std::to_string(a) + "," + std::to_string(a) + ") is a self-loop");
        p.down_[b - 1].insert(a);
    }
    // Warshall over down-set masks: if k ⪯ j then everything below k is below j.
    for (int k = 1; k <= n; ++k)
        for (int j = 1; j <= n; ++j)
            if (p.down_[j - 1].contains(k)) p.down_[j - 1] |= p.down_[k - 1];
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (p.down_[j - 1].contains(i) && p.down_[i - 1].contains(j))
                throw ValidationError("not a partial order: cycle through " + std::to_string(i) + " and " +
                                      std::to_string(j));
    p.rebuild_up_sets();
    return p;
}

Poset Poset::from_relation(const std::vector<std::vector<bool>>& leq) {
    const int n = static_cast<int>(leq.size());
    check_size(n);
    Poset p(n);
    for (int i = 0; i < n; ++i) {
        if (leq[static_cast<std::size_t>(i)].size() != static_cast<std::size_t>(n))
            throw ValidationError("relation matrix is not square");
        for (int j = 0; j < n; ++j)
            if (leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) p.down_[static_cast<std::size_t>(j)].insert(i + 1);
    }
    for (int i = 1; i <= n; ++i) {
        if (!p.down_[i - 1].contains(i)) throw ValidationError("relation is not reflexive");
        for (int j = 1; j <= n; ++j) {
            if (i != j && p.leq(i, j) && p.leq(j, i)) throw ValidationError("relation is not antisymmetric");
            if (p.leq(i, j) && !p.down_[i - 1].is_subset_of(p.down_[j - 1]))
                throw ValidationError("relation is not transitive");
        }
    }
    p.rebuild_up_sets();
    return p;
}

Poset Poset::antichain(int n) { return from_covers(n, {}); }

Poset Poset::chain(int n) {
    std::vector<std::pair<int, int>> covers;
    for (int i = 1; i < n; ++i) covers.emplace_back(i, i + 1);
    return from_covers(n, covers);
}

Poset Poset::hierarchical(const std::vector<int>& type_vector) {
    if (type_vector.empty()) throw ValidationError("empty type vector");
    int n = 0;
    for (int size : type_vector) {
        if (size < 1) throw ValidationError("type vector entries must be positive");
        n += size;
    }
    check_size(n);
    std::vector<ElementSet> blocks;
    int next = 1;
    for (int size : type_vector) {
        ElementSet block;
        for (int k = 0; k < size; ++k) block.insert(next++);
        blocks.push_back(block);
    }
    return from_ordered_blocks(n, blocks);
}

Poset Poset::from_ordered_blocks(int n, const std::vector<ElementSet>& blocks) {
    check_size(n);
    ElementSet seen;
    for (auto b : blocks) {
        if (b.empty() || b.intersects(seen) || !b.is_subset_of(ElementSet::full(n)))
            throw ValidationError("blocks must be nonempty, disjoint subsets of [n]");
        seen |= b;
    }
    if (seen != ElementSet::full(n)) throw ValidationError("blocks do not cover [n]");
    Poset p(n);
    ElementSet below;
    for (auto b : blocks) {
        for (int j : b.elements()) {
            p.down_[j - 1] = below;
            p.down_[j - 1].insert(j);
        }
        below |= b;
    }
    p.rebuild_up_sets();
    return p;
}

ElementSet Poset::ideal_of(ElementSet x) const {
    ElementSet out;
    for (int i : x.elements()) {
        if (i > n_) throw ValidationError("element " + std::to_string(i) + " outside the poset");
        out |= down_[i - 1];
    }
    return out;
}

LevelStructure Poset::level_structure() const {
    LevelStructure ls;
    ls.heights.assign(static_cast<std::size_t>(n_), 0);
    // Down-set sizes strictly increase along ≺, so this order is a linear extension.
    std::vector<int> order(static_cast<std::size_t>(n_));
    std::iota(order.begin(), order.end(), 1);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return down_[a - 1].size() < down_[b - 1].size(); });
    int height = 0;
    for (int j : order) {
        int h = 1;
        for (int i : down_[j - 1].elements())
            if (i != j) h = std::max(h, ls.heights[static_cast<std::size_t>(i - 1)] + 1);
        ls.heights[static_cast<std::size_t>(j - 1)] = h;
        height = std::max(height, h);
    }
    ls.levels.assign(static_cast<std::size_t>(height), ElementSet{});
    for (int i = 1; i <= n_; ++i) ls.levels[static_cast<std::size_t>(ls.heights[static_cast<std::size_t>(i - 1)] - 1)].insert(i);
    for (auto level : ls.levels) ls.type_vector.push_back(level.size());
    return ls;
}

std::vector<std::pair<int, int>> Poset::strict_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 1; a <= n_; ++a)
        for (int b = 1; b <= n_; ++b)
            if (less(a, b)) out.emplace_back(a, b);
    return out;
}

int Poset::strict_pair_count() const {
    int count = 0;
    for (auto d : down_) count += d.size() - 1;
    return count;
}

std::vector<std::pair<int, int>> Poset::cover_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (auto [a, b] : strict_pairs()) {
        // b covers a unless some m sits strictly between them.
        ElementSet between = (up_[a - 1] & down_[b - 1]) - ElementSet{a, b};
        if (between.empty()) out.emplace_back(a, b);
    }
    return out;
}

Poset Poset::induced(ElementSet subset) const {
    const auto elems = subset.elements();
    const int m = static_cast<int>(elems.size());
    check_size(m);
    Poset p(m);
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < m; ++i)
            if (leq(elems[static_cast<std::size_t>(i)], elems[static_cast<std::size_t>(j)])) p.down_[static_cast<std::size_t>(j)].insert(i + 1);
    p.rebuild_up_sets();
    return p;
}

bool is_finer(const Poset& p, const Poset& q) {
    if (p.size() != q.size()) throw ValidationError("posets of different sizes cannot be compared");
    for (int j = 1; j <= p.size(); ++j)
        if (!p.down_set(j).is_subset_of(q.down_set(j))) return false;
    return true;
}

namespace {

HierarchyFlags flags_with(const Poset& p, bool cumulative) {
    const auto ls = p.level_structure();
    HierarchyFlags out;
    ElementSet below;
    for (std::size_t k = 0; k < ls.levels.size(); ++k) {
        const ElementSet required = cumulative ? below : (k == 0 ? ElementSet{} : ls.levels[k - 1]);
        bool flagged = true;
        for (int a : ls.levels[k].elements())
            if (!required.is_subset_of(p.down_set(a))) flagged = false;
        out.per_level.push_back(flagged);
        if (flagged) out.hierarchical.push_back(static_cast<int>(k) + 1);
        below |= ls.levels[k];
    }
    return out;
}

}  // namespace

HierarchyFlags hierarchy_flags(const Poset& p) { return flags_with(p, true); }
HierarchyFlags adjacent_level_flags(const Poset& p) { return flags_with(p, false); }

bool is_hierarchical(const Poset& p) {
    const auto flags = hierarchy_flags(p);
    return std::all_of(flags.per_level.begin(), flags.per_level.end(), [](bool b) { return b; });
}

namespace {

/// Backtracking search for order isomorphisms p → q, images tried in ascending order.
class IsomorphismSearch {
public:
    IsomorphismSearch(const Poset& p, const Poset& q, bool find_all)
        : p_(p), q_(q), find_all_(find_all),
          hp_(p.level_structure().heights), hq_(q.level_structure().heights),
          image_(static_cast<std::size_t>(p.size()), 0) {}

    std::vector<Permutation> run() {
        if (p_.size() != q_.size()) return {};
        extend(1, ElementSet{});
        return found_;
    }

private:
    bool extend(int i, ElementSet used) {
        const int n = p_.size();
        if (i > n) {
            found_.push_back(image_);
            return !find_all_;
        }
        for (int t = 1; t <= n; ++t) {
            if (used.contains(t) || hp_[static_cast<std::size_t>(i - 1)] != hq_[static_cast<std::size_t>(t - 1)]) continue;
            bool consistent = true;
            for (int j = 1; j < i && consistent; ++j) {
                const int u = image_[static_cast<std::size_t>(j - 1)];
                consistent = p_.leq(j, i) == q_.leq(u, t) && p_.leq(i, j) == q_.leq(t, u);
            }
            if (!consistent) continue;
            image_[static_cast<std::size_t>(i - 1)] = t;
            ElementSet next = used;
            next.insert(t);
            if (extend(i + 1, next)) return true;
        }
        return false;
    }

    const Poset& p_;
    const Poset& q_;
    bool find_all_;
    std::vector<int> hp_, hq_;
    Permutation image_;
    std::vector<Permutation> found_;
};

void check_search_size(int n) {
    if (n > 10) throw ResourceError("automorphism search limited to n <= 10 (got " + std::to_string(n) + ")");
}

}  // namespace

std::vector<Permutation> automorphisms(const Poset& p) {
    check_search_size(p.size());
    return IsomorphismSearch(p, p, true).run();
}

std::optional<Permutation> find_isomorphism(const Poset& p, const Poset& q) {
    if (p.size() != q.size()) throw ValidationError("posets of different sizes");
    check_search_size(p.size());
    auto found = IsomorphismSearch(p, q, false).run();
    if (found.empty()) return std::nullopt;
    return found.front();
}

std::vector<Poset> all_posets(int n) {
    if (n < 1 || n > 5) throw ResourceError("poset catalog limited to 1 <= n <= 5");
    std::vector<std::pair<int, int>> pairs;
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            if (a != b) pairs.emplace_back(a, b);
    std::vector<Poset> out;
    const std::uint32_t limit = std::uint32_t{1} << pairs.size();
    std::vector<std::uint32_t> down(static_cast<std::size_t>(n));
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        for (int i = 0; i < n; ++i) down[static_cast<std::size_t>(i)] = 1u << i;
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if (mask >> k & 1u) down[static_cast<std::size_t>(pairs[k].second - 1)] |= 1u << (pairs[k].first - 1);
        bool ok = true;
        for (int j = 0; j < n && ok; ++j)
            for (int i = 0; i < n && ok; ++i) {
                if (i == j || !(down[static_cast<std::size_t>(j)] >> i & 1u)) continue;
                if (down[static_cast<std::size_t>(i)] >> j & 1u) ok = false;                                   // antisymmetry
                if ((down[static_cast<std::size_t>(i)] & ~down[static_cast<std::size_t>(j)]) != 0) ok = false;  // transitivity
            }
        if (!ok) continue;
        std::vector<std::pair<int, int>> covers;
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if (mask >> k & 1u) covers.push_back(pairs[k]);
        out.push_back(Poset::from_covers(n, covers));
    }
    return out;
}

std::vector<Poset> all_hierarchical_posets(int n) {
    if (n < 1 || n > 7) throw ResourceError("hierarchical catalog limited to 1 <= n <= 7");
    std::vector<Poset> out;
    std::vector<int> block_of(static_cast<std::size_t>(n), 0);
    // Enumerate surjections [n] -> [m] for each m; each is one ordered set partition.
    for (int m = 1; m <= n; ++m) {
        std::vector<int> f(static_cast<std::size_t>(n), 0);
        while (true) {
            std::vector<ElementSet> blocks(static_cast<std::size_t>(m));
            for (int i = 0; i < n; ++i) blocks[static_cast<std::size_t>(f[static_cast<std::size_t>(i)])].insert(i + 1);
            if (std::none_of(blocks.begin(), blocks.end(), [](ElementSet b) { return b.empty(); }))
                out.push_back(Poset::from_ordered_blocks(n, blocks));
            int pos = 0;
            while (pos < n && ++f[static_cast<std::size_t>(pos)] == m) f[static_cast<std::size_t>(pos++)] = 0;
            if (pos == n) break;
        }
    }
    return out;
}

std::string to_dot(const Poset& p, const std::string& name) {
    const auto ls = p.level_structure();
    std::ostringstream os;
    os << "digraph " << name << " {\n  rankdir=BT;\n  node [shape=circle];\n";
    for (std::size_t k = 0; k < ls.levels.size(); ++k) {
        os << "  { rank=same;";
        for (int i : ls.levels[k].elements()) os << ' ' << i << ';';
        os << " }\n";
    }
    for (auto [a, b] : p.cover_pairs()) os << "  " << a << " -> " << b << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace pmetric
