#pragma once
// Brute-force reference implementations used by the tests. They work on plain
// vectors and boolean matrices so they share no code with the library.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "pmetric/code.hpp"
#include "pmetric/field.hpp"
#include "pmetric/poset.hpp"

namespace oracle {

using Vec = std::vector<int>;
using Rel = std::vector<std::vector<bool>>;  // rel[i][j]: i+1 ⪯ j+1

inline pmetric::FieldVector fv(std::uint32_t q, const std::vector<std::int64_t>& entries) {
    return pmetric::FieldVector(pmetric::PrimeField(q), entries);
}

inline pmetric::LinearCode code(std::uint32_t q, const std::vector<std::vector<std::int64_t>>& rows) {
    std::vector<pmetric::FieldVector> gens;
    for (const auto& r : rows) gens.push_back(fv(q, r));
    return pmetric::LinearCode::from_generators(pmetric::PrimeField(q), static_cast<int>(rows.front().size()), gens);
}

inline Vec to_vec(const pmetric::FieldVector& x) { return Vec(x.entries().begin(), x.entries().end()); }

/// Reflexive-transitive closure by Warshall's algorithm.
inline Rel warshall(int n, const std::vector<std::pair<int, int>>& covers) {
    Rel r(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) r[i][i] = true;
    for (auto [a, b] : covers) r[a - 1][b - 1] = true;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (r[i][k] && r[k][j]) r[i][j] = true;
    return r;
}

inline Rel relation_of(const pmetric::Poset& p) {
    const int n = p.size();
    Rel r(n, std::vector<bool>(n, false));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) r[i - 1][j - 1] = p.leq(i, j);
    return r;
}

/// Pair inclusion of strict relations.
inline bool finer(const Rel& p, const Rel& q) {
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j)
            if (i != j && p[i][j] && !q[i][j]) return false;
    return true;
}

/// |{j : j ⪯ i for some i in supp x}|
inline int ideal_weight(const Rel& r, const Vec& x) {
    const int n = static_cast<int>(x.size());
    int w = 0;
    for (int j = 0; j < n; ++j) {
        bool below = false;
        for (int i = 0; i < n && !below; ++i) below = x[i] != 0 && r[j][i];
        w += below;
    }
    return w;
}

/// Weight on a hierarchical poset with consecutive levels of the given sizes:
/// |supp(x) ∩ H_m| + n_1 + ... + n_{m-1}, m the top level touched by x.
inline int hierarchical_weight(const std::vector<int>& type, const Vec& x) {
    int start = 0, below = 0, best = 0;
    for (int size : type) {
        int hits = 0;
        for (int i = start; i < start + size; ++i) hits += x[i] != 0;
        if (hits > 0) best = below + hits;
        below += size;
        start += size;
    }
    return best;
}

/// Longest chain ending at each element, by repeated relaxation.
inline Vec heights(const Rel& r) {
    const int n = static_cast<int>(r.size());
    Vec h(n, 1);
    for (int round = 0; round < n; ++round)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j && r[j][i]) h[i] = std::max(h[i], h[j] + 1);
    return h;
}

/// Every vector of GF(q)^n in lexicographic order.
inline std::vector<Vec> space(int q, int n) {
    std::vector<Vec> out;
    Vec x(n, 0);
    while (true) {
        out.push_back(x);
        int i = n - 1;
        while (i >= 0 && x[i] == q - 1) x[i--] = 0;
        if (i < 0) break;
        ++x[i];
    }
    return out;
}

inline std::vector<Vec> permutations(int n) {
    Vec p(n);
    for (int i = 0; i < n; ++i) p[i] = i + 1;
    std::vector<Vec> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

/// Automorphisms by filtering all n! permutations.
inline std::vector<Vec> automorphisms(const Rel& r) {
    std::vector<Vec> out;
    const int n = static_cast<int>(r.size());
    for (const auto& s : permutations(n)) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j) ok = r[i][j] == r[s[i] - 1][s[j] - 1];
        if (ok) out.push_back(s);
    }
    return out;
}

/// Hierarchical relation from ordered blocks of 0-based elements.
inline Rel from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
    Rel r(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) r[i][i] = true;
    for (std::size_t a = 0; a < blocks.size(); ++a)
        for (std::size_t b = a + 1; b < blocks.size(); ++b)
            for (int x : blocks[a])
                for (int y : blocks[b]) r[x][y] = true;
    return r;
}

/// Every hierarchical poset on n elements: one per ordered set partition,
/// built by assigning each element a level index and keeping surjective labellings.
inline std::vector<Rel> hierarchical_relations(int n) {
    std::set<Rel> seen;
    for (int levels = 1; levels <= n; ++levels) {
        Vec label(n, 0);
        while (true) {
            std::vector<std::vector<int>> blocks(levels);
            for (int i = 0; i < n; ++i) blocks[label[i]].push_back(i);
            if (std::all_of(blocks.begin(), blocks.end(), [](const auto& b) { return !b.empty(); }))
                seen.insert(from_blocks(n, blocks));
            int i = n - 1;
            while (i >= 0 && label[i] == levels - 1) label[i--] = 0;
            if (i < 0) break;
            ++label[i];
        }
    }
    return {seen.begin(), seen.end()};
}

// ---- linear algebra on plain vectors ------------------------------------

inline Vec add(const Vec& a, const Vec& b, int q) {
    Vec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = (a[i] + b[i]) % q;
    return c;
}

inline Vec sub(const Vec& a, const Vec& b, int q) {
    Vec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = ((a[i] - b[i]) % q + q) % q;
    return c;
}

/// y = M x with M given as rows.
inline Vec apply(const std::vector<Vec>& m, const Vec& x, int q) {
    Vec y(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        long s = 0;
        for (std::size_t j = 0; j < x.size(); ++j) s += static_cast<long>(m[i][j]) * x[j];
        y[i] = static_cast<int>(s % q);
    }
    return y;
}

/// All codewords as the set of linear combinations of the rows.
inline std::set<Vec> span(const std::vector<Vec>& rows, int q, int n) {
    std::set<Vec> words{Vec(n, 0)};
    for (const auto& r : rows) {
        std::set<Vec> next;
        for (const auto& w : words) {
            Vec cur = w;
            for (int c = 0; c < q; ++c) {
                next.insert(cur);
                cur = add(cur, r, q);
            }
        }
        words = std::move(next);
    }
    return words;
}

inline std::set<Vec> words_of(const pmetric::LinearCode& c) {
    std::vector<Vec> rows;
    for (const auto& r : c.generator_rows()) rows.push_back(to_vec(r));
    return span(rows, static_cast<int>(c.field().q()), c.length());
}

/// Linear isometries of (GF(q)^n, d_P) found by scanning all n×n matrices and
/// keeping the bijective, weight-preserving ones. Only for tiny q^(n·n).
inline std::vector<std::vector<Vec>> isometries(const Rel& r, int q) {
    const int n = static_cast<int>(r.size());
    const auto all = space(q, n);
    std::vector<int> weight(all.size());
    for (std::size_t i = 0; i < all.size(); ++i) weight[i] = ideal_weight(r, all[i]);
    std::vector<std::vector<Vec>> out;
    for (const auto& flat : space(q, n * n)) {
        std::vector<Vec> m(n, Vec(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m[i][j] = flat[i * n + j];
        std::set<Vec> image;
        bool ok = true;
        for (std::size_t i = 0; i < all.size() && ok; ++i) {
            const Vec y = apply(m, all[i], q);
            ok = ideal_weight(r, y) == weight[i];
            image.insert(y);
        }
        if (ok && image.size() == all.size()) out.push_back(m);
    }
    return out;
}

// ---- decompositions -------------------------------------------------------

/// Number of codewords supported inside `block` (a q-power: q^dim of the subcode).
inline std::size_t count_inside(const std::set<Vec>& words, const std::vector<int>& block) {
    std::size_t count = 0;
    for (const auto& w : words) {
        bool inside = true;
        for (std::size_t i = 0; i < w.size() && inside; ++i)
            inside = w[i] == 0 || std::find(block.begin(), block.end(), static_cast<int>(i) + 1) != block.end();
        count += inside;
    }
    return count;
}

inline void set_partitions_rec(const std::vector<int>& items, std::size_t k, std::vector<std::vector<int>>& cur,
                               std::vector<std::vector<std::vector<int>>>& out) {
    if (k == items.size()) {
        out.push_back(cur);
        return;
    }
    for (std::size_t b = 0; b < cur.size(); ++b) {
        cur[b].push_back(items[k]);
        set_partitions_rec(items, k + 1, cur, out);
        cur[b].pop_back();
    }
    cur.push_back({items[k]});
    set_partitions_rec(items, k + 1, cur, out);
    cur.pop_back();
}

inline std::vector<std::vector<std::vector<int>>> set_partitions(const std::vector<int>& items) {
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<std::vector<int>> cur;
    set_partitions_rec(items, 0, cur, out);
    return out;
}

/// Finest partition of supp(C) whose blocks split C as a direct sum: the
/// product of the subcode sizes over the blocks must equal |C|.
inline std::vector<std::vector<int>> finest_decomposition(const std::set<Vec>& words, int n) {
    std::vector<int> supp;
    for (int i = 0; i < n; ++i)
        if (std::any_of(words.begin(), words.end(), [&](const Vec& w) { return w[i] != 0; })) supp.push_back(i + 1);
    std::vector<std::vector<int>> best;
    for (auto& part : set_partitions(supp)) {
        std::size_t product = 1;
        for (const auto& b : part) product *= count_inside(words, b);
        if (product == words.size() && part.size() > best.size()) best = part;
    }
    for (auto& b : best) std::sort(b.begin(), b.end());
    std::sort(best.begin(), best.end());
    return best;
}

// ---- pointed partitions ---------------------------------------------------

/// Pointed partition as (J0, sorted parts), each a sorted element list.
using Pointed = std::pair<std::vector<int>, std::vector<std::vector<int>>>;

inline Pointed normalize(Pointed p) {
    std::sort(p.first.begin(), p.first.end());
    for (auto& b : p.second) std::sort(b.begin(), b.end());
    std::sort(p.second.begin(), p.second.end());
    return p;
}

/// All splits and proper aggregates of one part.
inline std::vector<Pointed> moves(const Pointed& p) {
    std::vector<Pointed> out;
    for (std::size_t l = 0; l < p.second.size(); ++l) {
        const auto& part = p.second[l];
        const std::size_t m = part.size();
        for (std::uint32_t mask = 1; mask + 1 < (1u << m); ++mask) {
            std::vector<int> a, rest;
            for (std::size_t i = 0; i < m; ++i) ((mask >> i) & 1 ? a : rest).push_back(part[i]);
            Pointed split = p;
            split.second[l] = rest;
            split.second.push_back(a);
            out.push_back(normalize(split));
            Pointed agg = p;
            agg.second[l] = rest;
            agg.first.insert(agg.first.end(), a.begin(), a.end());
            out.push_back(normalize(agg));
        }
    }
    return out;
}

/// Everything reachable from `start` (including itself).
inline std::set<Pointed> reachable(const Pointed& start) {
    std::set<Pointed> seen{normalize(start)};
    std::deque<Pointed> queue{normalize(start)};
    while (!queue.empty()) {
        const Pointed cur = queue.front();
        queue.pop_front();
        for (auto& next : moves(cur))
            if (seen.insert(next).second) queue.push_back(next);
    }
    return seen;
}

// ---- decoding ---------------------------------------------------------------

/// Least d_P distance from y to the code.
inline int nearest_distance(const Rel& r, const std::set<Vec>& words, const Vec& y, int q) {
    int best = static_cast<int>(y.size()) + 1;
    for (const auto& w : words) best = std::min(best, ideal_weight(r, sub(y, w, q)));
    return best;
}

}  // namespace oracle
