#include "pmetric/decomposition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "pmetric/error.hpp"

namespace pmetric {

std::string Profile::to_string() const {
    std::ostringstream os;
    os << "[(" << outside.first << ',' << outside.second << ')';
    for (auto [n, k] : components) os << ",(" << n << ',' << k << ')';
    os << ']';
    return os.str();
}

Decomposition::Decomposition(LinearCode code, std::vector<LinearCode> components)
    : code_(std::move(code)), components_(std::move(components)) {
    if (components_.empty()) throw ValidationError("a decomposition needs at least one component");
    ElementSet covered;
    int dim = 0;
    for (const auto& c : components_) {
        if (c.length() != code_.length() || !(c.field() == code_.field()))
            throw ValidationError("component lives in a different ambient space");
        const ElementSet s = c.support();
        if (s.intersects(covered)) throw ValidationError("component supports overlap");
        covered |= s;
        for (const auto& row : c.generator_rows())
            if (!code_.contains(row)) throw ValidationError("component is not a subcode");
        dim += c.dimension();
    }
    // Disjointly supported subcodes are independent, so matching dimension means the sum is all of C.
    if (dim != code_.dimension()) throw ValidationError("components do not sum to the code");
    j0_ = ElementSet::full(code_.length()) - covered;
    std::sort(components_.begin(), components_.end(),
              [](const LinearCode& a, const LinearCode& b) { return a.support().min() < b.support().min(); });
}

PointedPartition Decomposition::support_partition() const {
    std::vector<ElementSet> parts;
    for (const auto& c : components_) parts.push_back(c.support());
    return PointedPartition(code_.length(), j0_, std::move(parts));
}

Decomposition maximal_decomposition(const LinearCode& code) {
    const int n = code.length();
    std::vector<int> parent(static_cast<std::size_t>(n + 1));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    };
    const auto rows = code.generator_rows();
    std::vector<ElementSet> row_support;
    for (const auto& r : rows) {
        ElementSet s;
        for (std::size_t i = 0; i < r.size(); ++i)
            if (r[i] != 0) s.insert(static_cast<int>(i) + 1);
        row_support.push_back(s);
        const int anchor = s.min();
        for (int e : s.elements()) parent[static_cast<std::size_t>(find(e))] = find(anchor);
    }
    std::vector<std::vector<FieldVector>> groups;
    std::vector<int> group_root;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const int root = find(row_support[i].min());
        auto it = std::find(group_root.begin(), group_root.end(), root);
        if (it == group_root.end()) {
            group_root.push_back(root);
            groups.push_back({rows[i]});
        } else {
            groups[static_cast<std::size_t>(it - group_root.begin())].push_back(rows[i]);
        }
    }
    std::vector<LinearCode> components;
    for (const auto& g : groups) components.push_back(LinearCode::from_generators(code.field(), n, g));
    return Decomposition(code, std::move(components));
}

Decomposition trivial_decomposition(const LinearCode& code) { return Decomposition(code, {code}); }

Decomposition coarsen(const Decomposition& dec, const std::vector<std::vector<std::size_t>>& groups) {
    std::vector<LinearCode> merged;
    std::vector<bool> used(dec.components().size(), false);
    for (const auto& g : groups) {
        if (g.empty()) throw ValidationError("empty component group");
        std::vector<FieldVector> rows;
        for (auto idx : g) {
            if (idx >= dec.components().size() || used[idx]) throw ValidationError("invalid component grouping");
            used[idx] = true;
            for (const auto& r : dec.components()[idx].generator_rows()) rows.push_back(r);
        }
        merged.push_back(LinearCode::from_generators(dec.code().field(), dec.code().length(), rows));
    }
    if (std::find(used.begin(), used.end(), false) != used.end())
        throw ValidationError("grouping leaves components out");
    return Decomposition(dec.code(), std::move(merged));
}

Profile profile_of(const Decomposition& dec) {
    Profile p;
    p.outside = {dec.j0().size(), dec.j0().size()};
    for (const auto& c : dec.components()) p.components.emplace_back(c.support().size(), c.dimension());
    std::sort(p.components.begin(), p.components.end());
    return p;
}

namespace {

Complexity power(std::uint32_t q, int e) {
    Complexity out = 1;
    for (int i = 0; i < e; ++i) out *= q;
    return out;
}

}  // namespace

Complexity complexity_of(const Profile& profile, std::uint32_t q) {
    Complexity total = 0;
    for (auto [n, k] : profile.components) total += power(q, n - k);
    return total;
}

Complexity complexity_of(const Decomposition& dec) { return complexity_of(profile_of(dec), dec.code().field().q()); }

Complexity min_complexity_over_groupings(const LinearCode& code) {
    const auto dec = maximal_decomposition(code);
    Complexity total = 0;
    bool any_positive = false;
    for (const auto& c : dec.components()) {
        const int deficiency = c.support().size() - c.dimension();
        if (deficiency > 0) {
            total += power(code.field().q(), deficiency);
            any_positive = true;
        }
    }
    return any_positive ? total : Complexity{1};
}

Decomposition min_complexity_grouping(const LinearCode& code) {
    const auto dec = maximal_decomposition(code);
    const auto& comps = dec.components();
    std::vector<std::size_t> zero, positive;
    for (std::size_t i = 0; i < comps.size(); ++i)
        (comps[i].support().size() > comps[i].dimension() ? positive : zero).push_back(i);
    if (zero.empty()) return dec;
    std::vector<std::vector<std::size_t>> groups;
    if (positive.empty()) {
        groups.push_back(zero);
    } else {
        for (auto i : positive) groups.push_back({i});
        groups.front().insert(groups.front().end(), zero.begin(), zero.end());
    }
    return coarsen(dec, groups);
}

}  // namespace pmetric
