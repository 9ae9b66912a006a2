#include "pmetric/partition.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "pmetric/error.hpp"

namespace pmetric {

namespace {

void sort_parts(std::vector<ElementSet>& parts) {
    std::sort(parts.begin(), parts.end(), [](ElementSet a, ElementSet b) { return a.min() < b.min(); });
}

const ElementSet& part_at(const PointedPartition& j, int l) {
    if (l < 1 || l > j.part_count())
        throw ValidationError("part index " + std::to_string(l) + " outside 1.." + std::to_string(j.part_count()));
    return j.parts()[static_cast<std::size_t>(l - 1)];
}

void check_proper(ElementSet a, ElementSet part) {
    if (a.empty()) throw ValidationError("subset must be nonempty");
    if (!a.is_subset_of(part)) throw ValidationError(a.to_string() + " is not contained in part " + part.to_string());
    if (a == part) throw ValidationError(a.to_string() + " is the whole part; a proper subset is required");
}

}  // namespace

PointedPartition::PointedPartition(int n, ElementSet j0, std::vector<ElementSet> parts)
    : n_(n), j0_(j0), parts_(std::move(parts)) {
    if (n < 0 || n > kMaxElements) throw ValidationError("partition ground set size out of range");
    ElementSet seen = j0_;
    for (auto p : parts_) {
        if (p.empty()) throw ValidationError("non-distinguished parts must be nonempty");
        if (p.intersects(seen)) throw ValidationError("parts are not pairwise disjoint");
        seen |= p;
    }
    if (seen != ElementSet::full(n)) throw ValidationError("parts do not form a partition of [n]");
    sort_parts(parts_);
}

std::string PointedPartition::to_string() const {
    std::ostringstream os;
    os << '(' << j0_.to_string() << ';';
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i].to_string();
    os << ')';
    return os.str();
}

PointedPartition l_split(const PointedPartition& j, int l, ElementSet a) {
    const ElementSet part = part_at(j, l);
    check_proper(a, part);
    auto parts = j.parts();
    parts[static_cast<std::size_t>(l - 1)] = a;
    parts.push_back(part - a);
    return PointedPartition(j.ground_size(), j.j0(), std::move(parts));
}

PointedPartition l_aggregate(const PointedPartition& j, int l, ElementSet a) {
    const ElementSet part = part_at(j, l);
    check_proper(a, part);
    auto parts = j.parts();
    parts[static_cast<std::size_t>(l - 1)] = part - a;
    return PointedPartition(j.ground_size(), j.j0() | a, std::move(parts));
}

bool is_refinement(const PointedPartition& finer, const PointedPartition& coarser) {
    if (finer.ground_size() != coarser.ground_size()) throw ValidationError("partitions of different ground sets");
    if (!coarser.j0().is_subset_of(finer.j0())) return false;
    for (auto part : finer.parts())
        if (std::none_of(coarser.parts().begin(), coarser.parts().end(),
                         [&](ElementSet big) { return part.is_subset_of(big); }))
            return false;
    for (auto big : coarser.parts())
        if (std::none_of(finer.parts().begin(), finer.parts().end(),
                         [&](ElementSet part) { return part.is_subset_of(big); }))
            return false;
    return true;
}

std::vector<PointedPartition> one_step_successors(const PointedPartition& j, bool allow_full_aggregate) {
    if (j.ground_size() > 8) throw ResourceError("successor enumeration limited to n <= 8");
    std::set<PointedPartition> out;
    for (int l = 1; l <= j.part_count(); ++l) {
        const ElementSet part = j.parts()[static_cast<std::size_t>(l - 1)];
        for_each_subset(part, [&](ElementSet a) {
            if (a.empty()) return;
            if (a == part) {
                if (allow_full_aggregate) {
                    auto parts = j.parts();
                    parts.erase(parts.begin() + (l - 1));
                    out.insert(PointedPartition(j.ground_size(), j.j0() | a, std::move(parts)));
                }
                return;
            }
            out.insert(l_split(j, l, a));
            out.insert(l_aggregate(j, l, a));
        });
    }
    return {out.begin(), out.end()};
}

std::vector<std::vector<ElementSet>> set_partitions(ElementSet set) {
    if (set.empty()) return {{}};
    // The least element goes with some subset of the rest; recurse on what remains.
    const int first = set.min();
    const ElementSet rest = set - ElementSet{first};
    std::vector<std::vector<ElementSet>> out;
    for_each_subset(rest, [&](ElementSet companions) {
        ElementSet block = companions;
        block.insert(first);
        for (auto tail : set_partitions(rest - companions)) {
            tail.insert(tail.begin(), block);
            out.push_back(std::move(tail));
        }
    });
    return out;
}

std::vector<PointedPartition> all_pointed_partitions(int n) {
    if (n < 0 || n > 8) throw ResourceError("pointed partition catalog limited to n <= 8");
    std::vector<PointedPartition> out;
    const ElementSet ground = ElementSet::full(n);
    for_each_subset(ground, [&](ElementSet j0) {
        for (auto& parts : set_partitions(ground - j0)) out.emplace_back(n, j0, parts);
    });
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace pmetric
