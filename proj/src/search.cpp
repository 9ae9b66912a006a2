#include "pmetric/search.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pmetric/error.hpp"

namespace pmetric {

Orbit orbit_of(const LinearCode& code, const Poset& p, const SearchBudget& budget) {
    if (code.length() != p.size()) throw ValidationError("code length does not match poset size");
    const IsometryGroup group(p, code.field());
    Orbit orbit;
    std::set<LinearCode> seen;
    const std::uint64_t end = std::min(group.size(), budget.group);
    orbit.complete = end == group.size();
    for (std::uint64_t idx = 0; idx < end; ++idx) {
        LinearCode image = group.at(idx).apply_code(code);
        if (seen.contains(image)) continue;
        if (seen.size() >= budget.orbit) {
            orbit.complete = false;
            break;
        }
        seen.insert(image);
        orbit.codes.push_back(std::move(image));
        orbit.first_index.push_back(idx);
    }
    return orbit;
}

PDecomposition primary_decomposition(const LinearCode& code, const Poset& p, const SearchBudget& budget) {
    const Orbit orbit = orbit_of(code, p, budget);
    std::size_t best = 0;
    Complexity best_value = min_complexity_over_groupings(orbit.codes.front());
    for (std::size_t i = 1; i < orbit.codes.size(); ++i) {
        const Complexity value = min_complexity_over_groupings(orbit.codes[i]);
        if (value < best_value || (value == best_value && orbit.codes[i] < orbit.codes[best])) {
            best = i;
            best_value = value;
        }
    }
    const IsometryGroup group(p, code.field());
    Decomposition dec = min_complexity_grouping(orbit.codes[best]);
    Complexity complexity = complexity_of(dec);
    return PDecomposition{group.at(orbit.first_index[best]), orbit.first_index[best], std::move(dec),
                          std::move(complexity), orbit.complete};
}

Complexity minimal_complexity(const LinearCode& code, const Poset& p, const SearchBudget& budget) {
    auto pd = primary_decomposition(code, p, budget);
    if (!pd.proven_minimal) throw ResourceError("orbit scan exceeded its budget; minimum not proven");
    return pd.complexity;
}

bool is_p_irreducible(const LinearCode& component, const Poset& p, const SearchBudget& budget) {
    const ElementSet s = component.support();
    const int m = s.size();
    const LinearCode local = project(component, s);
    const Orbit orbit = orbit_of(local, p.induced(s), budget);
    if (!orbit.complete) throw ResourceError("component orbit exceeded its budget");
    for (const auto& d : orbit.codes) {
        if (d.support().size() < m) return false;
        if (maximal_decomposition(d).components().size() > 1) return false;
    }
    return true;
}

ProfileUniquenessReport verify_profile_uniqueness(const LinearCode& code, const Poset& p, const SearchBudget& budget) {
    const Orbit orbit = orbit_of(code, p, budget);
    if (!orbit.complete) throw ResourceError("orbit exceeded its budget; profile uniqueness not checked");
    ProfileUniquenessReport report;
    report.orbit_size = orbit.codes.size();
    std::map<LinearCode, bool> irreducible;  // components recur across the orbit
    std::optional<LinearCode> first_code;
    for (const auto& c : orbit.codes) {
        const auto dec = maximal_decomposition(c);
        bool maximal = true;
        for (const auto& comp : dec.components()) {
            auto it = irreducible.find(comp);
            if (it == irreducible.end()) it = irreducible.emplace(comp, is_p_irreducible(comp, p, budget)).first;
            if (!it->second) {
                maximal = false;
                break;
            }
        }
        if (!maximal) continue;
        ++report.maximal_count;
        const Profile prof = profile_of(dec);
        if (!report.common_profile) {
            report.common_profile = prof;
            first_code = c;
        } else if (!(prof == *report.common_profile) && !report.counterexample) {
            report.counterexample = std::make_pair(*first_code, c);
        }
    }
    return report;
}

FieldVector permute_coordinates(const FieldVector& x, const Permutation& tau) {
    FieldVector y(x.field(), x.size());
    for (std::size_t i = 0; i < tau.size(); ++i) y.set(i, x[static_cast<std::size_t>(tau[i] - 1)]);
    return y;
}

PDecomposition strip_permutation(const PDecomposition& pd) {
    const Permutation back = inverse_permutation(pd.witness.sigma());
    if (back == identity_permutation(pd.witness.size())) return pd;
    auto move_code = [&](const LinearCode& c) {
        std::vector<FieldVector> rows;
        for (const auto& r : c.generator_rows()) rows.push_back(permute_coordinates(r, back));
        return LinearCode::from_generators(c.field(), c.length(), rows);
    };
    std::vector<LinearCode> comps;
    for (const auto& c : pd.dec.components()) comps.push_back(move_code(c));
    Decomposition dec(move_code(pd.dec.code()), std::move(comps));
    Complexity complexity = complexity_of(dec);
    return PDecomposition{strip_to_triangular(pd.witness), pd.witness_index, std::move(dec), std::move(complexity),
                          pd.proven_minimal};
}

bool is_decomposition_for(const PDecomposition& pd, const LinearCode& code, const Poset& q) {
    try {
        const PIsometry t(q, pd.witness.sigma(), pd.witness.triangular());
        return t.apply_code(code) == pd.dec.code();
    } catch (const ValidationError&) {
        return false;
    }
}

Poset upper_neighbour(const Poset& p) {
    return Poset::from_ordered_blocks(p.size(), p.level_structure().levels);
}

Poset lower_neighbour(const Poset& p) {
    const auto levels = p.level_structure().levels;
    const auto marks = hierarchy_flags(p).hierarchical;
    std::vector<ElementSet> blocks;
    for (std::size_t b = 0; b < marks.size(); ++b) {
        const auto first = static_cast<std::size_t>(marks[b] - 1);
        const std::size_t last = b + 1 < marks.size() ? static_cast<std::size_t>(marks[b + 1] - 1) : levels.size();
        ElementSet block;
        for (std::size_t s = first; s < last; ++s) block |= levels[s];
        blocks.push_back(block);
    }
    return Poset::from_ordered_blocks(p.size(), blocks);
}

BoundsReport hierarchy_bounds(const LinearCode& code, const Poset& p, const SearchBudget& budget) {
    const Poset upper = upper_neighbour(p);
    const Poset lower = lower_neighbour(p);
    const Complexity o_upper = minimal_complexity(code, upper, budget);
    const Complexity o_lower = minimal_complexity(code, lower, budget);
    std::optional<Complexity> o_p;
    const auto pd = primary_decomposition(code, p, budget);
    if (pd.proven_minimal) o_p = pd.complexity;
    return BoundsReport{upper, lower, o_upper, o_p, o_lower};
}

MonotonicityResult monotonicity_check(const LinearCode& code, const Poset& p, const Poset& q,
                                      const SearchBudget& budget) {
    if (!is_finer(p, q)) throw ValidationError("monotonicity needs P <= Q");
    return MonotonicityResult{minimal_complexity(code, p, budget), minimal_complexity(code, q, budget)};
}

std::optional<RefinementWitness> witness_refinement(const Poset& p, const Poset& q, PrimeField field,
                                                    std::size_t max_codes, const SearchBudget& budget) {
    if (!is_finer(p, q) || p == q) throw ValidationError("refinement witness needs P strictly finer than Q");
    const auto codes = all_codes(field, p.size());
    const std::size_t limit = std::min(max_codes, codes.size());
    for (std::size_t i = 0; i < limit; ++i) {
        const auto pd_p = primary_decomposition(codes[i], p, budget);
        const auto pd_q = primary_decomposition(codes[i], q, budget);
        if (!pd_p.proven_minimal || !pd_q.proven_minimal) continue;
        const bool lower = pd_q.complexity < pd_p.complexity;
        const auto part_p = pd_p.dec.support_partition();
        const auto part_q = pd_q.dec.support_partition();
        const bool finer = pd_q.complexity == pd_p.complexity && !(part_q == part_p) && is_refinement(part_q, part_p);
        if (lower || finer) return RefinementWitness{codes[i], pd_p.complexity, pd_q.complexity, lower, finer};
    }
    return std::nullopt;
}

}  // namespace pmetric
