#include "pmetric/suites.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "pmetric/decomposition.hpp"
#include "pmetric/error.hpp"
#include "pmetric/io.hpp"
#include "pmetric/metric.hpp"
#include "pmetric/partition.hpp"

namespace pmetric {

using nlohmann::json;

Poset random_poset(int n, std::mt19937_64& rng, double density) {
    std::vector<int> order = identity_permutation(n);
    std::shuffle(order.begin(), order.end(), rng);
    std::bernoulli_distribution coin(density);
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) covers.emplace_back(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
    return Poset::from_covers(n, covers);
}

Poset random_coarser_poset(const Poset& p, std::mt19937_64& rng, double density) {
    const int n = p.size();
    // Random linear extension: repeatedly take a random element with nothing left below it.
    std::vector<int> order;
    ElementSet placed;
    while (static_cast<int>(order.size()) < n) {
        std::vector<int> ready;
        for (int i = 1; i <= n; ++i)
            if (!placed.contains(i) && (p.down_set(i) - ElementSet{i}).is_subset_of(placed)) ready.push_back(i);
        std::uniform_int_distribution<std::size_t> pick(0, ready.size() - 1);
        const int next = ready[pick(rng)];
        order.push_back(next);
        placed.insert(next);
    }
    auto covers = p.strict_pairs();
    std::bernoulli_distribution coin(density);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) covers.emplace_back(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
    return Poset::from_covers(n, covers);
}

LinearCode random_code(PrimeField field, int n, std::mt19937_64& rng, int max_dim) {
    if (max_dim < 1) max_dim = n;
    std::uniform_int_distribution<int> dim(1, max_dim);
    std::uniform_int_distribution<Residue> digit(0, field.q() - 1);
    while (true) {
        std::vector<FieldVector> rows;
        const int k = dim(rng);
        for (int r = 0; r < k; ++r) {
            FieldVector v(field, static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) v.set(static_cast<std::size_t>(i), digit(rng));
            rows.push_back(v);
        }
        bool nonzero = std::any_of(rows.begin(), rows.end(), [](const FieldVector& v) { return !v.is_zero(); });
        if (nonzero) return LinearCode::from_generators(field, n, rows);
    }
}

json SuiteReport::to_json(const SuiteConfig& config) const {
    return json{{"suite", name},
                {"passed", passed()},
                {"instances", instances},
                {"failures", failures},
                {"details", details},
                {"config", {{"n", config.n},
                            {"q", config.q},
                            {"samples", config.samples},
                            {"seed", config.seed},
                            {"group_budget", config.budget.group},
                            {"orbit_budget", config.budget.orbit}}}};
}

namespace {

std::vector<FieldVector> all_vectors(PrimeField field, int n) {
    const std::uint64_t count = saturating_power(field.q(), n);
    if (count > (std::uint64_t{1} << 12)) throw ResourceError("vector space too large for an exhaustive suite");
    std::vector<FieldVector> out;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        FieldVector v(field, static_cast<std::size_t>(n));
        std::uint64_t rest = idx;
        for (int i = n; i-- > 0;) {
            v.set(static_cast<std::size_t>(i), static_cast<Residue>(rest % field.q()));
            rest /= field.q();
        }
        out.push_back(v);
    }
    return out;
}

int hamming_weight(const FieldVector& x) {
    int w = 0;
    for (std::size_t i = 0; i < x.size(); ++i) w += x[i] != 0;
    return w;
}

int max_index_weight(const FieldVector& x) {
    int w = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0) w = static_cast<int>(i) + 1;
    return w;
}

/// |supp(x) ∩ H_m| + n_1 + ... + n_{m-1} for the top level m met by x (naturally labelled).
int hierarchical_formula_weight(const std::vector<int>& type, const FieldVector& x) {
    int offset = 0, top_count = 0, below = 0, start = 0;
    for (int size : type) {
        int count = 0;
        for (int i = start; i < start + size; ++i) count += x[static_cast<std::size_t>(i)] != 0;
        if (count > 0) {
            top_count = count;
            offset = below;
        }
        below += size;
        start += size;
    }
    return top_count == 0 ? 0 : top_count + offset;
}

void compositions(int n, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(prefix);
        return;
    }
    for (int first = 1; first <= n; ++first) {
        prefix.push_back(first);
        compositions(n - first, prefix, out);
        prefix.pop_back();
    }
}

std::string describe(const Poset& p) { return io::to_json(p).dump(); }
std::string describe(const LinearCode& c) { return io::to_json(c).dump(); }

}  // namespace

SuiteReport run_metric_suite(const SuiteConfig& config) {
    SuiteReport report;
    report.name = "metric";
    const PrimeField field(config.q);
    const int n = config.n;
    std::mt19937_64 rng(config.seed);
    const auto space = all_vectors(field, n);
    auto fail = [&](const std::string& what) {
        if (report.failures.size() < 20) report.failures.push_back(what);
    };
    std::size_t posets = 0;
    for (int s = 0; s < config.samples; ++s) {
        const Poset p = random_poset(n, rng);
        ++posets;
        std::vector<int> w(space.size());
        for (std::size_t i = 0; i < space.size(); ++i) w[i] = pweight(p, space[i]);
        for (std::size_t a = 0; a < space.size(); ++a)
            for (std::size_t b = 0; b < space.size(); ++b) {
                const int dab = pdist(p, space[a], space[b]);
                if (dab != pdist(p, space[b], space[a])) fail("asymmetric on " + describe(p));
                if ((dab == 0) != (a == b)) fail("identity of indiscernibles broken on " + describe(p));
                if (dab < hamming_weight(space[a] - space[b])) fail("P-distance below Hamming on " + describe(p));
                for (std::size_t c = 0; c < space.size(); ++c)
                    if (dab > pdist(p, space[a], space[c]) + pdist(p, space[c], space[b]))
                        fail("triangle inequality broken on " + describe(p));
                ++report.instances;
            }
    }
    const Poset antichain = Poset::antichain(n), chain = Poset::chain(n);
    for (const auto& x : space) {
        if (pweight(antichain, x) != hamming_weight(x)) fail("antichain weight differs from Hamming at " + x.to_string());
        if (pweight(chain, x) != max_index_weight(x)) fail("chain weight differs from max index at " + x.to_string());
    }
    std::vector<std::vector<int>> types;
    std::vector<int> prefix;
    compositions(n, prefix, types);
    for (const auto& type : types) {
        const Poset h = Poset::hierarchical(type);
        for (const auto& x : space)
            if (pweight(h, x) != hierarchical_formula_weight(type, x))
                fail("hierarchical formula mismatch at " + x.to_string() + " on " + describe(h));
    }
    report.details = json{{"posets", posets}, {"hierarchical_types", types.size()}, {"vectors", space.size()}};
    return report;
}

SuiteReport run_partition_suite(const SuiteConfig& config) {
    SuiteReport report;
    report.name = "partition";
    const auto all = all_pointed_partitions(config.n);
    for (const auto& start : all) {
        std::set<PointedPartition> reached{start};
        std::deque<PointedPartition> frontier{start};
        while (!frontier.empty()) {
            const auto cur = frontier.front();
            frontier.pop_front();
            for (auto& next : one_step_successors(cur))
                if (reached.insert(next).second) frontier.push_back(next);
        }
        for (const auto& other : all) {
            ++report.instances;
            if (is_refinement(other, start) != reached.contains(other) && report.failures.size() < 20)
                report.failures.push_back(other.to_string() + " vs " + start.to_string());
        }
    }
    report.details = json{{"partitions", all.size()}};
    return report;
}

SuiteReport run_profile_suite(const SuiteConfig& config) {
    SuiteReport report;
    report.name = "profile";
    const PrimeField field(config.q);
    std::mt19937_64 rng(config.seed);
    std::size_t maximal = 0;
    for (int s = 0; s < config.samples; ++s) {
        const Poset p = random_poset(config.n, rng);
        const LinearCode c = random_code(field, config.n, rng);
        const auto r = verify_profile_uniqueness(c, p, config.budget);
        ++report.instances;
        maximal += r.maximal_count;
        if (!r.consistent())
            report.failures.push_back("profile mismatch for code " + describe(c) + " on poset " + describe(p) +
                                      (r.counterexample ? " between " + describe(r.counterexample->first) + " and " +
                                                              describe(r.counterexample->second)
                                                        : std::string(" (no maximal P-decomposition found)")));
    }
    report.details = json{{"maximal_decompositions_seen", maximal}};
    return report;
}

SuiteReport run_monotone_suite(const SuiteConfig& config) {
    SuiteReport report;
    report.name = "monotone";
    const PrimeField field(config.q);
    std::mt19937_64 rng(config.seed);
    std::size_t strict = 0;
    for (int s = 0; s < config.samples; ++s) {
        const Poset p = random_poset(config.n, rng, 0.3);
        const Poset q = random_coarser_poset(p, rng);
        const LinearCode c = random_code(field, config.n, rng);
        const auto r = monotonicity_check(c, p, q, config.budget);
        ++report.instances;
        if (r.o_q < r.o_p) ++strict;
        if (!r.holds())
            report.failures.push_back("O_Q > O_P for code " + describe(c) + ", P " + describe(p) + ", Q " + describe(q));
    }
    report.details = json{{"strict_improvements", strict}};
    return report;
}

SuiteReport run_bounds_suite(const SuiteConfig& config) {
    SuiteReport report;
    report.name = "bounds";
    const PrimeField field(config.q);
    std::mt19937_64 rng(config.seed);
    json instances = json::array();
    for (int s = 0; s < config.samples; ++s) {
        const Poset p = random_poset(config.n, rng);
        const LinearCode c = random_code(field, config.n, rng);
        const auto b = hierarchy_bounds(c, p, config.budget);
        ++report.instances;
        if (!is_finer(b.lower_poset, p) || !is_finer(p, b.upper_poset))
            report.failures.push_back("neighbour order broken for " + describe(p));
        if (!b.sandwich_holds())
            report.failures.push_back("sandwich broken for code " + describe(c) + " on " + describe(p));
        if (instances.size() < 10) instances.push_back(io::to_json(b));
    }
    report.details = json{{"sample_reports", instances}};
    return report;
}

SuiteReport run_refinement_witness_suite(const Poset& p, const Poset& q, const SuiteConfig& config) {
    SuiteReport report;
    report.name = "refinement-witness";
    const auto w = witness_refinement(p, q, PrimeField(config.q), 100'000, config.budget);
    report.instances = 1;
    if (!w) {
        report.failures.push_back("no witness found within the search budget (not a disproof)");
        return report;
    }
    report.details = json{{"code", io::to_json(w->code)},
                          {"o_p", io::complexity_to_json(w->o_p)},
                          {"o_q", io::complexity_to_json(w->o_q)},
                          {"lower_complexity", w->lower_complexity},
                          {"finer_partition", w->finer_partition}};
    return report;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"metric", "partition", "profile", "monotone", "bounds",
                                                "refinement-witness"};
    return names;
}

}  // namespace pmetric
