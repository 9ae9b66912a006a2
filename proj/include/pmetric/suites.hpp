#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "pmetric/code.hpp"
#include "pmetric/poset.hpp"
#include "pmetric/search.hpp"

namespace pmetric {

/// Random poset on [n]: each pair of a random linear order is related with
/// probability `density`, then closed.
Poset random_poset(int n, std::mt19937_64& rng, double density = 0.4);
/// Random Q ≥ P, obtained by adding forward pairs of a random linear extension of P.
Poset random_coarser_poset(const Poset& p, std::mt19937_64& rng, double density = 0.3);
/// Random nonzero code of length n with at most `max_dim` generator rows.
LinearCode random_code(PrimeField field, int n, std::mt19937_64& rng, int max_dim = -1);

struct SuiteConfig {
    int n = 4;
    std::uint32_t q = 2;
    int samples = 50;
    std::uint64_t seed = 1;
    SearchBudget budget;
};

struct SuiteReport {
    std::string name;
    std::size_t instances = 0;
    std::vector<std::string> failures;  // counterexample dumps
    nlohmann::json details = nlohmann::json::object();
    bool passed() const { return failures.empty(); }
    nlohmann::json to_json(const SuiteConfig& config) const;
};

/// Metric axioms on random posets over all triples of GF(q)^n, plus the
/// Hamming, chain and hierarchical closed forms.
SuiteReport run_metric_suite(const SuiteConfig& config);
/// is_refinement against breadth-first reachability over 1-step moves, for all pointed partitions of [n].
SuiteReport run_partition_suite(const SuiteConfig& config);
/// Profile uniqueness of maximal P-decompositions on random (C, P).
SuiteReport run_profile_suite(const SuiteConfig& config);
/// O_Q(C) ≤ O_P(C) on random triples with P ≤ Q.
SuiteReport run_monotone_suite(const SuiteConfig& config);
/// P⁻ ≤ P ≤ P⁺ and O_{P⁺} ≤ O_P ≤ O_{P⁻} on random (C, P).
SuiteReport run_bounds_suite(const SuiteConfig& config);
/// Searches a code whose primary decomposition improves from P to Q.
SuiteReport run_refinement_witness_suite(const Poset& p, const Poset& q, const SuiteConfig& config);

/// Names accepted by the CLI verify command.
const std::vector<std::string>& suite_names();

}  // namespace pmetric
