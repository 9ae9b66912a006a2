// pmetric: poset metrics, code decompositions and syndrome-decoding complexity.
//
// Exit codes: 0 ok, 1 validation error, 2 budget exceeded, 3 property violation.

#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pmetric/decoder.hpp"
#include "pmetric/error.hpp"
#include "pmetric/io.hpp"
#include "pmetric/metric.hpp"
#include "pmetric/search.hpp"
#include "pmetric/suites.hpp"

using namespace pmetric;
using nlohmann::json;

namespace {

enum ExitCode { kOk = 0, kValidation = 1, kBudget = 2, kViolation = 3 };

struct RunConfig {
    std::string format = "text";
    std::uint64_t seed = 1;
    SearchBudget budget;
    std::uint64_t coset_budget = kCosetLimit;

    json to_json() const {
        return json{{"seed", seed},
                    {"group_budget", budget.group},
                    {"orbit_budget", budget.orbit},
                    {"coset_budget", coset_budget}};
    }
};

std::uint64_t env_budget(const char* name, std::uint64_t fallback) {
    const char* value = std::getenv(name);
    if (value == nullptr || *value == '\0') return fallback;
    try {
        return std::stoull(value);
    } catch (const std::exception&) {
        throw ValidationError(std::string("bad value in ") + name);
    }
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw ValidationError("bad integer \"" + item + "\"");
        }
    }
    return out;
}

/// "chain:4", "antichain:4", "hierarchical:2,2", or a JSON file.
Poset load_poset(const std::string& source, int n = 0) {
    const auto colon = source.find(':');
    const std::string kind = source.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : source.substr(colon + 1);
    auto size = [&] {
        const int m = arg.empty() ? n : std::stoi(arg);
        if (m < 1) throw ValidationError("family " + kind + " needs a size (\"" + kind + ":4\" or --n)");
        return m;
    };
    if (kind == "chain") return Poset::chain(size());
    if (kind == "antichain") return Poset::antichain(size());
    if (kind == "hierarchical") return Poset::hierarchical(parse_int_list(arg));
    return io::poset_from_json(io::read_json_file(source));
}

std::string join(const std::vector<int>& v, const char* sep = ",") {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
    return os.str();
}

std::string to_text(const Complexity& c) { return c.str(); }

void emit(const RunConfig& cfg, json report, const std::string& text) {
    if (cfg.format == "json") {
        report["config"] = cfg.to_json();
        std::cout << report.dump(2) << '\n';
    } else {
        std::cout << text;
    }
}

// ---- poset ---------------------------------------------------------------

int poset_info(const RunConfig& cfg, const Poset& p) {
    const auto ls = p.level_structure();
    const auto flags = hierarchy_flags(p);
    json levels = json::array();
    for (auto l : ls.levels) levels.push_back(l.elements());
    json report{{"poset", io::to_json(p)},
                {"heights", ls.heights},
                {"levels", levels},
                {"type", ls.type_vector},
                {"hierarchical_levels", flags.hierarchical},
                {"hierarchical", is_hierarchical(p)}};
    std::ostringstream text;
    text << "n: " << p.size() << "\ntype: (" << join(ls.type_vector) << ")\n";
    for (std::size_t k = 0; k < ls.levels.size(); ++k) text << "H_" << k + 1 << ": " << ls.levels[k].to_string() << '\n';
    text << "H(P): {" << join(flags.hierarchical) << "}\nhierarchical: " << (is_hierarchical(p) ? "true" : "false")
         << '\n';
    emit(cfg, report, text.str());
    return kOk;
}

int poset_neighbours(const RunConfig& cfg, const Poset& p) {
    const Poset upper = upper_neighbour(p), lower = lower_neighbour(p);
    json report{{"upper", io::to_json(upper)},
                {"lower", io::to_json(lower)},
                {"upper_type", upper.level_structure().type_vector},
                {"lower_type", lower.level_structure().type_vector}};
    std::ostringstream text;
    text << "P+: type (" << join(upper.level_structure().type_vector) << ") " << io::to_json(upper).dump() << '\n'
         << "P-: type (" << join(lower.level_structure().type_vector) << ") " << io::to_json(lower).dump() << '\n';
    emit(cfg, report, text.str());
    return kOk;
}

int poset_compare(const RunConfig& cfg, const Poset& a, const Poset& b) {
    const bool ab = is_finer(a, b), ba = is_finer(b, a);
    json report{{"a_finer_than_b", ab}, {"b_finer_than_a", ba}, {"equal", a == b}};
    std::ostringstream text;
    text << "A <= B: " << (ab ? "true" : "false") << "\nB <= A: " << (ba ? "true" : "false") << '\n';
    emit(cfg, report, text.str());
    return kOk;
}

// ---- analyze -------------------------------------------------------------

void check_lengths(const Poset& p, const LinearCode& c) {
    if (p.size() != c.length())
        throw ValidationError("poset has " + std::to_string(p.size()) + " elements but the code has length " +
                              std::to_string(c.length()));
}

int analyze_weight(const RunConfig& cfg, const Poset& p, const FieldVector& x) {
    const int w = pweight(p, x);
    json report{{"x", std::vector<Residue>(x.entries().begin(), x.entries().end())},
                {"support", support(x).elements()},
                {"ideal", p.ideal_of(support(x)).elements()},
                {"weight", w}};
    emit(cfg, report, "weight: " + std::to_string(w) + "\nideal: " + p.ideal_of(support(x)).to_string() + '\n');
    return kOk;
}

int analyze_mindist(const RunConfig& cfg, const Poset& p, const LinearCode& c) {
    check_lengths(p, c);
    const int d = min_pdistance(p, c);
    emit(cfg, json{{"min_distance", d}, {"n", c.length()}, {"k", c.dimension()}},
         "delta_P: " + std::to_string(d) + '\n');
    return kOk;
}

std::string describe_decomposition(const Decomposition& dec) {
    std::ostringstream text;
    text << "profile: " << profile_of(dec).to_string() << "\ncomplexity: " << to_text(complexity_of(dec))
         << "\nj0: " << dec.j0().to_string() << '\n';
    for (std::size_t i = 0; i < dec.components().size(); ++i) {
        text << "component " << i + 1 << " on " << dec.components()[i].support().to_string() << ":";
        for (const auto& r : dec.components()[i].generator_rows()) text << ' ' << r.to_string();
        text << '\n';
    }
    return text.str();
}

int analyze_decompose(const RunConfig& cfg, const Poset& p, const LinearCode& c, bool primary) {
    check_lengths(p, c);
    if (!primary) {
        const auto dec = maximal_decomposition(c);
        emit(cfg, json{{"decomposition", io::to_json(dec)}}, describe_decomposition(dec));
        return kOk;
    }
    const auto pd = primary_decomposition(c, p, cfg.budget);
    std::ostringstream text;
    text << "O_P(C): " << to_text(pd.complexity) << (pd.proven_minimal ? "" : " (not proven minimal)") << '\n'
         << "witness sigma: (" << join(pd.witness.sigma()) << ")\nwitness A:\n";
    for (const auto& r : pd.witness.triangular().row_vectors()) text << "  " << r.to_string() << '\n';
    text << "T(C):";
    for (const auto& r : pd.dec.code().generator_rows()) text << ' ' << r.to_string();
    text << '\n' << describe_decomposition(pd.dec);
    emit(cfg, io::to_json(pd), text.str());
    return pd.proven_minimal ? kOk : kBudget;
}

int analyze_bounds(const RunConfig& cfg, const Poset& p, const LinearCode& c) {
    check_lengths(p, c);
    const auto b = hierarchy_bounds(c, p, cfg.budget);
    std::ostringstream text;
    text << "O_{P+}(C): " << to_text(b.o_upper) << "\nO_P(C): " << (b.o_p ? to_text(*b.o_p) : "unknown (budget)")
         << "\nO_{P-}(C): " << to_text(b.o_lower) << "\nsandwich: " << (b.sandwich_holds() ? "holds" : "VIOLATED")
         << '\n';
    emit(cfg, io::to_json(b), text.str());
    if (!b.sandwich_holds()) return kViolation;
    return b.o_p ? kOk : kBudget;
}

// ---- decode --------------------------------------------------------------

int run_decode(const RunConfig& cfg, const Poset& p, const LinearCode& c, const std::string& y_text,
               bool stats_only, const std::string& table_in, const std::string& table_out) {
    check_lengths(p, c);
    std::optional<SyndromeTable> table;
    if (!table_in.empty()) {
        table = io::table_from_json(io::read_json_file(table_in), p);
        if (!(table->code == c)) throw ValidationError("cached table was built for a different code");
    } else {
        const auto pd = primary_decomposition(c, p, cfg.budget);
        if (!pd.proven_minimal) std::cerr << "warning: orbit scan truncated; table may not be minimal\n";
        table = build_table(pd, c, p, cfg.coset_budget);
    }
    if (!table_out.empty()) {
        std::ofstream out(table_out);
        if (!out) throw ValidationError("cannot write " + table_out);
        out << io::to_json(*table).dump(2) << '\n';
    }
    const auto stats = table_stats(*table);
    json report{{"entries_per_component", stats.entries_per_component},
                {"total_entries", stats.total},
                {"complexity", io::complexity_to_json(stats.complexity)},
                {"matches_complexity", stats.matches_complexity()}};
    std::ostringstream text;
    text << "table entries: " << stats.total << " (complexity " << to_text(stats.complexity) << ")\n";
    if (!stats_only) {
        if (y_text.empty()) throw ValidationError("--y is required unless --stats-only is given");
        const FieldVector y = io::parse_vector(y_text, c.field());
        const auto result = decode(*table, y);
        report["codeword"] = std::vector<Residue>(result.codeword.entries().begin(), result.codeword.entries().end());
        report["flagged"] = result.flagged.elements();
        text << "codeword: " << result.codeword.to_string() << "\nflagged: " << result.flagged.to_string() << '\n';
    }
    emit(cfg, report, text.str());
    return stats.matches_complexity() ? kOk : kViolation;
}

// ---- verify --------------------------------------------------------------

int run_suite(const RunConfig& cfg, const SuiteReport& report, const SuiteConfig& sc) {
    std::ostringstream text;
    text << "suite " << report.name << ": " << (report.passed() ? "pass" : "FAIL") << " (" << report.instances
         << " instances, seed " << sc.seed << ")\n";
    for (const auto& f : report.failures) text << "  counterexample: " << f << '\n';
    if (report.name == "refinement-witness" && report.passed())
        text << "  witness: " << report.details["code"].dump() << "  O_P=" << report.details["o_p"].dump()
             << " O_Q=" << report.details["o_q"].dump() << '\n';
    emit(cfg, report.to_json(sc), text.str());
    return report.passed() ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"Poset metrics, code decompositions and syndrome-decoding complexity"};
    app.require_subcommand(1);
    cfg.budget.group = kDefaultGroupBudget;
    cfg.budget.orbit = kDefaultOrbitBudget;
    try {
        cfg.budget.group = env_budget("PMETRIC_GROUP_BUDGET", cfg.budget.group);
        cfg.budget.orbit = env_budget("PMETRIC_ORBIT_BUDGET", cfg.budget.orbit);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kValidation;
    }
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));
    app.add_option("--seed", cfg.seed, "Seed for sampled checks");
    app.add_option("--group-budget", cfg.budget.group, "Isometries scanned per orbit search")->check(CLI::PositiveNumber);
    app.add_option("--orbit-budget", cfg.budget.orbit, "Distinct orbit codes kept")->check(CLI::PositiveNumber);
    app.add_option("--coset-budget", cfg.coset_budget, "Coset leaders per decoding table component")
        ->check(CLI::PositiveNumber);

    // poset
    auto* poset_cmd = app.add_subcommand("poset", "Levels, neighbours, Hasse diagrams and comparisons");
    poset_cmd->require_subcommand(1);
    std::string poset_file, family, other_file;
    int family_n = 0;
    auto add_poset_source = [&](CLI::App* cmd) {
        cmd->add_option("poset", poset_file, "Poset JSON file or family (chain:4, hierarchical:2,2)");
        cmd->add_option("--family", family, "chain | antichain | hierarchical:<type>");
        cmd->add_option("--n", family_n, "Size for --family chain/antichain");
    };
    auto* info_cmd = poset_cmd->add_subcommand("info", "Heights, levels, type and H(P)");
    add_poset_source(info_cmd);
    auto* neigh_cmd = poset_cmd->add_subcommand("neighbours", "Upper and lower hierarchical neighbours");
    add_poset_source(neigh_cmd);
    auto* dot_cmd = poset_cmd->add_subcommand("dot", "Hasse diagram in DOT");
    add_poset_source(dot_cmd);
    auto* cmp_cmd = poset_cmd->add_subcommand("compare", "Refinement order in both directions");
    cmp_cmd->add_option("a", poset_file, "First poset")->required();
    cmp_cmd->add_option("b", other_file, "Second poset")->required();

    // analyze
    auto* analyze_cmd = app.add_subcommand("analyze", "Weights, distances, decompositions and bounds");
    analyze_cmd->require_subcommand(1);
    std::string code_file, x_text;
    std::uint32_t weight_q = 2;
    bool primary = false;
    auto* weight_cmd = analyze_cmd->add_subcommand("weight", "P-weight of a vector");
    weight_cmd->add_option("poset", poset_file)->required();
    weight_cmd->add_option("--x", x_text, "Comma-separated residues")->required();
    weight_cmd->add_option("--q", weight_q, "Field size");
    auto* mindist_cmd = analyze_cmd->add_subcommand("mindist", "Minimal P-distance of a code");
    auto* decompose_cmd = analyze_cmd->add_subcommand("decompose", "Maximal or primary decomposition");
    decompose_cmd->add_flag("--primary", primary, "Search the isometry orbit for the primary P-decomposition");
    auto* bounds_cmd = analyze_cmd->add_subcommand("bounds", "O_{P+}(C) <= O_P(C) <= O_{P-}(C)");
    for (auto* cmd : {mindist_cmd, decompose_cmd, bounds_cmd}) {
        cmd->add_option("poset", poset_file)->required();
        cmd->add_option("code", code_file)->required();
    }

    // decode
    auto* decode_cmd = app.add_subcommand("decode", "Syndrome decoding over the primary P-decomposition");
    std::string y_text, table_in, table_out;
    bool stats_only = false;
    decode_cmd->add_option("poset", poset_file)->required();
    decode_cmd->add_option("code", code_file)->required();
    decode_cmd->add_option("--y", y_text, "Received word, comma-separated");
    decode_cmd->add_flag("--stats-only", stats_only, "Only report table sizes");
    decode_cmd->add_option("--table", table_in, "Load a cached table instead of building one");
    decode_cmd->add_option("--save-table", table_out, "Write the table as JSON");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Exhaustive and sampled property suites");
    verify_cmd->require_subcommand(1);
    SuiteConfig sc;
    std::string p_file, q_file;
    std::map<std::string, CLI::App*> suites;
    for (const auto& name : suite_names()) {
        auto* cmd = verify_cmd->add_subcommand(name);
        suites[name] = cmd;
        cmd->add_option("--n", sc.n, "Ground set size");
        cmd->add_option("--samples", sc.samples, "Random instances");
        if (name == "refinement-witness") {
            cmd->add_option("--p", p_file, "Finer poset")->required();
            cmd->add_option("--q", q_file, "Coarser poset")->required();
            cmd->add_option("--field", sc.q, "Field size");
        } else {
            cmd->add_option("--q", sc.q, "Field size");
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kValidation;
    }

    try {
        auto source = [&]() { return family.empty() ? load_poset(poset_file, family_n) : load_poset(family, family_n); };
        if (poset_cmd->parsed()) {
            if (cmp_cmd->parsed()) return poset_compare(cfg, load_poset(poset_file), load_poset(other_file));
            if (poset_file.empty() && family.empty()) throw ValidationError("give a poset file or --family");
            const Poset p = source();
            if (info_cmd->parsed()) return poset_info(cfg, p);
            if (neigh_cmd->parsed()) return poset_neighbours(cfg, p);
            if (dot_cmd->parsed()) {
                std::cout << to_dot(p);
                return kOk;
            }
        }
        if (analyze_cmd->parsed()) {
            const Poset p = load_poset(poset_file);
            if (weight_cmd->parsed()) return analyze_weight(cfg, p, io::parse_vector(x_text, PrimeField(weight_q)));
            const LinearCode c = io::code_from_json(io::read_json_file(code_file));
            if (mindist_cmd->parsed()) return analyze_mindist(cfg, p, c);
            if (decompose_cmd->parsed()) return analyze_decompose(cfg, p, c, primary);
            if (bounds_cmd->parsed()) return analyze_bounds(cfg, p, c);
        }
        if (decode_cmd->parsed()) {
            const Poset p = load_poset(poset_file);
            const LinearCode c = io::code_from_json(io::read_json_file(code_file));
            return run_decode(cfg, p, c, y_text, stats_only, table_in, table_out);
        }
        if (verify_cmd->parsed()) {
            sc.seed = cfg.seed;
            sc.budget = cfg.budget;
            if (suites["metric"]->parsed()) return run_suite(cfg, run_metric_suite(sc), sc);
            if (suites["partition"]->parsed()) return run_suite(cfg, run_partition_suite(sc), sc);
            if (suites["profile"]->parsed()) return run_suite(cfg, run_profile_suite(sc), sc);
            if (suites["monotone"]->parsed()) return run_suite(cfg, run_monotone_suite(sc), sc);
            if (suites["bounds"]->parsed()) return run_suite(cfg, run_bounds_suite(sc), sc);
            if (suites["refinement-witness"]->parsed())
                return run_suite(cfg, run_refinement_witness_suite(load_poset(p_file), load_poset(q_file), sc), sc);
        }
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kValidation;
    } catch (const ResourceError& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return kBudget;
    } catch (const PropertyViolation& e) {
        std::cerr << "property violation: " << e.what() << '\n';
        return kViolation;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kValidation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kValidation;
    }
    return kOk;
}
