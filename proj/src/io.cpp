#include "pmetric/io.hpp"

#include <fstream>
#include <sstream>

#include "pmetric/error.hpp"

namespace pmetric::io {

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

namespace {

template <class T>
T field_of(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ValidationError(std::string("missing field \"") + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ValidationError(std::string("bad field \"") + key + "\": " + e.what());
    }
}

json set_to_json(ElementSet s) { return s.elements(); }

ElementSet set_from_json(const json& j) {
    try {
        return ElementSet::from_elements(j.get<std::vector<int>>());
    } catch (const json::exception& e) {
        throw ValidationError(std::string("bad element list: ") + e.what());
    }
}

json rows_to_json(const std::vector<FieldVector>& rows) {
    json out = json::array();
    for (const auto& r : rows) out.push_back(std::vector<Residue>(r.entries().begin(), r.entries().end()));
    return out;
}

std::vector<FieldVector> rows_from_json(const json& j, PrimeField field, int n) {
    std::vector<FieldVector> rows;
    std::vector<std::vector<std::int64_t>> raw;
    try {
        raw = j.get<std::vector<std::vector<std::int64_t>>>();
    } catch (const json::exception& e) {
        throw ValidationError(std::string("bad generator rows: ") + e.what());
    }
    for (const auto& r : raw) {
        if (r.size() != static_cast<std::size_t>(n)) throw ValidationError("generator row length differs from n");
        rows.emplace_back(field, r);
    }
    return rows;
}

Matrix matrix_from_json(const json& j, PrimeField field, std::size_t n) {
    const auto rows = rows_from_json(j, field, static_cast<int>(n));
    if (rows.size() != n) throw ValidationError("matrix must be square");
    return Matrix::from_rows(field, n, rows);
}

}  // namespace

Poset poset_from_json(const json& j) {
    const int n = field_of<int>(j, "n");
    const auto covers = j.contains("covers") ? field_of<std::vector<std::pair<int, int>>>(j, "covers")
                                             : std::vector<std::pair<int, int>>{};
    return Poset::from_covers(n, covers);
}

json to_json(const Poset& p) { return json{{"n", p.size()}, {"covers", p.cover_pairs()}}; }

LinearCode code_from_json(const json& j) {
    const PrimeField field(field_of<std::uint32_t>(j, "q"));
    const int n = field_of<int>(j, "n");
    if (!j.contains("generators")) throw ValidationError("missing field \"generators\"");
    return LinearCode::from_generators(field, n, rows_from_json(j.at("generators"), field, n));
}

json to_json(const LinearCode& c) {
    return json{{"q", c.field().q()}, {"n", c.length()}, {"generators", rows_to_json(c.generator_rows())}};
}

PointedPartition partition_from_json(const json& j) {
    const int n = field_of<int>(j, "n");
    const ElementSet j0 = j.contains("j0") ? set_from_json(j.at("j0")) : ElementSet{};
    std::vector<ElementSet> parts;
    if (j.contains("parts"))
        for (const auto& part : j.at("parts")) parts.push_back(set_from_json(part));
    return PointedPartition(n, j0, std::move(parts));
}

json to_json(const PointedPartition& p) {
    json parts = json::array();
    for (auto part : p.parts()) parts.push_back(set_to_json(part));
    return json{{"n", p.ground_size()}, {"j0", set_to_json(p.j0())}, {"parts", parts}};
}

json to_json(const Profile& p) {
    json out = json::array();
    out.push_back({p.outside.first, p.outside.second});
    for (auto [n, k] : p.components) out.push_back({n, k});
    return out;
}

json complexity_to_json(const Complexity& c) {
    if (c <= std::numeric_limits<std::uint64_t>::max()) return c.convert_to<std::uint64_t>();
    return c.str();
}

json to_json(const Decomposition& d) {
    json comps = json::array();
    for (const auto& c : d.components()) comps.push_back(rows_to_json(c.generator_rows()));
    return json{{"code", to_json(d.code())},
                {"j0", set_to_json(d.j0())},
                {"components", comps},
                {"profile", to_json(profile_of(d))},
                {"complexity", complexity_to_json(complexity_of(d))}};
}

Decomposition decomposition_from_json(const json& j) {
    if (!j.contains("code") || !j.contains("components")) throw ValidationError("decomposition needs code and components");
    LinearCode code = code_from_json(j.at("code"));
    std::vector<LinearCode> comps;
    for (const auto& rows : j.at("components"))
        comps.push_back(LinearCode::from_generators(code.field(), code.length(),
                                                    rows_from_json(rows, code.field(), code.length())));
    return Decomposition(std::move(code), std::move(comps));
}

json to_json(const PIsometry& t) {
    return json{{"sigma", t.sigma()}, {"A", rows_to_json(t.triangular().row_vectors())}};
}

PIsometry isometry_from_json(const json& j, const Poset& p, PrimeField field) {
    auto sigma = field_of<Permutation>(j, "sigma");
    if (!j.contains("A")) throw ValidationError("missing field \"A\"");
    return PIsometry(p, std::move(sigma), matrix_from_json(j.at("A"), field, static_cast<std::size_t>(p.size())));
}

json to_json(const PDecomposition& pd) {
    return json{{"witness", to_json(pd.witness)},
                {"witness_index", pd.witness_index},
                {"decomposition", to_json(pd.dec)},
                {"profile", to_json(profile_of(pd.dec))},
                {"complexity", complexity_to_json(pd.complexity)},
                {"proven_minimal", pd.proven_minimal}};
}

json to_json(const BoundsReport& b) {
    return json{{"upper_poset", to_json(b.upper_poset)},
                {"lower_poset", to_json(b.lower_poset)},
                {"o_upper", complexity_to_json(b.o_upper)},
                {"o_p", b.o_p ? complexity_to_json(*b.o_p) : json(nullptr)},
                {"o_lower", complexity_to_json(b.o_lower)},
                {"sandwich_holds", b.sandwich_holds()}};
}

namespace {

int hex_width(std::uint32_t q) {
    int width = 1;
    for (std::uint32_t top = q - 1; top >= 16; top >>= 4) ++width;
    return width;
}

}  // namespace

std::string hex_pack(const FieldVector& v) {
    const int width = hex_width(v.field().q());
    std::ostringstream os;
    os << std::hex;
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::ostringstream digit;
        digit << std::hex << v[i];
        os << std::string(static_cast<std::size_t>(width) - digit.str().size(), '0') << digit.str();
    }
    return os.str();
}

FieldVector hex_unpack(const std::string& text, PrimeField field, std::size_t n) {
    const auto width = static_cast<std::size_t>(hex_width(field.q()));
    if (text.size() != width * n) throw ValidationError("hex vector \"" + text + "\" has the wrong length");
    FieldVector v(field, n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t used = 0;
        unsigned long value = 0;
        try {
            value = std::stoul(text.substr(i * width, width), &used, 16);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != width || value >= field.q()) throw ValidationError("bad hex vector \"" + text + "\"");
        v.set(i, static_cast<Residue>(value));
    }
    return v;
}

json to_json(const SyndromeTable& t) {
    json comps = json::array();
    for (const auto& c : t.components) {
        json leaders = json::object();
        for (const auto& leader : c.leaders) leaders[hex_pack(c.parity.syndrome(leader))] = hex_pack(leader);
        comps.push_back(json{{"support", set_to_json(c.support)},
                             {"generators", rows_to_json(c.local_code.generator_rows())},
                             {"entries", c.entries()},
                             {"leaders", leaders}});
    }
    return json{{"code", to_json(t.code)},
                {"witness", to_json(t.witness)},
                {"j0", set_to_json(t.j0)},
                {"complexity", complexity_to_json(t.complexity)},
                {"total_entries", t.total_entries()},
                {"components", comps}};
}

SyndromeTable table_from_json(const json& j, const Poset& p) {
    for (const char* key : {"code", "witness", "components", "complexity"})
        if (!j.contains(key)) throw ValidationError(std::string("table is missing \"") + key + "\"");
    LinearCode code = code_from_json(j.at("code"));
    const PrimeField field = code.field();
    PIsometry witness = isometry_from_json(j.at("witness"), p, field);
    auto inverse = witness.matrix().inverse();
    if (!inverse) throw ValidationError("table witness is not invertible");
    const ElementSet j0 = j.contains("j0") ? set_from_json(j.at("j0")) : ElementSet{};
    std::vector<ComponentTable> comps;
    for (const auto& cj : j.at("components")) {
        const ElementSet support = set_from_json(cj.at("support"));
        const auto m = static_cast<std::size_t>(support.size());
        LinearCode local = LinearCode::from_generators(field, support.size(), rows_from_json(cj.at("generators"), field, support.size()));
        ParityData parity = parity_and_syndrome(local);
        const std::uint64_t cosets = saturating_power(field.q(), support.size() - local.dimension());
        if (cosets > kCosetLimit) throw ResourceError("table component exceeds the coset limit");
        std::vector<FieldVector> leaders(static_cast<std::size_t>(cosets), FieldVector(field, m));
        std::vector<bool> filled(static_cast<std::size_t>(cosets), false);
        for (const auto& [key, value] : cj.at("leaders").items()) {
            const FieldVector syndrome = hex_unpack(key, field, parity.check.rows());
            const FieldVector leader = hex_unpack(value.get<std::string>(), field, m);
            if (!(parity.syndrome(leader) == syndrome)) throw ValidationError("leader does not match its syndrome");
            const auto idx = static_cast<std::size_t>(syndrome_index(syndrome));
            leaders[idx] = leader;
            filled[idx] = true;
        }
        for (bool f : filled)
            if (!f) throw ValidationError("table component is missing coset leaders");
        comps.push_back(ComponentTable{support, std::move(local), p.induced(support), std::move(parity), std::move(leaders)});
    }
    Complexity complexity;
    const auto& cj = j.at("complexity");
    complexity = cj.is_string() ? Complexity(cj.get<std::string>()) : Complexity(cj.get<std::uint64_t>());
    return SyndromeTable{std::move(code), std::move(witness), std::move(*inverse), j0, std::move(comps), complexity};
}

FieldVector parse_vector(const std::string& text, PrimeField field) {
    std::vector<std::int64_t> entries;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            entries.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ValidationError("bad vector entry \"" + item + "\"");
        }
    }
    if (entries.empty()) throw ValidationError("empty vector");
    return FieldVector(field, entries);
}

}  // namespace pmetric::io
