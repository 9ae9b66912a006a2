#include "pmetric/decoder.hpp"

#include <climits>

#include "pmetric/error.hpp"
#include "pmetric/metric.hpp"

namespace pmetric {

std::uint64_t SyndromeTable::total_entries() const {
    std::uint64_t total = 0;
    for (const auto& c : components) total += c.entries();
    return total;
}

std::uint64_t syndrome_index(const FieldVector& syndrome) {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < syndrome.size(); ++i) idx = idx * syndrome.field().q() + syndrome[i];
    return idx;
}

namespace {

ComponentTable build_component(const LinearCode& component, const Poset& p, std::uint64_t coset_budget) {
    const ElementSet support = component.support();
    const int m = support.size();
    LinearCode local = project(component, support);
    Poset local_poset = p.induced(support);
    ParityData parity = parity_and_syndrome(local);
    const PrimeField field = component.field();
    const std::uint64_t cosets = saturating_power(field.q(), m - local.dimension());
    const std::uint64_t space = saturating_power(field.q(), m);
    if (cosets > coset_budget || space > (std::uint64_t{1} << 24))
        throw ResourceError("component on " + support.to_string() + " needs " + std::to_string(cosets) +
                            " coset leaders, above the budget");

    std::vector<FieldVector> leaders(static_cast<std::size_t>(cosets), FieldVector(field, static_cast<std::size_t>(m)));
    std::vector<int> best(static_cast<std::size_t>(cosets), INT_MAX);
    FieldVector v(field, static_cast<std::size_t>(m));
    // Lexicographic sweep; strict improvement keeps the first minimal vector.
    for (std::uint64_t idx = 0; idx < space; ++idx) {
        std::uint64_t rest = idx;
        for (std::size_t i = static_cast<std::size_t>(m); i-- > 0;) {
            v.set(i, static_cast<Residue>(rest % field.q()));
            rest /= field.q();
        }
        const auto s = static_cast<std::size_t>(syndrome_index(parity.syndrome(v)));
        const int w = pweight(local_poset, v);
        if (w < best[s]) {
            best[s] = w;
            leaders[s] = v;
        }
    }
    return ComponentTable{support, std::move(local), std::move(local_poset), std::move(parity), std::move(leaders)};
}

}  // namespace

SyndromeTable build_table(const PDecomposition& pd, const LinearCode& code, const Poset& p, std::uint64_t coset_budget) {
    if (!(pd.witness.apply_code(code) == pd.dec.code()))
        throw ValidationError("witness does not map the code onto the decomposed code");
    std::vector<ComponentTable> comps;
    for (const auto& c : pd.dec.components()) comps.push_back(build_component(c, p, coset_budget));
    auto inverse = pd.witness.matrix().inverse();
    if (!inverse) throw ValidationError("witness is not invertible");
    return SyndromeTable{code, pd.witness, std::move(*inverse), pd.dec.j0(), std::move(comps), complexity_of(pd.dec)};
}

DecodeResult decode(const SyndromeTable& table, const FieldVector& y) {
    const int n = table.code.length();
    if (y.size() != static_cast<std::size_t>(n)) throw ValidationError("received word has the wrong length");
    const FieldVector moved = table.witness.apply(y);
    FieldVector decoded(y.field(), static_cast<std::size_t>(n));
    for (const auto& comp : table.components) {
        const FieldVector local = restrict_to(moved, comp.support);
        const auto s = static_cast<std::size_t>(syndrome_index(comp.parity.syndrome(local)));
        decoded = decoded + lift(local - comp.leaders[s], comp.support, n);
    }
    ElementSet flagged;
    for (int j : table.j0.elements())
        if (moved.at(j) != 0) flagged.insert(j);
    return DecodeResult{table.witness_inverse.apply(decoded), flagged};
}

NearestResult nearest_codeword_oracle(const LinearCode& code, const Poset& p, const FieldVector& y) {
    if (code.size() > (std::uint64_t{1} << 16)) throw ResourceError("oracle limited to q^k <= 2^16");
    std::optional<NearestResult> best;
    code.for_each_codeword([&](const FieldVector& c) {
        const int d = pdist(p, y, c);
        if (!best || d < best->distance || (d == best->distance && c < best->codeword)) best = NearestResult{c, d};
    });
    return *best;
}

TableStats table_stats(const SyndromeTable& table) {
    TableStats stats;
    for (const auto& c : table.components) {
        stats.entries_per_component.push_back(c.entries());
        stats.total += c.entries();
    }
    stats.complexity = table.complexity;
    return stats;
}

}  // namespace pmetric
