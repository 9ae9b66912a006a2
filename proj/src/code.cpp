#include "pmetric/code.hpp"

#include <algorithm>
#include <limits>

#include "pmetric/error.hpp"

namespace pmetric {

std::uint64_t saturating_power(std::uint64_t q, int e) {
    std::uint64_t out = 1;
    for (int i = 0; i < e; ++i) {
        if (out > std::numeric_limits<std::uint64_t>::max() / q) return std::numeric_limits<std::uint64_t>::max();
        out *= q;
    }
    return out;
}

LinearCode LinearCode::from_generators(PrimeField field, int n, const std::vector<FieldVector>& rows) {
    if (n < 1) throw ValidationError("code length must be positive");
    if (rows.empty()) throw ValidationError("no generator rows given");
    Matrix m = Matrix::from_rows(field, static_cast<std::size_t>(n), rows);
    const auto pivot_cols = m.reduce_to_rref();
    if (pivot_cols.empty()) throw ValidationError("generators span the zero code");
    std::vector<int> pivots;
    for (auto c : pivot_cols) pivots.push_back(static_cast<int>(c) + 1);
    return LinearCode(std::move(m), std::move(pivots));
}

ElementSet LinearCode::support() const {
    ElementSet s;
    for (std::size_t r = 0; r < generator_.rows(); ++r)
        for (std::size_t c = 0; c < generator_.cols(); ++c)
            if (generator_(r, c) != 0) s.insert(static_cast<int>(c) + 1);
    return s;
}

bool LinearCode::contains(const FieldVector& x) const {
    if (x.size() != generator_.cols()) throw ValidationError("vector length does not match code length");
    // Subtract x_p times the row with pivot p; x is a codeword iff nothing remains.
    FieldVector rest = x;
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
        const Residue coeff = rest[static_cast<std::size_t>(pivots_[r] - 1)];
        if (coeff != 0) rest = rest - generator_.row(r).scaled(coeff);
    }
    return rest.is_zero();
}

std::uint64_t LinearCode::size() const { return saturating_power(field().q(), dimension()); }

void LinearCode::for_each_codeword(const std::function<void(const FieldVector&)>& fn) const {
    if (size() > kCodewordLimit)
        throw ResourceError("code has " + std::to_string(field().q()) + "^" + std::to_string(dimension()) +
                            " codewords, above the enumeration limit");
    const auto rows = generator_rows();
    const std::size_t k = rows.size();
    const Residue q = field().q();
    std::vector<Residue> message(k, 0);
    while (true) {
        FieldVector word(field(), generator_.cols());
        for (std::size_t i = 0; i < k; ++i)
            if (message[i] != 0) word = word + rows[i].scaled(message[i]);
        fn(word);
        // Increment the message, last entry fastest, for lexicographic order.
        std::size_t pos = k;
        while (pos > 0 && ++message[pos - 1] == q) message[--pos] = 0;
        if (pos == 0) break;
    }
}

std::vector<FieldVector> LinearCode::codewords() const {
    std::vector<FieldVector> out;
    for_each_codeword([&](const FieldVector& w) { out.push_back(w); });
    return out;
}

ParityData parity_and_syndrome(const LinearCode& code) {
    const auto& g = code.generator();
    const int n = code.length();
    const auto& pivots = code.pivots();
    std::vector<int> free_cols;
    for (int c = 1; c <= n; ++c)
        if (!std::binary_search(pivots.begin(), pivots.end(), c)) free_cols.push_back(c);
    const auto& field = code.field();
    Matrix h(field, free_cols.size(), static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
        const auto j = static_cast<std::size_t>(free_cols[i] - 1);
        h(i, j) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            h(i, static_cast<std::size_t>(pivots[r] - 1)) = field.neg(g(r, j));
    }
    return ParityData{std::move(h)};
}

FieldVector restrict_to(const FieldVector& y, ElementSet coords) {
    FieldVector out(y.field(), static_cast<std::size_t>(coords.size()));
    std::size_t k = 0;
    for (int c : coords.elements()) out.set(k++, y[static_cast<std::size_t>(c - 1)]);
    return out;
}

FieldVector lift(const FieldVector& x, ElementSet coords, int n) {
    if (x.size() != static_cast<std::size_t>(coords.size())) throw ValidationError("lift: length mismatch");
    FieldVector out(x.field(), static_cast<std::size_t>(n));
    std::size_t k = 0;
    for (int c : coords.elements()) out.set(static_cast<std::size_t>(c - 1), x[k++]);
    return out;
}

LinearCode project(const LinearCode& code, ElementSet coords) {
    std::vector<FieldVector> rows;
    for (const auto& r : code.generator_rows()) rows.push_back(restrict_to(r, coords));
    return LinearCode::from_generators(code.field(), coords.size(), rows);
}

std::vector<LinearCode> all_codes(PrimeField field, int n) {
    if (n < 1 || saturating_power(field.q(), n) > 256) throw ResourceError("code catalog limited to q^n <= 256");
    std::vector<LinearCode> out;
    const Residue q = field.q();
    // Enumerate RREF shapes: choose pivot columns, then fill the free entries right of each pivot.
    for (int k = 1; k <= n; ++k) {
        std::vector<LinearCode> level;
        for_each_subset(ElementSet::full(n), [&](ElementSet pivots) {
            if (pivots.size() != k) return;
            const auto pv = pivots.elements();
            std::vector<std::pair<std::size_t, std::size_t>> free_slots;
            for (std::size_t r = 0; r < pv.size(); ++r)
                for (int c = pv[r] + 1; c <= n; ++c)
                    if (!pivots.contains(c)) free_slots.emplace_back(r, static_cast<std::size_t>(c - 1));
            std::vector<Residue> values(free_slots.size(), 0);
            while (true) {
                std::vector<FieldVector> rows(pv.size(), FieldVector(field, static_cast<std::size_t>(n)));
                for (std::size_t r = 0; r < pv.size(); ++r) rows[r].set(static_cast<std::size_t>(pv[r] - 1), 1);
                for (std::size_t s = 0; s < free_slots.size(); ++s) rows[free_slots[s].first].set(free_slots[s].second, values[s]);
                level.push_back(LinearCode::from_generators(field, n, rows));
                std::size_t pos = 0;
                while (pos < values.size() && ++values[pos] == q) values[pos++] = 0;
                if (pos == values.size()) break;
            }
        });
        std::sort(level.begin(), level.end());
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

}  // namespace pmetric
