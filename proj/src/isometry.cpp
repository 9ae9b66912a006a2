#include "pmetric/isometry.hpp"

#include <algorithm>
#include <limits>
#include <random>

#include "pmetric/error.hpp"
#include "pmetric/metric.hpp"

namespace pmetric {

bool has_triangular_pattern(const Poset& p, const Matrix& a) {
    const auto n = static_cast<std::size_t>(p.size());
    if (a.rows() != n || a.cols() != n) return false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const bool allowed = p.leq(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
            if (i == j && a(i, j) == 0) return false;
            if (!allowed && a(i, j) != 0) return false;
        }
    return true;
}

namespace {

bool is_automorphism(const Poset& p, const Permutation& sigma) {
    const int n = p.size();
    if (static_cast<int>(sigma.size()) != n) return false;
    ElementSet seen;
    for (int v : sigma) {
        if (v < 1 || v > n || seen.contains(v)) return false;
        seen.insert(v);
    }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (p.leq(i, j) != p.leq(sigma[static_cast<std::size_t>(i - 1)], sigma[static_cast<std::size_t>(j - 1)])) return false;
    return true;
}

}  // namespace

PIsometry::PIsometry(const Poset& p, Permutation sigma, Matrix triangular)
    : sigma_(std::move(sigma)), triangular_(std::move(triangular)) {
    if (!is_automorphism(p, sigma_)) throw ValidationError("permutation is not an automorphism of the poset");
    if (!has_triangular_pattern(p, triangular_))
        throw ValidationError("matrix has a zero diagonal entry or an entry (i,j) with i not below j");
}

PIsometry PIsometry::identity(const Poset& p, PrimeField field) {
    return PIsometry(identity_permutation(p.size()), Matrix::identity(field, static_cast<std::size_t>(p.size())));
}

Matrix PIsometry::matrix() const {
    const std::size_t n = sigma_.size();
    Matrix m(field(), n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto src = static_cast<std::size_t>(sigma_[i] - 1);
        for (std::size_t j = 0; j < n; ++j) m(i, j) = triangular_(src, j);
    }
    return m;
}

FieldVector PIsometry::apply(const FieldVector& x) const {
    const FieldVector ax = triangular_.apply(x);
    FieldVector y(field(), sigma_.size());
    for (std::size_t i = 0; i < sigma_.size(); ++i) y.set(i, ax[static_cast<std::size_t>(sigma_[i] - 1)]);
    return y;
}

LinearCode PIsometry::apply_code(const LinearCode& code) const {
    if (code.length() != size()) throw ValidationError("code length does not match isometry size");
    std::vector<FieldVector> rows;
    for (const auto& r : code.generator_rows()) rows.push_back(apply(r));
    return LinearCode::from_generators(code.field(), code.length(), rows);
}

PIsometry strip_to_triangular(const PIsometry& t) {
    return PIsometry(identity_permutation(t.size()), t.triangular());
}

std::uint64_t group_size(const Poset& p, PrimeField field) {
    const std::uint64_t q = field.q();
    const std::uint64_t aut = automorphisms(p).size();
    const std::uint64_t diag = saturating_power(q - 1, p.size());
    const std::uint64_t off = saturating_power(q, p.strict_pair_count());
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    if (diag != 0 && aut > kMax / diag) return kMax;
    const std::uint64_t partial = aut * diag;
    if (off != 0 && partial > kMax / off) return kMax;
    return partial * off;
}

IsometryGroup::IsometryGroup(const Poset& p, PrimeField field)
    : poset_(p), field_(field), automorphisms_(automorphisms(p)) {
    for (int i = 1; i <= p.size(); ++i)
        for (int j = 1; j <= p.size(); ++j)
            if (p.leq(i, j)) slots_.emplace_back(i, j);
    matrices_per_sigma_ = saturating_power(field.q() - 1, p.size());
    const std::uint64_t off = saturating_power(field.q(), p.strict_pair_count());
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    matrices_per_sigma_ = (off != 0 && matrices_per_sigma_ > kMax / off) ? kMax : matrices_per_sigma_ * off;
    const std::uint64_t aut = automorphisms_.size();
    size_ = (matrices_per_sigma_ != 0 && aut > kMax / matrices_per_sigma_) ? kMax : aut * matrices_per_sigma_;
}

PIsometry IsometryGroup::at(std::uint64_t index) const {
    if (index >= size_) throw ValidationError("isometry index out of range");
    const std::uint64_t q = field_.q();
    const auto& sigma = automorphisms_[static_cast<std::size_t>(index / matrices_per_sigma_)];
    std::uint64_t rest = index % matrices_per_sigma_;
    const auto n = static_cast<std::size_t>(poset_.size());
    Matrix a(field_, n, n);
    // Last slot varies fastest.
    for (std::size_t s = slots_.size(); s-- > 0;) {
        const auto [i, j] = slots_[s];
        const std::uint64_t radix = (i == j) ? q - 1 : q;
        const auto digit = static_cast<Residue>(rest % radix);
        rest /= radix;
        a(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = (i == j) ? digit + 1 : digit;
    }
    return PIsometry(sigma, std::move(a));
}

void IsometryGroup::for_each(std::uint64_t begin, std::uint64_t end,
                             const std::function<void(std::uint64_t, const PIsometry&)>& fn) const {
    end = std::min(end, size_);
    for (std::uint64_t idx = begin; idx < end; ++idx) fn(idx, at(idx));
}

std::vector<PIsometry> enumerate(const Poset& p, PrimeField field, std::uint64_t budget) {
    IsometryGroup group(p, field);
    if (group.size() > budget)
        throw ResourceError("isometry group has " + std::to_string(group.size()) + " elements, budget is " +
                            std::to_string(budget));
    std::vector<PIsometry> out;
    out.reserve(static_cast<std::size_t>(group.size()));
    group.for_each(0, group.size(), [&](std::uint64_t, const PIsometry& t) { out.push_back(t); });
    return out;
}

bool verify_isometry(const Poset& p, const Matrix& map, std::uint64_t seed, int samples) {
    const auto n = static_cast<std::size_t>(p.size());
    if (map.rows() != n || map.cols() != n) return false;
    if (!map.inverse()) return false;
    const PrimeField field = map.field();
    const std::uint64_t space = saturating_power(field.q(), p.size());
    if (space <= kCodewordLimit) {
        FieldVector x(field, n);
        for (std::uint64_t idx = 0; idx < space; ++idx) {
            std::uint64_t v = idx;
            for (std::size_t i = n; i-- > 0;) {
                x.set(i, static_cast<Residue>(v % field.q()));
                v /= field.q();
            }
            if (pweight(p, map.apply(x)) != pweight(p, x)) return false;
        }
        return true;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Residue> digit(0, field.q() - 1);
    for (int s = 0; s < samples; ++s) {
        FieldVector x(field, n);
        for (std::size_t i = 0; i < n; ++i) x.set(i, digit(rng));
        if (pweight(p, map.apply(x)) != pweight(p, x)) return false;
    }
    return true;
}

Matrix chain_sweep_matrix(PrimeField field, int n) {
    Matrix m = Matrix::identity(field, static_cast<std::size_t>(n));
    for (int i = 0; i + 1 < n; ++i) m(static_cast<std::size_t>(i), static_cast<std::size_t>(n - 1)) = field.neg(1);
    return m;
}

}  // namespace pmetric
