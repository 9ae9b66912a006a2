#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "pmetric/code.hpp"
#include "pmetric/field.hpp"
#include "pmetric/poset.hpp"

namespace pmetric {

inline constexpr std::uint64_t kDefaultGroupBudget = 10'000'000;

/// Linear P-isometry T = T_σ ∘ A.
///
/// A acts on column vectors and may be nonzero at (i, j) only when i ⪯ j, with
/// a nonzero diagonal. T_σ(x) = (x_σ(1), ..., x_σ(n)) for σ ∈ Aut(P) and is
/// applied after A, so T(x)_i = (A x)_σ(i).
class PIsometry {
public:
    /// Throws ValidationError if σ ∉ Aut(P) or A breaks the triangular pattern.
    PIsometry(const Poset& p, Permutation sigma, Matrix triangular);

    static PIsometry identity(const Poset& p, PrimeField field);

    int size() const { return static_cast<int>(sigma_.size()); }
    const PrimeField& field() const { return triangular_.field(); }
    /// The automorphism σ_T induced on [n].
    const Permutation& sigma() const { return sigma_; }
    const Matrix& triangular() const { return triangular_; }
    /// The full matrix M with M x = T(x); row i of M is row σ(i) of A.
    Matrix matrix() const;

    FieldVector apply(const FieldVector& x) const;
    /// T(C), re-canonicalised.
    LinearCode apply_code(const LinearCode& code) const;

    bool operator==(const PIsometry&) const = default;

private:
    PIsometry(Permutation sigma, Matrix triangular) : sigma_(std::move(sigma)), triangular_(std::move(triangular)) {}
    friend class IsometryGroup;
    friend PIsometry strip_to_triangular(const PIsometry& t);

    Permutation sigma_;
    Matrix triangular_;
};

/// True iff A_ij = 0 whenever i ⋠ j and every diagonal entry is nonzero.
bool has_triangular_pattern(const Poset& p, const Matrix& a);

/// The same map with σ dropped: just A.
PIsometry strip_to_triangular(const PIsometry& t);

/// |Aut(P)| · (q-1)^n · q^s with s the number of strict pairs; saturates at UINT64_MAX.
std::uint64_t group_size(const Poset& p, PrimeField field);

/// G_P = S_P ⋉ Δ_P as an indexable sequence.
///
/// Index order: automorphisms lexicographically, then the free entries of A
/// (row-major over pairs i ⪯ j) lexicographically. Any index range can be
/// processed independently.
class IsometryGroup {
public:
    IsometryGroup(const Poset& p, PrimeField field);

    std::uint64_t size() const { return size_; }
    PIsometry at(std::uint64_t index) const;
    /// Calls fn(index, T) for indices in [begin, end).
    void for_each(std::uint64_t begin, std::uint64_t end,
                  const std::function<void(std::uint64_t, const PIsometry&)>& fn) const;
    const std::vector<Permutation>& automorphism_list() const { return automorphisms_; }

private:
    Poset poset_;
    PrimeField field_;
    std::vector<Permutation> automorphisms_;
    std::vector<std::pair<int, int>> slots_;  // (i, j) with i ⪯ j, row-major
    std::uint64_t matrices_per_sigma_;
    std::uint64_t size_;
};

/// Every element of G_P; throws ResourceError when group_size exceeds `budget`.
std::vector<PIsometry> enumerate(const Poset& p, PrimeField field, std::uint64_t budget = kDefaultGroupBudget);

/// Checks that `map` is invertible and preserves ω_P. Exhaustive over GF(q)^n
/// when q^n ≤ 2^20, otherwise on `samples` pseudo-random vectors from `seed`.
bool verify_isometry(const Poset& p, const Matrix& map, std::uint64_t seed = 1, int samples = 20000);

/// Sweep map on a chain: (x_1 - x_n, ..., x_{n-1} - x_n, x_n).
Matrix chain_sweep_matrix(PrimeField field, int n);

}  // namespace pmetric
