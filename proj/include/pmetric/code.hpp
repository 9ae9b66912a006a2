#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "pmetric/element_set.hpp"
#include "pmetric/field.hpp"

namespace pmetric {

/// Codeword enumeration bound: q^k must not exceed this.
inline constexpr std::uint64_t kCodewordLimit = std::uint64_t{1} << 20;

/// q^e, or nullopt-like saturation: returns UINT64_MAX on overflow.
std::uint64_t saturating_power(std::uint64_t q, int e);

/// Nonzero linear code over GF(q), held as its generator matrix in reduced
/// row-echelon form with pivot-ascending rows. Two codes are equal iff their
/// subspaces are equal.
class LinearCode {
public:
    /// Throws ValidationError when rows are empty, of wrong length, or span {0}.
    static LinearCode from_generators(PrimeField field, int n, const std::vector<FieldVector>& rows);

    const PrimeField& field() const { return generator_.field(); }
    int length() const { return static_cast<int>(generator_.cols()); }
    int dimension() const { return static_cast<int>(generator_.rows()); }
    const Matrix& generator() const { return generator_; }
    std::vector<FieldVector> generator_rows() const { return generator_.row_vectors(); }
    /// Pivot coordinates, 1-based ascending.
    const std::vector<int>& pivots() const { return pivots_; }

    /// supp(C): union of the supports of the RREF rows.
    ElementSet support() const;
    bool contains(const FieldVector& x) const;

    /// All q^k codewords in lexicographic message order. Throws ResourceError beyond kCodewordLimit.
    std::vector<FieldVector> codewords() const;
    void for_each_codeword(const std::function<void(const FieldVector&)>& fn) const;
    std::uint64_t size() const;

    bool operator==(const LinearCode& other) const { return generator_ == other.generator_; }
    std::strong_ordering operator<=>(const LinearCode& other) const { return generator_ <=> other.generator_; }

private:
    explicit LinearCode(Matrix generator, std::vector<int> pivots)
        : generator_(std::move(generator)), pivots_(std::move(pivots)) {}

    Matrix generator_;
    std::vector<int> pivots_;
};

/// Parity-check matrix H with H·c = 0 exactly on the code.
struct ParityData {
    Matrix check;  // (n-k) × n

    FieldVector syndrome(const FieldVector& y) const { return check.apply(y); }
};

/// H rows are indexed by non-pivot columns j: e_j minus the RREF column j on the pivots.
ParityData parity_and_syndrome(const LinearCode& code);

/// Restriction of every codeword to the coordinates in `coords`, as a code of length |coords|.
LinearCode project(const LinearCode& code, ElementSet coords);
/// Places x (length |coords|) onto the coordinates `coords` of a length-n zero vector.
FieldVector lift(const FieldVector& x, ElementSet coords, int n);
/// Inverse of lift: keeps the entries of y at `coords`.
FieldVector restrict_to(const FieldVector& y, ElementSet coords);

/// Every nonzero subspace of GF(q)^n, ordered by dimension and then by generator matrix.
std::vector<LinearCode> all_codes(PrimeField field, int n);

}  // namespace pmetric
