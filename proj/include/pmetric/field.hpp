#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pmetric {

using Residue = std::uint32_t;

/// Prime field GF(q). Residues are always kept in [0, q).
class PrimeField {
public:
    /// Throws ValidationError unless q is prime.
    explicit PrimeField(std::uint32_t q);

    std::uint32_t q() const { return q_; }

    Residue add(Residue a, Residue b) const { return static_cast<Residue>((std::uint64_t{a} + b) % q_); }
    Residue sub(Residue a, Residue b) const { return static_cast<Residue>((std::uint64_t{a} + q_ - b) % q_); }
    Residue mul(Residue a, Residue b) const { return static_cast<Residue>((std::uint64_t{a} * b) % q_); }
    Residue neg(Residue a) const { return a == 0 ? 0 : q_ - a; }
    /// Throws std::domain_error on zero.
    Residue inv(Residue a) const;
    Residue normalize(std::int64_t value) const;

    bool operator==(const PrimeField&) const = default;

private:
    std::uint32_t q_;
};

bool is_prime(std::uint32_t q);

/// Element of GF(q)^n.
class FieldVector {
public:
    FieldVector(PrimeField field, std::size_t n) : field_(field), entries_(n, 0) {}
    /// Entries are reduced mod q.
    FieldVector(PrimeField field, const std::vector<std::int64_t>& entries);

    static FieldVector unit(PrimeField field, std::size_t n, int coordinate);  // e_i, 1-based

    const PrimeField& field() const { return field_; }
    std::size_t size() const { return entries_.size(); }
    Residue operator[](std::size_t i) const { return entries_[i]; }
    /// 1-based coordinate access.
    Residue at(int coordinate) const { return entries_.at(static_cast<std::size_t>(coordinate - 1)); }
    void set(std::size_t i, Residue value) { entries_[i] = value % field_.q(); }
    std::span<const Residue> entries() const { return entries_; }
    bool is_zero() const;

    FieldVector operator+(const FieldVector& other) const;
    FieldVector operator-(const FieldVector& other) const;
    FieldVector operator-() const;
    FieldVector scaled(Residue lambda) const;

    std::string to_string() const;  // "(1,0,1)"

    bool operator==(const FieldVector& other) const { return entries_ == other.entries_ && field_ == other.field_; }
    /// Lexicographic on entries.
    std::strong_ordering operator<=>(const FieldVector& other) const { return entries_ <=> other.entries_; }

private:
    void check_compatible(const FieldVector& other) const;

    PrimeField field_;
    std::vector<Residue> entries_;
};

/// Dense row-major matrix over GF(q).
class Matrix {
public:
    Matrix(PrimeField field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static Matrix identity(PrimeField field, std::size_t n);
    static Matrix from_rows(PrimeField field, std::size_t cols, const std::vector<FieldVector>& rows);

    const PrimeField& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Residue operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Residue& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    FieldVector row(std::size_t r) const;
    std::vector<FieldVector> row_vectors() const;

    /// Column action y = M x.
    FieldVector apply(const FieldVector& x) const;
    Matrix operator*(const Matrix& other) const;

    /// Reduces in place to reduced row-echelon form and drops zero rows.
    /// Returns the pivot columns (0-based, ascending).
    std::vector<std::size_t> reduce_to_rref();
    std::size_t rank() const;
    std::optional<Matrix> inverse() const;

    bool operator==(const Matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }
    std::strong_ordering operator<=>(const Matrix& other) const;

private:
    PrimeField field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Residue> data_;
};

}  // namespace pmetric
