#include "pmetric/field.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "pmetric/error.hpp"

namespace pmetric {

bool is_prime(std::uint32_t q) {
    if (q < 2) return false;
    for (std::uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t q) : q_(q) {
    if (!is_prime(q)) throw ValidationError("field size " + std::to_string(q) + " is not prime");
}

Residue PrimeField::inv(Residue a) const {
    if (a % q_ == 0) throw std::domain_error("inverse of zero in GF(" + std::to_string(q_) + ")");
    // Extended Euclid on (a, q).
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = q_, new_r = a % q_;
    while (new_r != 0) {
        const std::int64_t quotient = r / new_r;
        t = std::exchange(new_t, t - quotient * new_t);
        r = std::exchange(new_r, r - quotient * new_r);
    }
    return normalize(t);
}

Residue PrimeField::normalize(std::int64_t value) const {
    std::int64_t m = value % static_cast<std::int64_t>(q_);
    if (m < 0) m += q_;
    return static_cast<Residue>(m);
}

FieldVector::FieldVector(PrimeField field, const std::vector<std::int64_t>& entries)
    : field_(field), entries_(entries.size()) {
    for (std::size_t i = 0; i < entries.size(); ++i) entries_[i] = field_.normalize(entries[i]);
}

FieldVector FieldVector::unit(PrimeField field, std::size_t n, int coordinate) {
    if (coordinate < 1 || static_cast<std::size_t>(coordinate) > n)
        throw ValidationError("unit vector coordinate out of range");
    FieldVector e(field, n);
    e.entries_[static_cast<std::size_t>(coordinate - 1)] = 1;
    return e;
}

bool FieldVector::is_zero() const {
    for (Residue r : entries_)
        if (r != 0) return false;
    return true;
}

void FieldVector::check_compatible(const FieldVector& other) const {
    if (!(field_ == other.field_)) throw ValidationError("vectors over different fields");
    if (entries_.size() != other.entries_.size())
        throw ValidationError("vector length mismatch: " + std::to_string(entries_.size()) + " vs " +
                              std::to_string(other.entries_.size()));
}

FieldVector FieldVector::operator+(const FieldVector& other) const {
    check_compatible(other);
    FieldVector out(field_, entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = field_.add(entries_[i], other.entries_[i]);
    return out;
}

FieldVector FieldVector::operator-(const FieldVector& other) const {
    check_compatible(other);
    FieldVector out(field_, entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = field_.sub(entries_[i], other.entries_[i]);
    return out;
}

FieldVector FieldVector::operator-() const {
    FieldVector out(field_, entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = field_.neg(entries_[i]);
    return out;
}

FieldVector FieldVector::scaled(Residue lambda) const {
    lambda %= field_.q();
    FieldVector out(field_, entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = field_.mul(lambda, entries_[i]);
    return out;
}

std::string FieldVector::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < entries_.size(); ++i) os << (i ? "," : "") << entries_[i];
    os << ')';
    return os.str();
}

Matrix Matrix::identity(PrimeField field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(PrimeField field, std::size_t cols, const std::vector<FieldVector>& rows) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw ValidationError("row length does not match column count");
        if (!(rows[r].field() == field)) throw ValidationError("row over a different field");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

FieldVector Matrix::row(std::size_t r) const {
    FieldVector v(field_, cols_);
    for (std::size_t c = 0; c < cols_; ++c) v.set(c, (*this)(r, c));
    return v;
}

std::vector<FieldVector> Matrix::row_vectors() const {
    std::vector<FieldVector> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
    return out;
}

FieldVector Matrix::apply(const FieldVector& x) const {
    if (x.size() != cols_) throw ValidationError("matrix/vector dimension mismatch");
    FieldVector y(field_, rows_);
    const std::uint64_t q = field_.q();
    for (std::size_t r = 0; r < rows_; ++r) {
        std::uint64_t acc = 0;
        for (std::size_t c = 0; c < cols_; ++c) acc = (acc + std::uint64_t{(*this)(r, c)} * x[c]) % q;
        y.set(r, static_cast<Residue>(acc));
    }
    return y;
}

Matrix Matrix::operator*(const Matrix& other) const {
    if (cols_ != other.rows_) throw ValidationError("matrix product dimension mismatch");
    Matrix out(field_, rows_, other.cols_);
    const std::uint64_t q = field_.q();
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < other.cols_; ++c) {
            std::uint64_t acc = 0;
            for (std::size_t k = 0; k < cols_; ++k) acc = (acc + std::uint64_t{(*this)(r, k)} * other(k, c)) % q;
            out(r, c) = static_cast<Residue>(acc);
        }
    return out;
}

std::vector<std::size_t> Matrix::reduce_to_rref() {
    std::vector<std::size_t> pivots;
    std::size_t lead_row = 0;
    for (std::size_t col = 0; col < cols_ && lead_row < rows_; ++col) {
        std::size_t pivot = lead_row;
        while (pivot < rows_ && (*this)(pivot, col) == 0) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != lead_row)
            for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(pivot, c), (*this)(lead_row, c));
        const Residue scale = field_.inv((*this)(lead_row, col));
        for (std::size_t c = 0; c < cols_; ++c) (*this)(lead_row, c) = field_.mul((*this)(lead_row, c), scale);
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == lead_row) continue;
            const Residue factor = (*this)(r, col);
            if (factor == 0) continue;
            for (std::size_t c = 0; c < cols_; ++c)
                (*this)(r, c) = field_.sub((*this)(r, c), field_.mul(factor, (*this)(lead_row, c)));
        }
        pivots.push_back(col);
        ++lead_row;
    }
    rows_ = lead_row;
    data_.resize(rows_ * cols_);
    return pivots;
}

std::size_t Matrix::rank() const {
    Matrix copy = *this;
    return copy.reduce_to_rref().size();
}

std::optional<Matrix> Matrix::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    const std::size_t n = rows_;
    Matrix augmented(field_, n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) augmented(r, c) = (*this)(r, c);
        augmented(r, n + r) = 1;
    }
    const auto pivots = augmented.reduce_to_rref();
    if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
    Matrix inv(field_, n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = augmented(r, n + c);
    return inv;
}

std::strong_ordering Matrix::operator<=>(const Matrix& other) const {
    if (auto c = rows_ <=> other.rows_; c != 0) return c;
    if (auto c = cols_ <=> other.cols_; c != 0) return c;
    return data_ <=> other.data_;
}

}  // namespace pmetric
