#pragma once

// Dense vectors and row-major matrices over GF(p).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gf.hpp"

namespace perfectntt {

class dimension_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class FieldVector {
public:
    explicit FieldVector(PrimeModulus m, std::size_t n = 0) : modulus_(m), data_(n, 0) {}

    FieldVector(PrimeModulus m, std::span<const std::int64_t> values) : modulus_(m) {
        data_.reserve(values.size());
        for (auto v : values) data_.push_back(m.reduce(v));
    }
    FieldVector(PrimeModulus m, std::initializer_list<std::int64_t> values)
        : FieldVector(m, std::span<const std::int64_t>(values.begin(), values.size())) {}

    static FieldVector constant(PrimeModulus m, std::size_t n, std::uint32_t value) {
        FieldVector v(m, n);
        for (auto& x : v.data_) x = m.reduce(value);
        return v;
    }
    static FieldVector unit(PrimeModulus m, std::size_t n, std::size_t index) {
        FieldVector v(m, n);
        v.data_.at(index) = 1 % m.value();
        return v;
    }

    const PrimeModulus& modulus() const { return modulus_; }
    std::size_t size() const { return data_.size(); }
    bool is_zero() const {
        for (auto x : data_)
            if (x != 0) return false;
        return true;
    }

    std::uint32_t operator[](std::size_t i) const { return data_[i]; }
    FieldElement at(std::size_t i) const { return {data_.at(i), modulus_}; }
    void set(std::size_t i, std::int64_t value) { data_.at(i) = modulus_.reduce(value); }
    std::span<const std::uint32_t> values() const { return data_; }

    friend FieldVector operator+(const FieldVector& a, const FieldVector& b) {
        check_compatible(a, b);
        FieldVector r(a.modulus_, a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r.data_[i] = a.modulus_.add(a.data_[i], b.data_[i]);
        return r;
    }
    friend FieldVector operator-(const FieldVector& a, const FieldVector& b) {
        check_compatible(a, b);
        FieldVector r(a.modulus_, a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r.data_[i] = a.modulus_.sub(a.data_[i], b.data_[i]);
        return r;
    }
    friend FieldVector operator*(const FieldElement& s, const FieldVector& v) {
        require_same(s.modulus(), v.modulus_);
        FieldVector r(v.modulus_, v.size());
        for (std::size_t i = 0; i < v.size(); ++i) r.data_[i] = v.modulus_.mul(s.value(), v.data_[i]);
        return r;
    }

    /// Cyclic shift by m positions to the right: out[i] = in[i - m mod N].
    FieldVector rotated(std::size_t m) const {
        FieldVector r(modulus_, size());
        const std::size_t n = size();
        if (n == 0) return r;
        for (std::size_t i = 0; i < n; ++i) r.data_[(i + m) % n] = data_[i];
        return r;
    }

    friend bool operator==(const FieldVector&, const FieldVector&) = default;

    friend std::ostream& operator<<(std::ostream& os, const FieldVector& v) {
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v.data_[i];
        return os;
    }

private:
    static void check_compatible(const FieldVector& a, const FieldVector& b) {
        require_same(a.modulus_, b.modulus_);
        if (a.size() != b.size())
            throw dimension_error("vector length mismatch: " + std::to_string(a.size()) + " vs " +
                                  std::to_string(b.size()));
    }

    PrimeModulus modulus_;
    std::vector<std::uint32_t> data_;
};

class FieldMatrix {
public:
    FieldMatrix(PrimeModulus m, std::size_t rows, std::size_t cols)
        : modulus_(m), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    /// Entries may be negative (e.g. -1); they are normalized into [0, p).
    FieldMatrix(PrimeModulus m, const std::vector<std::vector<std::int64_t>>& rows)
        : modulus_(m), rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()) {
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw dimension_error("ragged matrix rows");
            for (auto v : r) data_.push_back(m.reduce(v));
        }
    }

    static FieldMatrix identity(PrimeModulus m, std::size_t n) {
        FieldMatrix r(m, n, n);
        for (std::size_t i = 0; i < n; ++i) r.data_[i * n + i] = 1 % m.value();
        return r;
    }

    static FieldMatrix from_row_vectors(PrimeModulus m, std::size_t cols, const std::vector<FieldVector>& rows) {
        FieldMatrix r(m, rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            require_same(m, rows[i].modulus());
            if (rows[i].size() != cols) throw dimension_error("row length mismatch");
            for (std::size_t j = 0; j < cols; ++j) r.data_[i * cols + j] = rows[i][j];
        }
        return r;
    }

    const PrimeModulus& modulus() const { return modulus_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const {
        for (auto x : data_)
            if (x != 0) return false;
        return true;
    }

    std::uint32_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    FieldElement at(std::size_t i, std::size_t j) const {
        check_index(i, j);
        return {data_[i * cols_ + j], modulus_};
    }
    void set(std::size_t i, std::size_t j, std::int64_t value) {
        check_index(i, j);
        data_[i * cols_ + j] = modulus_.reduce(value);
    }

    std::span<const std::uint32_t> row_span(std::size_t i) const {
        return std::span<const std::uint32_t>(data_).subspan(i * cols_, cols_);
    }
    FieldVector row(std::size_t i) const {
        FieldVector v(modulus_, cols_);
        for (std::size_t j = 0; j < cols_; ++j) v.set(j, (*this)(i, j));
        return v;
    }
    FieldVector column(std::size_t j) const {
        FieldVector v(modulus_, rows_);
        for (std::size_t i = 0; i < rows_; ++i) v.set(i, (*this)(i, j));
        return v;
    }

    FieldMatrix transposed() const {
        FieldMatrix t(modulus_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = data_[i * cols_ + j];
        return t;
    }

    /// Rows of `top` followed by rows of `bottom`.
    static FieldMatrix stack(const FieldMatrix& top, const FieldMatrix& bottom) {
        require_same(top.modulus_, bottom.modulus_);
        if (top.cols_ != bottom.cols_ && top.rows_ != 0 && bottom.rows_ != 0)
            throw dimension_error("stack: column count mismatch");
        const std::size_t cols = top.rows_ ? top.cols_ : bottom.cols_;
        FieldMatrix r(top.modulus_, top.rows_ + bottom.rows_, cols);
        std::copy(top.data_.begin(), top.data_.end(), r.data_.begin());
        std::copy(bottom.data_.begin(), bottom.data_.end(), r.data_.begin() + static_cast<std::ptrdiff_t>(top.data_.size()));
        return r;
    }

    FieldMatrix without_column(std::size_t col) const {
        if (col >= cols_) throw dimension_error("column index out of range");
        FieldMatrix r(modulus_, rows_, cols_ - 1);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0, k = 0; j < cols_; ++j)
                if (j != col) r.data_[i * r.cols_ + k++] = (*this)(i, j);
        return r;
    }

    FieldMatrix block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const {
        if (row0 + nrows > rows_ || col0 + ncols > cols_) throw dimension_error("block out of range");
        FieldMatrix r(modulus_, nrows, ncols);
        for (std::size_t i = 0; i < nrows; ++i)
            for (std::size_t j = 0; j < ncols; ++j) r.data_[i * ncols + j] = (*this)(row0 + i, col0 + j);
        return r;
    }

    friend FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b) {
        check_same_shape(a, b);
        FieldMatrix r(a.modulus_, a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.modulus_.add(a.data_[i], b.data_[i]);
        return r;
    }
    friend FieldMatrix operator-(const FieldMatrix& a, const FieldMatrix& b) {
        check_same_shape(a, b);
        FieldMatrix r(a.modulus_, a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.modulus_.sub(a.data_[i], b.data_[i]);
        return r;
    }
    friend FieldMatrix operator*(const FieldElement& s, const FieldMatrix& a) {
        require_same(s.modulus(), a.modulus_);
        FieldMatrix r(a.modulus_, a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.modulus_.mul(s.value(), a.data_[i]);
        return r;
    }

    friend FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
        require_same(a.modulus_, b.modulus_);
        if (a.cols_ != b.rows_)
            throw dimension_error("matrix product: inner dimensions " + std::to_string(a.cols_) + " and " +
                                  std::to_string(b.rows_) + " differ");
        const auto& m = a.modulus_;
        FieldMatrix r(m, a.rows_, b.cols_);
        std::vector<std::uint64_t> acc(b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            std::fill(acc.begin(), acc.end(), 0);
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const std::uint64_t aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) acc[j] = (acc[j] + aik * b(k, j)) % m.value();
            }
            for (std::size_t j = 0; j < b.cols_; ++j) r.data_[i * b.cols_ + j] = static_cast<std::uint32_t>(acc[j]);
        }
        return r;
    }

    friend FieldVector operator*(const FieldMatrix& a, const FieldVector& v) {
        require_same(a.modulus_, v.modulus());
        if (a.cols_ != v.size())
            throw dimension_error("matrix-vector product: " + std::to_string(a.cols_) + " columns vs length " +
                                  std::to_string(v.size()));
        const auto& m = a.modulus_;
        FieldVector r(m, a.rows_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            std::uint64_t acc = 0;
            for (std::size_t j = 0; j < a.cols_; ++j) acc = (acc + std::uint64_t{a(i, j)} * v[j]) % m.value();
            r.set(i, static_cast<std::int64_t>(acc));
        }
        return r;
    }

    /// entry(i, j) == entry(0, (j - i) mod N) for every i, j.
    bool is_circulant() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(0, (j + cols_ - i) % cols_)) return false;
        return true;
    }

    friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

    friend std::ostream& operator<<(std::ostream& os, const FieldMatrix& a) {
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t j = 0; j < a.cols_; ++j) os << (j ? " " : "") << a(i, j);
            os << '\n';
        }
        return os;
    }

private:
    void check_index(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) throw dimension_error("matrix index out of range");
    }
    static void check_same_shape(const FieldMatrix& a, const FieldMatrix& b) {
        require_same(a.modulus_, b.modulus_);
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw dimension_error("matrix shape mismatch");
    }

    PrimeModulus modulus_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint32_t> data_;
};

inline FieldMatrix mat_mul(const FieldMatrix& a, const FieldMatrix& b) { return a * b; }
inline FieldVector mat_vec(const FieldMatrix& a, const FieldVector& v) { return a * v; }

} // namespace perfectntt
