#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rsalg/scalar.hpp"

namespace rsalg {

// Dense matrix over one coefficient ring, row major.
class Matrix {
public:
    Matrix() = default;
    Matrix(RingDesc ring, std::size_t rows, std::size_t cols);

    static Matrix identity(const RingDesc& ring, std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const RingDesc& ring() const { return ring_; }

    Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix scaled(const Scalar& c) const;
    Matrix transposed() const;
    bool operator==(const Matrix& o) const;
    bool is_zero() const;

    struct Echelon;

    // reduced row echelon form; requires a field ring
    Echelon rref() const;
    std::size_t rank() const;

    // basis of { x : A x = 0 }, one vector per free column
    std::vector<std::vector<Scalar>> kernel() const;

    // one solution of A x = b, if any
    std::optional<std::vector<Scalar>> solve(const std::vector<Scalar>& b) const;

private:
    RingDesc ring_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> data_;
};

struct Matrix::Echelon {
    Matrix mat;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
};

} // namespace rsalg
