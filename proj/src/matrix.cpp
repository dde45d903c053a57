#include "rsalg/matrix.hpp"

#include "rsalg/errors.hpp"

namespace rsalg {

Matrix::Matrix(RingDesc ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols),
      data_(rows * cols, Scalar::zero(ring_)) {}

Matrix Matrix::identity(const RingDesc& ring, std::size_t n) {
    Matrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = Scalar::one(ring);
    return m;
}

static void require_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw domain_mismatch("matrix shapes differ");
}

Matrix Matrix::operator+(const Matrix& o) const {
    require_same_shape(*this, o);
    Matrix r(ring_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        r.data_[i] = data_[i] + o.data_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    require_same_shape(*this, o);
    Matrix r(ring_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        r.data_[i] = data_[i] - o.data_[i];
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_)
        throw domain_mismatch("matrix shapes incompatible for product");
    Matrix r(ring_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Scalar& b = o.at(k, j);
                if (b.is_zero()) continue;
                r.at(i, j) = r.at(i, j) + a * b;
            }
        }
    return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix r(ring_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        r.data_[i] = data_[i] * c;
    return r;
}

Matrix Matrix::transposed() const {
    Matrix r(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r.at(j, i) = at(i, j);
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool Matrix::is_zero() const {
    for (const auto& s : data_)
        if (!s.is_zero()) return false;
    return true;
}

std::size_t Matrix::rank() const { return rref().rank; }

Matrix::Echelon Matrix::rref() const {
    if (!ring_.is_field())
        throw domain_mismatch("row reduction needs field coefficients");
    Echelon e{*this, {}, 0};
    Matrix& m = e.mat;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        // prefer the structurally smallest pivot; the echelon form is
        // unique either way but entry growth is not
        std::size_t piv = rows_;
        std::size_t best = 0;
        for (std::size_t i = row; i < rows_; ++i) {
            if (m.at(i, col).is_zero()) continue;
            std::size_t c = m.at(i, col).complexity();
            if (piv == rows_ || c < best) {
                piv = i;
                best = c;
                if (c <= 1) break;
            }
        }
        if (piv == rows_) continue;
        if (piv != row)
            for (std::size_t j = col; j < cols_; ++j)
                std::swap(m.at(piv, j), m.at(row, j));
        Scalar inv = m.at(row, col).inverse();
        for (std::size_t j = col; j < cols_; ++j)
            m.at(row, j) = m.at(row, j) * inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == row) continue;
            const Scalar f = m.at(i, col);
            if (f.is_zero()) continue;
            for (std::size_t j = col; j < cols_; ++j)
                m.at(i, j) = m.at(i, j) - f * m.at(row, j);
        }
        e.pivot_cols.push_back(col);
        ++row;
    }
    e.rank = row;
    return e;
}

std::vector<std::vector<Scalar>> Matrix::kernel() const {
    Echelon e = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : e.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Scalar> v(cols_, Scalar::zero(ring_));
        v[free_col] = Scalar::one(ring_);
        for (std::size_t r = 0; r < e.pivot_cols.size(); ++r)
            v[e.pivot_cols[r]] = -e.mat.at(r, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Scalar>> Matrix::solve(const std::vector<Scalar>& b) const {
    if (b.size() != rows_)
        throw domain_mismatch("right-hand side length differs from row count");
    Matrix aug(ring_, rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j)
            aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = b[i];
    }
    Echelon e = aug.rref();
    // inconsistent iff some pivot sits in the appended column
    for (auto c : e.pivot_cols)
        if (c == cols_) return std::nullopt;
    std::vector<Scalar> x(cols_, Scalar::zero(ring_));
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r)
        x[e.pivot_cols[r]] = e.mat.at(r, cols_);
    return x;
}

} // namespace rsalg
