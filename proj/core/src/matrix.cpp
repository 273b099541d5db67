#include "lgrass/matrix.hpp"

namespace lgrass {

std::size_t Matrix::idx(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw IndexOutOfRange("matrix entry (" + std::to_string(i) + "," + std::to_string(j) + ") in " +
                              std::to_string(rows_) + "x" + std::to_string(cols_));
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j);
}

Matrix Matrix::identity(const FieldDesc& fd, int n) {
    Matrix m(fd, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, Scalar(fd, 1));
    return m;
}

Matrix Matrix::from_rows(const FieldDesc& fd, const std::vector<std::vector<long>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    Matrix m(fd, r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c) throw DimensionMismatch("ragged rows");
        for (int j = 0; j < c; ++j) m.set(i, j, Scalar(fd, rows[i][j]));
    }
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix add");
    Matrix r(fd_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + (-o); }

Matrix Matrix::operator-() const {
    Matrix r(*this);
    for (Scalar& x : r.e_) x = -x;
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product " + std::to_string(cols_) + " vs " +
                                                  std::to_string(o.rows_));
    Matrix r(fd_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Scalar& b = o.at(k, j);
                if (b.is_zero()) continue;
                r.set(i, j, r.at(i, j) + a * b);
            }
        }
    return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix r(*this);
    for (Scalar& x : r.e_) x = x * c;
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(fd_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] != o.e_[i]) return false;
    return true;
}

bool Matrix::is_zero() const {
    for (const Scalar& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix Matrix::specialize0() const {
    Matrix r(fd_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = Scalar(e_[i].specialize0());
    return r;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw DimensionMismatch("matrix-vector product");
    std::vector<Scalar> r(static_cast<std::size_t>(rows_), Scalar(fd_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r[static_cast<std::size_t>(i)] = r[static_cast<std::size_t>(i)] + at(i, j) * v[static_cast<std::size_t>(j)];
    return r;
}

Matrix Matrix::hconcat(const Matrix& o) const {
    if (rows_ != o.rows_) throw DimensionMismatch("hconcat");
    Matrix r(fd_, rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) r.set(i, j, at(i, j));
        for (int j = 0; j < o.cols_; ++j) r.set(i, cols_ + j, o.at(i, j));
    }
    return r;
}

Matrix Matrix::columns(const std::vector<int>& which) const {
    Matrix r(fd_, rows_, static_cast<int>(which.size()));
    for (int j = 0; j < r.cols(); ++j)
        for (int i = 0; i < rows_; ++i) r.set(i, j, at(i, which[static_cast<std::size_t>(j)]));
    return r;
}

}  // namespace lgrass
