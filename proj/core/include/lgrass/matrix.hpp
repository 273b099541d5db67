#ifndef LGRASS_MATRIX_HPP
#define LGRASS_MATRIX_HPP

#include <vector>

#include "lgrass/scalar.hpp"

namespace lgrass {

/// Dense row-major matrix over K = k(s). Fiber-mode data embeds as constant
/// entries. Immutable in spirit: operations return new values.
class Matrix {
public:
    Matrix(const FieldDesc& fd, int rows, int cols)
        : fd_(fd), rows_(rows), cols_(cols),
          e_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Scalar(fd)) {}

    static Matrix identity(const FieldDesc& fd, int n);
    static Matrix from_rows(const FieldDesc& fd, const std::vector<std::vector<long>>& rows);

    const FieldDesc& field() const { return fd_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Scalar& at(int i, int j) const { return e_[idx(i, j)]; }
    void set(int i, int j, Scalar v) { e_[idx(i, j)] = std::move(v); }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator-() const;
    Matrix scaled(const Scalar& c) const;
    Matrix transpose() const;

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    bool is_zero() const;

    /// Entrywise evaluation at s = 0; throws NegativeValuation on poles.
    Matrix specialize0() const;

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;
    Matrix hconcat(const Matrix& o) const;
    Matrix columns(const std::vector<int>& which) const;
    Matrix column(int j) const { return columns({j}); }

private:
    std::size_t idx(int i, int j) const;

    FieldDesc fd_;
    int rows_, cols_;
    std::vector<Scalar> e_;
};

}  // namespace lgrass

#endif
