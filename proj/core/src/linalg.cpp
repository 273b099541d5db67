#include "lgrass/linalg.hpp"

#include <limits>

namespace lgrass {

Echelon row_reduce(const Matrix& m) {
    Matrix r(m);
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < r.cols() && row < r.rows(); ++col) {
        // pivot: lowest valuation below `row` in this column, ties to the first row
        int best = -1;
        long best_val = std::numeric_limits<long>::max();
        for (int i = row; i < r.rows(); ++i) {
            auto v = r.at(i, col).valuation();
            if (!v) continue;
            if (*v < best_val) {
                best_val = *v;
                best = i;
            }
        }
        if (best < 0) continue;
        if (best != row)
            for (int j = 0; j < r.cols(); ++j) {
                Scalar t = r.at(row, j);
                r.set(row, j, r.at(best, j));
                r.set(best, j, t);
            }
        Scalar inv = r.at(row, col).inv();
        for (int j = col; j < r.cols(); ++j) r.set(row, j, r.at(row, j) * inv);
        for (int i = 0; i < r.rows(); ++i) {
            if (i == row) continue;
            const Scalar f = r.at(i, col);
            if (f.is_zero()) continue;
            for (int j = col; j < r.cols(); ++j) r.set(i, j, r.at(i, j) - f * r.at(row, j));
        }
        pivots.push_back(col);
        ++row;
    }
    return Echelon{std::move(r), std::move(pivots)};
}

int rank(const Matrix& m) { return row_reduce(m).rank(); }

Scalar det(const Matrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("determinant of non-square matrix");
    Matrix r(m);
    Scalar d(m.field(), 1);
    int n = m.rows();
    for (int col = 0; col < n; ++col) {
        int best = -1;
        long best_val = std::numeric_limits<long>::max();
        for (int i = col; i < n; ++i) {
            auto v = r.at(i, col).valuation();
            if (v && *v < best_val) {
                best_val = *v;
                best = i;
            }
        }
        if (best < 0) return Scalar(m.field());
        if (best != col) {
            for (int j = 0; j < n; ++j) {
                Scalar t = r.at(col, j);
                r.set(col, j, r.at(best, j));
                r.set(best, j, t);
            }
            d = -d;
        }
        d = d * r.at(col, col);
        Scalar inv = r.at(col, col).inv();
        for (int i = col + 1; i < n; ++i) {
            const Scalar f = r.at(i, col) * inv;
            if (f.is_zero()) continue;
            for (int j = col; j < n; ++j) r.set(i, j, r.at(i, j) - f * r.at(col, j));
        }
    }
    return d;
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw NotInvertible("non-square matrix");
    auto x = solve_matrix(m, Matrix::identity(m.field(), m.rows()));
    if (!x || x->cols() != m.cols() || rank(m) != m.rows()) throw NotInvertible();
    return *x;
}

Subspace Subspace::span(const Matrix& basis_columns) {
    // canonical form: reduced row echelon of the transpose, transposed back
    Echelon e = row_reduce(basis_columns.transpose());
    Matrix rows = e.reduced;
    Matrix basis(basis_columns.field(), basis_columns.rows(), e.rank());
    for (int i = 0; i < e.rank(); ++i)
        for (int j = 0; j < basis_columns.rows(); ++j) basis.set(j, i, rows.at(i, j));
    return Subspace(std::move(basis));
}

Subspace Subspace::zero(const FieldDesc& fd, int ambient) { return Subspace(Matrix(fd, ambient, 0)); }

Subspace Subspace::full(const FieldDesc& fd, int ambient) { return Subspace(Matrix::identity(fd, ambient)); }

Subspace kernel(const Matrix& m) {
    Echelon e = row_reduce(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (int c : e.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < m.cols(); ++c)
        if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);
    Matrix basis(m.field(), m.cols(), static_cast<int>(free_cols.size()));
    for (int k = 0; k < static_cast<int>(free_cols.size()); ++k) {
        int fc = free_cols[static_cast<std::size_t>(k)];
        basis.set(fc, k, Scalar(m.field(), 1));
        for (int pr = 0; pr < e.rank(); ++pr) basis.set(e.pivot_cols[static_cast<std::size_t>(pr)], k, -e.reduced.at(pr, fc));
    }
    return Subspace::span(basis);
}

Subspace image(const Matrix& m) { return Subspace::span(m); }

std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& v) {
    if (static_cast<int>(v.size()) != m.rows()) throw DimensionMismatch("solve rhs size");
    Matrix rhs(m.field(), m.rows(), 1);
    for (int i = 0; i < m.rows(); ++i) rhs.set(i, 0, v[static_cast<std::size_t>(i)]);
    auto x = solve_matrix(m, rhs);
    if (!x) return std::nullopt;
    std::vector<Scalar> out;
    out.reserve(static_cast<std::size_t>(m.cols()));
    for (int i = 0; i < m.cols(); ++i) out.push_back(x->at(i, 0));
    return out;
}

std::optional<Matrix> solve_matrix(const Matrix& m, const Matrix& b) {
    if (b.rows() != m.rows()) throw DimensionMismatch("solve rhs rows");
    Echelon e = row_reduce(m.hconcat(b));
    Matrix x(m.field(), m.cols(), b.cols());
    // inconsistent iff some pivot lies in the rhs block
    for (int c : e.pivot_cols)
        if (c >= m.cols()) return std::nullopt;
    for (int pr = 0; pr < e.rank(); ++pr) {
        int pc = e.pivot_cols[static_cast<std::size_t>(pr)];
        for (int j = 0; j < b.cols(); ++j) x.set(pc, j, e.reduced.at(pr, m.cols() + j));
    }
    return x;
}

Subspace sum(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim()) throw DimensionMismatch("subspace sum ambient");
    return Subspace::span(u.basis().hconcat(v.basis()));
}

Subspace intersect(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim()) throw DimensionMismatch("subspace intersect ambient");
    // kernel of [A | -B]: pairs (x, y) with A x = B y; intersection is A x
    Matrix cat = u.basis().hconcat(-v.basis());
    Subspace k = kernel(cat);
    Matrix coords(u.field(), u.dim(), k.dim());
    for (int i = 0; i < u.dim(); ++i)
        for (int j = 0; j < k.dim(); ++j) coords.set(i, j, k.basis().at(i, j));
    return Subspace::span(u.basis() * coords);
}

bool contains(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim()) throw DimensionMismatch("subspace contains ambient");
    return static_cast<bool>(solve_matrix(u.basis(), v.basis()));
}

Subspace left_radical(const Matrix& b, const Subspace& u, const Subspace& v) {
    if (b.rows() != u.ambient_dim() || b.cols() != v.ambient_dim())
        throw DimensionMismatch("left_radical pairing shape");
    // u^T B v = 0 for all v in V  <=>  (V^T B^T) u = 0, in U-coordinates
    Matrix cond = v.basis().transpose() * b.transpose() * u.basis();
    Subspace coords = kernel(cond);
    return Subspace::span(u.basis() * coords.basis());
}

Subspace perp(const Matrix& b, const Subspace& vp, PerpSide side) {
    if (side == PerpSide::right) {
        if (b.rows() != vp.ambient_dim()) throw DimensionMismatch("perp pairing shape");
        return kernel(vp.basis().transpose() * b);
    }
    if (b.cols() != vp.ambient_dim()) throw DimensionMismatch("perp pairing shape");
    return kernel(vp.basis().transpose() * b.transpose());
}

Matrix saturate(const Matrix& m) {
    const FieldDesc& fd = m.field();
    if (rank(m) != m.cols()) throw NotFullRank("saturate requires full column rank over K");
    Matrix r(m);
    auto scale_min_val = [&](int j) {
        long mv = std::numeric_limits<long>::max();
        for (int i = 0; i < r.rows(); ++i) {
            auto v = r.at(i, j).valuation();
            if (v && *v < mv) mv = *v;
        }
        if (mv == std::numeric_limits<long>::max() || mv == 0) return;
        Scalar f = mv > 0 ? Scalar::s_pow(fd, static_cast<int>(mv)).inv() : Scalar::s_pow(fd, static_cast<int>(-mv));
        for (int i = 0; i < r.rows(); ++i) r.set(i, j, r.at(i, j) * f);
    };
    for (int j = 0; j < r.cols(); ++j) scale_min_val(j);
    for (;;) {
        Subspace k = kernel(r.specialize0());
        if (k.dim() == 0) break;
        // replace one participating column by (combination)/s
        std::vector<Scalar> x;
        x.reserve(static_cast<std::size_t>(r.cols()));
        for (int i = 0; i < r.cols(); ++i) x.push_back(k.basis().at(i, 0));
        std::vector<Scalar> combo = r.apply(x);
        int j = -1;
        for (int i = r.cols() - 1; i >= 0; --i)
            if (!x[static_cast<std::size_t>(i)].is_zero()) {
                j = i;
                break;
            }
        Scalar sinv = Scalar::s(fd).inv();
        for (int i = 0; i < r.rows(); ++i) r.set(i, j, combo[static_cast<std::size_t>(i)] * sinv);
        scale_min_val(j);
    }
    return r;
}

}  // namespace lgrass
