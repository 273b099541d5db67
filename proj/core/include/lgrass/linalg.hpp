#ifndef LGRASS_LINALG_HPP
#define LGRASS_LINALG_HPP

#include <optional>

#include "lgrass/matrix.hpp"

namespace lgrass {

/// Row echelon data. R is the (reduced) echelon form, pivot_cols the pivot
/// column of each pivot row in order.
struct Echelon {
    Matrix reduced;
    std::vector<int> pivot_cols;
    int rank() const { return static_cast<int>(pivot_cols.size()); }
};

/// Exact Gaussian elimination with deterministic pivoting: leftmost column,
/// then lowest valuation, then first nonzero row.
Echelon row_reduce(const Matrix& m);

int rank(const Matrix& m);
Scalar det(const Matrix& m);
Matrix inverse(const Matrix& m);

/// Subspace of K^ambient, basis vectors as columns, kept in reduced
/// column-echelon canonical form so equality is matrix equality.
class Subspace {
public:
    static Subspace span(const Matrix& basis_columns);
    static Subspace zero(const FieldDesc& fd, int ambient);
    static Subspace full(const FieldDesc& fd, int ambient);

    int ambient_dim() const { return basis_.rows(); }
    int dim() const { return basis_.cols(); }
    const Matrix& basis() const { return basis_; }
    const FieldDesc& field() const { return basis_.field(); }

    bool operator==(const Subspace& o) const { return basis_ == o.basis_; }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

private:
    explicit Subspace(Matrix basis) : basis_(std::move(basis)) {}
    Matrix basis_;
};

Subspace kernel(const Matrix& m);
Subspace image(const Matrix& m);
/// One solution of M x = v, or nullopt if inconsistent.
std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& v);
/// Columnwise solve M X = B, or nullopt if any column is inconsistent.
std::optional<Matrix> solve_matrix(const Matrix& m, const Matrix& b);

Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersect(const Subspace& u, const Subspace& v);
bool contains(const Subspace& u, const Subspace& v);

/// {u in U : u^T B v = 0 for all v in V}, as a subspace of the ambient space.
Subspace left_radical(const Matrix& b, const Subspace& u, const Subspace& v);

enum class PerpSide { left, right };
/// right: {w : v^T B w = 0 for all v in Vp}; left: {w : w^T B v = 0}.
Subspace perp(const Matrix& b, const Subspace& vp, PerpSide side);

/// Column saturation over the DVR k[s]_(s): same K-column-span, all entries
/// of valuation >= 0, full column rank mod s.
Matrix saturate(const Matrix& m);

}  // namespace lgrass

#endif
