#include "doctest.h"

#include "lgrass/linalg.hpp"
#include "lgrass/rng.hpp"

using namespace lgrass;

namespace {

const FieldDesc kQ = FieldDesc::rationals();
const FieldDesc kFp = FieldDesc::prime(10007);

Matrix diag_s_pattern(const FieldDesc& fd, const std::vector<int>& s_flags) {
    int d = static_cast<int>(s_flags.size());
    Matrix m(fd, d, d);
    for (int i = 0; i < d; ++i)
        m.set(i, i, s_flags[static_cast<std::size_t>(i)] ? Scalar::s(fd) : Scalar(fd, 1));
    return m;
}

Subspace coordinate_span(const FieldDesc& fd, int ambient, const std::vector<int>& coords) {
    Matrix m(fd, ambient, static_cast<int>(coords.size()));
    for (int j = 0; j < static_cast<int>(coords.size()); ++j)
        m.set(coords[static_cast<std::size_t>(j)], j, Scalar(fd, 1));
    return Subspace::span(m);
}

Matrix random_matrix(Rng& rng, const FieldDesc& fd, int rows, int cols) {
    Matrix m(fd, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.set(i, j, Scalar(rng.element(fd)));
    return m;
}

Matrix random_invertible(Rng& rng, const FieldDesc& fd, int d) {
    for (;;) {
        Matrix m = random_matrix(rng, fd, d, d);
        if (rank(m) == d) return m;
    }
}

Subspace random_subspace(Rng& rng, const FieldDesc& fd, int ambient, int dim) {
    for (;;) {
        Matrix m = random_matrix(rng, fd, ambient, dim);
        if (rank(m) == dim) return Subspace::span(m);
    }
}

// The central antidiagonal pairing of the second worked instance.
Matrix antidiag_form(const FieldDesc& fd) {
    Matrix b(fd, 4, 4);
    b.set(0, 3, Scalar(fd, 1));
    b.set(1, 2, Scalar(fd, 1));
    b.set(2, 1, Scalar(fd, -1));
    b.set(3, 0, Scalar(fd, -1));
    return b;
}

}  // namespace

TEST_CASE("rank, kernel, image on the diag(1,1,s,s) example") {
    Matrix f = diag_s_pattern(kQ, {0, 0, 1, 1});
    CHECK(rank(Matrix::from_rows(kQ, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}})) == 2);
    // over K, s is a unit: kernel is zero
    CHECK(kernel(f).dim() == 0);
    // at the s = 0 fiber: kernel = span(e3, e4)
    CHECK(kernel(f.specialize0()) == coordinate_span(kQ, 4, {2, 3}));
    CHECK(image(f.specialize0()) == coordinate_span(kQ, 4, {0, 1}));
}

TEST_CASE("subspace lattice operations") {
    Subspace e12 = coordinate_span(kQ, 3, {0, 1});
    Subspace e23 = coordinate_span(kQ, 3, {1, 2});
    CHECK(intersect(e12, e23) == coordinate_span(kQ, 3, {1}));
    CHECK(sum(coordinate_span(kQ, 3, {0}), coordinate_span(kQ, 3, {1})) == e12);
    Matrix v(kQ, 3, 1);
    v.set(0, 0, Scalar(kQ, 1));
    v.set(1, 0, Scalar(kQ, 1));
    CHECK(contains(Subspace::full(kQ, 3), Subspace::span(v)));
    CHECK(contains(e12, Subspace::span(v)));
    CHECK_FALSE(contains(e23, Subspace::span(v)));
    CHECK_THROWS_AS(sum(e12, coordinate_span(kQ, 4, {0})), DimensionMismatch);
}

TEST_CASE("solve and inverse") {
    Rng rng(5);
    Matrix m = random_invertible(rng, kFp, 4);
    Matrix inv = inverse(m);
    CHECK(m * inv == Matrix::identity(kFp, 4));
    Matrix b = random_matrix(rng, kFp, 4, 2);
    auto x = solve_matrix(m, b);
    REQUIRE(x.has_value());
    CHECK(m * *x == b);
    // inconsistent system
    Matrix sing(kFp, 2, 1);
    sing.set(0, 0, Scalar(kFp, 1));
    std::vector<Scalar> rhs{Scalar(kFp), Scalar(kFp, 1)};
    CHECK_FALSE(solve(sing, rhs).has_value());
}

TEST_CASE("left_radical on worked pairings") {
    Matrix b = antidiag_form(kQ);
    Subspace full = Subspace::full(kQ, 4);
    CHECK(left_radical(b, full, full).dim() == 0);
    CHECK(left_radical(Matrix(kQ, 4, 4), full, full) == full);
    // restriction to a proper V only constrains against V
    CHECK(left_radical(b, full, coordinate_span(kQ, 4, {0, 1})) == coordinate_span(kQ, 4, {0, 1}));
}

TEST_CASE("perp on worked pairings") {
    Matrix b = antidiag_form(kQ);
    CHECK(perp(b, Subspace::zero(kQ, 4), PerpSide::right) == Subspace::full(kQ, 4));
    CHECK(perp(b, coordinate_span(kQ, 4, {0, 1}), PerpSide::right) == coordinate_span(kQ, 4, {0, 1}));
    Rng rng(6);
    for (int t = 0; t < 10; ++t) {
        Matrix nb = random_invertible(rng, kFp, 5);
        int tdim = 1 + static_cast<int>(rng.below(4));
        Subspace v = random_subspace(rng, kFp, 5, tdim);
        CHECK(perp(nb, v, PerpSide::right).dim() == 5 - tdim);
        CHECK(perp(nb, v, PerpSide::left).dim() == 5 - tdim);
    }
}

TEST_CASE("saturate on worked instances") {
    Matrix col(kQ, 2, 1);
    col.set(0, 0, Scalar::s(kQ));
    col.set(1, 0, Scalar::s_pow(kQ, 2));
    Matrix sat = saturate(col);
    CHECK(sat.at(0, 0).is_one());
    CHECK(sat.at(1, 0) == Scalar::s(kQ));

    // columns (e1 + s e2, e1): same K-span, full rank mod s
    Matrix m(kQ, 2, 2);
    m.set(0, 0, Scalar(kQ, 1));
    m.set(1, 0, Scalar::s(kQ));
    m.set(0, 1, Scalar(kQ, 1));
    Matrix sm = saturate(m);
    CHECK(Subspace::span(sm) == Subspace::span(m));
    CHECK(rank(sm.specialize0()) == 2);

    Matrix id = Matrix::identity(kQ, 3);
    CHECK(saturate(id) == id);

    Matrix dep(kQ, 2, 2);  // rank 1 over K
    dep.set(0, 0, Scalar(kQ, 1));
    dep.set(0, 1, Scalar::s(kQ));
    CHECK_THROWS_AS(saturate(dep), NotFullRank);
}

TEST_CASE("rank-transpose and rank-nullity on random matrices") {
    Rng rng(7);
    for (int t = 0; t < 50; ++t) {
        int rows = 1 + static_cast<int>(rng.below(5));
        int cols = 1 + static_cast<int>(rng.below(5));
        Matrix m = random_matrix(rng, kFp, rows, cols);
        CHECK(rank(m) == rank(m.transpose()));
        CHECK(rank(m) + kernel(m).dim() == cols);
        CHECK(image(m).dim() == rank(m));
    }
}

TEST_CASE("saturate preserves span on random family matrices") {
    Rng rng(8);
    for (int t = 0; t < 25; ++t) {
        int d = 3 + static_cast<int>(rng.below(3));
        int r = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(d - 1)));
        Matrix m(kFp, d, r);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < r; ++j) {
                Scalar v = Scalar(rng.element(kFp)) + Scalar::s(kFp) * Scalar(rng.element(kFp));
                m.set(i, j, Scalar::s_pow(kFp, static_cast<int>(rng.below(3))) * v);
            }
        if (rank(m) < r) continue;
        Matrix sm = saturate(m);
        CHECK(Subspace::span(sm) == Subspace::span(m));
        CHECK(rank(sm.specialize0()) == r);
    }
}

TEST_CASE("perp lemma property test") {
    // For nondegenerate B : V x W and W1 strictly inside W2 <= W, V' <= V with
    // perp(V') cap W2 <= W1, the inclusion V' cap perp(W2) < V' cap perp(W1)
    // is strict.
    Rng rng(9);
    int found = 0;
    while (found < 25) {
        int d = 3 + static_cast<int>(rng.below(4));
        Matrix b = random_invertible(rng, kFp, d);
        int t2 = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(d)));
        int t1 = static_cast<int>(rng.below(static_cast<std::uint64_t>(t2)));
        Subspace w2 = random_subspace(rng, kFp, d, t2);
        Subspace w1 = intersect(w2, random_subspace(rng, kFp, d, d - (t2 - t1)));
        if (w1.dim() >= w2.dim() || !contains(w2, w1)) continue;
        int tv = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(d)));
        Subspace vp = random_subspace(rng, kFp, d, tv);
        // hypothesis filter
        if (!contains(w1, intersect(perp(b, vp, PerpSide::right), w2))) continue;
        ++found;
        Subspace lhs = intersect(vp, perp(b, w2, PerpSide::left));
        Subspace rhs = intersect(vp, perp(b, w1, PerpSide::left));
        CHECK(contains(rhs, lhs));
        CHECK(lhs.dim() < rhs.dim());
    }
}
