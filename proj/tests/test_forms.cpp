#include "doctest.h"

#include "lgrass/grassmann.hpp"

using namespace lgrass;

namespace {

const FieldDesc kQ = FieldDesc::rationals();
const FieldDesc kFp = FieldDesc::prime(10007);

// blockdiag(a*J, b*J) with J = [[0,1],[-1,0]], 4x4.
Matrix two_j_blocks(const FieldDesc& fd, const Scalar& a, const Scalar& b) {
    Matrix m(fd, 4, 4);
    m.set(0, 1, a);
    m.set(1, 0, -a);
    m.set(2, 3, b);
    m.set(3, 2, -b);
    return m;
}

LinkedChain chain51(const FieldDesc& fd, ChainMode mode) { return standard_chain(fd, {2, 0, 2}, mode); }
LinkedChain chain52(const FieldDesc& fd) { return standard_chain(fd, {2, 2}, ChainMode::fiber); }

Matrix random_alternating(Rng& rng, const FieldDesc& fd, int d) {
    Matrix a(fd, d, d);
    for (int p = 0; p < d; ++p)
        for (int q = p + 1; q < d; ++q) {
            Fk x = rng.element(fd);
            a.set(p, q, Scalar(x));
            a.set(q, p, Scalar(-x));
        }
    return a;
}

Matrix random_square(Rng& rng, const FieldDesc& fd, int d) {
    Matrix a(fd, d, d);
    for (int p = 0; p < d; ++p)
        for (int q = 0; q < d; ++q) a.set(p, q, Scalar(rng.element(fd)));
    return a;
}

}  // namespace

TEST_CASE("epsilon and epsilon_hat") {
    CHECK(epsilon(2, 3, 4) == 1);
    CHECK(epsilon(2, 2, 4) == 0);
    CHECK(epsilon_hat(1, 2, 4) == 1);
    for (int two_m = 2; two_m <= 8; ++two_m)
        for (int i = 1; i <= 6; ++i) {
            int j = two_m - i;
            if (j < 1 || j > 6) continue;
            CHECK(epsilon(i, j, two_m) + epsilon_hat(i, j, two_m) == 0);
        }
}

TEST_CASE("epsilon consistency identities, exhaustive") {
    for (int n = 1; n <= 6; ++n)
        for (int two_m = 2; two_m <= 2 * n; ++two_m)
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) {
                    CHECK(epsilon(i, j, two_m) + epsilon_hat(i - 1, j, two_m) == 1);
                    CHECK(epsilon(i + 1, j, two_m) + epsilon_hat(i, j, two_m) == 1);
                    CHECK(epsilon(i, j, two_m) + epsilon_hat(i, j - 1, two_m) == 1);
                    CHECK(epsilon(i, j + 1, two_m) + epsilon_hat(i, j, two_m) == 1);
                }
}

TEST_CASE("exponent path counting") {
    CHECK(exponent(3, 3, 1, 1, 4, 3) == 2);
    CHECK(exponent(2, 3, 2, 3, 4, 3) == 0);
    CHECK(exponent(1, 1, 2, 2, 4, 3) == 0);
    // the obstruction exponent: the middle block of B_{1,3} at two_m = 4
    CHECK(exponent(2, 2, 1, 3, 4, 3) == 1);
    CHECK_THROWS_AS(exponent(0, 1, 1, 1, 4, 3), IndexOutOfRange);
}

TEST_CASE("fixture 5.1 form matches the printed matrices") {
    Fixture fx = example_fixture("5.1", kQ);
    Scalar one(kQ, 1), s2 = Scalar::s_pow(kQ, 2);
    CHECK(fx.form.two_m == 4);
    CHECK(fx.form.b(1, 1) == two_j_blocks(kQ, one, s2));
    CHECK(fx.form.b(2, 2) == two_j_blocks(kQ, one, one));
    CHECK(fx.form.b(3, 3) == two_j_blocks(kQ, s2, one));
    CHECK(fx.form.b(1, 3) == two_j_blocks(kQ, one, one));
    CHECK(check_compatibility(fx.form, fx.chain).pass());
    CHECK(check_alternating(fx.form).pass());
    CHECK(check_induced_relations(fx.form, fx.chain).pass());
}

TEST_CASE("compatibility catches a corrupted grid") {
    Fixture fx = example_fixture("5.1", kQ);
    CHECK(check_compatibility(LinkedForm::zero(kQ, 3, 4, 4), fx.chain).pass());
    LinkedForm broken = fx.form;
    broken.set_b(1, 1, fx.form.b(2, 2));  // drops the s^2 factors
    CHECK_FALSE(check_compatibility(broken, fx.chain).pass());
}

TEST_CASE("alternating check") {
    CHECK(check_alternating(example_fixture("5.2", kQ).form).pass());
    LinkedForm sym = LinkedForm::zero(kQ, 1, 2, 2);
    sym.set_b(1, 1, Matrix::identity(kQ, 2));
    CHECK_FALSE(check_alternating(sym).pass());
}

TEST_CASE("extend_form reproduces the 5.1 fiber matrices") {
    LinkedChain c = chain51(kQ, ChainMode::fiber);
    WDecomp w = structure_decomposition(c);
    Matrix a(kQ, 4, 4);  // blockdiag(J, J) on W1 + W3
    a.set(0, 1, Scalar(kQ, 1));
    a.set(1, 0, Scalar(kQ, -1));
    a.set(2, 3, Scalar(kQ, 1));
    a.set(3, 2, Scalar(kQ, -1));
    LinkedForm f = extend_form(c, RestrictedForm{w, a}, 4);
    Scalar one(kQ, 1), zero(kQ);
    CHECK(f.b(2, 2) == two_j_blocks(kQ, one, one));
    CHECK(f.b(1, 3) == two_j_blocks(kQ, one, one));
    CHECK(f.b(1, 1) == two_j_blocks(kQ, one, zero));  // s^2 block becomes 0
    CHECK(f.b(3, 3) == two_j_blocks(kQ, zero, one));
    CHECK(check_compatibility(f, c).pass());
    CHECK(check_alternating(f).pass());

    LinkedForm z = extend_form(c, RestrictedForm{w, Matrix(kQ, 4, 4)}, 4);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) CHECK(z.b(i, j).is_zero());
}

TEST_CASE("restrict_form reads the 5.1 restriction off the printed matrices") {
    Fixture fx = example_fixture("5.1", kQ);
    WDecomp w = structure_decomposition(fiber_chain(fx.chain));
    RestrictedForm r = restrict_form(fiber_form(fx.form), w);
    Matrix expect(kQ, 4, 4);
    expect.set(0, 1, Scalar(kQ, 1));
    expect.set(1, 0, Scalar(kQ, -1));
    expect.set(2, 3, Scalar(kQ, 1));
    expect.set(3, 2, Scalar(kQ, -1));
    CHECK(r.a == expect);
    CHECK(r.is_alternating());
}

TEST_CASE("extend/restrict round trip on random chains") {
    Rng rng(41);
    for (const auto& spec : std::vector<std::pair<std::vector<int>, int>>{
             {{2, 0, 2}, 4}, {{1, 2, 1}, 3}, {{2, 2, 2}, 5}, {{1, 1, 1, 1}, 5}}) {
        LinkedChain c = standard_chain(kFp, spec.first, ChainMode::fiber);
        WDecomp w = structure_decomposition(c);
        for (int t = 0; t < 5; ++t) {
            bool alt = (t % 2 == 0);
            Matrix a = alt ? random_alternating(rng, kFp, c.d) : random_square(rng, kFp, c.d);
            LinkedForm f = extend_form(c, RestrictedForm{w, a}, spec.second);
            CHECK(check_compatibility(f, c).pass());
            CHECK(check_induced_relations(f, c).pass());
            if (alt) CHECK(check_alternating(f).pass());
            CHECK(restrict_form(f, w).a == a);
        }
    }
}

TEST_CASE("form_space_dimension on worked chains") {
    LinkedChain c51 = chain51(kQ, ChainMode::fiber);
    CHECK(form_space_dimension(c51, 4, FormVariant::bilinear) == 16);
    CHECK(form_space_dimension(c51, 4, FormVariant::alternating) == 6);
    for (int d = 1; d <= 5; ++d) {
        LinkedChain triv = standard_chain(kFp, {d}, ChainMode::fiber);
        CHECK(form_space_dimension(triv, 2, FormVariant::alternating) == d * (d - 1) / 2);
        CHECK(form_space_dimension(triv, 2, FormVariant::bilinear) == d * d);
    }
    CHECK(form_space_dimension(chain52(kQ), 4, FormVariant::bilinear) == 16);
}

TEST_CASE("check_symplectic on worked forms") {
    Fixture fx = example_fixture("5.1", kQ);
    SymplecticReport rep = check_symplectic(fx.form, fx.chain);
    CHECK(rep.pass());

    SymplecticReport zero = check_symplectic(LinkedForm::zero(kQ, 3, 4, 4), fx.chain);
    CHECK_FALSE(zero.pass());
    CHECK(zero.clauses.summary().find("(I)") != std::string::npos);

    Fixture fx2 = example_fixture("5.2", kQ);
    SymplecticReport rep2 = check_symplectic(fx2.form, fx2.chain);
    bool flagged = false;
    for (const std::string& d : rep2.diagonal_diagnostics)
        if (d.find("1,1") != std::string::npos) flagged = true;
    CHECK(flagged);
    CHECK(fx2.form.b(1, 1).is_zero());
}

TEST_CASE("standard_symplectic_form generates and validates") {
    LinkedChain c = standard_chain(kFp, {2, 0, 2}, ChainMode::family);
    LinkedForm f = standard_symplectic_form(c, 3);
    CHECK(f.two_m == 4);
    CHECK(check_symplectic(f, c).pass());
    CHECK(check_compatibility(f, c).pass());
    CHECK(check_alternating(f).pass());
    // at s = 0 the (1,3) pairing is block upper-triangular: lower-left block 0
    Matrix b13 = f.b(1, 3).specialize0();
    for (int i = 2; i < 4; ++i)
        for (int j = 0; j < 2; ++j) CHECK(b13.at(i, j).is_zero());

    // n = 1: any even d works, odd d exhausts
    CHECK_NOTHROW(standard_symplectic_form(standard_chain(kFp, {4}, ChainMode::family), 1));
    CHECK_THROWS_AS(standard_symplectic_form(standard_chain(kFp, {3}, ChainMode::family), 1),
                    GenerationExhausted);

    // nonzero middle blocks force a degenerate (1, n) pairing at two_m = n+1
    CHECK_THROWS_AS(standard_symplectic_form(standard_chain(kFp, {2, 2, 2}, ChainMode::family), 1),
                    GenerationExhausted);

    // even end blocks with zero middle do admit forms, even asymmetrically
    CHECK_NOTHROW(standard_symplectic_form(standard_chain(kFp, {2, 0, 4}, ChainMode::family), 1));
}

TEST_CASE("fiber_form specializes") {
    Fixture fx = example_fixture("5.1", kQ);
    LinkedForm fib = fiber_form(fx.form);
    CHECK(fib.b(1, 1) == two_j_blocks(kQ, Scalar(kQ, 1), Scalar(kQ)));
    CHECK(check_compatibility(fib, fiber_chain(fx.chain)).pass());
}
