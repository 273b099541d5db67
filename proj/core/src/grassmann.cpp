#include "lgrass/grassmann.hpp"

#include <algorithm>

namespace lgrass {

void LinkedSubspace::check_shape() const {
    if (n < 1 || d < 1 || r < 0 || r > d) throw InvalidConfig("subspace requires 1 <= n, 0 <= r <= d");
    if (static_cast<int>(bases.size()) != n) throw DimensionMismatch("subspace expects one basis per level");
    for (const Matrix& m : bases) {
        if (m.rows() != d || m.cols() != r || m.field() != field) throw DimensionMismatch("subspace basis shape");
        if (rank(m) != r) throw NotFullRank("subspace basis is column-rank deficient");
    }
}

Diagnostic check_linked(const LinkedChain& c, const LinkedSubspace& f) {
    c.check_shape();
    f.check_shape();
    if (f.n != c.n || f.d != c.d || f.field != c.field) throw DimensionMismatch("chain/subspace shape");
    Diagnostic diag;
    for (int i = 1; i <= c.n - 1; ++i) {
        const Matrix& fi = c.f[static_cast<std::size_t>(i - 1)];
        const Matrix& gi = c.fdual[static_cast<std::size_t>(i - 1)];
        if (!solve_matrix(f.bases[static_cast<std::size_t>(i)], fi * f.bases[static_cast<std::size_t>(i - 1)]))
            diag.fail("f_" + std::to_string(i) + " F_" + std::to_string(i) + " not inside F_" + std::to_string(i + 1));
        if (!solve_matrix(f.bases[static_cast<std::size_t>(i - 1)], gi * f.bases[static_cast<std::size_t>(i)]))
            diag.fail("f^" + std::to_string(i) + " F_" + std::to_string(i + 1) + " not inside F_" + std::to_string(i));
    }
    return diag;
}

LinkedChain induced_chain(const LinkedChain& c, const LinkedSubspace& f) {
    c.check_shape();
    f.check_shape();
    if (f.n != c.n || f.d != c.d) throw DimensionMismatch("chain/subspace shape");
    LinkedChain r{c.field, c.mode, c.n, f.r, {}, {}};
    for (int i = 1; i <= c.n - 1; ++i) {
        auto fi = solve_matrix(f.bases[static_cast<std::size_t>(i)],
                               c.f[static_cast<std::size_t>(i - 1)] * f.bases[static_cast<std::size_t>(i - 1)]);
        auto gi = solve_matrix(f.bases[static_cast<std::size_t>(i - 1)],
                               c.fdual[static_cast<std::size_t>(i - 1)] * f.bases[static_cast<std::size_t>(i)]);
        if (!fi || !gi) throw NotLinked("subspace is not closed under the chain maps at level " + std::to_string(i));
        r.f.push_back(std::move(*fi));
        r.fdual.push_back(std::move(*gi));
    }
    return r;
}

Diagnostic check_exact(const LinkedChain& c, const LinkedSubspace& f) {
    Diagnostic lk = check_linked(c, f);
    if (!lk.pass()) throw NotLinked(lk.summary());
    return check_s_linked(fiber_chain(induced_chain(c, f)));
}

Diagnostic check_isotropic(const LinkedSubspace& f, const LinkedForm& form) {
    f.check_shape();
    form.check_shape();
    if (f.n != form.n || f.d != form.d) throw DimensionMismatch("form/subspace shape");
    Diagnostic diag;
    for (int i = 1; i <= f.n; ++i)
        for (int j = 1; j <= f.n; ++j)
            if (!(f.bases[static_cast<std::size_t>(i - 1)].transpose() * form.b(i, j) *
                  f.bases[static_cast<std::size_t>(j - 1)])
                     .is_zero())
                diag.fail("<,>_{" + std::to_string(i) + "," + std::to_string(j) + "} does not vanish on F");
    return diag;
}

namespace {

/// Standard basis vectors completing the column span of m to the ambient
/// space, in index order. Deterministic complement representatives.
Matrix pivot_complement_of(const Matrix& m) {
    const FieldDesc& fd = m.field();
    int d = m.rows();
    Matrix acc = m;
    std::vector<int> chosen;
    for (int j = 0; j < d && acc.cols() < d; ++j) {
        Matrix ej(fd, d, 1);
        ej.set(j, 0, Scalar(fd, 1));
        Matrix trial = acc.hconcat(ej);
        if (rank(trial) == trial.cols()) {
            acc = trial;
            chosen.push_back(j);
        }
    }
    Matrix out(fd, d, static_cast<int>(chosen.size()));
    for (int k = 0; k < static_cast<int>(chosen.size()); ++k)
        out.set(chosen[static_cast<std::size_t>(k)], k, Scalar(fd, 1));
    return out;
}

}  // namespace

TangentBasis tangent_space(const LinkedChain& c, const LinkedSubspace& f, const WDecomp& wf) {
    Diagnostic ex = check_exact(c, f);
    if (!ex.pass()) throw NotExact(ex.summary());
    if (static_cast<int>(wf.w.size()) != c.n) throw DimensionMismatch("decomposition levels");
    TangentBasis tb;
    for (int i = 1; i <= c.n; ++i) {
        tb.complements.push_back(pivot_complement_of(f.bases[static_cast<std::size_t>(i - 1)]));
        const Subspace& wi = wf.w[static_cast<std::size_t>(i - 1)];
        if (wi.ambient_dim() != f.r) throw DimensionMismatch("decomposition ambient must be the F-coordinates");
        for (int t = 0; t < wi.dim(); ++t)
            tb.w_basis.emplace_back(i, f.bases[static_cast<std::size_t>(i - 1)] * wi.basis().column(t));
    }
    int g = 0;
    for (int i = 1; i <= c.n; ++i) {
        const Subspace& wi = wf.w[static_cast<std::size_t>(i - 1)];
        const Matrix& comp = tb.complements[static_cast<std::size_t>(i - 1)];
        for (int t = 0; t < wi.dim(); ++t, ++g)
            for (int k = 0; k < comp.cols(); ++k)
                tb.elems.push_back(TangentVector{i, g, tb.w_basis[static_cast<std::size_t>(g)].second, comp.column(k)});
    }
    if (tb.dim() != f.r * (f.d - f.r)) throw DecompositionFailed("tangent basis has wrong dimension");
    return tb;
}

Matrix tangent_form_map(const LinkedChain& c, const LinkedForm& form, const LinkedSubspace& f, const WDecomp& wf) {
    Diagnostic iso = check_isotropic(f, form);
    if (!iso.pass()) throw NotIsotropic(iso.summary());
    TangentBasis tb = tangent_space(c, f, wf);
    LinkedForm f0 = fiber_form(form);
    int r = f.r;
    int nrows = r * (r - 1) / 2;
    Matrix out(c.field, nrows, tb.dim());
    int row = 0;
    for (int p = 0; p < r; ++p)
        for (int q = p + 1; q < r; ++q, ++row) {
            int a = tb.w_basis[static_cast<std::size_t>(p)].first;
            int b = tb.w_basis[static_cast<std::size_t>(q)].first;
            const Matrix& x = tb.w_basis[static_cast<std::size_t>(p)].second;
            const Matrix& y = tb.w_basis[static_cast<std::size_t>(q)].second;
            for (int e = 0; e < tb.dim(); ++e) {
                const TangentVector& tv = tb.elems[static_cast<std::size_t>(e)];
                Scalar v(c.field);
                if (tv.wglobal == p) v = v + (tv.dir.transpose() * f0.b(a, b) * y).at(0, 0);
                if (tv.wglobal == q) v = v + (x.transpose() * f0.b(a, b) * tv.dir).at(0, 0);
                if (!v.is_zero()) out.set(row, e, v);
            }
        }
    return out;
}

TangentReport verify_point(const LinkedChain& c, const LinkedForm& form, const LinkedSubspace& f) {
    LinkedChain c0 = fiber_chain(c);
    LinkedForm f0 = fiber_form(form);
    LinkedSubspace p = f;
    for (Matrix& m : p.bases) m = m.specialize0();

    Diagnostic ex = check_exact(c0, p);
    if (!ex.pass()) throw NotExact(ex.summary());
    LinkedChain ind = induced_chain(c0, p);
    WDecomp wf = structure_decomposition(ind);

    TangentReport rep;
    rep.lg_tangent_dim = p.r * (p.d - p.r);
    rep.expected_codim = p.r * (p.r - 1) / 2;
    rep.form_target_dim = form_space_dimension(ind, form.two_m, FormVariant::alternating);
    rep.tangent_map_rank = rank(tangent_form_map(c0, f0, p, wf));
    rep.lag_tangent_dim = rep.lg_tangent_dim - rep.tangent_map_rank;
    rep.verdict = rep.tangent_map_rank == rep.expected_codim;
    return rep;
}

LinkedSubspace push_and_saturate(const LinkedChain& c, const Subspace& f1) {
    c.check_shape();
    if (c.mode != ChainMode::family) throw InvalidConfig("push_and_saturate needs a family-mode chain");
    if (f1.ambient_dim() != c.d) throw DimensionMismatch("level-1 subspace ambient");
    LinkedSubspace out{c.field, c.n, c.d, f1.dim(), {}};
    for (int i = 1; i <= c.n; ++i) {
        Matrix pushed = composite(c, 1, i) * f1.basis();
        if (f1.dim() > 0) pushed = saturate(pushed);
        out.bases.push_back(pushed.specialize0());
    }
    out.check_shape();
    return out;
}

LinkedSubspace random_exact_isotropic(const LinkedChain& c, const LinkedForm& form, int r, std::uint64_t seed) {
    c.check_shape();
    form.check_shape();
    if (c.mode != ChainMode::family) throw InvalidConfig("random_exact_isotropic needs a family-mode chain");
    if (r < 0 || r > c.d) throw InvalidConfig("rank out of range");
    int n = c.n, d = c.d;
    if (r == 0) {
        // the zero subspace is vacuously linked, exact, and isotropic
        std::vector<Matrix> bases(static_cast<std::size_t>(n), Matrix(c.field, d, 0));
        return LinkedSubspace{c.field, n, d, 0, std::move(bases)};
    }

    // Pulled-back pairings M_{i,j} = f_{1,i}^T B_{i,j} f_{1,j} on level 1.
    std::vector<Matrix> m;
    m.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            m.push_back(composite(c, 1, i).transpose() * form.b(i, j) * composite(c, 1, j));

    LinkedChain c0 = fiber_chain(c);
    LinkedForm form0 = fiber_form(form);
    std::string last = "no attempt recorded";
    for (int attempt = 0; attempt < 64; ++attempt) {
        Rng rng = Rng::derived(seed, static_cast<std::uint64_t>(attempt));
        Matrix f1(c.field, d, 0);
        bool built = true;
        for (int t = 0; t < r && built; ++t) {
            // rows: both orientations of every pairing against each chosen column
            Matrix constraints(c.field, 2 * n * n * f1.cols(), d);
            int rr = 0;
            for (int col = 0; col < f1.cols(); ++col) {
                Matrix w = f1.column(col);
                for (const Matrix& mm : m) {
                    Matrix right = mm * w;           // constraint x^T (M w) = 0
                    Matrix left = w.transpose() * mm;  // constraint (w^T M) x = 0
                    for (int k = 0; k < d; ++k) {
                        constraints.set(rr, k, right.at(k, 0));
                        constraints.set(rr + 1, k, left.at(0, k));
                    }
                    rr += 2;
                }
            }
            Subspace sol = kernel(constraints);
            built = false;
            for (int inner = 0; inner < 8 && !built; ++inner) {
                Matrix coeffs(c.field, sol.dim(), 1);
                for (int k = 0; k < sol.dim(); ++k) coeffs.set(k, 0, Scalar(rng.element(c.field)));
                Matrix x = sol.basis() * coeffs;
                Matrix trial = f1.hconcat(x);
                if (rank(trial) == trial.cols()) {
                    f1 = trial;
                    built = true;
                }
            }
        }
        if (!built) {
            last = "no isotropic extension found";
            continue;
        }
        LinkedSubspace p = push_and_saturate(c, Subspace::span(f1));
        Diagnostic lk = check_linked(c0, p);
        if (!lk.pass()) {
            last = lk.summary();
            continue;
        }
        Diagnostic ex = check_s_linked(fiber_chain(induced_chain(c0, p)));
        if (!ex.pass()) {
            last = ex.summary();
            continue;
        }
        Diagnostic iso = check_isotropic(p, form0);
        if (!iso.pass()) {
            last = iso.summary();
            continue;
        }
        return p;
    }
    throw GenerationExhausted("no exact isotropic point of rank " + std::to_string(r) + " after 64 attempts; last: " + last);
}

namespace {

/// d x d block-diagonal matrix of 2x2 blocks a*J, b*J with J = [[0,1],[-1,0]].
Matrix two_j_blocks(const FieldDesc& fd, const Scalar& a, const Scalar& b) {
    Matrix m(fd, 4, 4);
    m.set(0, 1, a);
    m.set(1, 0, -a);
    m.set(2, 3, b);
    m.set(3, 2, -b);
    return m;
}

}  // namespace

LinkedSubspace chart_subspace_51(const FieldDesc& fd, const Fk& a1, const Fk& a2, const Fk& b1, const Fk& b2) {
    Scalar s = Scalar::s(fd), s2 = Scalar::s_pow(fd, 2);
    Scalar sa1(a1), sa2(a2), sb1(b1), sb2(b2);
    LinkedSubspace f{fd, 3, 4, 2, {}};
    auto level = [&](const Scalar& a2s, const Scalar& b1s) {
        Matrix m(fd, 4, 2);
        m.set(0, 0, Scalar(fd, 1));
        m.set(1, 0, sa1);
        m.set(3, 0, -a2s);
        m.set(1, 1, b1s);
        m.set(2, 1, Scalar(fd, 1));
        m.set(3, 1, sb2);
        return m;
    };
    f.bases.push_back(level(sa2, s2 * sb1));
    f.bases.push_back(level(s * sa2, s * sb1));
    f.bases.push_back(level(s2 * sa2, sb1));
    return f;
}

Diagnostic chart_residual_check_51(const FieldDesc& fd, std::uint64_t seed, int points) {
    Fixture fx = example_fixture("5.1", fd);
    LinkedForm b0 = fiber_form(fx.form);
    Diagnostic diag;
    for (int t = 0; t < points; ++t) {
        Rng rng = Rng::derived(seed, static_cast<std::uint64_t>(t));
        Fk a1 = rng.element(fd), a2 = rng.element(fd), b1 = rng.element(fd), b2 = rng.element(fd);
        LinkedSubspace chart = chart_subspace_51(fd, a1, a2, b1, b2);
        std::vector<Matrix> f0;
        for (const Matrix& m : chart.bases) f0.push_back(m.specialize0());
        std::string at = " at parameter point " + std::to_string(t);
        for (int i = 1; i <= 3; ++i)
            if (!(f0[static_cast<std::size_t>(i - 1)].transpose() * b0.b(i, i) * f0[static_cast<std::size_t>(i - 1)])
                     .is_zero())
                diag.fail("diagonal residual <,>_{" + std::to_string(i) + "," + std::to_string(i) + "} nonzero" + at);
        Matrix cross = f0[0].transpose() * b0.b(1, 3) * f0[2];
        Matrix want(fd, 2, 2);
        want.set(0, 1, Scalar(b1 + a2));
        if (cross != want) diag.fail("cross residual is not b1+a2" + at);
    }
    return diag;
}

Fixture example_fixture(const std::string& id, const FieldDesc& fd) {
    if (id == "5.1") {
        LinkedChain chain = standard_chain(fd, {2, 0, 2}, ChainMode::family);
        Scalar one(fd, 1), s = Scalar::s(fd), s2 = Scalar::s_pow(fd, 2);
        LinkedForm form = LinkedForm::zero(fd, 3, 4, 4);
        form.set_b(1, 1, two_j_blocks(fd, one, s2));
        form.set_b(1, 2, two_j_blocks(fd, one, s));
        form.set_b(1, 3, two_j_blocks(fd, one, one));
        form.set_b(2, 1, two_j_blocks(fd, one, s));
        form.set_b(2, 2, two_j_blocks(fd, one, one));
        form.set_b(2, 3, two_j_blocks(fd, s, one));
        form.set_b(3, 1, two_j_blocks(fd, one, one));
        form.set_b(3, 2, two_j_blocks(fd, s, one));
        form.set_b(3, 3, two_j_blocks(fd, s2, one));

        LinkedSubspace point{fd, 3, 4, 2, {}};
        Matrix e13(fd, 4, 2);
        e13.set(0, 0, one);
        e13.set(2, 1, one);
        point.bases.assign(3, e13);

        TangentReport expected{4, 1, 1, 3, 1, true};
        return Fixture{std::move(chain), std::move(form), std::move(point), expected};
    }
    if (id == "5.2") {
        LinkedChain chain = standard_chain(fd, {2, 2}, ChainMode::fiber);
        Scalar one(fd, 1);
        LinkedForm form = LinkedForm::zero(fd, 2, 4, 4);
        Matrix b22(fd, 4, 4);
        b22.set(0, 3, one);
        b22.set(1, 2, one);
        b22.set(2, 1, -one);
        b22.set(3, 0, -one);
        Matrix b12 = chain.f[0].transpose() * b22;  // <,>_{2,2} pulled through f_1
        form.set_b(2, 2, b22);
        form.set_b(1, 2, b12);
        form.set_b(2, 1, -b12.transpose());
        // <,>_{1,1} is the zero form; LinkedForm::zero already set it

        LinkedSubspace point{fd, 2, 4, 2, {}};
        Matrix e12(fd, 4, 2);
        e12.set(0, 0, one);
        e12.set(1, 1, one);
        point.bases.assign(2, e12);

        TangentReport expected{4, 1, 0, 4, 1, false};
        return Fixture{std::move(chain), std::move(form), std::move(point), expected};
    }
    throw InvalidConfig("unknown fixture id: " + id);
}

}  // namespace lgrass
