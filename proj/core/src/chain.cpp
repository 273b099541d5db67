#include "lgrass/chain.hpp"

#include <numeric>

namespace lgrass {

std::string Diagnostic::summary() const {
    if (pass()) return "pass";
    std::string out = "fail:";
    for (const auto& f : failures) out += " [" + f + "]";
    return out;
}

void LinkedChain::check_shape() const {
    if (n < 1 || d < 1) throw InvalidConfig("chain requires n >= 1, d >= 1");
    if (static_cast<int>(f.size()) != n - 1 || static_cast<int>(fdual.size()) != n - 1)
        throw DimensionMismatch("chain expects n-1 forward and backward maps");
    for (const Matrix& m : f)
        if (m.rows() != d || m.cols() != d || m.field() != field) throw DimensionMismatch("chain map shape");
    for (const Matrix& m : fdual)
        if (m.rows() != d || m.cols() != d || m.field() != field) throw DimensionMismatch("chain map shape");
    if (mode == ChainMode::fiber) {
        for (const auto* maps : {&f, &fdual})
            for (const Matrix& m : *maps)
                for (int i = 0; i < d; ++i)
                    for (int j = 0; j < d; ++j)
                        if (!m.at(i, j).is_constant()) throw InvalidConfig("fiber-mode chain with non-constant entries");
    }
}

Scalar LinkedChain::s_value() const {
    return mode == ChainMode::family ? Scalar::s(field) : Scalar(field);
}

Diagnostic check_weakly_linked(const LinkedChain& c) {
    c.check_shape();
    Diagnostic diag;
    Scalar s = c.s_value();
    Matrix s_id = Matrix::identity(c.field, c.d).scaled(s);
    for (int i = 0; i < c.n - 1; ++i) {
        if (c.f[i] * c.fdual[i] != s_id)
            diag.fail("(I) f_" + std::to_string(i + 1) + " f^" + std::to_string(i + 1) + " != s*id");
        if (c.fdual[i] * c.f[i] != s_id)
            diag.fail("(I) f^" + std::to_string(i + 1) + " f_" + std::to_string(i + 1) + " != s*id");
    }
    // (III) at the s=0 fiber
    LinkedChain c0 = fiber_chain(c);
    for (int i = 0; i < c.n - 2; ++i) {
        if (intersect(image(c0.f[i]), kernel(c0.f[i + 1])).dim() != 0)
            diag.fail("(III) im f_" + std::to_string(i + 1) + " meets ker f_" + std::to_string(i + 2));
        if (intersect(image(c0.fdual[i + 1]), kernel(c0.fdual[i])).dim() != 0)
            diag.fail("(III) im f^" + std::to_string(i + 2) + " meets ker f^" + std::to_string(i + 1));
    }
    return diag;
}

Diagnostic check_s_linked(const LinkedChain& c) {
    Diagnostic diag = check_weakly_linked(c);
    LinkedChain c0 = fiber_chain(c);
    for (int i = 0; i < c.n - 1; ++i) {
        if (kernel(c0.fdual[i]) != image(c0.f[i]))
            diag.fail("(II) ker f^" + std::to_string(i + 1) + " != im f_" + std::to_string(i + 1));
        if (kernel(c0.f[i]) != image(c0.fdual[i]))
            diag.fail("(II) ker f_" + std::to_string(i + 1) + " != im f^" + std::to_string(i + 1));
    }
    return diag;
}

Matrix composite(const LinkedChain& c, int i, int j) {
    c.check_shape();
    if (i < 1 || i > c.n || j < 1 || j > c.n)
        throw IndexOutOfRange("composite(" + std::to_string(i) + "," + std::to_string(j) + ") with n=" +
                              std::to_string(c.n));
    Matrix r = Matrix::identity(c.field, c.d);
    if (i < j) {
        for (int t = i; t < j; ++t) r = c.f[static_cast<std::size_t>(t - 1)] * r;
    } else {
        for (int t = i; t > j; --t) r = c.fdual[static_cast<std::size_t>(t - 2)] * r;
    }
    return r;
}

std::vector<int> rank_profile(const LinkedChain& c) {
    c.check_shape();
    std::vector<int> r;
    r.push_back(0);
    for (int i = 0; i < c.n - 1; ++i) r.push_back(rank(c.f[static_cast<std::size_t>(i)].specialize0()));
    r.push_back(c.d);
    return r;
}

LinkedChain fiber_chain(const LinkedChain& c) {
    if (c.mode == ChainMode::fiber) return c;
    LinkedChain r{c.field, ChainMode::fiber, c.n, c.d, {}, {}};
    for (const Matrix& m : c.f) r.f.push_back(m.specialize0());
    for (const Matrix& m : c.fdual) r.fdual.push_back(m.specialize0());
    return r;
}

namespace {

/// Greedy pivot-column complement of S in the ambient space: standard basis
/// vectors extending a basis of S, in index order.
Subspace pivot_complement(const Subspace& s) {
    const FieldDesc& fd = s.field();
    int d = s.ambient_dim();
    Matrix acc = s.basis();
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
    Matrix basis(fd, d, static_cast<int>(chosen.size()));
    for (int k = 0; k < static_cast<int>(chosen.size()); ++k) basis.set(chosen[static_cast<std::size_t>(k)], k, Scalar(fd, 1));
    return Subspace::span(basis);
}

}  // namespace

WDecomp structure_decomposition(const LinkedChain& c) {
    c.check_shape();
    if (c.mode != ChainMode::fiber) throw InvalidConfig("structure_decomposition is a fiber-mode operation");
    Diagnostic sl = check_s_linked(c);
    if (!sl.pass()) throw DecompositionFailed("chain is not s-linked: " + sl.summary());

    WDecomp out;
    out.ranks = rank_profile(c);
    for (int i = 1; i <= c.n; ++i) {
        Subspace avoid = Subspace::zero(c.field, c.d);
        if (i < c.n) avoid = sum(avoid, kernel(c.f[static_cast<std::size_t>(i - 1)]));
        if (i > 1) avoid = sum(avoid, kernel(c.fdual[static_cast<std::size_t>(i - 2)]));
        Subspace w = pivot_complement(avoid);
        out.w.push_back(w);
    }

    // verify clauses (i)-(iii) rather than trusting the construction
    for (int i = 1; i <= c.n; ++i) {
        const Subspace& w = out.w[static_cast<std::size_t>(i - 1)];
        if (w.dim() != out.ranks[static_cast<std::size_t>(i)] - out.ranks[static_cast<std::size_t>(i - 1)])
            throw DecompositionFailed("W_" + std::to_string(i) + " has wrong dimension");
        for (int j = 1; j <= c.n; ++j) {
            Matrix pushed = composite(c, j, i) * out.w[static_cast<std::size_t>(j - 1)].basis();
            if (rank(pushed) != out.w[static_cast<std::size_t>(j - 1)].dim())
                throw DecompositionFailed("composite to level " + std::to_string(i) + " not injective on W_" +
                                          std::to_string(j));
        }
        Matrix all = pushed_basis(c, out, i);
        if (rank(all) != c.d)
            throw DecompositionFailed("pushed blocks do not decompose E_" + std::to_string(i));
    }
    return out;
}

Matrix pushed_basis(const LinkedChain& c, const WDecomp& w, int i) {
    Matrix all(c.field, c.d, 0);
    for (int j = 1; j <= c.n; ++j) all = all.hconcat(composite(c, j, i) * w.w[static_cast<std::size_t>(j - 1)].basis());
    if (all.cols() != c.d) throw DecompositionFailed("pushed basis has wrong size");
    return all;
}

LinkedChain standard_chain(const FieldDesc& fd, const std::vector<int>& profile, ChainMode mode) {
    int n = static_cast<int>(profile.size());
    if (n < 1) throw BadProfile("empty profile");
    int d = 0;
    for (int wj : profile) {
        if (wj < 0) throw BadProfile("negative block size");
        d += wj;
    }
    if (d < 1) throw BadProfile("profile sums to zero");

    Scalar s = mode == ChainMode::family ? Scalar::s(fd) : Scalar(fd);
    LinkedChain c{fd, mode, n, d, {}, {}};
    std::vector<int> block_of(static_cast<std::size_t>(d));
    {
        int pos = 0;
        for (int j = 0; j < n; ++j)
            for (int t = 0; t < profile[static_cast<std::size_t>(j)]; ++t) block_of[static_cast<std::size_t>(pos++)] = j + 1;
    }
    for (int i = 1; i <= n - 1; ++i) {
        Matrix fi(fd, d, d), fdi(fd, d, d);
        for (int t = 0; t < d; ++t) {
            bool low = block_of[static_cast<std::size_t>(t)] <= i;
            fi.set(t, t, low ? Scalar(fd, 1) : s);
            fdi.set(t, t, low ? s : Scalar(fd, 1));
        }
        c.f.push_back(fi);
        c.fdual.push_back(fdi);
    }
    return c;
}

LinkedChain conjugate(const LinkedChain& c, const std::vector<Matrix>& g) {
    c.check_shape();
    if (static_cast<int>(g.size()) != c.n) throw DimensionMismatch("conjugate needs one g per level");
    std::vector<Matrix> ginv;
    for (const Matrix& gi : g) {
        if (gi.rows() != c.d || gi.cols() != c.d) throw DimensionMismatch("conjugating matrix shape");
        Scalar dg = det(gi);
        if (dg.is_zero()) throw NotInvertible();
        if (c.mode == ChainMode::family && dg.valuation().value() != 0) throw UnitDeterminantRequired();
        ginv.push_back(inverse(gi));
    }
    LinkedChain r{c.field, c.mode, c.n, c.d, {}, {}};
    for (int i = 0; i < c.n - 1; ++i) {
        r.f.push_back(g[static_cast<std::size_t>(i + 1)] * c.f[static_cast<std::size_t>(i)] * ginv[static_cast<std::size_t>(i)]);
        r.fdual.push_back(g[static_cast<std::size_t>(i)] * c.fdual[static_cast<std::size_t>(i)] * ginv[static_cast<std::size_t>(i + 1)]);
    }
    return r;
}

}  // namespace lgrass
