#include "lgrass/forms.hpp"

#include <algorithm>
#include <numeric>

namespace lgrass {

const Matrix& LinkedForm::b(int i, int j) const {
    if (i < 1 || i > n || j < 1 || j > n) throw IndexOutOfRange("form grid (" + std::to_string(i) + "," + std::to_string(j) + ")");
    return gram[static_cast<std::size_t>((i - 1) * n + (j - 1))];
}

void LinkedForm::set_b(int i, int j, Matrix m) {
    if (i < 1 || i > n || j < 1 || j > n) throw IndexOutOfRange("form grid (" + std::to_string(i) + "," + std::to_string(j) + ")");
    gram[static_cast<std::size_t>((i - 1) * n + (j - 1))] = std::move(m);
}

void LinkedForm::check_shape() const {
    if (two_m < 2 || two_m > 2 * n) throw InvalidConfig("two_m out of range [2, 2n]");
    if (static_cast<int>(gram.size()) != n * n) throw DimensionMismatch("form grid size");
    for (const Matrix& m : gram)
        if (m.rows() != d || m.cols() != d || m.field() != field) throw DimensionMismatch("Gram matrix shape");
}

LinkedForm LinkedForm::zero(const FieldDesc& fd, int n, int d, int two_m) {
    LinkedForm f{fd, two_m, n, d, {}};
    f.gram.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), Matrix(fd, d, d));
    return f;
}

std::vector<int> RestrictedForm::block_dims() const {
    std::vector<int> dims;
    for (const Subspace& s : decomp.w) dims.push_back(s.dim());
    return dims;
}

int RestrictedForm::block_offset(int level) const {
    int off = 0;
    for (int a = 1; a < level; ++a) off += decomp.w[static_cast<std::size_t>(a - 1)].dim();
    return off;
}

bool RestrictedForm::is_alternating() const {
    if (a != -a.transpose()) return false;
    for (int i = 0; i < a.rows(); ++i)
        if (!a.at(i, i).is_zero()) return false;
    return true;
}

int epsilon(int i, int j, int two_m) { return i + j > two_m ? 1 : 0; }
int epsilon_hat(int i, int j, int two_m) { return i + j < two_m ? 1 : 0; }

int exponent(int a, int b, int i, int j, int two_m, int n) {
    for (int v : {a, b, i, j})
        if (v < 1 || v > n) throw IndexOutOfRange("exponent index " + std::to_string(v) + " with n=" + std::to_string(n));
    int e = 0;
    // move the first argument a -> i, with the second fixed at b
    int t = a;
    while (t < i) {
        e += epsilon(t + 1, b, two_m);
        ++t;
    }
    while (t > i) {
        e += epsilon_hat(t - 1, b, two_m);
        --t;
    }
    // then the second argument b -> j, with the first fixed at i
    int u = b;
    while (u < j) {
        e += epsilon(i, u + 1, two_m);
        ++u;
    }
    while (u > j) {
        e += epsilon_hat(i, u - 1, two_m);
        --u;
    }
    return e;
}

namespace {

/// s^e in the given mode: literal power over a family, [e == 0] at the fiber.
Scalar s_power(const FieldDesc& fd, ChainMode mode, int e) {
    if (e == 0) return Scalar(fd, 1);
    return mode == ChainMode::family ? Scalar::s_pow(fd, e) : Scalar(fd);
}

}  // namespace

Diagnostic check_compatibility(const LinkedForm& f, const LinkedChain& c) {
    f.check_shape();
    c.check_shape();
    if (f.n != c.n || f.d != c.d || f.field != c.field) throw DimensionMismatch("form/chain shape");
    Diagnostic diag;
    auto tag = [](const char* what, int i, int j) {
        return std::string(what) + " at (" + std::to_string(i) + "," + std::to_string(j) + ")";
    };
    for (int i = 1; i <= f.n; ++i)
        for (int j = 1; j <= f.n; ++j) {
            Scalar se = s_power(f.field, c.mode, epsilon(i, j, f.two_m));
            Scalar sh = s_power(f.field, c.mode, epsilon_hat(i, j, f.two_m));
            if (i >= 2 && c.f[static_cast<std::size_t>(i - 2)].transpose() * f.b(i, j) != f.b(i - 1, j).scaled(se))
                diag.fail(tag("compat f x id", i, j));
            if (j >= 2 && f.b(i, j) * c.f[static_cast<std::size_t>(j - 2)] != f.b(i, j - 1).scaled(se))
                diag.fail(tag("compat id x f", i, j));
            if (i <= f.n - 1 && c.fdual[static_cast<std::size_t>(i - 1)].transpose() * f.b(i, j) != f.b(i + 1, j).scaled(sh))
                diag.fail(tag("compat f^ x id", i, j));
            if (j <= f.n - 1 && f.b(i, j) * c.fdual[static_cast<std::size_t>(j - 1)] != f.b(i, j + 1).scaled(sh))
                diag.fail(tag("compat id x f^", i, j));
        }
    return diag;
}

Diagnostic check_alternating(const LinkedForm& f) {
    f.check_shape();
    Diagnostic diag;
    for (int i = 1; i <= f.n; ++i) {
        const Matrix& b = f.b(i, i);
        bool ok = b == -b.transpose();
        for (int p = 0; ok && p < f.d; ++p)
            if (!b.at(p, p).is_zero()) ok = false;
        if (!ok) diag.fail("B_{" + std::to_string(i) + "," + std::to_string(i) + "} not alternating");
    }
    for (int i = 1; i <= f.n; ++i)
        for (int j = i + 1; j <= f.n; ++j)
            if (f.b(i, j) != -f.b(j, i).transpose())
                diag.fail("B_{" + std::to_string(i) + "," + std::to_string(j) + "} != -B^T_{" + std::to_string(j) +
                          "," + std::to_string(i) + "}");
    return diag;
}

Diagnostic check_induced_relations(const LinkedForm& f, const LinkedChain& c) {
    f.check_shape();
    c.check_shape();
    Diagnostic diag;
    int n = f.n, two_m = f.two_m;
    auto tag = [](const char* fam, int i, int j, int l) {
        return std::string(fam) + " at (i=" + std::to_string(i) + ",j=" + std::to_string(j) + ",l=" + std::to_string(l) + ")";
    };
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i + j > two_m) {
                for (int l = std::max(1, two_m - i); l < j; ++l)
                    if (f.b(i, j) != f.b(i, l) * composite(c, j, l)) diag.fail(tag("(i)", i, j, l));
                for (int l = std::max(1, two_m - j); l < i; ++l)
                    if (f.b(i, j) != composite(c, i, l).transpose() * f.b(l, j)) diag.fail(tag("(iii)", i, j, l));
            }
            if (i + j < two_m) {
                for (int l = j + 1; l <= std::min(n, two_m - i); ++l)
                    if (f.b(i, j) != f.b(i, l) * composite(c, j, l)) diag.fail(tag("(ii)", i, j, l));
                for (int l = i + 1; l <= std::min(n, two_m - j); ++l)
                    if (f.b(i, j) != composite(c, i, l).transpose() * f.b(l, j)) diag.fail(tag("(iv)", i, j, l));
            }
        }
    return diag;
}

LinkedForm extend_form(const LinkedChain& c, const RestrictedForm& a, int two_m) {
    c.check_shape();
    int n = c.n, d = c.d;
    if (static_cast<int>(a.decomp.w.size()) != n) throw DimensionMismatch("restricted form levels");
    std::vector<int> dims;
    int total = 0;
    for (const Subspace& w : a.decomp.w) {
        dims.push_back(w.dim());
        total += w.dim();
    }
    if (a.a.rows() != total || a.a.cols() != total) throw DimensionMismatch("restricted Gram size");

    // inverse pushed-block bases per level
    std::vector<Matrix> pinv;
    pinv.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        Matrix p = pushed_basis(c, a.decomp, i);
        Scalar dp = det(p);
        if (dp.is_zero() || (c.mode == ChainMode::family && dp.valuation().value() != 0))
            throw DecompositionFailed("pushed basis at level " + std::to_string(i) + " is not a unit basis");
        pinv.push_back(inverse(p));
    }

    LinkedForm out = LinkedForm::zero(c.field, n, d, two_m);
    std::vector<int> off(static_cast<std::size_t>(n + 1), 0);
    for (int t = 1; t <= n; ++t) off[static_cast<std::size_t>(t)] = off[static_cast<std::size_t>(t - 1)] + dims[static_cast<std::size_t>(t - 1)];
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            Matrix g(c.field, d, d);
            for (int ba = 1; ba <= n; ++ba)
                for (int bb = 1; bb <= n; ++bb) {
                    Scalar se = s_power(c.field, c.mode, exponent(ba, bb, i, j, two_m, n));
                    if (se.is_zero()) continue;
                    for (int p = 0; p < dims[static_cast<std::size_t>(ba - 1)]; ++p)
                        for (int q = 0; q < dims[static_cast<std::size_t>(bb - 1)]; ++q)
                            g.set(off[static_cast<std::size_t>(ba - 1)] + p, off[static_cast<std::size_t>(bb - 1)] + q,
                                  a.a.at(off[static_cast<std::size_t>(ba - 1)] + p, off[static_cast<std::size_t>(bb - 1)] + q) * se);
                }
            out.set_b(i, j, pinv[static_cast<std::size_t>(i - 1)].transpose() * g * pinv[static_cast<std::size_t>(j - 1)]);
        }
    return out;
}

RestrictedForm restrict_form(const LinkedForm& f, const WDecomp& w) {
    f.check_shape();
    if (static_cast<int>(w.w.size()) != f.n) throw DimensionMismatch("decomposition levels");
    int total = 0;
    std::vector<int> dims, off{0};
    for (const Subspace& s : w.w) {
        dims.push_back(s.dim());
        total += s.dim();
        off.push_back(total);
    }
    Matrix a(f.field, total, total);
    for (int ba = 1; ba <= f.n; ++ba)
        for (int bb = 1; bb <= f.n; ++bb) {
            Matrix blk = w.w[static_cast<std::size_t>(ba - 1)].basis().transpose() * f.b(ba, bb) *
                         w.w[static_cast<std::size_t>(bb - 1)].basis();
            for (int p = 0; p < dims[static_cast<std::size_t>(ba - 1)]; ++p)
                for (int q = 0; q < dims[static_cast<std::size_t>(bb - 1)]; ++q)
                    a.set(off[static_cast<std::size_t>(ba - 1)] + p, off[static_cast<std::size_t>(bb - 1)] + q, blk.at(p, q));
        }
    return RestrictedForm{w, std::move(a)};
}

// ---------------------------------------------------------------------------
// form_space_dimension: sparse nullity of the fiber compatibility system
// ---------------------------------------------------------------------------

namespace {

using SparseRow = std::vector<std::pair<int, Fk>>;

int sparse_nullity_fp(int ncols, const std::vector<SparseRow>& rows, std::uint64_t p) {
    using Entry = std::pair<int, std::uint64_t>;
    using Row = std::vector<Entry>;
    auto mod_pow = [p](std::uint64_t b, std::uint64_t e) {
        std::uint64_t r = 1;
        b %= p;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    std::vector<Row> pivot(static_cast<std::size_t>(ncols));  // keyed by leading column
    std::vector<bool> has_pivot(static_cast<std::size_t>(ncols), false);
    int npiv = 0;
    Row work, merged;
    for (const SparseRow& in : rows) {
        work.clear();
        for (const auto& [c, v] : in) {
            std::uint64_t r = v.residue();
            if (r) work.emplace_back(c, r);
        }
        std::sort(work.begin(), work.end());
        while (!work.empty()) {
            int lead = work.front().first;
            if (!has_pivot[static_cast<std::size_t>(lead)]) {
                std::uint64_t inv = mod_pow(work.front().second, p - 2);
                for (auto& [c, v] : work) v = v * inv % p;
                pivot[static_cast<std::size_t>(lead)] = work;
                has_pivot[static_cast<std::size_t>(lead)] = true;
                ++npiv;
                break;
            }
            // work -= work.lead * pivot[lead]
            const Row& pr = pivot[static_cast<std::size_t>(lead)];
            std::uint64_t c0 = work.front().second;
            merged.clear();
            std::size_t i = 0, j = 0;
            while (i < work.size() || j < pr.size()) {
                if (j == pr.size() || (i < work.size() && work[i].first < pr[j].first)) {
                    merged.push_back(work[i++]);
                } else if (i == work.size() || pr[j].first < work[i].first) {
                    std::uint64_t v = (p - c0 * pr[j].second % p) % p;
                    if (v) merged.emplace_back(pr[j].first, v);
                    ++j;
                } else {
                    std::uint64_t v = (work[i].second + p - c0 * pr[j].second % p) % p;
                    if (v) merged.emplace_back(work[i].first, v);
                    ++i;
                    ++j;
                }
            }
            work.swap(merged);
        }
    }
    return ncols - npiv;
}

int sparse_nullity_generic(int ncols, const std::vector<SparseRow>& rows, const FieldDesc& fd) {
    std::vector<SparseRow> pivot(static_cast<std::size_t>(ncols));
    std::vector<bool> has_pivot(static_cast<std::size_t>(ncols), false);
    int npiv = 0;
    for (const SparseRow& in : rows) {
        SparseRow work;
        for (const auto& e : in)
            if (!e.second.is_zero()) work.push_back(e);
        std::sort(work.begin(), work.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        while (!work.empty()) {
            int lead = work.front().first;
            if (!has_pivot[static_cast<std::size_t>(lead)]) {
                Fk inv = work.front().second.inv();
                for (auto& e : work) e.second = e.second * inv;
                pivot[static_cast<std::size_t>(lead)] = work;
                has_pivot[static_cast<std::size_t>(lead)] = true;
                ++npiv;
                break;
            }
            const SparseRow& pr = pivot[static_cast<std::size_t>(lead)];
            Fk c0 = work.front().second;
            SparseRow merged;
            std::size_t i = 0, j = 0;
            while (i < work.size() || j < pr.size()) {
                if (j == pr.size() || (i < work.size() && work[i].first < pr[j].first)) {
                    merged.push_back(work[i++]);
                } else if (i == work.size() || pr[j].first < work[i].first) {
                    Fk v = -(c0 * pr[j].second);
                    if (!v.is_zero()) merged.emplace_back(pr[j].first, v);
                    ++j;
                } else {
                    Fk v = work[i].second - c0 * pr[j].second;
                    if (!v.is_zero()) merged.emplace_back(work[i].first, v);
                    ++i;
                    ++j;
                }
            }
            work.swap(merged);
        }
    }
    return ncols - npiv;
}

int sparse_nullity(int ncols, const std::vector<SparseRow>& rows, const FieldDesc& fd) {
    if (fd.kind == FieldKind::prime_field) return sparse_nullity_fp(ncols, rows, fd.p);
    return sparse_nullity_generic(ncols, rows, fd);
}

}  // namespace

int form_space_dimension(const LinkedChain& c, int two_m, FormVariant variant) {
    c.check_shape();
    if (two_m < 2 || two_m > 2 * c.n) throw InvalidConfig("two_m out of range");
    LinkedChain c0 = fiber_chain(c);
    {
        Diagnostic sl = check_s_linked(c0);
        if (!sl.pass()) throw InvalidConfig("form_space_dimension requires an s-linked chain: " + sl.summary());
    }
    int n = c.n, d = c.d;
    const FieldDesc& fd = c.field;
    auto var = [n, d](int i, int j, int p, int q) { return (((i - 1) * n + (j - 1)) * d + p) * d + q; };
    auto fk = [&](const Matrix& m, int r, int cc) { return m.at(r, cc).specialize0(); };

    std::vector<SparseRow> rows;
    Fk one(fd, 1);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            int d1 = epsilon(i, j, two_m) == 0 ? 1 : 0;
            int d2 = epsilon_hat(i, j, two_m) == 0 ? 1 : 0;
            for (int p = 0; p < d; ++p)
                for (int q = 0; q < d; ++q) {
                    if (i >= 2) {  // f_{i-1}^T X_{i,j} = s^eps X_{i-1,j}
                        SparseRow row;
                        const Matrix& fm = c0.f[static_cast<std::size_t>(i - 2)];
                        for (int k = 0; k < d; ++k) {
                            Fk co = fk(fm, k, p);
                            if (!co.is_zero()) row.emplace_back(var(i, j, k, q), co);
                        }
                        if (d1) row.emplace_back(var(i - 1, j, p, q), -one);
                        rows.push_back(std::move(row));
                    }
                    if (j >= 2) {  // X_{i,j} f_{j-1} = s^eps X_{i,j-1}
                        SparseRow row;
                        const Matrix& fm = c0.f[static_cast<std::size_t>(j - 2)];
                        for (int k = 0; k < d; ++k) {
                            Fk co = fk(fm, k, q);
                            if (!co.is_zero()) row.emplace_back(var(i, j, p, k), co);
                        }
                        if (d1) row.emplace_back(var(i, j - 1, p, q), -one);
                        rows.push_back(std::move(row));
                    }
                    if (i <= n - 1) {  // (f^i)^T X_{i,j} = s^eps^ X_{i+1,j}
                        SparseRow row;
                        const Matrix& gm = c0.fdual[static_cast<std::size_t>(i - 1)];
                        for (int k = 0; k < d; ++k) {
                            Fk co = fk(gm, k, p);
                            if (!co.is_zero()) row.emplace_back(var(i, j, k, q), co);
                        }
                        if (d2) row.emplace_back(var(i + 1, j, p, q), -one);
                        rows.push_back(std::move(row));
                    }
                    if (j <= n - 1) {  // X_{i,j} f^j = s^eps^ X_{i,j+1}
                        SparseRow row;
                        const Matrix& gm = c0.fdual[static_cast<std::size_t>(j - 1)];
                        for (int k = 0; k < d; ++k) {
                            Fk co = fk(gm, k, q);
                            if (!co.is_zero()) row.emplace_back(var(i, j, p, k), co);
                        }
                        if (d2) row.emplace_back(var(i, j + 1, p, q), -one);
                        rows.push_back(std::move(row));
                    }
                }
        }
    if (variant == FormVariant::alternating) {
        for (int i = 1; i <= n; ++i)
            for (int j = i; j <= n; ++j)
                for (int p = 0; p < d; ++p)
                    for (int q = 0; q < d; ++q) {
                        if (i == j && p > q) continue;
                        SparseRow row;
                        row.emplace_back(var(i, j, p, q), one);
                        if (var(j, i, q, p) != var(i, j, p, q))
                            row.emplace_back(var(j, i, q, p), one);
                        else
                            row.back().second = row.back().second + one;  // diagonal entry: 2x = 0
                        rows.push_back(std::move(row));
                    }
    }
    return sparse_nullity(n * n * d * d, rows, fd);
}

SymplecticReport check_symplectic(const LinkedForm& f, const LinkedChain& c, const SymplecticOptions& opts) {
    f.check_shape();
    c.check_shape();
    if (f.n != c.n || f.d != c.d) throw DimensionMismatch("form/chain shape");
    SymplecticReport rep;
    int n = f.n, two_m = f.two_m;

    // clause I: antidiagonal pairings nondegenerate
    for (int i = 1; i <= n; ++i) {
        int j = two_m - i;
        if (j < 1 || j > n) continue;
        Scalar dv = det(f.b(i, j));
        bool ok = c.mode == ChainMode::family ? (!dv.is_zero() && dv.valuation().value() == 0) : !dv.is_zero();
        if (!ok) rep.clauses.fail("(I) <,>_{" + std::to_string(i) + "," + std::to_string(j) + "} degenerate");
    }

    LinkedChain c0 = fiber_chain(c);
    LinkedForm f0 = fiber_form(f);
    Subspace full = Subspace::full(f.field, f.d);

    // clause II
    if (two_m < n + 1) {
        for (int i = two_m; i <= n; ++i) {  // 2m-1 < i <= n, integer i
            if (i < 2) continue;
            Subspace rad = left_radical(f0.b(i, 1), full, full);
            int ki = opts.proof_variant_clause2 ? i : i - 1;
            if (ki > n - 1 || ki < 1) continue;
            Subspace ker_f = kernel(c0.fdual[static_cast<std::size_t>(ki - 1)]);
            if (rad != ker_f)
                rep.clauses.fail("(II) degeneracy of <,>_{" + std::to_string(i) + ",1} != ker f^" + std::to_string(ki));
        }
    }
    // clause III
    if (two_m > n + 1) {
        for (int i = 1; i < two_m - n; ++i) {
            if (i > n - 1) continue;
            Subspace rad = left_radical(f0.b(i, n), full, full);
            Subspace ker_f = kernel(c0.f[static_cast<std::size_t>(i - 1)]);
            if (rad != ker_f)
                rep.clauses.fail("(III) degeneracy of <,>_{" + std::to_string(i) + "," + std::to_string(n) +
                                 "} != ker f_" + std::to_string(i));
        }
    }

    // non-normative diagonal diagnostic
    for (int i = 1; i <= n; ++i) {
        Subspace rad = left_radical(f0.b(i, i), full, full);
        Subspace bound = Subspace::zero(f.field, f.d);
        if (i < n) bound = sum(bound, kernel(c0.f[static_cast<std::size_t>(i - 1)]));
        if (i > 1) bound = sum(bound, kernel(c0.fdual[static_cast<std::size_t>(i - 2)]));
        std::string msg = "radical(<,>_{" + std::to_string(i) + "," + std::to_string(i) + "}) ";
        if (rad == bound)
            msg += "equals the forced lower bound (dim " + std::to_string(bound.dim()) + ")";
        else
            msg += "strictly exceeds the forced lower bound (dim " + std::to_string(rad.dim()) + " > " +
                   std::to_string(bound.dim()) + ")";
        rep.diagonal_diagnostics.push_back(std::move(msg));
    }
    return rep;
}

LinkedForm fiber_form(const LinkedForm& f) {
    LinkedForm r = f;
    for (Matrix& m : r.gram) m = m.specialize0();
    return r;
}

LinkedForm standard_symplectic_form(const LinkedChain& c, std::uint64_t seed) {
    c.check_shape();
    int n = c.n, two_m = n + 1;
    WDecomp w = structure_decomposition(fiber_chain(c));
    int total = c.d;
    std::vector<std::string> last_failures;
    for (int attempt = 0; attempt < 64; ++attempt) {
        Rng rng = Rng::derived(seed, static_cast<std::uint64_t>(attempt));
        Matrix a(c.field, total, total);
        for (int p = 0; p < total; ++p)
            for (int q = p + 1; q < total; ++q) {
                Fk x = rng.element(c.field);
                a.set(p, q, Scalar(x));
                a.set(q, p, Scalar(-x));
            }
        LinkedForm f = extend_form(c, RestrictedForm{w, a}, two_m);
        SymplecticReport rep = check_symplectic(f, c);
        if (rep.pass()) {
            Diagnostic compat = check_compatibility(f, c);
            Diagnostic alt = check_alternating(f);
            if (!compat.pass() || !alt.pass())
                throw DecompositionFailed("extend_form output failed validation: " + compat.summary() + " " + alt.summary());
            return f;
        }
        last_failures = rep.clauses.failures;
    }
    std::string why;
    for (const auto& s : last_failures) why += " [" + s + "]";
    throw GenerationExhausted("no symplectic form after 64 draws;" + why);
}

}  // namespace lgrass
