#ifndef LGRASS_CHAIN_HPP
#define LGRASS_CHAIN_HPP

#include "lgrass/linalg.hpp"

namespace lgrass {

enum class ChainMode { family, fiber };

/// Validation outcome: each violated clause is listed with indices.
struct Diagnostic {
    std::vector<std::string> failures;
    bool pass() const { return failures.empty(); }
    void fail(std::string what) { failures.push_back(std::move(what)); }
    std::string summary() const;
};

/// Chain of n rank-d spaces with forward maps f_i : E_i -> E_{i+1} and
/// backward maps f^i : E_{i+1} -> E_i. In family mode entries live in K with
/// s the uniformizer; in fiber mode entries are constants and s = 0.
struct LinkedChain {
    FieldDesc field;
    ChainMode mode = ChainMode::fiber;
    int n = 1, d = 1;
    std::vector<Matrix> f;      // n-1 forward maps
    std::vector<Matrix> fdual;  // n-1 backward maps

    void check_shape() const;
    /// Multiplier of condition (I): s in family mode, 0 in fiber mode.
    Scalar s_value() const;
};

/// Structure decomposition: ranks r_0..r_n and per level a complement
/// subspace W_i of dimension r_i - r_{i-1}.
struct WDecomp {
    std::vector<int> ranks;  // r_0..r_n
    std::vector<Subspace> w;  // W_1..W_n
};

/// Conditions (I) and (III).
Diagnostic check_weakly_linked(const LinkedChain& c);
/// Conditions (I), (III) and the fiber exactness (II).
Diagnostic check_s_linked(const LinkedChain& c);

/// f_{i,j} for i < j, f^{i,j} for i > j, identity for i = j. 1-based levels.
Matrix composite(const LinkedChain& c, int i, int j);

/// r_0 = 0, r_i = rank of f_i at the s=0 fiber, r_n = d.
std::vector<int> rank_profile(const LinkedChain& c);

/// W_i = pivot-column complement of span(ker f_i, ker f^{i-1}) in E_i,
/// verified against all three structure clauses. Fiber mode only.
WDecomp structure_decomposition(const LinkedChain& c);

/// Block model: coordinates grouped in blocks of sizes w_1..w_n; f_i acts as
/// the identity on blocks j <= i and as s on blocks j > i, f^i the reverse.
LinkedChain standard_chain(const FieldDesc& fd, const std::vector<int>& profile, ChainMode mode);

/// Change of basis by invertible g_1..g_n (unit determinant in family mode).
LinkedChain conjugate(const LinkedChain& c, const std::vector<Matrix>& g);

/// The chain at the s=0 fiber of a family chain (identity on fiber chains).
LinkedChain fiber_chain(const LinkedChain& c);

/// Basis of E_i given by the pushed blocks f_{a,i}(W_a), f^{a,i}(W_a),
/// columns grouped by a = 1..n. Throws DecompositionFailed if singular.
Matrix pushed_basis(const LinkedChain& c, const WDecomp& w, int i);

}  // namespace lgrass

#endif
