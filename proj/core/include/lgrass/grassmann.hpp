#ifndef LGRASS_GRASSMANN_HPP
#define LGRASS_GRASSMANN_HPP

#include "lgrass/forms.hpp"

namespace lgrass {

/// Tuple of rank-r subspaces F_i <= E_i, one d x r basis matrix per level.
struct LinkedSubspace {
    FieldDesc field;
    int n = 1, d = 1, r = 0;
    std::vector<Matrix> bases;  // n matrices, d x r, full column rank

    void check_shape() const;
};

/// Dimension audit of a point of the linked Grassmannian.
struct TangentReport {
    int lg_tangent_dim = 0;    // r(d-r)
    int form_target_dim = 0;   // alternating form-space dimension of the induced chain
    int tangent_map_rank = 0;  // rank of the tangent form map
    int lag_tangent_dim = 0;   // lg_tangent_dim - tangent_map_rank
    int expected_codim = 0;    // C(r,2)
    bool verdict = false;      // tangent_map_rank == expected_codim
};

/// One elementary tangent direction: move the w-th global basis vector of
/// +W^F at the given level towards a complement representative of E_i/F_i.
struct TangentVector {
    int level = 1;   // 1-based
    int wglobal = 0; // index into TangentBasis::w_basis
    Matrix x;        // d x 1 ambient representative of the moved W^F vector
    Matrix dir;      // d x 1 complement representative
};

struct TangentBasis {
    std::vector<TangentVector> elems;              // r(d-r) elementary homs
    std::vector<std::pair<int, Matrix>> w_basis;   // global +W^F basis: (level, d x 1), size r
    std::vector<Matrix> complements;               // per level: d x (d-r) pivot complement of F_i
    int dim() const { return static_cast<int>(elems.size()); }
};

/// f_i F_i <= F_{i+1} and f^i F_{i+1} <= F_i, columnwise.
Diagnostic check_linked(const LinkedChain& c, const LinkedSubspace& f);

/// The chain on the F-coordinates (rank r) induced by restriction.
/// Throws NotLinked if a restriction does not exist.
LinkedChain induced_chain(const LinkedChain& c, const LinkedSubspace& f);

/// s-linkedness of the induced chain at the s=0 fiber. Throws NotLinked.
Diagnostic check_exact(const LinkedChain& c, const LinkedSubspace& f);

/// F_i^T B_{i,j} F_j = 0 exactly, for all i, j.
Diagnostic check_isotropic(const LinkedSubspace& f, const LinkedForm& form);

/// Basis of +_i Hom(W_i^F, E_i/F_i) at an exact point; wf is the structure
/// decomposition of the induced chain. Fiber mode. Throws NotExact.
TangentBasis tangent_space(const LinkedChain& c, const LinkedSubspace& f, const WDecomp& wf);

/// C(r,2) x r(d-r) matrix of the map phi -> <phi(x),y> + <x,phi(y)> on
/// global +W^F basis pairs. Throws NotExact / NotIsotropic.
Matrix tangent_form_map(const LinkedChain& c, const LinkedForm& form, const LinkedSubspace& f, const WDecomp& wf);

/// Full dimension audit; verdict passes iff tangent_map_rank = C(r,2).
TangentReport verify_point(const LinkedChain& c, const LinkedForm& form, const LinkedSubspace& f);

/// Flat limit of the K-subspace tuple F_i = f_{1,i} F1: levelwise saturation
/// followed by specialization at s = 0. Family-mode chains only.
LinkedSubspace push_and_saturate(const LinkedChain& c, const Subspace& f1);

/// Draw an exact isotropic fiber point of rank r by sampling F1 over K from
/// the isotropy constraints and taking the flat limit; up to 64 attempts.
LinkedSubspace random_exact_isotropic(const LinkedChain& c, const LinkedForm& form, int r, std::uint64_t seed);

/// Hard-coded worked instance: family (or fiber) chain and form, a
/// designated fiber point, and its expected report.
struct Fixture {
    LinkedChain chain;
    LinkedForm form;
    LinkedSubspace point;
    TangentReport expected;
};

/// id in {"5.1", "5.2"}.
Fixture example_fixture(const std::string& id, const FieldDesc& fd);

/// The rank-2 coordinate chart of the first worked instance, as a
/// family-mode subspace tuple in the parameters (a1, a2, b1, b2).
LinkedSubspace chart_subspace_51(const FieldDesc& fd, const Fk& a1, const Fk& a2, const Fk& b1, const Fk& b2);

/// Randomized chart audit of the first worked instance: at `points` random
/// parameter tuples, every diagonal pairing vanishes identically on the
/// chart at s = 0 while the (1,3) pairing reduces to the single residual
/// b1 + a2. Deterministic per seed.
Diagnostic chart_residual_check_51(const FieldDesc& fd, std::uint64_t seed, int points);

}  // namespace lgrass

#endif
