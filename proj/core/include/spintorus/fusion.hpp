#ifndef SPINTORUS_FUSION_HPP
#define SPINTORUS_FUSION_HPP

#include <string>
#include <vector>

#include "spintorus/model.hpp"
#include "spintorus/tensor.hpp"

namespace spintorus {

/// Antisymmetric fused projector of order m: the projector onto the
/// column space of the degenerate R-matrix product on m sites.
struct FusedProjector {
    int order = 0;
    TensorOperator op;
    int rank = 0;
};

/// Ordered degenerate product: factors R_{ij}(-(j-i) eta) over site pairs
/// i < j in lexicographic order; `reversed` conjugates the site order
/// (the variant entering the fused transfer matrix).
TensorOperator degenerate_r_product(const ModelSpec& spec, int m, bool reversed = false);

/// Projector from the ascending-order degenerate product. The numerical
/// rank must equal binomial(n, m); anything else signals a degenerate eta
/// or an ordering bug and throws.
FusedProjector build_projector(const ModelSpec& spec, int m, double rank_tolerance = 1e-10);

/// Same on reversed site order (not equal to the ascending one for the
/// q-deformed projectors).
FusedProjector build_reversed_projector(const ModelSpec& spec, int m,
                                        double rank_tolerance = 1e-10);

/// su(3) projectors built directly from the closed-form two- and
/// three-site vectors, with their e^{+-eta/3} weights and bilinear
/// normalizations. m must be 2 or 3.
FusedProjector build_su3_projector_oracle(Complex eta, int m);

/// Commuting family t_1(u) .. t_n(u). Projectors and fused twists are
/// computed once at construction; evaluations at distinct u are
/// independent.
class TransferFamily {
public:
    explicit TransferFamily(ModelSpec spec, double rank_tolerance = 1e-10);

    const ModelSpec& spec() const { return spec_; }

    /// Fused transfer matrix t_m(u) on the N quantum sites, 1 <= m <= n.
    TensorOperator t(int m, Complex u) const;

    /// Reversed-order projector used internally for order m.
    const Matrix& projector(int m) const { return proj_[m]; }

private:
    ModelSpec spec_;
    std::vector<Matrix> proj_;   // index m: n^m x n^m
    std::vector<Matrix> twist_;  // P (g x...x g) P per order
};

/// prod_l sinh(u - theta_l + eta) prod_k sinh(u - theta_l - k eta),
/// k = 1..n-1; the scalar the top fused transfer matrix reduces to,
/// up to the sign (-1)^{n-1}.
Complex quantum_determinant(const ModelSpec& spec, Complex u);

struct IdentityResidual {
    std::string identity;
    Complex point;
    double residual = 0.0;  // relative
};

struct FusionLadderReport {
    std::vector<IdentityResidual> checks;
    double max_residual = 0.0;
};

/// Evaluates the fused product identities at the inhomogeneity points:
/// t(theta_j) t_m(theta_j - eta) = t_{m+1}(theta_j) for m = 1..n-1,
/// t_m(theta_j + k eta) = 0 for k = 1..m-1, the scalar identity for t_n,
/// and pairwise commutativity at `commut_u`, `commut_v`.
FusionLadderReport verify_fusion_ladder(const TransferFamily& family, Complex commut_u,
                                        Complex commut_v);

}  // namespace spintorus

#endif
