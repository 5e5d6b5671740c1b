#pragma once

#include "adams/bobject.hpp"

namespace adams {

// Free resolution of a B-object over the operator ring L = Z_(p)[x^{+-1}],
// x acting through psi. Starting from a Z_(p)-presentation
//   0 -> F1 --rhat--> F0 --eps--> M -> 0          (rhat injective)
// and a lift psi0 of psi to F0 (psi1 on F1 is then unique), the stages are
//   Q2 = L (x) F1 --(rhat, -(x - psi1))--> Q1 = L (x) F0 + L (x) F1
//      --((x - psi0) | rhat)--> Q0 = L (x) F0 --> M -> 0.
// The resolution stops at Q2 by construction, which realizes the vanishing
// of Ext^s for s >= 3 structurally.
struct FreeResolution {
    BObject target;
    int f0rank = 0;
    int f1rank = 0;
    Mat rhat;  // f0rank x f1rank, injective, column span = relation span
    Mat psi0;  // f0rank x f0rank
    Mat psi1;  // f1rank x f1rank

    // index of the last nonzero stage: ranks are (f0, f0+f1, f1)
    int length() const
    {
        if (f1rank > 0) return 2;
        if (f0rank > 0) return 1;
        return 0;
    }
};

// Smallest resolution length any presentation of m admits: 0 for the zero
// module, 1 for nonzero torsion-free modules, 2 otherwise.
inline int resolution_length(const BObject& m)
{
    if (m.module.is_zero()) return 0;
    return m.module.is_torsion_free() ? 1 : 2;
}

// `lift_perturbation`, when given, must have columns in the relation span of
// m; it replaces psi0 by psi0 + perturbation, which is another valid lift of
// psi and exercises the lift-independence of Ext.
inline FreeResolution build_resolution(const BObject& m,
                                       const std::optional<Mat>& lift_perturbation = {})
{
    FreeResolution r;
    r.target = m;
    r.f0rank = m.module.ngens;

    const Snf& s = m.module.rel->s;
    Mat ud = s.Uinv * s.D;
    r.f1rank = s.rank;
    r.rhat = Mat(r.f0rank, r.f1rank);
    for (int j = 0; j < r.f1rank; ++j) r.rhat.set_col(j, ud.col(j));

    r.psi0 = m.psi;
    if (lift_perturbation) {
        ADAMS_PRECONDITION(m.module.cols_in_relation_span(*lift_perturbation),
                           "lift perturbation must vanish in the module");
        r.psi0 = r.psi0 + *lift_perturbation;
    }
    if (r.f1rank > 0) {
        LinSolver ls(r.rhat, m.ctx.p);
        auto x = ls.solve_matrix(r.psi0 * r.rhat);
        ADAMS_REQUIRE(x.has_value(), "psi does not preserve the relation lattice");
        r.psi1 = *x;
        // the chain-lift identity, exactly
        ADAMS_REQUIRE(r.rhat * r.psi1 == r.psi0 * r.rhat, "psi lift identity failed");
        // rhat injective: its kernel over Z_(p) is trivial
        ADAMS_REQUIRE(ls.kernel().cols == 0, "rhat is not injective");
    }
    else {
        r.psi1 = Mat(0, 0);
    }
    ADAMS_REQUIRE(r.length() <= 2, "resolution exceeded length 2");
    return r;
}

}  // namespace adams
