#pragma once

#include <set>

#include "adams/context.hpp"
#include "adams/module.hpp"

namespace adams {

// Object of the category B: a finitely presented Z_(p)-module together with
// an invertible operator psi (the action of psi^g) and a declared finite set
// of weights. Construction certifies:
//   - psi is a well-defined bijective endomorphism,
//   - the minimal polynomial of psi on M (x) Q divides
//     prod_{j in weights} (x - g^{j(p-1)}), checked as: the product of the
//     factors has torsion image.
struct BObject {
    Context ctx;
    FPModule module;
    Mat psi;
    std::set<int> weights;

    static BObject make(Context ctx, FPModule module, Mat psi, std::set<int> weights)
    {
        BObject b = make_unchecked(std::move(ctx), std::move(module), std::move(psi),
                                   std::move(weights));
        b.certify();
        return b;
    }

    // for operations that provably preserve the invariants (twist, sums)
    static BObject make_unchecked(Context ctx, FPModule module, Mat psi,
                                  std::set<int> weights)
    {
        BObject b;
        b.ctx = std::move(ctx);
        b.module = std::move(module);
        b.psi = std::move(psi);
        b.weights = std::move(weights);
        return b;
    }

    void certify() const
    {
        ModuleMap op = ModuleMap::make(module, module, psi);  // well-definedness
        ADAMS_PRECONDITION(is_bijective(op), "psi is not invertible");
        Mat prod = Mat::identity(module.ngens);
        for (int w : weights) {
            Mat factor = psi - Mat::scalar(module.ngens, ctx.twist_unit(w));
            prod = factor * prod;
        }
        ModuleMap pm = ModuleMap::make(module, module, prod);
        ADAMS_PRECONDITION(image_module(pm).inv.free_rank == 0,
                           "weight condition fails: psi has a rational eigenvalue "
                           "outside the declared weights");
    }

    static BObject zero(const Context& ctx)
    {
        return make_unchecked(ctx, FPModule::zero(ctx.p), Mat(0, 0), {});
    }

    bool is_zero() const { return module.is_zero(); }

    ModuleMap psi_map() const { return ModuleMap::make(module, module, psi); }
};

// T^{j(p-1)}: same module, psi rescaled by g^{j(p-1)}, weights shifted by j.
inline BObject twist(long long j, const BObject& m)
{
    std::set<int> w;
    for (int x : m.weights) w.insert(x + static_cast<int>(j));
    return BObject::make_unchecked(m.ctx, m.module, m.ctx.twist_unit(j) * m.psi, w);
}

inline bool bobj_equal(const BObject& a, const BObject& b)
{
    if (!(a.ctx == b.ctx) || !same_presentation(a.module, b.module)) return false;
    if (a.weights != b.weights) return false;
    return a.module.cols_in_relation_span(a.psi - b.psi);
}

inline BObject direct_sum(const BObject& a, const BObject& b)
{
    ADAMS_REQUIRE(a.ctx == b.ctx, "direct sum across contexts");
    std::set<int> w = a.weights;
    w.insert(b.weights.begin(), b.weights.end());
    return BObject::make_unchecked(
        a.ctx, direct_sum(a.module, b.module),
        block2x2(a.psi, Mat(a.module.ngens, b.module.ngens),
                 Mat(b.module.ngens, a.module.ngens), b.psi),
        w);
}

// Morphism of B: a module map commuting with the operators, exactly.
struct BMorphism {
    BObject source, target;
    Mat matrix;

    static BMorphism make(BObject source, BObject target, Mat matrix)
    {
        ModuleMap f = ModuleMap::make(source.module, target.module, matrix);
        ADAMS_PRECONDITION(
            target.module.cols_in_relation_span(matrix * source.psi -
                                                target.psi * matrix),
            "map is not psi-equivariant");
        BMorphism m;
        m.source = std::move(source);
        m.target = std::move(target);
        m.matrix = std::move(matrix);
        return m;
    }

    static BMorphism identity(const BObject& b)
    {
        return make(b, b, Mat::identity(b.module.ngens));
    }
    static BMorphism zero(const BObject& s, const BObject& t)
    {
        return make(s, t, Mat(t.module.ngens, s.module.ngens));
    }

    ModuleMap map() const { return ModuleMap::make(source.module, target.module, matrix); }
    bool is_zero_map() const { return target.module.cols_in_relation_span(matrix); }
};

inline BMorphism compose(const BMorphism& g, const BMorphism& f)
{
    ADAMS_REQUIRE(same_presentation(g.source.module, f.target.module),
                  "B-morphism composition mismatch");
    return BMorphism::make(f.source, g.target, g.matrix * f.matrix);
}

inline BMorphism twist(long long j, const BMorphism& f)
{
    return BMorphism::make(twist(j, f.source), twist(j, f.target), f.matrix);
}

// The group Hom_B(m, n) of equivariant maps, computed as the kernel of
//   A |-> (A * R_m, A psi_m - psi_n A)
// on the module of generator-level matrices N^{ngens(m)}. Generators come
// with representative matrices; coords_of inverts the representation.
struct BHom {
    BObject source, target;
    FPModule grp;
    FPModule ambient;        // N^{ngens(m)} in column-major vec coordinates
    Mat incl;                // ambient coords of the generators
    std::vector<Mat> basis;  // representative matrices

    Mat matrix_of(const Mat& coords) const
    {
        ADAMS_REQUIRE(coords.rows == grp.ngens && coords.cols == 1, "bad hom coords");
        return unvec(incl * coords, target.module.ngens, source.module.ngens);
    }

    std::optional<Mat> coords_of(const Mat& A) const
    {
        return express_in(ambient, incl, vec_of(A));
    }
};

inline BHom hom_B(const BObject& m, const BObject& n)
{
    const int ns = m.module.ngens, nt = n.module.ngens;
    const Int& p = m.ctx.p;
    FPModule ambient =
        FPModule::make(p, nt * ns, kron(Mat::identity(ns), n.module.relations));
    const Mat& Rm = m.module.relations;
    FPModule relmod =
        FPModule::make(p, nt * Rm.cols, kron(Mat::identity(Rm.cols), n.module.relations));
    Mat relcond = kron(Rm.transposed(), Mat::identity(nt));
    Mat eqcond = kron(m.psi.transposed(), Mat::identity(nt)) -
                 kron(Mat::identity(ns), n.psi);
    ModuleMap mu = ModuleMap::make(ambient, direct_sum(relmod, ambient),
                                   vstack(relcond, eqcond));
    KernelData k = kernel(mu);
    BHom h;
    h.source = m;
    h.target = n;
    h.grp = k.module;
    h.ambient = std::move(ambient);
    h.incl = k.inclusion.matrix;
    for (int j = 0; j < h.incl.cols; ++j) h.basis.push_back(unvec(h.incl.col(j), nt, ns));
    return h;
}

// postcomposition Hom(m, n) -> Hom(m, n') with an equivariant u : n -> n'
inline ModuleMap hom_post(const BMorphism& u, const BHom& from, const BHom& to)
{
    Mat C(to.grp.ngens, from.grp.ngens);
    for (int j = 0; j < from.grp.ngens; ++j) {
        auto c = to.coords_of(u.matrix * from.basis[static_cast<size_t>(j)]);
        ADAMS_REQUIRE(c.has_value(), "postcomposition left the hom group");
        C.set_col(j, *c);
    }
    return ModuleMap::make(from.grp, to.grp, C);
}

// precomposition Hom(m, n) -> Hom(m', n) with an equivariant v : m' -> m
inline ModuleMap hom_pre(const BMorphism& v, const BHom& from, const BHom& to)
{
    Mat C(to.grp.ngens, from.grp.ngens);
    for (int j = 0; j < from.grp.ngens; ++j) {
        auto c = to.coords_of(from.basis[static_cast<size_t>(j)] * v.matrix);
        ADAMS_REQUIRE(c.has_value(), "precomposition left the hom group");
        C.set_col(j, *c);
    }
    return ModuleMap::make(from.grp, to.grp, C);
}

}  // namespace adams
