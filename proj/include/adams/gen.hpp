#pragma once

#include "adams/aobject.hpp"
#include "adams/ext.hpp"
#include "adams/rng.hpp"

namespace adams {

// Seeded instance generators. Everything here is deterministic in the seed
// so generated files and test corpora are reproducible byte for byte.

inline Scalar random_unit(const Context& ctx, Rng& rng)
{
    long long p = static_cast<long long>(static_cast<int>(ctx.p));
    long long num = 0;
    do {
        num = rng.range(-3 * p, 3 * p);
    } while (num == 0 || num % p == 0);
    long long den = 0;
    do {
        den = rng.range(1, 2 * p);
    } while (den % p == 0);
    return Scalar(Int(num), Int(den));
}

// invertible change of basis with small entries, built from elementary moves
inline Mat random_unimodular(const Context& ctx, int n, Rng& rng)
{
    Mat c = Mat::identity(n);
    int moves = n + rng.below(2 * n + 1);
    for (int k = 0; k < moves && n > 1; ++k) {
        int i = rng.below(n), j = rng.below(n);
        if (i == j) continue;
        Scalar f(rng.range(-2, 2));
        if (f.is_zero()) continue;
        for (int t = 0; t < n; ++t) c.at(i, t) = c.at(i, t) + f * c.at(j, t);
    }
    // sprinkle unit row scalings
    for (int i = 0; i < n; ++i)
        if (rng.below(3) == 0) {
            Scalar u = random_unit(ctx, rng);
            for (int t = 0; t < n; ++t) c.at(i, t) = u * c.at(i, t);
        }
    return c;
}

struct BObjectSpec {
    int max_free = 1;        // free summands
    int max_torsion = 2;     // torsion summands
    long long max_exp = 2;   // exponent bound for Z/p^e
    int max_weight = 2;      // |weight| bound for free summands
    bool allow_zero = true;
    bool tietze_noise = true;
};

// Random B-object: a direct sum of rank-one free pieces of pure weight and
// cyclic torsion pieces with unit scalar action, optionally disguised by a
// change of basis and a redundant generator.
inline BObject random_bobject(const Context& ctx, Rng& rng, BObjectSpec spec = {})
{
    int nfree = rng.below(spec.max_free + 1);
    int ntors = rng.below(spec.max_torsion + 1);
    if (!spec.allow_zero && nfree + ntors == 0) ntors = 1;
    BObject b = BObject::zero(ctx);
    for (int i = 0; i < nfree; ++i) {
        int w = static_cast<int>(rng.range(-spec.max_weight, spec.max_weight));
        BObject piece = BObject::make_unchecked(ctx, FPModule::free_module(ctx.p, 1),
                                                Mat::scalar(1, ctx.twist_unit(w)), {w});
        b = direct_sum(b, piece);
    }
    for (int i = 0; i < ntors; ++i) {
        long long e = rng.range(1, spec.max_exp);
        BObject piece = BObject::make_unchecked(
            ctx, FPModule::cyclic(ctx.p, e), Mat::scalar(1, random_unit(ctx, rng)), {});
        b = direct_sum(b, piece);
    }
    if (b.module.ngens > 0) {
        Mat c = random_unimodular(ctx, b.module.ngens, rng);
        Mat cinv = inverse(c, ctx.p);
        b = BObject::make_unchecked(
            b.ctx, FPModule::make(ctx.p, b.module.ngens, c * b.module.relations),
            c * b.psi * cinv, b.weights);
    }
    if (spec.tietze_noise && b.module.ngens > 0 && rng.coin()) {
        int n = b.module.ngens;
        Mat combo(n, 1);
        for (int i = 0; i < n; ++i) combo.at(i, 0) = Scalar(rng.range(-2, 2));
        Mat rel2 = block2x2(b.module.relations, combo, Mat(1, b.module.relations.cols),
                            Mat::scalar(1, Scalar(-1)));
        Mat psi2 = block2x2(b.psi, b.psi * combo, Mat(1, n), Mat(1, 1));
        b = BObject::make_unchecked(b.ctx, FPModule::make(ctx.p, n + 1, rel2), psi2,
                                    b.weights);
    }
    return BObject::make(b.ctx, b.module, b.psi, b.weights);  // full certification
}

inline BObject random_finite_bobject(const Context& ctx, Rng& rng, long long max_exp = 2,
                                     int max_summands = 2)
{
    BObjectSpec spec;
    spec.max_free = 0;
    spec.max_torsion = max_summands;
    spec.max_exp = max_exp;
    spec.allow_zero = false;
    return random_bobject(ctx, rng, spec);
}

// random element of Hom_B(m, n)
inline BMorphism random_bmorphism(const BObject& m, const BObject& n, Rng& rng)
{
    BHom h = hom_B(m, n);
    Mat coords(h.grp.ngens, 1);
    for (int i = 0; i < h.grp.ngens; ++i) coords.at(i, 0) = Scalar(rng.range(-3, 3));
    return BMorphism::make(m, n, h.matrix_of(coords));
}

inline AObject random_aobject(const Context& ctx, Rng& rng, BObjectSpec spec = {})
{
    std::vector<BObject> comps;
    for (int j = 0; j < ctx.period; ++j) {
        if (rng.below(3) == 0)
            comps.push_back(BObject::zero(ctx));
        else
            comps.push_back(random_bobject(ctx, rng, spec));
    }
    return AObject::make(ctx, std::move(comps));
}

// random element of Ext^1(m, n), realized
inline ExtClass random_ext_class(const BObject& m, const BObject& n, Rng& rng)
{
    ExtGroup g = ext(m, n, 1);
    Mat coords(g.grp.ngens, 1);
    for (int i = 0; i < g.grp.ngens; ++i) coords.at(i, 0) = Scalar(rng.range(-2, 2));
    ExtClass cls{g, g.cocycle_of_coords(coords), std::nullopt};
    cls.realization = realize(cls);
    return cls;
}

struct Ladder {
    BMorphism fB, fG;
    ExtClass S, Stilde;
};

// liftable by construction: either push the top class forward along f_B with
// f_G = id, or pull the bottom class back along f_G with f_B = id
inline Ladder random_liftable_ladder(const Context& ctx, Rng& rng)
{
    BObject g = random_finite_bobject(ctx, rng);
    BObject b = random_finite_bobject(ctx, rng);
    if (rng.coin()) {
        BObject btilde = random_finite_bobject(ctx, rng);
        ExtClass s = random_ext_class(g, b, rng);
        BMorphism fb = random_bmorphism(b, btilde, rng);
        ExtClass stilde = pushforward(fb, s);
        stilde.realization = realize(stilde);
        return {fb, BMorphism::identity(g), s, stilde};
    }
    BObject gtilde = random_finite_bobject(ctx, rng);
    ExtClass stilde = random_ext_class(gtilde, b, rng);
    BMorphism fg = random_bmorphism(g, gtilde, rng);
    ExtClass s = pullback(fg, stilde);
    s.realization = realize(s);
    return {BMorphism::identity(b), fg, s, stilde};
}

// rejection-sampled ladder with a nonzero obstruction class
inline Ladder random_nonliftable_ladder(const Context& ctx, Rng& rng, int max_tries = 64)
{
    for (int t = 0; t < max_tries; ++t) {
        BObject g = random_finite_bobject(ctx, rng);
        BObject b = random_finite_bobject(ctx, rng);
        ExtClass s = random_ext_class(g, b, rng);
        ExtClass stilde = random_ext_class(g, b, rng);
        ExtClass obstruction = class_sub(s, stilde);
        if (!obstruction.is_zero())
            return {BMorphism::identity(b), BMorphism::identity(g), s, stilde};
    }
    throw internal_error("could not sample a non-liftable ladder");
}

}  // namespace adams
