#pragma once

#include "adams/bobject.hpp"

namespace adams {

// Object of A in the fundamental-window representation: one B-object per
// internal degree 0 .. 2p-3. The full grading is generated by
// M_{n+2p-2} = T^{p-1}(M_n), so degree qN + r carries twist(q, comp[r]).
struct AObject {
    Context ctx;
    std::vector<BObject> comp;

    static AObject make(Context ctx, std::vector<BObject> comp)
    {
        ADAMS_PRECONDITION(static_cast<int>(comp.size()) == ctx.period,
                           "A-object needs exactly 2p-2 components");
        for (const auto& c : comp)
            ADAMS_REQUIRE(c.ctx == ctx, "component context mismatch");
        AObject a;
        a.ctx = std::move(ctx);
        a.comp = std::move(comp);
        return a;
    }

    static AObject zero(const Context& ctx)
    {
        return make(ctx, std::vector<BObject>(static_cast<size_t>(ctx.period),
                                              BObject::zero(ctx)));
    }

    bool is_zero() const
    {
        for (const auto& c : comp)
            if (!c.is_zero()) return false;
        return true;
    }

    // component in internal degree n, for any n
    BObject at_degree(long long n) const
    {
        auto [q, r] = divmod_floor(n, ctx.period);
        return twist(q, comp[static_cast<size_t>(r)]);
    }
};

inline AObject split_embed(int i, const BObject& m)
{
    ADAMS_REQUIRE(0 <= i && i < m.ctx.period, "internal degree out of window");
    AObject a = AObject::zero(m.ctx);
    a.comp[static_cast<size_t>(i)] = m;
    return a;
}

inline std::vector<BObject> split_project(const AObject& a) { return a.comp; }

// internal shift: M[i]_n = M_{n-i}, window components re-twisted on wrap
inline AObject shift_internal(long long i, const AObject& a)
{
    std::vector<BObject> c;
    for (int j = 0; j < a.ctx.period; ++j) c.push_back(a.at_degree(j - i));
    return AObject::make(a.ctx, std::move(c));
}

// The self-equivalence T^{p-1} of A: rotate components one slot upward and
// twist each by one. Iterating 2p-2 times gives the levelwise twist by
// g^{(2p-2)(p-1)}.
inline AObject rotate(const AObject& a)
{
    std::vector<BObject> c;
    const int N = a.ctx.period;
    for (int j = 0; j < N; ++j)
        c.push_back(twist(1, a.comp[static_cast<size_t>((j - 1 + N) % N)]));
    return AObject::make(a.ctx, std::move(c));
}

inline AObject rotate_inv(const AObject& a)
{
    std::vector<BObject> c;
    const int N = a.ctx.period;
    for (int j = 0; j < N; ++j)
        c.push_back(twist(-1, a.comp[static_cast<size_t>((j + 1) % N)]));
    return AObject::make(a.ctx, std::move(c));
}

inline AObject rotate_by(long long k, AObject a)
{
    for (; k > 0; --k) a = rotate(a);
    for (; k < 0; ++k) a = rotate_inv(a);
    return a;
}

inline AObject direct_sum(const AObject& a, const AObject& b)
{
    std::vector<BObject> c;
    for (int j = 0; j < a.ctx.period; ++j)
        c.push_back(direct_sum(a.comp[static_cast<size_t>(j)],
                               b.comp[static_cast<size_t>(j)]));
    return AObject::make(a.ctx, std::move(c));
}

inline bool aobj_equal(const AObject& a, const AObject& b)
{
    if (!(a.ctx == b.ctx)) return false;
    for (int j = 0; j < a.ctx.period; ++j)
        if (!bobj_equal(a.comp[static_cast<size_t>(j)], b.comp[static_cast<size_t>(j)]))
            return false;
    return true;
}

// componentwise isomorphism of underlying modules (weight data aside)
inline bool aobj_iso_modules(const AObject& a, const AObject& b)
{
    for (int j = 0; j < a.ctx.period; ++j)
        if (!iso_test(a.comp[static_cast<size_t>(j)].module,
                      b.comp[static_cast<size_t>(j)].module))
            return false;
    return true;
}

// Degree-preserving morphism of A: one equivariant component map per slot.
struct AMorphism {
    AObject source, target;
    std::vector<Mat> comps;

    static AMorphism make(AObject source, AObject target, std::vector<Mat> comps)
    {
        ADAMS_REQUIRE(static_cast<int>(comps.size()) == source.ctx.period,
                      "A-morphism needs one matrix per slot");
        for (int j = 0; j < source.ctx.period; ++j)
            BMorphism::make(source.comp[static_cast<size_t>(j)],
                            target.comp[static_cast<size_t>(j)],
                            comps[static_cast<size_t>(j)]);  // certifies
        AMorphism f;
        f.source = std::move(source);
        f.target = std::move(target);
        f.comps = std::move(comps);
        return f;
    }

    static AMorphism identity(const AObject& a)
    {
        std::vector<Mat> c;
        for (const auto& b : a.comp) c.push_back(Mat::identity(b.module.ngens));
        return make(a, a, std::move(c));
    }

    static AMorphism zero(const AObject& s, const AObject& t)
    {
        std::vector<Mat> c;
        for (int j = 0; j < s.ctx.period; ++j)
            c.push_back(Mat(t.comp[static_cast<size_t>(j)].module.ngens,
                            s.comp[static_cast<size_t>(j)].module.ngens));
        return make(s, t, std::move(c));
    }

    BMorphism slot(int j) const
    {
        return BMorphism::make(source.comp[static_cast<size_t>(j)],
                               target.comp[static_cast<size_t>(j)],
                               comps[static_cast<size_t>(j)]);
    }

    bool is_zero_map() const
    {
        for (int j = 0; j < source.ctx.period; ++j)
            if (!target.comp[static_cast<size_t>(j)].module.cols_in_relation_span(
                    comps[static_cast<size_t>(j)]))
                return false;
        return true;
    }
};

inline AMorphism compose(const AMorphism& g, const AMorphism& f)
{
    std::vector<Mat> c;
    for (int j = 0; j < f.source.ctx.period; ++j)
        c.push_back(g.comps[static_cast<size_t>(j)] * f.comps[static_cast<size_t>(j)]);
    return AMorphism::make(f.source, g.target, std::move(c));
}

inline AMorphism rotate(const AMorphism& f)
{
    const int N = f.source.ctx.period;
    std::vector<Mat> c;
    for (int j = 0; j < N; ++j) c.push_back(f.comps[static_cast<size_t>((j - 1 + N) % N)]);
    return AMorphism::make(rotate(f.source), rotate(f.target), std::move(c));
}

// Hom_A(a, b) slot by slot; split components in distinct degrees are
// orthogonal by construction.
inline std::vector<BHom> hom_A(const AObject& a, const AObject& b)
{
    std::vector<BHom> h;
    for (int j = 0; j < a.ctx.period; ++j)
        h.push_back(hom_B(a.comp[static_cast<size_t>(j)], b.comp[static_cast<size_t>(j)]));
    return h;
}

}  // namespace adams
