#pragma once

#include <algorithm>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "adams/matrix.hpp"

namespace adams {

// Normal form of a finitely presented Z_(p)-module: free rank plus the
// nondecreasing exponents of the invariant factors p^{e_1} | p^{e_2} | ...
struct ModInvariants {
    int free_rank = 0;
    std::vector<long long> torsion;

    bool operator==(const ModInvariants& o) const
    {
        return free_rank == o.free_rank && torsion == o.torsion;
    }
    bool is_zero() const { return free_rank == 0 && torsion.empty(); }
    long long torsion_length() const
    {
        return std::accumulate(torsion.begin(), torsion.end(), 0LL);
    }
    std::string str() const
    {
        if (is_zero()) return "0";
        std::string s;
        if (free_rank > 0) s = "Z_(p)^" + std::to_string(free_rank);
        for (long long e : torsion) {
            if (!s.empty()) s += " + ";
            s += "Z/p^" + std::to_string(e);
        }
        return s;
    }
};

// Module presented as Z_(p)^ngens / (column span of `relations`).
// The SNF of the presentation is computed once at construction and shared by
// copies; generator indexing is never rewritten behind the caller's back.
struct FPModule {
    Int p;
    int ngens = 0;
    Mat relations;  // ngens x (number of relations)
    std::shared_ptr<const LinSolver> rel;
    ModInvariants inv;

    static FPModule make(const Int& p, int ngens, Mat relations)
    {
        ADAMS_REQUIRE(relations.rows == ngens || (relations.rows == 0 && relations.cols == 0),
                      "relation matrix must have ngens rows");
        if (relations.rows == 0 && relations.cols == 0) relations = Mat(ngens, 0);
        for (const auto& x : relations.a)
            ADAMS_REQUIRE(is_p_local(x, p), "relation entry outside Z_(p)");
        FPModule m;
        m.p = p;
        m.ngens = ngens;
        m.relations = std::move(relations);
        m.rel = std::make_shared<LinSolver>(m.relations, p);
        m.inv.free_rank = ngens - m.rel->s.rank;
        for (long long e : m.rel->s.exps)
            if (e > 0) m.inv.torsion.push_back(e);
        std::sort(m.inv.torsion.begin(), m.inv.torsion.end());
        return m;
    }

    static FPModule zero(const Int& p) { return make(p, 0, Mat(0, 0)); }
    static FPModule free_module(const Int& p, int rank) { return make(p, rank, Mat(rank, 0)); }
    static FPModule cyclic(const Int& p, long long e)  // Z/p^e
    {
        Mat r(1, 1);
        r.at(0, 0) = Scalar(pow_int(p, static_cast<unsigned long>(e)));
        return make(p, 1, r);
    }

    bool is_zero() const { return inv.is_zero(); }
    bool is_finite() const { return inv.free_rank == 0; }
    bool is_torsion_free() const { return inv.torsion.empty(); }

    // v is in the column span of the relations
    bool in_relation_span(const Mat& v) const { return rel->solve(v).has_value(); }
    bool cols_in_relation_span(const Mat& m) const { return rel->solve_matrix(m).has_value(); }
};

inline bool same_presentation(const FPModule& a, const FPModule& b)
{
    return a.p == b.p && a.ngens == b.ngens && a.relations == b.relations;
}

// order-of-summand agnostic isomorphism test
inline bool iso_test(const FPModule& a, const FPModule& b) { return a.inv == b.inv; }

inline FPModule direct_sum(const FPModule& a, const FPModule& b)
{
    Mat rel = block2x2(a.relations, Mat(a.ngens, b.relations.cols),
                       Mat(b.ngens, a.relations.cols), b.relations);
    return FPModule::make(a.p, a.ngens + b.ngens, rel);
}

// relations satisfied by the columns of S inside M, i.e. a presentation of
// the submodule they generate
inline Mat submodule_relations(const FPModule& m, const Mat& S)
{
    ADAMS_REQUIRE(S.rows == m.ngens, "submodule generator shape mismatch");
    LinSolver ls(hstack(S, m.relations), m.p);
    Mat K = ls.kernel();
    Mat top(S.cols, K.cols);
    for (int i = 0; i < S.cols; ++i)
        for (int j = 0; j < K.cols; ++j) top.at(i, j) = K.at(i, j);
    return top;
}

// coordinates of the columns of V with respect to the generators S, modulo
// the relations of M; empty when V is not in the span
inline std::optional<Mat> express_in(const FPModule& m, const Mat& S, const Mat& V)
{
    ADAMS_REQUIRE(S.rows == m.ngens && V.rows == m.ngens, "express_in shape mismatch");
    LinSolver ls(hstack(S, m.relations), m.p);
    auto sol = ls.solve_matrix(V);
    if (!sol) return std::nullopt;
    Mat top(S.cols, V.cols);
    for (int i = 0; i < S.cols; ++i)
        for (int j = 0; j < V.cols; ++j) top.at(i, j) = sol->at(i, j);
    return top;
}

// A homomorphism of finitely presented modules, given on generators.
// Construction certifies well-definedness: the matrix must carry every
// source relation into the relation span of the target.
struct ModuleMap {
    FPModule source, target;
    Mat matrix;  // target.ngens x source.ngens

    static ModuleMap make(FPModule source, FPModule target, Mat matrix)
    {
        ADAMS_REQUIRE(matrix.rows == target.ngens && matrix.cols == source.ngens,
                      "module map shape mismatch");
        ADAMS_PRECONDITION(target.cols_in_relation_span(matrix * source.relations),
                           "matrix does not define a module map");
        ModuleMap f;
        f.source = std::move(source);
        f.target = std::move(target);
        f.matrix = std::move(matrix);
        return f;
    }

    static ModuleMap identity(const FPModule& m)
    {
        return make(m, m, Mat::identity(m.ngens));
    }
    static ModuleMap zero(const FPModule& src, const FPModule& tgt)
    {
        return make(src, tgt, Mat(tgt.ngens, src.ngens));
    }

    bool is_zero_map() const { return target.cols_in_relation_span(matrix); }
};

inline bool maps_equal(const ModuleMap& f, const ModuleMap& g)
{
    ADAMS_REQUIRE(f.matrix.rows == g.matrix.rows && f.matrix.cols == g.matrix.cols,
                  "maps_equal shape mismatch");
    return f.target.cols_in_relation_span(f.matrix - g.matrix);
}

inline ModuleMap compose(const ModuleMap& g, const ModuleMap& f)
{
    ADAMS_REQUIRE(same_presentation(g.source, f.target), "composition type mismatch");
    return ModuleMap::make(f.source, g.target, g.matrix * f.matrix);
}

struct KernelData {
    FPModule module;
    ModuleMap inclusion;  // module -> source of f
};

// kernel of f as a module with its inclusion; the universal property is
// certified by f o incl = 0 plus exact rank/length bookkeeping in the tests
inline KernelData kernel(const ModuleMap& f)
{
    const FPModule& M = f.source;
    const FPModule& N = f.target;
    LinSolver ls(hstack(f.matrix, N.relations), M.p);
    Mat K = ls.kernel();
    Mat S(M.ngens, K.cols);
    for (int i = 0; i < M.ngens; ++i)
        for (int j = 0; j < K.cols; ++j) S.at(i, j) = K.at(i, j);
    FPModule ker = FPModule::make(M.p, S.cols, submodule_relations(M, S));
    ModuleMap incl = ModuleMap::make(ker, M, S);
    ADAMS_REQUIRE(compose(f, incl).is_zero_map(), "kernel inclusion not annihilated");
    return {std::move(ker), std::move(incl)};
}

struct CokernelData {
    FPModule module;
    ModuleMap projection;  // target of f -> module
};

inline CokernelData cokernel(const ModuleMap& f)
{
    const FPModule& N = f.target;
    FPModule coker = FPModule::make(N.p, N.ngens, hstack(N.relations, f.matrix));
    ModuleMap proj = ModuleMap::make(N, coker, Mat::identity(N.ngens));
    return {std::move(coker), std::move(proj)};
}

// image of f presented as source/kernel
inline FPModule image_module(const ModuleMap& f)
{
    KernelData k = kernel(f);
    return FPModule::make(f.source.p, f.source.ngens,
                          hstack(f.source.relations, k.inclusion.matrix));
}

inline bool is_injective(const ModuleMap& f) { return kernel(f).module.is_zero(); }
inline bool is_surjective(const ModuleMap& f) { return cokernel(f).module.is_zero(); }
inline bool is_bijective(const ModuleMap& f) { return is_injective(f) && is_surjective(f); }

// Subquotient span(Z)/span(B) of M, with representatives tracked by the
// columns of Z. Requires span(B) <= span(Z) modulo relations.
struct Subquotient {
    FPModule module;   // presented on the Z generators
    Mat reps;          // M.ngens x z, representative of each generator
    FPModule ambient;  // M

    // coordinates in the subquotient of an ambient vector lying in span(Z)
    Mat coords(const Mat& v) const
    {
        auto c = express_in(ambient, reps, v);
        ADAMS_REQUIRE(c.has_value(), "vector not in the subquotient span");
        return *c;
    }
};

inline Subquotient subquotient(const FPModule& M, const Mat& Z, const Mat& B)
{
    Mat relZ = submodule_relations(M, Z);
    auto cb = express_in(M, Z, B);
    ADAMS_REQUIRE(cb.has_value(), "subquotient: B not contained in Z");
    Subquotient sq;
    sq.module = FPModule::make(M.p, Z.cols, hstack(relZ, *cb));
    sq.reps = Z;
    sq.ambient = M;
    return sq;
}

}  // namespace adams
