#include <catch2/catch_amalgamated.hpp>

#include "adams/module.hpp"
#include "adams/rng.hpp"

using namespace adams;

namespace {

const Int P3 = 3;

Mat mat(int r, int c, std::initializer_list<long long> xs)
{
    Mat m(r, c);
    int i = 0;
    for (long long x : xs) m.a[i++] = Scalar(x);
    return m;
}

bool unit_determinant(const Mat& m, const Int& p)
{
    Snf s = snf(m, p);
    if (s.rank != m.rows || m.rows != m.cols) return false;
    for (long long e : s.exps)
        if (e != 0) return false;
    return true;
}

Mat random_mat(Rng& rng, int r, int c)
{
    Mat m(r, c);
    for (auto& x : m.a) {
        long long n = rng.range(-12, 12);
        long long d = 1 + 2 * rng.below(3);  // 1, 3, 5 -> avoid p=3 in denominator
        if (d % 3 == 0) d += 1;
        x = Scalar(Int(n), Int(d));
    }
    return m;
}

FPModule random_finite_module(Rng& rng)
{
    int n = 1 + rng.below(3);
    Mat rel(n, n);
    for (int i = 0; i < n; ++i) rel.at(i, i) = Scalar(pow_int(3, 1 + rng.below(2)));
    return FPModule::make(P3, n, rel);
}

}  // namespace

TEST_CASE("scalar arithmetic stays in lowest terms and p-local", "[linalg]")
{
    Scalar a(Int(4), Int(6));
    CHECK(a.num == 2);
    CHECK(a.den == 3);
    CHECK(is_p_local(a, 5));
    CHECK_FALSE(is_p_local(a, 3));
    CHECK(is_unit(Scalar(2), 3));
    CHECK_FALSE(is_unit(Scalar(6), 3));
    CHECK(valuation(Scalar(18), 3) == 2);
    CHECK(parse_scalar("-4/6").str() == "-2/3");
    CHECK(parse_scalar("7").str() == "7");
    CHECK_THROWS_AS(parse_scalar("x/2"), parse_error);
    // canonical residues: 1/2 = 5 mod 9
    CHECK(residue_mod(Scalar(Int(1), Int(2)), 3, 2) == 5);
}

TEST_CASE("snf of the 1x1 zero matrix", "[linalg]")
{
    Snf s = snf(mat(1, 1, {0}), P3);
    CHECK(s.rank == 0);
    CHECK(s.D.at(0, 0).is_zero());
}

TEST_CASE("snf kills a matrix of 3-local units", "[linalg]")
{
    // 2 and det = -8 are 3-local units, so D = diag(1,1); the oracle is the
    // direct product check U*m*V = D.
    Mat m = mat(2, 2, {2, 4, 6, 8});
    Snf s = snf(m, P3);
    REQUIRE(s.rank == 2);
    CHECK(s.exps == std::vector<long long>{0, 0});
    CHECK(s.U * m * s.V == s.D);
    CHECK(s.D == Mat::identity(2));
    CHECK(unit_determinant(s.U, P3));
    CHECK(unit_determinant(s.V, P3));
}

TEST_CASE("snf fixes a matrix already in normal form", "[linalg]")
{
    Mat m = mat(2, 2, {3, 0, 0, 9});
    Snf s = snf(m, P3);
    CHECK(s.D == m);
    CHECK(s.exps == std::vector<long long>{1, 2});
}

TEST_CASE("snf identities on random matrices", "[linalg]")
{
    Rng rng(42);
    for (int trial = 0; trial < 60; ++trial) {
        int r = 1 + rng.below(4), c = 1 + rng.below(4);
        Mat m = random_mat(rng, r, c);
        Snf s = snf(m, P3);
        CHECK(s.U * m * s.V == s.D);
        CHECK(s.U * s.Uinv == Mat::identity(r));
        CHECK(s.Uinv * s.U == Mat::identity(r));
        CHECK(s.V * s.Vinv == Mat::identity(c));
        CHECK(unit_determinant(s.U, P3));
        CHECK(unit_determinant(s.V, P3));
        for (size_t i = 1; i < s.exps.size(); ++i) CHECK(s.exps[i - 1] <= s.exps[i]);
        // off-diagonal zero, diagonal a power of p
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                if (i != j) CHECK(s.D.at(i, j).is_zero());
    }
}

TEST_CASE("linear solve finds exact p-local solutions", "[linalg]")
{
    Rng rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        int r = 1 + rng.below(3), c = 1 + rng.below(3);
        Mat A = random_mat(rng, r, c);
        Mat x = random_mat(rng, c, 1);
        LinSolver ls(A, P3);
        auto sol = ls.solve(A * x);
        REQUIRE(sol.has_value());
        CHECK(A * *sol == A * x);
        Mat K = ls.kernel();
        CHECK((A * K).is_zero());
    }
    // insolvable: 3x = 1 over Z_(3)
    LinSolver ls(mat(1, 1, {3}), P3);
    CHECK_FALSE(ls.solve(mat(1, 1, {1})).has_value());
    CHECK(ls.solve(mat(1, 1, {6})).has_value());
}

TEST_CASE("kernel of identity and of injective maps is zero", "[linalg]")
{
    FPModule z3loc = FPModule::free_module(P3, 1);
    CHECK(kernel(ModuleMap::identity(z3loc)).module.is_zero());
    // multiplication by 3 on a torsion-free module is injective
    ModuleMap mul3 = ModuleMap::make(z3loc, z3loc, mat(1, 1, {3}));
    CHECK(kernel(mul3).module.is_zero());
}

TEST_CASE("kernel of multiplication by 3 on Z/9", "[linalg]")
{
    // oracle: enumerate x in Z/9 with 3x = 0 mod 9
    int oracle = 0;
    for (int x = 0; x < 9; ++x)
        if ((3 * x) % 9 == 0) ++oracle;
    REQUIRE(oracle == 3);

    FPModule z9 = FPModule::cyclic(P3, 2);
    ModuleMap mul3 = ModuleMap::make(z9, z9, mat(1, 1, {3}));
    FPModule ker = kernel(mul3).module;
    CHECK(ker.inv.free_rank == 0);
    CHECK(ker.inv.torsion == std::vector<long long>{1});  // Z/3, order 3 = oracle
}

TEST_CASE("cokernel basics", "[linalg]")
{
    FPModule z3loc = FPModule::free_module(P3, 1);
    CHECK(cokernel(ModuleMap::identity(z3loc)).module.is_zero());
    CHECK(cokernel(ModuleMap::make(z3loc, z3loc, mat(1, 1, {3}))).module.inv.torsion ==
          std::vector<long long>{1});
    // 2 is a unit at p = 3
    CHECK(cokernel(ModuleMap::make(z3loc, z3loc, mat(1, 1, {2}))).module.is_zero());
}

TEST_CASE("iso_test compares normal forms only", "[linalg]")
{
    FPModule a = direct_sum(FPModule::cyclic(P3, 1), FPModule::cyclic(P3, 2));
    FPModule b = direct_sum(FPModule::cyclic(P3, 2), FPModule::cyclic(P3, 1));
    CHECK(iso_test(a, b));
    FPModule c = direct_sum(FPModule::cyclic(P3, 1), FPModule::cyclic(P3, 1));
    CHECK_FALSE(iso_test(FPModule::cyclic(P3, 2), c));
    // cokernel of diag(3,9) inside Z^2
    FPModule free2 = FPModule::free_module(P3, 2);
    ModuleMap d = ModuleMap::make(free2, free2, mat(2, 2, {3, 0, 0, 9}));
    CHECK(iso_test(cokernel(d).module, a));
}

TEST_CASE("iso_test is invariant under Tietze moves", "[linalg]")
{
    Rng rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        FPModule m = random_finite_module(rng);
        // add a redundant generator equal to a combination of the old ones
        Mat combo(m.ngens, 1);
        for (int i = 0; i < m.ngens; ++i) combo.at(i, 0) = Scalar(rng.range(-4, 4));
        Mat rel2 = block2x2(m.relations, combo, Mat(1, m.relations.cols),
                            mat(1, 1, {-1}));
        FPModule m2 = FPModule::make(P3, m.ngens + 1, rel2);
        CHECK(iso_test(m, m2));
        // duplicate a relation
        if (m.relations.cols > 0) {
            FPModule m3 =
                FPModule::make(P3, m.ngens, hstack(m.relations, m.relations.col(0)));
            CHECK(iso_test(m, m3));
        }
    }
}

TEST_CASE("rank and length bookkeeping along kernel/image", "[linalg]")
{
    Rng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        FPModule m = random_finite_module(rng);
        FPModule n = random_finite_module(rng);
        // build a valid random map by solving for well-definedness: use
        // multiples of appropriate powers; simplest valid maps: compose a
        // random integer matrix with enough p-power to land in relations.
        Mat raw(n.ngens, m.ngens);
        for (auto& x : raw.a) x = Scalar(rng.range(-9, 9));
        // force well-definedness: multiply by p^max exponent of target
        long long e = 0;
        for (long long t : n.inv.torsion) e = std::max(e, t);
        Mat scaled = Scalar(pow_int(3, static_cast<unsigned long>(e))) * raw;
        // scaled sends every generator to p^e * something, which kills all
        // relations of m up to target relations when e is large enough; if
        // not well-defined, skip the trial.
        bool ok = n.cols_in_relation_span(scaled * m.relations);
        if (!ok) continue;
        ModuleMap f = ModuleMap::make(m, n, scaled);
        KernelData k = kernel(f);
        FPModule img = image_module(f);
        CHECK(compose(f, k.inclusion).is_zero_map());
        CHECK(k.module.inv.free_rank + img.inv.free_rank == m.inv.free_rank);
        if (m.is_finite()) {
            CHECK(k.module.inv.torsion_length() + img.inv.torsion_length() ==
                  m.inv.torsion_length());
        }
    }
}

TEST_CASE("subquotient with representative tracking", "[linalg]")
{
    // inside Z/9 + Z/3: Z = whole module, B = first summand's 3-multiples
    FPModule m = direct_sum(FPModule::cyclic(P3, 2), FPModule::cyclic(P3, 1));
    Mat Z = Mat::identity(2);
    Mat B(2, 1);
    B.at(0, 0) = Scalar(3);
    Subquotient sq = subquotient(m, Z, B);
    CHECK(sq.module.inv.torsion == std::vector<long long>{1, 1});
    Mat v(2, 1);
    v.at(0, 0) = Scalar(4);
    Mat c = sq.coords(v);
    CHECK(c.rows == 2);
}

TEST_CASE("express_in solves membership exactly", "[linalg]")
{
    FPModule m = FPModule::cyclic(P3, 2);  // Z/9
    Mat S = mat(1, 1, {3});                // submodule 3Z/9
    CHECK(express_in(m, S, mat(1, 1, {6})).has_value());
    CHECK_FALSE(express_in(m, S, mat(1, 1, {1})).has_value());
    CHECK(express_in(m, S, mat(1, 1, {9})).has_value());  // 9 = 0 in Z/9
}
