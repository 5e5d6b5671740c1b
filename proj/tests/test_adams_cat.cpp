#include <catch2/catch_amalgamated.hpp>

#include "adams/gen.hpp"

using namespace adams;

namespace {

const Context C3 = Context::default_context();

BObject free_wt(int w, const Scalar& psi_override = Scalar(0))
{
    Scalar u = psi_override.is_zero() ? C3.twist_unit(w) : psi_override;
    return BObject::make(C3, FPModule::free_module(3, 1), Mat::scalar(1, u), {w});
}

BObject cyclic_psi(long long e, long long psi)
{
    return BObject::make(C3, FPModule::cyclic(3, e), Mat::scalar(1, Scalar(psi)), {});
}

// element-level oracle: equivariant maps between scalar-psi cyclic modules
// Z/3^a -> Z/3^b, counted by direct enumeration
int count_equivariant_maps(long long a, long long b, long long u, long long v)
{
    long long pa = 1, pb = 1;
    for (int i = 0; i < a; ++i) pa *= 3;
    for (int i = 0; i < b; ++i) pb *= 3;
    int count = 0;
    for (long long c = 0; c < pb; ++c) {
        if ((c * pa) % pb != 0) continue;  // not well defined
        // equivariance: c(u - v) x = 0 mod 3^b for all x
        if ((c * (u - v)) % pb == 0) ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("context validation", "[adams_cat]")
{
    CHECK(C3.period == 4);
    CHECK(C3.twist_unit(1) == Scalar(4));
    CHECK(C3.twist_unit(-1) == Scalar(Int(1), Int(4)));
    CHECK_NOTHROW(Context::make(5, 2));
    CHECK_THROWS_AS(Context::make(9, 2), precondition_error);   // not prime
    CHECK_THROWS_AS(Context::make(2, 1), precondition_error);   // not odd
    CHECK_THROWS_AS(Context::make(3, 4), precondition_error);   // 4^3 = 1 mod 9
    CHECK_THROWS_AS(Context::make(3, 6), precondition_error);   // not a unit
}

TEST_CASE("B-object certification", "[adams_cat]")
{
    CHECK_NOTHROW(free_wt(0));
    CHECK_NOTHROW(free_wt(1));
    // psi = 2 has no eigenvalue of the form 4^j
    CHECK_THROWS_AS(free_wt(0, Scalar(2)), precondition_error);
    // psi = 3 is not invertible on Z_(3) or Z/9
    CHECK_THROWS_AS(
        BObject::make(C3, FPModule::free_module(3, 1), Mat::scalar(1, Scalar(3)), {0}),
        precondition_error);
    CHECK_THROWS_AS(
        BObject::make(C3, FPModule::cyclic(3, 2), Mat::scalar(1, Scalar(3)), {}),
        precondition_error);
    // non-semisimple free part must be rejected: [[1,1],[0,1]] with weights {0}
    Mat jordan(2, 2);
    jordan.at(0, 0) = Scalar(1);
    jordan.at(0, 1) = Scalar(1);
    jordan.at(1, 1) = Scalar(1);
    CHECK_THROWS_AS(BObject::make(C3, FPModule::free_module(3, 2), jordan, {0}),
                    precondition_error);
}

TEST_CASE("twist shifts weights and rescales psi", "[adams_cat]")
{
    BObject m = free_wt(0);
    CHECK(bobj_equal(twist(0, m), m));
    BObject t = twist(1, m);
    CHECK(t.psi.at(0, 0) == Scalar(4));
    CHECK(t.weights == std::set<int>{1});
    CHECK(bobj_equal(twist(-1, twist(1, m)), m));
    CHECK_NOTHROW(t.certify());
}

TEST_CASE("torsion-free pure weight means psi equals the twist unit", "[adams_cat]")
{
    Rng rng(19);
    for (int trial = 0; trial < 20; ++trial) {
        BObjectSpec spec;
        spec.max_free = 2;
        spec.max_torsion = 0;
        spec.allow_zero = false;
        BObject m = random_bobject(C3, rng, spec);
        if (m.weights.size() != 1) continue;
        int w = *m.weights.begin();
        Mat diff = m.psi - Mat::scalar(m.module.ngens, C3.twist_unit(w));
        CHECK(m.module.cols_in_relation_span(diff));
    }
}

TEST_CASE("hom_B contains the identity for m = n", "[adams_cat]")
{
    Rng rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        BObject m = random_bobject(C3, rng);
        BHom h = hom_B(m, m);
        auto idc = h.coords_of(Mat::identity(m.module.ngens));
        REQUIRE(idc.has_value());
        if (!m.is_zero()) CHECK_FALSE(h.grp.is_zero());
    }
}

TEST_CASE("hom_B between distinct-weight free modules vanishes", "[adams_cat]")
{
    BHom h = hom_B(free_wt(0), free_wt(1));
    CHECK(h.grp.is_zero());
}

TEST_CASE("hom_B on Z/3 with trivial action matches enumeration", "[adams_cat]")
{
    REQUIRE(count_equivariant_maps(1, 1, 1, 1) == 3);
    BHom h = hom_B(cyclic_psi(1, 1), cyclic_psi(1, 1));
    CHECK(h.grp.inv.free_rank == 0);
    CHECK(h.grp.inv.torsion == std::vector<long long>{1});
}

TEST_CASE("hom_B matches enumeration across scalar cyclic pairs", "[adams_cat]")
{
    for (long long a = 1; a <= 2; ++a)
        for (long long b = 1; b <= 2; ++b)
            for (long long u : {1, 4, 7})
                for (long long v : {1, 4, 7}) {
                    int oracle = count_equivariant_maps(a, b, u, v);
                    BHom h = hom_B(cyclic_psi(a, u), cyclic_psi(b, v));
                    REQUIRE(h.grp.is_finite());
                    long long order = 1;
                    for (long long e : h.grp.inv.torsion)
                        order *= static_cast<long long>(pow_int(3, (unsigned long)e));
                    CHECK(order == oracle);
                }
}

TEST_CASE("twist is an equivalence on hom groups", "[adams_cat]")
{
    Rng rng(29);
    for (int trial = 0; trial < 8; ++trial) {
        BObject m = random_bobject(C3, rng);
        BObject n = random_bobject(C3, rng);
        long long j = rng.range(-2, 2);
        CHECK(iso_test(hom_B(m, n).grp, hom_B(twist(j, m), twist(j, n)).grp));
    }
}

TEST_CASE("split embed and project round trip", "[adams_cat]")
{
    CHECK(split_embed(0, BObject::zero(C3)).is_zero());
    Rng rng(31);
    BObject m = random_bobject(C3, rng);
    for (int i = 0; i < C3.period; ++i) {
        auto comps = split_project(split_embed(i, m));
        for (int j = 0; j < C3.period; ++j) {
            if (j == i)
                CHECK(bobj_equal(comps[static_cast<size_t>(j)], m));
            else
                CHECK(comps[static_cast<size_t>(j)].is_zero());
        }
    }
    // two-component object projects to exactly those components
    BObject n = random_bobject(C3, rng);
    AObject two = direct_sum(split_embed(0, m), split_embed(2, n));
    auto comps = split_project(two);
    CHECK(iso_test(comps[0].module, m.module));
    CHECK(iso_test(comps[2].module, n.module));
    CHECK(comps[1].is_zero());
    CHECK(comps[3].is_zero());
}

TEST_CASE("split components in distinct degrees are orthogonal", "[adams_cat]")
{
    Rng rng(37);
    for (int trial = 0; trial < 6; ++trial) {
        BObject m = random_bobject(C3, rng);
        BObject n = random_bobject(C3, rng);
        int i = rng.below(C3.period);
        int k = (i + 1 + rng.below(C3.period - 1)) % C3.period;
        auto homs = hom_A(split_embed(i, m), split_embed(k, n));
        for (const auto& h : homs) CHECK(h.grp.is_zero());
    }
}

TEST_CASE("internal shift bookkeeping", "[adams_cat]")
{
    Rng rng(41);
    AObject a = random_aobject(C3, rng);
    CHECK(aobj_equal(shift_internal(0, a), a));
    // one full period shifts by a componentwise twist
    AObject s = shift_internal(C3.period, a);
    for (int j = 0; j < C3.period; ++j)
        CHECK(bobj_equal(s.comp[static_cast<size_t>(j)],
                         twist(-1, a.comp[static_cast<size_t>(j)])));
    // shift of a concentrated object moves the slot
    BObject m = random_bobject(C3, rng);
    CHECK(aobj_equal(shift_internal(1, split_embed(0, m)), split_embed(1, m)));
    // additivity
    AObject s2 = shift_internal(3, shift_internal(2, a));
    CHECK(aobj_equal(s2, shift_internal(5, a)));
}

TEST_CASE("rotation is the degreewise twist after a full period", "[adams_cat]")
{
    Rng rng(43);
    AObject a = random_aobject(C3, rng);
    AObject r = rotate_by(C3.period, a);
    for (int j = 0; j < C3.period; ++j)
        CHECK(bobj_equal(r.comp[static_cast<size_t>(j)],
                         twist(C3.period, a.comp[static_cast<size_t>(j)])));
    CHECK(aobj_equal(rotate_inv(rotate(a)), a));
}

TEST_CASE("hom functoriality through post- and pre-composition", "[adams_cat]")
{
    Rng rng(47);
    for (int trial = 0; trial < 5; ++trial) {
        BObject m = random_bobject(C3, rng);
        BObject n = random_bobject(C3, rng);
        BObject k = random_bobject(C3, rng);
        BHom hmn = hom_B(m, n);
        BHom hmk = hom_B(m, k);
        BMorphism u = random_bmorphism(n, k, rng);
        ModuleMap post = hom_post(u, hmn, hmk);
        // composing representatives agrees with the induced map
        for (int j = 0; j < hmn.grp.ngens; ++j) {
            Mat lhs = u.matrix * hmn.basis[static_cast<size_t>(j)];
            Mat viamap = hmk.matrix_of(post.matrix.col(j));
            CHECK(k.module.cols_in_relation_span(lhs - viamap));
        }
        BMorphism v = random_bmorphism(k, m, rng);
        BHom hkn = hom_B(k, n);
        ModuleMap pre = hom_pre(v, hmn, hkn);
        for (int j = 0; j < hmn.grp.ngens; ++j) {
            Mat lhs = hmn.basis[static_cast<size_t>(j)] * v.matrix;
            Mat viamap = hkn.matrix_of(pre.matrix.col(j));
            CHECK(n.module.cols_in_relation_span(lhs - viamap));
        }
    }
}
