#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gwkit/errors.hpp"
#include "gwkit/euler_data.hpp"
#include "gwkit/io.hpp"

using namespace gwkit;

namespace {

std::string data_dir = GWKIT_DATA_DIR;

GeometryPtr geo_of(const std::string& mani, const QVec& lambda)
{
    auto M = io::load_manifold(data_dir + "/manifolds/" + mani);
    return std::make_shared<const Geometry>(M, WeightSample{lambda, "test"});
}

BundleSpec bundle_of(const std::string& name)
{
    return io::load_bundle(data_dir + "/bundles/" + name);
}

AlphaRational lin(const ScalarPoly& c, const Q& k)
{
    return AlphaRational(AlphaPoly::linear(c, k));
}

}  // namespace

TEST_CASE("convex factors")
{
    auto g4 = geo_of("p4.json", {Q(1), Q(4), Q(16), Q(64)});
    // P^4, L = 5H, d = 1: prod_{k=0}^{5} (5 H(p) - k a) at every point
    LocalizedClass f = convex_factor(g4, {5}, {1});
    for (int p = 0; p < 5; ++p) {
        ScalarPoly h5 = ScalarPoly::eps(Q(5) * g4->h_eval(0, p));
        AlphaRational expect = AlphaRational::one();
        for (int k = 0; k <= 5; ++k)
            expect = expect * lin(h5, Q(-k));
        CHECK(f.at(p) == expect);
    }

    // pairing 0: single factor (the k=0 one)
    auto g11 = geo_of("p1xp1.json", {Q(1), Q(4)});
    LocalizedClass f0 = convex_factor(g11, {1, 0}, {0, 1});
    for (int p = 0; p < 4; ++p)
        CHECK(f0.at(p) == AlphaRational(ScalarPoly::eps(g11->h_eval(0, p))));

    // x off, L = H on P^1, d = 1 at p1: eps (eps - a)
    auto g1 = geo_of("p1.json", {Q(1)});
    LocalizedClass fh = convex_factor(g1, {1}, {1});
    CHECK(fh.at(0) == lin(ScalarPoly::eps(), Q(0)) * lin(ScalarPoly::eps(), Q(-1)));

    CHECK_THROWS_WITH_AS(convex_factor(g1, {-1}, {1}), doctest::Contains("NegativePairing"), Error);
}

TEST_CASE("concave factors")
{
    auto g1 = geo_of("p1.json", {Q(1)});
    // O(-1) on P^1, d = 1: empty product
    CHECK(concave_factor(g1, {-1}, {1}) == LocalizedClass::one(g1));

    // O(-3) on P^2, d = 1 at the point with H(p) = eps: (-3 eps + a)(-3 eps + 2a)
    auto g2 = geo_of("p2.json", {Q(1), Q(4)});
    LocalizedClass f = concave_factor(g2, {-3}, {1});
    ScalarPoly m3 = ScalarPoly::eps(Q(-3));
    CHECK(f.at(0) == lin(m3, Q(1)) * lin(m3, Q(2)));

    // O(-2,-2) on P^1 x P^1, d = (1,0): single factor k = 1
    auto g11 = geo_of("p1xp1.json", {Q(1), Q(4)});
    LocalizedClass f22 = concave_factor(g11, {-2, -2}, {1, 0});
    for (int p = 0; p < 4; ++p) {
        Q v = Q(-2) * g11->h_eval(0, p) - Q(2) * g11->h_eval(1, p);
        CHECK(f22.at(p) == lin(ScalarPoly::eps(v), Q(1)));
    }

    CHECK_THROWS_WITH_AS(concave_factor(g1, {1}, {1}), doctest::Contains("NonNegativePairing"), Error);
}

TEST_CASE("sigma-model Euler classes")
{
    auto g1 = geo_of("p1.json", {Q(1)});
    // P^1, d = 2 at p1: (eps - a)(eps - 2a)(-a)(-2a)
    LocalizedClass e0 = sigma_model_euler0(g1, {2});
    ScalarPoly e = ScalarPoly::eps();
    AlphaRational expect =
        lin(e, Q(-1)) * lin(e, Q(-2)) * lin(ScalarPoly::zero(), Q(-1)) * lin(ScalarPoly::zero(), Q(-2));
    CHECK(e0.at(0) == expect);

    // r = 0 and r = d
    CHECK(sigma_model_euler_r(g1, {2}, {0}) == e0);
    CHECK(sigma_model_euler_r(g1, {2}, {2}) == bar(e0));

    // P^1, d = 2, r = 1 at p1: bar((eps - a)(-a)) (eps - a)(-a)
    LocalizedClass er = sigma_model_euler_r(g1, {2}, {1});
    AlphaRational one_step = lin(e, Q(-1)) * lin(ScalarPoly::zero(), Q(-1));
    CHECK(er.at(0) == one_step.bar() * one_step);

    CHECK_THROWS_WITH_AS(sigma_model_euler_r(g1, {1}, {2}), doctest::Contains("OrderViolation"), Error);
}

TEST_CASE("Lemma factorization agrees with the direct product formula")
{
    auto g2 = geo_of("p2.json", {Q(1), Q(4)});
    for (int dd = 1; dd <= 3; ++dd)
        for (int rr = 0; rr <= dd; ++rr)
            CHECK(sigma_model_euler_r(g2, {dd}, {rr}) == sigma_model_euler_r_direct(g2, {dd}, {rr}));

    auto g11 = geo_of("p1xp1.json", {Q(1), Q(4)});
    CHECK(sigma_model_euler_r(g11, {2, 1}, {1, 1}) == sigma_model_euler_r_direct(g11, {2, 1}, {1, 1}));
}

TEST_CASE("lifted restriction")
{
    auto g1 = geo_of("p1.json", {Q(1)});
    // r = 0: unchanged
    LocalizedClass c0 = lifted_restriction(g1, {1}, {0});
    CHECK(c0.at(0) == AlphaRational(ScalarPoly::eps()));
    // H + 2a on P^1 with r = (2)
    LocalizedClass c2 = lifted_restriction(g1, {1}, {2});
    CHECK(c2.at(0) == lin(ScalarPoly::eps(), Q(2)));
    CHECK(c2.at(1) == lin(ScalarPoly::zero(), Q(2)));
}

TEST_CASE("B_d for O(-1)+O(-1) on P^1")
{
    auto g1 = geo_of("p1.json", {Q(1)});
    EulerData data(g1, bundle_of("o11_p1.json"));
    LocalizedClass b1 = data.b({1});
    for (int p = 0; p < 2; ++p) {
        AlphaRational expect = AlphaRational::one();
        for (int a = 0; a < 2; ++a)
            expect.div_linear(ScalarPoly::eps(g1->divisor_eval(a, p)), Q(-1));
        CHECK(b1.at(p) == expect);
    }
    // deg_alpha B_d = -rk V^- = -2
    for (int dd = 1; dd <= 3; ++dd) {
        LocalizedClass bd = data.b({dd});
        for (int p = 0; p < 2; ++p)
            CHECK(bd.at(p).alpha_degree() == -2);
    }
}

TEST_CASE("rank-3 concave CY-type spec has alpha degree -3")
{
    // O(-1)^3 on P^2: sum c1(L-) = c1(X), so deg_alpha B_d = -rk V^- = -3.
    auto g2 = geo_of("p2.json", {Q(1), Q(4)});
    BundleSpec spec{{}, {{-1}, {-1}, {-1}}, false, {}};
    EulerData data(g2, spec);
    CHECK(data.cy_type());
    for (int dd = 1; dd <= 2; ++dd) {
        LocalizedClass bd = data.b({dd});
        for (int p = 0; p < 3; ++p)
            CHECK(bd.at(p).alpha_degree() == -3);
    }
}

TEST_CASE("quintic B_1 and B_0")
{
    auto g4 = geo_of("p4.json", {Q(1), Q(4), Q(16), Q(64)});
    EulerData data(g4, bundle_of("quintic_p4.json"));

    // alpha^0 coefficient of B_1/Omega is 120 at every fixed point
    LocalizedClass bh = data.b_reduced({1});
    for (int p = 0; p < 5; ++p) {
        auto ex = bh.at(p).expand(0);
        CHECK(ex.coeff(0) == ScalarPoly(Q(120)));
    }

    // B_0 = Omega = 5H
    LocalizedClass b0 = data.b({0});
    for (int p = 0; p < 5; ++p)
        CHECK(b0.at(p) == AlphaRational(ScalarPoly::eps(Q(5) * g4->h_eval(0, p))));

    // B_1 = Omega * (B_1/Omega)
    LocalizedClass b1 = data.b({1});
    for (int p = 0; p < 5; ++p)
        CHECK(b1.at(p) == b0.at(p) * bh.at(p));
}

TEST_CASE("Euler data identity")
{
    auto g4 = geo_of("p4.json", {Q(1), Q(4), Q(16), Q(64)});
    EulerData quintic(g4, bundle_of("quintic_p4.json"));
    int witness = -1;
    CHECK(quintic.check_euler_identity({2}, {0}, &witness));  // r = 0: trivially both sides equal
    CHECK(quintic.check_euler_identity({2}, {1}, &witness));
    CHECK(quintic.check_euler_identity({3}, {1}, &witness));

    auto g1 = geo_of("p1.json", {Q(1)});
    EulerData o11(g1, bundle_of("o11_p1.json"));
    CHECK(o11.check_euler_identity({3}, {2}, &witness));

    // dual route, as honest rational functions: Omega j_r*P_d / e_G(X_r/W_d) = bar(B_r) B_{d-r}
    CurveClass d{2}, r{1};
    LocalizedClass lhs_num = LocalizedClass::one(g4);
    {
        // j_r* of the quintic numerator: prod_{k=0}^{10} (5H + (5<r> - k) a) with <5H, r> = 5
        std::vector<AlphaRational> vals(5, AlphaRational::one());
        for (int p = 0; p < 5; ++p) {
            ScalarPoly h5 = ScalarPoly::eps(Q(5) * g4->h_eval(0, p));
            for (int k = 0; k <= 10; ++k)
                vals[p] = vals[p] * lin(h5, Q(5 - k));
        }
        lhs_num = LocalizedClass(g4, vals);
    }
    LocalizedClass er = sigma_model_euler_r(g4, d, r);
    LocalizedClass omega = quintic.b({0});
    LocalizedClass rhs = bar(quintic.b(r)) * quintic.b({1});
    // cross-multiplied: Omega * j_r P_d == rhs * e_G(X_r/W_d)
    CHECK(omega * lhs_num == rhs * er);

    // negative control: corrupt one factor's k-range
    LocalizedClass corrupt = lhs_num * lifted_restriction(g4, {5}, {1});
    CHECK(!(omega * corrupt == rhs * er));
}

TEST_CASE("linking specializations")
{
    auto g4 = geo_of("p4.json", {Q(1), Q(4), Q(16), Q(64)});
    EulerData quintic(g4, bundle_of("quintic_p4.json"));
    for (const auto& b : g4->balloons()) {
        auto rep = quintic.check_linking(b, 1);
        CHECK(rep.numerator_equal);
        CHECK(rep.pole_order <= 1);
    }

    // O(-1)+O(-1) on P^1, delta = 2: the pole at alpha = lambda/2 is simple
    auto g1 = geo_of("p1.json", {Q(1)});
    EulerData o11(g1, bundle_of("o11_p1.json"));
    for (const auto& b : g1->balloons()) {
        auto rep = o11.check_linking(b, 2);
        CHECK(rep.numerator_equal);
        CHECK(rep.pole_order == 1);
    }

    // negative control: a corrupted sign convention breaks the numerator match
    const Balloon& b = g4->balloons()[0];
    CHECK(!quintic.check_linking(b, 1, /*corrupt_sign=*/true).numerator_equal);
}

TEST_CASE("concatenated specs multiply at the numerator level")
{
    auto g2 = geo_of("p2.json", {Q(1), Q(4)});
    BundleSpec both{{{3}}, {{-3}}, false, {}};
    CurveClass d{2};
    EulerData ed(g2, both);
    // expected numerators built from the Euler data's (twisted) class values
    std::vector<AlphaRational> conv(3, AlphaRational::one()), conc(3, AlphaRational::one());
    for (int p = 0; p < 3; ++p) {
        for (int k = 0; k <= 6; ++k)
            conv[p] = conv[p] * lin(ScalarPoly::eps(ed.convex_val(0, p)), Q(-k));
        for (int k = 1; k <= 5; ++k)
            conc[p] = conc[p] * lin(ScalarPoly::eps(ed.concave_val(0, p)), Q(k));
    }
    LocalizedClass n1(g2, conv), n2(g2, conc);
    LocalizedClass bd = ed.b(d);
    LocalizedClass e0 = sigma_model_euler0(g2, d);
    CHECK(bd * e0 == n1 * n2);
}

TEST_CASE("manual sigma-model series emission")
{
    BundleSpec spec = bundle_of("wp321_local.json");
    auto terms = manual_series(spec, 1, {Q(1)}, 2);
    REQUIRE(terms.size() == 2);

    // alpha^{-1} coefficients (6d-1)!/(d!(2d)!(3d)!): 5!/12 = 10, 11!/34560 = 1155
    CHECK(terms[0].value.expand(-1).coeff(-1) == ScalarPoly(Q(10)));
    CHECK(terms[1].value.expand(-1).coeff(-1) == ScalarPoly(Q(1155)));
    // d = 1: prod_{m=1}^{5} (-6 eps + m a) / [(eps - a) prod_{m=1,2} (2 eps - m a) prod_{m=1..3} (3 eps - m a)]
    AlphaRational expect = AlphaRational::one();
    for (int mm = 1; mm <= 5; ++mm)
        expect = expect * lin(ScalarPoly::eps(Q(-6)), Q(mm));
    expect.div_linear(ScalarPoly::eps(), Q(-1));
    for (int mm = 1; mm <= 2; ++mm)
        expect.div_linear(ScalarPoly::eps(Q(2)), Q(-mm));
    for (int mm = 1; mm <= 3; ++mm)
        expect.div_linear(ScalarPoly::eps(Q(3)), Q(-mm));
    CHECK(terms[0].value == expect);
}

TEST_CASE("bundle spec validation")
{
    auto g2 = geo_of("p2.json", {Q(1), Q(4)});
    // concave class must pair negatively with the Mori generators
    CHECK_THROWS_WITH_AS(EulerData(g2, BundleSpec{{}, {{2}}, false, {}}),
                         doctest::Contains("NonNegativePairing"), Error);
    CHECK_THROWS_WITH_AS(EulerData(g2, BundleSpec{{{-2}}, {}, false, {}}),
                         doctest::Contains("NegativePairing"), Error);
    // non-CY spec warns but does not fail
    EulerData fano(g2, BundleSpec{{{1}}, {}, false, {}});
    CHECK(!fano.cy_type());
    CHECK(!fano.warnings().empty());
}
