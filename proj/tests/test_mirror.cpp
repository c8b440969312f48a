#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gwkit/errors.hpp"
#include "gwkit/io.hpp"
#include "gwkit/mirror.hpp"

using namespace gwkit;

namespace {

std::string data_dir = GWKIT_DATA_DIR;

HGSeries hg_of(const std::string& mani, const std::string& bundle, int d_max)
{
    auto M = io::load_manifold(data_dir + "/manifolds/" + mani);
    auto [s0, s1] = default_samples(M);
    auto geo = std::make_shared<const Geometry>(M, s0);
    return build_hg_series(geo, io::load_bundle(data_dir + "/bundles/" + bundle), d_max);
}

}  // namespace

TEST_CASE("build_hg_series enumerates degrees")
{
    CHECK(hg_of("p4.json", "quintic_p4.json", 2).degrees.size() == 2);
    CHECK(hg_of("p4.json", "quintic_p4.json", 0).degrees.empty());
    CHECK(hg_of("p1xp1.json", "o22_p1xp1.json", 2).degrees.size() == 5);
}

TEST_CASE("quintic mirror data")
{
    HGSeries hg = hg_of("p4.json", "quintic_p4.json", 2);
    MirrorData md = extract_mirror_data(hg);
    CHECK(md.kind == MirrorCase::Convex);
    CHECK(md.F0.coeff({1}) == Q(120));
    CHECK(md.F0.coeff({2}) == Q(113400));
    // F = -sum phi_d q^d with phi_1 = -770
    CHECK(md.F[0].coeff({1}) == Q(770));
    // psi_1 has no x part for the Euler-class quintic
    CHECK(md.G.coeff({1}).eps0_x_poly().empty());
    CHECK(md.log_f0_sign == -1);
}

TEST_CASE("rank >= 2 concave collapses to the identity transform")
{
    HGSeries hg = hg_of("p1.json", "o11_p1.json", 4);
    MirrorData md = extract_mirror_data(hg);
    CHECK(md.kind == MirrorCase::Rank2Plus);
    CHECK(md.F0 == NovikovSeries<Q>::one(1, 4));
    CHECK(md.F[0].is_zero());
    CHECK(md.G.is_zero());
    ASeries as = apply_mirror_transform(hg, md);
    for (size_t ix = 0; ix < hg.degrees.size(); ++ix)
        CHECK(as.a_hat[ix] == hg.b_hat[ix]);
    CHECK(verify_gauge(as).pass);
}

TEST_CASE("gauge holds for the quintic and fails with the flipped log F0 sign")
{
    HGSeries hg = hg_of("p4.json", "quintic_p4.json", 2);
    MirrorData md = extract_mirror_data(hg);
    ASeries as = apply_mirror_transform(hg, md);
    CHECK(verify_gauge(as).pass);

    // The opposite sign, f = +alpha log F0 - G/F0, must fail the gauge check.
    MirrorData bad = md;
    bad.f_log = md.f_log.negated();
    ASeries as_bad = apply_mirror_transform(hg, bad);
    GaugeReport rep = verify_gauge(as_bad);
    CHECK(!rep.pass);
    CHECK(rep.max_offending_order >= -1);
}

TEST_CASE("concave rank 1 assembles f = -G, g = F")
{
    HGSeries hg = hg_of("p2.json", "local_p2.json", 2);
    MirrorData md = extract_mirror_data(hg);
    CHECK(md.kind == MirrorCase::Rank1);
    CHECK(md.F0 == NovikovSeries<Q>::one(1, 2));
    // phi_1 = -3 C_1 with C_1 = (-1)^{-3} (3-1)!/(1!)^3 = -2, so F coeff = -phi = -6... F = -sum phi:
    // B_1/Omega = a^{-1} c1(V^-) C_1 => phi_1 = -3 * (-2) = 6, F coeff = -6.
    CHECK(md.F[0].coeff({1}) == Q(-6));
    CHECK(md.g[0] == md.F[0]);
    ASeries as = apply_mirror_transform(hg, md);
    CHECK(verify_gauge(as).pass);
}

TEST_CASE("round trip: the inverse transform recovers HG[B]")
{
    for (const char* bundle : {"quintic_p4.json", "local_p2.json"}) {
        std::string mani = std::string(bundle) == "quintic_p4.json" ? "p4.json" : "p2.json";
        HGSeries hg = hg_of(mani, bundle, 2);
        MirrorData md = extract_mirror_data(hg);
        ASeries as = apply_mirror_transform(hg, md);

        int m = hg.geo->manifold().m, J = hg.d_max;
        // S_B(q) = e^{-f/alpha} subst_{qt -> q}( e^{+H gt/alpha} S_A(qt) ), shifts g forward.
        NovikovSeries<AlphaRational> f_over_alpha(m, J);
        for (const auto& [d, c] : md.f_fin.coeffs()) {
            AlphaRational v(c);
            v.div_linear(ScalarPoly::zero(), Q(1));
            f_over_alpha.set(d, f_over_alpha.coeff(d) + v);
        }
        for (const auto& [d, c] : md.f_log.coeffs())
            f_over_alpha.set(d, f_over_alpha.coeff(d) + AlphaRational(Q(c)));
        auto inv_gauge = series_exp(f_over_alpha.negated());
        std::vector<NovikovSeries<AlphaRational>> fwd(m);
        for (int i = 0; i < m; ++i)
            fwd[i] = md.g[i].mapped<AlphaRational>([](const Q& c) { return AlphaRational(Q(c)); });

        for (int p = 0; p < hg.geo->num_points(); ++p) {
            NovikovSeries<AlphaRational> sa = NovikovSeries<AlphaRational>::one(m, J);
            for (size_t ix = 0; ix < as.degrees.size(); ++ix)
                sa.set(as.degrees[ix], as.a_hat[ix].at(p));
            NovikovSeries<AlphaRational> w(m, J);
            for (int i = 0; i < m; ++i) {
                const Q& h = hg.geo->h_eval(i, p);
                if (h == 0)
                    continue;
                for (const auto& [d, c] : as.inverse_shifts[i].coeffs()) {
                    AlphaRational v(ScalarPoly::eps(h * c));
                    v.div_linear(ScalarPoly::zero(), Q(1));
                    w.set(d, w.coeff(d) + v);
                }
            }
            auto sb = inv_gauge * substitute_exp_shift(series_exp(w) * sa, fwd);
            CHECK(sb.coeff(CurveClass(m, 0)) == AlphaRational::one());
            for (size_t ix = 0; ix < hg.degrees.size(); ++ix)
                CHECK(sb.coeff(hg.degrees[ix]) == hg.b_hat[ix].at(p));
        }
    }
}

TEST_CASE("quintic mirror map round-trips at d_max = 5")
{
    HGSeries hg = hg_of("p4.json", "quintic_p4.json", 5);
    MirrorData md = extract_mirror_data(hg);
    // classical expansion of qt = q exp(F/F0): 1, 770, 1014275, ...
    auto qt = substitute_exp_shift(
        [&] {
            NovikovSeries<Q> q(1, 5);
            q.set({1}, Q(1));
            return q;
        }(),
        md.g);
    CHECK(qt.coeff({2}) == Q(770));
    CHECK(qt.coeff({3}) == Q(1014275));

    auto inv = invert_mirror_map(md.g);
    NovikovSeries<Q> probe(1, 5);
    probe.set({0}, Q(1));
    probe.set({1}, Q(5));
    probe.set({3}, Q(-2, 7));
    CHECK(substitute_exp_shift(substitute_exp_shift(probe, md.g), inv) == probe);
}

TEST_CASE("linking is preserved by the transform")
{
    HGSeries hg = hg_of("p4.json", "quintic_p4.json", 2);
    MirrorData md = extract_mirror_data(hg);
    ASeries as = apply_mirror_transform(hg, md);
    for (const auto& b : hg.geo->balloons()) {
        CurveClass d = b.curve_class;  // delta = 1
        int ix = as.index_of(d);
        Q lam = hg.geo->weight_eval(b.lambda_q);
        AlphaRational diff = as.a_hat[ix].at(b.q) - hg.b_hat[ix].at(b.q);
        CHECK(diff.pole_order_at(ScalarPoly::eps(lam)) <= 0);
    }
}

TEST_CASE("mixed-case CI extraction is consistent across points")
{
    HGSeries hg = hg_of("p1xp2xp2.json", "ci_p1p2p2.json", 2);
    MirrorData md = extract_mirror_data(hg);
    CHECK(md.kind == MirrorCase::Convex);
    // F0 coefficients: lambda_d = prod <c_i,d>! / prod <D_a,d>!
    // d = (1,0,0): (1)!(1)!/(1!1!) = 1
    CHECK(md.F0.coeff({1, 0, 0}) == Q(1));
    // d = (0,1,0): (3)!(0)!/(1!1!1!) = 6
    CHECK(md.F0.coeff({0, 1, 0}) == Q(6));
    ASeries as = apply_mirror_transform(hg, md);
    CHECK(verify_gauge(as).pass);
}
