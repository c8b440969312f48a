#include "gwkit/mirror.hpp"

#include "gwkit/errors.hpp"
#include "gwkit/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace gwkit {

namespace {

std::string degree_str(const CurveClass& d)
{
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < d.size(); ++i)
        os << (i ? "," : "") << d[i];
    os << ")";
    return os.str();
}

}  // namespace

const char* mirror_case_name(MirrorCase c)
{
    switch (c) {
    case MirrorCase::Rank2Plus: return "concave-rank>=2";
    case MirrorCase::Rank1: return "concave-rank-1";
    case MirrorCase::Convex: return "convex";
    }
    return "?";
}

int HGSeries::index_of(const CurveClass& d) const
{
    auto it = std::find(degrees.begin(), degrees.end(), d);
    require(it != degrees.end(), Errc::MissingDivisorDegree, "degree " + degree_str(d) + " not enumerated");
    return static_cast<int>(it - degrees.begin());
}

int ASeries::index_of(const CurveClass& d) const
{
    auto it = std::find(degrees.begin(), degrees.end(), d);
    require(it != degrees.end(), Errc::MissingDivisorDegree, "degree " + degree_str(d) + " not enumerated");
    return static_cast<int>(it - degrees.begin());
}

HGSeries build_hg_series(GeometryPtr geo, const BundleSpec& spec, int d_max)
{
    return build_hg_series(std::make_shared<const EulerData>(std::move(geo), spec), d_max);
}

HGSeries build_hg_series(std::shared_ptr<const EulerData> data, int d_max)
{
    HGSeries hg;
    hg.geo = data->geometry();
    hg.data = std::move(data);
    hg.d_max = d_max;
    hg.degrees = enumerate_degrees(hg.geo->manifold(), d_max);
    hg.b_hat.reserve(hg.degrees.size());
    for (const auto& d : hg.degrees)
        hg.b_hat.push_back(hg.data->b_reduced(d));
    return hg;
}

MirrorData extract_mirror_data(const HGSeries& hg)
{
    const auto& geo = *hg.geo;
    int m = geo.manifold().m;
    int P = geo.num_points();
    int J = hg.d_max;

    MirrorData md;
    int n_minus = hg.data->spec().rank_minus();
    md.kind = n_minus >= 2 ? MirrorCase::Rank2Plus : (n_minus == 1 ? MirrorCase::Rank1 : MirrorCase::Convex);
    md.F0 = NovikovSeries<Q>::one(m, J);
    md.F.assign(m, NovikovSeries<Q>(m, J));
    md.G = NovikovSeries<ScalarPoly>(m, J);

    for (size_t ix = 0; ix < hg.degrees.size(); ++ix) {
        const CurveClass& d = hg.degrees[ix];
        const LocalizedClass& bd = hg.b_hat[ix];

        // alpha^0 and alpha^{-1} coefficients per fixed point; anything above alpha^0
        // contradicts the case asymptotics.
        std::vector<ScalarPoly> c0(P), c1(P);
        for (int p = 0; p < P; ++p) {
            AlphaLaurent ex = bd.at(p).expand(-1);
            require(ex.max_exp() <= 0, Errc::InconsistentDecomposition,
                    "B_" + degree_str(d) + "/Omega has positive alpha degree at point " + std::to_string(p));
            c0[p] = ex.coeff(0);
            c1[p] = ex.coeff(-1);
        }

        if (md.kind == MirrorCase::Rank2Plus) {
            for (int p = 0; p < P; ++p)
                require(c0[p].is_zero() && c1[p].is_zero(), Errc::InconsistentDecomposition,
                        "deg_alpha B_d <= -2 fails at degree " + degree_str(d));
            continue;  // trivial mirror data
        }

        // lambda_d: the alpha^0 coefficient, a rational constant shared by all points.
        Q lambda = c0[0].as_rational();
        for (int p = 1; p < P; ++p)
            require(c0[p].as_rational() == lambda, Errc::InconsistentDecomposition,
                    "alpha^0 coefficient not constant across fixed points at " + degree_str(d));
        if (md.kind == MirrorCase::Rank1)
            require(lambda == 0, Errc::InconsistentDecomposition,
                    "concave rank-1 case expects vanishing alpha^0 part");
        if (lambda != 0)
            md.F0.set(d, lambda);

        // c1(p) = sum_i phi_i H_i(p) + psi with psi = w_x x + w_e eps constant across points.
        Q wx = c1[0].coeff(0, 1);
        for (int p = 0; p < P; ++p) {
            require(c1[p].homogeneous(1), Errc::InconsistentDecomposition,
                    "alpha^{-1} coefficient not (x,eps)-homogeneous of degree 1");
            require(c1[p].coeff(0, 1) == wx, Errc::InconsistentDecomposition,
                    "x part of the alpha^{-1} coefficient varies across fixed points");
        }
        QMat rows(P, QVec(m + 1));
        QVec rhs(P);
        for (int p = 0; p < P; ++p) {
            for (int i = 0; i < m; ++i)
                rows[p][i] = geo.h_eval(i, p);
            rows[p][m] = 1;
            rhs[p] = c1[p].coeff(1, 0);
        }
        auto sol = solve(std::move(rows), std::move(rhs));
        require(sol.has_value(), Errc::InconsistentDecomposition,
                "alpha^{-1} class is not of the form sum H_i phi + psi at degree " + degree_str(d));
        for (int i = 0; i < m; ++i)
            if ((*sol)[i] != 0)
                md.F[i].set(d, -(*sol)[i]);
        ScalarPoly psi = ScalarPoly::monomial(wx, 0, 1) + ScalarPoly::eps((*sol)[m]);
        if (!psi.is_zero())
            md.G.set(d, psi);
    }

    // Assemble the transform (f, g) per case.
    md.f_log = NovikovSeries<Q>(m, J);
    md.f_fin = NovikovSeries<ScalarPoly>(m, J);
    md.g.assign(m, NovikovSeries<Q>(m, J));
    switch (md.kind) {
    case MirrorCase::Rank2Plus:
        break;
    case MirrorCase::Rank1:
        // e^{-G/alpha} HG[B](t) = HG[A](t + F)
        md.f_fin = md.G.negated();
        md.g = md.F;
        break;
    case MirrorCase::Convex: {
        // f = -alpha log F0 - G/F0, g = F/F0 (log-term sign fixed by the gauge check).
        NovikovSeries<Q> u = md.F0 - NovikovSeries<Q>::one(m, J);
        NovikovSeries<Q> f0_inv = series_geom_inverse(u);
        md.f_log = series_log1p(u).negated();
        NovikovSeries<ScalarPoly> f0_inv_sp =
            f0_inv.mapped<ScalarPoly>([](const Q& c) { return ScalarPoly(c); });
        md.f_fin = (md.G * f0_inv_sp).negated();
        for (int i = 0; i < m; ++i)
            md.g[i] = md.F[i] * f0_inv;
        break;
    }
    }
    return md;
}

ASeries apply_mirror_transform(const HGSeries& hg, const MirrorData& md)
{
    const auto& geo = *hg.geo;
    int m = geo.manifold().m;
    int J = hg.d_max;
    int P = geo.num_points();

    ASeries as;
    as.geo = hg.geo;
    as.data = hg.data;
    as.d_max = J;
    as.degrees = hg.degrees;
    as.inverse_shifts = invert_mirror_map(md.g);

    // f / alpha as a series with AlphaRational coefficients.
    NovikovSeries<AlphaRational> f_over_alpha(m, J);
    for (const auto& [d, c] : md.f_fin.coeffs()) {
        AlphaRational v(c);
        v.div_linear(ScalarPoly::zero(), Q(1));
        f_over_alpha.set(d, f_over_alpha.coeff(d) + v);
    }
    for (const auto& [d, c] : md.f_log.coeffs())
        f_over_alpha.set(d, f_over_alpha.coeff(d) + AlphaRational(Q(c)));
    NovikovSeries<AlphaRational> gauge = series_exp(f_over_alpha);

    std::vector<NovikovSeries<AlphaRational>> shifts(m);
    for (int i = 0; i < m; ++i)
        shifts[i] = as.inverse_shifts[i].mapped<AlphaRational>([](const Q& c) { return AlphaRational(Q(c)); });

    std::vector<std::vector<AlphaRational>> ahat(hg.degrees.size(),
                                                 std::vector<AlphaRational>(P));
    for (int p = 0; p < P; ++p) {
        NovikovSeries<AlphaRational> s = NovikovSeries<AlphaRational>::one(m, J);
        for (size_t ix = 0; ix < hg.degrees.size(); ++ix)
            s.set(hg.degrees[ix], hg.b_hat[ix].at(p));
        s = gauge * s;
        s = substitute_exp_shift(s, shifts);

        // e^{-H(p) . gt / alpha}
        NovikovSeries<AlphaRational> w(m, J);
        for (int i = 0; i < m; ++i) {
            const Q& h = geo.h_eval(i, p);
            if (h == 0)
                continue;
            for (const auto& [d, c] : as.inverse_shifts[i].coeffs()) {
                AlphaRational v(ScalarPoly::eps(-h * c));
                v.div_linear(ScalarPoly::zero(), Q(1));
                w.set(d, w.coeff(d) + v);
            }
        }
        s = series_exp(w) * s;

        AlphaRational c0 = s.coeff(CurveClass(m, 0));
        require(c0 == AlphaRational::one(), Errc::InconsistentDecomposition,
                "transformed series has a nontrivial degree-0 coefficient");
        for (size_t ix = 0; ix < hg.degrees.size(); ++ix) {
            AlphaRational v = s.coeff(hg.degrees[ix]);
            v.reduce();
            ahat[ix][p] = std::move(v);
        }
    }
    as.a_hat.reserve(hg.degrees.size());
    for (auto& vals : ahat)
        as.a_hat.emplace_back(hg.geo, std::move(vals));
    return as;
}

GaugeReport verify_gauge(const ASeries& as)
{
    GaugeReport rep;
    for (size_t ix = 0; ix < as.degrees.size(); ++ix)
        for (int p = 0; p < as.geo->num_points(); ++p) {
            int deg = as.a_hat[ix].at(p).alpha_degree();
            if (deg > -2 && deg > rep.max_offending_order) {
                rep.pass = false;
                rep.max_offending_order = deg;
                rep.witness_d = as.degrees[ix];
                rep.witness_p = p;
            }
        }
    return rep;
}

}  // namespace gwkit
