#pragma once

#include "gwkit/euler_data.hpp"
#include "gwkit/series.hpp"

#include <memory>
#include <vector>

namespace gwkit {

/* Hypergeometric series data: the Omega-cancelled B_d for every enumerated degree. */
struct HGSeries {
    GeometryPtr geo;
    std::shared_ptr<const EulerData> data;
    int d_max = 0;
    std::vector<CurveClass> degrees;       // d > 0, sorted by total degree then lex
    std::vector<LocalizedClass> b_hat;     // parallel to degrees

    int index_of(const CurveClass& d) const;
    /* Materialized B_d (with Omega), for the public surface and tests. */
    LocalizedClass b(const CurveClass& d) const { return data->b(d); }
};

HGSeries build_hg_series(GeometryPtr geo, const BundleSpec& spec, int d_max);
HGSeries build_hg_series(std::shared_ptr<const EulerData> data, int d_max);

enum class MirrorCase { Rank2Plus, Rank1, Convex };
const char* mirror_case_name(MirrorCase c);

/*
  The scalar mirror data of the expansion B_d/Omega = lambda_d + alpha^{-1}(sum_i H_i phi_{d,i}
  + psi_d) + O(alpha^{-2}), assembled into the gauge transform (f, g) of the case at hand.
  f = alpha*f_log + f_fin; the emitted G keeps psi_d in full (its pure-weight part is
  discarded only in the nonequivariant output slice).
*/
struct MirrorData {
    MirrorCase kind = MirrorCase::Rank2Plus;
    NovikovSeries<Q> F0;                    // 1 + sum lambda_d q^d
    std::vector<NovikovSeries<Q>> F;        // F_i = -sum phi_{d,i} q^d
    NovikovSeries<ScalarPoly> G;            // sum psi_d q^d (full psi)
    std::vector<NovikovSeries<Q>> g;        // mirror-map shifts
    NovikovSeries<Q> f_log;                 // coefficient of alpha in f
    NovikovSeries<ScalarPoly> f_fin;        // alpha-free part of f
    int log_f0_sign = -1;                   // sign on the log F0 term fixed by the gauge check
};

MirrorData extract_mirror_data(const HGSeries& hg);

/* The transformed (A-side) series, carried in Omega-cancelled form. */
struct ASeries {
    GeometryPtr geo;
    std::shared_ptr<const EulerData> data;
    int d_max = 0;
    std::vector<CurveClass> degrees;
    std::vector<LocalizedClass> a_hat;      // A_d / Omega
    std::vector<NovikovSeries<Q>> inverse_shifts;  // gt with q = qt*exp(gt)

    int index_of(const CurveClass& d) const;
};

ASeries apply_mirror_transform(const HGSeries& hg, const MirrorData& md);

struct GaugeReport {
    bool pass = true;
    int max_offending_order = std::numeric_limits<int>::min();  // largest alpha-exponent > -2 seen
    CurveClass witness_d;
    int witness_p = -1;
};

/* deg_alpha A_d <= -2 pointwise (the Omega-free form carries the same alpha degree). */
GaugeReport verify_gauge(const ASeries& as);

}  // namespace gwkit
