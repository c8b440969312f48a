#pragma once

#include "gwkit/equivariant.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gwkit {

struct ManualEuler {
    /* Sigma-model denominator prescription: prod_b prod_{k=1}^{<E_b,d>} (E_b - k alpha). */
    std::vector<std::vector<long>> classes;
};

/* Splitting type of a mixed bundle, class vectors in the H basis. */
struct BundleSpec {
    std::vector<std::vector<long>> convex;
    std::vector<std::vector<long>> concave;
    bool chern_variable = false;
    std::optional<ManualEuler> manual_euler;

    int rank_plus() const { return static_cast<int>(convex.size()); }
    int rank_minus() const { return static_cast<int>(concave.size()); }
    /* s = rk V+ - rk V- - (n - 3). */
    int s_value(int n) const { return rank_plus() - rank_minus() - (n - 3); }
};

/* One linear factor (x? + c + k*alpha) of a materialized Euler product. */
struct EulerFactor {
    ScalarPoly c;  // eps-scaled class value, plus x when the Chern variable is on
    Q k;           // alpha coefficient
};
using EulerFactorList = std::vector<EulerFactor>;

struct LinkingReport {
    bool numerator_equal = false;
    int pole_order = 0;  // of 1/e_G(X_0/W_d)|_q at alpha = lambda/delta
    bool pass() const { return numerator_equal && pole_order <= 1; }
};

/*
  Hypergeometric Euler data for a bundle spec over a fixed geometry.  Twists
  concave classes whose restriction vanishes at some fixed point (recorded),
  builds B_d and its Omega-cancelled form, and checks the Euler data identity
  and the linking specializations.
*/
class EulerData {
public:
    EulerData(GeometryPtr geo, BundleSpec spec);

    const GeometryPtr& geometry() const { return geo_; }
    const BundleSpec& spec() const { return spec_; }
    bool chern() const { return spec_.chern_variable; }
    int s_value() const { return spec_.s_value(geo_->manifold().n); }
    bool cy_type() const { return cy_type_; }
    const std::vector<Q>& concave_twists() const { return concave_twist_; }

    /* Twisted eps-linear value of a bundle class at a fixed point (without the x part). */
    Q convex_val(int i, int p) const;
    Q concave_val(int j, int p) const;

    /* B_d = prod conv * prod conc / e_G(X_0/W_d); d = 0 gives Omega. */
    LocalizedClass b(const CurveClass& d) const;
    /* B_d / Omega in cancelled form (the pipeline's working object); d = 0 gives 1. */
    LocalizedClass b_reduced(const CurveClass& d) const;

    /* True unless the bundle has concave classes with the Chern variable on (then
       Omega(p) is materialized only as a truncated multiplier). */
    bool omega_representable() const;
    /* Omega(p) as a ScalarPoly, x-truncated at x_trunc when inverses are involved. */
    ScalarPoly omega_multiplier(int p, int x_trunc) const;

    /* Exact pointwise check of Omega i_r*P_d^v = bar(i_0*P_r^v) i_0*P_{d-r}^v.
       Returns true on success; otherwise fills *witness_point. */
    bool check_euler_identity(const CurveClass& d, const CurveClass& r, int* witness_point) const;

    /* Linking specialization at alpha = lambda/delta on a balloon.  corrupt_sign flips
       the k-sign convention in the comparison product (negative-control hook: the
       numerator match must then fail whenever the product is alpha-sensitive). */
    LinkingReport check_linking(const Balloon& b, int delta, bool corrupt_sign = false) const;

    std::vector<std::string> warnings() const { return warnings_; }

private:
    EulerFactorList numerator_factors_at(int p, const CurveClass& d, const CurveClass* r_shift,
                                         bool reduced) const;

    GeometryPtr geo_;
    BundleSpec spec_;
    std::vector<std::vector<Q>> convex_val_;   // [i][p]
    std::vector<std::vector<Q>> concave_val_;  // [j][p]
    std::vector<Q> concave_twist_;
    bool cy_type_ = true;
    std::vector<std::string> warnings_;
};

/* prod_{k=0}^{<c1(L),d>} (x? + L - k alpha), pointwise. */
LocalizedClass convex_factor(const GeometryPtr& geo, const std::vector<long>& L, const CurveClass& d,
                             bool chern_variable = false);
/* prod_{k=1}^{-<c1(L),d>-1} (x? + L + k alpha), pointwise (empty product allowed). */
LocalizedClass concave_factor(const GeometryPtr& geo, const std::vector<long>& L, const CurveClass& d,
                              bool chern_variable = false);

/* e_G(X_0/W_d) = prod_a prod_{k=1}^{<D_a,d>} (D_a - k alpha), pointwise. */
LocalizedClass sigma_model_euler0(const GeometryPtr& geo, const CurveClass& d);
/* e_G(X_r/W_d) = bar(e_G(X_0/W_r)) e_G(X_0/W_{d-r}). */
LocalizedClass sigma_model_euler_r(const GeometryPtr& geo, const CurveClass& d, const CurveClass& r);
/* Direct product formula for e_G(X_r/W_d) (dual route to the factorization above). */
LocalizedClass sigma_model_euler_r_direct(const GeometryPtr& geo, const CurveClass& d, const CurveClass& r);

/* Pointwise c + <c,r> alpha. */
LocalizedClass lifted_restriction(const GeometryPtr& geo, const std::vector<long>& c, const CurveClass& r);

/* Formal-point series emission for manual sigma-model mode (no localization). */
struct ManualSeriesTerm {
    CurveClass d;
    AlphaRational value;
};
std::vector<ManualSeriesTerm> manual_series(const BundleSpec& spec, int m, const QVec& h_values, int d_max);

}  // namespace gwkit
