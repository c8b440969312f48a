#pragma once

#include "gwkit/alpha.hpp"
#include "gwkit/toric.hpp"

#include <memory>
#include <string>
#include <vector>

namespace gwkit {

/* Generic rational direction for the torus weights; classes are evaluated at eps*lambda. */
struct WeightSample {
    QVec lambda;
    std::string label;
};

/*
  A toric manifold with its fixed-point data evaluated at a weight sample:
  the exact-arithmetic chart everything downstream computes in.  Construction
  validates genericity (DegenerateSample otherwise).
*/
class Geometry {
public:
    Geometry(ToricManifold manifold, WeightSample sample);

    const ToricManifold& manifold() const { return M_; }
    const WeightSample& sample() const { return sample_; }
    int num_points() const { return static_cast<int>(points_.size()); }
    const std::vector<FixedPoint>& points() const { return points_; }
    const std::vector<Balloon>& balloons() const { return balloons_; }

    /* <w_i, lambda> at fixed point p (the class value is eps times this). */
    const Q& tangent_eval(int p, int i) const { return tangent_eval_[p][i]; }
    /* <D_a(p), lambda>. */
    const Q& divisor_eval(int a, int p) const { return divisor_eval_[a][p]; }
    /* H_i(p) under the chosen equivariant lift. */
    const Q& h_eval(int i, int p) const { return h_eval_[i][p]; }
    /* e_T(p) = euler_rat(p) * eps^n. */
    const Q& euler_rat(int p) const { return euler_rat_[p]; }
    /* Evaluation <c, lambda_q> of a balloon weight vector. */
    Q weight_eval(const QVec& w) const;
    /* Value of a divisor-class vector (H basis) at p, times eps^{-1}. */
    Q class_eval(const std::vector<long>& h_class, int p) const;

private:
    ToricManifold M_;
    WeightSample sample_;
    std::vector<FixedPoint> points_;
    std::vector<Balloon> balloons_;
    std::vector<std::vector<Q>> tangent_eval_;  // [p][i]
    std::vector<std::vector<Q>> divisor_eval_;  // [a][p]
    std::vector<std::vector<Q>> h_eval_;        // [i][p]
    std::vector<Q> euler_rat_;                  // [p]
};

using GeometryPtr = std::shared_ptr<const Geometry>;

/* Default primary/alternate samples: smallest geometric sequences that pass validation. */
std::pair<WeightSample, WeightSample> default_samples(const ToricManifold& M);
/* Deterministic seeded sample (CLI override). */
WeightSample seeded_sample(const ToricManifold& M, std::uint64_t seed);

/* An equivariant class in localization form: one rational function of alpha per fixed point. */
class LocalizedClass {
public:
    LocalizedClass() = default;
    LocalizedClass(GeometryPtr geo, std::vector<AlphaRational> values);
    static LocalizedClass constant(GeometryPtr geo, const AlphaRational& v);
    static LocalizedClass one(GeometryPtr geo) { return constant(std::move(geo), AlphaRational::one()); }

    const GeometryPtr& geometry() const { return geo_; }
    int size() const { return static_cast<int>(vals_.size()); }
    const AlphaRational& at(int p) const { return vals_[p]; }
    AlphaRational& at(int p) { return vals_[p]; }

    LocalizedClass& operator+=(const LocalizedClass& o);
    LocalizedClass& operator-=(const LocalizedClass& o);
    friend LocalizedClass operator+(LocalizedClass a, const LocalizedClass& b) { return a += b; }
    friend LocalizedClass operator-(LocalizedClass a, const LocalizedClass& b) { return a -= b; }
    friend LocalizedClass operator*(const LocalizedClass& a, const LocalizedClass& b);
    LocalizedClass scaled(const Q& c) const;
    LocalizedClass bar() const;
    void reduce();

    bool operator==(const LocalizedClass& o) const;

private:
    GeometryPtr geo_;
    std::vector<AlphaRational> vals_;
};

/* Monomial term of a polynomial in the divisor classes D_1..D_N and the basis classes H_1..H_m. */
struct DivisorTerm {
    Q coeff;
    std::vector<int> d_exps;  // length N (may be empty = all zero)
    std::vector<int> h_exps;  // length m (may be empty)
};
using DivisorPoly = std::vector<DivisorTerm>;

/* omega(p) = poly evaluated at the eps-scaled restrictions. */
LocalizedClass class_from_divisor_poly(const GeometryPtr& geo, const DivisorPoly& poly);

/* e_T(p/X) as a class value: eps^n * prod_i <w_i, lambda>. */
AlphaRational euler_T(const Geometry& geo, int p);

/* Localization sum over fixed points: sum_p omega(p) / e_T(p). */
AlphaRational integrate(const LocalizedClass& omega);

/* alpha -> -alpha. */
inline AlphaRational bar(const AlphaRational& v) { return v.bar(); }
inline LocalizedClass bar(const LocalizedClass& v) { return v.bar(); }

/* Expansion at alpha -> infinity valid to O(alpha^{-J-1}). */
inline AlphaLaurent alpha_expand(const AlphaRational& v, int order) { return v.expand(-order); }

/* eps -> 0 slice; throws EpsilonPoleResidue if negative eps powers survive. */
ScalarPoly nonequiv_limit(const ScalarPoly& s);
AlphaLaurent nonequiv_limit(const AlphaLaurent& s);

}  // namespace gwkit
