#include "gwkit/equivariant.hpp"

#include "gwkit/errors.hpp"

#include <algorithm>
#include <set>

namespace gwkit {

namespace {

Q dot(const QVec& a, const QVec& b)
{
    Q s = 0;
    for (size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

}  // namespace

Geometry::Geometry(ToricManifold manifold, WeightSample sample)
    : M_(std::move(manifold)), sample_(std::move(sample))
{
    require(static_cast<int>(sample_.lambda.size()) == M_.n, Errc::DegenerateSample,
            "lambda must have n components");
    points_ = gwkit::fixed_points(M_);
    balloons_ = gwkit::balloons(M_);
    int P = num_points();

    tangent_eval_.assign(P, std::vector<Q>(M_.n));
    euler_rat_.assign(P, Q(1));
    for (int p = 0; p < P; ++p) {
        std::set<Q> seen;
        for (int i = 0; i < M_.n; ++i) {
            Q v = dot(points_[p].tangent_weights[i], sample_.lambda);
            require(v != 0, Errc::DegenerateSample,
                    "tangent weight evaluates to zero at fixed point " + std::to_string(p));
            require(seen.insert(v).second, Errc::DegenerateSample,
                    "coincident tangent weight evaluations at fixed point " + std::to_string(p));
            tangent_eval_[p][i] = v;
            euler_rat_[p] *= v;
        }
    }

    divisor_eval_.assign(M_.N, std::vector<Q>(P, Q(0)));
    for (int a = 0; a < M_.N; ++a)
        for (int p = 0; p < P; ++p)
            divisor_eval_[a][p] = dot(points_[p].divisor_restrictions[a], sample_.lambda);

    h_eval_.assign(M_.m, std::vector<Q>(P, Q(0)));
    for (int i = 0; i < M_.m; ++i)
        for (int p = 0; p < P; ++p) {
            Q v = 0;
            for (int a = 0; a < M_.N; ++a)
                if (M_.h_lift[i][a] != 0)
                    v += M_.h_lift[i][a] * divisor_eval_[a][p];
            h_eval_[i][p] = v;
        }

    // The mirror-data decomposition solves against rows (H_1(p),..,H_m(p),1); genericity
    // of the sample must keep that system full-rank.
    {
        QMat rows(P, QVec(M_.m + 1));
        for (int p = 0; p < P; ++p) {
            for (int i = 0; i < M_.m; ++i)
                rows[p][i] = h_eval_[i][p];
            rows[p][M_.m] = 1;
        }
        require(rank(rows) == M_.m + 1, Errc::DegenerateSample,
                "H(p) evaluations do not span; pick a more generic sample");
    }
}

Q Geometry::weight_eval(const QVec& w) const
{
    return dot(w, sample_.lambda);
}

Q Geometry::class_eval(const std::vector<long>& h_class, int p) const
{
    require(static_cast<int>(h_class.size()) == M_.m, Errc::DimensionMismatch, "class vector size");
    Q v = 0;
    for (int i = 0; i < M_.m; ++i)
        if (h_class[i] != 0)
            v += Q(h_class[i]) * h_eval_[i][p];
    return v;
}

std::pair<WeightSample, WeightSample> default_samples(const ToricManifold& M)
{
    auto try_base = [&](long base) -> std::optional<WeightSample> {
        WeightSample s;
        s.lambda.resize(M.n);
        Q v = 1;
        for (int i = 0; i < M.n; ++i) {
            s.lambda[i] = v;
            v *= base;
        }
        s.label = "base-" + std::to_string(base);
        try {
            Geometry g(M, s);
            return s;
        } catch (const Error&) {
            return std::nullopt;
        }
    };
    std::optional<WeightSample> first, second;
    for (long base = 4; base < 200 && !second.has_value(); ++base) {
        auto s = try_base(base);
        if (!s)
            continue;
        if (!first)
            first = s;
        else
            second = s;
    }
    require(first.has_value() && second.has_value(), Errc::DegenerateSample,
            "no generic default sample found for " + M.name);
    return {*first, *second};
}

WeightSample seeded_sample(const ToricManifold& M, std::uint64_t seed)
{
    Rng rng(seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
        WeightSample s;
        s.lambda.resize(M.n);
        for (int i = 0; i < M.n; ++i)
            s.lambda[i] = Q(rng.next_in(1, 9973));
        s.label = "seed-" + std::to_string(seed);
        try {
            Geometry g(M, s);
            return s;
        } catch (const Error&) {
        }
    }
    fail(Errc::DegenerateSample, "seed " + std::to_string(seed) + " produced no generic sample");
}

LocalizedClass::LocalizedClass(GeometryPtr geo, std::vector<AlphaRational> values)
    : geo_(std::move(geo)), vals_(std::move(values))
{
    require(static_cast<int>(vals_.size()) == geo_->num_points(), Errc::DimensionMismatch,
            "one value per fixed point required");
}

LocalizedClass LocalizedClass::constant(GeometryPtr geo, const AlphaRational& v)
{
    int P = geo->num_points();
    return LocalizedClass(std::move(geo), std::vector<AlphaRational>(P, v));
}

namespace {

void check_same_chart(const LocalizedClass& a, const LocalizedClass& b)
{
    require(a.geometry().get() == b.geometry().get(), Errc::RingMismatch,
            "localized classes live on different geometries");
}

}  // namespace

LocalizedClass& LocalizedClass::operator+=(const LocalizedClass& o)
{
    check_same_chart(*this, o);
    for (int p = 0; p < size(); ++p)
        vals_[p] += o.vals_[p];
    return *this;
}

LocalizedClass& LocalizedClass::operator-=(const LocalizedClass& o)
{
    check_same_chart(*this, o);
    for (int p = 0; p < size(); ++p)
        vals_[p] -= o.vals_[p];
    return *this;
}

LocalizedClass operator*(const LocalizedClass& a, const LocalizedClass& b)
{
    check_same_chart(a, b);
    std::vector<AlphaRational> vals(a.size());
    for (int p = 0; p < a.size(); ++p)
        vals[p] = a.at(p) * b.at(p);
    return LocalizedClass(a.geometry(), std::move(vals));
}

LocalizedClass LocalizedClass::scaled(const Q& c) const
{
    std::vector<AlphaRational> vals(vals_.size());
    for (size_t p = 0; p < vals_.size(); ++p)
        vals[p] = vals_[p].scaled(c);
    return LocalizedClass(geo_, std::move(vals));
}

LocalizedClass LocalizedClass::bar() const
{
    std::vector<AlphaRational> vals(vals_.size());
    for (size_t p = 0; p < vals_.size(); ++p)
        vals[p] = vals_[p].bar();
    return LocalizedClass(geo_, std::move(vals));
}

void LocalizedClass::reduce()
{
    for (auto& v : vals_)
        v.reduce();
}

bool LocalizedClass::operator==(const LocalizedClass& o) const
{
    check_same_chart(*this, o);
    for (int p = 0; p < size(); ++p)
        if (!(vals_[p] == o.vals_[p]))
            return false;
    return true;
}

LocalizedClass class_from_divisor_poly(const GeometryPtr& geo, const DivisorPoly& poly)
{
    const auto& M = geo->manifold();
    std::vector<AlphaRational> vals(geo->num_points());
    for (int p = 0; p < geo->num_points(); ++p) {
        ScalarPoly acc;
        for (const auto& term : poly) {
            require(term.d_exps.empty() || static_cast<int>(term.d_exps.size()) == M.N,
                    Errc::DimensionMismatch, "divisor exponent vector size");
            require(term.h_exps.empty() || static_cast<int>(term.h_exps.size()) == M.m,
                    Errc::DimensionMismatch, "H exponent vector size");
            Q v = term.coeff;
            int deg = 0;
            for (size_t a = 0; a < term.d_exps.size() && v != 0; ++a)
                for (int e = 0; e < term.d_exps[a]; ++e) {
                    v *= geo->divisor_eval(static_cast<int>(a), p);
                    ++deg;
                }
            for (size_t i = 0; i < term.h_exps.size() && v != 0; ++i)
                for (int e = 0; e < term.h_exps[i]; ++e) {
                    v *= geo->h_eval(static_cast<int>(i), p);
                    ++deg;
                }
            if (v != 0)
                acc += ScalarPoly::monomial(v, deg);
        }
        vals[p] = AlphaRational(acc);
    }
    return LocalizedClass(geo, std::move(vals));
}

AlphaRational euler_T(const Geometry& geo, int p)
{
    Q c = geo.euler_rat(p);
    require(c != 0, Errc::DegenerateSample, "vanishing e_T at fixed point " + std::to_string(p));
    return AlphaRational(ScalarPoly::monomial(c, geo.manifold().n));
}

AlphaRational integrate(const LocalizedClass& omega)
{
    const Geometry& g = *omega.geometry();
    int n = g.manifold().n;
    AlphaRational sum;
    for (int p = 0; p < omega.size(); ++p) {
        if (omega.at(p).is_zero())
            continue;
        sum += omega.at(p).scaled(Q(1) / g.euler_rat(p)).eps_shifted(-n);
    }
    sum.reduce();
    return sum;
}

ScalarPoly nonequiv_limit(const ScalarPoly& s)
{
    require(s.eps_regular(), Errc::EpsilonPoleResidue, "negative eps power in " + s.str());
    return s.eps0_part();
}

AlphaLaurent nonequiv_limit(const AlphaLaurent& s)
{
    return s.nonequiv_limit();
}

}  // namespace gwkit
