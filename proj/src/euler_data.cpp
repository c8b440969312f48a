#include "gwkit/euler_data.hpp"

#include "gwkit/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace gwkit {

namespace {

std::string class_str(const std::vector<long>& c)
{
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < c.size(); ++i)
        os << (i ? "," : "") << c[i];
    os << ")";
    return os.str();
}

CurveClass sub(const CurveClass& d, const CurveClass& r)
{
    CurveClass out(d.size());
    for (size_t i = 0; i < d.size(); ++i)
        out[i] = d[i] - r[i];
    return out;
}

bool is_zero_class(const CurveClass& d)
{
    return std::all_of(d.begin(), d.end(), [](int v) { return v == 0; });
}

AlphaPoly product(const EulerFactorList& factors)
{
    AlphaPoly p{ScalarPoly::one()};
    for (const auto& f : factors)
        p = p * AlphaPoly::linear(f.c, f.k);
    return p;
}

}  // namespace

LocalizedClass convex_factor(const GeometryPtr& geo, const std::vector<long>& L, const CurveClass& d,
                             bool chern_variable)
{
    long P = pairing(L, d);
    require(P >= 0, Errc::NegativePairing, "convex class " + class_str(L) + " pairs negatively");
    std::vector<AlphaRational> vals(geo->num_points());
    for (int p = 0; p < geo->num_points(); ++p) {
        ScalarPoly base = ScalarPoly::eps(geo->class_eval(L, p));
        if (chern_variable)
            base += ScalarPoly::x();
        AlphaPoly prod{ScalarPoly::one()};
        for (long k = 0; k <= P; ++k)
            prod = prod * AlphaPoly::linear(base, Q(-k));
        vals[p] = AlphaRational(prod);
    }
    return LocalizedClass(geo, std::move(vals));
}

LocalizedClass concave_factor(const GeometryPtr& geo, const std::vector<long>& L, const CurveClass& d,
                              bool chern_variable)
{
    long P = pairing(L, d);
    require(P < 0 || is_zero_class(d), Errc::NonNegativePairing,
            "concave class " + class_str(L) + " pairs non-negatively");
    std::vector<AlphaRational> vals(geo->num_points());
    for (int p = 0; p < geo->num_points(); ++p) {
        ScalarPoly base = ScalarPoly::eps(geo->class_eval(L, p));
        if (chern_variable)
            base += ScalarPoly::x();
        AlphaPoly prod{ScalarPoly::one()};
        for (long k = 1; k <= -P - 1; ++k)
            prod = prod * AlphaPoly::linear(base, Q(k));
        vals[p] = AlphaRational(prod);
    }
    return LocalizedClass(geo, std::move(vals));
}

LocalizedClass sigma_model_euler0(const GeometryPtr& geo, const CurveClass& d)
{
    const auto& M = geo->manifold();
    std::vector<AlphaRational> vals(geo->num_points());
    for (int p = 0; p < geo->num_points(); ++p) {
        AlphaPoly prod{ScalarPoly::one()};
        for (int a = 0; a < M.N; ++a) {
            long P = pairing(M.divisor_class(a), d);
            require(P >= 0, Errc::NegativePairing, "divisor pairing negative in sigma-model Euler class");
            ScalarPoly base = ScalarPoly::eps(geo->divisor_eval(a, p));
            for (long k = 1; k <= P; ++k)
                prod = prod * AlphaPoly::linear(base, Q(-k));
        }
        vals[p] = AlphaRational(prod);
    }
    return LocalizedClass(geo, std::move(vals));
}

LocalizedClass sigma_model_euler_r(const GeometryPtr& geo, const CurveClass& d, const CurveClass& r)
{
    require(dominates(r, CurveClass(r.size(), 0)) && dominates(d, r), Errc::OrderViolation,
            "need 0 <= r <= d");
    return bar(sigma_model_euler0(geo, r)) * sigma_model_euler0(geo, sub(d, r));
}

LocalizedClass sigma_model_euler_r_direct(const GeometryPtr& geo, const CurveClass& d, const CurveClass& r)
{
    require(dominates(r, CurveClass(r.size(), 0)) && dominates(d, r), Errc::OrderViolation,
            "need 0 <= r <= d");
    const auto& M = geo->manifold();
    std::vector<AlphaRational> vals(geo->num_points());
    for (int p = 0; p < geo->num_points(); ++p) {
        AlphaPoly prod{ScalarPoly::one()};
        for (int a = 0; a < M.N; ++a) {
            long Pd = pairing(M.divisor_class(a), d);
            long Pr = pairing(M.divisor_class(a), r);
            ScalarPoly base = ScalarPoly::eps(geo->divisor_eval(a, p));
            for (long k = 0; k <= Pd; ++k) {
                if (k == Pr)
                    continue;
                prod = prod * AlphaPoly::linear(base, Q(Pr - k));
            }
        }
        vals[p] = AlphaRational(prod);
    }
    return LocalizedClass(geo, std::move(vals));
}

LocalizedClass lifted_restriction(const GeometryPtr& geo, const std::vector<long>& c, const CurveClass& r)
{
    long P = pairing(c, r);
    std::vector<AlphaRational> vals(geo->num_points());
    for (int p = 0; p < geo->num_points(); ++p)
        vals[p] = AlphaRational(AlphaPoly::linear(ScalarPoly::eps(geo->class_eval(c, p)), Q(P)));
    return LocalizedClass(geo, std::move(vals));
}

EulerData::EulerData(GeometryPtr geo, BundleSpec spec) : geo_(std::move(geo)), spec_(std::move(spec))
{
    const auto& M = geo_->manifold();
    for (const auto& c : spec_.convex)
        require(static_cast<int>(c.size()) == M.m, Errc::DimensionMismatch, "convex class arity");
    for (const auto& c : spec_.concave)
        require(static_cast<int>(c.size()) == M.m, Errc::DimensionMismatch, "concave class arity");

    // Sign conditions against the Mori generators (the wall classes).
    std::set<CurveClass> walls;
    for (const auto& b : geo_->balloons())
        walls.insert(b.curve_class);
    for (const auto& w : walls) {
        for (const auto& c : spec_.convex)
            require(pairing(c, w) >= 0, Errc::NegativePairing,
                    "convex class " + class_str(c) + " pairs negatively with a Mori generator");
        for (const auto& c : spec_.concave)
            require(pairing(c, w) < 0, Errc::NonNegativePairing,
                    "concave class " + class_str(c) + " pairs non-negatively with a Mori generator");
    }

    // Calabi-Yau-type bookkeeping: sum c1(L+) - sum c1(L-) = c1(X)?
    {
        std::vector<long> lhs(M.m, 0), c1(M.m, 0);
        for (const auto& c : spec_.convex)
            for (int i = 0; i < M.m; ++i)
                lhs[i] += c[i];
        for (const auto& c : spec_.concave)
            for (int i = 0; i < M.m; ++i)
                lhs[i] -= c[i];
        for (int a = 0; a < M.N; ++a)
            for (int i = 0; i < M.m; ++i)
                c1[i] += M.charge[i][a];
        cy_type_ = lhs == c1;
        if (!cy_type_)
            warnings_.push_back("bundle is not of Calabi-Yau type: sum c1(L+) - sum c1(L-) != c1(X)");
    }

    int P = geo_->num_points();
    convex_val_.assign(spec_.convex.size(), std::vector<Q>(P));
    for (size_t i = 0; i < spec_.convex.size(); ++i)
        for (int p = 0; p < P; ++p)
            convex_val_[i][p] = geo_->class_eval(spec_.convex[i], p);

    concave_val_.assign(spec_.concave.size(), std::vector<Q>(P));
    concave_twist_.assign(spec_.concave.size(), Q(0));
    for (size_t j = 0; j < spec_.concave.size(); ++j) {
        for (int p = 0; p < P; ++p)
            concave_val_[j][p] = geo_->class_eval(spec_.concave[j], p);
        // Concave restrictions sit in Omega's denominator; twist until nowhere zero.
        Q mu = 0;
        auto vanishes = [&](const Q& shift) {
            for (int p = 0; p < P; ++p)
                if (concave_val_[j][p] + shift == 0)
                    return true;
            return false;
        };
        while (vanishes(mu))
            mu += 1;
        if (mu != 0) {
            concave_twist_[j] = mu;
            for (int p = 0; p < P; ++p)
                concave_val_[j][p] += mu;
            warnings_.push_back("concave class " + class_str(spec_.concave[j]) + " twisted by " +
                                q_to_string(mu) + "*eps");
        }
    }
}

Q EulerData::convex_val(int i, int p) const { return convex_val_[i][p]; }
Q EulerData::concave_val(int j, int p) const { return concave_val_[j][p]; }

EulerFactorList EulerData::numerator_factors_at(int p, const CurveClass& d, const CurveClass* r_shift,
                                                bool reduced) const
{
    EulerFactorList out;
    bool x_on = spec_.chern_variable;
    for (size_t i = 0; i < spec_.convex.size(); ++i) {
        long Pd = pairing(spec_.convex[i], d);
        require(Pd >= 0, Errc::NegativePairing, "convex pairing negative");
        long shift = r_shift ? pairing(spec_.convex[i], *r_shift) : 0;
        ScalarPoly base = ScalarPoly::eps(convex_val_[i][p]);
        if (x_on)
            base += ScalarPoly::x();
        for (long k = reduced ? 1 : 0; k <= Pd; ++k)
            out.push_back({base, Q(shift - k)});
    }
    for (size_t j = 0; j < spec_.concave.size(); ++j) {
        long Pd = pairing(spec_.concave[j], d);
        require(Pd < 0 || is_zero_class(d), Errc::NonNegativePairing, "concave pairing non-negative");
        long shift = r_shift ? pairing(spec_.concave[j], *r_shift) : 0;
        ScalarPoly base = ScalarPoly::eps(concave_val_[j][p]);
        if (x_on)
            base += ScalarPoly::x();
        for (long k = reduced ? 0 : 1; k <= -Pd - 1; ++k)
            out.push_back({base, Q(shift + k)});
    }
    return out;
}

bool EulerData::omega_representable() const
{
    return spec_.concave.empty() || !spec_.chern_variable;
}

ScalarPoly EulerData::omega_multiplier(int p, int x_trunc) const
{
    ScalarPoly r = ScalarPoly::one();
    for (size_t i = 0; i < spec_.convex.size(); ++i) {
        ScalarPoly f = ScalarPoly::eps(convex_val_[i][p]);
        if (spec_.chern_variable)
            f += ScalarPoly::x();
        r = spec_.chern_variable ? r.mul_trunc_x(f, x_trunc) : r * f;
    }
    for (size_t j = 0; j < spec_.concave.size(); ++j) {
        const Q& v = concave_val_[j][p];
        require(v != 0, Errc::DivisionByZeroEuler, "untwisted zero concave restriction");
        if (!spec_.chern_variable) {
            r = r.scaled(Q(1) / v).eps_shifted(-1);
        } else {
            // 1/(x + v eps) = sum_t (-1)^t x^t / (v eps)^{t+1}, truncated at x_trunc.
            ScalarPoly inv;
            Q c = Q(1) / v;
            for (int t = 0; t <= x_trunc; ++t) {
                inv += ScalarPoly::monomial(c, -(t + 1), t);
                c = -c / v;
            }
            r = r.mul_trunc_x(inv, x_trunc);
        }
    }
    return r;
}

LocalizedClass EulerData::b_reduced(const CurveClass& d) const
{
    const auto& M = geo_->manifold();
    std::vector<AlphaRational> vals(geo_->num_points());
    for (int p = 0; p < geo_->num_points(); ++p) {
        AlphaRational v(product(numerator_factors_at(p, d, nullptr, true)));
        for (int a = 0; a < M.N; ++a) {
            long Pa = pairing(M.divisor_class(a), d);
            ScalarPoly base = ScalarPoly::eps(geo_->divisor_eval(a, p));
            for (long k = 1; k <= Pa; ++k)
                v.div_linear(base, Q(-k));
        }
        vals[p] = std::move(v);
    }
    return LocalizedClass(geo_, std::move(vals));
}

LocalizedClass EulerData::b(const CurveClass& d) const
{
    if (is_zero_class(d)) {
        require(omega_representable(), Errc::UnsupportedSpec,
                "Omega of a concave Chern-polynomial spec is not a localized class; "
                "use b_reduced and omega_multiplier");
        std::vector<AlphaRational> vals(geo_->num_points());
        for (int p = 0; p < geo_->num_points(); ++p)
            vals[p] = AlphaRational(omega_multiplier(p, 0));
        return LocalizedClass(geo_, std::move(vals));
    }
    const auto& M = geo_->manifold();
    std::vector<AlphaRational> vals(geo_->num_points());
    for (int p = 0; p < geo_->num_points(); ++p) {
        AlphaRational v(product(numerator_factors_at(p, d, nullptr, false)));
        for (int a = 0; a < M.N; ++a) {
            long Pa = pairing(M.divisor_class(a), d);
            ScalarPoly base = ScalarPoly::eps(geo_->divisor_eval(a, p));
            for (long k = 1; k <= Pa; ++k)
                v.div_linear(base, Q(-k));
        }
        vals[p] = std::move(v);
    }
    return LocalizedClass(geo_, std::move(vals));
}

bool EulerData::check_euler_identity(const CurveClass& d, const CurveClass& r, int* witness_point) const
{
    require(dominates(r, CurveClass(r.size(), 0)) && dominates(d, r), Errc::OrderViolation,
            "need 0 <= r <= d");
    CurveClass dr = sub(d, r);
    if (is_zero_class(d))
        return true;  // Omega Omega = bar(Omega) Omega
    // P_0 := Omega by convention; for concave specs Omega carries a denominator, so the
    // boundary terms r = 0 and r = d contribute an extra prod (x + c-) on the cleared side.
    for (int p = 0; p < geo_->num_points(); ++p) {
        AlphaPoly omega_num{ScalarPoly::one()};
        AlphaPoly omega_den{ScalarPoly::one()};
        for (size_t i = 0; i < spec_.convex.size(); ++i) {
            ScalarPoly base = ScalarPoly::eps(convex_val_[i][p]);
            if (spec_.chern_variable)
                base += ScalarPoly::x();
            omega_num = omega_num * AlphaPoly(base);
        }
        for (size_t j = 0; j < spec_.concave.size(); ++j) {
            ScalarPoly base = ScalarPoly::eps(concave_val_[j][p]);
            if (spec_.chern_variable)
                base += ScalarPoly::x();
            omega_den = omega_den * AlphaPoly(base);
        }
        AlphaPoly lhs = omega_num * product(numerator_factors_at(p, d, &r, false));
        if (is_zero_class(r))
            lhs = lhs * omega_den;
        if (is_zero_class(dr))
            lhs = lhs * omega_den;
        AlphaPoly rhs = omega_den * product(numerator_factors_at(p, r, nullptr, false)).bar() *
                        product(numerator_factors_at(p, dr, nullptr, false));
        if (!(lhs == rhs)) {
            if (witness_point)
                *witness_point = p;
            return false;
        }
    }
    return true;
}

LinkingReport EulerData::check_linking(const Balloon& b, int delta, bool corrupt_sign) const
{
    require(delta >= 1, Errc::OrderViolation, "delta >= 1 required");
    const auto& M = geo_->manifold();
    CurveClass d(M.m);
    for (int i = 0; i < M.m; ++i)
        d[i] = delta * b.curve_class[i];
    int q = b.q;
    Q lam = geo_->weight_eval(b.lambda_q);
    Q ratio = lam / delta;  // alpha specializes to ratio * eps
    Q sign = corrupt_sign ? Q(-1) : Q(1);

    LinkingReport rep;

    // Route 1: evaluate the materialized hypergeometric factors at alpha = lambda/delta.
    ScalarPoly lhs = ScalarPoly::one();
    for (const auto& f : numerator_factors_at(q, d, nullptr, false))
        lhs = lhs * (f.c + ScalarPoly::eps(f.k * ratio));

    // Route 2: the Linking Theorem's product, written out directly.
    ScalarPoly rhs = ScalarPoly::one();
    for (size_t i = 0; i < spec_.convex.size(); ++i) {
        long Pd = pairing(spec_.convex[i], d);
        ScalarPoly base = ScalarPoly::eps(convex_val_[i][q]);
        if (spec_.chern_variable)
            base += ScalarPoly::x();
        for (long k = 0; k <= Pd; ++k)
            rhs = rhs * (base - ScalarPoly::eps(sign * Q(k) * ratio));
    }
    for (size_t j = 0; j < spec_.concave.size(); ++j) {
        long Pd = pairing(spec_.concave[j], d);
        ScalarPoly base = ScalarPoly::eps(concave_val_[j][q]);
        if (spec_.chern_variable)
            base += ScalarPoly::x();
        for (long k = 1; k <= -Pd - 1; ++k)
            rhs = rhs * (base + ScalarPoly::eps(sign * Q(k) * ratio));
    }
    rep.numerator_equal = (lhs == rhs);

    // Pole order of 1/e_G(X_0/W_d)|_q at alpha = lambda/delta: count vanishing factors.
    int zeros = 0;
    for (int a = 0; a < M.N; ++a) {
        long Pa = pairing(M.divisor_class(a), d);
        for (long k = 1; k <= Pa; ++k)
            if (geo_->divisor_eval(a, q) == Q(k) * ratio)
                ++zeros;
    }
    rep.pole_order = zeros;
    return rep;
}

std::vector<ManualSeriesTerm> manual_series(const BundleSpec& spec, int m, const QVec& h_values, int d_max)
{
    require(spec.manual_euler.has_value(), Errc::UnsupportedSpec, "manual sigma-model classes required");
    require(static_cast<int>(h_values.size()) == m, Errc::DimensionMismatch, "one H value per variable");
    auto class_val = [&](const std::vector<long>& c) {
        require(static_cast<int>(c.size()) == m, Errc::DimensionMismatch, "class arity");
        Q v = 0;
        for (int i = 0; i < m; ++i)
            v += Q(c[i]) * h_values[i];
        return v;
    };

    std::vector<ManualSeriesTerm> out;
    for (const auto& d : lattice_degrees(m, d_max)) {
        AlphaPoly num{ScalarPoly::one()};
        for (const auto& c : spec.convex) {
            long P = pairing(c, d);
            require(P >= 0, Errc::NegativePairing, "convex pairing negative");
            ScalarPoly base = ScalarPoly::eps(class_val(c));
            if (spec.chern_variable)
                base += ScalarPoly::x();
            for (long k = 0; k <= P; ++k)
                num = num * AlphaPoly::linear(base, Q(-k));
        }
        for (const auto& c : spec.concave) {
            long P = pairing(c, d);
            require(P < 0, Errc::NonNegativePairing, "concave pairing non-negative");
            ScalarPoly base = ScalarPoly::eps(class_val(c));
            if (spec.chern_variable)
                base += ScalarPoly::x();
            for (long k = 1; k <= -P - 1; ++k)
                num = num * AlphaPoly::linear(base, Q(k));
        }
        AlphaRational v(num);
        for (const auto& e : spec.manual_euler->classes) {
            long P = pairing(e, d);
            require(P >= 0, Errc::NegativePairing, "manual Euler class pairs negatively");
            ScalarPoly base = ScalarPoly::eps(class_val(e));
            for (long k = 1; k <= P; ++k)
                v.div_linear(base, Q(-k));
        }
        out.push_back({d, std::move(v)});
    }
    return out;
}

}  // namespace gwkit
