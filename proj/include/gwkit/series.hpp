#pragma once

#include "gwkit/alpha.hpp"
#include "gwkit/errors.hpp"
#include "gwkit/toric.hpp"

#include <functional>
#include <map>
#include <vector>

namespace gwkit {

/* Coefficient-ring glue so the series template works over Q, ScalarPoly and AlphaRational. */
inline bool ring_is_zero(const Q& v) { return v == 0; }
inline bool ring_is_zero(const ScalarPoly& v) { return v.is_zero(); }
inline bool ring_is_zero(const AlphaRational& v) { return v.is_zero(); }
inline Q ring_scale(const Q& v, const Q& c) { return v * c; }
inline ScalarPoly ring_scale(const ScalarPoly& v, const Q& c) { return v.scaled(c); }
inline AlphaRational ring_scale(const AlphaRational& v, const Q& c) { return v.scaled(c); }

/*
  Truncated formal power series in the Novikov variables q_1..q_m, graded by
  curve classes: exponents run over nonnegative lattice points with total
  degree <= d_max, and all arithmetic respects the truncation.
*/
template <class T>
class NovikovSeries {
public:
    NovikovSeries() = default;
    NovikovSeries(int m, int d_max) : m_(m), d_max_(d_max) {}

    static NovikovSeries constant(int m, int d_max, T v)
    {
        NovikovSeries s(m, d_max);
        if (!ring_is_zero(v))
            s.c_.emplace(CurveClass(m, 0), std::move(v));
        return s;
    }
    static NovikovSeries one(int m, int d_max) { return constant(m, d_max, T(Q(1))); }

    int vars() const { return m_; }
    int d_max() const { return d_max_; }
    bool is_zero() const { return c_.empty(); }
    const std::map<CurveClass, T>& coeffs() const { return c_; }

    T coeff(const CurveClass& d) const
    {
        auto it = c_.find(d);
        return it == c_.end() ? T() : it->second;
    }
    T constant_term() const { return coeff(CurveClass(m_, 0)); }
    bool constant_term_free() const { return c_.find(CurveClass(m_, 0)) == c_.end(); }

    void set(const CurveClass& d, T v)
    {
        require(static_cast<int>(d.size()) == m_, Errc::RingMismatch, "exponent arity");
        if (total_degree(d) > d_max_)
            return;
        if (ring_is_zero(v))
            c_.erase(d);
        else
            c_[d] = std::move(v);
    }

    NovikovSeries& operator+=(const NovikovSeries& o)
    {
        check_ring(o);
        for (const auto& [d, v] : o.c_) {
            auto it = c_.find(d);
            if (it == c_.end()) {
                c_.emplace(d, v);
            } else {
                it->second += v;
                if (ring_is_zero(it->second))
                    c_.erase(it);
            }
        }
        return *this;
    }
    NovikovSeries& operator-=(const NovikovSeries& o) { return *this += o.negated(); }
    friend NovikovSeries operator+(NovikovSeries a, const NovikovSeries& b) { return a += b; }
    friend NovikovSeries operator-(NovikovSeries a, const NovikovSeries& b) { return a -= b; }

    NovikovSeries negated() const
    {
        NovikovSeries r(m_, d_max_);
        for (const auto& [d, v] : c_)
            r.c_.emplace(d, ring_scale(v, Q(-1)));
        return r;
    }

    friend NovikovSeries operator*(const NovikovSeries& a, const NovikovSeries& b)
    {
        a.check_ring(b);
        NovikovSeries r(a.m_, a.d_max_);
        for (const auto& [da, va] : a.c_) {
            int ta = total_degree(da);
            for (const auto& [db, vb] : b.c_) {
                if (ta + total_degree(db) > a.d_max_)
                    continue;
                CurveClass d(a.m_);
                for (int i = 0; i < a.m_; ++i)
                    d[i] = da[i] + db[i];
                T prod = va * vb;
                auto it = r.c_.find(d);
                if (it == r.c_.end()) {
                    if (!ring_is_zero(prod))
                        r.c_.emplace(std::move(d), std::move(prod));
                } else {
                    it->second += prod;
                    if (ring_is_zero(it->second))
                        r.c_.erase(it);
                }
            }
        }
        return r;
    }

    NovikovSeries scaled(const Q& k) const
    {
        NovikovSeries r(m_, d_max_);
        if (k == 0)
            return r;
        for (const auto& [d, v] : c_)
            r.c_.emplace(d, ring_scale(v, k));
        return r;
    }

    template <class U>
    NovikovSeries<U> mapped(const std::function<U(const T&)>& f) const
    {
        NovikovSeries<U> r(m_, d_max_);
        for (const auto& [d, v] : c_)
            r.set(d, f(v));
        return r;
    }

    /* Restriction to a lower truncation order. */
    NovikovSeries truncated(int new_d_max) const
    {
        NovikovSeries r(m_, new_d_max);
        for (const auto& [d, v] : c_)
            if (total_degree(d) <= new_d_max)
                r.c_.emplace(d, v);
        return r;
    }

    bool operator==(const NovikovSeries& o) const { return m_ == o.m_ && d_max_ == o.d_max_ && c_ == o.c_; }

private:
    void check_ring(const NovikovSeries& o) const
    {
        require(m_ == o.m_ && d_max_ == o.d_max_, Errc::RingMismatch,
                "series truncation/arity mismatch");
    }

    int m_ = 0;
    int d_max_ = 0;
    std::map<CurveClass, T> c_;
};

/* exp(u) for constant-term-free u. */
template <class T>
NovikovSeries<T> series_exp(const NovikovSeries<T>& u)
{
    require(u.constant_term_free(), Errc::NonzeroConstantTerm, "exp needs a constant-term-free input");
    NovikovSeries<T> r = NovikovSeries<T>::one(u.vars(), u.d_max());
    NovikovSeries<T> pw = NovikovSeries<T>::one(u.vars(), u.d_max());
    Q fact = 1;
    for (int k = 1; k <= u.d_max(); ++k) {
        pw = pw * u;
        if (pw.is_zero())
            break;
        fact *= k;
        r += pw.scaled(Q(1) / fact);
    }
    return r;
}

/* log(1 + v) for constant-term-free v. */
template <class T>
NovikovSeries<T> series_log1p(const NovikovSeries<T>& v)
{
    require(v.constant_term_free(), Errc::NonzeroConstantTerm, "log needs a constant-term-free input");
    NovikovSeries<T> r(v.vars(), v.d_max());
    NovikovSeries<T> pw = NovikovSeries<T>::one(v.vars(), v.d_max());
    for (int k = 1; k <= v.d_max(); ++k) {
        pw = pw * v;
        if (pw.is_zero())
            break;
        r += pw.scaled(Q(k % 2 == 1 ? 1 : -1, k));
    }
    return r;
}

/* 1/(1 + v) for constant-term-free v. */
template <class T>
NovikovSeries<T> series_geom_inverse(const NovikovSeries<T>& v)
{
    require(v.constant_term_free(), Errc::NonzeroConstantTerm, "inverse needs unit constant term");
    NovikovSeries<T> r = NovikovSeries<T>::one(v.vars(), v.d_max());
    NovikovSeries<T> pw = NovikovSeries<T>::one(v.vars(), v.d_max());
    for (int k = 1; k <= v.d_max(); ++k) {
        pw = pw * v;
        if (pw.is_zero())
            break;
        r += pw.scaled(Q(k % 2 == 1 ? -1 : 1));
    }
    return r;
}

/*
  q_i -> q_i * exp(u_i): coefficientwise reassembly of s(q) as a series in the
  shifted variables, exact to the truncation order.
*/
template <class T>
NovikovSeries<T> substitute_exp_shift(const NovikovSeries<T>& s, const std::vector<NovikovSeries<T>>& shifts)
{
    require(static_cast<int>(shifts.size()) == s.vars(), Errc::RingMismatch, "one shift per variable");
    int m = s.vars(), J = s.d_max();
    // Powers of E_i = exp(u_i), computed once.
    std::vector<std::vector<NovikovSeries<T>>> epow(m);
    for (int i = 0; i < m; ++i) {
        require(shifts[i].constant_term_free(), Errc::NonzeroConstantTerm, "shift with constant term");
        epow[i].push_back(NovikovSeries<T>::one(m, J));
        epow[i].push_back(series_exp(shifts[i]));
    }
    auto pw = [&](int i, int k) -> const NovikovSeries<T>& {
        while (static_cast<int>(epow[i].size()) <= k)
            epow[i].push_back(epow[i].back() * epow[i][1]);
        return epow[i][k];
    };
    NovikovSeries<T> r(m, J);
    for (const auto& [d, v] : s.coeffs()) {
        NovikovSeries<T> term(m, J);
        term.set(d, v);
        for (int i = 0; i < m; ++i)
            if (d[i] > 0)
                term = term * pw(i, d[i]);
        r += term;
    }
    return r;
}

/*
  Inverse mirror-map shifts: given u with qt_i = q_i*exp(u_i(q)), produce ut with
  q_i = qt_i*exp(ut_i(qt)).  Fixed-point iteration; the grading makes it exact
  after d_max steps.
*/
template <class T>
std::vector<NovikovSeries<T>> invert_mirror_map(const std::vector<NovikovSeries<T>>& u)
{
    require(!u.empty(), Errc::RingMismatch, "no shifts");
    int m = u[0].vars(), J = u[0].d_max();
    std::vector<NovikovSeries<T>> ut(m, NovikovSeries<T>(m, J));
    for (int step = 0; step < J; ++step) {
        std::vector<NovikovSeries<T>> next(m);
        for (int i = 0; i < m; ++i)
            next[i] = substitute_exp_shift(u[i], ut).negated();
        if (next == ut)
            break;
        ut = std::move(next);
    }
    return ut;
}

}  // namespace gwkit
