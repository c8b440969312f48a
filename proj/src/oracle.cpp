#include "gwkit/oracle.hpp"

#include "gwkit/equivariant.hpp"
#include "gwkit/errors.hpp"
#include "gwkit/scalar_poly.hpp"

#include <algorithm>

namespace gwkit::oracle {

namespace {

/* Geometric weight samples; positive and multiplicatively independent enough that
   no denominator of a d <= 2 graph sum can vanish. */
QVec sample_lambda(int n, long base)
{
    QVec l(n + 1);
    Q v = 1;
    for (int i = 0; i <= n; ++i) {
        l[i] = v;
        v *= base;
    }
    return l;
}

/* x-polynomial as a dense coefficient vector. */
using XPoly = std::vector<Q>;

XPoly xp_one() { return {Q(1)}; }

XPoly xp_mul(const XPoly& a, const XPoly& b, int trunc)
{
    XPoly r(std::min<size_t>(a.size() + b.size() - 1, trunc + 1), Q(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (size_t j = 0; j < b.size() && i + j < r.size(); ++j)
            r[i + j] += a[i] * b[j];
    }
    return r;
}

/* (x + c) */
XPoly xp_linear(const Q& c) { return {c, Q(1)}; }

/* 1/(x + c) as a truncated series; c must be nonzero. */
XPoly xp_inv_linear(const Q& c, int trunc)
{
    require(c != 0, Errc::DegenerateSample, "vanishing node weight in graph sum");
    XPoly r(trunc + 1, Q(0));
    Q f = Q(1) / c;
    for (int t = 0; t <= trunc; ++t) {
        r[t] = f;
        f = -f / c;
    }
    return r;
}

void xp_add_scaled(XPoly& acc, const XPoly& a, const Q& scale)
{
    if (acc.size() < a.size())
        acc.resize(a.size(), Q(0));
    for (size_t i = 0; i < a.size(); ++i)
        acc[i] += a[i] * scale;
}

Q xp_coeff(const XPoly& p, int j)
{
    return (j >= 0 && j < static_cast<int>(p.size())) ? p[j] : Q(0);
}

/* Sum over pairs {i<j} of bundle_factors(i,j) / tangent-products. */
template <class NumFn>
XPoly grassmann_bott(int n, const QVec& lam, NumFn&& num_at)
{
    XPoly acc;
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            XPoly num = num_at(i, j);
            Q den = 1;
            for (int c = 0; c <= n; ++c) {
                if (c == i || c == j)
                    continue;
                den *= (lam[c] - lam[i]) * (lam[c] - lam[j]);
            }
            xp_add_scaled(acc, num, Q(1) / den);
        }
    return acc;
}

LinesResult lines_common(int n, int k, bool concave)
{
    require(n >= 1 && k >= 1, Errc::DimensionMismatch, "need n >= 1, k >= 1");
    if (concave)
        require(k >= 2, Errc::DimensionMismatch, "concave lines oracle needs k >= 2");
    int rank = concave ? k - 1 : k + 1;
    int dim = 2 * (n - 1);
    int s = rank - dim;

    int trunc = rank;
    auto run = [&](long base) {
        QVec lam = sample_lambda(n, base);
        return grassmann_bott(n, lam, [&](int i, int j) {
            XPoly num = xp_one();
            if (!concave) {
                for (int a = 0; a <= k; ++a)
                    num = xp_mul(num, xp_linear(Q(a) * lam[i] + Q(k - a) * lam[j]), trunc);
            } else {
                for (int a = 1; a <= k - 1; ++a)
                    num = xp_mul(num, xp_linear(-(Q(a) * lam[i] + Q(k - a) * lam[j])), trunc);
            }
            return num;
        });
    };

    XPoly p0 = run(2), p1 = run(3);
    LinesResult res;
    res.s = s;
    res.x_poly = p0;
    res.value = s >= 0 ? xp_coeff(p0, s) : Q(0);
    require(s < 0 || xp_coeff(p1, s) == res.value, Errc::DegenerateSample,
            "lines oracle value depends on the weight sample");
    // Coefficients of x^j for j > s are integrals of classes below top degree: must vanish.
    for (int j = std::max(s + 1, 0); j <= rank; ++j)
        require(xp_coeff(p0, j) == 0 && xp_coeff(p1, j) == 0, Errc::DegenerateSample,
                "sub-top-degree integral is nonzero in the lines oracle");
    return res;
}

struct SplitBundle {
    std::vector<long> convex;   // degrees k_i > 0
    std::vector<long> concave;  // degrees l_j > 0 for O(-l_j)
};

SplitBundle split_of(const BundleSpec& spec)
{
    SplitBundle b;
    for (const auto& c : spec.convex) {
        require(c.size() == 1 && c[0] > 0, Errc::UnsupportedSpec, "graph oracle expects O(k) on P^n");
        b.convex.push_back(c[0]);
    }
    for (const auto& c : spec.concave) {
        require(c.size() == 1 && c[0] < 0, Errc::UnsupportedSpec, "graph oracle expects O(-l) on P^n");
        b.concave.push_back(-c[0]);
    }
    return b;
}

/* H^0 weights of O(k) on a degree-de edge between fixed points i, j. */
XPoly edge_convex(const QVec& lam, int i, int j, long k, int de, int trunc)
{
    XPoly num = xp_one();
    for (long a = 0; a <= k * de; ++a)
        num = xp_mul(num, xp_linear((Q(a) * lam[i] + Q(k * de - a) * lam[j]) / de), trunc);
    return num;
}

/* H^1 weights of O(-l) on a degree-de edge. */
XPoly edge_concave(const QVec& lam, int i, int j, long l, int de, int trunc)
{
    XPoly num = xp_one();
    for (long a = 1; a <= l * de - 1; ++a)
        num = xp_mul(num, xp_linear(-(Q(a) * lam[i] + Q(l * de - a) * lam[j]) / de), trunc);
    return num;
}

Q graph_sum_run(int n, const SplitBundle& b, int d, long base, int s_d)
{
    QVec lam = sample_lambda(n, base);
    int trunc = s_d;
    XPoly acc;

    auto tangent_pair = [&](int i, int j) {
        Q den = 1;
        for (int c = 0; c <= n; ++c) {
            if (c == i || c == j)
                continue;
            den *= (lam[i] - lam[c]) * (lam[j] - lam[c]);
        }
        return den;
    };

    if (d == 1) {
        for (int i = 0; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                XPoly num = xp_one();
                for (long k : b.convex)
                    num = xp_mul(num, edge_convex(lam, i, j, k, 1, trunc), trunc);
                for (long l : b.concave)
                    num = xp_mul(num, edge_concave(lam, i, j, l, 1, trunc), trunc);
                xp_add_scaled(acc, num, Q(1) / tangent_pair(i, j));
            }
        return xp_coeff(acc, s_d);
    }

    require(d == 2, Errc::UnsupportedDegree, "graph sums implemented for d <= 2");

    // Type A: one degree-2 edge between i and j; |Aut| = 2 from the double cover.
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            XPoly num = xp_one();
            for (long k : b.convex)
                num = xp_mul(num, edge_convex(lam, i, j, k, 2, trunc), trunc);
            for (long l : b.concave)
                num = xp_mul(num, edge_concave(lam, i, j, l, 2, trunc), trunc);
            Q pt = -(lam[i] - lam[j]) * (lam[i] - lam[j]);  // moving H^0(f*T line)/aut
            Q pn = 1;
            for (int c = 0; c <= n; ++c) {
                if (c == i || c == j)
                    continue;
                pn *= (lam[i] - lam[c]) * (lam[j] - lam[c]) * ((lam[i] + lam[j]) / 2 - lam[c]);
            }
            xp_add_scaled(acc, num, Q(1) / (Q(2) * pt * pn));
        }

    // Type B: two degree-1 edges meeting at j; i = k allowed (then |Aut| = 2).
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n; ++i) {
            if (i == j)
                continue;
            for (int k = i; k <= n; ++k) {
                if (k == j)
                    continue;
                XPoly num = xp_one();
                for (long kk : b.convex) {
                    num = xp_mul(num, edge_convex(lam, i, j, kk, 1, trunc), trunc);
                    num = xp_mul(num, edge_convex(lam, k, j, kk, 1, trunc), trunc);
                    num = xp_mul(num, xp_inv_linear(Q(kk) * lam[j], trunc), trunc);  // node fiber
                }
                for (long l : b.concave) {
                    num = xp_mul(num, edge_concave(lam, i, j, l, 1, trunc), trunc);
                    num = xp_mul(num, edge_concave(lam, k, j, l, 1, trunc), trunc);
                    num = xp_mul(num, xp_linear(-Q(l) * lam[j]), trunc);  // node joins H^1
                }
                Q e1 = -(lam[i] - lam[j]) * tangent_pair(i, j);
                Q e2 = -(lam[k] - lam[j]) * tangent_pair(k, j);
                Q smooth = (lam[j] - lam[i]) + (lam[j] - lam[k]);
                require(smooth != 0, Errc::DegenerateSample, "vanishing node smoothing weight");
                Q et = 1;
                for (int c = 0; c <= n; ++c)
                    if (c != j)
                        et *= lam[j] - lam[c];
                Q aut = (i == k) ? 2 : 1;
                xp_add_scaled(acc, num, et / (aut * e1 * e2 * smooth));
            }
        }
    return xp_coeff(acc, s_d);
}

}  // namespace

LinesResult lines_convex(int n, int k) { return lines_common(n, k, false); }
LinesResult lines_concave(int n, int k) { return lines_common(n, k, true); }

Q graph_sum_Kd(int n, const BundleSpec& spec, int d)
{
    require(d == 1 || d == 2, Errc::UnsupportedDegree, "graph sums implemented for d in {1,2}");
    SplitBundle b = split_of(spec);
    long rank = 0;
    for (long k : b.convex)
        rank += k * d + 1;
    for (long l : b.concave)
        rank += l * d - 1;
    long dim = (n + 1) * d + n - 3;
    int s_d = static_cast<int>(rank - dim);
    if (s_d < 0)
        return Q(0);
    Q v0 = graph_sum_run(n, b, d, 2, s_d);
    Q v1 = graph_sum_run(n, b, d, 3, s_d);
    require(v0 == v1, Errc::DegenerateSample, "graph sum depends on the weight sample");
    return v0;
}

Q intersection_oracle(const ToricManifold& M, const std::vector<int>& monomial)
{
    require(static_cast<int>(monomial.size()) == M.m, Errc::DimensionMismatch, "one exponent per H_i");
    int deg = 0;
    for (int e : monomial)
        deg += e;
    require(deg == M.n, Errc::DimensionMismatch, "monomial degree must equal dim X");
    require(!M.factors.empty(), Errc::UnsupportedSpec,
            "combinatorial route needs the product-factor annotation");

    Q expected = 1;
    for (int i = 0; i < M.m; ++i)
        if (monomial[i] != M.factors[i])
            expected = 0;

    auto [s0, s1] = default_samples(M);
    for (const auto& sample : {s0, s1}) {
        auto geo = std::make_shared<const Geometry>(M, sample);
        DivisorPoly poly{{Q(1), {}, monomial}};
        AlphaRational integral = integrate(class_from_divisor_poly(geo, poly));
        AlphaLaurent ex = integral.expand(0);
        for (const auto& [e, c] : ex.terms())
            require(e == 0, Errc::EpsilonPoleResidue, "intersection number has spurious alpha dependence");
        Q loc = ex.coeff(0).as_rational();
        require(loc == expected, Errc::InconsistentDecomposition,
                "localization disagrees with the combinatorial intersection number: " + q_to_string(loc) +
                    " vs " + q_to_string(expected));
    }
    return expected;
}

}  // namespace gwkit::oracle
