#pragma once

#include "gwkit/rational.hpp"

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace gwkit {

/*
  Scalars of the localization substrate: Laurent polynomials in eps (the
  torus-weight scaling parameter) whose coefficients are polynomials in x
  (the Chern-polynomial variable), over exact rationals.

  eps exponents may go negative (transiently, e.g. after dividing by an
  equivariant Euler class of a fixed point); x exponents never do.
*/
class ScalarPoly {
public:
    using Key = std::pair<int, int>;  // (eps exponent, x exponent)

    ScalarPoly() = default;
    explicit ScalarPoly(const Q& c) { set(0, 0, c); }

    static ScalarPoly zero() { return ScalarPoly(); }
    static ScalarPoly one() { return ScalarPoly(Q(1)); }
    static ScalarPoly monomial(const Q& c, int eps_exp, int x_exp = 0)
    {
        ScalarPoly p;
        p.set(eps_exp, x_exp, c);
        return p;
    }
    static ScalarPoly eps(const Q& c = Q(1)) { return monomial(c, 1, 0); }
    static ScalarPoly x(const Q& c = Q(1)) { return monomial(c, 0, 1); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;

    /* True if every term has eps_exp >= 0. */
    bool eps_regular() const;
    /* True if all monomials have the same total degree eps+x (zero counts as homogeneous). */
    bool homogeneous(int degree) const;

    int eps_min() const;  // 0 for the zero polynomial
    int eps_max() const;
    int x_max() const;

    Q coeff(int eps_exp, int x_exp) const;
    /* Coefficient of eps^0, as a dense x-polynomial (may be empty). */
    std::vector<Q> eps0_x_poly() const;
    /* The unique coefficient if the polynomial is a rational constant; throws otherwise. */
    Q as_rational() const;

    ScalarPoly& operator+=(const ScalarPoly& o);
    ScalarPoly& operator-=(const ScalarPoly& o);
    ScalarPoly operator-() const;
    friend ScalarPoly operator+(ScalarPoly a, const ScalarPoly& b) { return a += b; }
    friend ScalarPoly operator-(ScalarPoly a, const ScalarPoly& b) { return a -= b; }
    friend ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b);

    ScalarPoly scaled(const Q& c) const;
    /* Multiply by eps^k (k may be negative). */
    ScalarPoly eps_shifted(int k) const;
    /* Product dropping every x power above x_trunc. */
    ScalarPoly mul_trunc_x(const ScalarPoly& o, int x_trunc) const;
    /* Drop terms with x exponent above x_trunc. */
    ScalarPoly trunc_x(int x_trunc) const;
    /* Slice of terms with eps exponent < 0 (for pole-residue reporting). */
    ScalarPoly eps_polar_part() const;
    ScalarPoly eps0_part() const;

    bool operator==(const ScalarPoly& o) const { return terms_ == o.terms_; }
    /* Total order, usable as container key. */
    std::strong_ordering operator<=>(const ScalarPoly& o) const;

    const std::map<Key, Q>& terms() const { return terms_; }
    void set(int eps_exp, int x_exp, const Q& c);

    std::string str() const;  // human-readable, e.g. "3*eps^2 - 1/2*x*eps"

private:
    std::map<Key, Q> terms_;
};

}  // namespace gwkit
