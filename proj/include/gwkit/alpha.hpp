#pragma once

#include "gwkit/scalar_poly.hpp"

#include <limits>
#include <map>
#include <string>
#include <vector>

namespace gwkit {

/* Dense polynomial in alpha with ScalarPoly coefficients. */
class AlphaPoly {
public:
    AlphaPoly() = default;
    explicit AlphaPoly(ScalarPoly c);
    explicit AlphaPoly(const Q& c) : AlphaPoly(ScalarPoly(c)) {}

    /* c + k*alpha */
    static AlphaPoly linear(const ScalarPoly& c, const Q& k);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    const ScalarPoly& coeff(int j) const;

    AlphaPoly& operator+=(const AlphaPoly& o);
    AlphaPoly& operator-=(const AlphaPoly& o);
    friend AlphaPoly operator+(AlphaPoly a, const AlphaPoly& b) { return a += b; }
    friend AlphaPoly operator-(AlphaPoly a, const AlphaPoly& b) { return a -= b; }
    friend AlphaPoly operator*(const AlphaPoly& a, const AlphaPoly& b);
    AlphaPoly operator-() const;

    AlphaPoly scaled(const Q& c) const;
    AlphaPoly scaled(const ScalarPoly& c) const;
    AlphaPoly bar() const;  // alpha -> -alpha

    ScalarPoly eval(const ScalarPoly& v) const;
    /* Divide by the monic factor (c + alpha); returns false (and leaves quotient empty)
       if the remainder is nonzero. */
    bool try_divide_monic_linear(const ScalarPoly& c, AlphaPoly* quotient) const;
    /* Multiplicity of the root alpha = v. */
    int vanish_order_at(const ScalarPoly& v) const;

    bool operator==(const AlphaPoly& o) const { return coeffs_ == o.coeffs_; }
    std::string str() const;

private:
    void trim();
    std::vector<ScalarPoly> coeffs_;  // coeffs_[j] multiplies alpha^j
};

/* Truncated Laurent expansion at alpha -> infinity: terms with exponent >= low
   are exact, anything below `low` has been discarded. */
class AlphaLaurent {
public:
    AlphaLaurent() : low_(std::numeric_limits<int>::min() / 4) {}
    explicit AlphaLaurent(int low) : low_(low) {}

    static AlphaLaurent from_poly(const AlphaPoly& p, int low);

    int low() const { return low_; }
    bool is_zero() const { return terms_.empty(); }
    int max_exp() const;  // highest nonzero exponent; low_-1 if none
    ScalarPoly coeff(int exp) const;
    const std::map<int, ScalarPoly>& terms() const { return terms_; }
    void set(int exp, const ScalarPoly& c);

    AlphaLaurent& operator+=(const AlphaLaurent& o);
    friend AlphaLaurent operator+(AlphaLaurent a, const AlphaLaurent& b) { return a += b; }
    friend AlphaLaurent operator*(const AlphaLaurent& a, const AlphaLaurent& b);
    AlphaLaurent scaled(const ScalarPoly& c) const;
    AlphaLaurent scaled(const Q& c) const;
    AlphaLaurent bar() const;
    /* Set eps to zero in every coefficient; throws EpsilonPoleResidue on negative eps powers. */
    AlphaLaurent nonequiv_limit() const;
    bool eps_regular() const;

    std::string str() const;

private:
    void cut();
    std::map<int, ScalarPoly> terms_;
    int low_;
};

/*
  Rational function of alpha in localization form: a numerator polynomial over a
  product of monic linear factors (c + alpha).  Every denominator that appears in
  the pipeline (sigma-model Euler classes, alpha powers from gauge factors) is a
  product of such factors, so no general polynomial gcd is ever needed; reduction
  is root cancellation, performed lazily.
*/
class AlphaRational {
public:
    AlphaRational() = default;
    explicit AlphaRational(AlphaPoly num) : num_(std::move(num)) {}
    explicit AlphaRational(const ScalarPoly& c) : num_(AlphaPoly(c)) {}
    explicit AlphaRational(const Q& c) : num_(AlphaPoly(c)) {}

    static AlphaRational zero() { return AlphaRational(); }
    static AlphaRational one() { return AlphaRational(Q(1)); }

    bool is_zero() const { return num_.is_zero(); }
    const AlphaPoly& num() const { return num_; }
    const std::map<ScalarPoly, int>& den() const { return den_; }
    int den_size() const;

    /* Multiply by the linear factor (c + k*alpha). */
    void mul_linear(const ScalarPoly& c, const Q& k);
    /* Divide by the linear factor (c + k*alpha); k must be nonzero. */
    void div_linear(const ScalarPoly& c, const Q& k);

    AlphaRational& operator+=(const AlphaRational& o);
    AlphaRational& operator-=(const AlphaRational& o);
    friend AlphaRational operator+(AlphaRational a, const AlphaRational& b) { return a += b; }
    friend AlphaRational operator-(AlphaRational a, const AlphaRational& b) { return a -= b; }
    friend AlphaRational operator*(const AlphaRational& a, const AlphaRational& b);
    AlphaRational operator-() const;

    AlphaRational scaled(const Q& c) const;
    AlphaRational scaled(const ScalarPoly& c) const;
    AlphaRational eps_shifted(int k) const;
    AlphaRational bar() const;

    bool operator==(const AlphaRational& o) const;

    /* Cancel denominator factors that divide the numerator. */
    void reduce();

    /* deg_alpha as a rational function (numerator degree minus denominator degree);
       exact, computed after reduction.  Returns INT_MIN for zero. */
    int alpha_degree() const;

    /* Expansion at alpha -> infinity, keeping exponents >= low. */
    AlphaLaurent expand(int low) const;

    /* Number of denominator factors vanishing at alpha = v. */
    int den_vanish_count(const ScalarPoly& v) const;
    /* Pole order at alpha = v (<= 0 means regular there). */
    int pole_order_at(const ScalarPoly& v) const;

    std::string str() const;

private:
    AlphaPoly num_;
    std::map<ScalarPoly, int> den_;  // factor (key + alpha) with multiplicity
};

}  // namespace gwkit
