#include "gwkit/alpha.hpp"

#include "gwkit/errors.hpp"

#include <limits>
#include <sstream>

namespace gwkit {

AlphaPoly::AlphaPoly(ScalarPoly c)
{
    if (!c.is_zero())
        coeffs_.push_back(std::move(c));
}

AlphaPoly AlphaPoly::linear(const ScalarPoly& c, const Q& k)
{
    AlphaPoly p;
    p.coeffs_.resize(2);
    p.coeffs_[0] = c;
    p.coeffs_[1] = ScalarPoly(k);
    p.trim();
    return p;
}

const ScalarPoly& AlphaPoly::coeff(int j) const
{
    static const ScalarPoly kZero;
    if (j < 0 || j >= static_cast<int>(coeffs_.size()))
        return kZero;
    return coeffs_[j];
}

void AlphaPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

AlphaPoly& AlphaPoly::operator+=(const AlphaPoly& o)
{
    if (coeffs_.size() < o.coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (size_t j = 0; j < o.coeffs_.size(); ++j)
        coeffs_[j] += o.coeffs_[j];
    trim();
    return *this;
}

AlphaPoly& AlphaPoly::operator-=(const AlphaPoly& o)
{
    if (coeffs_.size() < o.coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (size_t j = 0; j < o.coeffs_.size(); ++j)
        coeffs_[j] -= o.coeffs_[j];
    trim();
    return *this;
}

AlphaPoly operator*(const AlphaPoly& a, const AlphaPoly& b)
{
    AlphaPoly r;
    if (a.is_zero() || b.is_zero())
        return r;
    r.coeffs_.resize(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero())
            continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    r.trim();
    return r;
}

AlphaPoly AlphaPoly::operator-() const
{
    AlphaPoly r;
    r.coeffs_.reserve(coeffs_.size());
    for (const auto& c : coeffs_)
        r.coeffs_.push_back(-c);
    return r;
}

AlphaPoly AlphaPoly::scaled(const Q& c) const
{
    AlphaPoly r;
    if (c == 0)
        return r;
    r.coeffs_.reserve(coeffs_.size());
    for (const auto& v : coeffs_)
        r.coeffs_.push_back(v.scaled(c));
    return r;
}

AlphaPoly AlphaPoly::scaled(const ScalarPoly& c) const
{
    AlphaPoly r;
    if (c.is_zero())
        return r;
    r.coeffs_.reserve(coeffs_.size());
    for (const auto& v : coeffs_)
        r.coeffs_.push_back(v * c);
    r.trim();
    return r;
}

AlphaPoly AlphaPoly::bar() const
{
    AlphaPoly r = *this;
    for (size_t j = 1; j < r.coeffs_.size(); j += 2)
        r.coeffs_[j] = -r.coeffs_[j];
    return r;
}

ScalarPoly AlphaPoly::eval(const ScalarPoly& v) const
{
    ScalarPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * v + *it;
    return acc;
}

bool AlphaPoly::try_divide_monic_linear(const ScalarPoly& c, AlphaPoly* quotient) const
{
    // (c + alpha) has root alpha = -c; Horner synthetic division.
    if (is_zero()) {
        *quotient = AlphaPoly();
        return true;
    }
    ScalarPoly root = -c;
    std::vector<ScalarPoly> q(coeffs_.size() - 1);
    ScalarPoly carry;
    for (int j = degree(); j >= 1; --j) {
        carry = (j == degree()) ? coeffs_[j] : coeffs_[j] + carry * root;
        q[j - 1] = carry;
    }
    ScalarPoly rem = coeffs_[0] + carry * root;
    if (!rem.is_zero())
        return false;
    AlphaPoly out;
    out.coeffs_ = std::move(q);
    out.trim();
    *quotient = out;
    return true;
}

int AlphaPoly::vanish_order_at(const ScalarPoly& v) const
{
    if (is_zero())
        return std::numeric_limits<int>::max();
    int order = 0;
    AlphaPoly cur = *this;
    AlphaPoly q;
    while (cur.try_divide_monic_linear(-v, &q)) {  // factor (alpha - v)
        ++order;
        cur = q;
        if (cur.is_zero())
            break;
    }
    return order;
}

std::string AlphaPoly::str() const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    for (int j = degree(); j >= 0; --j) {
        if (coeffs_[j].is_zero())
            continue;
        if (j != degree())
            os << " + ";
        os << "(" << coeffs_[j].str() << ")";
        if (j > 0)
            os << "*a^" << j;
    }
    return os.str();
}

AlphaLaurent AlphaLaurent::from_poly(const AlphaPoly& p, int low)
{
    AlphaLaurent r(low);
    for (int j = std::max(0, low); j <= p.degree(); ++j)
        r.set(j, p.coeff(j));
    return r;
}

int AlphaLaurent::max_exp() const
{
    return terms_.empty() ? low_ - 1 : terms_.rbegin()->first;
}

ScalarPoly AlphaLaurent::coeff(int exp) const
{
    auto it = terms_.find(exp);
    return it == terms_.end() ? ScalarPoly() : it->second;
}

void AlphaLaurent::set(int exp, const ScalarPoly& c)
{
    if (c.is_zero())
        terms_.erase(exp);
    else if (exp >= low_)
        terms_[exp] = c;
}

void AlphaLaurent::cut()
{
    for (auto it = terms_.begin(); it != terms_.end();)
        it = (it->first < low_ || it->second.is_zero()) ? terms_.erase(it) : std::next(it);
}

AlphaLaurent& AlphaLaurent::operator+=(const AlphaLaurent& o)
{
    low_ = std::max(low_, o.low_);
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end())
            terms_.emplace(e, c);
        else
            it->second += c;
    }
    cut();
    return *this;
}

AlphaLaurent operator*(const AlphaLaurent& a, const AlphaLaurent& b)
{
    // Terms below a.low_/b.low_ are unknown; the product is reliable down to
    // max(a.low + b.max, b.low + a.max).
    int low;
    if (a.terms_.empty() || b.terms_.empty())
        low = std::max(a.low_, b.low_);  // product is zero as far as it is known
    else
        low = std::max(a.low_ + b.max_exp(), b.low_ + a.max_exp());
    AlphaLaurent r(low);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            if (ea + eb < low)
                continue;
            auto it = r.terms_.find(ea + eb);
            if (it == r.terms_.end())
                r.terms_.emplace(ea + eb, ca * cb);
            else
                it->second += ca * cb;
        }
    r.cut();
    return r;
}

AlphaLaurent AlphaLaurent::scaled(const ScalarPoly& c) const
{
    AlphaLaurent r(low_);
    for (const auto& [e, v] : terms_)
        r.set(e, v * c);
    return r;
}

AlphaLaurent AlphaLaurent::scaled(const Q& c) const
{
    AlphaLaurent r(low_);
    for (const auto& [e, v] : terms_)
        r.set(e, v.scaled(c));
    return r;
}

AlphaLaurent AlphaLaurent::bar() const
{
    AlphaLaurent r(low_);
    for (const auto& [e, v] : terms_)
        r.set(e, (e % 2 == 0) ? v : -v);
    return r;
}

bool AlphaLaurent::eps_regular() const
{
    for (const auto& [e, v] : terms_)
        if (!v.eps_regular())
            return false;
    return true;
}

AlphaLaurent AlphaLaurent::nonequiv_limit() const
{
    AlphaLaurent r(low_);
    for (const auto& [e, v] : terms_) {
        require(v.eps_regular(), Errc::EpsilonPoleResidue,
                "negative eps power survives at alpha^" + std::to_string(e) + ": " + v.str());
        r.set(e, v.eps0_part());
    }
    return r;
}

std::string AlphaLaurent::str() const
{
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << it->second.str() << ")*a^" << it->first;
    }
    if (first)
        os << "0";
    os << " [+O(a^" << (low_ - 1) << ")]";
    return os.str();
}

int AlphaRational::den_size() const
{
    int n = 0;
    for (const auto& [c, m] : den_)
        n += m;
    return n;
}

void AlphaRational::mul_linear(const ScalarPoly& c, const Q& k)
{
    num_ = num_ * AlphaPoly::linear(c, k);
}

void AlphaRational::div_linear(const ScalarPoly& c, const Q& k)
{
    require(k != 0, Errc::DivisionByZeroEuler, "alpha-free factor in denominator");
    // (c + k*alpha) = k * (c/k + alpha)
    num_ = num_.scaled(Q(1) / k);
    den_[c.scaled(Q(1) / k)] += 1;
}

namespace {

/* Numerator of `a` over the common denominator lcm(a.den, b.den). */
AlphaPoly lift_to_common(const AlphaRational& a, const std::map<ScalarPoly, int>& common)
{
    AlphaPoly n = a.num();
    for (const auto& [c, m] : common) {
        auto it = a.den().find(c);
        int have = it == a.den().end() ? 0 : it->second;
        for (int i = have; i < m; ++i)
            n = n * AlphaPoly::linear(c, Q(1));
    }
    return n;
}

std::map<ScalarPoly, int> den_union(const std::map<ScalarPoly, int>& a, const std::map<ScalarPoly, int>& b)
{
    std::map<ScalarPoly, int> u = a;
    for (const auto& [c, m] : b) {
        auto it = u.find(c);
        if (it == u.end())
            u.emplace(c, m);
        else
            it->second = std::max(it->second, m);
    }
    return u;
}

constexpr int kAutoReduceDen = 40;

}  // namespace

AlphaRational& AlphaRational::operator+=(const AlphaRational& o)
{
    if (o.is_zero())
        return *this;
    if (is_zero()) {
        *this = o;
        return *this;
    }
    auto common = den_union(den_, o.den_);
    num_ = lift_to_common(*this, common) + lift_to_common(o, common);
    den_ = std::move(common);
    if (num_.is_zero())
        den_.clear();
    else if (den_size() > kAutoReduceDen)
        reduce();
    return *this;
}

AlphaRational& AlphaRational::operator-=(const AlphaRational& o)
{
    return *this += -o;
}

AlphaRational operator*(const AlphaRational& a, const AlphaRational& b)
{
    AlphaRational r;
    if (a.is_zero() || b.is_zero())
        return r;
    r.num_ = a.num_ * b.num_;
    r.den_ = a.den_;
    for (const auto& [c, m] : b.den_)
        r.den_[c] += m;
    if (r.den_size() > kAutoReduceDen)
        r.reduce();
    return r;
}

AlphaRational AlphaRational::operator-() const
{
    AlphaRational r = *this;
    r.num_ = -r.num_;
    return r;
}

AlphaRational AlphaRational::scaled(const Q& c) const
{
    AlphaRational r;
    if (c == 0)
        return r;
    r.num_ = num_.scaled(c);
    r.den_ = den_;
    return r;
}

AlphaRational AlphaRational::scaled(const ScalarPoly& c) const
{
    AlphaRational r;
    if (c.is_zero())
        return r;
    r.num_ = num_.scaled(c);
    r.den_ = den_;
    return r;
}

AlphaRational AlphaRational::eps_shifted(int k) const
{
    return scaled(ScalarPoly::monomial(Q(1), k));
}

AlphaRational AlphaRational::bar() const
{
    AlphaRational r;
    r.num_ = num_.bar();
    int flips = 0;
    for (const auto& [c, m] : den_) {
        r.den_[-c] += m;  // (c + alpha) -> (c - alpha) = -(-c + alpha)
        flips += m;
    }
    if (flips % 2 == 1)
        r.num_ = -r.num_;
    return r;
}

bool AlphaRational::operator==(const AlphaRational& o) const
{
    AlphaRational d = *this;
    d -= o;
    return d.is_zero();
}

void AlphaRational::reduce()
{
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    for (auto it = den_.begin(); it != den_.end();) {
        AlphaPoly q;
        while (it->second > 0 && num_.try_divide_monic_linear(it->first, &q)) {
            num_ = q;
            --it->second;
        }
        it = (it->second == 0) ? den_.erase(it) : std::next(it);
    }
}

int AlphaRational::alpha_degree() const
{
    if (is_zero())
        return std::numeric_limits<int>::min();
    AlphaRational r = *this;
    r.reduce();
    return r.num_.degree() - r.den_size();
}

AlphaLaurent AlphaRational::expand(int low) const
{
    if (is_zero())
        return AlphaLaurent(low);
    AlphaLaurent r = AlphaLaurent::from_poly(num_, low);
    // 1/(c + alpha) = sum_{i>=0} (-c)^i alpha^{-1-i}
    for (const auto& [c, mult] : den_) {
        for (int m = 0; m < mult; ++m) {
            AlphaLaurent inv(low - std::max(0, r.max_exp()) - 1);
            ScalarPoly pw = ScalarPoly::one();
            ScalarPoly negc = -c;
            for (int i = 0;; ++i) {
                int e = -1 - i;
                if (e < inv.low())
                    break;
                if (!pw.is_zero())
                    inv.set(e, pw);
                else
                    break;  // c == 0: exact single term
                pw = pw * negc;
            }
            r = r * inv;
        }
    }
    // The result of an exact rational expansion is reliable down to `low` even
    // when intermediate bounds were conservative.
    AlphaLaurent out(low);
    for (const auto& [e, v] : r.terms())
        if (e >= low)
            out.set(e, v);
    return out;
}

int AlphaRational::den_vanish_count(const ScalarPoly& v) const
{
    int n = 0;
    for (const auto& [c, m] : den_)
        if ((c + v).is_zero())
            n += m;
    return n;
}

int AlphaRational::pole_order_at(const ScalarPoly& v) const
{
    if (is_zero())
        return std::numeric_limits<int>::min();
    int den_ord = den_vanish_count(v);
    if (den_ord == 0)
        return 0;
    return den_ord - num_.vanish_order_at(v);
}

std::string AlphaRational::str() const
{
    std::ostringstream os;
    os << "[" << num_.str() << "]";
    for (const auto& [c, m] : den_)
        os << " / (" << c.str() << " + a)^" << m;
    return os.str();
}

}  // namespace gwkit
