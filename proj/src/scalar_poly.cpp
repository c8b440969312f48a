#include "gwkit/scalar_poly.hpp"

#include "gwkit/errors.hpp"

#include <algorithm>
#include <sstream>

namespace gwkit {

void ScalarPoly::set(int eps_exp, int x_exp, const Q& c)
{
    if (c == 0)
        terms_.erase({eps_exp, x_exp});
    else
        terms_[{eps_exp, x_exp}] = c;
}

bool ScalarPoly::is_one() const
{
    return terms_.size() == 1 && terms_.begin()->first == Key{0, 0} && terms_.begin()->second == 1;
}

bool ScalarPoly::eps_regular() const
{
    return terms_.empty() || terms_.begin()->first.first >= 0;
}

bool ScalarPoly::homogeneous(int degree) const
{
    for (const auto& [k, c] : terms_)
        if (k.first + k.second != degree)
            return false;
    return true;
}

int ScalarPoly::eps_min() const
{
    return terms_.empty() ? 0 : terms_.begin()->first.first;
}

int ScalarPoly::eps_max() const
{
    return terms_.empty() ? 0 : terms_.rbegin()->first.first;
}

int ScalarPoly::x_max() const
{
    int m = 0;
    for (const auto& [k, c] : terms_)
        m = std::max(m, k.second);
    return m;
}

Q ScalarPoly::coeff(int eps_exp, int x_exp) const
{
    auto it = terms_.find({eps_exp, x_exp});
    return it == terms_.end() ? Q(0) : it->second;
}

std::vector<Q> ScalarPoly::eps0_x_poly() const
{
    std::vector<Q> out;
    for (const auto& [k, c] : terms_) {
        if (k.first != 0)
            continue;
        if (static_cast<int>(out.size()) <= k.second)
            out.resize(k.second + 1, Q(0));
        out[k.second] = c;
    }
    return out;
}

Q ScalarPoly::as_rational() const
{
    if (terms_.empty())
        return Q(0);
    require(terms_.size() == 1 && terms_.begin()->first == Key{0, 0}, Errc::InconsistentDecomposition,
            "expected a rational constant, got " + str());
    return terms_.begin()->second;
}

ScalarPoly& ScalarPoly::operator+=(const ScalarPoly& o)
{
    for (const auto& [k, c] : o.terms_) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }
    return *this;
}

ScalarPoly& ScalarPoly::operator-=(const ScalarPoly& o)
{
    for (const auto& [k, c] : o.terms_) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, -c);
        } else {
            it->second -= c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }
    return *this;
}

ScalarPoly ScalarPoly::operator-() const
{
    ScalarPoly r;
    for (const auto& [k, c] : terms_)
        r.terms_.emplace(k, -c);
    return r;
}

ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b)
{
    ScalarPoly r;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) {
            ScalarPoly::Key k{ka.first + kb.first, ka.second + kb.second};
            auto it = r.terms_.find(k);
            if (it == r.terms_.end()) {
                r.terms_.emplace(k, ca * cb);
            } else {
                it->second += ca * cb;
                if (it->second == 0)
                    r.terms_.erase(it);
            }
        }
    return r;
}

ScalarPoly ScalarPoly::scaled(const Q& c) const
{
    ScalarPoly r;
    if (c == 0)
        return r;
    for (const auto& [k, v] : terms_)
        r.terms_.emplace(k, v * c);
    return r;
}

ScalarPoly ScalarPoly::eps_shifted(int k) const
{
    ScalarPoly r;
    for (const auto& [key, v] : terms_)
        r.terms_.emplace(Key{key.first + k, key.second}, v);
    return r;
}

ScalarPoly ScalarPoly::mul_trunc_x(const ScalarPoly& o, int x_trunc) const
{
    ScalarPoly r;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_) {
            if (ka.second + kb.second > x_trunc)
                continue;
            Key k{ka.first + kb.first, ka.second + kb.second};
            auto it = r.terms_.find(k);
            if (it == r.terms_.end()) {
                r.terms_.emplace(k, ca * cb);
            } else {
                it->second += ca * cb;
                if (it->second == 0)
                    r.terms_.erase(it);
            }
        }
    return r;
}

ScalarPoly ScalarPoly::trunc_x(int x_trunc) const
{
    ScalarPoly r;
    for (const auto& [k, c] : terms_)
        if (k.second <= x_trunc)
            r.terms_.emplace(k, c);
    return r;
}

ScalarPoly ScalarPoly::eps_polar_part() const
{
    ScalarPoly r;
    for (const auto& [k, c] : terms_)
        if (k.first < 0)
            r.terms_.emplace(k, c);
    return r;
}

ScalarPoly ScalarPoly::eps0_part() const
{
    ScalarPoly r;
    for (const auto& [k, c] : terms_)
        if (k.first == 0)
            r.terms_.emplace(k, c);
    return r;
}

std::strong_ordering ScalarPoly::operator<=>(const ScalarPoly& o) const
{
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end() && jt != o.terms_.end(); ++it, ++jt) {
        if (it->first != jt->first)
            return it->first < jt->first ? std::strong_ordering::less : std::strong_ordering::greater;
        if (it->second != jt->second)
            return it->second < jt->second ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (it != terms_.end())
        return std::strong_ordering::greater;
    if (jt != o.terms_.end())
        return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

std::string ScalarPoly::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        Q a = c;
        if (!first)
            os << (a < 0 ? " - " : " + ");
        else if (a < 0)
            os << "-";
        first = false;
        if (a < 0)
            a = -a;
        bool has_var = k.first != 0 || k.second != 0;
        if (a != 1 || !has_var) {
            os << q_to_string(a);
            if (has_var)
                os << "*";
        }
        if (k.second != 0) {
            os << "x";
            if (k.second != 1)
                os << "^" << k.second;
            if (k.first != 0)
                os << "*";
        }
        if (k.first != 0) {
            os << "eps";
            if (k.first != 1)
                os << "^" << k.first;
        }
    }
    return os.str();
}

}  // namespace gwkit
