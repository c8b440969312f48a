#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace gwkit {

using Int = boost::multiprecision::cpp_int;
using Q = boost::multiprecision::cpp_rational;

inline Q q_of(long n, long d = 1) { return Q(n, d); }

inline std::string num_str(const Q& q) { return numerator(q).str(); }
inline std::string den_str(const Q& q) { return denominator(q).str(); }

/* "n" or "n/d", decimal digits only. */
std::string q_to_string(const Q& q);
Q q_from_string(const std::string& s);

Int factorial(int n);
Int binomial(int n, int k);

/* Harmonic number H_n = sum_{k=1}^n 1/k (H_0 = 0). */
Q harmonic(int n);

/* Deterministic small-state PRNG for sample generation and property tests
   (split-mix style; value in [lo, hi]). */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    long next_in(long lo, long hi);

private:
    std::uint64_t state_;
};

}  // namespace gwkit
