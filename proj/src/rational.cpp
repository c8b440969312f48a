#include "gwkit/rational.hpp"

#include "gwkit/errors.hpp"

namespace gwkit {

std::string q_to_string(const Q& q)
{
    if (denominator(q) == 1)
        return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

Q q_from_string(const std::string& s)
{
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Q(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        require(den != 0, Errc::ParseError, "zero denominator in rational `" + s + "`");
        return Q(num, den);
    } catch (const std::runtime_error&) {
        fail(Errc::ParseError, "bad rational `" + s + "`");
    }
}

Int factorial(int n)
{
    Int r = 1;
    for (int k = 2; k <= n; ++k)
        r *= k;
    return r;
}

Int binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    Int r = 1;
    for (int i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

Q harmonic(int n)
{
    Q h = 0;
    for (int k = 1; k <= n; ++k)
        h += Q(1, k);
    return h;
}

std::uint64_t Rng::next()
{
    // splitmix64
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

long Rng::next_in(long lo, long hi)
{
    auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(next() % span);
}

const char* errc_name(Errc c)
{
    switch (c) {
    case Errc::NonSmoothCone: return "NonSmoothCone";
    case Errc::ChargeRelationViolation: return "ChargeRelationViolation";
    case Errc::DanglingFacet: return "DanglingFacet";
    case Errc::BalloonRelationViolated: return "BalloonRelationViolated";
    case Errc::MoriBasisNotAdapted: return "MoriBasisNotAdapted";
    case Errc::DegenerateSample: return "DegenerateSample";
    case Errc::EpsilonPoleResidue: return "EpsilonPoleResidue";
    case Errc::RingMismatch: return "RingMismatch";
    case Errc::NonzeroConstantTerm: return "NonzeroConstantTerm";
    case Errc::NegativePairing: return "NegativePairing";
    case Errc::NonNegativePairing: return "NonNegativePairing";
    case Errc::OrderViolation: return "OrderViolation";
    case Errc::DivisionByZeroEuler: return "DivisionByZeroEuler";
    case Errc::PoleOrderExceeded: return "PoleOrderExceeded";
    case Errc::InconsistentDecomposition: return "InconsistentDecomposition";
    case Errc::TruncationOverflow: return "TruncationOverflow";
    case Errc::GaugeCheckFailed: return "GaugeCheckFailed";
    case Errc::NegativeS: return "NegativeS";
    case Errc::MissingDivisorDegree: return "MissingDivisorDegree";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::UnsupportedDegree: return "UnsupportedDegree";
    case Errc::UnsupportedSpec: return "UnsupportedSpec";
    case Errc::ParseError: return "ParseError";
    case Errc::IoError: return "IoError";
    }
    return "UnknownError";
}

}  // namespace gwkit
