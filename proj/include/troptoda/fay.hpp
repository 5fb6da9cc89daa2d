#pragma once

#include <array>
#include <string>

#include "troptoda/theta.hpp"

namespace troptoda {

/// Half-integer shift data (alpha, beta).
struct ThetaCharacteristic {
    RatVec alpha, beta;
};

/// Rejects entries outside (1/2) Z.
void validate_characteristic(const ThetaCharacteristic& chr, long g);

/// Odd characteristic for a hyperelliptic period lattice:
/// alpha_j = -1/2 d_{j,i-1} + 1/2 d_{j,i} with i the first index where
/// beta_i is nonzero mod Z. Throws InvalidBeta when beta is integral.
ThetaCharacteristic odd_characteristic(long g, const RatVec& beta);

/// Four marked points given by their Abel-Jacobi vectors from a common base
/// point, plus the characteristic used for the sign data.
struct FayConfiguration {
    ThetaContext ctx;
    ThetaCharacteristic chr;
    std::array<RatVec, 4> points;  // u_1..u_4

    FayConfiguration(ThetaContext c, ThetaCharacteristic ch, std::array<RatVec, 4> pts);

    /// Pairwise integral from P_a to P_b (1-based): u_b - u_a. Antisymmetric
    /// and additive by construction.
    RatVec integral(int a, int b) const;
};

struct FaySigns {
    std::array<long, 3> k;
    std::array<int, 3> s;  // s_i = (-1)^{k_i}
    std::array<LatticeVec, 6> argmins;
    /// 1-based index whose sign differs from the other two; 0 if all equal.
    int distinguished() const;
};

/// Sign data of the trisecant identity. Throws AmbiguousArgmin when any of
/// the six lattice minimizers is tied.
FaySigns fay_signs(const FayConfiguration& cfg);

struct FayVerdict {
    bool holds = false;
    int index = 0;  // distinguished i with F_i = min(F_{i+1}, F_{i+2})
    std::array<Rational, 3> F;
    FaySigns signs;
    std::string witness;  // populated when the identity fails
};

/// Precomputes the signs and constant theta blocks of a configuration, then
/// evaluates the trisecant identity pointwise.
class FayChecker {
public:
    explicit FayChecker(const FayConfiguration& cfg);

    const FaySigns& signs() const { return signs_; }
    int index() const { return index_; }

    std::array<Rational, 3> evaluate(const RatVec& Z) const;  // F_1, F_2, F_3
    FayVerdict check(const RatVec& Z) const;

private:
    const FayConfiguration& cfg_;
    FaySigns signs_;
    int index_;
    std::array<Rational, 3> blocks_;  // Theta[beta] constants per F_i
    std::array<RatVec, 5> shifts_;    // Z-shifts reused across evaluations
};

/// One-shot variant: signs, pattern gate, exact identity check at Z.
/// Throws SignPatternInvalid when all three signs agree.
FayVerdict fay_check(const FayConfiguration& cfg, const RatVec& Z);

}  // namespace troptoda
