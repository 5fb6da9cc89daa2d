#pragma once

#include <vector>

#include "troptoda/rational.hpp"

namespace troptoda {

using LatticeVec = std::vector<long>;

/// Evaluation context for the min-plus theta function of a period matrix:
/// holds B (symmetric, positive definite over Q) and its exact LDL^T.
class ThetaContext {
public:
    explicit ThetaContext(RatMat B);

    long genus() const { return g_; }
    const RatMat& B() const { return B_; }
    const Ldlt& ldl() const { return ldl_; }

    /// Row vector l mapped to l * B.
    RatVec row_times_B(const RatVec& l) const;

private:
    long g_;
    RatMat B_;
    Ldlt ldl_;
};

/// q_beta(m, Z) = 1/2 m B m^T + m (Z + beta B)^T, evaluated exactly.
Rational q_form(const ThetaContext& ctx, const RatVec& beta, const LatticeVec& m,
                const RatVec& Z);

/// Certified global minimum of q_beta(., Z) over the integer lattice.
/// `argmins` lists every minimizer inside the certified ellipsoid in
/// lexicographic order, so `argmins.front()` is the canonical argmin.
struct LatticeMin {
    Rational value;
    std::vector<LatticeVec> argmins;
    const LatticeVec& argmin() const { return argmins.front(); }
    bool unique() const { return argmins.size() == 1; }
};

LatticeMin lattice_minimize(const ThetaContext& ctx, const RatVec& beta, const RatVec& Z);

/// Theta(Z; B) = min over the lattice of q_0(m, Z).
Rational theta(const ThetaContext& ctx, const RatVec& Z);

/// Theta[beta](Z; B) = 1/2 beta B beta^T + beta Z^T + min q_beta(m, Z).
Rational theta_char(const ThetaContext& ctx, const RatVec& beta, const RatVec& Z);

/// Lexicographically smallest minimizer of q_beta(., Z).
LatticeVec theta_argmin(const ThetaContext& ctx, const RatVec& beta, const RatVec& Z);

}  // namespace troptoda
