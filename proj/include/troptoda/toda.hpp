#pragma once

#include <optional>
#include <random>
#include <vector>

#include "troptoda/tropical_poly.hpp"

namespace troptoda {

using Rng = std::mt19937_64;

/// Ultradiscrete lattice state. Q[n][k] holds the slice at time t + k/M for
/// site n (0-based, cyclic mod N); W[n] the companion variables at time t.
struct TodaStateU {
    long M = 1, N = 1;
    Rational t;
    std::vector<RatVec> Q;  // N rows, M columns
    RatVec W;               // N entries

    RatVec slice_sums() const;  // sum_n Q[n][k] for each k
    Rational w_sum() const;
};

/// Throws PhaseSpaceViolation unless every slice sum is below the W sum and
/// the slice sums are pairwise distinct.
void validate_state(const TodaStateU& s);

/// One evolution step of the piecewise-linear lattice; time advances by 1/M
/// and the slice window shifts.
TodaStateU step_ud(const TodaStateU& s);

/// Puiseux-valued state of the discrete lattice.
struct TodaStateP {
    long M = 1, N = 1;
    Rational t;
    std::vector<std::vector<PuiseuxJet>> I;  // N rows, M columns
    std::vector<PuiseuxJet> V;

    /// Valuation image; requires all entries nonzero.
    TodaStateU val_image() const;
};

void validate_state(const TodaStateP& s);

/// One step of the discrete flow, solved through the periodic resolvent and
/// verified against the defining difference equations by substitution.
TodaStateP step_p(const TodaStateP& s);

/// Monomial lift with uniformly random integer leading coefficients.
TodaStateP lift_state(const TodaStateU& s, Rng& rng);

/// Lax data: L(y) = M(y) R^{(M-1)} ... R^{(0)} as matrices of Laurent
/// polynomials in y with jet coefficients.
struct LaxFamily {
    std::vector<std::vector<PuiseuxPolynomial2>> R;  // M matrices, each N x N
    std::vector<std::vector<PuiseuxPolynomial2>> Mm;
    std::vector<std::vector<PuiseuxPolynomial2>> L;
};

LaxFamily lax(const TodaStateP& s);

/// Characteristic data (-1)^{N+1} y Det(L(y) - x I); lands in the spectral
/// space: y^{M+1} + f_M(x) y^M + ... + f_1(x) y + f_0 with deg f_j <= d_j.
PuiseuxPolynomial2 spectral_poly(const TodaStateP& s);

/// Spectral map on ultradiscrete states: valuations of the characteristic
/// data of a generic monomial lift, re-drawn on degeneracy.
SpectralShape spectral_map_ud(const TodaStateU& s, Rng& rng, int max_retries = 16);

/// Min-plus route to the spectral shape: tropical determinant with
/// sign-aware tie detection. Returns nullopt when a tie makes cancellation
/// possible; agreement with spectral_map_ud is the generic case.
std::optional<SpectralShape> spectral_shape_minplus(const TodaStateU& s);

/// True iff all Lax-block determinant factors are nonzero, i.e. the slice
/// products are pairwise distinct and distinct from the V product.
bool jacobian_test(const TodaStateP& s);

/// Random phase-space point with small rational entries.
TodaStateU sample_state_u(long M, long N, Rng& rng, long denominator_bound = 2);

}  // namespace troptoda
