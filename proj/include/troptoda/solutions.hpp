#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "troptoda/fay.hpp"
#include "troptoda/theta.hpp"
#include "troptoda/toda.hpp"
#include "troptoda/tropical_curve.hpp"

namespace troptoda {

/// Data generating the tau values T_n^{t+k/M} = Theta(Z0 - L n + lambda t + mu_k).
struct ThetaOrbit {
    long M = 1, N = 1;
    ThetaContext ctx;
    RatVec Z0, L, lambda;
    std::vector<RatVec> parts;   // lambda_1 .. lambda_M
    std::vector<long> sigma;     // 1-based permutation of 1..M
    std::vector<RatVec> mu;      // prefix sums sum_{i<=k} lambda_{sigma(i)}

    ThetaOrbit(long M, long N, ThetaContext ctx, RatVec Z0, RatVec L, RatVec lambda,
               std::vector<RatVec> parts, std::vector<long> sigma);
};

/// Memoized tau values. Time is indexed by s with tau = s/M, so slot k is
/// s mod M and the integer part is (s - k)/M.
class TauLattice {
public:
    explicit TauLattice(const ThetaOrbit& orbit) : orbit_(orbit) {}
    const Rational& at(long n, long s) const;

private:
    const ThetaOrbit& orbit_;
    mutable std::map<std::pair<long, long>, Rational> memo_;
};

/// Complete solution data: orbit plus the bilinear constants and the
/// quasi-periodicity data N L = l B, a = -l L^T, b = l lambda^T and the
/// per-slot offset c.
struct SolutionParams {
    ThetaOrbit orbit;
    RatVec theta_slot;  // theta^{[k/M]}
    RatVec delta_slot;  // delta^{[k/M]}
    LatticeVec l;
    Rational a, b;
    RatVec c_slot;

    /// Validates lambda = sum of parts, integrality of l, constancy of
    /// delta + theta, and 2b - a < N theta^{[t]}.
    static SolutionParams make(ThetaOrbit orbit, RatVec theta_slot, RatVec delta_slot);
};

/// Solves N L = l B for an integer row vector l; nullopt when the solution
/// is not integral.
std::optional<LatticeVec> solve_lattice_multiplier(const ThetaContext& ctx, long N,
                                                   const RatVec& L);

Rational tau(const SolutionParams& p, long n, long t, long k);

struct CheckVerdict {
    bool ok = true;
    long checked = 0;
    std::string witness;
};

/// Exact check of the bilinear relation
///   T_n^t + T_n^{t+1+1/M} = min[T_n^{t+1} + T_n^{t+1/M},
///                               T_{n-1}^{t+1+1/M} + T_{n+1}^t + theta^{[t]}]
/// at every site n in 0..N-1 and every time index s in [s0, s1].
CheckVerdict verify_bilinear(const SolutionParams& p, long s0, long s1);

/// Largest consistent bilinear constants on a window, one per slot.
RatVec infer_theta(const ThetaOrbit& orbit, long s0, long s1);

/// Lattice trajectory through the tau transform; states at time indices
/// s = s0 .. s1. Each state is validated against the phase space.
std::vector<TodaStateU> qw_from_tau(const SolutionParams& p, long s0, long s1);

struct SolutionVerification {
    CheckVerdict bilinear;
    CheckVerdict evolution;     // trajectory matches the piecewise-linear flow
    CheckVerdict conservation;  // spectral shape and sums constant in time
    bool ok() const { return bilinear.ok && evolution.ok && conservation.ok; }
};

/// Runs the full pipeline: bilinear window check, trajectory extraction,
/// step-by-step comparison with the lattice evolution, conservation of the
/// spectral shape (optionally against an expected one).
SolutionVerification verify_solution(const SolutionParams& p, long steps, Rng& rng,
                                     const SpectralShape* expect_shape = nullptr);

// --- reference genus-2 construction -----------------------------------------

/// Everything derived from the genus-2 spectral polynomial
///   min[4Y, 3Y+F30, 2Y+min(X+F21, F20), Y+min(2X, X+F11, F10), F0].
/// Marked points and paths follow the reference figure; construction fails
/// with NotSmooth unless the curve is smooth of the reference combinatorial
/// type.
struct T32Fixture {
    Rational F0, F30, F21, F20, F11, F10;
    SpectralShape shape;
    TropicalCurve curve;
    PeriodData period;  // gamma_1 (upper), gamma_2 (lower); marked P,Q,R,A1..A3
    RatVec L, lambda;
    std::array<RatVec, 3> lambda_parts;
    std::array<Rational, 3> theta_consts;
    Rational delta_base;  // delta^{[k]} = delta_base - theta^{[k]}
};

T32Fixture t32_fixture(const Rational& F0, const Rational& F30, const Rational& F21,
                       const Rational& F20, const Rational& F11, const Rational& F10);

/// Solution data on the fixture for a permutation sigma of {1,2,3}.
SolutionParams t32_solution(const T32Fixture& fx, RatVec Z0, std::vector<long> sigma);

/// Four-point configuration (R, Q, P, A_{4-i}) with the hyperelliptic odd
/// characteristic beta = (1/2, 1/2).
FayConfiguration t32_fay_configuration(const T32Fixture& fx, int i);

/// Random parameters in the open region where the fixture is smooth of the
/// reference type with F21 = 0 (and the bilinear slope condition holds).
std::array<Rational, 6> sample_t32_params(Rng& rng);

// --- marked points and scans -------------------------------------------------

struct MarkedPoints {
    int P = -1, Q = -1, R = -1;
    std::vector<int> A;  // A[i-1] = A_i
};

/// Labels the boundary rays of a smooth spectral curve: A_i against the
/// left Newton-polygon column, R at its top segment, Q against the right
/// side, P against the bottom.
MarkedPoints label_marked_points(const TropicalCurve& c, long M, long N);

/// Random spectral shape whose curve is smooth: strictly convex heights
/// plus a small jitter, affinely normalized.
SpectralShape sample_smooth_shape(long M, long N, Rng& rng, int max_tries = 64);

struct ScanOptions {
    long M = 3, N = 2;
    long trials = 10;
    unsigned long seed = 1;
    long steps = 12;           // evolution window per trial
    long z_denominator = 16;   // Z0 grid density in the fundamental domain
};

struct TrialRecord {
    long trial = 0;
    unsigned long seed = 0;
    std::string status;  // "pass", "fail" or "skip"
    std::string reason;
    long solution_types = 0;  // distinct trajectories over all permutations
    std::string shape;        // pretty-printed sample for replay
};

struct ScanReport {
    ScanOptions opts;
    std::vector<TrialRecord> trials;
    long pass = 0, fail = 0, skip = 0;
};

/// Conjecture scan: random smooth spectral shapes, marked-point heuristic,
/// all M! permutations, bilinear + evolution + conservation verification.
/// Failures are recorded, never asserted.
ScanReport conjecture_scan(const ScanOptions& opts);

/// Z0 = x B with x uniform on the grid (1/denominator) Z^g in [0,1)^g.
RatVec sample_fundamental_domain(const ThetaContext& ctx, long denominator, Rng& rng);

}  // namespace troptoda
