#include "troptoda/theta.hpp"

#include <algorithm>

namespace troptoda {

ThetaContext::ThetaContext(RatMat B) : g_((long)B.size()), B_(std::move(B)) {
    if (g_ == 0) throw UsageError("theta: empty period matrix");
    for (const auto& row : B_)
        if ((long)row.size() != g_) throw UsageError("theta: B is not square");
    for (long i = 0; i < g_; ++i)
        for (long j = i + 1; j < g_; ++j)
            if (B_[i][j] != B_[j][i])
                throw UsageError("theta: B is not symmetric at (" + std::to_string(i) + "," +
                                 std::to_string(j) + ")");
    ldl_ = ldlt_factor(B_);
    if (ldl_.singular || !ldl_.positive_definite)
        throw UsageError("theta: B is not positive definite (LDL^T pivot <= 0)");
}

RatVec ThetaContext::row_times_B(const RatVec& l) const {
    RatVec out(g_, 0);
    for (long j = 0; j < g_; ++j)
        for (long i = 0; i < g_; ++i) out[j] += l[i] * B_[i][j];
    return out;
}

Rational q_form(const ThetaContext& ctx, const RatVec& beta, const LatticeVec& m,
                const RatVec& Z) {
    const long g = ctx.genus();
    if ((long)m.size() != g || (long)Z.size() != g || (long)beta.size() != g)
        throw UsageError("q_form: dimension mismatch");
    RatVec mr(g);
    for (long i = 0; i < g; ++i) mr[i] = Rational(m[i]);
    RatVec Bm = mat_vec(ctx.B(), mr);
    Rational quad = dot(mr, Bm) / 2;
    RatVec c = Z;
    RatVec betaB = ctx.row_times_B(beta);
    for (long i = 0; i < g; ++i) c[i] += betaB[i];
    return quad + dot(mr, c);
}

namespace {

// Largest integer k >= start satisfying pred, assuming pred(start) holds and
// pred is monotone false beyond some point. Exponential then binary search.
template <typename Pred>
long search_up(long start, Pred pred) {
    long lo = start, step = 1;
    while (pred(lo + step)) {
        lo += step;
        step *= 2;
    }
    long hi = lo + step;  // pred(hi) false
    while (hi - lo > 1) {
        long mid = lo + (hi - lo) / 2;
        if (pred(mid))
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

template <typename Pred>
long search_down(long start, Pred pred) {
    long hi = start, step = 1;
    while (pred(hi - step)) {
        hi -= step;
        step *= 2;
    }
    long lo = hi - step;
    while (hi - lo > 1) {
        long mid = lo + (hi - lo) / 2;
        if (pred(mid))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

struct Enumerator {
    const ThetaContext& ctx;
    RatVec center_star;  // real minimizer m*
    Rational best_cost;  // smallest 1/2 (m - m*)^T B (m - m*) seen
    std::vector<LatticeVec> argmins;
    LatticeVec current;

    explicit Enumerator(const ThetaContext& c) : ctx(c), current(c.genus(), 0) {}

    // Chooses coordinates from the last down to the first, Fincke-Pohst
    // style, pruning with the exact pivot bound.
    void descend(long level, const Rational& spent) {
        const Ldlt& f = ctx.ldl();
        if (level < 0) {
            if (spent < best_cost) {
                best_cost = spent;
                argmins.clear();
            }
            if (spent == best_cost) argmins.push_back(current);
            return;
        }
        // w_level = (m_level - m*_level) + sum_{j>level} L[j][level] (m_j - m*_j)
        Rational offset = 0;
        for (long j = level + 1; j < ctx.genus(); ++j)
            offset += f.lower[j][level] * (Rational(current[j]) - center_star[j]);
        const Rational center = center_star[level] - offset;
        const Rational budget2 = (best_cost - spent) * 2;  // d (k-center)^2 <= budget2
        const Rational& d = f.d[level];
        auto pred = [&](long k) {
            Rational t = Rational(k) - center;
            return d * t * t <= budget2;
        };
        long seed = (long)rat_round(center).get_si();
        long anchor;
        if (pred(seed))
            anchor = seed;
        else if (pred(seed + 1))
            anchor = seed + 1;
        else if (pred(seed - 1))
            anchor = seed - 1;
        else
            return;  // slab is empty
        const long kmax = search_up(anchor, pred);
        const long kmin = search_down(anchor, pred);
        for (long k = kmin; k <= kmax; ++k) {
            Rational t = Rational(k) - center;
            Rational cost = d * t * t / 2;
            if (spent + cost > best_cost) continue;
            current[level] = k;
            descend(level - 1, spent + cost);
        }
        current[level] = 0;
    }
};

}  // namespace

LatticeMin lattice_minimize(const ThetaContext& ctx, const RatVec& beta, const RatVec& Z) {
    const long g = ctx.genus();
    if ((long)Z.size() != g || (long)beta.size() != g)
        throw UsageError("lattice_minimize: dimension mismatch");
    RatVec c = Z;
    RatVec betaB = ctx.row_times_B(beta);
    for (long i = 0; i < g; ++i) c[i] += betaB[i];

    // Real minimizer of 1/2 m^T B m + m^T c, then its rounding as the seed.
    RatVec neg_c(g);
    for (long i = 0; i < g; ++i) neg_c[i] = -c[i];
    RatVec m_star = ldlt_solve(ctx.ldl(), neg_c);

    Enumerator en(ctx);
    en.center_star = m_star;
    RatVec diff(g);
    LatticeVec seed(g);
    for (long i = 0; i < g; ++i) {
        seed[i] = (long)rat_round(m_star[i]).get_si();
        diff[i] = Rational(seed[i]) - m_star[i];
    }
    en.best_cost = dot(diff, mat_vec(ctx.B(), diff)) / 2;
    en.descend(g - 1, 0);

    std::sort(en.argmins.begin(), en.argmins.end());
    en.argmins.erase(std::unique(en.argmins.begin(), en.argmins.end()), en.argmins.end());

    // q(m) = q(m*) + cost(m); q(m*) = 1/2 m*^T B m* + m*^T c.
    Rational q_star = dot(m_star, mat_vec(ctx.B(), m_star)) / 2 + dot(m_star, c);
    LatticeMin out;
    out.value = q_star + en.best_cost;
    out.argmins = std::move(en.argmins);
    return out;
}

Rational theta(const ThetaContext& ctx, const RatVec& Z) {
    RatVec beta(ctx.genus(), 0);
    return lattice_minimize(ctx, beta, Z).value;
}

Rational theta_char(const ThetaContext& ctx, const RatVec& beta, const RatVec& Z) {
    RatVec betaB = ctx.row_times_B(beta);
    Rational head = dot(beta, betaB) / 2 + dot(beta, Z);
    return head + lattice_minimize(ctx, beta, Z).value;
}

LatticeVec theta_argmin(const ThetaContext& ctx, const RatVec& beta, const RatVec& Z) {
    return lattice_minimize(ctx, beta, Z).argmin();
}

}  // namespace troptoda
