#include "troptoda/toda.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace troptoda {

namespace {

void check_dims_u(const TodaStateU& s) {
    if (s.M < 1 || s.N < 1) throw UsageError("state needs positive M, N");
    if ((long)s.Q.size() != s.N || (long)s.W.size() != s.N)
        throw UsageError("state arrays must have N rows");
    for (const auto& row : s.Q)
        if ((long)row.size() != s.M) throw UsageError("state Q rows must have M slices");
}

void check_dims_p(const TodaStateP& s) {
    if (s.M < 1 || s.N < 1) throw UsageError("state needs positive M, N");
    if ((long)s.I.size() != s.N || (long)s.V.size() != s.N)
        throw UsageError("state arrays must have N rows");
    for (const auto& row : s.I)
        if ((long)row.size() != s.M) throw UsageError("state I rows must have M slices");
}

}  // namespace

RatVec TodaStateU::slice_sums() const {
    RatVec sums(M, 0);
    for (long k = 0; k < M; ++k)
        for (long n = 0; n < N; ++n) sums[k] += Q[n][k];
    return sums;
}

Rational TodaStateU::w_sum() const {
    Rational s = 0;
    for (const auto& w : W) s += w;
    return s;
}

void validate_state(const TodaStateU& s) {
    check_dims_u(s);
    const RatVec sums = s.slice_sums();
    const Rational ws = s.w_sum();
    for (long k = 0; k < s.M; ++k)
        if (!(sums[k] < ws))
            throw PhaseSpaceViolation("slice sum " + rat_str(sums[k]) + " (k=" +
                                      std::to_string(k) + ") is not below the W sum " +
                                      rat_str(ws));
    for (long k = 0; k < s.M; ++k)
        for (long j = k + 1; j < s.M; ++j)
            if (sums[k] == sums[j])
                throw PhaseSpaceViolation("slice sums for k=" + std::to_string(k) + " and k=" +
                                          std::to_string(j) + " coincide at " +
                                          rat_str(sums[k]));
}

TodaStateU step_ud(const TodaStateU& s) {
    validate_state(s);
    const long N = s.N, M = s.M;
    auto mod = [N](long n) { return ((n % N) + N) % N; };
    RatVec q(N), x(N);
    for (long n = 0; n < N; ++n) q[n] = s.Q[n][0];
    for (long n = 0; n < N; ++n) {
        Rational best = 0;  // k = 0 empty sum
        Rational acc = 0;
        for (long k = 1; k < N; ++k) {
            acc += s.W[mod(n - k)] - q[mod(n - k)];
            if (acc < best) best = acc;
        }
        x[n] = best;
    }
    TodaStateU out;
    out.M = M;
    out.N = N;
    out.t = s.t + Rational(1, M);
    out.Q.assign(N, RatVec(M, 0));
    out.W.assign(N, 0);
    for (long n = 0; n < N; ++n) {
        Rational qn = std::min(s.W[n], q[n] - x[n]);
        for (long k = 0; k + 1 < M; ++k) out.Q[n][k] = s.Q[n][k + 1];
        out.Q[n][M - 1] = qn;
        out.W[n] = q[mod(n + 1)] + s.W[n] - qn;
    }
    return out;
}

TodaStateU TodaStateP::val_image() const {
    check_dims_p(*this);
    TodaStateU u;
    u.M = M;
    u.N = N;
    u.t = t;
    u.Q.assign(N, RatVec(M, 0));
    u.W.assign(N, 0);
    for (long n = 0; n < N; ++n) {
        for (long k = 0; k < M; ++k) {
            auto v = jet_val(I[n][k]);
            if (!v) throw PhaseSpaceViolation("I entry is the zero jet");
            u.Q[n][k] = *v;
        }
        auto v = jet_val(V[n]);
        if (!v) throw PhaseSpaceViolation("V entry is the zero jet");
        u.W[n] = *v;
    }
    return u;
}

void validate_state(const TodaStateP& s) {
    validate_state(s.val_image());
}

TodaStateP step_p(const TodaStateP& s) {
    validate_state(s);
    const long N = s.N, M = s.M;
    auto mod = [N](long n) { return ((n % N) + N) % N; };

    std::vector<PuiseuxJet> r(N);
    for (long n = 0; n < N; ++n) r[n] = jet_div(s.V[n], s.I[n][0]);

    // Periodic resolvent x_n = sum_{k=0..N-1} prod_{j=1..k} r_{n-j}.
    std::vector<PuiseuxJet> x(N);
    for (long n = 0; n < N; ++n) {
        PuiseuxJet acc = PuiseuxJet::constant(1);
        PuiseuxJet sum = acc;
        for (long k = 1; k < N; ++k) {
            acc = jet_mul(acc, r[mod(n - k)]);
            sum = jet_add(sum, acc);
        }
        x[n] = sum;
    }

    TodaStateP out;
    out.M = M;
    out.N = N;
    out.t = s.t + Rational(1, M);
    out.I.assign(N, std::vector<PuiseuxJet>(M));
    out.V.assign(N, PuiseuxJet::zero());
    std::vector<PuiseuxJet> newI(N), newV(N);
    for (long n = 0; n < N; ++n)
        newI[n] = jet_div(jet_mul(s.I[n][0], x[mod(n + 1)]), x[n]);
    for (long n = 0; n < N; ++n)
        newV[n] = jet_div(jet_mul(s.I[mod(n + 1)][0], s.V[n]), newI[n]);

    // Substitution check of the defining difference equations.
    for (long n = 0; n < N; ++n) {
        PuiseuxJet lhs1 = jet_add(newI[n], newV[mod(n - 1)]);
        PuiseuxJet rhs1 = jet_add(s.I[n][0], s.V[n]);
        if (!jet_agree(lhs1, rhs1))
            throw Error("additive lattice relation fails at n=" + std::to_string(n));
        PuiseuxJet lhs2 = jet_mul(newV[n], newI[n]);
        PuiseuxJet rhs2 = jet_mul(s.I[mod(n + 1)][0], s.V[n]);
        if (!jet_agree(lhs2, rhs2))
            throw Error("multiplicative lattice relation fails at n=" + std::to_string(n));
    }

    for (long n = 0; n < N; ++n) {
        for (long k = 0; k + 1 < M; ++k) out.I[n][k] = s.I[n][k + 1];
        out.I[n][M - 1] = newI[n];
        out.V[n] = newV[n];
    }
    return out;
}

TodaStateP lift_state(const TodaStateU& s, Rng& rng) {
    check_dims_u(s);
    std::uniform_int_distribution<long> coeff(1, 1000000);
    TodaStateP p;
    p.M = s.M;
    p.N = s.N;
    p.t = s.t;
    p.I.assign(s.N, std::vector<PuiseuxJet>(s.M));
    p.V.assign(s.N, PuiseuxJet::zero());
    for (long n = 0; n < s.N; ++n) {
        for (long k = 0; k < s.M; ++k)
            p.I[n][k] = PuiseuxJet::monomial(s.Q[n][k], Rational(coeff(rng)));
        p.V[n] = PuiseuxJet::monomial(s.W[n], Rational(coeff(rng)));
    }
    return p;
}

namespace {

using PMat = std::vector<std::vector<PuiseuxPolynomial2>>;

PMat pm_mul(const PMat& a, const PMat& b) {
    const size_t n = a.size();
    PMat out(n, std::vector<PuiseuxPolynomial2>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            PuiseuxPolynomial2 acc;
            for (size_t k = 0; k < n; ++k)
                if (!a[i][k].terms.empty() && !b[k][j].terms.empty())
                    acc = ppoly_add(acc, ppoly_mul(a[i][k], b[k][j]));
            out[i][j] = std::move(acc);
        }
    return out;
}

int perm_sign(const std::vector<int>& p) {
    int sign = 1;
    std::vector<char> seen(p.size(), 0);
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        size_t len = 0, j = i;
        while (!seen[j]) {
            seen[j] = 1;
            j = p[j];
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

PuiseuxPolynomial2 pm_det(const PMat& m) {
    const size_t n = m.size();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    PuiseuxPolynomial2 det;
    std::vector<int> idx(perm);
    std::sort(idx.begin(), idx.end());
    do {
        PuiseuxPolynomial2 prod = ppoly_monomial({0, 0}, PuiseuxJet::constant(1));
        bool zero = false;
        for (size_t i = 0; i < n && !zero; ++i) {
            if (m[i][idx[i]].terms.empty()) zero = true;
            else prod = ppoly_mul(prod, m[i][idx[i]]);
        }
        if (!zero) {
            if (perm_sign(idx) < 0) prod = ppoly_neg(prod);
            det = ppoly_add(det, prod);
        }
    } while (std::next_permutation(idx.begin(), idx.end()));
    return det;
}

}  // namespace

LaxFamily lax(const TodaStateP& s) {
    check_dims_p(s);
    const long N = s.N, M = s.M;
    auto jet_entry = [](const PuiseuxJet& j) { return ppoly_monomial({0, 0}, j); };
    const PuiseuxPolynomial2 one = ppoly_monomial({0, 0}, PuiseuxJet::constant(1));
    const PuiseuxPolynomial2 y = ppoly_monomial({0, 1}, PuiseuxJet::constant(1));

    LaxFamily fam;
    for (long k = 0; k < M; ++k) {
        PMat R(N, std::vector<PuiseuxPolynomial2>(N));
        for (long i = 0; i < N; ++i) {
            R[i][i] = jet_entry(s.I[(i + 1) % N][k]);
            if (i + 1 < N) R[i][i + 1] = one;
        }
        if (N > 1) R[N - 1][0] = y;
        else R[0][0] = ppoly_add(R[0][0], y);  // N = 1: y and I share the single slot
        fam.R.push_back(std::move(R));
    }
    PMat Mm(N, std::vector<PuiseuxPolynomial2>(N));
    for (long i = 0; i < N; ++i) Mm[i][i] = one;
    for (long i = 1; i < N; ++i) Mm[i][i - 1] = jet_entry(s.V[i]);
    if (N > 1)
        Mm[0][N - 1] = ppoly_monomial({0, -1}, s.V[0]);
    else
        Mm[0][0] = ppoly_add(Mm[0][0], ppoly_monomial({0, -1}, s.V[0]));
    fam.Mm.push_back(Mm);

    PMat L = Mm;
    for (long k = M - 1; k >= 0; --k) L = pm_mul(L, fam.R[k]);
    fam.L.push_back(std::move(L));
    return fam;
}

PuiseuxPolynomial2 spectral_poly(const TodaStateP& s) {
    if (std::gcd(s.M, s.N) != 1) throw UsageError("spectral data needs gcd(M,N) = 1");
    LaxFamily fam = lax(s);
    PMat D = fam.L.front();
    const PuiseuxPolynomial2 x = ppoly_monomial({1, 0}, PuiseuxJet::constant(1));
    for (long i = 0; i < s.N; ++i) D[i][i] = ppoly_add(D[i][i], ppoly_neg(x));
    PuiseuxPolynomial2 det = pm_det(D);
    PuiseuxPolynomial2 out;
    const bool flip = (s.N % 2 == 0);  // (-1)^{N+1}
    for (const auto& [w, jet] : det.terms) {
        PuiseuxJet c = flip ? jet_neg(jet) : jet;
        out.add_term({w.first, w.second + 1}, c);  // times y
    }
    return out;
}

SpectralShape spectral_map_ud(const TodaStateU& s, Rng& rng, int max_retries) {
    validate_state(s);
    if (std::gcd(s.M, s.N) != 1) throw UsageError("spectral map needs gcd(M,N) = 1");
    std::string last;
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        TodaStateP lifted = lift_state(s, rng);
        try {
            return shape_from_tropical(tropicalize(spectral_poly(lifted)), s.M, s.N);
        } catch (const UsageError& e) {
            last = e.what();  // degenerate lift; re-draw coefficients
        } catch (const PrecisionExhausted& e) {
            last = e.what();
        }
    }
    throw GenericityFailure("no generic lift after " + std::to_string(max_retries) +
                            " draws: " + last);
}

// --- min-plus determinant with sign-aware tie detection ---------------------

namespace {

struct SignedTerm {
    Rational v;
    int sign = 1;
    bool ambiguous = false;
};

using SignedPoly = std::map<Exponent2, SignedTerm>;

SignedTerm merge_terms(const SignedTerm& a, const SignedTerm& b) {
    if (a.v < b.v) return a;
    if (b.v < a.v) return b;
    SignedTerm t;
    t.v = a.v;
    if (a.ambiguous || b.ambiguous || a.sign != b.sign) {
        t.ambiguous = true;
    } else {
        t.sign = a.sign;  // same-sign collision: magnitudes add, val survives
    }
    return t;
}

SignedPoly sp_add(const SignedPoly& a, const SignedPoly& b) {
    SignedPoly out = a;
    for (const auto& [w, t] : b) {
        auto it = out.find(w);
        if (it == out.end())
            out.emplace(w, t);
        else
            it->second = merge_terms(it->second, t);
    }
    return out;
}

SignedPoly sp_mul(const SignedPoly& a, const SignedPoly& b) {
    SignedPoly out;
    for (const auto& [wa, ta] : a)
        for (const auto& [wb, tb] : b) {
            SignedTerm t;
            t.v = ta.v + tb.v;
            t.sign = ta.sign * tb.sign;
            t.ambiguous = ta.ambiguous || tb.ambiguous;
            Exponent2 w{wa.first + wb.first, wa.second + wb.second};
            auto it = out.find(w);
            if (it == out.end())
                out.emplace(w, t);
            else
                it->second = merge_terms(it->second, t);
        }
    return out;
}

}  // namespace

std::optional<SpectralShape> spectral_shape_minplus(const TodaStateU& s) {
    validate_state(s);
    if (std::gcd(s.M, s.N) != 1) return std::nullopt;
    const long N = s.N, M = s.M;
    using SMat = std::vector<std::vector<SignedPoly>>;
    auto entry = [](const Rational& v, Exponent2 w) {
        SignedPoly p;
        p[w] = SignedTerm{v, 1, false};
        return p;
    };
    std::vector<SMat> Rs;
    for (long k = 0; k < M; ++k) {
        SMat R(N, std::vector<SignedPoly>(N));
        for (long i = 0; i < N; ++i) {
            R[i][i] = entry(s.Q[(i + 1) % N][k], {0, 0});
            if (i + 1 < N) R[i][i + 1] = entry(0, {0, 0});
        }
        if (N > 1) R[N - 1][0] = entry(0, {0, 1});
        else R[0][0] = sp_add(R[0][0], entry(0, {0, 1}));
        Rs.push_back(std::move(R));
    }
    SMat Mm(N, std::vector<SignedPoly>(N));
    for (long i = 0; i < N; ++i) Mm[i][i] = entry(0, {0, 0});
    for (long i = 1; i < N; ++i) Mm[i][i - 1] = entry(s.W[i], {0, 0});
    if (N > 1)
        Mm[0][N - 1] = entry(s.W[0], {0, -1});
    else
        Mm[0][0] = sp_add(Mm[0][0], entry(s.W[0], {0, -1}));

    auto sm_mul = [&](const SMat& a, const SMat& b) {
        SMat out(N, std::vector<SignedPoly>(N));
        for (long i = 0; i < N; ++i)
            for (long j = 0; j < N; ++j)
                for (long k = 0; k < N; ++k)
                    if (!a[i][k].empty() && !b[k][j].empty())
                        out[i][j] = sp_add(out[i][j], sp_mul(a[i][k], b[k][j]));
        return out;
    };
    SMat L = Mm;
    for (long k = M - 1; k >= 0; --k) L = sm_mul(L, Rs[k]);
    for (long i = 0; i < N; ++i) {
        SignedPoly neg_x;
        neg_x[{1, 0}] = SignedTerm{Rational(0), -1, false};
        L[i][i] = sp_add(L[i][i], neg_x);
    }
    std::vector<int> idx(N);
    std::iota(idx.begin(), idx.end(), 0);
    SignedPoly det;
    do {
        SignedPoly prod;
        prod[{0, 0}] = SignedTerm{Rational(0), perm_sign(idx), false};
        bool zero = false;
        for (long i = 0; i < N && !zero; ++i) {
            if (L[i][idx[i]].empty()) zero = true;
            else prod = sp_mul(prod, L[i][idx[i]]);
        }
        if (!zero) det = sp_add(det, prod);
    } while (std::next_permutation(idx.begin(), idx.end()));

    std::map<Exponent2, Rational> terms;
    const int flip = (N % 2 == 0) ? -1 : 1;
    for (const auto& [w, t] : det) {
        if (t.ambiguous) return std::nullopt;
        (void)flip;
        terms[{w.first, w.second + 1}] = t.v;
    }
    try {
        return shape_from_tropical(TropicalPolynomial2(std::move(terms)), M, N);
    } catch (const UsageError&) {
        return std::nullopt;
    }
}

bool jacobian_test(const TodaStateP& s) {
    check_dims_p(s);
    const long N = s.N, M = s.M;
    std::vector<PuiseuxJet> slice_prod(M, PuiseuxJet::constant(1));
    PuiseuxJet v_prod = PuiseuxJet::constant(1);
    for (long n = 0; n < N; ++n) {
        for (long k = 0; k < M; ++k) slice_prod[k] = jet_mul(slice_prod[k], s.I[n][k]);
        v_prod = jet_mul(v_prod, s.V[n]);
    }
    PuiseuxJet product = PuiseuxJet::constant(1);
    for (long k = 0; k < M; ++k) {
        PuiseuxJet d = jet_sub(slice_prod[k], v_prod);
        if (d.is_zero()) return false;
        product = jet_mul(product, d);
    }
    for (long k = 0; k < M; ++k)
        for (long j = k + 1; j < M; ++j) {
            PuiseuxJet d = jet_sub(slice_prod[k], slice_prod[j]);
            if (d.is_zero()) return false;
            product = jet_mul(product, d);
        }
    return !product.is_zero();
}

TodaStateU sample_state_u(long M, long N, Rng& rng, long denominator_bound) {
    std::uniform_int_distribution<long> num(0, 6);
    std::uniform_int_distribution<long> wnum(7, 14);
    std::uniform_int_distribution<long> den(1, std::max(1L, denominator_bound));
    for (int attempt = 0; attempt < 256; ++attempt) {
        TodaStateU s;
        s.M = M;
        s.N = N;
        s.t = 0;
        s.Q.assign(N, RatVec(M, 0));
        s.W.assign(N, 0);
        for (long n = 0; n < N; ++n) {
            for (long k = 0; k < M; ++k) s.Q[n][k] = Rational(num(rng), den(rng));
            s.W[n] = Rational(wnum(rng), den(rng));
        }
        try {
            validate_state(s);
            return s;
        } catch (const PhaseSpaceViolation&) {
            continue;
        }
    }
    throw GenericityFailure("could not sample a phase-space point");
}

}  // namespace troptoda
