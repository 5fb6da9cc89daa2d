#include "troptoda/fay.hpp"

#include <sstream>

namespace troptoda {

void validate_characteristic(const ThetaCharacteristic& chr, long g) {
    if ((long)chr.alpha.size() != g || (long)chr.beta.size() != g)
        throw UsageError("characteristic has wrong dimension");
    for (const auto* v : {&chr.alpha, &chr.beta})
        for (const auto& e : *v)
            if (!rat_is_integer(e * 2))
                throw UsageError("characteristic entry " + rat_str(e) +
                                 " is not a half-integer");
}

ThetaCharacteristic odd_characteristic(long g, const RatVec& beta) {
    if ((long)beta.size() != g) throw UsageError("beta has wrong dimension");
    long first = -1;
    for (long j = 0; j < g; ++j) {
        if (!rat_is_integer(beta[j] * 2))
            throw UsageError("beta entry " + rat_str(beta[j]) + " is not a half-integer");
        if (first < 0 && !rat_is_integer(beta[j])) first = j;
    }
    if (first < 0) throw InvalidBeta("beta is integral: no odd characteristic");
    ThetaCharacteristic chr;
    chr.beta = beta;
    chr.alpha.assign(g, 0);
    chr.alpha[first] = Rational(1, 2);
    if (first > 0) chr.alpha[first - 1] = Rational(-1, 2);
    return chr;
}

FayConfiguration::FayConfiguration(ThetaContext c, ThetaCharacteristic ch,
                                   std::array<RatVec, 4> pts)
    : ctx(std::move(c)), chr(std::move(ch)), points(std::move(pts)) {
    validate_characteristic(chr, ctx.genus());
    for (const auto& p : points)
        if ((long)p.size() != ctx.genus())
            throw UsageError("marked point vector has wrong dimension");
}

RatVec FayConfiguration::integral(int a, int b) const {
    RatVec out(ctx.genus());
    for (long i = 0; i < ctx.genus(); ++i) out[i] = points[b - 1][i] - points[a - 1][i];
    return out;
}

int FaySigns::distinguished() const {
    if (s[0] == s[1] && s[1] == s[2]) return 0;
    for (int i = 0; i < 3; ++i)
        if (s[i] != s[(i + 1) % 3] && s[i] != s[(i + 2) % 3]) return i + 1;
    return 0;
}

FaySigns fay_signs(const FayConfiguration& cfg) {
    // Argument list: the six pairwise integrals entering k_1, k_2, k_3.
    const std::array<std::pair<int, int>, 6> args = {{
        {3, 2}, {1, 4},  // k_1
        {3, 1}, {4, 2},  // k_2
        {3, 4}, {1, 2},  // k_3
    }};
    FaySigns out;
    for (int i = 0; i < 6; ++i) {
        RatVec z = cfg.integral(args[i].first, args[i].second);
        LatticeMin m = lattice_minimize(cfg.ctx, cfg.chr.beta, z);
        if (!m.unique()) {
            std::ostringstream os;
            os << "tied argmin at integral P" << args[i].first << "->P" << args[i].second
               << " = " << vec_str(z) << " (" << m.argmins.size() << " minimizers)";
            throw AmbiguousArgmin(os.str());
        }
        out.argmins[i] = m.argmin();
    }
    RatVec two_alpha(cfg.ctx.genus());
    for (long i = 0; i < cfg.ctx.genus(); ++i) two_alpha[i] = cfg.chr.alpha[i] * 2;
    for (int i = 0; i < 3; ++i) {
        Rational acc = (i == 2) ? 1 : 0;
        for (long j = 0; j < cfg.ctx.genus(); ++j)
            acc += two_alpha[j] * Rational(out.argmins[2 * i][j] + out.argmins[2 * i + 1][j]);
        if (!rat_is_integer(acc)) throw Error("sign exponent is not an integer");
        out.k[i] = (long)acc.get_num().get_si();
        out.s[i] = (out.k[i] % 2 == 0) ? 1 : -1;
    }
    return out;
}

FayChecker::FayChecker(const FayConfiguration& cfg) : cfg_(cfg) {
    signs_ = fay_signs(cfg);
    index_ = signs_.distinguished();
    if (index_ == 0)
        throw SignPatternInvalid("all three signs equal (" + std::to_string(signs_.s[0]) +
                                 "); no distinguished index");
    auto th = [&](int a, int b) { return theta_char(cfg_.ctx, cfg_.chr.beta, cfg_.integral(a, b)); };
    blocks_[0] = th(3, 2) + th(1, 4);
    blocks_[1] = th(3, 1) + th(4, 2);
    blocks_[2] = th(4, 3) + th(1, 2);
    shifts_[0] = cfg_.integral(1, 3);  // F_1 first theta shift
    shifts_[1] = cfg_.integral(2, 4);  // F_1 second
    shifts_[2] = cfg_.integral(2, 3);  // F_2 first
    shifts_[3] = cfg_.integral(1, 4);  // F_2 second
    shifts_[4] = cfg_.integral(1, 3);  // F_3 combined shift, completed below
    for (long i = 0; i < cfg_.ctx.genus(); ++i) shifts_[4][i] += shifts_[1][i];
}

std::array<Rational, 3> FayChecker::evaluate(const RatVec& Z) const {
    auto shifted = [&](const RatVec& v) {
        RatVec z = Z;
        for (size_t i = 0; i < z.size(); ++i) z[i] += v[i];
        return theta(cfg_.ctx, z);
    };
    std::array<Rational, 3> F;
    F[0] = shifted(shifts_[0]) + shifted(shifts_[1]) + blocks_[0];
    F[1] = shifted(shifts_[2]) + shifted(shifts_[3]) + blocks_[1];
    F[2] = shifted(shifts_[4]) + theta(cfg_.ctx, Z) + blocks_[2];
    return F;
}

FayVerdict FayChecker::check(const RatVec& Z) const {
    FayVerdict v;
    v.signs = signs_;
    v.index = index_;
    v.F = evaluate(Z);
    const int i = index_ - 1;
    const Rational rhs = std::min(v.F[(i + 1) % 3], v.F[(i + 2) % 3]);
    v.holds = (v.F[i] == rhs);
    if (!v.holds) {
        std::ostringstream os;
        os << "identity fails at Z = " << vec_str(Z) << ": F" << index_ << " = "
           << rat_str(v.F[i]) << ", min(F" << ((i + 1) % 3) + 1 << ", F" << ((i + 2) % 3) + 1
           << ") = " << rat_str(rhs) << " [F1 = " << rat_str(v.F[0])
           << ", F2 = " << rat_str(v.F[1]) << ", F3 = " << rat_str(v.F[2]) << "]";
        v.witness = os.str();
    }
    return v;
}

FayVerdict fay_check(const FayConfiguration& cfg, const RatVec& Z) {
    return FayChecker(cfg).check(Z);
}

}  // namespace troptoda
