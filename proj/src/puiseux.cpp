#include "troptoda/puiseux.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace troptoda {

Rational rat_parse(const std::string& text) {
    if (text.empty()) throw UsageError("empty rational literal");
    std::string t = text;
    try {
        Rational r(t);
        r.canonicalize();
        if (r.get_den() == 0) throw UsageError("zero denominator in '" + text + "'");
        return r;
    } catch (const std::invalid_argument&) {
        throw UsageError("bad rational literal '" + text + "'");
    }
}

std::string rat_str(const Rational& value) {
    return value.get_str();
}

std::string vec_str(const RatVec& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << rat_str(v[i]);
    }
    os << ")";
    return os.str();
}

Ldlt ldlt_factor(const RatMat& a) {
    const size_t n = a.size();
    Ldlt f;
    f.lower.assign(n, RatVec(n, 0));
    f.d.assign(n, 0);
    f.positive_definite = true;
    for (size_t i = 0; i < n; ++i) f.lower[i][i] = 1;
    for (size_t j = 0; j < n; ++j) {
        Rational dj = a[j][j];
        for (size_t k = 0; k < j; ++k) dj -= f.lower[j][k] * f.lower[j][k] * f.d[k];
        f.d[j] = dj;
        if (dj == 0) {
            f.singular = true;
            f.positive_definite = false;
            return f;
        }
        if (dj < 0) f.positive_definite = false;
        for (size_t i = j + 1; i < n; ++i) {
            Rational v = a[i][j];
            for (size_t k = 0; k < j; ++k) v -= f.lower[i][k] * f.lower[j][k] * f.d[k];
            f.lower[i][j] = v / dj;
        }
    }
    return f;
}

RatVec ldlt_solve(const Ldlt& f, const RatVec& b) {
    const size_t n = b.size();
    RatVec y(b);
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < i; ++k) y[i] -= f.lower[i][k] * y[k];
    for (size_t i = 0; i < n; ++i) y[i] /= f.d[i];
    for (size_t ii = n; ii-- > 0;)
        for (size_t k = ii + 1; k < n; ++k) y[ii] -= f.lower[k][ii] * y[k];
    return y;
}

RatVec mat_vec(const RatMat& a, const RatVec& x) {
    RatVec out(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j) out[i] += a[i][j] * x[j];
    return out;
}

Rational dot(const RatVec& a, const RatVec& b) {
    Rational s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// --- jets -------------------------------------------------------------------

namespace {

Rational& jet_window_slot() {
    static Rational w(8);
    return w;
}

// Sorts, merges equal exponents, drops zero coefficients.
std::vector<JetTerm> normalize_terms(std::vector<JetTerm> terms) {
    std::map<Rational, Rational> acc;
    for (auto& t : terms) acc[t.exponent] += t.coefficient;
    std::vector<JetTerm> out;
    for (auto& [e, c] : acc)
        if (c != 0) out.push_back({e, c});
    return out;
}

}  // namespace

const Rational& default_jet_window() { return jet_window_slot(); }

void set_default_jet_window(const Rational& window) {
    if (window <= 0) throw UsageError("jet window must be positive");
    jet_window_slot() = window;
}

PuiseuxJet PuiseuxJet::exact(std::vector<JetTerm> terms) {
    PuiseuxJet j;
    j.terms_ = normalize_terms(std::move(terms));
    j.zero_flag_ = j.terms_.empty();
    return j;
}

PuiseuxJet PuiseuxJet::windowed(std::vector<JetTerm> terms, const Rational& window) {
    if (window <= 0) throw UsageError("jet window must be positive");
    auto normalized = normalize_terms(std::move(terms));
    if (normalized.empty())
        throw PrecisionExhausted("windowed jet with no retained terms");
    PuiseuxJet j;
    const Rational cutoff = normalized.front().exponent + window;
    for (auto& t : normalized)
        if (t.exponent < cutoff) j.terms_.push_back(t);
    j.window_ = window;
    j.zero_flag_ = false;
    return j;
}

PuiseuxJet PuiseuxJet::monomial(const Rational& exponent, const Rational& coefficient) {
    return exact({{exponent, coefficient}});
}

PuiseuxJet PuiseuxJet::constant(const Rational& value) {
    return exact({{Rational(0), value}});
}

std::optional<Rational> PuiseuxJet::val() const {
    if (zero_flag_) return std::nullopt;
    return terms_.front().exponent;
}

const Rational& PuiseuxJet::lead_coefficient() const {
    if (zero_flag_) throw Error("lead_coefficient of zero jet");
    return terms_.front().coefficient;
}

std::optional<Rational> PuiseuxJet::certified_to() const {
    if (!window_) return std::nullopt;
    return terms_.front().exponent + *window_;
}

std::string PuiseuxJet::str() const {
    if (zero_flag_) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < terms_.size(); ++i) {
        if (i) os << " + ";
        os << rat_str(terms_[i].coefficient) << "*e^" << rat_str(terms_[i].exponent);
    }
    if (window_) os << " [w=" << rat_str(*window_) << "]";
    return os.str();
}

std::optional<Rational> jet_val(const PuiseuxJet& a) { return a.val(); }

PuiseuxJet jet_add(const PuiseuxJet& a, const PuiseuxJet& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    std::optional<Rational> cutoff;
    for (const auto* j : {&a, &b}) {
        auto c = j->certified_to();
        if (c && (!cutoff || *c < *cutoff)) cutoff = c;
    }
    std::map<Rational, Rational> acc;
    for (const auto* j : {&a, &b})
        for (const auto& t : j->terms())
            if (!cutoff || t.exponent < *cutoff) acc[t.exponent] += t.coefficient;
    std::vector<JetTerm> merged;
    for (auto& [e, c] : acc)
        if (c != 0) merged.push_back({e, c});
    if (merged.empty()) {
        if (!cutoff) return PuiseuxJet::zero();
        throw PrecisionExhausted("sum cancelled below exponent " + rat_str(*cutoff) +
                                 "; zero not certifiable");
    }
    if (!cutoff) return PuiseuxJet::exact(std::move(merged));
    return PuiseuxJet::windowed(std::move(merged), *cutoff - merged.front().exponent);
}

PuiseuxJet jet_neg(const PuiseuxJet& a) {
    if (a.is_zero()) return a;
    std::vector<JetTerm> t = a.terms();
    for (auto& term : t) term.coefficient = -term.coefficient;
    if (a.is_exact()) return PuiseuxJet::exact(std::move(t));
    return PuiseuxJet::windowed(std::move(t), *a.window());
}

PuiseuxJet jet_sub(const PuiseuxJet& a, const PuiseuxJet& b) {
    return jet_add(a, jet_neg(b));
}

PuiseuxJet jet_mul(const PuiseuxJet& a, const PuiseuxJet& b) {
    if (a.is_zero() || b.is_zero()) return PuiseuxJet::zero();
    std::optional<Rational> window;  // relative span of the product
    if (a.window() && (!window || *a.window() < *window)) window = a.window();
    if (b.window() && (!window || *b.window() < *window)) window = b.window();
    const Rational lead = a.terms().front().exponent + b.terms().front().exponent;
    std::map<Rational, Rational> acc;
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms()) {
            Rational e = ta.exponent + tb.exponent;
            if (window && e >= lead + *window) continue;
            acc[e] += ta.coefficient * tb.coefficient;
        }
    std::vector<JetTerm> out;
    for (auto& [e, c] : acc)
        if (c != 0) out.push_back({e, c});
    // The leading coefficient is a product of nonzero rationals, so the
    // result is never empty and val is exactly additive.
    if (!window) return PuiseuxJet::exact(std::move(out));
    return PuiseuxJet::windowed(std::move(out), *window);
}

PuiseuxJet jet_div(const PuiseuxJet& a, const PuiseuxJet& b) {
    if (b.is_zero()) throw DivisionByZero("jet division by zero");
    if (a.is_zero()) return PuiseuxJet::zero();

    const Rational vb = b.terms().front().exponent;
    const Rational cb = b.terms().front().coefficient;

    if (b.terms().size() == 1) {
        std::vector<JetTerm> out;
        for (const auto& t : a.terms()) out.push_back({t.exponent - vb, t.coefficient / cb});
        if (a.is_exact()) return PuiseuxJet::exact(std::move(out));
        return PuiseuxJet::windowed(std::move(out), *a.window());
    }

    std::optional<Rational> window;
    if (a.window() && (!window || *a.window() < *window)) window = a.window();
    if (b.window() && (!window || *b.window() < *window)) window = b.window();
    const bool exact_inputs = !window.has_value();
    if (exact_inputs) window = default_jet_window();

    const Rational lead = a.terms().front().exponent - vb;
    const Rational qcut = lead + *window;  // quotient exponents < qcut
    std::map<Rational, Rational> rem;
    for (const auto& t : a.terms()) rem[t.exponent] = t.coefficient;

    std::vector<JetTerm> quot;
    while (!rem.empty()) {
        auto it = rem.begin();
        const Rational qe = it->first - vb;
        if (qe >= qcut) break;
        const Rational qc = it->second / cb;
        quot.push_back({qe, qc});
        for (const auto& t : b.terms()) {
            Rational e = qe + t.exponent;
            if (e >= qcut + vb) continue;
            auto [pos, inserted] = rem.try_emplace(e, 0);
            pos->second -= qc * t.coefficient;
            if (pos->second == 0) rem.erase(pos);
        }
    }
    if (exact_inputs && rem.empty()) return PuiseuxJet::exact(std::move(quot));
    return PuiseuxJet::windowed(std::move(quot), *window);
}

bool jet_agree(const PuiseuxJet& a, const PuiseuxJet& b) {
    std::optional<Rational> cutoff;
    for (const auto* j : {&a, &b}) {
        auto c = j->certified_to();
        if (c && (!cutoff || *c < *cutoff)) cutoff = c;
    }
    auto take = [&](const PuiseuxJet& j) {
        std::vector<JetTerm> t;
        for (const auto& term : j.terms())
            if (!cutoff || term.exponent < *cutoff) t.push_back(term);
        return t;
    };
    auto ta = take(a), tb = take(b);
    if (ta.size() != tb.size()) return false;
    for (size_t i = 0; i < ta.size(); ++i)
        if (ta[i].exponent != tb[i].exponent || ta[i].coefficient != tb[i].coefficient)
            return false;
    return true;
}

}  // namespace troptoda
