#include "troptoda/tropical_poly.hpp"

#include <numeric>
#include <sstream>

namespace troptoda {

TropicalPolynomial2::TropicalPolynomial2(std::map<Exponent2, Rational> t)
    : terms(std::move(t)) {
    if (terms.empty()) throw UsageError("tropical polynomial needs a nonempty support");
}

Rational trop_eval(const TropicalPolynomial2& f, const Rational& x, const Rational& y) {
    bool first = true;
    Rational best = 0;
    for (const auto& [w, c] : f.terms) {
        Rational v = c + Rational(w.first) * x + Rational(w.second) * y;
        if (first || v < best) {
            best = v;
            first = false;
        }
    }
    return best;
}

SupportSet support_at(const TropicalPolynomial2& f, const Rational& x, const Rational& y) {
    const Rational best = trop_eval(f, x, y);
    SupportSet s;
    s.point = {x, y};
    for (const auto& [w, c] : f.terms)
        if (c + Rational(w.first) * x + Rational(w.second) * y == best)
            s.achievers.push_back(w);
    return s;
}

void PuiseuxPolynomial2::add_term(const Exponent2& w, const PuiseuxJet& jet) {
    if (jet.is_zero()) return;
    auto it = terms.find(w);
    if (it == terms.end()) {
        terms.emplace(w, jet);
        return;
    }
    PuiseuxJet sum = jet_add(it->second, jet);
    if (sum.is_zero())
        terms.erase(it);
    else
        it->second = std::move(sum);
}

PuiseuxPolynomial2 ppoly_add(const PuiseuxPolynomial2& a, const PuiseuxPolynomial2& b) {
    PuiseuxPolynomial2 out = a;
    for (const auto& [w, jet] : b.terms) out.add_term(w, jet);
    return out;
}

PuiseuxPolynomial2 ppoly_mul(const PuiseuxPolynomial2& a, const PuiseuxPolynomial2& b) {
    PuiseuxPolynomial2 out;
    for (const auto& [wa, ja] : a.terms)
        for (const auto& [wb, jb] : b.terms)
            out.add_term({wa.first + wb.first, wa.second + wb.second}, jet_mul(ja, jb));
    return out;
}

PuiseuxPolynomial2 ppoly_neg(const PuiseuxPolynomial2& a) {
    PuiseuxPolynomial2 out;
    for (const auto& [w, jet] : a.terms) out.terms.emplace(w, jet_neg(jet));
    return out;
}

PuiseuxPolynomial2 ppoly_monomial(const Exponent2& w, const PuiseuxJet& jet) {
    PuiseuxPolynomial2 out;
    out.add_term(w, jet);
    return out;
}

bool ppoly_agree(const PuiseuxPolynomial2& a, const PuiseuxPolynomial2& b) {
    if (a.terms.size() != b.terms.size()) return false;
    for (const auto& [w, jet] : a.terms) {
        auto it = b.terms.find(w);
        if (it == b.terms.end() || !jet_agree(jet, it->second)) return false;
    }
    return true;
}

TropicalPolynomial2 tropicalize(const PuiseuxPolynomial2& f) {
    std::map<Exponent2, Rational> out;
    for (const auto& [w, jet] : f.terms) {
        auto v = jet_val(jet);
        if (v) out.emplace(w, *v);
    }
    return TropicalPolynomial2(std::move(out));
}

std::vector<long> spectral_degrees(long M, long N) {
    std::vector<long> d(M);
    for (long j = 1; j <= M; ++j) d[j - 1] = ((M + 1 - j) * N) / M;
    return d;
}

SpectralShape::SpectralShape(long M_, long N_, Rational F0_, std::vector<RatVec> F_)
    : M(M_), N(N_), F0(std::move(F0_)), F(std::move(F_)) {
    if (M < 1 || N < 1) throw UsageError("spectral shape needs positive M, N");
    if (std::gcd(M, N) != 1) throw UsageError("spectral shape needs gcd(M,N) = 1");
    auto d = spectral_degrees(M, N);
    if ((long)F.size() != M) throw UsageError("spectral shape: wrong row count");
    for (long j = 1; j <= M; ++j)
        if ((long)F[j - 1].size() != d[j - 1] + 1)
            throw UsageError("spectral shape: row " + std::to_string(j) +
                             " must hold degrees 0.." + std::to_string(d[j - 1]));
    if (F[0][d[0]] != 0)
        throw UsageError("spectral shape: F_{1,d_1} must be 0, got " + rat_str(F[0][d[0]]));
}

TropicalPolynomial2 SpectralShape::to_tropical() const {
    std::map<Exponent2, Rational> terms;
    terms[{0, M + 1}] = 0;
    auto d = degrees();
    for (long j = 1; j <= M; ++j)
        for (long i = 0; i <= d[j - 1]; ++i) terms[{i, j}] = F[j - 1][i];
    terms[{0, 0}] = F0;
    return TropicalPolynomial2(std::move(terms));
}

std::string SpectralShape::pretty() const {
    auto term = [](const Rational& c, long i) {
        std::ostringstream os;
        if (i == 1)
            os << "X";
        else if (i > 1)
            os << i << "X";
        if (i == 0)
            os << rat_str(c);
        else if (c != 0)
            os << " + " << rat_str(c);
        return os.str();
    };
    std::ostringstream os;
    os << "min[" << (M + 1) << "Y";
    auto d = degrees();
    for (long j = M; j >= 1; --j) {
        os << ", ";
        if (j == 1)
            os << "Y + ";
        else
            os << j << "Y + ";
        os << "min[";
        for (long i = d[j - 1]; i >= 0; --i) {
            os << term(F[j - 1][i], i);
            if (i) os << ", ";
        }
        os << "]";
    }
    os << ", " << rat_str(F0) << "]";
    return os.str();
}

SpectralShape shape_from_tropical(const TropicalPolynomial2& f, long M, long N) {
    auto d = spectral_degrees(M, N);
    std::vector<RatVec> F(M);
    for (long j = 1; j <= M; ++j) F[j - 1].assign(d[j - 1] + 1, 0);
    Rational F0;
    size_t expected = 2;  // (0, M+1) and (0, 0)
    for (long j = 1; j <= M; ++j) expected += d[j - 1] + 1;
    if (f.terms.size() != expected)
        throw UsageError("spectral support has " + std::to_string(f.terms.size()) +
                         " monomials, expected " + std::to_string(expected));
    for (const auto& [w, c] : f.terms) {
        auto [i, j] = w;
        if (i == 0 && j == M + 1) {
            if (c != 0) throw UsageError("top coefficient must have valuation 0");
        } else if (i == 0 && j == 0) {
            F0 = c;
        } else if (j >= 1 && j <= M && i >= 0 && i <= d[j - 1]) {
            F[j - 1][i] = c;
        } else {
            throw UsageError("monomial x^" + std::to_string(i) + " y^" + std::to_string(j) +
                             " violates the spectral degree bounds");
        }
    }
    return SpectralShape(M, N, F0, std::move(F));
}

}  // namespace troptoda
