#pragma once

#include <map>
#include <utility>
#include <vector>

#include "troptoda/puiseux.hpp"
#include "troptoda/rational.hpp"

namespace troptoda {

/// Monomial exponent pair (w1, w2) for x^w1 y^w2. Negative entries are
/// allowed transiently (Laurent steps inside determinant work).
using Exponent2 = std::pair<long, long>;

/// Min-plus polynomial in two variables: min over support of (c_w + w1 X + w2 Y).
struct TropicalPolynomial2 {
    std::map<Exponent2, Rational> terms;

    explicit TropicalPolynomial2(std::map<Exponent2, Rational> t);

    size_t support_size() const { return terms.size(); }
};

/// Exact minimizer set of a min-plus polynomial at a point.
struct SupportSet {
    std::pair<Rational, Rational> point;
    std::vector<Exponent2> achievers;  // sorted, never empty
};

Rational trop_eval(const TropicalPolynomial2& f, const Rational& x, const Rational& y);
SupportSet support_at(const TropicalPolynomial2& f, const Rational& x, const Rational& y);

/// Polynomial in (x, y) with truncated-Puiseux coefficients.
struct PuiseuxPolynomial2 {
    std::map<Exponent2, PuiseuxJet> terms;  // zero jets never stored

    void add_term(const Exponent2& w, const PuiseuxJet& jet);
};

PuiseuxPolynomial2 ppoly_add(const PuiseuxPolynomial2& a, const PuiseuxPolynomial2& b);
PuiseuxPolynomial2 ppoly_mul(const PuiseuxPolynomial2& a, const PuiseuxPolynomial2& b);
PuiseuxPolynomial2 ppoly_neg(const PuiseuxPolynomial2& a);
PuiseuxPolynomial2 ppoly_monomial(const Exponent2& w, const PuiseuxJet& jet);

/// True when all coefficients agree within their certified spans.
bool ppoly_agree(const PuiseuxPolynomial2& a, const PuiseuxPolynomial2& b);

/// Coefficient-wise valuation. Coefficients that are exactly zero are
/// omitted from the support.
TropicalPolynomial2 tropicalize(const PuiseuxPolynomial2& f);

/// Degrees d_j = floor((M+1-j)N/M), j = 1..M.
std::vector<long> spectral_degrees(long M, long N);

/// Coefficient data of a spectral min-plus polynomial for the (M, N)
/// lattice:  min[(M+1)Y, min_j (jY + min_i (iX + F_{j,i})), F0]
/// normalized by F_{1,d_1} = 0.
struct SpectralShape {
    long M = 0;
    long N = 0;
    Rational F0;
    std::vector<RatVec> F;  // F[j-1][i], i = 0..d_j

    SpectralShape(long M, long N, Rational F0, std::vector<RatVec> F);

    const Rational& coeff(long j, long i) const { return F[j - 1][i]; }
    std::vector<long> degrees() const { return spectral_degrees(M, N); }

    TropicalPolynomial2 to_tropical() const;
    /// Renders "min[4Y, 3Y + c, ...]" with exact coefficients.
    std::string pretty() const;
};

/// Reads a spectral shape back off a tropical polynomial, checking the
/// degree bounds and the F_{1,d_1} = 0 normalization.
SpectralShape shape_from_tropical(const TropicalPolynomial2& f, long M, long N);

}  // namespace troptoda
