#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "troptoda/rational.hpp"

namespace troptoda {

/// One term c * e^q of a truncated Puiseux series in e.
struct JetTerm {
    Rational exponent;
    Rational coefficient;
};

/// Truncated Puiseux series ("jet"). A jet is either exact — its term list
/// is the whole series — or windowed: terms are certified correct for
/// exponents in [val, val + window) and unknown beyond. Exponents are
/// strictly increasing, coefficients nonzero. The zero jet is exact.
///
/// A windowed jet with no surviving terms cannot exist: an operation whose
/// retained terms all cancel throws PrecisionExhausted instead, since terms
/// past the window could still be nonzero.
class PuiseuxJet {
public:
    PuiseuxJet() : zero_flag_(true) {}

    static PuiseuxJet zero() { return PuiseuxJet(); }
    static PuiseuxJet exact(std::vector<JetTerm> terms);
    static PuiseuxJet windowed(std::vector<JetTerm> terms, const Rational& window);
    static PuiseuxJet monomial(const Rational& exponent, const Rational& coefficient);
    static PuiseuxJet constant(const Rational& value);

    bool is_zero() const { return zero_flag_; }
    bool is_exact() const { return !window_.has_value(); }
    const std::vector<JetTerm>& terms() const { return terms_; }
    /// nullopt for exact jets.
    const std::optional<Rational>& window() const { return window_; }

    /// Leading exponent; nullopt encodes val(0) = +infinity.
    std::optional<Rational> val() const;
    const Rational& lead_coefficient() const;

    /// Absolute exponent bound below which the term list is certified.
    /// nullopt = certified everywhere (exact jet).
    std::optional<Rational> certified_to() const;

    std::string str() const;

private:
    std::vector<JetTerm> terms_;
    std::optional<Rational> window_;
    bool zero_flag_ = false;
};

/// Window used when a division of exact series must truncate.
const Rational& default_jet_window();
void set_default_jet_window(const Rational& window);

PuiseuxJet jet_add(const PuiseuxJet& a, const PuiseuxJet& b);
PuiseuxJet jet_neg(const PuiseuxJet& a);
PuiseuxJet jet_sub(const PuiseuxJet& a, const PuiseuxJet& b);
PuiseuxJet jet_mul(const PuiseuxJet& a, const PuiseuxJet& b);
PuiseuxJet jet_div(const PuiseuxJet& a, const PuiseuxJet& b);

/// Leading exponent; nullopt = +infinity (zero jet).
std::optional<Rational> jet_val(const PuiseuxJet& a);

/// True when the two jets carry identical terms on the span where both are
/// certified. Exact jets compare everywhere.
bool jet_agree(const PuiseuxJet& a, const PuiseuxJet& b);

}  // namespace troptoda
