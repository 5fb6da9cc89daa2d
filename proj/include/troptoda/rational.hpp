#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "troptoda/errors.hpp"

namespace troptoda {

/// Exact rational scalar. mpq_class keeps the canonical form
/// (gcd(|num|, den) = 1, den > 0) for every arithmetic result.
using Rational = mpq_class;

using RatVec = std::vector<Rational>;
using RatMat = std::vector<std::vector<Rational>>;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "p", "-p" or "p/q". Throws UsageError on anything else.
Rational rat_parse(const std::string& text);

/// Renders "p" when the denominator is 1, "p/q" otherwise.
std::string rat_str(const Rational& value);

std::string vec_str(const RatVec& v);

inline mpz_class rat_floor(const Rational& value) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return q;
}

inline mpz_class rat_ceil(const Rational& value) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return q;
}

/// Nearest integer, halves rounded down (deterministic seed rounding).
inline mpz_class rat_round(const Rational& value) {
    return rat_floor(value + Rational(1, 2));
}

inline bool rat_is_integer(const Rational& value) {
    return value.get_den() == 1;
}

// --- small exact linear algebra -------------------------------------------

/// Exact LDL^T factorization of a symmetric matrix. d holds the pivots,
/// lower is unit lower triangular. Present only while all leading minors
/// are nonzero.
struct Ldlt {
    RatMat lower;
    RatVec d;
    bool positive_definite = false;
    bool singular = false;
};

Ldlt ldlt_factor(const RatMat& symmetric);

/// Solves A x = b using a precomputed LDL^T of A.
RatVec ldlt_solve(const Ldlt& f, const RatVec& b);

RatVec mat_vec(const RatMat& a, const RatVec& x);
Rational dot(const RatVec& a, const RatVec& b);

}  // namespace troptoda
