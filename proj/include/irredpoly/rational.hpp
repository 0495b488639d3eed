// Exact rational arithmetic used throughout the library (GMP-backed).
#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

namespace irredpoly {

using Rational = mpq_class;
using BigInt = mpz_class;

// mpq_class(num, den) does not canonicalize on its own; this does.
inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline std::string rational_to_string(const Rational& q) {
    return q.get_str();
}

// Checked narrowing; LP-derived hyperplane data stays far below this at desk scale.
inline long long to_int64(const BigInt& z) {
    if (!z.fits_slong_p())
        throw std::overflow_error("integer too large for int64: " + z.get_str());
    return static_cast<long long>(z.get_si());
}

// Scale a rational vector (plus offset) to the smallest integer multiple.
// Returns {integer coords, integer offset}.
inline std::pair<std::vector<long long>, long long>
scale_to_integers(const std::vector<Rational>& v, const Rational& offset) {
    BigInt l = 1;
    for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), offset.get_den().get_mpz_t());
    std::vector<long long> out;
    out.reserve(v.size());
    for (const auto& q : v) {
        BigInt z = q.get_num() * (l / q.get_den());
        out.push_back(to_int64(z));
    }
    BigInt zo = offset.get_num() * (l / offset.get_den());
    return {std::move(out), to_int64(zo)};
}

}  // namespace irredpoly
