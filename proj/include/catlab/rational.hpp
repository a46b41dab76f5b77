#ifndef CATLAB_RATIONAL_HPP
#define CATLAB_RATIONAL_HPP

#include "catlab/errors.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace catlab {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const std::string& num, const std::string& den) {
    Rat q{Int(num), Int(den)};
    if (q.get_den() == 0) throw InvalidParameterError("rational with zero denominator");
    q.canonicalize();
    return q;
}

inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw InvalidParameterError("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat rat_pow(const Rat& base, unsigned long e) {
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), e);
    return r;
}

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// total! / prod(parts!); requires sum(parts) == total.
inline Int multinomial(unsigned long total, const std::vector<unsigned>& parts) {
    Int r = factorial(total);
    for (unsigned part : parts) r /= factorial(part);
    return r;
}

/// Natural log of a positive big integer, via mantissa/exponent split.
/// Accurate to double precision regardless of magnitude.
double log_mpz(const Int& z);

/// Fixed decimal rendering of a rational (round toward zero), for the
/// clearly-labelled "approx" fields of JSON outputs.
std::string rat_to_decimal(const Rat& q, int digits);

} // namespace catlab

#endif
