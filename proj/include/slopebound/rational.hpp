#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <optional>
#include <string>

#include "slopebound/errors.hpp"

namespace slopebound {

/// Parses a decimal string ("1.15094", "-0.5", "3") into an exact rational.
/// Decimal digits become a scaled integer, never a binary float.
inline mpq_class parse_decimal(const std::string& text) {
    if (text.empty())
        throw Error(ErrorCode::invalid_argument, "empty numeric literal");
    std::string s = text;
    bool negative = false;
    std::size_t i = 0;
    if (s[i] == '+' || s[i] == '-') {
        negative = (s[i] == '-');
        ++i;
    }
    std::string digits;
    long frac_digits = -1;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c == '.') {
            if (frac_digits >= 0)
                throw Error(ErrorCode::invalid_argument, "bad decimal literal '" + text + "'");
            frac_digits = 0;
        } else if (c >= '0' && c <= '9') {
            digits.push_back(c);
            if (frac_digits >= 0) ++frac_digits;
        } else {
            throw Error(ErrorCode::invalid_argument, "bad decimal literal '" + text + "'");
        }
    }
    if (digits.empty())
        throw Error(ErrorCode::invalid_argument, "bad decimal literal '" + text + "'");
    mpz_class num(digits, 10);
    mpz_class den(1);
    for (long k = 0; k < std::max(frac_digits, 0L); ++k) den *= 10;
    mpq_class q(num, den);
    q.canonicalize();
    if (negative) q = -q;
    return q;
}

/// Parses either "p/q" or a decimal literal.
inline mpq_class parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return parse_decimal(text);
    mpq_class num = parse_decimal(text.substr(0, slash));
    mpq_class den = parse_decimal(text.substr(slash + 1));
    if (den == 0)
        throw Error(ErrorCode::invalid_argument, "zero denominator in '" + text + "'");
    mpq_class q = num / den;
    q.canonicalize();
    return q;
}

inline int sign_of(const mpq_class& q) { return sgn(q); }

/// Floor of an exact rational as an integer.
inline mpz_class floor_q(const mpq_class& q) {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

inline mpz_class ceil_q(const mpq_class& q) {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

/// Exact square root of a rational if it is the square of a rational.
inline std::optional<mpq_class> try_sqrt_q(const mpq_class& q) {
    if (q < 0) return std::nullopt;
    if (q == 0) return mpq_class(0);
    const mpz_class& num = q.get_num();
    const mpz_class& den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return mpq_class(rn, rd);
}

/// A low-denominator rational strictly inside the open interval (lo, hi),
/// found by continued-fraction descent. Deterministic; requires lo < hi.
inline mpq_class simplest_between(const mpq_class& lo, const mpq_class& hi) {
    if (!(lo < hi))
        throw Error(ErrorCode::invalid_argument, "simplest_between needs lo < hi");
    if (lo < 0 && hi > 0) return mpq_class(0);
    if (hi <= 0) return -simplest_between(-hi, -lo);

    // 0 <= lo < hi from here on.
    mpq_class fa(floor_q(lo));
    if (fa + 1 < hi) return fa + 1; // smallest integer above lo is inside
    if (lo == fa) {
        // (n, b) with b <= n + 1: pick n + 1/m for the smallest integer m > 1/(b-n)
        mpq_class c = 1 / (hi - fa);
        return fa + 1 / mpq_class(floor_q(c) + 1);
    }
    // Both endpoints share integer part; recurse on the reciprocal interval.
    return fa + 1 / simplest_between(1 / (hi - fa), 1 / (lo - fa));
}

inline std::string to_string(const mpq_class& q) {
    return q.get_str();
}

} // namespace slopebound
