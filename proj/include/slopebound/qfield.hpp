#pragma once

#include <gmpxx.h>

#include <cmath>
#include <optional>
#include <string>

#include "slopebound/rational.hpp"
#include "slopebound/real.hpp"

namespace slopebound {

/// Exact element of the field Q(sqrt 3): rat + rad * sqrt(3).
///
/// Every sign test is exact, so geometric predicates on bases whose entries
/// live in this field never need a precision fallback. The three facts that
/// make the sign test below work: sqrt(3) is irrational, so rat + rad*sqrt(3)
/// vanishes only when both parts do; for mixed-sign parts the comparison
/// squares to rat^2 vs 3*rad^2; and the square test never lands on equality
/// for a nonzero element.
struct AlgReal {
    mpq_class rat;
    mpq_class rad;

    AlgReal() : rat(0), rad(0) {}
    AlgReal(long v) : rat(v), rad(0) {}
    AlgReal(const mpq_class& r) : rat(r), rad(0) {}
    AlgReal(const mpq_class& r, const mpq_class& s) : rat(r), rad(s) {}

    static AlgReal sqrt3_times(const mpq_class& s) { return AlgReal(mpq_class(0), s); }

    bool is_rational() const { return rad == 0; }
    bool is_zero() const { return rat == 0 && rad == 0; }

    int sign() const {
        if (rad == 0) return sgn(rat);
        if (rat == 0) return sgn(rad);
        int sr = sgn(rat), ss = sgn(rad);
        if (sr == ss) return sr;
        mpq_class t = rat * rat - 3 * rad * rad;
        // t == 0 would force rat = rad = 0; unreachable here.
        return sr * sgn(t);
    }

    friend AlgReal operator+(const AlgReal& a, const AlgReal& b) {
        return AlgReal(a.rat + b.rat, a.rad + b.rad);
    }
    friend AlgReal operator-(const AlgReal& a, const AlgReal& b) {
        return AlgReal(a.rat - b.rat, a.rad - b.rad);
    }
    friend AlgReal operator-(const AlgReal& a) { return AlgReal(-a.rat, -a.rad); }
    friend AlgReal operator*(const AlgReal& a, const AlgReal& b) {
        return AlgReal(a.rat * b.rat + 3 * a.rad * b.rad, a.rat * b.rad + a.rad * b.rat);
    }
    friend AlgReal operator/(const AlgReal& a, const AlgReal& b) {
        // Multiply by the conjugate; the field norm rat^2 - 3*rad^2 vanishes
        // only for zero.
        mpq_class norm = b.rat * b.rat - 3 * b.rad * b.rad;
        if (norm == 0)
            throw Error(ErrorCode::invalid_argument, "division by zero in Q(sqrt3)");
        AlgReal num = a * AlgReal(b.rat, -b.rad);
        return AlgReal(num.rat / norm, num.rad / norm);
    }

    AlgReal& operator+=(const AlgReal& o) { return *this = *this + o; }
    AlgReal& operator-=(const AlgReal& o) { return *this = *this - o; }
    AlgReal& operator*=(const AlgReal& o) { return *this = *this * o; }

    friend bool operator==(const AlgReal& a, const AlgReal& b) {
        return a.rat == b.rat && a.rad == b.rad;
    }
    friend bool operator!=(const AlgReal& a, const AlgReal& b) { return !(a == b); }
    friend bool operator<(const AlgReal& a, const AlgReal& b) { return (a - b).sign() < 0; }
    friend bool operator<=(const AlgReal& a, const AlgReal& b) { return (a - b).sign() <= 0; }
    friend bool operator>(const AlgReal& a, const AlgReal& b) { return (a - b).sign() > 0; }
    friend bool operator>=(const AlgReal& a, const AlgReal& b) { return (a - b).sign() >= 0; }

    AlgReal abs() const { return sign() < 0 ? -*this : *this; }

    PreciseReal enclosure(mpfr_prec_t prec) const {
        return PreciseReal::from_rational(rat, prec) +
               PreciseReal::from_rational(rad, prec) * PreciseReal::sqrt3(prec);
    }

    double approx() const { return rat.get_d() + rad.get_d() * 1.7320508075688772; }

    std::string str() const {
        if (rad == 0) return rat.get_str();
        std::string s = rad.get_str() + "*sqrt3";
        if (rat == 0) return s;
        return rat.get_str() + (sgn(rad) >= 0 ? "+" : "") + s;
    }
};

/// Exact floor. Rational case is a gmp division; otherwise estimate and fix
/// up with exact sign tests (the walk is at most a couple of steps).
inline mpz_class floor_alg(const AlgReal& x) {
    if (x.is_rational()) return floor_q(x.rat);
    double est = x.approx();
    mpz_class n = std::isfinite(est) ? mpz_class(std::floor(est))
                                     : x.enclosure(128).floor_lower();
    while ((x - AlgReal(mpq_class(n))).sign() < 0) --n;
    while ((x - AlgReal(mpq_class(n + 1))).sign() >= 0) ++n;
    return n;
}

inline mpz_class ceil_alg(const AlgReal& x) { return -floor_alg(-x); }

/// Nearest integer, ties rounded down.
inline mpz_class round_alg(const AlgReal& x) {
    return floor_alg(x + AlgReal(mpq_class(1, 2)));
}

/// Exact square root inside Q(sqrt3) when one exists.
inline std::optional<AlgReal> try_sqrt_alg(const AlgReal& y) {
    if (y.sign() < 0) return std::nullopt;
    if (y.is_zero()) return AlgReal(0);
    if (y.rad == 0) {
        if (auto q = try_sqrt_q(y.rat)) return AlgReal(*q);
        // Pure sqrt(3) multiple: y = 3 r^2 gives sqrt(y) = r sqrt(3).
        if (auto r = try_sqrt_q(y.rat / 3)) return AlgReal::sqrt3_times(*r);
        return std::nullopt;
    }
    // Solve (q + r sqrt3)^2 = y: q^2 + 3r^2 = y.rat and 2qr = y.rad.
    mpq_class disc = y.rat * y.rat - 3 * y.rad * y.rad;
    auto t = try_sqrt_q(disc);
    if (!t) return std::nullopt;
    for (int branch = 0; branch < 2; ++branch) {
        mpq_class qsq = (branch == 0) ? (y.rat + *t) / 2 : (y.rat - *t) / 2;
        auto q = try_sqrt_q(qsq);
        if (!q || *q == 0) continue;
        mpq_class r = y.rad / (2 * *q);
        AlgReal root(*q, r);
        if (root * root == y) return root.sign() >= 0 ? root : -root;
    }
    return std::nullopt;
}

/// Parses one basis coordinate token: a decimal/rational literal, "sqrt3",
/// "-sqrt3", or "<literal>*sqrt3".
inline AlgReal parse_algreal(const std::string& text) {
    if (text.empty())
        throw Error(ErrorCode::invalid_argument, "empty coordinate token");
    auto star = text.find('*');
    if (star != std::string::npos) {
        if (text.substr(star + 1) != "sqrt3")
            throw Error(ErrorCode::invalid_argument, "bad coordinate token '" + text + "'");
        return AlgReal::sqrt3_times(parse_rational(text.substr(0, star)));
    }
    if (text == "sqrt3") return AlgReal::sqrt3_times(1);
    if (text == "-sqrt3") return AlgReal::sqrt3_times(-1);
    return AlgReal(parse_rational(text));
}

} // namespace slopebound
