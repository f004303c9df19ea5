#pragma once

#include <gmpxx.h>

#include "slopebound/rational.hpp"
#include "slopebound/real.hpp"

namespace slopebound {

/// Exact quadratic surd a + b*sqrt(S) with rational a, b and rational S >= 0.
/// Construction folds perfect-square radicands into the rational part, so a
/// stored nonzero b always multiplies an irrational square root. Values of
/// this shape are closed under the comparisons the breakpoint machinery
/// needs: equality is decided algebraically, strict order by enclosure
/// refinement (which terminates because unequal values are separated).
class QuadSurd {
public:
    QuadSurd() : a_(0), b_(0), s_(0) {}

    static QuadSurd rational(const mpq_class& a) { return QuadSurd(a, 0, 0); }

    static QuadSurd make(const mpq_class& a, const mpq_class& b, const mpq_class& s) {
        if (s < 0)
            throw Error(ErrorCode::invalid_argument, "negative radicand");
        if (b == 0 || s == 0) return QuadSurd(a, 0, 0);
        if (auto root = try_sqrt_q(s)) return QuadSurd(a + b * *root, 0, 0);
        return QuadSurd(a, b, s);
    }

    bool is_rational() const { return b_ == 0; }
    const mpq_class& rational_part() const { return a_; }
    const mpq_class& coeff() const { return b_; }
    const mpq_class& radicand() const { return s_; }

    /// Exact rational value; only valid when is_rational().
    const mpq_class& rational_value() const { return a_; }

    PreciseReal enclosure(mpfr_prec_t prec) const {
        PreciseReal v = PreciseReal::from_rational(a_, prec);
        if (b_ != 0)
            v = v + PreciseReal::from_rational(b_, prec) *
                        PreciseReal::from_rational(s_, prec).sqrt();
        return v;
    }

    friend bool operator==(const QuadSurd& u, const QuadSurd& v) {
        // Difference is A + B sqrt(S1) + C sqrt(S2) with non-square radicands.
        mpq_class A = u.a_ - v.a_;
        const mpq_class &B = u.b_, &C = v.b_; // C enters negated below
        if (B == 0 && C == 0) return A == 0;
        if (C == 0 || B == 0) return false; // rational + single irrational surd
        if (u.s_ == v.s_) {
            // A + (B - C) sqrt(S) = 0
            if (B == C) return A == 0;
            return false; // nonzero coefficient on an irrational sqrt
        }
        // B sqrt(S1) - C sqrt(S2) = -A. Squaring forces sqrt(S1 S2) rational.
        mpq_class prod = u.s_ * v.s_;
        auto w = try_sqrt_q(prod);
        if (!w) return false;
        mpq_class need = (A * A - B * B * u.s_ - C * C * v.s_) / (2 * B * (-C));
        if (need != *w) return false;
        if (A == 0) {
            // B sqrt(S1) = C sqrt(S2) with equal squares already implied
            return sgn(B) == sgn(C) && B * B * u.s_ == C * C * v.s_;
        }
        // |B sqrt(S1) - C sqrt(S2)| = |A|; equality needs the sign to be -A.
        int sum_sign;
        if (sgn(B) == -sgn(C)) {
            sum_sign = sgn(B);
        } else {
            mpq_class diff = B * B * u.s_ - C * C * v.s_;
            sum_sign = sgn(B) * sgn(diff);
        }
        return sum_sign == -sgn(A);
    }

    friend bool operator!=(const QuadSurd& u, const QuadSurd& v) { return !(u == v); }

    /// Exact three-way comparison.
    int cmp(const QuadSurd& o) const {
        if (is_rational() && o.is_rational()) return ::cmp(a_, o.a_);
        if (*this == o) return 0;
        for (mpfr_prec_t prec = 96;; prec *= 2) {
            Order ord = enclosure(prec).compare(o.enclosure(prec));
            if (ord == Order::less) return -1;
            if (ord == Order::greater) return 1;
            if (prec > (mpfr_prec_t(1) << 20))
                throw Error(ErrorCode::precision_exhausted, "surd comparison did not separate");
        }
    }

    int cmp_rational(const mpq_class& q) const { return cmp(QuadSurd::rational(q)); }

private:
    QuadSurd(mpq_class a, mpq_class b, mpq_class s)
        : a_(std::move(a)), b_(std::move(b)), s_(std::move(s)) {}

    mpq_class a_, b_, s_;
};

} // namespace slopebound
