#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <optional>
#include <string>

#include "slopebound/errors.hpp"

namespace slopebound {

/// Precision escalation policy, in bits. Comparisons against irrational
/// thresholds retry at doubled precision until `max_bits` is reached.
struct Precision {
    mpfr_prec_t bits = 64;
    mpfr_prec_t max_bits = 1024;

    mpfr_prec_t next(mpfr_prec_t p) const { return std::min<mpfr_prec_t>(p * 2, max_bits); }
};

enum class Order { less, greater, undecided };

/// A real number enclosed between two MPFR endpoints. Every operation rounds
/// the lower endpoint down and the upper endpoint up, so the true value of any
/// expression built from exact inputs always stays inside the enclosure.
class PreciseReal {
public:
    explicit PreciseReal(mpfr_prec_t prec = 64) {
        mpfr_init2(lo_, prec);
        mpfr_init2(hi_, prec);
        mpfr_set_zero(lo_, 1);
        mpfr_set_zero(hi_, 1);
    }

    PreciseReal(const PreciseReal& o) {
        mpfr_init2(lo_, mpfr_get_prec(o.lo_));
        mpfr_init2(hi_, mpfr_get_prec(o.hi_));
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }

    PreciseReal(PreciseReal&& o) noexcept {
        mpfr_init2(lo_, 2);
        mpfr_init2(hi_, 2);
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
    }

    PreciseReal& operator=(PreciseReal o) noexcept {
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
        return *this;
    }

    ~PreciseReal() {
        mpfr_clear(lo_);
        mpfr_clear(hi_);
    }

    mpfr_prec_t prec() const { return std::max(mpfr_get_prec(lo_), mpfr_get_prec(hi_)); }

    static PreciseReal from_long(long v, mpfr_prec_t prec = 64) {
        PreciseReal r(prec);
        mpfr_set_si(r.lo_, v, MPFR_RNDD);
        mpfr_set_si(r.hi_, v, MPFR_RNDU);
        return r;
    }

    static PreciseReal from_rational(const mpq_class& q, mpfr_prec_t prec) {
        PreciseReal r(prec);
        mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
        return r;
    }

    static PreciseReal pi(mpfr_prec_t prec) {
        PreciseReal r(prec);
        mpfr_const_pi(r.lo_, MPFR_RNDD);
        mpfr_const_pi(r.hi_, MPFR_RNDU);
        return r;
    }

    static PreciseReal sqrt3(mpfr_prec_t prec) {
        PreciseReal r(prec);
        mpfr_sqrt_ui(r.lo_, 3, MPFR_RNDD);
        mpfr_sqrt_ui(r.hi_, 3, MPFR_RNDU);
        return r;
    }

    friend PreciseReal operator+(const PreciseReal& a, const PreciseReal& b) {
        PreciseReal r(std::max(a.prec(), b.prec()));
        mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
        mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
        return r;
    }

    friend PreciseReal operator-(const PreciseReal& a, const PreciseReal& b) {
        PreciseReal r(std::max(a.prec(), b.prec()));
        mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
        mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
        return r;
    }

    friend PreciseReal operator-(const PreciseReal& a) {
        PreciseReal r(a.prec());
        mpfr_neg(r.lo_, a.hi_, MPFR_RNDD);
        mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
        return r;
    }

    friend PreciseReal operator*(const PreciseReal& a, const PreciseReal& b) {
        PreciseReal r(std::max(a.prec(), b.prec()));
        mpfr_t t;
        mpfr_init2(t, r.prec());
        // Lower endpoint: minimum of the four products rounded down.
        mpfr_mul(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
        mpfr_mul(t, a.lo_, b.hi_, MPFR_RNDD);
        mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
        mpfr_mul(t, a.hi_, b.lo_, MPFR_RNDD);
        mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
        mpfr_mul(t, a.hi_, b.hi_, MPFR_RNDD);
        mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
        // Upper endpoint: maximum of the four products rounded up.
        mpfr_mul(r.hi_, a.lo_, b.lo_, MPFR_RNDU);
        mpfr_mul(t, a.lo_, b.hi_, MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
        mpfr_mul(t, a.hi_, b.lo_, MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
        mpfr_mul(t, a.hi_, b.hi_, MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
        mpfr_clear(t);
        return r;
    }

    friend PreciseReal operator/(const PreciseReal& a, const PreciseReal& b) {
        if (mpfr_sgn(b.lo_) <= 0 && mpfr_sgn(b.hi_) >= 0)
            throw Error(ErrorCode::invalid_argument, "division by an interval containing zero");
        PreciseReal r(std::max(a.prec(), b.prec()));
        mpfr_t t;
        mpfr_init2(t, r.prec());
        mpfr_div(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
        mpfr_div(t, a.lo_, b.hi_, MPFR_RNDD);
        mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
        mpfr_div(t, a.hi_, b.lo_, MPFR_RNDD);
        mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
        mpfr_div(t, a.hi_, b.hi_, MPFR_RNDD);
        mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
        mpfr_div(r.hi_, a.lo_, b.lo_, MPFR_RNDU);
        mpfr_div(t, a.lo_, b.hi_, MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
        mpfr_div(t, a.hi_, b.lo_, MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
        mpfr_div(t, a.hi_, b.hi_, MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
        mpfr_clear(t);
        return r;
    }

    PreciseReal squared() const {
        PreciseReal r(prec());
        if (mpfr_sgn(lo_) >= 0) {
            mpfr_sqr(r.lo_, lo_, MPFR_RNDD);
            mpfr_sqr(r.hi_, hi_, MPFR_RNDU);
        } else if (mpfr_sgn(hi_) <= 0) {
            mpfr_sqr(r.lo_, hi_, MPFR_RNDD);
            mpfr_sqr(r.hi_, lo_, MPFR_RNDU);
        } else {
            mpfr_set_zero(r.lo_, 1);
            mpfr_t t;
            mpfr_init2(t, prec());
            mpfr_sqr(r.hi_, lo_, MPFR_RNDU);
            mpfr_sqr(t, hi_, MPFR_RNDU);
            mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
            mpfr_clear(t);
        }
        return r;
    }

    /// Square root of the enclosure intersected with [0, inf). The upper
    /// endpoint must be nonnegative.
    PreciseReal sqrt() const {
        if (mpfr_sgn(hi_) < 0)
            throw Error(ErrorCode::invalid_argument, "sqrt of a negative enclosure");
        PreciseReal r(prec());
        if (mpfr_sgn(lo_) <= 0)
            mpfr_set_zero(r.lo_, 1);
        else
            mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
        mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
        return r;
    }

    /// LESS/GREATER when the enclosures are disjoint, UNDECIDED otherwise.
    Order compare(const PreciseReal& o) const {
        if (mpfr_cmp(hi_, o.lo_) < 0) return Order::less;
        if (mpfr_cmp(lo_, o.hi_) > 0) return Order::greater;
        return Order::undecided;
    }

    /// Sign if certain: -1, 0 (exact zero), +1; nullopt when the enclosure
    /// straddles zero with nonzero width.
    std::optional<int> certified_sign() const {
        int sl = mpfr_sgn(lo_), sh = mpfr_sgn(hi_);
        if (sl > 0) return 1;
        if (sh < 0) return -1;
        if (sl == 0 && sh == 0) return 0;
        return std::nullopt;
    }

    bool contains(const mpq_class& q) const {
        return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
    }

    Order compare_rational(const mpq_class& q) const {
        if (mpfr_cmp_q(hi_, q.get_mpq_t()) < 0) return Order::less;
        if (mpfr_cmp_q(lo_, q.get_mpq_t()) > 0) return Order::greater;
        return Order::undecided;
    }

    bool is_point() const { return mpfr_cmp(lo_, hi_) == 0; }

    static PreciseReal hull(const PreciseReal& a, const PreciseReal& b) {
        PreciseReal r(std::max(a.prec(), b.prec()));
        mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
        mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
        return r;
    }

    /// Exact rational value of an endpoint (every finite MPFR number is a
    /// binary rational).
    mpq_class lower_rational() const { return rational_of(lo_); }
    mpq_class upper_rational() const { return rational_of(hi_); }

    mpz_class floor_lower() const {
        mpfr_t t;
        mpfr_init2(t, std::max<mpfr_prec_t>(mpfr_get_prec(lo_), 64));
        mpfr_floor(t, lo_);
        mpz_class z;
        mpfr_get_z(z.get_mpz_t(), t, MPFR_RNDZ);
        mpfr_clear(t);
        return z;
    }

    mpz_class floor_upper() const {
        mpfr_t t;
        mpfr_init2(t, std::max<mpfr_prec_t>(mpfr_get_prec(hi_), 64));
        mpfr_floor(t, hi_);
        mpz_class z;
        mpfr_get_z(z.get_mpz_t(), t, MPFR_RNDZ);
        mpfr_clear(t);
        return z;
    }

    PreciseReal midpoint() const {
        PreciseReal r(prec());
        mpfr_add(r.lo_, lo_, hi_, MPFR_RNDD);
        mpfr_div_2ui(r.lo_, r.lo_, 1, MPFR_RNDD);
        mpfr_add(r.hi_, lo_, hi_, MPFR_RNDU);
        mpfr_div_2ui(r.hi_, r.hi_, 1, MPFR_RNDU);
        return r;
    }

    PreciseReal radius() const {
        PreciseReal r(prec());
        mpfr_sub(r.lo_, hi_, lo_, MPFR_RNDD);
        mpfr_div_2ui(r.lo_, r.lo_, 1, MPFR_RNDD);
        mpfr_sub(r.hi_, hi_, lo_, MPFR_RNDU);
        mpfr_div_2ui(r.hi_, r.hi_, 1, MPFR_RNDU);
        if (mpfr_sgn(r.lo_) < 0) mpfr_set_zero(r.lo_, 1);
        return r;
    }

    /// Midpoint printed with `digits` significant decimal digits. Stable
    /// across runs for identical inputs and precision.
    std::string decimal(int digits = 12) const {
        mpfr_t mid;
        mpfr_init2(mid, prec());
        mpfr_add(mid, lo_, hi_, MPFR_RNDN);
        mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
        char* s = nullptr;
        mpfr_asprintf(&s, "%.*Rg", digits, mid);
        std::string out(s);
        mpfr_free_str(s);
        mpfr_clear(mid);
        return out;
    }

private:
    static mpq_class rational_of(mpfr_srcptr x) {
        mpq_class q;
        mpfr_get_q(q.get_mpq_t(), x);
        return q;
    }

    mpfr_t lo_, hi_;
};

} // namespace slopebound
