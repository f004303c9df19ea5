#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>
#include <variant>
#include <vector>

#include "slopebound/lattice.hpp"
#include "slopebound/surd.hpp"

namespace slopebound {

enum class RadiusMode { two_pi, six };

inline const char* radius_mode_name(RadiusMode m) {
    return m == RadiusMode::two_pi ? "2pi" : "6";
}

/// Parameters of one count: disk radius 2*g*pi/d (or 6*g/d in the alternate
/// mode) over the normalized lattice family e1 = d(1,0), e2 = d(x, sqrt3).
struct CountSpec {
    mpq_class g = 1;
    mpq_class d = 1;
    RadiusMode mode = RadiusMode::two_pi;
    Precision prec = {};

    void validate() const {
        if (g < 0) throw Error(ErrorCode::invalid_argument, "g must be nonnegative");
        if (d < 1) throw Error(ErrorCode::invalid_argument, "d must be at least 1");
        if (prec.bits < 8 || prec.max_bits < prec.bits)
            throw Error(ErrorCode::invalid_argument, "bad precision policy");
    }

    /// two_pi mode: squared radius is pi2_coeff() * pi^2.
    mpq_class pi2_coeff() const { return 4 * g * g / (d * d); }
    /// six mode: squared radius exactly.
    mpq_class radius_sq_rational() const { return 36 * g * g / (d * d); }
};

/// A raw (unhalved) pair count. lo == hi unless the threshold floor stayed
/// undecided at the precision cap.
struct RawCount {
    long long lo = 0;
    long long hi = 0;

    bool certified() const { return lo == hi; }
};

namespace detail {

inline long long isqrt_ll(long long n) {
    if (n < 0) return -1;
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

inline long long floor_div_ll(long long num, long long den) {
    long long q = num / den;
    return (num % den != 0 && (num < 0) != (den < 0)) ? q - 1 : q;
}

inline long long ceil_div_ll(long long num, long long den) {
    return -floor_div_ll(-num, den);
}

/// #{(a,b): gcd(|a|,|b|) = 1, (a q + b p)^2 + 3 b^2 q^2 <= K} for x = p/q.
/// Row ranges are exact, so only the gcd filter runs per candidate.
inline long long coprime_count_i64(long long p, long long q, long long K) {
    long long total = 0;
    if (q * q <= K) total += 2; // (1,0) and (-1,0)
    for (long long b = 1;; ++b) {
        __int128 row_min = static_cast<__int128>(3) * b * b * q * q;
        if (row_min > K) break;
        long long m = isqrt_ll(K - static_cast<long long>(row_min));
        long long bp = b * p;
        long long a_lo = ceil_div_ll(-m - bp, q);
        long long a_hi = floor_div_ll(m - bp, q);
        long long row = 0;
        for (long long a = a_lo; a <= a_hi; ++a)
            if (std::gcd(a < 0 ? -a : a, b) == 1) ++row;
        total += 2 * row; // rows b and -b mirror each other
    }
    return total;
}

inline long long coprime_count_mpz(const mpz_class& p, const mpz_class& q, const mpz_class& K) {
    long long total = 0;
    if (q * q <= K) total += 2;
    for (mpz_class b = 1;; ++b) {
        mpz_class row_min = 3 * b * b * q * q;
        if (row_min > K) break;
        mpz_class m;
        mpz_class slack = K - row_min;
        mpz_sqrt(m.get_mpz_t(), slack.get_mpz_t());
        mpz_class bp = b * p;
        mpz_class a_lo = ceil_q(mpq_class(-m - bp, q));
        mpz_class a_hi = floor_q(mpq_class(m - bp, q));
        long long row = 0;
        for (mpz_class a = a_lo; a <= a_hi; ++a) {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            if (g == 1) ++row;
        }
        total += 2 * row;
    }
    return total;
}

inline long long coprime_count(const mpz_class& p, const mpz_class& q, const mpz_class& K) {
    static const mpz_class k_max_fast = (mpz_class(1) << 62);
    if (K <= k_max_fast && q <= (1 << 30) && p.fits_slong_p())
        return coprime_count_i64(mpz_get_si(p.get_mpz_t()), mpz_get_si(q.get_mpz_t()),
                                 K < 0 ? -1 : mpz_get_si(K.get_mpz_t()));
    return coprime_count_mpz(p, q, K);
}

struct ThresholdFloor {
    mpz_class lo, hi;
    bool certified;
};

/// floor(q^2 R^2). In two_pi mode the value is an irrational multiple of
/// pi^2, so refinement either pins the floor or hits the cap; in six mode the
/// floor is exact rational arithmetic (boundary pairs included by <=).
inline ThresholdFloor threshold_floor(const CountSpec& spec, const mpz_class& q) {
    mpq_class q2(q * q);
    if (spec.mode == RadiusMode::six) {
        mpz_class k = floor_q(spec.radius_sq_rational() * q2);
        return {k, k, true};
    }
    mpq_class c = spec.pi2_coeff() * q2;
    if (c == 0) return {0, 0, true};
    for (mpfr_prec_t p = spec.prec.bits;; p = spec.prec.next(p)) {
        PreciseReal t = PreciseReal::from_rational(c, p) * PreciseReal::pi(p).squared();
        mpz_class flo = t.floor_lower(), fhi = t.floor_upper();
        if (flo == fhi) return {flo, flo, true};
        if (p >= spec.prec.max_bits) return {flo, fhi, false};
    }
}

template <class F>
inline mpz_class floor_refine(F&& enclosure_at, const Precision& prec, const char* what) {
    for (mpfr_prec_t p = std::max<mpfr_prec_t>(prec.bits, 64);; p = prec.next(p)) {
        PreciseReal e = enclosure_at(p);
        mpz_class flo = e.floor_lower(), fhi = e.floor_upper();
        if (flo == fhi) return flo;
        if (p >= prec.max_bits) throw Error(ErrorCode::precision_exhausted, what);
    }
}

} // namespace detail

/// Raw coprime-pair count of the closed disk at rational x in [0, 1/2].
inline RawCount count_at(const CountSpec& spec, const mpq_class& x) {
    spec.validate();
    if (x < 0 || x > mpq_class(1, 2))
        throw Error(ErrorCode::invalid_argument, "x outside [0, 1/2]");
    mpq_class xc = x;
    xc.canonicalize();
    auto k = detail::threshold_floor(spec, xc.get_den());
    long long lo = detail::coprime_count(xc.get_num(), xc.get_den(), k.lo);
    long long hi = k.certified ? lo : detail::coprime_count(xc.get_num(), xc.get_den(), k.hi);
    return {lo, hi};
}

enum class Crossing { enter, leave };

struct BreakpointGenerator {
    IntVector v;
    Crossing crossing; // membership change of v as x increases through the breakpoint
};

struct Breakpoint {
    PreciseReal x_enclosure;
    std::vector<BreakpointGenerator> generators; // both members of each +- pair, (b, a) order
};

namespace detail {

/// Exact location of one circle crossing x = (-a + sign*s)/b with b > 0 and
/// s = sqrt(R^2 - 3 b^2). In two_pi mode s is transcendental and the root is
/// handled purely by enclosures (distinct roots always separate); in six mode
/// the root is an exact quadratic surd.
struct RootX {
    bool transcendental = false;
    mpq_class c; // R^2 = c * pi^2 (two_pi)
    long long a = 0, b = 1;
    int sign = 1;
    QuadSurd surd; // six

    static RootX pi_root(const mpq_class& c, long long a, long long b, int sign) {
        RootX r;
        r.transcendental = true;
        r.c = c;
        r.a = a;
        r.b = b;
        r.sign = sign;
        return r;
    }

    static RootX six_root(long long a, long long b, int sign, const mpq_class& disc) {
        RootX r;
        r.a = a;
        r.b = b;
        r.sign = sign;
        mpq_class shift(-a, b);
        shift.canonicalize();
        r.surd = QuadSurd::make(shift, mpq_class(sign, b), disc);
        return r;
    }

    PreciseReal enclosure(mpfr_prec_t prec) const {
        if (!transcendental) return surd.enclosure(prec);
        PreciseReal s = (PreciseReal::from_rational(c, prec) * PreciseReal::pi(prec).squared() -
                         PreciseReal::from_rational(mpq_class(3 * mpz_class(b) * b), prec))
                            .sqrt();
        PreciseReal num = PreciseReal::from_long(-a, prec) + (sign > 0 ? s : -s);
        return num / PreciseReal::from_long(b, prec);
    }
};

struct SweepEvent {
    long long a, b; // generator pair, b > 0 (the mirror (-a,-b) crosses identically)
    Crossing crossing;
    RootX x;
};

/// All circle-crossing events of coprime pairs over x in the closed [0, 1/2].
inline std::vector<SweepEvent> generate_events(const CountSpec& spec) {
    std::vector<SweepEvent> events;
    if (spec.g == 0) return events;
    const bool six = spec.mode == RadiusMode::six;
    const mpq_class r2_rational = six ? spec.radius_sq_rational() : mpq_class(0);
    const mpq_class pi_coeff = six ? mpq_class(0) : spec.pi2_coeff();

    for (long long b = 1;; ++b) {
        mpq_class row(3 * mpz_class(b) * b);
        mpq_class disc_rational;
        if (six) {
            disc_rational = r2_rational - row;
            int s = sgn(disc_rational);
            if (s < 0) break;
            // s == 0 cannot happen: 12 g^2 = (b d)^2 has no rational solution.
            if (s == 0)
                throw std::logic_error("tangent row in six mode");
        } else {
            if (cmp_alg_vs_pi2(AlgReal(row), pi_coeff, spec.prec) > 0) break;
        }

        std::optional<mpq_class> s_rational =
            six ? try_sqrt_q(disc_rational) : std::nullopt;

        for (int sign : {+1, -1}) {
            // a ranges over [sign*s - b/2, sign*s], endpoints included.
            mpz_class a_hi, a_lo;
            if (s_rational) {
                mpq_class s_signed = (sign > 0) ? *s_rational : mpq_class(-*s_rational);
                a_hi = floor_q(s_signed);
                a_lo = ceil_q(s_signed - mpq_class(b, 2));
            } else {
                auto s_enc = [&](mpfr_prec_t p) {
                    PreciseReal rsq = six
                        ? PreciseReal::from_rational(r2_rational, p)
                        : PreciseReal::from_rational(pi_coeff, p) * PreciseReal::pi(p).squared();
                    PreciseReal s = (rsq - PreciseReal::from_rational(row, p)).sqrt();
                    return sign > 0 ? s : -s;
                };
                // sign*s and sign*s - b/2 are irrational here, so the floors refine.
                a_hi = floor_refine(s_enc, spec.prec, "breakpoint row bound");
                a_lo = floor_refine(
                           [&](mpfr_prec_t p) {
                               return s_enc(p) -
                                      PreciseReal::from_rational(mpq_class(b, 2), p);
                           },
                           spec.prec, "breakpoint row bound") +
                       1;
            }
            if (!a_lo.fits_slong_p() || !a_hi.fits_slong_p())
                throw Error(ErrorCode::invalid_argument, "breakpoint range too large");
            for (long long a = mpz_get_si(a_lo.get_mpz_t());
                 a <= mpz_get_si(a_hi.get_mpz_t()); ++a) {
                if (std::gcd(a < 0 ? -a : a, b) != 1) continue;
                Crossing crossing = (sign > 0) ? Crossing::leave : Crossing::enter;
                RootX x = six ? RootX::six_root(a, b, sign, disc_rational)
                              : RootX::pi_root(pi_coeff, a, b, sign);
                events.push_back({a, b, crossing, std::move(x)});
            }
        }
    }
    return events;
}

struct MergedBreakpoint {
    std::vector<SweepEvent> events;
    PreciseReal enc;
    long long enter_pairs = 0;
    long long leave_pairs = 0;
    bool at_zero = false;
    bool at_half = false;
};

inline bool event_key_less(const SweepEvent& u, const SweepEvent& v) {
    if (u.b != v.b) return u.b < v.b;
    if (u.a != v.a) return u.a < v.a;
    return static_cast<int>(u.crossing) < static_cast<int>(v.crossing);
}

/// Sorts events by breakpoint position and groups coincident ones. Exact in
/// six mode. In two_pi mode coincidences are impossible, so enclosures are
/// refined until adjacent roots separate; only cap exhaustion merges, and
/// that clears the certified flag.
inline std::pair<std::vector<MergedBreakpoint>, bool>
merge_events(std::vector<SweepEvent> events, const CountSpec& spec) {
    std::vector<MergedBreakpoint> merged;
    bool certified = true;
    if (events.empty()) return {std::move(merged), certified};

    const mpq_class half(1, 2);
    if (spec.mode == RadiusMode::six) {
        std::sort(events.begin(), events.end(), [](const SweepEvent& u, const SweepEvent& v) {
            int c = u.x.surd.cmp(v.x.surd);
            if (c != 0) return c < 0;
            return event_key_less(u, v);
        });
        for (auto& ev : events) {
            if (merged.empty() || merged.back().events.front().x.surd.cmp(ev.x.surd) != 0) {
                MergedBreakpoint bp;
                bp.enc = ev.x.surd.enclosure(spec.prec.bits);
                bp.at_zero = ev.x.surd.cmp_rational(0) == 0;
                bp.at_half = ev.x.surd.cmp_rational(half) == 0;
                merged.push_back(std::move(bp));
            }
            merged.back().events.push_back(ev);
        }
    } else {
        mpfr_prec_t p = spec.prec.bits;
        std::vector<PreciseReal> encs;
        while (true) {
            encs.clear();
            encs.reserve(events.size());
            for (const auto& ev : events) encs.push_back(ev.x.enclosure(p));
            std::vector<std::size_t> order(events.size());
            for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
            std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
                mpq_class li = encs[i].lower_rational(), lj = encs[j].lower_rational();
                if (li != lj) return li < lj;
                return event_key_less(events[i], events[j]);
            });
            bool separated = true;
            for (std::size_t i = 0; i + 1 < order.size() && separated; ++i)
                if (encs[order[i]].compare(encs[order[i + 1]]) != Order::less)
                    separated = false;
            if (separated || p >= spec.prec.max_bits) {
                if (!separated) certified = false;
                for (std::size_t idx : order) {
                    bool coincident = !merged.empty() && !separated &&
                                      merged.back().enc.compare(encs[idx]) == Order::undecided;
                    if (merged.empty() || (separated || !coincident)) {
                        MergedBreakpoint bp;
                        bp.enc = encs[idx];
                        merged.push_back(std::move(bp));
                    } else {
                        merged.back().enc = PreciseReal::hull(merged.back().enc, encs[idx]);
                    }
                    merged.back().events.push_back(events[idx]);
                }
                break;
            }
            p = spec.prec.next(p);
        }
    }

    for (auto& bp : merged) {
        std::sort(bp.events.begin(), bp.events.end(), event_key_less);
        for (const auto& ev : bp.events)
            (ev.crossing == Crossing::enter ? bp.enter_pairs : bp.leave_pairs) += 1;
    }
    return {std::move(merged), certified};
}

/// Widens precision until interior breakpoints are certified away from the
/// sweep endpoints 0 and 1/2 (needed to pick rational samples in the first
/// and last gaps). No-op in six mode, where endpoint hits are exact.
inline void separate_from_endpoints(std::vector<MergedBreakpoint>& merged,
                                    const CountSpec& spec, bool& certified) {
    const mpq_class half(1, 2);
    for (auto& bp : merged) {
        if (bp.at_zero || bp.at_half) continue;
        mpfr_prec_t p = spec.prec.bits;
        while ((bp.enc.contains(0) || bp.enc.contains(half))) {
            if (p >= spec.prec.max_bits) {
                certified = false;
                break;
            }
            p = spec.prec.next(p);
            PreciseReal widest = bp.events.front().x.enclosure(p);
            for (std::size_t i = 1; i < bp.events.size(); ++i)
                widest = PreciseReal::hull(widest, bp.events[i].x.enclosure(p));
            bp.enc = widest;
        }
    }
}

} // namespace detail

/// The finite set of x values in [0, 1/2] where the coprime count changes,
/// with the pairs whose circle crossing creates each one.
inline std::vector<Breakpoint> breakpoints(const CountSpec& spec) {
    spec.validate();
    auto [merged, certified] = detail::merge_events(detail::generate_events(spec), spec);
    (void)certified;
    std::vector<Breakpoint> out;
    out.reserve(merged.size());
    for (const auto& bp : merged) {
        Breakpoint b;
        b.x_enclosure = bp.enc;
        for (const auto& ev : bp.events) {
            b.generators.push_back({{ev.a, ev.b}, ev.crossing});
            b.generators.push_back({{-ev.a, -ev.b}, ev.crossing});
        }
        std::sort(b.generators.begin(), b.generators.end(),
                  [](const BreakpointGenerator& u, const BreakpointGenerator& v) {
                      return u.v < v.v;
                  });
        out.push_back(std::move(b));
    }
    return out;
}

/// Certified sweep result. Values are halved counts; value_lo == value_hi
/// exactly when every comparison resolved below the precision cap.
struct CountResult {
    long long value_lo = 0;
    long long value_hi = 0;
    PreciseReal witness_x;
    long long breakpoint_count = 0;
    long long samples_evaluated = 0;
    bool certified = true;
};

/// Full sweep diagnostics, raw (unhalved) counts throughout.
struct SweepReport {
    CountResult result;
    std::vector<Breakpoint> breakpoints;
    RawCount raw_at_zero, raw_at_half;
    std::vector<RawCount> raw_intervals;   // open gaps, left to right
    std::vector<RawCount> raw_breakpoints; // closed count at each breakpoint
    long long entering_points = 0;         // lattice points, both +- members
    long long leaving_points = 0;
    mpq_class witness_rational;
    bool witness_is_rational = false;

    /// Distinct raw values attained over the closed sweep domain.
    std::set<long long> raw_value_set() const {
        std::set<long long> s;
        s.insert(raw_at_zero.lo);
        s.insert(raw_at_half.lo);
        for (const auto& c : raw_intervals) s.insert(c.lo);
        for (const auto& c : raw_breakpoints) s.insert(c.lo);
        return s;
    }
};

/// N(g,d): half the maximum coprime count over the sweep. The maximum is
/// taken over the endpoint lattices and the locally constant gap values; a
/// closed count is still reported for every breakpoint, where simultaneous
/// crossings can momentarily exceed the neighboring gaps.
inline SweepReport n_gd_report(const CountSpec& spec) {
    spec.validate();
    SweepReport rep;
    auto [merged, merge_certified] =
        detail::merge_events(detail::generate_events(spec), spec);
    bool certified = merge_certified;
    detail::separate_from_endpoints(merged, spec, certified);

    rep.raw_at_zero = count_at(spec, 0);
    rep.raw_at_half = count_at(spec, mpq_class(1, 2));
    certified = certified && rep.raw_at_zero.certified() && rep.raw_at_half.certified();

    // Interval values by prefix sums over crossing events.
    long long cur_lo = rep.raw_at_zero.lo;
    long long cur_hi = rep.raw_at_zero.hi;
    std::vector<std::pair<mpq_class, mpq_class>> gap_bounds; // rational bounds per gap
    mpq_class left_bound(0);
    const mpq_class half(1, 2);

    for (std::size_t i = 0; i < merged.size(); ++i) {
        const auto& bp = merged[i];
        if (bp.at_zero) {
            rep.raw_breakpoints.push_back(rep.raw_at_zero);
            cur_lo -= 2 * bp.leave_pairs;
            cur_hi -= 2 * bp.leave_pairs;
            continue;
        }
        if (bp.at_half) {
            rep.raw_intervals.push_back({cur_lo, cur_hi});
            gap_bounds.emplace_back(left_bound, half);
            rep.raw_breakpoints.push_back(rep.raw_at_half);
            if (certified && rep.raw_at_half.lo != cur_lo + 2 * bp.enter_pairs)
                throw std::logic_error("sweep inconsistent at x = 1/2");
            cur_lo += 2 * (bp.enter_pairs - bp.leave_pairs);
            cur_hi += 2 * (bp.enter_pairs - bp.leave_pairs);
            left_bound = half; // no further gaps
            continue;
        }
        rep.raw_intervals.push_back({cur_lo, cur_hi});
        gap_bounds.emplace_back(left_bound, bp.enc.lower_rational());
        rep.raw_breakpoints.push_back(
            {cur_lo + 2 * bp.enter_pairs, cur_hi + 2 * bp.enter_pairs});
        cur_lo += 2 * (bp.enter_pairs - bp.leave_pairs);
        cur_hi += 2 * (bp.enter_pairs - bp.leave_pairs);
        left_bound = bp.enc.upper_rational();
    }
    if (left_bound != half) {
        rep.raw_intervals.push_back({cur_lo, cur_hi});
        gap_bounds.emplace_back(left_bound, half);
        if (certified && rep.raw_at_half.lo != cur_lo)
            throw std::logic_error("sweep inconsistent at x = 1/2");
    }

    for (const auto& bp : merged) {
        rep.entering_points += 2 * bp.enter_pairs;
        rep.leaving_points += 2 * bp.leave_pairs;
    }
    rep.breakpoints = [&] {
        std::vector<Breakpoint> out;
        for (const auto& bp : merged) {
            Breakpoint b;
            b.x_enclosure = bp.enc;
            for (const auto& ev : bp.events) {
                b.generators.push_back({{ev.a, ev.b}, ev.crossing});
                b.generators.push_back({{-ev.a, -ev.b}, ev.crossing});
            }
            std::sort(b.generators.begin(), b.generators.end(),
                      [](const BreakpointGenerator& u, const BreakpointGenerator& v) {
                          return u.v < v.v;
                      });
            out.push_back(std::move(b));
        }
        return out;
    }();

    // Maximize over endpoints and gaps.
    long long best_lo = std::max(rep.raw_at_zero.lo, rep.raw_at_half.lo);
    long long best_hi = std::max(rep.raw_at_zero.hi, rep.raw_at_half.hi);
    for (const auto& c : rep.raw_intervals) {
        best_lo = std::max(best_lo, c.lo);
        best_hi = std::max(best_hi, c.hi);
    }

    // Witness: prefer x = 0, then x = 1/2, then the leftmost attaining gap.
    if (rep.raw_at_zero.hi == best_hi) {
        rep.witness_rational = 0;
        rep.witness_is_rational = true;
    } else if (rep.raw_at_half.hi == best_hi) {
        rep.witness_rational = half;
        rep.witness_is_rational = true;
    } else {
        for (std::size_t i = 0; i < rep.raw_intervals.size(); ++i) {
            if (rep.raw_intervals[i].hi != best_hi) continue;
            const auto& [glo, ghi] = gap_bounds[i];
            if (glo < ghi) {
                rep.witness_rational = simplest_between(glo, ghi);
                rep.witness_is_rational = true;
            }
            break;
        }
    }

    if (certified && rep.witness_is_rational) {
        RawCount check = count_at(spec, rep.witness_rational);
        if (check.lo != best_lo)
            throw std::logic_error("sweep witness disagrees with direct count");
    }
    if (certified && (best_lo % 2 != 0 || best_lo != best_hi))
        throw std::logic_error("sweep produced an odd or split certified count");

    rep.result.value_lo = best_lo / 2;
    rep.result.value_hi = (best_hi + 1) / 2;
    rep.result.certified = certified;
    rep.result.breakpoint_count = static_cast<long long>(merged.size());
    rep.result.samples_evaluated =
        2 + static_cast<long long>(merged.size()) +
        static_cast<long long>(rep.raw_intervals.size());
    rep.result.witness_x = rep.witness_is_rational
        ? PreciseReal::from_rational(rep.witness_rational, spec.prec.bits)
        : (merged.empty() ? PreciseReal::from_long(0, spec.prec.bits)
                          : merged.front().enc);
    return rep;
}

inline CountResult n_gd(const CountSpec& spec) { return n_gd_report(spec).result; }

/// Grid oracle: evaluates count_at on the uniform rational grid i/(2*grid),
/// i = 0..grid, and returns half the maximum. Always a lower bound for the
/// sweep value; equal once the grid is finer than the minimal gap.
inline long long n_gd_oracle(const CountSpec& spec, long long grid_size) {
    spec.validate();
    if (grid_size < 2)
        throw Error(ErrorCode::invalid_argument, "grid_size must be at least 2");
    long long best = 0;
    for (long long i = 0; i <= grid_size; ++i) {
        mpq_class x(i, 2 * grid_size);
        x.canonicalize();
        best = std::max(best, count_at(spec, x).lo);
    }
    return best / 2;
}

/// Quadratic envelope 4*sqrt(3)*(g + 1/2)^2*pi.
inline PreciseReal envelope(const mpq_class& g, mpfr_prec_t prec = 128) {
    if (g <= 0) throw Error(ErrorCode::invalid_argument, "g must be positive");
    PreciseReal gp = PreciseReal::from_rational(g + mpq_class(1, 2), prec);
    return PreciseReal::from_long(4, prec) * PreciseReal::sqrt3(prec) * gp.squared() *
           PreciseReal::pi(prec);
}

/// Fraction of coprime pairs among nonzero integer pairs in the closed disk
/// of the given radius. Tends to 6/pi^2.
inline mpq_class coprime_density(long long radius) {
    if (radius < 1) throw Error(ErrorCode::invalid_argument, "radius must be >= 1");
    const long long r_sq = radius * radius;
    long long coprime = 0, total = 0;
    for (long long r = -radius; r <= radius; ++r) {
        long long s_max = detail::isqrt_ll(r_sq - r * r);
        for (long long s = -s_max; s <= s_max; ++s) {
            if (r == 0 && s == 0) continue;
            ++total;
            if (std::gcd(r < 0 ? -r : r, s < 0 ? -s : s) == 1) ++coprime;
        }
    }
    return mpq_class(coprime, total);
}

} // namespace slopebound
