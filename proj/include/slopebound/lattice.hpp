#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <numeric>
#include <variant>
#include <vector>

#include "slopebound/qfield.hpp"

namespace slopebound {

struct IntVector {
    long long a = 0;
    long long b = 0;

    friend bool operator==(const IntVector&, const IntVector&) = default;
    friend bool operator<(const IntVector& u, const IntVector& v) {
        return u.b != v.b ? u.b < v.b : u.a < v.a;
    }
};

/// gcd convention: gcd(n, 0) = |n|, so (1,0) and (0,-1) are primitive.
inline bool is_primitive(const IntVector& v) {
    if (v.a == 0 && v.b == 0)
        throw Error(ErrorCode::zero_vector, "(0,0) has no primitivity");
    return std::gcd(std::llabs(v.a), std::llabs(v.b)) == 1;
}

struct Vec2 {
    AlgReal x, y;

    friend Vec2 operator+(const Vec2& u, const Vec2& v) { return {u.x + v.x, u.y + v.y}; }
    friend Vec2 operator-(const Vec2& u, const Vec2& v) { return {u.x - v.x, u.y - v.y}; }
    friend Vec2 operator-(const Vec2& u) { return {-u.x, -u.y}; }

    Vec2 scaled(const AlgReal& c) const { return {c * x, c * y}; }
    AlgReal norm_sq() const { return x * x + y * y; }
};

inline AlgReal dot(const Vec2& u, const Vec2& v) { return u.x * v.x + u.y * v.y; }
inline AlgReal det(const Vec2& u, const Vec2& v) { return u.x * v.y - u.y * v.x; }

/// A plane lattice basis with coordinates in Q(sqrt3). Exact entries keep
/// every reduction comparison decidable.
struct LatticeBasis {
    Vec2 e1, e2;

    AlgReal determinant() const { return det(e1, e2); }
    AlgReal area() const { return determinant().abs(); }
};

/// Gauss/Lagrange reduction. Output spans the same lattice with
/// |e1| <= |e2| <= |e1 +- e2| and dot(e1, e2) >= 0, so e1 is a shortest
/// nonzero vector and the basis angle lies in [pi/3, pi/2].
inline LatticeBasis reduce(const LatticeBasis& basis) {
    if (basis.determinant().is_zero())
        throw Error(ErrorCode::degenerate_basis, "basis vectors are dependent");
    Vec2 u = basis.e1, v = basis.e2;
    while (true) {
        if ((u.norm_sq() - v.norm_sq()).sign() > 0) std::swap(u, v);
        mpz_class mu = round_alg(dot(u, v) / u.norm_sq());
        if (mu != 0) v = v - u.scaled(AlgReal(mpq_class(mu)));
        if ((v.norm_sq() - u.norm_sq()).sign() >= 0) break;
    }
    if (dot(u, v).sign() < 0) v = -v;
    return {u, v};
}

inline bool is_reduced(const LatticeBasis& b) {
    AlgReal n1 = b.e1.norm_sq(), n2 = b.e2.norm_sq();
    if ((n2 - n1).sign() < 0) return false;
    AlgReal d = dot(b.e1, b.e2);
    // size-reduced: |dot| <= |e1|^2 / 2, equivalent to |e2 +- e1| >= |e2|
    return (d + d).abs() <= n1;
}

/// Certificate for the reduced-basis diameter bound: |e1| + |e2| < 3 A^2
/// whenever |e1| >= 1 and sqrt(3) A^2 = area with A >= |e1|. Exact: compares
/// (l1 + l2)^2 against 9 A^4 inside Q(sqrt3).
inline bool diameter_certificate(const LatticeBasis& reduced) {
    AlgReal n1 = reduced.e1.norm_sq();
    AlgReal n2 = reduced.e2.norm_sq();
    AlgReal area = reduced.area();
    // A^2 = area / sqrt(3) = area * sqrt(3) / 3
    AlgReal a_sq = area * AlgReal(mpq_class(0), mpq_class(1, 3));
    AlgReal rhs_sq = AlgReal(9) * a_sq * a_sq;
    // (l1 + l2)^2 = n1 + n2 + 2 sqrt(n1 n2) < rhs_sq
    AlgReal rest = rhs_sq - n1 - n2;
    if (rest.sign() <= 0) return false;
    return (AlgReal(4) * n1 * n2 - rest * rest).sign() < 0;
}

/// Canonical frame of a reduced basis: e1 -> d(1,0), e2 -> d(x,y) with
/// 0 <= x <= 1/2 and y > 0. d is kept as the exact squared length; x and y
/// stay in Q(sqrt3).
struct NormalizedBasis {
    AlgReal d_sq;
    AlgReal x;
    AlgReal y;

    /// Builds the frame directly from (d, x, y) tokens.
    static NormalizedBasis from_dxy(const AlgReal& d, const AlgReal& x, const AlgReal& y) {
        NormalizedBasis n{d * d, x, y};
        n.validate();
        return n;
    }

    void validate() const {
        if (d_sq.sign() <= 0 || y.sign() <= 0)
            throw Error(ErrorCode::degenerate_basis, "normalized basis needs d > 0, y > 0");
        if (x.sign() < 0 || (x - AlgReal(mpq_class(1, 2))).sign() > 0)
            throw Error(ErrorCode::invalid_argument, "normalized x outside [0, 1/2]");
    }

    PreciseReal d(mpfr_prec_t prec) const { return d_sq.enclosure(prec).sqrt(); }

    /// Exact d when the squared length is a perfect square in Q(sqrt3).
    std::optional<AlgReal> d_exact() const { return try_sqrt_alg(d_sq); }

    AlgReal area() const { return d_sq * y; }

    bool satisfies_min_area() const {
        // area >= d^2 sqrt(3), i.e. y >= sqrt(3)
        return (y - AlgReal::sqrt3_times(1)).sign() >= 0;
    }

    /// Squared length of a*e1' + b*e2' as an exact field element.
    AlgReal vector_norm_sq(long long a, long long b) const {
        AlgReal ax = AlgReal(mpq_class(a)) + AlgReal(mpq_class(b)) * x;
        AlgReal by = AlgReal(mpq_class(b)) * y;
        return d_sq * (ax * ax + by * by);
    }
};

/// Rotates/reflects a reduced basis into the canonical frame. The lattice is
/// congruent to the input; x = dot(e1,e2)/|e1|^2 and y = |det|/|e1|^2.
inline NormalizedBasis normalize(const LatticeBasis& reduced) {
    if (!is_reduced(reduced))
        throw Error(ErrorCode::invalid_argument, "normalize requires a reduced basis");
    AlgReal n1 = reduced.e1.norm_sq();
    if (n1.sign() <= 0)
        throw Error(ErrorCode::degenerate_basis, "zero basis vector");
    NormalizedBasis n{n1, dot(reduced.e1, reduced.e2) / n1, reduced.area() / n1};
    n.validate();
    return n;
}

/// Enumeration length limit: either an exact Q(sqrt3) length or a rational
/// multiple of pi (which never ties against exact squared lengths).
struct PiMultiple {
    mpq_class coeff; // length = coeff * pi
};
using LengthLimit = std::variant<AlgReal, PiMultiple>;

namespace detail {

/// Compares an exact field element against coeff^2 * pi^2 by refinement.
/// Equality is impossible: a nonzero rational multiple of pi^2 is never in
/// Q(sqrt3), and the left side vanishes only for the zero vector.
inline int cmp_alg_vs_pi2(const AlgReal& lhs, const mpq_class& coeff_sq,
                          const Precision& prec) {
    for (mpfr_prec_t p = prec.bits;; p = prec.next(p)) {
        PreciseReal rhs = PreciseReal::from_rational(coeff_sq, p) *
                          PreciseReal::pi(p).squared();
        Order ord = lhs.enclosure(p).compare(rhs);
        if (ord == Order::less) return -1;
        if (ord == Order::greater) return 1;
        if (p >= prec.max_bits)
            throw Error(ErrorCode::precision_exhausted,
                        "length comparison undecided at max precision");
    }
}

inline int cmp_norm_vs_limit_sq(const AlgReal& norm_sq, const LengthLimit& limit,
                                const Precision& prec) {
    if (const auto* exact = std::get_if<AlgReal>(&limit)) {
        return (norm_sq - *exact * *exact).sign();
    }
    const auto& pm = std::get<PiMultiple>(limit);
    if (pm.coeff == 0) return norm_sq.sign() > 0 ? 1 : 0;
    return cmp_alg_vs_pi2(norm_sq, pm.coeff * pm.coeff, prec);
}

} // namespace detail

/// All lattice vectors a*e1' + b*e2' with length <= Lmax (closed disk),
/// optionally restricted to primitive ones. Output sorted by (b, a).
inline std::vector<IntVector> enumerate_short(const NormalizedBasis& basis,
                                              const LengthLimit& max_length,
                                              bool primitive_only,
                                              const Precision& prec = {}) {
    if (const auto* exact = std::get_if<AlgReal>(&max_length)) {
        if (exact->sign() <= 0)
            throw Error(ErrorCode::invalid_argument, "max length must be positive");
    } else if (std::get<PiMultiple>(max_length).coeff <= 0) {
        throw Error(ErrorCode::invalid_argument, "max length must be positive");
    }

    std::vector<IntVector> out;
    // Enclosure of the admissible half-width in a for each b, generous by a
    // unit on both sides; membership of each candidate is decided exactly.
    mpfr_prec_t work = std::max<mpfr_prec_t>(prec.bits, 64);
    PreciseReal limit_sq = std::holds_alternative<AlgReal>(max_length)
        ? (std::get<AlgReal>(max_length) * std::get<AlgReal>(max_length)).enclosure(work)
        : PreciseReal::from_rational(std::get<PiMultiple>(max_length).coeff, work).squared() *
              PreciseReal::pi(work).squared();
    PreciseReal d_sq_enc = basis.d_sq.enclosure(work);
    PreciseReal y_enc = basis.y.enclosure(work);
    PreciseReal x_enc = basis.x.enclosure(work);

    for (long long b = 0;; ++b) {
        AlgReal by = AlgReal(mpq_class(b)) * basis.y;
        AlgReal row_min = basis.d_sq * by * by;
        if (b > 0 && detail::cmp_norm_vs_limit_sq(row_min, max_length, prec) > 0) break;

        PreciseReal half_sq = limit_sq / d_sq_enc -
                              (PreciseReal::from_long(b, work) * y_enc).squared();
        PreciseReal half = half_sq.compare_rational(0) == Order::less
                               ? PreciseReal::from_long(0, work)
                               : half_sq.sqrt();
        PreciseReal center = -(PreciseReal::from_long(b, work) * x_enc);
        mpz_class a_lo_z = (center - half).floor_lower() - 1;
        mpz_class a_hi_z = (center + half).floor_upper() + 1;
        if (!a_lo_z.fits_slong_p() || !a_hi_z.fits_slong_p())
            throw Error(ErrorCode::invalid_argument, "enumeration range too large");
        for (long long a = mpz_get_si(a_lo_z.get_mpz_t()); a <= mpz_get_si(a_hi_z.get_mpz_t()); ++a) {
            if (a == 0 && b == 0) continue;
            if (primitive_only && std::gcd(std::llabs(a), std::llabs(b)) != 1) continue;
            if (detail::cmp_norm_vs_limit_sq(basis.vector_norm_sq(a, b), max_length, prec) <= 0) {
                out.push_back({a, b});
                if (b != 0) out.push_back({-a, -b});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace slopebound
