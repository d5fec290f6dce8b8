#pragma once

#include "hypheron/errors.hpp"
#include "hypheron/gaussian.hpp"
#include "hypheron/rat.hpp"

#include <concepts>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace hypheron {

template <class F>
concept FieldElement = requires(F a, F b) {
    F(1);
    { a + b } -> std::convertible_to<F>;
    { a - b } -> std::convertible_to<F>;
    { a * b } -> std::convertible_to<F>;
    { a / b } -> std::convertible_to<F>;
    { -a } -> std::convertible_to<F>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
};

/// Affine point or the point at infinity.
template <FieldElement F> struct CurvePoint {
    bool infinity = true;
    F x{}, y{};

    CurvePoint() = default;
    CurvePoint(F px, F py) : infinity(false), x(std::move(px)), y(std::move(py)) {}
    static CurvePoint inf() { return {}; }

    friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
        if (a.infinity || b.infinity) return a.infinity == b.infinity;
        return a.x == b.x && a.y == b.y;
    }

    std::string str() const {
        if (infinity) return "inf";
        return "(" + x.str() + ", " + y.str() + ")";
    }
    friend std::ostream& operator<<(std::ostream& os, const CurvePoint& p) { return os << p.str(); }
};

/// y^2 = x^3 + a2 x^2 + a4 x + a6 over Q or Q(i); rejects singular models.
template <FieldElement F> class Curve {
  public:
    Curve(F a2, F a4, F a6)
        : a2_(std::move(a2)), a4_(std::move(a4)), a6_(std::move(a6)),
          disc_(cubic_disc_times_16(a2_, a4_, a6_)) {
        if (disc_.is_zero()) throw SingularCurve("curve has vanishing discriminant");
    }

    static Curve from_roots(const F& e1, const F& e2, const F& e3) {
        return Curve(-(e1 + e2 + e3), e1 * e2 + e1 * e3 + e2 * e3, -(e1 * e2 * e3));
    }

    const F& a2() const { return a2_; }
    const F& a4() const { return a4_; }
    const F& a6() const { return a6_; }

    /// 16 * disc(cubic); equals 16 prod (e_i - e_j)^2 for a split model.
    const F& discriminant() const { return disc_; }

    F rhs(const F& x) const { return ((x + a2_) * x + a4_) * x + a6_; }

    bool contains(const CurvePoint<F>& p) const {
        if (p.infinity) return true;
        return p.y * p.y == rhs(p.x);
    }

    CurvePoint<F> neg(const CurvePoint<F>& p) const {
        if (p.infinity) return p;
        return {p.x, -p.y};
    }

    CurvePoint<F> add(const CurvePoint<F>& p, const CurvePoint<F>& q) const {
        if (p.infinity) return q;
        if (q.infinity) return p;
        F lambda(0);
        if (p.x == q.x) {
            if (p.y == -q.y) return CurvePoint<F>::inf();   // vertical chord
            lambda = (F(3) * p.x * p.x + F(2) * a2_ * p.x + a4_) / (F(2) * p.y);
        } else {
            lambda = (q.y - p.y) / (q.x - p.x);
        }
        F x3 = lambda * lambda - a2_ - p.x - q.x;
        F y3 = lambda * (p.x - x3) - p.y;
        return {std::move(x3), std::move(y3)};
    }

    CurvePoint<F> dbl(const CurvePoint<F>& p) const { return add(p, p); }

    CurvePoint<F> mul(long k, CurvePoint<F> p) const {
        if (k < 0) {
            k = -k;
            p = neg(p);
        }
        CurvePoint<F> acc = CurvePoint<F>::inf();
        while (k > 0) {
            if (k & 1) acc = add(acc, p);
            p = dbl(p);
            k >>= 1;
        }
        return acc;
    }

    /// Smallest k <= bound with kP = inf, or empty meaning infinite order.
    /// The uniform torsion bounds make the empty answer a certificate:
    /// 12 over Q, 18 over quadratic fields such as Q(i).
    std::optional<int> torsion_order(const CurvePoint<F>& p, int bound) const {
        CurvePoint<F> acc = p;
        for (int k = 1; k <= bound; ++k) {
            if (acc.infinity) return k;
            acc = add(acc, p);
        }
        return std::nullopt;
    }

    friend bool operator==(const Curve& a, const Curve& b) {
        return a.a2_ == b.a2_ && a.a4_ == b.a4_ && a.a6_ == b.a6_;
    }

  private:
    static F cubic_disc_times_16(const F& a2, const F& a4, const F& a6) {
        F d = F(18) * a2 * a4 * a6 - F(4) * a2 * a2 * a2 * a6 + a2 * a2 * a4 * a4
            - F(4) * a4 * a4 * a4 - F(27) * a6 * a6;
        return F(16) * d;
    }

    F a2_, a4_, a6_, disc_;
};

using RatCurve = Curve<Rat>;
using RatPoint = CurvePoint<Rat>;
using GaussCurve = Curve<GaussRat>;
using GaussPoint = CurvePoint<GaussRat>;

inline GaussCurve to_gauss(const RatCurve& e) {
    return {GaussRat(e.a2()), GaussRat(e.a4()), GaussRat(e.a6())};
}

constexpr int kTorsionBoundQ = 12;
constexpr int kTorsionBoundQi = 18;

/// All integer roots of the monic cubic X^3 + A X^2 + B X + C, exact,
/// without factoring C (sign-bisection over the monotone pieces).
std::vector<mpz_class> monic_cubic_integer_roots(const mpz_class& A, const mpz_class& B,
                                                 const mpz_class& C);

/// Rational roots r of the cubic as points (r, 0); 0, 1 or 3 of them over Q.
std::vector<RatPoint> two_torsion(const RatCurve& e);

/// Total order on points for deterministic listings: inf first,
/// then by naive height of x, then by x, then by y.
bool point_less(const RatPoint& a, const RatPoint& b);

/// "(x, y)" or "inf"; inverse of CurvePoint::str for Q-points.
std::optional<RatPoint> parse_point(std::string_view text);

} // namespace hypheron
