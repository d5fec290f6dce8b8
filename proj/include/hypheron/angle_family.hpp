#pragma once

#include "hypheron/curve.hpp"
#include "hypheron/hyperbolic.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace hypheron {

/// Heron triangle together with the curve point it came from.
struct HeronCertificateData {
    HyperbolicTriangle triangle;
    RatPoint source;
    long k = 0;               // multiple of the distinguished infinite-order point
    int torsion_index = 0;    // 0 = no translate, 1..3 = two-torsion translate
};

/// Family E_{m,u}: y^2 = x (x - n) (x - n(u^2+1)) with
/// n = m (m^2+1) (2u - m(u^2-1)); parametrizes Heron triangles with rational
/// area m and one rational angle u.
class AngleFamily {
  public:
    AngleFamily(Rat m, Rat u);   // throws SingularFamily when n = 0 or u = 0

    const Rat& m() const { return m_; }
    const Rat& u() const { return u_; }
    const Rat& n() const { return n_; }
    const RatCurve& curve() const { return curve_; }

    /// Discriminant in factored closed form 2^4 u^4 (u^2+1)^2 n^6;
    /// equal to curve().discriminant() by construction.
    Rat discriminant_closed_form() const;

    /// Right-hand side of w^2 = quartic(t); a datum (m,u,t) is
    /// Heron-compatible exactly when this is a nonzero square.
    Rat quartic_w2(const Rat& t) const;

    /// Admissibility window 0 < t < (1 - mu)/(m + u); requires m,u > 0, mu < 1.
    bool condition_A(const Rat& t) const;
    bool admissible_parameters() const {
        return m_.sign() > 0 && u_.sign() > 0 && m_ * u_ < Rat(1);
    }

    /// (t, w) -> curve point. Throws MapUndefined (t = 0) or NotOnQuartic.
    RatPoint forward(const Rat& t, const Rat& w) const;

    /// Curve point -> (t, w). Throws ExcludedLine on
    /// y + (m+u)(1-mu)(x-n) = 0 (exactly T, P(m,u) and -(P+T)).
    std::pair<Rat, Rat> inverse(const RatPoint& p) const;

    /// The unique quartic preimage of P(m,u). Throws DegenerateDenominator.
    Rat special_t() const;

    /// P(m,u), the distinguished point of infinite order.
    RatPoint point_p() const;

    /// The two-torsion points (0,0), (n,0), (n(u^2+1),0).
    std::vector<RatPoint> torsion_points() const;

    /// Full Heron triangle from a rational point, when the point resolves to
    /// an admissible t; empty otherwise (torsion, excluded line, or outside
    /// condition (A)).
    std::optional<HyperbolicTriangle> triangle_from_point(const RatPoint& p) const;

    /// Deduplicated Heron triangles from {k P + T' : |k| <= k_max}, sorted by
    /// height of t; stops after max_count triangles when max_count > 0.
    std::vector<HeronCertificateData> enumerate_heron(long k_max, long max_count = 0) const;

  private:
    Rat m_, u_, n_;
    RatCurve curve_;
};

/// Second infinite-order point Q(m) = (2m(m+1)^2, 4m^2(m^2-1) i) on the u = 1
/// family, defined over Q(i).
GaussPoint point_q_u1(const Rat& m);

} // namespace hypheron
