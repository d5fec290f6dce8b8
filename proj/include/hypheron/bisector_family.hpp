#pragma once

#include "hypheron/curve.hpp"
#include "hypheron/hyperbolic.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace hypheron {

/// Triangle with rational half-area n, rational angles, and an area bisector
/// at alpha whose foot splits alpha into alpha_1 and alpha - alpha_1. The
/// bisector length is rational exactly when the whole triangle is Heron.
struct BisectorConfig {
    Rat t_alpha;          // parameter of the split angle
    Rat t_alpha1;         // parameter of the sub-angle adjacent to beta
    Rat t_theta;          // angle at the bisector foot, on the alpha_1 side
    Rat t_gamma;          // full-triangle third angle
    Rat cosh_a, cosh_b, cosh_c;
    bool heron = false;
    std::optional<Rat> sinh_c;          // present iff heron
    std::optional<Rat> cosh_bisector;   // present iff heron
    std::optional<Rat> sinh_bisector;
    RatPoint source;
    long k = 0;
};

/// Family E_{n,u} for Heron triangles with rational half-area n (this module's
/// halfAreaN; unrelated to the angle family's n), angle beta = u, and a
/// rational area bisector at alpha.
class BisectorFamily {
  public:
    BisectorFamily(Rat half_area_n, Rat u);   // throws SingularFamily

    const Rat& half_area_n() const { return n_; }
    const Rat& u() const { return u_; }
    const RatCurve& curve() const { return curve_; }

    /// x-coordinate (n^2+1)^2 (nu^2-2u-n)^2 of the printed linear factor's
    /// two-torsion point.
    const Rat& two_torsion_x() const { return lin_root_; }
    RatPoint two_torsion_point() const { return {lin_root_, Rat(0)}; }

    /// 2^12 (n^2+1)^8 (u+n)^4 (nu-1)^4 (u^2+1)^2 ((u^2-1)n-2u)^4 times the
    /// printed irreducible quartic factor.
    Rat discriminant_closed_form() const;

    /// The printed quartic in t = tan(alpha/2); its leading and constant
    /// coefficients are both the square (2(n+u)(nu-1))^2.
    Rat quartic_w2(const Rat& t) const;

    /// (t, w) -> curve point. Throws MapUndefined (t = 0) or NotOnQuartic.
    RatPoint forward(const Rat& t, const Rat& w) const;

    /// Curve point -> (t, w). Throws MapUndefined at the printed denominator
    /// zeros.
    std::pair<Rat, Rat> inverse(const RatPoint& p) const;

    /// Q(n,u) = (0, (n^2+1)^2 (nu^2-2u-n)^2 (3n^2u^2-u^2+2n^3u-6nu-3n^2+1)).
    RatPoint point_q() const;

    /// Exact sub-triangle reconstruction at a quartic solution (t, w); empty
    /// when the configuration is not a genuine triangle split.
    std::optional<BisectorConfig> reconstruct(const Rat& t, const Rat& w) const;

    /// Multiples of Q (plus two-torsion translates) filtered through
    /// inverse + reconstruct; sorted by height of t_alpha.
    std::vector<BisectorConfig> enumerate(long k_max, long max_count = 0) const;

  private:
    Rat n_, u_;
    Rat lin_root_;      // (n^2+1)^2 (nu^2-2u-n)^2
    Rat quad_lin_;      // (n^2+1) * M, the printed x-coefficient of the quadratic factor
    Rat quad_const_;    // lin_root_ * S^2
    RatCurve curve_;
};

} // namespace hypheron
