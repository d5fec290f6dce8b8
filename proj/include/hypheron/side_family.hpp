#pragma once

#include "hypheron/curve.hpp"
#include "hypheron/hyperbolic.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace hypheron {

/// Triangle found by completing two fixed sides, with its provenance.
struct SideCompletion {
    HyperbolicTriangle triangle;
    Rat u;              // e^a of the completing side
    RatPoint source;
};

/// Family E_{v,w}: y^2 = x (x - (v - v^-1)^2) (x - (w - w^-1)^2);
/// parametrizes Heron triangles with two sides log v, log w.
class SideFamily {
  public:
    SideFamily(Rat v, Rat w);   // throws SingularFamily on degenerate v, w

    const Rat& v() const { return v_; }
    const Rat& w() const { return w_; }
    const RatCurve& curve() const { return curve_; }

    Rat root_v() const { return rv_ * rv_; }   // (v - v^-1)^2
    Rat root_w() const { return rw_ * rw_; }   // (w - w^-1)^2

    /// 2^4 (v-v^-1)^4 (w-w^-1)^4 (v^-1 w - v w^-1)^2 (v w - v^-1 w^-1)^2.
    Rat discriminant_closed_form() const;

    /// Triangle-inequality window max(v/w, w/v) < u < vw; requires v,w > 1.
    bool condition_B(const Rat& u) const;

    /// (u, d2) -> curve point with 4 u^2 v^2 w^2 d2^2 = (uv-w)(uw-v)(vw-u)(uvw-1).
    /// Throws MapUndefined (u = vw) or NotOnQuartic.
    RatPoint forward(const Rat& u, const Rat& d2) const;

    /// Curve point -> (u, d2). Throws MapUndefined at the printed denominator
    /// zeros x = -(v^2-1)(w^2-1) and v^2 w^2 x = -(v^2-1)(w^2-1).
    std::pair<Rat, Rat> inverse(const RatPoint& p) const;

    struct SpecialPoints {
        GaussPoint r;    // infinite order on the generic fiber
        GaussPoint s0;   // order 4
        GaussPoint s1;   // order 2, = ((v-v^-1)^2, 0)
    };
    SpecialPoints special_points() const;

    /// Heron triangle with sides (log u, log v, log w) from a rational point
    /// satisfying condition (B); empty otherwise.
    std::optional<SideCompletion> triangle_from_point(const RatPoint& p) const;

    /// naive_search filtered through triangle_from_point; deterministic order,
    /// possibly empty (the honest outcome for generic rank 0 over Q).
    std::vector<SideCompletion> search_completions(const mpz_class& height_bound) const;

  private:
    Rat v_, w_, rv_, rw_;   // rv = v - v^-1, rw = w - w^-1
    RatCurve curve_;
};

} // namespace hypheron
