#pragma once

#include "hypheron/curve.hpp"

#include <vector>

namespace hypheron {

/// Integral model Y^2 = X^3 + A X^2 + B X + C reached from a rational model by
/// (x, y) -> (lambda^2 x, lambda^3 y) with the minimal clearing factor lambda.
struct IntegralModel {
    mpz_class A, B, C;
    mpz_class lambda;
};

IntegralModel integral_model(const RatCurve& e);

/// All affine points whose integral-model x = p/q^2 has |p| and q^2 bounded by
/// height_bound, mapped back to the input model. Deduplicated, sorted by
/// point_less, every point verified on-curve. Parallel kernel (OpenMP when
/// available); result identical to naive_search_serial by construction.
std::vector<RatPoint> naive_search(const RatCurve& e, const mpz_class& height_bound);

/// Serial reference implementation of the same scan, kept for testing and
/// benchmarking against the parallel kernel.
std::vector<RatPoint> naive_search_serial(const RatCurve& e, const mpz_class& height_bound);

} // namespace hypheron
