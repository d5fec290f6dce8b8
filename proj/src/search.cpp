#include "hypheron/search.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hypheron {

namespace {

// p^max(ceil(e2/2), ceil(e4/4), ceil(e6/6)) per prime p of the denominators.
// A residual cofactor beyond trial division is treated as prime, which keeps
// lambda valid (lambda^2k still clears) at worst non-minimal.
void fold_denominator(const mpz_class& den, int k, std::vector<std::pair<mpz_class, int>>& fac) {
    mpz_class rest = den;
    auto push = [&](const mpz_class& p, int e) {
        const int need = (e + k - 1) / k;
        for (auto& [q, m] : fac) {
            if (q == p) {
                m = std::max(m, need);
                return;
            }
        }
        fac.emplace_back(p, need);
    };
    mpz_class p = 2;
    while (p * p <= rest && p < 1000000) {
        if (rest % p == 0) {
            int e = 0;
            while (rest % p == 0) {
                rest /= p;
                ++e;
            }
            push(p, e);
        }
        p += (p == 2) ? 1 : 2;
    }
    if (rest > 1) push(rest, 1);
}

long to_long(const mpz_class& z, const char* what) {
    if (!z.fits_slong_p()) throw std::invalid_argument(std::string(what) + " too large");
    return z.get_si();
}

} // namespace

IntegralModel integral_model(const RatCurve& e) {
    std::vector<std::pair<mpz_class, int>> fac;
    fold_denominator(e.a2().den(), 2, fac);
    fold_denominator(e.a4().den(), 4, fac);
    fold_denominator(e.a6().den(), 6, fac);
    mpz_class lambda = 1;
    for (const auto& [p, m] : fac)
        for (int i = 0; i < m; ++i) lambda *= p;
    const Rat l{lambda};
    IntegralModel out;
    out.lambda = lambda;
    out.A = (e.a2() * l * l).num();
    out.B = (e.a4() * l * l * l * l).num();
    out.C = (e.a6() * pow_int(l, 6)).num();
    return out;
}

std::vector<RatPoint> naive_search(const RatCurve& e, const mpz_class& height_bound) {
    const IntegralModel m = integral_model(e);
    const Rat lam2 = Rat(m.lambda).squared();
    const Rat lam3 = lam2 * Rat(m.lambda);

    mpz_class qmax_z;
    mpz_sqrt(qmax_z.get_mpz_t(), height_bound.get_mpz_t());
    const long qmax = to_long(qmax_z, "height bound");
    const long H = to_long(height_bound, "height bound");

    std::vector<std::vector<RatPoint>> per_q(static_cast<size_t>(std::max(qmax, 1L)));

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long q = 1; q <= qmax; ++q) {
        auto& local = per_q[static_cast<size_t>(q - 1)];
        const mpz_class q2 = mpz_class(q) * q;
        const mpz_class q3 = q2 * q;
        const mpz_class Aq2 = m.A * q2;
        const mpz_class Bq4 = m.B * q2 * q2;
        const mpz_class Cq6 = m.C * q3 * q3;
        mpz_class N, s;
        for (long p = -H; p <= H; ++p) {
            if (std::gcd(p < 0 ? -p : p, q) != 1) continue;
            N = ((mpz_class(p) + Aq2) * p + Bq4) * p + Cq6;
            if (sgn(N) < 0) continue;
            if (!mpz_perfect_square_p(N.get_mpz_t())) continue;
            mpz_sqrt(s.get_mpz_t(), N.get_mpz_t());
            const Rat x = Rat(mpz_class(p), q2) / lam2;
            const Rat y = Rat(s, q3) / lam3;
            local.emplace_back(x, y);
            if (!y.is_zero()) local.emplace_back(x, -y);
        }
    }

    std::vector<RatPoint> out;
    for (auto& bucket : per_q)
        out.insert(out.end(), std::make_move_iterator(bucket.begin()),
                   std::make_move_iterator(bucket.end()));
    std::sort(out.begin(), out.end(), point_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<RatPoint> naive_search_serial(const RatCurve& e, const mpz_class& height_bound) {
    const IntegralModel m = integral_model(e);
    const Rat lam{m.lambda};

    mpz_class qmax_z;
    mpz_sqrt(qmax_z.get_mpz_t(), height_bound.get_mpz_t());
    const long qmax = to_long(qmax_z, "height bound");
    const long H = to_long(height_bound, "height bound");

    std::vector<RatPoint> out;
    for (long q = 1; q <= qmax; ++q) {
        for (long p = -H; p <= H; ++p) {
            if (std::gcd(p < 0 ? -p : p, q) != 1) continue;
            const Rat X{mpz_class(p), mpz_class(q) * q};
            const Rat x = X / (lam * lam);
            const auto y = rat_sqrt(e.rhs(x));
            if (!y) continue;
            out.emplace_back(x, *y);
            if (!y->is_zero()) out.emplace_back(x, -*y);
        }
    }
    std::sort(out.begin(), out.end(), point_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace hypheron
