#include "hypheron/curve.hpp"

#include <algorithm>

namespace hypheron {

namespace {

mpz_class eval_cubic(const mpz_class& A, const mpz_class& B, const mpz_class& C,
                     const mpz_class& x) {
    return ((x + A) * x + B) * x + C;
}

// Largest integer root candidate in [lo, hi] for a piece where the cubic is
// monotone on integers; returns the root if an exact zero is found.
void bisect_piece(const mpz_class& A, const mpz_class& B, const mpz_class& C,
                  mpz_class lo, mpz_class hi, bool increasing,
                  std::vector<mpz_class>& out) {
    if (lo > hi) return;
    mpz_class flo = eval_cubic(A, B, C, lo);
    mpz_class fhi = eval_cubic(A, B, C, hi);
    if (flo == 0) out.push_back(lo);
    if (fhi == 0 && hi != lo) out.push_back(hi);
    if (!increasing) {
        std::swap(lo, hi);
        std::swap(flo, fhi);
    }
    if (sgn(flo) >= 0 || sgn(fhi) <= 0) return;   // no sign change strictly inside
    // invariant: f(lo) < 0 < f(hi) with f monotone between them on integers
    while (::abs(hi - lo) > 1) {
        mpz_class mid = (lo + hi) / 2;
        mpz_class fm = eval_cubic(A, B, C, mid);
        if (fm == 0) {
            out.push_back(mid);
            return;
        }
        if (sgn(fm) < 0)
            lo = mid;
        else
            hi = mid;
    }
}

} // namespace

std::vector<mpz_class> monic_cubic_integer_roots(const mpz_class& A, const mpz_class& B,
                                                 const mpz_class& C) {
    std::vector<mpz_class> roots;
    // Cauchy bound on real roots
    mpz_class bound = 1 + std::max({mpz_class(::abs(A)), mpz_class(::abs(B)), mpz_class(::abs(C))});
    const mpz_class D = A * A - 3 * B;   // discriminant of the derivative, /4
    if (D <= 0) {
        // strictly increasing: single real root
        bisect_piece(A, B, C, -bound, bound, true, roots);
    } else {
        mpz_class s;
        mpz_sqrt(s.get_mpz_t(), D.get_mpz_t());
        // critical points x∓ = (-A ∓ sqrt(D)) / 3, bracketed via s <= sqrt(D) < s+1
        mpz_class lo_minus, hi_plus;
        mpz_fdiv_q_ui(lo_minus.get_mpz_t(), mpz_class(-A - s - 1).get_mpz_t(), 3);
        mpz_cdiv_q_ui(hi_plus.get_mpz_t(), mpz_class(-A + s + 1).get_mpz_t(), 3);
        // conservative monotone ranges, plus explicit probing near the breakpoints
        bisect_piece(A, B, C, -bound, lo_minus - 2, true, roots);
        bisect_piece(A, B, C, lo_minus + 2, hi_plus - 2, false, roots);
        bisect_piece(A, B, C, hi_plus + 2, bound, true, roots);
        for (mpz_class x = lo_minus - 2; x <= lo_minus + 2; ++x)
            if (eval_cubic(A, B, C, x) == 0) roots.push_back(x);
        for (mpz_class x = hi_plus - 2; x <= hi_plus + 2; ++x)
            if (eval_cubic(A, B, C, x) == 0) roots.push_back(x);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

std::vector<RatPoint> two_torsion(const RatCurve& e) {
    // clear denominators: x = X/d turns the cubic into a monic integer one
    mpz_class d = 1;
    for (const Rat* c : {&e.a2(), &e.a4(), &e.a6()}) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), c->den().get_mpz_t());
        d = d / g * c->den();
    }
    const Rat dr{d};
    const mpz_class A = (e.a2() * dr).num();
    const mpz_class B = (e.a4() * dr * dr).num();
    const mpz_class C = (e.a6() * dr * dr * dr).num();
    std::vector<RatPoint> pts;
    for (const mpz_class& X : monic_cubic_integer_roots(A, B, C))
        pts.emplace_back(Rat(X, d), Rat(0));
    std::sort(pts.begin(), pts.end(), point_less);
    return pts;
}

bool point_less(const RatPoint& a, const RatPoint& b) {
    if (a.infinity || b.infinity) return a.infinity && !b.infinity;
    const mpz_class ha = rat_height(a.x), hb = rat_height(b.x);
    if (ha != hb) return ha < hb;
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

std::optional<RatPoint> parse_point(std::string_view text) {
    if (text == "inf") return RatPoint::inf();
    if (text.size() < 2 || text.front() != '(' || text.back() != ')') return std::nullopt;
    text = text.substr(1, text.size() - 2);
    const auto comma = text.find(',');
    if (comma == std::string_view::npos) return std::nullopt;
    auto trim = [](std::string_view s) {
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
        return s;
    };
    auto x = Rat::parse(trim(text.substr(0, comma)));
    auto y = Rat::parse(trim(text.substr(comma + 1)));
    if (!x || !y) return std::nullopt;
    return RatPoint(*x, *y);
}

} // namespace hypheron
