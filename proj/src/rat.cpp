#include "hypheron/rat.hpp"

#include <cctype>
#include <stdexcept>

namespace hypheron {

Rat::Rat(long n, long d) : q_() {
    if (d == 0) throw std::domain_error("Rat: zero denominator");
    q_ = mpq_class(n, d);
    canonicalize();
}

Rat::Rat(mpz_class n, mpz_class d) {
    if (sgn(d) == 0) throw std::domain_error("Rat: zero denominator");
    q_ = mpq_class(std::move(n), std::move(d));
    canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("Rat: division by zero");
    q_ /= o.q_;
    return *this;
}

Rat Rat::inverse() const {
    if (is_zero()) throw std::domain_error("Rat: inverse of zero");
    return Rat(1) / *this;
}

std::string Rat::str() const {
    if (den() == 1) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

std::optional<Rat> Rat::parse(std::string_view text) {
    if (text.empty()) return std::nullopt;
    const auto slash = text.find('/');
    const auto is_int = [](std::string_view s) {
        if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    try {
        if (slash == std::string_view::npos) {
            if (!is_int(text)) return std::nullopt;
            return Rat(mpz_class(std::string(text)));
        }
        const auto ns = text.substr(0, slash);
        const auto ds = text.substr(slash + 1);
        if (!is_int(ns) || !is_int(ds)) return std::nullopt;
        mpz_class d{std::string(ds)};
        if (sgn(d) == 0) return std::nullopt;
        return Rat(mpz_class(std::string(ns)), std::move(d));
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

std::optional<Rat> rat_sqrt(const Rat& q) {
    if (q.sign() < 0) return std::nullopt;
    // valid componentwise because num/den are coprime
    if (!mpz_perfect_square_p(q.num().get_mpz_t())) return std::nullopt;
    if (!mpz_perfect_square_p(q.den().get_mpz_t())) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), q.num().get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), q.den().get_mpz_t());
    return Rat(std::move(rn), std::move(rd));
}

mpz_class rat_height(const Rat& q) {
    mpz_class a = ::abs(q.num());
    return a > q.den() ? a : q.den();
}

Rat pow_int(const Rat& base, long e) {
    if (e < 0) return pow_int(base.inverse(), -e);
    Rat r(1), b = base;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

} // namespace hypheron
