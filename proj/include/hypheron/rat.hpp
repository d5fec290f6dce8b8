#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace hypheron {

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator (zero is 0/1). Equality is structural.
class Rat {
  public:
    Rat() : q_(0) {}
    Rat(long n) : q_(n) {}                        // NOLINT: implicit by design
    Rat(long n, long d);
    Rat(mpz_class n, mpz_class d);
    explicit Rat(mpz_class n) : q_(std::move(n)) {}
    explicit Rat(mpq_class q) : q_(std::move(q)) { canonicalize(); }

    static std::optional<Rat> parse(std::string_view text);

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }

    Rat operator-() const { return Rat(mpq_class(-q_), already_canonical{}); }
    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    Rat inverse() const;
    Rat squared() const { return *this * *this; }

    /// "p/q", or just "p" when the denominator is 1. Parses back exactly.
    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

  private:
    struct already_canonical {};
    Rat(mpq_class q, already_canonical) : q_(std::move(q)) {}
    void canonicalize() { q_.canonicalize(); }
    mpq_class q_;
};

inline Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

/// sqrt(q) when q is the square of a rational, else empty. Negative q -> empty.
std::optional<Rat> rat_sqrt(const Rat& q);

/// Naive height: max(|num|, den). Height of 0 = 0/1 is 1.
mpz_class rat_height(const Rat& q);

Rat pow_int(const Rat& base, long e);

} // namespace hypheron
