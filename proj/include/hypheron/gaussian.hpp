#pragma once

#include "hypheron/rat.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace hypheron {

/// Element of Q(i), componentwise exact.
class GaussRat {
  public:
    GaussRat() = default;
    GaussRat(long n) : re_(n) {}                  // NOLINT: implicit by design
    GaussRat(Rat re) : re_(std::move(re)) {}      // NOLINT
    GaussRat(Rat re, Rat im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussRat i() { return GaussRat(Rat(0), Rat(1)); }
    static std::optional<GaussRat> parse(std::string_view text);

    const Rat& re() const { return re_; }
    const Rat& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussRat conj() const { return {re_, -im_}; }
    Rat norm() const { return re_ * re_ + im_ * im_; }   // |z|^2

    GaussRat operator-() const { return {-re_, -im_}; }
    GaussRat& operator+=(const GaussRat& o) { re_ += o.re_; im_ += o.im_; return *this; }
    GaussRat& operator-=(const GaussRat& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    GaussRat& operator*=(const GaussRat& o);
    GaussRat& operator/=(const GaussRat& o);

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { a += b; return a; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { a -= b; return a; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { a *= b; return a; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { a /= b; return a; }

    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    /// "a/b+c/di" with the real and/or imaginary part dropped when zero.
    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const GaussRat& z) { return os << z.str(); }

  private:
    Rat re_, im_;
};

inline GaussRat gauss_mul(const GaussRat& a, const GaussRat& b) { return a * b; }

} // namespace hypheron
