#include "hypheron/gaussian.hpp"

#include <stdexcept>

namespace hypheron {

GaussRat& GaussRat::operator*=(const GaussRat& o) {
    Rat re = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    return *this;
}

GaussRat& GaussRat::operator/=(const GaussRat& o) {
    if (o.is_zero()) throw std::domain_error("GaussRat: division by zero");
    const Rat n = o.norm();
    const GaussRat num = *this * o.conj();
    re_ = num.re_ / n;
    im_ = num.im_ / n;
    return *this;
}

std::string GaussRat::str() const {
    if (im_.is_zero()) return re_.str();
    std::string s;
    if (!re_.is_zero()) {
        s = re_.str();
        if (im_.sign() > 0) s += "+";
    }
    s += im_.str() + "i";
    return s;
}

std::optional<GaussRat> GaussRat::parse(std::string_view text) {
    if (text.empty()) return std::nullopt;
    if (text.back() == 'i') {
        text.remove_suffix(1);
        // split at the sign separating real and imaginary parts (skip a leading sign)
        size_t split = std::string_view::npos;
        for (size_t k = text.size(); k-- > 1;) {
            if ((text[k] == '+' || text[k] == '-') && text[k - 1] != '/' &&
                text[k - 1] != '+' && text[k - 1] != '-') {
                split = k;
                break;
            }
        }
        if (split == std::string_view::npos) {
            auto im = Rat::parse(text);
            if (!im) return std::nullopt;
            return GaussRat(Rat(0), *im);
        }
        auto re = Rat::parse(text.substr(0, split));
        std::string_view im_text = text.substr(split);
        if (im_text == "+") im_text = "1";
        else if (im_text == "-") im_text = "-1";
        else if (im_text.front() == '+') im_text.remove_prefix(1);
        auto im = Rat::parse(im_text);
        if (!re || !im) return std::nullopt;
        return GaussRat(*re, *im);
    }
    auto re = Rat::parse(text);
    if (!re) return std::nullopt;
    return GaussRat(*re);
}

} // namespace hypheron
