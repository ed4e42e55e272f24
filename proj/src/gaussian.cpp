#include "hnkit/gaussian.hpp"

#include "hnkit/errors.hpp"
#include "hnkit/text.hpp"

#include <ostream>
#include <stdexcept>

namespace hnkit {

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) {
        throw std::domain_error("division by zero in Q(i)");
    }
    Rational n = norm();
    return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    if (o.is_zero()) {
        throw std::domain_error("division by zero in Q(i)");
    }
    if (sgn(o.im_) == 0) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

namespace {

std::string imaginary_literal(const Rational& magnitude) {
    return magnitude == 1 ? std::string("i") : magnitude.get_str() + "i";
}

}  // namespace

std::string GaussianRational::to_string() const {
    const int rs = sgn(re_);
    const int is = sgn(im_);
    if (is == 0) {
        return re_.get_str();
    }
    std::string imag = imaginary_literal(abs(im_));
    if (rs == 0) {
        return (is < 0 ? "-" : "") + imag;
    }
    return re_.get_str() + (is < 0 ? "-" : "+") + imag;
}

GaussianRational GaussianRational::parse(const std::string& text) {
    Polynomial p = parse_polynomial(text);
    if (!p.is_constant()) {
        throw ParseError("expected a constant, got '" + text + "'", 0);
    }
    return p.is_zero() ? GaussianRational{} : p.terms().front().coefficient;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    return os << z.to_string();
}

}  // namespace hnkit
