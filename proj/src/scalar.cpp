#include "graphalg/scalar.hpp"

#include <stdexcept>

namespace graphalg {

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    normalize();
}

void Rational::normalize() {
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = BigInt::exact_div(num_, g);
        den_ = BigInt::exact_div(den_, g);
    }
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
}

std::string Rational::to_string() const {
    std::string s = num_.to_string();
    if (!den_.is_one()) {
        s += "/";
        s += den_.to_string();
    }
    return s;
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw std::domain_error("GaussianRational: inverse of zero");
    Rational n = re_ * re_ + im_ * im_;
    return {re_ / n, -im_ / n};
}

GaussianRational GaussianRational::pow(long long e) const {
    GaussianRational base = *this;
    if (e < 0) {
        base = base.inverse();
        e = -e;
    }
    GaussianRational acc(Rational(1));
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

std::string GaussianRational::to_string() const {
    if (im_.is_zero()) return re_.to_string();
    if (re_.is_zero()) return im_.to_string() + "i";
    std::string s = "(" + re_.to_string();
    if (im_.sign() < 0)
        s += "-" + (-im_).to_string();
    else
        s += "+" + im_.to_string();
    s += "i)";
    return s;
}

}  // namespace graphalg
