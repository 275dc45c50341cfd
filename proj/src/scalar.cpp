#include "ffsc/scalar.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace ffsc {

namespace {
std::int64_t mod_pos(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}
}  // namespace

Scalar Scalar::root_of_unity(std::int64_t num, std::int64_t den) {
    if (den <= 0) throw std::invalid_argument("root_of_unity: den must be positive");
    num = mod_pos(num, den);
    std::int64_t g = std::gcd(num, den);
    num /= g;
    den /= g;
    if (num == 0) return Scalar(1);
    if (den == 2) return Scalar(-1);  // num == 1 after reduction
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(num) /
                         static_cast<double>(den);
    return Scalar(Cx(std::cos(theta), std::sin(theta)));
}

bool Scalar::is_zero() const {
    if (is_exact()) return std::get<BigRat>(v_) == 0;
    return std::get<Cx>(v_) == Cx(0.0, 0.0);
}

const BigRat& Scalar::exact() const {
    if (!is_exact()) throw std::logic_error("Scalar: exact() on inexact value");
    return std::get<BigRat>(v_);
}

Cx Scalar::to_complex() const {
    if (is_exact()) return Cx(static_cast<double>(std::get<BigRat>(v_)), 0.0);
    return std::get<Cx>(v_);
}

Scalar Scalar::operator-() const {
    if (is_exact()) return Scalar(BigRat(-std::get<BigRat>(v_)));
    return Scalar(-std::get<Cx>(v_));
}

Scalar Scalar::conj() const {
    if (is_exact()) return *this;
    return Scalar(std::conj(std::get<Cx>(v_)));
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (is_exact() && o.is_exact()) {
        v_ = BigRat(std::get<BigRat>(v_) + std::get<BigRat>(o.v_));
    } else {
        v_ = to_complex() + o.to_complex();
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    if (is_exact() && o.is_exact()) {
        v_ = BigRat(std::get<BigRat>(v_) - std::get<BigRat>(o.v_));
    } else {
        v_ = to_complex() - o.to_complex();
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (is_exact() && o.is_exact()) {
        v_ = BigRat(std::get<BigRat>(v_) * std::get<BigRat>(o.v_));
    } else if (is_zero() || o.is_zero()) {
        // exact zero annihilates an inexact factor; keeps sparse sums exact
        v_ = BigRat(0);
    } else {
        v_ = to_complex() * o.to_complex();
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
    if (is_exact() && o.is_exact()) {
        v_ = BigRat(std::get<BigRat>(v_) / std::get<BigRat>(o.v_));
    } else {
        v_ = to_complex() / o.to_complex();
    }
    return *this;
}

bool Scalar::exact_eq(const Scalar& o) const {
    return exact() == o.exact();
}

std::string Scalar::str() const {
    std::ostringstream os;
    if (is_exact()) {
        os << std::get<BigRat>(v_);
    } else {
        Cx z = std::get<Cx>(v_);
        os.precision(17);
        os << z.real();
        if (z.imag() >= 0) os << "+";
        os << z.imag() << "i";
    }
    return os.str();
}

Scalar pow(const Scalar& base, long e) {
    if (e < 0) return Scalar(1) / pow(base, -e);
    Scalar r(1), b = base;
    for (; e; e >>= 1) {
        if (e & 1) r *= b;
        if (e > 1) b *= b;
    }
    return r;
}

Scalar q_pow(std::int64_t q, long e) {
    BigRat r(1);
    BigRat b = (e >= 0) ? BigRat(q) : BigRat(1, q);
    for (long k = std::labs(e); k; --k) r *= b;
    return Scalar(r);
}

double distance(const Scalar& a, const Scalar& b) {
    if (a.is_exact() && b.is_exact())
        return a.exact() == b.exact()
                   ? 0.0
                   : std::abs(static_cast<double>(BigRat(a.exact() - b.exact())));
    return std::abs(a.to_complex() - b.to_complex());
}

double rel_distance(const Scalar& a, const Scalar& b) {
    double scale = std::max(1.0, std::abs(b.to_complex()));
    return distance(a, b) / scale;
}

void ScalarAcc::add(const Scalar& s) {
    if (s.is_exact()) {
        exact_ += s.exact();
        return;
    }
    touched_cx_ = true;
    // Kahan step
    Cx y = s.to_complex() - comp_;
    Cx t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
}

Scalar ScalarAcc::value() const {
    if (!touched_cx_) return Scalar(exact_);
    return Scalar(Cx(static_cast<double>(exact_), 0.0) + sum_);
}

}  // namespace ffsc
