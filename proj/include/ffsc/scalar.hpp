#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <variant>

namespace ffsc {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;
using Cx = std::complex<double>;

// Scalar is a number that stays an exact rational as long as every operand is
// rational and degrades to complex<double> the moment an irrational root of
// unity enters the computation.  Pipelines that never leave the rationals
// (divisor weights, q = 2^k additive characters, quadratic character values)
// therefore produce exact results with no extra effort from the caller.
class Scalar {
public:
    Scalar() : v_(BigRat(0)) {}
    Scalar(int x) : v_(BigRat(x)) {}
    Scalar(std::int64_t x) : v_(BigRat(x)) {}
    Scalar(const BigInt& x) : v_(BigRat(x)) {}
    Scalar(const BigRat& x) : v_(x) {}
    explicit Scalar(Cx z) : v_(z) {}

    static Scalar from_double(double d) { return Scalar(Cx(d, 0.0)); }

    // exp(2*pi*i * num/den), reduced; exact when the value lands in {1, -1}.
    static Scalar root_of_unity(std::int64_t num, std::int64_t den);

    bool is_exact() const { return std::holds_alternative<BigRat>(v_); }
    bool is_zero() const;
    const BigRat& exact() const;
    Cx to_complex() const;
    double real_approx() const { return to_complex().real(); }
    double abs() const { return std::abs(to_complex()); }

    Scalar operator-() const;
    Scalar conj() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    // Exact equality; throws if either side is inexact (compare via distance
    // helpers below in that case).
    bool exact_eq(const Scalar& o) const;

    std::string str() const;

private:
    std::variant<BigRat, Cx> v_;
};

Scalar pow(const Scalar& base, long e);
Scalar q_pow(std::int64_t q, long e);  // q^e as exact rational, e may be negative

// |a - b| in the complex embedding; 0.0 whenever both are exact and equal.
double distance(const Scalar& a, const Scalar& b);
// |a - b| / max(1, |b|).
double rel_distance(const Scalar& a, const Scalar& b);

// Compensated accumulator: exact inputs are summed exactly (order free);
// complex inputs go through Kahan summation in arrival order, so callers that
// iterate deterministically get bit-identical results.
class ScalarAcc {
public:
    void add(const Scalar& s);
    void add_product(const Scalar& a, const Scalar& b) { add(a * b); }
    Scalar value() const;
    bool pure_exact() const { return !touched_cx_; }

private:
    BigRat exact_{0};
    Cx sum_{0.0, 0.0};
    Cx comp_{0.0, 0.0};
    bool touched_cx_ = false;
};

}  // namespace ffsc
