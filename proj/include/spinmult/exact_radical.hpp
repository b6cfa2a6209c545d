#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

namespace spinmult {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact real number sign * sqrt(p/q).
///
/// The radicand is kept in lowest terms with a positive denominator and the
/// sign is zero exactly when the radicand is zero, so two values are equal
/// iff their members are equal.
class SignedRadical {
public:
    SignedRadical() = default;
    SignedRadical(int sign, Rational radicand);
    SignedRadical(int sign, const BigInt& num, const BigInt& den);

    static SignedRadical zero() { return {}; }
    static SignedRadical one() { return {1, Rational(1)}; }
    /// The radical whose value is exactly r.
    static SignedRadical from_rational(const Rational& r);

    int sign() const { return sign_; }
    const Rational& radicand() const { return radicand_; }
    BigInt num() const { return boost::multiprecision::numerator(radicand_); }
    BigInt den() const { return boost::multiprecision::denominator(radicand_); }

    bool is_zero() const { return sign_ == 0; }
    /// value^2 as a rational.
    const Rational& square() const { return radicand_; }
    /// Value as a rational when the radicand is a perfect square.
    std::optional<Rational> as_rational() const;

    SignedRadical operator-() const { return {-sign_, radicand_}; }

    friend bool operator==(const SignedRadical&, const SignedRadical&) = default;

    /// "+sqrt(1/6)", "-1/2", "0"; perfect squares print as rationals.
    std::string to_string() const;

private:
    int sign_ = 0;
    Rational radicand_ = 0;
};

SignedRadical radical_mul(const SignedRadical& a, const SignedRadical& b);

/// Exact sum when a and b share a radical class; nullopt (NotClosed) otherwise.
std::optional<SignedRadical> radical_add(const SignedRadical& a, const SignedRadical& b);

/// Nearest double to sign * sqrt(p/q).
double radical_to_float(const SignedRadical& a);

inline SignedRadical operator*(const SignedRadical& a, const SignedRadical& b) {
    return radical_mul(a, b);
}

/// Exact square root of a non-negative rational when it is a perfect square.
std::optional<Rational> exact_sqrt(const Rational& r);

/// Exact sum of arbitrarily many radicals.
///
/// Terms are merged per radical class; classes are linearly independent over
/// the rationals, so the sum is zero iff no class survives.
class RadicalSum {
public:
    RadicalSum& operator+=(const SignedRadical& term);

    bool is_zero() const { return classes_.empty(); }
    /// The sum as a single radical, or nullopt if it spans several classes.
    std::optional<SignedRadical> value() const;
    double to_float() const;

private:
    std::vector<SignedRadical> classes_;
};

}  // namespace spinmult
