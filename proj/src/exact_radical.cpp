#include "spinmult/exact_radical.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <stdexcept>

namespace spinmult {

namespace mp = boost::multiprecision;

namespace {

std::optional<BigInt> exact_isqrt(const BigInt& v) {
    if (v < 0) return std::nullopt;
    BigInt r = mp::sqrt(v);
    if (r * r != v) return std::nullopt;
    return r;
}

Rational checked_ratio(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("SignedRadical: zero denominator");
    return Rational(num, den);
}

}  // namespace

std::optional<Rational> exact_sqrt(const Rational& r) {
    auto n = exact_isqrt(mp::numerator(r));
    if (!n) return std::nullopt;
    auto d = exact_isqrt(mp::denominator(r));
    if (!d) return std::nullopt;
    return Rational(*n, *d);
}

SignedRadical::SignedRadical(int sign, Rational radicand) : radicand_(std::move(radicand)) {
    if (radicand_ < 0) throw std::invalid_argument("SignedRadical: negative radicand");
    if (sign < -1 || sign > 1) throw std::invalid_argument("SignedRadical: sign must be -1, 0 or +1");
    if (radicand_ == 0 || sign == 0) {
        sign_ = 0;
        radicand_ = 0;
    } else {
        sign_ = sign;
    }
}

SignedRadical::SignedRadical(int sign, const BigInt& num, const BigInt& den)
    : SignedRadical(sign, checked_ratio(num, den)) {}

SignedRadical SignedRadical::from_rational(const Rational& r) {
    int s = r > 0 ? 1 : (r < 0 ? -1 : 0);
    return {s, r * r};
}

std::optional<Rational> SignedRadical::as_rational() const {
    auto root = exact_sqrt(radicand_);
    if (!root) return std::nullopt;
    return sign_ < 0 ? Rational(-*root) : *root;
}

std::string SignedRadical::to_string() const {
    if (sign_ == 0) return "0";
    std::string s = sign_ > 0 ? "+" : "-";
    if (auto root = exact_sqrt(radicand_)) return s + root->str();
    return s + "sqrt(" + radicand_.str() + ")";
}

SignedRadical radical_mul(const SignedRadical& a, const SignedRadical& b) {
    return {a.sign() * b.sign(), a.radicand() * b.radicand()};
}

std::optional<SignedRadical> radical_add(const SignedRadical& a, const SignedRadical& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // a = t * |b| for rational t iff radicand ratio is a rational square.
    auto t = exact_sqrt(a.radicand() / b.radicand());
    if (!t) return std::nullopt;
    Rational c = Rational(a.sign() * b.sign()) * *t + 1;
    // a + b = c * b
    int s = c > 0 ? b.sign() : (c < 0 ? -b.sign() : 0);
    return SignedRadical(s, c * c * b.radicand());
}

double radical_to_float(const SignedRadical& a) {
    if (a.is_zero()) return 0.0;
    if (auto r = a.as_rational()) return r->convert_to<double>();
    using Wide = mp::cpp_bin_float_50;
    Wide v = mp::sqrt(Wide(a.num()) / Wide(a.den()));
    return a.sign() * v.convert_to<double>();
}

RadicalSum& RadicalSum::operator+=(const SignedRadical& term) {
    if (term.is_zero()) return *this;
    for (auto it = classes_.begin(); it != classes_.end(); ++it) {
        if (auto merged = radical_add(*it, term)) {
            if (merged->is_zero())
                classes_.erase(it);
            else
                *it = *merged;
            return *this;
        }
    }
    classes_.push_back(term);
    return *this;
}

std::optional<SignedRadical> RadicalSum::value() const {
    if (classes_.empty()) return SignedRadical::zero();
    if (classes_.size() == 1) return classes_.front();
    return std::nullopt;
}

double RadicalSum::to_float() const {
    double total = 0.0;
    for (const auto& c : classes_) total += radical_to_float(c);
    return total;
}

}  // namespace spinmult
