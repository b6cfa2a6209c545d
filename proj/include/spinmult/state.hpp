#pragma once

#include "spinmult/exact_radical.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>

namespace spinmult {

using Complex = std::complex<double>;

/// Product-basis configuration of n qubits. Bit (n - k) is set when particle k
/// is up, so particle 1 is the most significant bit.
using Config = std::uint64_t;

inline constexpr int kMaxQubits = 62;

/// "udu" style rendering, particle 1 first.
std::string config_string(Config config, int n);
Config parse_config(std::string_view text);
bool particle_up(Config config, int n, int particle);

/// Index into dense vectors and operator matrices. Dense storage orders the
/// basis "up first": a set bit in the dense index means the particle is down.
inline std::size_t dense_index(Config config, int n) {
    return static_cast<std::size_t>(((Config{1} << n) - 1) ^ config);
}
inline Config config_from_dense(std::size_t index, int n) {
    return ((Config{1} << n) - 1) ^ static_cast<Config>(index);
}

class NumericState;

/// Real state with exact amplitudes. Entries iterate in up-first order and
/// zero amplitudes are never stored.
class ExactState {
public:
    using Amplitudes = std::map<Config, SignedRadical, std::greater<>>;

    ExactState() = default;
    explicit ExactState(int n) : n_(n) {}

    int qubits() const { return n_; }
    const Amplitudes& amplitudes() const { return amps_; }
    SignedRadical amplitude(Config config) const;
    void set(Config config, const SignedRadical& amp);

    Rational norm_squared() const;
    bool is_normalized() const { return norm_squared() == 1; }
    NumericState to_numeric() const;

    ExactState operator-() const;
    friend bool operator==(const ExactState&, const ExactState&) = default;

    /// "+sqrt(1/2) ud -sqrt(1/2) du"
    std::string to_string() const;

private:
    int n_ = 0;
    Amplitudes amps_;
};

/// Exact <a|b>.
RadicalSum exact_inner(const ExactState& a, const ExactState& b);

/// True when a == b or a == -b.
bool equal_up_to_sign(const ExactState& a, const ExactState& b);

/// Dense complex state of n qubits in up-first order.
class NumericState {
public:
    NumericState() = default;
    explicit NumericState(int n);
    NumericState(int n, Eigen::VectorXcd amps);

    static NumericState basis(int n, Config config);

    int qubits() const { return n_; }
    std::size_t dim() const { return static_cast<std::size_t>(amps_.size()); }
    const Eigen::VectorXcd& vector() const { return amps_; }
    Eigen::VectorXcd& vector() { return amps_; }

    Complex amplitude(Config config) const { return amps_[dense_index(config, n_)]; }
    void set(Config config, Complex amp) { amps_[dense_index(config, n_)] = amp; }

    double norm() const { return amps_.norm(); }
    NumericState normalized() const;

private:
    int n_ = 0;
    Eigen::VectorXcd amps_;
};

}  // namespace spinmult
