#include "spinmult/state.hpp"

#include <stdexcept>

namespace spinmult {

std::string config_string(Config config, int n) {
    std::string s(static_cast<std::size_t>(n), 'd');
    for (int k = 1; k <= n; ++k)
        if (particle_up(config, n, k)) s[static_cast<std::size_t>(k - 1)] = 'u';
    return s;
}

Config parse_config(std::string_view text) {
    if (text.empty() || text.size() > kMaxQubits) throw std::invalid_argument("config length out of range");
    Config c = 0;
    for (char ch : text) {
        c <<= 1;
        if (ch == 'u')
            c |= 1;
        else if (ch != 'd')
            throw std::invalid_argument("config '" + std::string(text) + "' must use only 'u' and 'd'");
    }
    return c;
}

bool particle_up(Config config, int n, int particle) { return (config >> (n - particle)) & 1U; }

SignedRadical ExactState::amplitude(Config config) const {
    auto it = amps_.find(config);
    return it == amps_.end() ? SignedRadical::zero() : it->second;
}

void ExactState::set(Config config, const SignedRadical& amp) {
    if (amp.is_zero())
        amps_.erase(config);
    else
        amps_[config] = amp;
}

Rational ExactState::norm_squared() const {
    Rational total = 0;
    for (const auto& [c, a] : amps_) total += a.square();
    return total;
}

NumericState ExactState::to_numeric() const {
    NumericState out(n_);
    for (const auto& [c, a] : amps_) out.set(c, radical_to_float(a));
    return out;
}

ExactState ExactState::operator-() const {
    ExactState out(n_);
    for (const auto& [c, a] : amps_) out.amps_.emplace(c, -a);
    return out;
}

std::string ExactState::to_string() const {
    std::string s;
    for (const auto& [c, a] : amps_) {
        if (!s.empty()) s += ' ';
        s += a.to_string() + " " + config_string(c, n_);
    }
    return s.empty() ? "0" : s;
}

RadicalSum exact_inner(const ExactState& a, const ExactState& b) {
    if (a.qubits() != b.qubits()) throw std::invalid_argument("exact_inner: qubit count mismatch");
    RadicalSum sum;
    for (const auto& [c, amp] : a.amplitudes()) {
        auto it = b.amplitudes().find(c);
        if (it != b.amplitudes().end()) sum += amp * it->second;
    }
    return sum;
}

bool equal_up_to_sign(const ExactState& a, const ExactState& b) { return a == b || a == -b; }

NumericState::NumericState(int n) : n_(n) {
    if (n < 0 || n > 30) throw std::invalid_argument("NumericState: qubit count out of range");
    amps_ = Eigen::VectorXcd::Zero(Eigen::Index{1} << n);
}

NumericState::NumericState(int n, Eigen::VectorXcd amps) : n_(n), amps_(std::move(amps)) {
    if (n < 0 || n > 30 || amps_.size() != (Eigen::Index{1} << n))
        throw std::invalid_argument("NumericState: vector size must be 2^n");
}

NumericState NumericState::basis(int n, Config config) {
    NumericState s(n);
    s.set(config, 1.0);
    return s;
}

NumericState NumericState::normalized() const {
    double nrm = norm();
    if (nrm == 0.0) throw std::domain_error("cannot normalize the zero vector");
    return NumericState(n_, amps_ / nrm);
}

}  // namespace spinmult
