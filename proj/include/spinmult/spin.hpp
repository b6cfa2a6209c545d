#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace spinmult {

/// Angular momentum quantum number, stored doubled so spin-1/2 is two_j = 1.
struct Spin {
    int two_j = 0;

    constexpr Spin() = default;
    explicit Spin(int twice);

    static Spin half() { return Spin(1); }
    /// Dimension of the multiplet, 2j + 1.
    int multiplicity() const { return two_j + 1; }
    /// Casimir eigenvalue j(j+1) with hbar = 1.
    double casimir() const { return 0.25 * two_j * (two_j + 2); }

    std::string str() const;
    auto operator<=>(const Spin&) const = default;
};

/// Magnetic quantum number, stored doubled.
struct SpinProjection {
    int two_m = 0;

    constexpr SpinProjection() = default;
    constexpr explicit SpinProjection(int twice) : two_m(twice) {}

    double value() const { return 0.5 * two_m; }
    std::string str() const;
    auto operator<=>(const SpinProjection&) const = default;
};

/// True when |m| <= j and m, j have matching parity.
bool is_valid_projection(Spin j, SpinProjection m);

/// "1/2", "-3/2", "2".
std::string format_half_integer(int twice);
/// Inverse of format_half_integer; also accepts "0.5"-style decimals.
int parse_half_integer(std::string_view text);

}  // namespace spinmult
