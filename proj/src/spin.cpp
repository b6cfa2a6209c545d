#include "spinmult/spin.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace spinmult {

Spin::Spin(int twice) : two_j(twice) {
    if (twice < 0) throw std::invalid_argument("Spin: negative two_j");
}

std::string Spin::str() const { return format_half_integer(two_j); }

std::string SpinProjection::str() const { return format_half_integer(two_m); }

bool is_valid_projection(Spin j, SpinProjection m) {
    return std::abs(m.two_m) <= j.two_j && (j.two_j - m.two_m) % 2 == 0;
}

std::string format_half_integer(int twice) {
    if (twice % 2 == 0) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
}

namespace {

int parse_int(std::string_view text) {
    int value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last)
        throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    return value;
}

}  // namespace

int parse_half_integer(std::string_view text) {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        int num = parse_int(text.substr(0, slash));
        int den = parse_int(text.substr(slash + 1));
        if (den == 2) return num;
        if (den == 1) return 2 * num;
        throw std::invalid_argument("not a half-integer: '" + std::string(text) + "'");
    }
    if (text.find('.') != std::string_view::npos) {
        double v = std::stod(std::string(text));
        double twice = std::round(2.0 * v);
        if (std::abs(2.0 * v - twice) > 1e-9)
            throw std::invalid_argument("not a half-integer: '" + std::string(text) + "'");
        return static_cast<int>(twice);
    }
    return 2 * parse_int(text);
}

}  // namespace spinmult
