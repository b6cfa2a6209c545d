#include "spinmult/state_file.hpp"

#include <set>
#include <stdexcept>

namespace spinmult {

using nlohmann::json;

NumericState to_numeric(const StateVector& state) {
    if (const auto* exact = std::get_if<ExactState>(&state)) return exact->to_numeric();
    return std::get<NumericState>(state);
}

json radical_to_json(const SignedRadical& r) {
    return {{"sign", r.sign()}, {"num", r.num().str()}, {"den", r.den().str()}};
}

namespace {

BigInt parse_bigint(const json& j, const char* field) {
    if (!j.is_string()) throw std::invalid_argument(std::string("radical field '") + field + "' must be a string");
    const std::string s = j.get<std::string>();
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument(std::string("radical field '") + field + "' is not a non-negative integer");
    return BigInt(s);
}

}  // namespace

SignedRadical radical_from_json(const json& j) {
    if (!j.is_object() || !j.contains("sign") || !j.contains("num") || !j.contains("den"))
        throw std::invalid_argument("radical needs sign, num and den");
    if (!j["sign"].is_number_integer()) throw std::invalid_argument("radical sign must be an integer");
    int sign = j["sign"].get<int>();
    if (sign < -1 || sign > 1) throw std::invalid_argument("radical sign must be -1, 0 or 1");
    BigInt num = parse_bigint(j["num"], "num");
    BigInt den = parse_bigint(j["den"], "den");
    if (den == 0) throw std::invalid_argument("radical denominator is zero");
    if ((sign == 0) != (num == 0)) throw std::invalid_argument("radical sign is zero iff num is zero");
    return {sign, num, den};
}

StateVector parse_state_file(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("state file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("state file must be a JSON object");
    if (!doc.contains("n") || !doc["n"].is_number_integer()) throw std::invalid_argument("state file needs integer 'n'");
    if (!doc.contains("flavor") || !doc["flavor"].is_string())
        throw std::invalid_argument("state file needs 'flavor'");
    if (!doc.contains("amplitudes") || !doc["amplitudes"].is_array())
        throw std::invalid_argument("state file needs an 'amplitudes' array");

    const int n = doc["n"].get<int>();
    const std::string flavor = doc["flavor"].get<std::string>();
    if (flavor != "exact" && flavor != "numeric")
        throw std::invalid_argument("flavor must be 'exact' or 'numeric'");
    if (n < 1 || n > (flavor == "exact" ? kMaxQubits : 30)) throw std::invalid_argument("qubit count out of range");
    const auto& entries = doc["amplitudes"];
    if (entries.empty()) throw std::invalid_argument("state file has no amplitudes");

    std::set<Config> seen;
    auto read_config = [&](const json& entry) {
        if (!entry.is_object() || !entry.contains("config") || !entry["config"].is_string() || !entry.contains("amp"))
            throw std::invalid_argument("amplitude entries need 'config' and 'amp'");
        const std::string cs = entry["config"].get<std::string>();
        if (static_cast<int>(cs.size()) != n)
            throw std::invalid_argument("config '" + cs + "' does not have " + std::to_string(n) + " symbols");
        Config c = parse_config(cs);
        if (!seen.insert(c).second) throw std::invalid_argument("duplicate config '" + cs + "'");
        return c;
    };

    if (flavor == "exact") {
        ExactState state(n);
        for (const auto& entry : entries) {
            Config c = read_config(entry);
            SignedRadical amp = radical_from_json(entry["amp"]);
            if (amp.is_zero()) throw std::invalid_argument("zero amplitudes must not be stored");
            state.set(c, amp);
        }
        if (!state.is_normalized())
            throw std::invalid_argument("state is not normalized: sum of squares is " + state.norm_squared().str());
        return state;
    }

    NumericState state(n);
    for (const auto& entry : entries) {
        Config c = read_config(entry);
        const auto& amp = entry["amp"];
        if (!amp.is_object() || !amp.contains("re") || !amp.contains("im") || !amp["re"].is_number() ||
            !amp["im"].is_number())
            throw std::invalid_argument("numeric amplitudes need numbers 're' and 'im'");
        Complex z(amp["re"].get<double>(), amp["im"].get<double>());
        if (z == Complex(0.0)) throw std::invalid_argument("zero amplitudes must not be stored");
        state.set(c, z);
    }
    const double norm2 = state.vector().squaredNorm();
    if (std::abs(norm2 - 1.0) > kNumericNormTolerance)
        throw std::invalid_argument("state is not normalized: sum of squares is " + std::to_string(norm2));
    return state;
}

std::string emit_state_file(const ExactState& state) {
    json amps = json::array();
    for (const auto& [c, a] : state.amplitudes())
        amps.push_back({{"config", config_string(c, state.qubits())}, {"amp", radical_to_json(a)}});
    json doc = {{"n", state.qubits()}, {"flavor", "exact"}, {"amplitudes", amps}};
    return doc.dump(2) + "\n";
}

std::string emit_state_file(const NumericState& state) {
    json amps = json::array();
    for (std::size_t i = 0; i < state.dim(); ++i) {
        Complex z = state.vector()[static_cast<Eigen::Index>(i)];
        if (z == Complex(0.0)) continue;
        amps.push_back({{"config", config_string(config_from_dense(i, state.qubits()), state.qubits())},
                        {"amp", {{"re", z.real()}, {"im", z.imag()}}}});
    }
    json doc = {{"n", state.qubits()}, {"flavor", "numeric"}, {"amplitudes", amps}};
    return doc.dump(2) + "\n";
}

std::string emit_state_file(const StateVector& state) {
    return std::visit([](const auto& s) { return emit_state_file(s); }, state);
}

}  // namespace spinmult
