#include "spinmult/table.hpp"

#include "spinmult/state_file.hpp"

#include <sstream>
#include <stdexcept>

namespace spinmult {

using nlohmann::json;

TableFormat parse_table_format(std::string_view text) {
    if (text == "text") return TableFormat::Text;
    if (text == "json") return TableFormat::Json;
    if (text == "latex") return TableFormat::Latex;
    throw std::invalid_argument("unknown table format '" + std::string(text) + "'");
}

namespace {

std::string latex_fraction(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return "\\frac{" + num.str() + "}{" + den.str() + "}";
}

std::string latex_half_integer(int twice) {
    std::string sign = twice < 0 ? "-" : "";
    int a = twice < 0 ? -twice : twice;
    if (a % 2 == 0) return sign + std::to_string(a / 2);
    return sign + "\\frac{" + std::to_string(a) + "}{2}";
}

std::string latex_node_name(const std::string& name) {
    if (name.size() <= 1) return name;
    return "S_{" + name.substr(1) + "}";
}

std::string latex_ket(Config c, int n) {
    std::string s = "|";
    for (int k = 1; k <= n; ++k) s += particle_up(c, n, k) ? "\\uparrow" : "\\downarrow";
    return s + "\\rangle";
}

std::string text_table(const CouplingTree& tree, const std::vector<BasisState>& basis) {
    std::ostringstream out;
    out << "# tree " << tree.to_string() << "  n=" << tree.particle_count() << "  states=" << basis.size() << '\n';
    for (const auto& [label, state] : basis) out << '|' << label.to_string() << "> = " << state.to_string() << '\n';
    return out.str();
}

std::string json_table(const CouplingTree& tree, const std::vector<BasisState>& basis) {
    json rows = json::array();
    for (const auto& [label, state] : basis) {
        json inter = json::array();
        for (int id : tree.internal_nodes())
            inter.push_back({{"node", tree.node_name(id)}, {"two_j", label.node_spin(id).two_j}});
        json amps = json::array();
        for (const auto& [c, a] : state.amplitudes())
            amps.push_back({{"config", config_string(c, state.qubits())}, {"amp", radical_to_json(a)}});
        rows.push_back({{"label", label.to_string()},
                        {"intermediate", inter},
                        {"two_m", label.total_m().two_m},
                        {"amplitudes", amps}});
    }
    json doc = {{"tree", tree.to_string()}, {"n", tree.particle_count()}, {"rows", rows}};
    return doc.dump(2) + "\n";
}

std::string latex_table(const CouplingTree& tree, const std::vector<BasisState>& basis) {
    std::ostringstream out;
    out << "% tree " << tree.to_string() << '\n';
    out << "\\begin{eqnarray}\n";
    for (std::size_t row = 0; row < basis.size(); ++row) {
        const auto& [label, state] = basis[row];
        out << "&&|";
        bool first = true;
        for (int id : tree.internal_nodes()) {
            out << (first ? "" : ", ") << latex_node_name(tree.node_name(id)) << "="
                << latex_half_integer(label.node_spin(id).two_j);
            first = false;
        }
        out << (first ? "" : ", ") << "M=" << latex_half_integer(label.total_m().two_m) << "\\rangle=";
        bool lead = true;
        for (const auto& [c, a] : state.amplitudes()) {
            std::string coeff = latex_coefficient(a);
            if (!lead && (coeff.empty() || coeff.front() != '-')) out << '+';
            out << coeff << latex_ket(c, state.qubits());
            lead = false;
        }
        out << (row + 1 < basis.size() ? ",\\\\\n" : "\n");
    }
    out << "\\end{eqnarray}\n";
    return out.str();
}

}  // namespace

std::string latex_coefficient(const SignedRadical& r) {
    if (r.is_zero()) return "0";
    std::string sign = r.sign() < 0 ? "-" : "";
    if (auto root = exact_sqrt(r.radicand())) {
        if (*root == 1) return sign;
        return sign + latex_fraction(*root);
    }
    return sign + "\\sqrt{" + latex_fraction(r.radicand()) + "}";
}

std::string emit_table(const CouplingTree& tree, TableFormat format) {
    const auto basis = full_basis(tree);
    switch (format) {
        case TableFormat::Text: return text_table(tree, basis);
        case TableFormat::Json: return json_table(tree, basis);
        case TableFormat::Latex: return latex_table(tree, basis);
    }
    throw std::logic_error("unknown table format");
}

}  // namespace spinmult
