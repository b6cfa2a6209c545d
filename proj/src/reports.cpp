#include "spinmult/reports.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace spinmult {

using nlohmann::json;

LabelVerification verify_state(const std::vector<CommutingOperator>& ops, const CoupledLabel& label,
                               const NumericState& psi, double tol) {
    LabelVerification out{label.to_string(), {}, true};
    for (const auto& op : ops) {
        const double lambda = op.eigenvalue(label);
        EigenCheck check = verify_eigenstate(op.op, psi, lambda, tol);
        out.checks.push_back({op.name, lambda, check.residual, check.passed});
        out.passed = out.passed && check.passed;
    }
    return out;
}

VerifyReport run_verify(const CouplingTree& tree, double tol) {
    if (tree.particle_count() > 10) throw std::invalid_argument("run_verify: at most 10 qubits");
    const auto ops = commuting_set(tree);
    VerifyReport report{tree.to_string(), tol, {}, true};
    for (const auto& [label, state] : full_basis(tree)) {
        report.labels.push_back(verify_state(ops, label, state.to_numeric(), tol));
        report.passed = report.passed && report.labels.back().passed;
    }
    return report;
}

json to_json(const VerifyReport& report) {
    json labels = json::array();
    for (const auto& l : report.labels) {
        json checks = json::array();
        for (const auto& c : l.checks)
            checks.push_back({{"operator", c.name}, {"eigenvalue", c.eigenvalue}, {"residual", c.residual},
                              {"passed", c.passed}});
        labels.push_back({{"label", l.label}, {"checks", checks}, {"passed", l.passed}});
    }
    return {{"tree", report.tree}, {"tolerance", report.tolerance}, {"labels", labels}, {"passed", report.passed}};
}

std::string to_text(const VerifyReport& report) {
    std::ostringstream out;
    out << "# verify " << report.tree << "  tol=" << report.tolerance << '\n';
    for (const auto& l : report.labels) {
        double worst = 0.0;
        for (const auto& c : l.checks) worst = std::max(worst, c.residual);
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3e", worst);
        out << (l.passed ? "PASS " : "FAIL ") << l.label << "  max_residual=" << buf << '\n';
        for (const auto& c : l.checks)
            if (!c.passed) out << "     " << c.name << " expected " << c.eigenvalue << " residual " << c.residual << '\n';
    }
    out << (report.passed ? "all states verified\n" : "verification FAILED\n");
    return out.str();
}

MeasuresReport run_measures(const NumericState& psi, const MeasuresOptions& options) {
    const int n = psi.qubits();
    MeasuresReport report{n, meyer_wallach_q(psi), std::nullopt, {}, std::nullopt, {}, {}};
    if (n <= kMaxSearchQubits) {
        const std::vector<MeasurementBasis> bases(std::begin(kPauliBases), std::end(kPauliBases));
        auto p = persistency(psi, bases, n, options.tolerances);
        report.persistency = p.value;
        report.persistency_witness = p.witness;
        if (n >= 3) {
            auto c = maximal_connectedness(psi, options.tolerances);
            report.maximally_connected = c.maximally_connected;
            report.pairs = std::move(c.pairs);
        }
    }
    if (options.z_branches) {
        for (int site = 1; site <= n; ++site)
            for (auto& b : measure_branches(psi, site, MeasurementBasis::Z, options.tolerances)) {
                std::optional<ThreeQubitClass> cls;
                if (b.post_state.qubits() == 3) cls = classify_three_qubit(b.post_state, options.tolerances);
                report.branches.push_back({site, b.probability, b.outcome, cls});
            }
    }
    return report;
}

namespace {

json witness_json(const std::vector<SiteBasis>& witness) {
    json out = json::array();
    for (const auto& sb : witness) out.push_back({{"site", sb.site}, {"basis", to_string(sb.basis)}});
    return out;
}

}  // namespace

json to_json(const MeasuresReport& report) {
    json pairs = json::array();
    for (const auto& p : report.pairs)
        pairs.push_back({{"i", p.i}, {"j", p.j}, {"connectable", p.connectable}, {"witness", witness_json(p.witness)}});
    json branches = json::array();
    for (const auto& b : report.branches) {
        json entry = {{"site", b.site}, {"probability", b.probability}, {"outcome", b.outcome}};
        entry["class"] = b.three_qubit_class ? json(to_string(*b.three_qubit_class)) : json(nullptr);
        branches.push_back(entry);
    }
    json out = {{"n", report.qubits}, {"q", report.q}, {"pairs", pairs}};
    out["persistency"] = report.persistency ? json(*report.persistency) : json(nullptr);
    out["persistency_witness"] = witness_json(report.persistency_witness);
    out["maximally_connected"] = report.maximally_connected ? json(*report.maximally_connected) : json(nullptr);
    if (!report.branches.empty()) out["branches"] = branches;
    return out;
}

}  // namespace spinmult
