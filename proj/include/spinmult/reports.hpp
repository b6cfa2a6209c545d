#pragma once

#include "spinmult/coupling.hpp"
#include "spinmult/measures.hpp"
#include "spinmult/operators.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace spinmult {

struct OperatorCheck {
    std::string name;
    double eigenvalue;
    double residual;
    bool passed;
};

struct LabelVerification {
    std::string label;
    std::vector<OperatorCheck> checks;
    bool passed;
};

struct VerifyReport {
    std::string tree;
    double tolerance;
    std::vector<LabelVerification> labels;
    bool passed;
};

/// Checks one state against every operator of the commuting set, with
/// eigenvalues read from the label.
LabelVerification verify_state(const std::vector<CommutingOperator>& ops, const CoupledLabel& label,
                               const NumericState& psi, double tol);

/// Verifies every expanded state of the tree. Up to 10 qubits.
VerifyReport run_verify(const CouplingTree& tree, double tol);

nlohmann::json to_json(const VerifyReport& report);
std::string to_text(const VerifyReport& report);

struct BranchSummary {
    int site;
    double probability;
    std::string outcome;
    std::optional<ThreeQubitClass> three_qubit_class;
};

struct MeasuresReport {
    int qubits;
    double q;
    std::optional<int> persistency;              // unset when n > 6 or not found
    std::vector<SiteBasis> persistency_witness;
    std::optional<bool> maximally_connected;     // unset when n < 3 or n > 6
    std::vector<PairConnectivity> pairs;
    std::vector<BranchSummary> branches;         // Z-measurement of each site
};

struct MeasuresOptions {
    bool z_branches = false;
    MeasureTolerances tolerances;
};

MeasuresReport run_measures(const NumericState& psi, const MeasuresOptions& options = {});

nlohmann::json to_json(const MeasuresReport& report);

}  // namespace spinmult
