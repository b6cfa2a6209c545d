#pragma once

#include "spinmult/state.hpp"

#include <Eigen/Dense>

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace spinmult {

/// Reduced state of some qubits; index order matches the kept particles,
/// up-first.
class DensityMatrix {
public:
    DensityMatrix(int qubits, Eigen::MatrixXcd rho);
    static DensityMatrix pure(const NumericState& psi);

    int qubits() const { return n_; }
    const Eigen::MatrixXcd& matrix() const { return rho_; }

    Complex trace() const { return rho_.trace(); }
    double purity() const;
    double hermiticity_error() const;
    double min_eigenvalue() const;

private:
    int n_;
    Eigen::MatrixXcd rho_;
};

enum class MeasurementBasis { Z, X, Y };

inline constexpr MeasurementBasis kPauliBases[] = {MeasurementBasis::Z, MeasurementBasis::X, MeasurementBasis::Y};

std::string to_string(MeasurementBasis basis);
MeasurementBasis parse_basis(std::string_view text);

/// Outcome names: Z "up"/"down", X "+"/"-", Y "+i"/"-i".
std::string outcome_label(MeasurementBasis basis, int outcome);

enum class ThreeQubitClass { Product, Biseparable, W, GHZ };

std::string to_string(ThreeQubitClass c);

struct MeasureTolerances {
    double purity = 1e-9;        // a site is pure when Tr rho^2 >= 1 - purity
    double concurrence = 1e-9;   // Bell pair when C >= 1 - concurrence
    double probability = 1e-12;  // branches below this are dropped
    double tangle = 1e-9;        // GHZ class when tau > tangle
};

/// Reduced density matrix of the kept particles (non-empty proper subset).
DensityMatrix partial_trace(const NumericState& psi, const std::set<int>& keep);

/// Tr rho_k^2 for every particle.
std::vector<double> single_site_purities(const NumericState& psi);

bool is_fully_product(const NumericState& psi, const MeasureTolerances& tol = {});

/// Meyer-Wallach Q in linear-entropy form.
double meyer_wallach_q(const NumericState& psi);

/// Wootters concurrence of a two-qubit density matrix.
double concurrence(const DensityMatrix& rho);

/// Coffman-Kundu-Wootters residual tangle of a three-qubit pure state.
double three_tangle(const NumericState& psi);

ThreeQubitClass classify_three_qubit(const NumericState& psi, const MeasureTolerances& tol = {});

struct SiteBasis {
    int site;
    MeasurementBasis basis;
    bool operator==(const SiteBasis&) const = default;
};

struct Branch {
    double probability;
    std::string outcome;
    NumericState post_state;  // normalized, on the unmeasured particles
};

/// Born-rule branches of a single-site projective measurement.
std::vector<Branch> measure_branches(const NumericState& psi, int site, MeasurementBasis basis,
                                     const MeasureTolerances& tol = {});

/// Branches of measuring several sites at once. Outcome labels are the
/// per-site labels joined by ','.
std::vector<Branch> measure_sites(const NumericState& psi, const std::vector<SiteBasis>& plan,
                                  const MeasureTolerances& tol = {});

inline constexpr int kMaxSearchQubits = 6;

struct PersistencyResult {
    std::optional<int> value;       // nullopt: not found up to k_max
    std::vector<SiteBasis> witness;
};

/// Smallest number of measured sites (non-adaptive, bases drawn from the
/// given set) after which every outcome leaves a fully product state.
PersistencyResult persistency(const NumericState& psi, const std::vector<MeasurementBasis>& bases,
                              int k_max, const MeasureTolerances& tol = {});

struct PairConnectivity {
    int i;
    int j;
    bool connectable;
    std::vector<SiteBasis> witness;
};

/// Whether some basis assignment on the other sites projects (i, j) onto a
/// maximally entangled pair for every outcome.
PairConnectivity is_pair_connectable(const NumericState& psi, int i, int j, const MeasureTolerances& tol = {});

struct ConnectednessReport {
    bool maximally_connected;
    std::vector<PairConnectivity> pairs;
};

ConnectednessReport maximal_connectedness(const NumericState& psi, const MeasureTolerances& tol = {});

}  // namespace spinmult
