#pragma once

#include "spinmult/coupling.hpp"
#include "spinmult/state.hpp"

#include <Eigen/Sparse>

#include <set>
#include <string>
#include <vector>

namespace spinmult {

enum class Axis { X, Y, Z };

/// Sparse operator on n qubits, rows/cols in up-first dense order. hbar = 1.
class SparseOperator {
public:
    using Matrix = Eigen::SparseMatrix<Complex, Eigen::ColMajor, std::ptrdiff_t>;

    SparseOperator(int n, Matrix matrix, bool hermitian);

    int qubits() const { return n_; }
    std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }
    const Matrix& matrix() const { return matrix_; }
    bool hermitian() const { return hermitian_; }

    /// Max |A - A^dagger| entry.
    double hermiticity_error() const;

    friend SparseOperator operator+(const SparseOperator& a, const SparseOperator& b);
    friend SparseOperator operator*(const SparseOperator& a, const SparseOperator& b);
    friend SparseOperator operator*(double s, const SparseOperator& a);

private:
    int n_;
    Matrix matrix_;
    bool hermitian_;
};

SparseOperator identity_operator(int n);

/// Spin-1/2 operator of one particle (1-based) along an axis.
SparseOperator site_operator(int n, int particle, Axis axis);

/// (sum over k in A of S_k)^2.
SparseOperator subset_casimir(int n, const std::set<int>& subset);

/// Sum of S_z over all particles.
SparseOperator total_sz(int n);

/// Matrix-vector product, not normalized.
NumericState apply(const SparseOperator& op, const NumericState& psi);

/// Frobenius norm of [A, B].
double commutator_norm(const SparseOperator& a, const SparseOperator& b);

struct EigenCheck {
    bool passed;
    double residual;
};

inline constexpr double kDefaultEigenTolerance = 1e-12;

/// ||op psi - lambda psi|| against tol.
EigenCheck verify_eigenstate(const SparseOperator& op, const NumericState& psi, double lambda,
                             double tol = kDefaultEigenTolerance);

/// One member of the complete commuting set of a coupling tree.
struct CommutingOperator {
    std::string name;          // "S1^2", "S12^2", "S^2", "Sz"
    int node = -1;             // tree node for Casimirs, -1 for Sz
    SparseOperator op;

    /// Eigenvalue this operator must have on the given label's state.
    double eigenvalue(const CoupledLabel& label) const;
};

/// Leaf Casimirs, every internal-node Casimir (root = total S^2) and total Sz.
std::vector<CommutingOperator> commuting_set(const CouplingTree& tree);

}  // namespace spinmult
