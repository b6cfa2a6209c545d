#include "spinmult/operators.hpp"

#include <stdexcept>

namespace spinmult {

namespace {

using Triplet = Eigen::Triplet<Complex, std::ptrdiff_t>;

void require_qubits(int n) {
    if (n < 1 || n > 20) throw std::invalid_argument("operator qubit count out of range");
}

}  // namespace

SparseOperator::SparseOperator(int n, Matrix matrix, bool hermitian)
    : n_(n), matrix_(std::move(matrix)), hermitian_(hermitian) {
    if (matrix_.rows() != matrix_.cols() || matrix_.rows() != (std::ptrdiff_t{1} << n))
        throw std::invalid_argument("SparseOperator: matrix must be 2^n x 2^n");
    matrix_.makeCompressed();
}

double SparseOperator::hermiticity_error() const {
    Matrix diff = matrix_ - Matrix(matrix_.adjoint());
    double worst = 0.0;
    for (std::ptrdiff_t k = 0; k < diff.outerSize(); ++k)
        for (Matrix::InnerIterator it(diff, k); it; ++it) worst = std::max(worst, std::abs(it.value()));
    return worst;
}

SparseOperator operator+(const SparseOperator& a, const SparseOperator& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("operator dimension mismatch");
    return {a.n_, a.matrix_ + b.matrix_, a.hermitian_ && b.hermitian_};
}

SparseOperator operator*(const SparseOperator& a, const SparseOperator& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("operator dimension mismatch");
    SparseOperator::Matrix product = a.matrix_ * b.matrix_;
    SparseOperator out(a.n_, product, false);
    out.hermitian_ = a.hermitian_ && b.hermitian_ && out.hermiticity_error() <= 1e-14;
    return out;
}

SparseOperator operator*(double s, const SparseOperator& a) {
    return {a.n_, SparseOperator::Matrix(Complex(s) * a.matrix_), a.hermitian_};
}

SparseOperator identity_operator(int n) {
    require_qubits(n);
    SparseOperator::Matrix m(std::ptrdiff_t{1} << n, std::ptrdiff_t{1} << n);
    m.setIdentity();
    return {n, m, true};
}

SparseOperator site_operator(int n, int particle, Axis axis) {
    require_qubits(n);
    if (particle < 1 || particle > n)
        throw std::out_of_range("site_operator: particle " + std::to_string(particle) + " not in 1.." +
                                std::to_string(n));
    const std::ptrdiff_t dim = std::ptrdiff_t{1} << n;
    const std::ptrdiff_t bit = std::ptrdiff_t{1} << (n - particle);
    std::vector<Triplet> entries;
    entries.reserve(static_cast<std::size_t>(dim));
    for (std::ptrdiff_t col = 0; col < dim; ++col) {
        const bool down = (col & bit) != 0;  // up-first ordering
        switch (axis) {
            case Axis::Z:
                entries.emplace_back(col, col, down ? -0.5 : 0.5);
                break;
            case Axis::X:
                entries.emplace_back(col ^ bit, col, 0.5);
                break;
            case Axis::Y:
                // <up|Sy|down> = -i/2, <down|Sy|up> = +i/2
                entries.emplace_back(col ^ bit, col, down ? Complex(0, -0.5) : Complex(0, 0.5));
                break;
        }
    }
    SparseOperator::Matrix m(dim, dim);
    m.setFromTriplets(entries.begin(), entries.end());
    return {n, m, true};
}

SparseOperator subset_casimir(int n, const std::set<int>& subset) {
    if (subset.empty()) throw std::invalid_argument("subset_casimir: empty subset");
    std::optional<SparseOperator> total;
    for (Axis axis : {Axis::X, Axis::Y, Axis::Z}) {
        std::optional<SparseOperator> component;
        for (int k : subset) {
            SparseOperator s = site_operator(n, k, axis);
            component = component ? *component + s : s;
        }
        SparseOperator square = *component * *component;
        total = total ? *total + square : square;
    }
    SparseOperator::Matrix m = total->matrix().pruned(1e-300);
    return {n, m, true};
}

SparseOperator total_sz(int n) {
    require_qubits(n);
    const std::ptrdiff_t dim = std::ptrdiff_t{1} << n;
    std::vector<Triplet> entries;
    for (std::ptrdiff_t col = 0; col < dim; ++col) {
        int downs = 0;
        for (std::ptrdiff_t c = col; c; c >>= 1) downs += static_cast<int>(c & 1);
        double m = 0.5 * (n - 2 * downs);
        if (m != 0.0) entries.emplace_back(col, col, m);
    }
    SparseOperator::Matrix mat(dim, dim);
    mat.setFromTriplets(entries.begin(), entries.end());
    return {n, mat, true};
}

NumericState apply(const SparseOperator& op, const NumericState& psi) {
    if (op.qubits() != psi.qubits())
        throw std::invalid_argument("apply: operator acts on " + std::to_string(op.qubits()) +
                                    " qubits, state has " + std::to_string(psi.qubits()));
    return {psi.qubits(), Eigen::VectorXcd(op.matrix() * psi.vector())};
}

double commutator_norm(const SparseOperator& a, const SparseOperator& b) {
    if (a.qubits() != b.qubits()) throw std::invalid_argument("commutator: dimension mismatch");
    SparseOperator::Matrix c = a.matrix() * b.matrix() - b.matrix() * a.matrix();
    double sum = 0.0;
    for (std::ptrdiff_t k = 0; k < c.outerSize(); ++k)
        for (SparseOperator::Matrix::InnerIterator it(c, k); it; ++it) sum += std::norm(it.value());
    return std::sqrt(sum);
}

EigenCheck verify_eigenstate(const SparseOperator& op, const NumericState& psi, double lambda, double tol) {
    NumericState image = apply(op, psi);
    double residual = (image.vector() - lambda * psi.vector()).norm();
    return {residual <= tol, residual};
}

double CommutingOperator::eigenvalue(const CoupledLabel& label) const {
    if (node < 0) return label.total_m().value();
    return label.node_spin(node).casimir();
}

std::vector<CommutingOperator> commuting_set(const CouplingTree& tree) {
    if (!tree.all_qubits()) throw std::invalid_argument("commuting_set: operators are built for spin-1/2 leaves");
    const int n = tree.particle_count();
    std::vector<CommutingOperator> out;
    for (int p = 1; p <= n; ++p) {
        for (int id = 0; id < tree.node_count(); ++id) {
            const auto& node = tree.node(id);
            if (node.is_leaf() && node.particle == p)
                out.push_back({"S" + std::to_string(p) + "^2", id, subset_casimir(n, {p})});
        }
    }
    for (int id : tree.internal_nodes()) {
        const auto& ps = tree.node(id).particles;
        out.push_back({tree.node_name(id) + "^2", id, subset_casimir(n, std::set<int>(ps.begin(), ps.end()))});
    }
    out.push_back({"Sz", -1, total_sz(n)});
    return out;
}

}  // namespace spinmult
