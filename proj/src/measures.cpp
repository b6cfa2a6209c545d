#include "spinmult/measures.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace spinmult {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void require_normalized(const NumericState& psi, const char* who) {
    if (std::abs(psi.norm() - 1.0) > 1e-9) throw std::invalid_argument(std::string(who) + ": state is not normalized");
}

void require_site(int n, int site, const char* who) {
    if (site < 1 || site > n)
        throw std::out_of_range(std::string(who) + ": site " + std::to_string(site) + " not in 1.." +
                                std::to_string(n));
}

// Up-first components of a measurement basis vector.
std::array<Complex, 2> basis_vector(MeasurementBasis basis, int outcome) {
    switch (basis) {
        case MeasurementBasis::Z:
            return outcome == 0 ? std::array<Complex, 2>{1.0, 0.0} : std::array<Complex, 2>{0.0, 1.0};
        case MeasurementBasis::X:
            return {kInvSqrt2, outcome == 0 ? kInvSqrt2 : -kInvSqrt2};
        case MeasurementBasis::Y:
            return {kInvSqrt2, Complex(0.0, outcome == 0 ? kInvSqrt2 : -kInvSqrt2)};
    }
    throw std::logic_error("unknown basis");
}

// <b|_site psi, leaving the other particles in order. Unnormalized.
NumericState project_site(const NumericState& psi, int site, MeasurementBasis basis, int outcome) {
    const int n = psi.qubits();
    const auto b = basis_vector(basis, outcome);
    const std::size_t bit = std::size_t{1} << (n - site);
    const std::size_t low_mask = bit - 1;
    NumericState out(n - 1);
    for (std::size_t r = 0; r < out.dim(); ++r) {
        std::size_t high = (r & ~low_mask) << 1;
        std::size_t base = high | (r & low_mask);
        out.vector()[static_cast<Eigen::Index>(r)] =
            std::conj(b[0]) * psi.vector()[static_cast<Eigen::Index>(base)] +
            std::conj(b[1]) * psi.vector()[static_cast<Eigen::Index>(base | bit)];
    }
    return out;
}

// Reduced matrix of `keep` (sorted particle indices, may be all particles).
Eigen::MatrixXcd reduce(const NumericState& psi, const std::vector<int>& keep) {
    const int n = psi.qubits();
    const int nk = static_cast<int>(keep.size());
    const std::size_t dk = std::size_t{1} << nk;
    const std::size_t de = std::size_t{1} << (n - nk);
    std::vector<bool> kept(static_cast<std::size_t>(n) + 1, false);
    for (int k : keep) kept[static_cast<std::size_t>(k)] = true;

    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dk), static_cast<Eigen::Index>(de));
    for (std::size_t idx = 0; idx < psi.dim(); ++idx) {
        std::size_t ki = 0, ei = 0;
        for (int p = 1; p <= n; ++p) {
            std::size_t b = (idx >> (n - p)) & 1U;
            if (kept[static_cast<std::size_t>(p)])
                ki = (ki << 1) | b;
            else
                ei = (ei << 1) | b;
        }
        m(static_cast<Eigen::Index>(ki), static_cast<Eigen::Index>(ei)) = psi.vector()[static_cast<Eigen::Index>(idx)];
    }
    return m * m.adjoint();
}

double site_purity(const NumericState& psi, int site) {
    Eigen::MatrixXcd rho = reduce(psi, {site});
    return (rho * rho).trace().real();
}

}  // namespace

DensityMatrix::DensityMatrix(int qubits, Eigen::MatrixXcd rho) : n_(qubits), rho_(std::move(rho)) {
    if (rho_.rows() != rho_.cols() || rho_.rows() != (Eigen::Index{1} << qubits))
        throw std::invalid_argument("DensityMatrix: matrix must be 2^n x 2^n");
}

DensityMatrix DensityMatrix::pure(const NumericState& psi) {
    return {psi.qubits(), psi.vector() * psi.vector().adjoint()};
}

double DensityMatrix::purity() const { return (rho_ * rho_).trace().real(); }

double DensityMatrix::hermiticity_error() const { return (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff(); }

double DensityMatrix::min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho_, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

std::string to_string(MeasurementBasis basis) {
    switch (basis) {
        case MeasurementBasis::Z: return "Z";
        case MeasurementBasis::X: return "X";
        case MeasurementBasis::Y: return "Y";
    }
    return "?";
}

MeasurementBasis parse_basis(std::string_view text) {
    if (text == "Z" || text == "z") return MeasurementBasis::Z;
    if (text == "X" || text == "x") return MeasurementBasis::X;
    if (text == "Y" || text == "y") return MeasurementBasis::Y;
    throw std::invalid_argument("unknown measurement basis '" + std::string(text) + "'");
}

std::string outcome_label(MeasurementBasis basis, int outcome) {
    switch (basis) {
        case MeasurementBasis::Z: return outcome == 0 ? "up" : "down";
        case MeasurementBasis::X: return outcome == 0 ? "+" : "-";
        case MeasurementBasis::Y: return outcome == 0 ? "+i" : "-i";
    }
    return "?";
}

std::string to_string(ThreeQubitClass c) {
    switch (c) {
        case ThreeQubitClass::Product: return "PRODUCT";
        case ThreeQubitClass::Biseparable: return "BISEPARABLE";
        case ThreeQubitClass::W: return "W";
        case ThreeQubitClass::GHZ: return "GHZ";
    }
    return "?";
}

DensityMatrix partial_trace(const NumericState& psi, const std::set<int>& keep) {
    const int n = psi.qubits();
    if (keep.empty() || static_cast<int>(keep.size()) >= n)
        throw std::invalid_argument("partial_trace: keep must be a non-empty proper subset");
    for (int k : keep) require_site(n, k, "partial_trace");
    std::vector<int> sorted(keep.begin(), keep.end());
    return {static_cast<int>(sorted.size()), reduce(psi, sorted)};
}

std::vector<double> single_site_purities(const NumericState& psi) {
    std::vector<double> out;
    for (int k = 1; k <= psi.qubits(); ++k) out.push_back(site_purity(psi, k));
    return out;
}

bool is_fully_product(const NumericState& psi, const MeasureTolerances& tol) {
    if (psi.qubits() <= 1) return true;
    for (int k = 1; k <= psi.qubits(); ++k)
        if (site_purity(psi, k) < 1.0 - tol.purity) return false;
    return true;
}

double meyer_wallach_q(const NumericState& psi) {
    const int n = psi.qubits();
    if (n < 1) throw std::invalid_argument("meyer_wallach_q: need at least one qubit");
    auto purities = single_site_purities(psi);
    double mean = std::accumulate(purities.begin(), purities.end(), 0.0) / n;
    return 2.0 * (1.0 - mean);
}

double concurrence(const DensityMatrix& rho) {
    if (rho.qubits() != 2) throw std::invalid_argument("concurrence: needs a two-qubit density matrix");
    Eigen::Matrix4cd flip = Eigen::Matrix4cd::Zero();
    flip(0, 3) = -1.0;
    flip(1, 2) = 1.0;
    flip(2, 1) = 1.0;
    flip(3, 0) = -1.0;
    const Eigen::Matrix4cd r = rho.matrix();
    const Eigen::Matrix4cd tilde = flip * r.conjugate() * flip;

    // eigenvalues of rho * tilde are the squared lambdas
    constexpr double kSquaredFloor = 1e-13;
    Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(r * tilde, false);
    Eigen::Vector4d lambda;
    for (int k = 0; k < 4; ++k) {
        const double sq = es.eigenvalues()[k].real();
        lambda[k] = sq < kSquaredFloor ? 0.0 : std::sqrt(sq);
    }
    std::sort(lambda.data(), lambda.data() + 4, std::greater<>());
    return std::clamp(lambda[0] - lambda[1] - lambda[2] - lambda[3], 0.0, 1.0);
}

double three_tangle(const NumericState& psi) {
    if (psi.qubits() != 3) throw std::invalid_argument("three_tangle: needs exactly three qubits");
    const double c2_split = 2.0 * (1.0 - site_purity(psi, 1));
    const double c12 = concurrence(partial_trace(psi, {1, 2}));
    const double c13 = concurrence(partial_trace(psi, {1, 3}));
    return std::max(0.0, c2_split - c12 * c12 - c13 * c13);
}

ThreeQubitClass classify_three_qubit(const NumericState& psi, const MeasureTolerances& tol) {
    if (psi.qubits() != 3) throw std::invalid_argument("classify_three_qubit: needs exactly three qubits");
    int pure_sites = 0;
    for (double p : single_site_purities(psi))
        if (p >= 1.0 - tol.purity) ++pure_sites;
    if (pure_sites == 3) return ThreeQubitClass::Product;
    if (pure_sites > 0) return ThreeQubitClass::Biseparable;
    return three_tangle(psi) > tol.tangle ? ThreeQubitClass::GHZ : ThreeQubitClass::W;
}

std::vector<Branch> measure_branches(const NumericState& psi, int site, MeasurementBasis basis,
                                     const MeasureTolerances& tol) {
    require_site(psi.qubits(), site, "measure_branches");
    return measure_sites(psi, {{site, basis}}, tol);
}

std::vector<Branch> measure_sites(const NumericState& psi, const std::vector<SiteBasis>& plan,
                                  const MeasureTolerances& tol) {
    const int n = psi.qubits();
    std::vector<SiteBasis> order = plan;
    for (const auto& sb : order) require_site(n, sb.site, "measure_sites");
    // Project highest sites first so lower indices stay valid.
    std::vector<std::size_t> perm(order.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return order[a].site > order[b].site; });
    for (std::size_t i = 1; i < perm.size(); ++i)
        if (order[perm[i]].site == order[perm[i - 1]].site)
            throw std::invalid_argument("measure_sites: site measured twice");

    const std::size_t k = order.size();
    std::vector<Branch> out;
    for (std::size_t outcomes = 0; outcomes < (std::size_t{1} << k); ++outcomes) {
        NumericState cur = psi;
        for (std::size_t idx : perm) {
            int outcome = static_cast<int>((outcomes >> (k - 1 - idx)) & 1U);
            cur = project_site(cur, order[idx].site, order[idx].basis, outcome);
        }
        double p = cur.vector().squaredNorm();
        if (p < tol.probability) continue;
        std::string label;
        for (std::size_t idx = 0; idx < k; ++idx) {
            if (idx) label += ',';
            label += outcome_label(order[idx].basis, static_cast<int>((outcomes >> (k - 1 - idx)) & 1U));
        }
        out.push_back({p, std::move(label), NumericState(cur.qubits(), cur.vector() / std::sqrt(p))});
    }
    return out;
}

namespace {

// Calls visit(plan) for every assignment of bases to sites, lexicographic in
// basis order; stops when visit returns true.
bool for_each_assignment(const std::vector<int>& sites, const std::vector<MeasurementBasis>& bases,
                         const std::function<bool(const std::vector<SiteBasis>&)>& visit) {
    std::vector<std::size_t> digit(sites.size(), 0);
    std::vector<SiteBasis> plan(sites.size());
    while (true) {
        for (std::size_t i = 0; i < sites.size(); ++i) plan[i] = {sites[i], bases[digit[i]]};
        if (visit(plan)) return true;
        std::size_t pos = sites.size();
        while (pos > 0) {
            --pos;
            if (++digit[pos] < bases.size()) break;
            digit[pos] = 0;
            if (pos == 0) return false;
        }
        if (sites.empty()) return false;
    }
}

bool for_each_subset(int n, int k, const std::function<bool(const std::vector<int>&)>& visit) {
    std::vector<int> subset(static_cast<std::size_t>(k));
    std::iota(subset.begin(), subset.end(), 1);
    while (true) {
        if (visit(subset)) return true;
        int i = k - 1;
        while (i >= 0 && subset[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
        if (i < 0) return false;
        ++subset[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
    }
}

void require_searchable(const NumericState& psi, const char* who) {
    if (psi.qubits() > kMaxSearchQubits)
        throw std::invalid_argument(std::string(who) + ": at most " + std::to_string(kMaxSearchQubits) +
                                    " qubits supported");
    require_normalized(psi, who);
}

}  // namespace

PersistencyResult persistency(const NumericState& psi, const std::vector<MeasurementBasis>& bases, int k_max,
                              const MeasureTolerances& tol) {
    require_searchable(psi, "persistency");
    if (bases.empty()) throw std::invalid_argument("persistency: empty basis set");
    const int n = psi.qubits();
    for (int k = 0; k <= std::min(k_max, n); ++k) {
        PersistencyResult found;
        bool hit = for_each_subset(n, k, [&](const std::vector<int>& sites) {
            return for_each_assignment(sites, bases, [&](const std::vector<SiteBasis>& plan) {
                for (const auto& b : measure_sites(psi, plan, tol))
                    if (!is_fully_product(b.post_state, tol)) return false;
                found = {k, plan};
                return true;
            });
        });
        if (hit) return found;
    }
    return {};
}

PairConnectivity is_pair_connectable(const NumericState& psi, int i, int j, const MeasureTolerances& tol) {
    require_searchable(psi, "is_pair_connectable");
    const int n = psi.qubits();
    require_site(n, i, "is_pair_connectable");
    require_site(n, j, "is_pair_connectable");
    if (i == j) throw std::invalid_argument("is_pair_connectable: i and j must differ");
    if (n < 3) throw std::invalid_argument("is_pair_connectable: needs at least one other site");

    std::vector<int> others;
    for (int s = 1; s <= n; ++s)
        if (s != i && s != j) others.push_back(s);
    const std::vector<MeasurementBasis> bases(std::begin(kPauliBases), std::end(kPauliBases));

    PairConnectivity result{std::min(i, j), std::max(i, j), false, {}};
    for_each_assignment(others, bases, [&](const std::vector<SiteBasis>& plan) {
        for (const auto& b : measure_sites(psi, plan, tol))
            if (concurrence(DensityMatrix::pure(b.post_state)) < 1.0 - tol.concurrence) return false;
        result.connectable = true;
        result.witness = plan;
        return true;
    });
    return result;
}

ConnectednessReport maximal_connectedness(const NumericState& psi, const MeasureTolerances& tol) {
    require_searchable(psi, "maximal_connectedness");
    ConnectednessReport report{true, {}};
    for (int i = 1; i <= psi.qubits(); ++i)
        for (int j = i + 1; j <= psi.qubits(); ++j) {
            report.pairs.push_back(is_pair_connectable(psi, i, j, tol));
            report.maximally_connected = report.maximally_connected && report.pairs.back().connectable;
        }
    return report;
}

}  // namespace spinmult
