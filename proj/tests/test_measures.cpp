#include "doctest.h"

#include "oracles.hpp"
#include "spinmult/measures.hpp"
#include "spinmult/registry.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace spinmult;

namespace {

NumericState named(const char* name) { return named_state(name).to_numeric(); }

NumericState product_state(std::initializer_list<const char*> configs, int n) {
    NumericState s(n);
    for (const char* c : configs) s.set(parse_config(c), 1.0);
    return s.normalized();
}

NumericState apply_local(const NumericState& psi, const std::vector<Eigen::Matrix2cd>& us) {
    const int n = psi.qubits();
    Eigen::MatrixXcd total = Eigen::MatrixXcd::Identity(1, 1);
    for (int k = 0; k < n; ++k) {
        Eigen::MatrixXcd next(total.rows() * 2, total.cols() * 2);
        for (Eigen::Index i = 0; i < total.rows(); ++i)
            for (Eigen::Index j = 0; j < total.cols(); ++j)
                next.block(2 * i, 2 * j, 2, 2) = total(i, j) * us[static_cast<std::size_t>(k)];
        total = next;
    }
    return {n, total * psi.vector()};
}

NumericState permute(const NumericState& psi, const std::vector<int>& perm) {
    // particle k of the output is particle perm[k-1] of the input
    const int n = psi.qubits();
    NumericState out(n);
    for (std::size_t idx = 0; idx < psi.dim(); ++idx) {
        Config c = config_from_dense(idx, n), d = 0;
        for (int k = 1; k <= n; ++k)
            if (particle_up(c, n, perm[static_cast<std::size_t>(k - 1)])) d |= Config{1} << (n - k);
        out.set(d, psi.vector()[static_cast<Eigen::Index>(idx)]);
    }
    return out;
}

std::vector<NumericState> named_suite() {
    std::vector<NumericState> out;
    for (const auto& info : named_states()) out.push_back(named(info.name.c_str()));
    out.push_back(product_state({"udud"}, 4));
    return out;
}

}  // namespace

TEST_CASE("partial_trace examples") {
    DensityMatrix r = partial_trace(named("singlet"), {1});
    CHECK((r.matrix() - 0.5 * Eigen::Matrix2cd::Identity()).norm() < 1e-15);

    DensityMatrix pure = partial_trace(NumericState::basis(4, parse_config("uuuu")), {2, 3});
    Eigen::Matrix4cd expected = Eigen::Matrix4cd::Zero();
    expected(0, 0) = 1.0;
    CHECK((pure.matrix() - expected).norm() == 0.0);

    // Direct summation for particle 1 of D(4,2): rho[a][b] = sum_rest psi(a,rest) psi(b,rest)*
    NumericState dicke = named("dicke42");
    Eigen::Matrix2cd direct = Eigen::Matrix2cd::Zero();
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int rest = 0; rest < 8; ++rest)
                direct(a, b) += dicke.vector()[a * 8 + rest] * std::conj(dicke.vector()[b * 8 + rest]);
    CHECK((direct - 0.5 * Eigen::Matrix2cd::Identity()).norm() < 1e-15);
    CHECK((partial_trace(dicke, {1}).matrix() - direct).norm() < 1e-15);

    CHECK_THROWS_AS(partial_trace(dicke, {}), std::invalid_argument);
    CHECK_THROWS_AS(partial_trace(dicke, {1, 2, 3, 4}), std::invalid_argument);
    CHECK_THROWS_AS(partial_trace(dicke, {5}), std::out_of_range);
}

TEST_CASE("partial_trace keeps index order of the kept particles") {
    // |u>_1 |d>_3 kept from |u d d>: rho over (1,3) is |ud><ud|
    DensityMatrix r = partial_trace(NumericState::basis(3, parse_config("udd")), {1, 3});
    CHECK(r.matrix()(1, 1) == Complex(1.0));
}

TEST_CASE("partial_trace preserves trace and positivity") {
    for (const auto& psi : named_suite())
        for (int mask = 1; mask < (1 << psi.qubits()) - 1; ++mask) {
            std::set<int> keep;
            for (int k = 1; k <= psi.qubits(); ++k)
                if (mask & (1 << (k - 1))) keep.insert(k);
            DensityMatrix r = partial_trace(psi, keep);
            CHECK(std::abs(r.trace() - Complex(1.0)) <= 1e-12);
            CHECK(r.hermiticity_error() <= 1e-12);
            CHECK(r.min_eigenvalue() >= -1e-12);
        }
}

TEST_CASE("meyer_wallach_q examples") {
    CHECK(meyer_wallach_q(product_state({"udud"}, 4)) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(meyer_wallach_q(named("ghz4")) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(meyer_wallach_q(named("w4")) == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(meyer_wallach_q(named("dicke42")) == doctest::Approx(1.0).epsilon(1e-12));
    for (int k = 1; k <= 4; ++k)
        CHECK((partial_trace(named("dicke42"), {k}).matrix() - 0.5 * Eigen::Matrix2cd::Identity()).norm() < 1e-15);
}

TEST_CASE("property: Q is invariant under local unitaries and permutations") {
    std::mt19937 rng(2024);
    for (const auto& psi : named_suite()) {
        const double q = meyer_wallach_q(psi);
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<Eigen::Matrix2cd> us;
            for (int k = 0; k < psi.qubits(); ++k) us.push_back(oracle::random_unitary(rng));
            CHECK(std::abs(meyer_wallach_q(apply_local(psi, us)) - q) <= 1e-10);
            std::vector<int> perm(static_cast<std::size_t>(psi.qubits()));
            std::iota(perm.begin(), perm.end(), 1);
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(std::abs(meyer_wallach_q(permute(psi, perm)) - q) <= 1e-10);
        }
    }
}

TEST_CASE("concurrence") {
    CHECK(concurrence(DensityMatrix::pure(named("singlet"))) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(concurrence(DensityMatrix::pure(named("triplet0"))) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(concurrence(DensityMatrix::pure(product_state({"ud"}, 2))) <= 1e-12);
    // 1/2 I x |psi><psi|
    Eigen::Vector2cd a(0.6, Complex(0, 0.8));
    Eigen::Matrix2cd pa = a * a.adjoint();
    Eigen::Matrix4cd mixed = Eigen::Matrix4cd::Zero();
    mixed.block(0, 0, 2, 2) = 0.5 * pa;
    mixed.block(2, 2, 2, 2) = 0.5 * pa;
    CHECK(concurrence(DensityMatrix(2, mixed)) <= 1e-12);

    std::mt19937 rng(5);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 200; ++trial) {
        NumericState s(2);
        for (Eigen::Index i = 0; i < 4; ++i) s.vector()[i] = Complex(g(rng), g(rng));
        s = s.normalized();
        const auto& v = s.vector();
        CHECK(concurrence(DensityMatrix::pure(s)) ==
              doctest::Approx(oracle::pure_concurrence(v[0], v[1], v[2], v[3])).epsilon(1e-9));
    }
    CHECK_THROWS_AS(concurrence(DensityMatrix(1, Eigen::Matrix2cd::Identity() * 0.5)), std::invalid_argument);
}

TEST_CASE("three_tangle") {
    CHECK(three_tangle(named("ghz3")) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(three_tangle(named("w3")) <= 1e-12);
    CHECK(three_tangle(product_state({"udu"}, 3)) <= 1e-12);
    CHECK_THROWS_AS(three_tangle(named("w4")), std::invalid_argument);

    std::mt19937 rng(9);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 200; ++trial) {
        NumericState s(3);
        for (Eigen::Index i = 0; i < 8; ++i) s.vector()[i] = Complex(g(rng), g(rng));
        s = s.normalized();
        std::array<Complex, 8> a;
        for (std::size_t i = 0; i < 8; ++i) a[i] = s.vector()[static_cast<Eigen::Index>(i)];
        CHECK(three_tangle(s) == doctest::Approx(oracle::hyperdeterminant_tangle(a)).epsilon(1e-8));
    }
}

TEST_CASE("CKW inequality over 3-qubit states in the suite") {
    std::vector<NumericState> threes = {named("ghz3"), named("w3"), product_state({"uud"}, 3)};
    for (const auto& b : measure_branches(named("dicke42"), 2, MeasurementBasis::X)) threes.push_back(b.post_state);
    for (const auto& b : measure_branches(named("w4"), 1, MeasurementBasis::Y)) threes.push_back(b.post_state);
    for (const auto& psi : threes) {
        double tau = three_tangle(psi);
        CHECK(tau >= 0.0);
        CHECK(tau <= 1.0 + 1e-9);
        double split = 2.0 * (1.0 - partial_trace(psi, {1}).purity());
        double c12 = concurrence(partial_trace(psi, {1, 2})), c13 = concurrence(partial_trace(psi, {1, 3}));
        CHECK(split >= c12 * c12 + c13 * c13 - 1e-9);
    }
}

TEST_CASE("classify_three_qubit") {
    CHECK(classify_three_qubit(named("w3")) == ThreeQubitClass::W);
    CHECK(classify_three_qubit(named("ghz3")) == ThreeQubitClass::GHZ);
    NumericState singlet_up(3);
    singlet_up.set(parse_config("udu"), std::sqrt(0.5));
    singlet_up.set(parse_config("duu"), -std::sqrt(0.5));
    CHECK(classify_three_qubit(singlet_up) == ThreeQubitClass::Biseparable);
    CHECK(classify_three_qubit(product_state({"ddu"}, 3)) == ThreeQubitClass::Product);
    CHECK_THROWS_AS(classify_three_qubit(named("singlet")), std::invalid_argument);
}

TEST_CASE("measure_branches") {
    SUBCASE("D(4,2) site 4 in Z gives two W branches") {
        auto branches = measure_branches(named("dicke42"), 4, MeasurementBasis::Z);
        REQUIRE(branches.size() == 2);
        for (const auto& b : branches) {
            CHECK(b.probability == doctest::Approx(0.5).epsilon(1e-12));
            CHECK(classify_three_qubit(b.post_state) == ThreeQubitClass::W);
        }
        CHECK(branches[0].outcome == "up");
        CHECK(branches[1].outcome == "down");
    }
    SUBCASE("probabilities sum to one") {
        for (const auto& psi : named_suite())
            for (int site = 1; site <= psi.qubits(); ++site)
                for (MeasurementBasis basis : kPauliBases) {
                    double total = 0.0;
                    for (const auto& b : measure_branches(psi, site, basis)) total += b.probability;
                    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
                }
    }
    SUBCASE("deterministic outcome") {
        auto branches = measure_branches(NumericState::basis(2, parse_config("uu")), 1, MeasurementBasis::Z);
        REQUIRE(branches.size() == 1);
        CHECK(branches[0].probability == 1.0);
        CHECK((branches[0].post_state.vector() - NumericState::basis(1, parse_config("u")).vector()).norm() == 0.0);
    }
    SUBCASE("branch mixture reproduces the reduced state of the rest") {
        for (const auto& psi : named_suite())
            for (MeasurementBasis basis : kPauliBases) {
                const int n = psi.qubits();
                std::set<int> rest;
                for (int k = 2; k <= n; ++k) rest.insert(k);
                Eigen::MatrixXcd mix = Eigen::MatrixXcd::Zero(Eigen::Index{1} << (n - 1), Eigen::Index{1} << (n - 1));
                for (const auto& b : measure_branches(psi, 1, basis))
                    mix += b.probability * b.post_state.vector() * b.post_state.vector().adjoint();
                CHECK((mix - partial_trace(psi, rest).matrix()).cwiseAbs().maxCoeff() <= 1e-10);
            }
    }
    CHECK_THROWS_AS(measure_branches(named("w4"), 5, MeasurementBasis::Z), std::out_of_range);
}

TEST_CASE("persistency") {
    const std::vector<MeasurementBasis> pauli(std::begin(kPauliBases), std::end(kPauliBases));
    auto ghz = persistency(named("ghz4"), pauli, 4);
    CHECK(ghz.value == 1);
    CHECK(ghz.witness == std::vector<SiteBasis>{{1, MeasurementBasis::Z}});
    CHECK(persistency(named("w4"), pauli, 4).value == 3);
    CHECK(persistency(named("dicke42"), pauli, 4).value == 3);
    CHECK(persistency(product_state({"udud"}, 4), pauli, 4).value == 0);
    CHECK_FALSE(persistency(named("w4"), pauli, 2).value.has_value());
    CHECK(persistency(named("ghz4"), {MeasurementBasis::X}, 4).value == 3);

    NumericState big(7);
    big.set(0, 1.0);
    CHECK_THROWS_AS(persistency(big, pauli, 7), std::invalid_argument);
}

TEST_CASE("persistency zero iff fully product") {
    const std::vector<MeasurementBasis> pauli(std::begin(kPauliBases), std::end(kPauliBases));
    for (const auto& psi : named_suite()) CHECK((persistency(psi, pauli, 4).value == 0) == is_fully_product(psi));
}

TEST_CASE("persistency does not increase along Z-measurement branches") {
    const std::vector<MeasurementBasis> pauli(std::begin(kPauliBases), std::end(kPauliBases));
    for (const auto& psi : named_suite()) {
        if (psi.qubits() < 2) continue;
        int before = *persistency(psi, pauli, psi.qubits()).value;
        for (int site = 1; site <= psi.qubits(); ++site)
            for (const auto& b : measure_branches(psi, site, MeasurementBasis::Z))
                CHECK(*persistency(b.post_state, pauli, b.post_state.qubits()).value <= before);
    }
}

TEST_CASE("pair connectivity") {
    SUBCASE("GHZ4 pair (1,3) with X on the complement: direct branch check") {
        NumericState ghz = named("ghz4");
        auto branches = measure_sites(ghz, {{2, MeasurementBasis::X}, {4, MeasurementBasis::X}});
        REQUIRE(branches.size() == 4);
        for (const auto& b : branches) {
            const auto& v = b.post_state.vector();
            CHECK(oracle::pure_concurrence(v[0], v[1], v[2], v[3]) == doctest::Approx(1.0).epsilon(1e-12));
        }
        auto pc = is_pair_connectable(ghz, 1, 3);
        CHECK(pc.connectable);
        CHECK(pc.witness == std::vector<SiteBasis>{{2, MeasurementBasis::X}, {4, MeasurementBasis::X}});
    }
    SUBCASE("W4 pairs are not connectable") {
        for (int i = 1; i <= 4; ++i)
            for (int j = i + 1; j <= 4; ++j) CHECK_FALSE(is_pair_connectable(named("w4"), i, j).connectable);
    }
    SUBCASE("singlet x uu, pair (1,2) with Z complement") {
        NumericState s(4);
        s.set(parse_config("uduu"), std::sqrt(0.5));
        s.set(parse_config("duuu"), -std::sqrt(0.5));
        auto pc = is_pair_connectable(s, 1, 2);
        CHECK(pc.connectable);
        CHECK(pc.witness == std::vector<SiteBasis>{{3, MeasurementBasis::Z}, {4, MeasurementBasis::Z}});
        CHECK_FALSE(is_pair_connectable(s, 1, 3).connectable);
    }
    CHECK_THROWS_AS(is_pair_connectable(named("w4"), 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(is_pair_connectable(named("singlet"), 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(is_pair_connectable(named("w4"), 1, 9), std::out_of_range);
}

TEST_CASE("maximal_connectedness") {
    auto ghz = maximal_connectedness(named("ghz4"));
    CHECK(ghz.maximally_connected);
    CHECK(ghz.pairs.size() == 6);
    for (const auto& p : ghz.pairs) CHECK(p.witness.size() == 2);
    CHECK_FALSE(maximal_connectedness(named("w4")).maximally_connected);
    CHECK_FALSE(maximal_connectedness(named("dicke42")).maximally_connected);
    CHECK(maximal_connectedness(named("ghz3")).maximally_connected);
    CHECK_FALSE(maximal_connectedness(named("w3")).maximally_connected);
}
