#include "spinmult/coupling.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace spinmult {

namespace {

BigInt factorial(int k) {
    if (k < 0) throw std::logic_error("factorial of negative argument");
    BigInt f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

void require_projection(Spin j, SpinProjection m, const char* which) {
    if (!is_valid_projection(j, m))
        throw std::invalid_argument(std::string("cg: projection ") + which + "=" + m.str() +
                                    " is inconsistent with spin " + j.str());
}

}  // namespace

bool satisfies_triangle(Spin j1, Spin j2, Spin J) {
    return (j1.two_j + j2.two_j + J.two_j) % 2 == 0 && J.two_j <= j1.two_j + j2.two_j &&
           J.two_j >= std::abs(j1.two_j - j2.two_j);
}

std::vector<Spin> allowed_couplings(Spin j1, Spin j2) {
    std::vector<Spin> out;
    for (int t = j1.two_j + j2.two_j; t >= std::abs(j1.two_j - j2.two_j); t -= 2) out.emplace_back(t);
    return out;
}

SignedRadical cg(Spin j1, SpinProjection m1, Spin j2, SpinProjection m2, Spin J, SpinProjection M) {
    require_projection(j1, m1, "m1");
    require_projection(j2, m2, "m2");
    require_projection(J, M, "M");
    if (M.two_m != m1.two_m + m2.two_m || !satisfies_triangle(j1, j2, J)) return SignedRadical::zero();

    // Racah's closed form; every argument below is an integer.
    const int a = (j1.two_j + j2.two_j - J.two_j) / 2;   // j1 + j2 - J
    const int b = (j1.two_j - m1.two_m) / 2;             // j1 - m1
    const int c = (j2.two_j + m2.two_m) / 2;             // j2 + m2
    const int d = (J.two_j - j2.two_j + m1.two_m) / 2;   // J - j2 + m1
    const int e = (J.two_j - j1.two_j - m2.two_m) / 2;   // J - j1 - m2

    Rational prefactor(BigInt(J.two_j + 1) * factorial((J.two_j + j1.two_j - j2.two_j) / 2) *
                           factorial((J.two_j - j1.two_j + j2.two_j) / 2) * factorial(a),
                       factorial((j1.two_j + j2.two_j + J.two_j) / 2 + 1));
    prefactor *= Rational(factorial((J.two_j + M.two_m) / 2) * factorial((J.two_j - M.two_m) / 2) *
                          factorial(b) * factorial((j1.two_j + m1.two_m) / 2) *
                          factorial((j2.two_j - m2.two_m) / 2) * factorial(c));

    Rational sum = 0;
    const int k_lo = std::max({0, -d, -e});
    const int k_hi = std::min({a, b, c});
    for (int k = k_lo; k <= k_hi; ++k) {
        BigInt denom = factorial(k) * factorial(a - k) * factorial(b - k) * factorial(c - k) *
                       factorial(d + k) * factorial(e + k);
        Rational term(1, denom);
        sum += (k % 2 == 0) ? term : Rational(-term);
    }
    int sign = sum > 0 ? 1 : (sum < 0 ? -1 : 0);
    return {sign, prefactor * sum * sum};
}

CoupledLabel::CoupledLabel(CouplingTree tree, std::vector<Spin> intermediate, SpinProjection total_m)
    : tree_(std::move(tree)), intermediate_(std::move(intermediate)), total_m_(total_m) {
    const auto& internal = tree_.internal_nodes();
    if (intermediate_.size() != internal.size())
        throw std::invalid_argument("CoupledLabel: expected " + std::to_string(internal.size()) +
                                    " intermediate spins, got " + std::to_string(intermediate_.size()));
    for (int id : internal) {
        const auto& n = tree_.node(id);
        if (!satisfies_triangle(node_spin(n.left), node_spin(n.right), node_spin(id)))
            throw std::invalid_argument("CoupledLabel: " + tree_.node_name(id) + "=" + node_spin(id).str() +
                                        " violates the triangle rule");
    }
    if (!is_valid_projection(total_spin(), total_m_))
        throw std::invalid_argument("CoupledLabel: M=" + total_m_.str() + " incompatible with S=" +
                                    total_spin().str());
}

CoupledLabel CoupledLabel::parse(const CouplingTree& tree, std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<int> values;
    std::string token;
    while (in >> token) values.push_back(parse_half_integer(token));
    std::size_t expected = tree.internal_nodes().size() + 1;
    if (values.size() != expected)
        throw std::invalid_argument("label needs " + std::to_string(expected) +
                                    " quantum numbers (internal spins in post-order, then M)");
    std::vector<Spin> spins;
    for (std::size_t i = 0; i + 1 < values.size(); ++i) spins.emplace_back(values[i]);
    return CoupledLabel(tree, std::move(spins), SpinProjection(values.back()));
}

Spin CoupledLabel::node_spin(int node) const {
    const auto& n = tree_.node(node);
    if (n.is_leaf()) return n.spin;
    return intermediate_[static_cast<std::size_t>(tree_.internal_position(node))];
}

Spin CoupledLabel::total_spin() const { return node_spin(tree_.root()); }

std::string CoupledLabel::to_string() const {
    std::string s;
    for (int id : tree_.internal_nodes()) s += tree_.node_name(id) + "=" + node_spin(id).str() + " ";
    if (tree_.internal_nodes().empty()) s += "S=" + total_spin().str() + " ";
    return s + "M=" + total_m_.str();
}

std::vector<CoupledLabel> enumerate_multiplets(const CouplingTree& tree) {
    std::vector<CoupledLabel> out;
    const auto& internal = tree.internal_nodes();
    std::vector<int> spins(static_cast<std::size_t>(tree.node_count()), 0);
    for (int id = 0; id < tree.node_count(); ++id)
        if (tree.node(id).is_leaf()) spins[static_cast<std::size_t>(id)] = tree.node(id).spin.two_j;

    std::function<void(std::size_t)> assign = [&](std::size_t pos) {
        if (pos == internal.size()) {
            std::vector<Spin> inter;
            for (int id : internal) inter.emplace_back(spins[static_cast<std::size_t>(id)]);
            int top = spins[static_cast<std::size_t>(tree.root())];
            for (int m = top; m >= -top; m -= 2) out.emplace_back(tree, inter, SpinProjection(m));
            return;
        }
        int id = internal[pos];
        const auto& n = tree.node(id);
        for (Spin j : allowed_couplings(Spin(spins[static_cast<std::size_t>(n.left)]),
                                        Spin(spins[static_cast<std::size_t>(n.right)]))) {
            spins[static_cast<std::size_t>(id)] = j.two_j;
            assign(pos + 1);
        }
    };
    assign(0);
    return out;
}

namespace {

using Projections = std::vector<int>;
using Expansion = std::vector<std::pair<Projections, SignedRadical>>;

Expansion expand_node(const CoupledLabel& label, int node, int two_m) {
    const auto& tree = label.tree();
    const auto& n = tree.node(node);
    const std::size_t count = static_cast<std::size_t>(tree.particle_count());
    if (n.is_leaf()) {
        Projections p(count, 0);
        p[static_cast<std::size_t>(n.particle - 1)] = two_m;
        return {{p, SignedRadical::one()}};
    }
    Spin j = label.node_spin(node);
    Spin jl = label.node_spin(n.left);
    Spin jr = label.node_spin(n.right);
    Expansion out;
    for (int ml = jl.two_j; ml >= -jl.two_j; ml -= 2) {
        int mr = two_m - ml;
        if (std::abs(mr) > jr.two_j) continue;
        SignedRadical c = cg(jl, SpinProjection(ml), jr, SpinProjection(mr), j, SpinProjection(two_m));
        if (c.is_zero()) continue;
        Expansion left = expand_node(label, n.left, ml);
        Expansion right = expand_node(label, n.right, mr);
        for (const auto& [lp, la] : left) {
            SignedRadical cl = c * la;
            for (const auto& [rp, ra] : right) {
                Projections p(count);
                // Subtree supports are disjoint, untouched slots hold 0.
                for (std::size_t i = 0; i < count; ++i) p[i] = lp[i] + rp[i];
                out.emplace_back(std::move(p), cl * ra);
            }
        }
    }
    return out;
}

}  // namespace

std::map<std::vector<int>, SignedRadical> expand_projections(const CoupledLabel& label) {
    std::map<std::vector<int>, SignedRadical> out;
    for (auto& [p, a] : expand_node(label, label.tree().root(), label.total_m().two_m)) out.emplace(p, a);
    return out;
}

ExactState expand(const CoupledLabel& label) {
    const auto& tree = label.tree();
    if (!tree.all_qubits()) throw std::invalid_argument("expand: qubit expansion needs spin-1/2 leaves");
    const int n = tree.particle_count();
    if (n > kMaxQubits) throw std::invalid_argument("expand: too many qubits");
    ExactState state(n);
    for (const auto& [p, a] : expand_node(label, tree.root(), label.total_m().two_m)) {
        Config c = 0;
        for (int k = 1; k <= n; ++k)
            if (p[static_cast<std::size_t>(k - 1)] > 0) c |= Config{1} << (n - k);
        state.set(c, a);
    }
    return state;
}

std::vector<BasisState> full_basis(const CouplingTree& tree) {
    std::vector<BasisState> out;
    for (auto& label : enumerate_multiplets(tree)) {
        ExactState s = expand(label);
        out.push_back({std::move(label), std::move(s)});
    }
    return out;
}

namespace {

std::vector<std::pair<int, Spin>> leaf_signature(const CouplingTree& tree) {
    std::vector<std::pair<int, Spin>> sig;
    for (int id = 0; id < tree.node_count(); ++id)
        if (tree.node(id).is_leaf()) sig.emplace_back(tree.node(id).particle, tree.node(id).spin);
    std::sort(sig.begin(), sig.end());
    return sig;
}

}  // namespace

std::vector<RecouplingTerm> recouple(const CoupledLabel& label, const CouplingTree& target) {
    if (leaf_signature(label.tree()) != leaf_signature(target))
        throw std::invalid_argument("recouple: trees are over different particles or leaf spins");
    const Eigen::VectorXcd source = expand(label).to_numeric().vector();
    std::vector<RecouplingTerm> out;
    for (auto& candidate : enumerate_multiplets(target)) {
        if (candidate.total_spin() != label.total_spin() || candidate.total_m() != label.total_m()) continue;
        double c = expand(candidate).to_numeric().vector().dot(source).real();
        if (std::abs(c) > kRecoupleZeroCutoff) out.push_back({std::move(candidate), c});
    }
    return out;
}

}  // namespace spinmult
