#pragma once

#include "spinmult/coupling_tree.hpp"
#include "spinmult/exact_radical.hpp"
#include "spinmult/spin.hpp"
#include "spinmult/state.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace spinmult {

/// Condon-Shortley Clebsch-Gordan coefficient <j1 m1 j2 m2 | J M>, exact.
/// Zero when M != m1 + m2 or the triangle rule fails; throws
/// std::invalid_argument for a projection inconsistent with its spin.
SignedRadical cg(Spin j1, SpinProjection m1, Spin j2, SpinProjection m2, Spin J, SpinProjection M);

/// |j1 - j2| .. j1 + j2, descending.
std::vector<Spin> allowed_couplings(Spin j1, Spin j2);

bool satisfies_triangle(Spin j1, Spin j2, Spin J);

/// One member of a multiplet of a coupling tree: the spin at every internal
/// node (post-order, root last) plus the total projection.
class CoupledLabel {
public:
    CoupledLabel(CouplingTree tree, std::vector<Spin> intermediate, SpinProjection total_m);

    /// Parses "1 1 2 0": internal-node spins in post-order, then M.
    static CoupledLabel parse(const CouplingTree& tree, std::string_view text);

    const CouplingTree& tree() const { return tree_; }
    const std::vector<Spin>& intermediate() const { return intermediate_; }
    SpinProjection total_m() const { return total_m_; }
    Spin total_spin() const;
    /// Spin carried by any tree node (leaf spin or intermediate).
    Spin node_spin(int node) const;

    /// "S12=1 S34=1 S=2 M=0"
    std::string to_string() const;

    bool operator==(const CoupledLabel& other) const {
        return intermediate_ == other.intermediate_ && total_m_ == other.total_m_ && tree_ == other.tree_;
    }

private:
    CouplingTree tree_;
    std::vector<Spin> intermediate_;
    SpinProjection total_m_;
};

/// All labels of a tree: descending intermediate spins (post-order
/// lexicographic), then descending M.
std::vector<CoupledLabel> enumerate_multiplets(const CouplingTree& tree);

/// Expansion over leaf projections (two_m per particle, index particle - 1).
/// Works for arbitrary leaf spins.
std::map<std::vector<int>, SignedRadical> expand_projections(const CoupledLabel& label);

/// Coupled state in the qubit product basis; requires spin-1/2 leaves.
ExactState expand(const CoupledLabel& label);

struct BasisState {
    CoupledLabel label;
    ExactState state;
};

std::vector<BasisState> full_basis(const CouplingTree& tree);

struct RecouplingTerm {
    CoupledLabel label;
    double coefficient;
};

inline constexpr double kRecoupleZeroCutoff = 1e-12;

/// Coefficients of a coupled state in another tree's coupled basis.
std::vector<RecouplingTerm> recouple(const CoupledLabel& label, const CouplingTree& target);

}  // namespace spinmult
