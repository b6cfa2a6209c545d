#pragma once

#include "spinmult/spin.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace spinmult {

/// Binary coupling order over particles 1..n.
///
/// Leaves carry a particle index and its spin; each internal node couples its
/// two children. Internal nodes are indexed in post-order (left subtree,
/// right subtree, node), so the root is always the last internal node.
class CouplingTree {
public:
    struct Node {
        int left = -1;
        int right = -1;
        int particle = 0;  // leaves only, 1-based
        Spin spin;         // leaves only
        std::vector<int> particles;  // leaf order under this node

        bool is_leaf() const { return left < 0; }
    };

    /// Parses "((1 2)(3 4))", "(((1 2) 3) 4)". A leaf may carry a spin as
    /// "3:1" (particle 3, spin 1); the default leaf spin is 1/2.
    static CouplingTree parse(std::string_view spec);

    static CouplingTree leaf(int particle, Spin spin = Spin::half());
    static CouplingTree couple(const CouplingTree& left, const CouplingTree& right);
    /// (((1 2) 3) ... n)
    static CouplingTree sequential(int n);

    int particle_count() const { return static_cast<int>(nodes_[root_].particles.size()); }
    int root() const { return root_; }
    const Node& node(int index) const { return nodes_.at(index); }
    int node_count() const { return static_cast<int>(nodes_.size()); }

    /// Internal node ids in post-order; the root is last.
    const std::vector<int>& internal_nodes() const { return internal_; }
    /// Position of an internal node within internal_nodes().
    int internal_position(int node) const;

    /// Leaf spin of a particle (1-based).
    Spin particle_spin(int particle) const;
    bool all_qubits() const;

    /// "S12" for the node over particles {1,2}, "S" for the root.
    std::string node_name(int node) const;
    /// Canonical spec string, e.g. "((1 2) (3 4))".
    std::string to_string() const;

    bool operator==(const CouplingTree& other) const { return to_string() == other.to_string(); }

private:
    CouplingTree() = default;
    int append(const CouplingTree& sub);
    void finalize();

    std::vector<Node> nodes_;
    std::vector<int> internal_;
    int root_ = 0;
};

}  // namespace spinmult
