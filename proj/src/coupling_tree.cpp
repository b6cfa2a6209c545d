#include "spinmult/coupling_tree.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>

namespace spinmult {

namespace {

class TreeParser {
public:
    explicit TreeParser(std::string_view text) : text_(text) {}

    CouplingTree parse() {
        CouplingTree tree = parse_tree();
        skip_space();
        if (pos_ != text_.size()) fail("trailing characters");
        return tree;
    }

private:
    CouplingTree parse_tree() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        if (text_[pos_] == '(') {
            ++pos_;
            CouplingTree left = parse_tree();
            skip_space();
            if (pos_ < text_.size() && text_[pos_] == ')') fail("a coupling node needs two children");
            CouplingTree right = parse_tree();
            skip_space();
            if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')' (nodes are binary)");
            ++pos_;
            return CouplingTree::couple(left, right);
        }
        return parse_leaf();
    }

    CouplingTree parse_leaf() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected particle index");
        int particle = std::stoi(std::string(text_.substr(start, pos_ - start)));
        Spin spin = Spin::half();
        if (pos_ < text_.size() && text_[pos_] == ':') {
            start = ++pos_;
            while (pos_ < text_.size() &&
                   (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/'))
                ++pos_;
            spin = Spin(parse_half_integer(text_.substr(start, pos_ - start)));
        }
        return CouplingTree::leaf(particle, spin);
    }

    void skip_space() {
        while (pos_ < text_.size() && (std::isspace(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == ','))
            ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("tree spec '" + std::string(text_) + "' at offset " +
                                    std::to_string(pos_) + ": " + what);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

CouplingTree CouplingTree::parse(std::string_view spec) {
    CouplingTree tree = TreeParser(spec).parse();
    std::vector<int> seen = tree.nodes_[tree.root_].particles;
    std::sort(seen.begin(), seen.end());
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (seen[i] != static_cast<int>(i) + 1)
            throw std::invalid_argument("tree spec '" + std::string(spec) +
                                        "': particle indices must be a permutation of 1.." +
                                        std::to_string(seen.size()));
    return tree;
}

CouplingTree CouplingTree::leaf(int particle, Spin spin) {
    if (particle < 1) throw std::invalid_argument("particle indices start at 1");
    CouplingTree tree;
    Node node;
    node.particle = particle;
    node.spin = spin;
    node.particles = {particle};
    tree.nodes_.push_back(node);
    tree.finalize();
    return tree;
}

int CouplingTree::append(const CouplingTree& sub) {
    int offset = static_cast<int>(nodes_.size());
    for (Node n : sub.nodes_) {
        if (!n.is_leaf()) {
            n.left += offset;
            n.right += offset;
        }
        nodes_.push_back(std::move(n));
    }
    return sub.root_ + offset;
}

CouplingTree CouplingTree::couple(const CouplingTree& left, const CouplingTree& right) {
    CouplingTree tree;
    Node node;
    node.left = tree.append(left);
    node.right = tree.append(right);
    node.particles = tree.nodes_[node.left].particles;
    const auto& rp = tree.nodes_[node.right].particles;
    for (int p : rp) {
        if (std::find(node.particles.begin(), node.particles.end(), p) != node.particles.end())
            throw std::invalid_argument("particle " + std::to_string(p) + " appears twice in coupling tree");
        node.particles.push_back(p);
    }
    tree.nodes_.push_back(std::move(node));
    tree.finalize();
    return tree;
}

CouplingTree CouplingTree::sequential(int n) {
    if (n < 1) throw std::invalid_argument("sequential tree needs n >= 1");
    CouplingTree tree = leaf(1);
    for (int k = 2; k <= n; ++k) tree = couple(tree, leaf(k));
    return tree;
}

void CouplingTree::finalize() {
    root_ = static_cast<int>(nodes_.size()) - 1;
    internal_.clear();
    std::function<void(int)> visit = [&](int id) {
        const Node& n = nodes_[id];
        if (n.is_leaf()) return;
        visit(n.left);
        visit(n.right);
        internal_.push_back(id);
    };
    visit(root_);
}

int CouplingTree::internal_position(int node) const {
    auto it = std::find(internal_.begin(), internal_.end(), node);
    if (it == internal_.end()) throw std::out_of_range("not an internal node");
    return static_cast<int>(it - internal_.begin());
}

Spin CouplingTree::particle_spin(int particle) const {
    for (const Node& n : nodes_)
        if (n.is_leaf() && n.particle == particle) return n.spin;
    throw std::out_of_range("particle " + std::to_string(particle) + " not in tree");
}

bool CouplingTree::all_qubits() const {
    return std::all_of(nodes_.begin(), nodes_.end(),
                       [](const Node& n) { return !n.is_leaf() || n.spin.two_j == 1; });
}

std::string CouplingTree::node_name(int node) const {
    if (node == root_) return "S";
    std::vector<int> ps = nodes_.at(node).particles;
    std::sort(ps.begin(), ps.end());
    bool wide = ps.back() >= 10;
    std::string name = "S";
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (wide && i > 0) name += ",";
        name += std::to_string(ps[i]);
    }
    return name;
}

std::string CouplingTree::to_string() const {
    std::function<std::string(int)> render = [&](int id) -> std::string {
        const Node& n = nodes_[id];
        if (n.is_leaf()) {
            std::string s = std::to_string(n.particle);
            if (n.spin.two_j != 1) s += ":" + n.spin.str();
            return s;
        }
        return "(" + render(n.left) + " " + render(n.right) + ")";
    };
    return render(root_);
}

}  // namespace spinmult
