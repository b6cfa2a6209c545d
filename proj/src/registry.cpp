#include "spinmult/registry.hpp"

#include "spinmult/coupling.hpp"

#include <stdexcept>

namespace spinmult {

namespace {

ExactState coupled(std::string_view tree, std::string_view label) {
    CouplingTree t = CouplingTree::parse(tree);
    return expand(CoupledLabel::parse(t, label));
}

}  // namespace

const std::vector<NamedStateInfo>& named_states() {
    static const std::vector<NamedStateInfo> infos = {
        {"singlet", "(ud - du)/sqrt(2), two-qubit S=0"},
        {"triplet0", "(ud + du)/sqrt(2), two-qubit S=1 M=0"},
        {"ghz3", "(uuu + ddd)/sqrt(2)"},
        {"w3", "(udu + duu + uud)/sqrt(3), ((1 2) 3) S12=1 S=3/2 M=1/2"},
        {"w4", "single-down W state, ((1 2)(3 4)) S12=1 S34=1 S=2 M=1"},
        {"ghz4", "(uudd - dduu)/sqrt(2), ((1 2)(3 4)) S12=1 S34=1 S=1 M=0"},
        {"dicke42", "Dicke D(4,2), ((1 2)(3 4)) S12=1 S34=1 S=2 M=0"},
        {"w4bar", "single-up W state, ((1 2)(3 4)) S12=1 S34=1 S=2 M=-1"},
        {"seq_s1m0", "(((1 2) 3) 4) S12=1 S123=3/2 S=1 M=0"},
    };
    return infos;
}

ExactState named_state(std::string_view name) {
    if (name == "singlet") return coupled("(1 2)", "0 0");
    if (name == "triplet0") return coupled("(1 2)", "1 0");
    if (name == "ghz3") {
        ExactState s(3);
        s.set(parse_config("uuu"), SignedRadical(1, 1, 2));
        s.set(parse_config("ddd"), SignedRadical(1, 1, 2));
        return s;
    }
    if (name == "w3") return coupled("((1 2) 3)", "1 3/2 1/2");
    if (name == "w4") return coupled("((1 2)(3 4))", "1 1 2 1");
    if (name == "ghz4") return coupled("((1 2)(3 4))", "1 1 1 0");
    if (name == "dicke42") return coupled("((1 2)(3 4))", "1 1 2 0");
    if (name == "w4bar") return coupled("((1 2)(3 4))", "1 1 2 -1");
    if (name == "seq_s1m0") return coupled("(((1 2) 3) 4)", "1 3/2 1 0");
    throw std::invalid_argument("unknown state name '" + std::string(name) + "'");
}

}  // namespace spinmult
