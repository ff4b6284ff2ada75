#pragma once

#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace stpack {

enum class PackingMethod { constructed_cartesian, constructed_lex, oracle, user };

inline std::string to_string(PackingMethod m) {
    switch (m) {
    case PackingMethod::constructed_cartesian:
        return "constructed-cartesian";
    case PackingMethod::constructed_lex:
        return "constructed-lex";
    case PackingMethod::oracle:
        return "oracle";
    case PackingMethod::user:
        return "user";
    }
    return "user";
}

inline PackingMethod parse_packing_method(const std::string &s) {
    if (s == "constructed-cartesian")
        return PackingMethod::constructed_cartesian;
    if (s == "constructed-lex")
        return PackingMethod::constructed_lex;
    if (s == "oracle")
        return PackingMethod::oracle;
    if (s == "user")
        return PackingMethod::user;
    throw parameter_error("unknown packing method '" + s + "'");
}

/// Edge-disjoint spanning trees of `host`. The type does not enforce the
/// property; verify_packing does.
struct TreePacking {
    Graph host;
    std::vector<EdgeSet> trees;
    PackingMethod method = PackingMethod::user;

    std::size_t count() const noexcept { return trees.size(); }
};

/// The only packing of a one-vertex graph: a single empty tree.
inline TreePacking trivial_packing(const Graph &g) {
    if (g.order() != 1)
        throw contract_error("trivial packing is defined only for a single vertex");
    return TreePacking{g, {EdgeSet{}}, PackingMethod::user};
}

} // namespace stpack
