#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "graph.hpp"
#include "packing.hpp"

namespace stpack {

/// Outcome of one named check. Failing checks carry a witness.
struct Check {
    std::string name;
    bool passed = false;
    std::string witness;
};

struct VerificationReport {
    std::string subject;
    std::vector<Check> checks;

    bool ok() const {
        for (const auto &c : checks)
            if (!c.passed)
                return false;
        return true;
    }

    const Check *first_failure() const {
        for (const auto &c : checks)
            if (!c.passed)
                return &c;
        return nullptr;
    }

    void add(std::string name, bool passed, std::string witness = {}) {
        checks.push_back({std::move(name), passed, passed ? std::string{} : std::move(witness)});
    }

    void absorb(const VerificationReport &other, const std::string &prefix) {
        for (const auto &c : other.checks)
            checks.push_back({prefix + c.name, c.passed, c.witness});
    }

    std::string to_text() const {
        std::ostringstream out;
        out << subject << ": " << (ok() ? "PASS" : "FAIL") << '\n';
        for (const auto &c : checks) {
            out << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.name;
            if (!c.passed && !c.witness.empty())
                out << " -- " << c.witness;
            out << '\n';
        }
        return out.str();
    }
};

namespace detail {

inline std::string edge_list_text(const std::vector<Edge> &edges) {
    std::string out;
    for (const auto &e : edges) {
        if (!out.empty())
            out += ' ';
        out += to_string(e);
    }
    return out;
}

/// Edges of the cycle closed by adding `closing` to the forest `forest`
/// (whose endpoints are already connected in it).
inline std::vector<Edge> closed_cycle(std::size_t n, const std::vector<Edge> &forest, const Edge &closing) {
    std::vector<std::vector<std::pair<Vertex, Edge>>> adj(n);
    for (const auto &e : forest) {
        adj[e.a].push_back({e.b, e});
        adj[e.b].push_back({e.a, e});
    }
    std::vector<bool> seen(n, false);
    std::vector<std::pair<Vertex, Edge>> via(n);
    std::vector<Vertex> queue{closing.a};
    seen[closing.a] = true;
    for (std::size_t i = 0; i < queue.size() && !seen[closing.b]; ++i)
        for (auto [w, e] : adj[queue[i]])
            if (!seen[w]) {
                seen[w] = true;
                via[w] = {queue[i], e};
                queue.push_back(w);
            }
    std::vector<Edge> cycle{closing};
    for (Vertex v = closing.b; v != closing.a; v = via[v].first)
        cycle.push_back(via[v].second);
    return cycle;
}

} // namespace detail

/// Passes iff `tree` is a set of n-1 host edges that is connected, acyclic and spanning.
inline VerificationReport verify_tree(const Graph &host, const EdgeSet &tree, std::string subject = "tree") {
    VerificationReport report{std::move(subject), {}};
    const std::size_t n = host.order();

    std::vector<Edge> foreign;
    for (const auto &e : tree)
        if (!host.has_edge(e))
            foreign.push_back(e);
    report.add("edges-in-host", foreign.empty(), "not a host edge: " + detail::edge_list_text(foreign));

    const std::size_t expected = n == 0 ? 0 : n - 1;
    report.add("edge-count", tree.size() == expected,
               "has " + std::to_string(tree.size()) + " edges, expected " + std::to_string(expected));

    DisjointSets sets(n);
    std::vector<Edge> accepted;
    std::vector<Edge> cycle;
    for (const auto &e : tree) {
        if (e.b >= n)
            continue;
        if (!sets.unite(e.a, e.b)) {
            if (cycle.empty())
                cycle = detail::closed_cycle(n, accepted, e);
        } else {
            accepted.push_back(e);
        }
    }
    report.add("acyclic", cycle.empty(), "cycle: " + detail::edge_list_text(cycle));

    std::vector<Edge> in_range;
    for (const auto &e : tree)
        if (e.b < n)
            in_range.push_back(e);
    std::string separated;
    if (n > 0) {
        auto seen = reachable(n, in_range, 0);
        if (seen.size() != n) {
            std::vector<bool> hit(n, false);
            for (Vertex v : seen)
                hit[v] = true;
            for (Vertex v = 0; v < n; ++v)
                if (!hit[v]) {
                    separated = "vertex " + std::to_string(v) + " is separated from vertex 0";
                    break;
                }
        }
    }
    report.add("spanning-connected", separated.empty(), separated);
    return report;
}

/// Every tree passes verify_tree and no edge appears in two trees.
inline VerificationReport verify_packing(const Graph &host, const TreePacking &packing) {
    VerificationReport report{"packing of " + std::to_string(packing.count()) + " trees (" +
                                  to_string(packing.method) + ")",
                              {}};
    report.add("host-matches", packing.host == host, "packing host differs from the graph being checked");
    for (std::size_t i = 0; i < packing.trees.size(); ++i)
        report.absorb(verify_tree(host, packing.trees[i]), "tree[" + std::to_string(i) + "].");

    std::map<Edge, std::size_t> owner;
    std::string shared;
    for (std::size_t i = 0; i < packing.trees.size() && shared.empty(); ++i)
        for (const auto &e : packing.trees[i]) {
            auto [it, inserted] = owner.emplace(e, i);
            if (!inserted) {
                shared = "edge " + to_string(e) + " shared by trees " + std::to_string(it->second) + " and " +
                         std::to_string(i);
                break;
            }
        }
    report.add("edge-disjoint", shared.empty(), shared);
    return report;
}

inline VerificationReport verify_packing(const TreePacking &packing) { return verify_packing(packing.host, packing); }

} // namespace stpack
