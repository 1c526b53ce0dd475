#ifndef NCENCE_ISOMORPHISM_HPP
#define NCENCE_ISOMORPHISM_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include "ncence/graph.hpp"

namespace ncence {

namespace detail {

// Adjacency view: for each node, its neighbors with the sorted label set
// per neighbor.
using Adjacency = std::map<NodeId, std::map<NodeId, std::vector<Label>>>;

inline Adjacency adjacency_of(const LabeledGraph& g) {
    Adjacency adj;
    for (const auto& [id, label] : g.nodes()) adj[id];
    for (const auto& e : g.edges()) {
        adj[e.u][e.v].push_back(e.label);
        adj[e.v][e.u].push_back(e.label);
    }
    return adj;
}

// Node invariant used to filter candidate images: own label plus the
// sorted multiset of (edge label, neighbor label) over incident edges.
inline std::vector<std::pair<Label, Label>> node_signature(const LabeledGraph& g,
                                                           const Adjacency& adj, NodeId v) {
    std::vector<std::pair<Label, Label>> sig;
    for (const auto& [nbr, labels] : adj.at(v))
        for (const auto& el : labels) sig.emplace_back(el, g.label_of(nbr));
    std::sort(sig.begin(), sig.end());
    return sig;
}

} // namespace detail

/// True iff a node bijection exists preserving node labels and, for every
/// unordered pair, the set of edge labels between them. Backtracking
/// search; intended for small graphs (the scale the engine enumerates at).
inline bool are_isomorphic(const LabeledGraph& g1, const LabeledGraph& g2) {
    if (g1.node_count() != g2.node_count() || g1.edge_count() != g2.edge_count())
        return false;
    if (g1.empty()) return true;

    const auto adj1 = detail::adjacency_of(g1);
    const auto adj2 = detail::adjacency_of(g2);

    std::vector<NodeId> order;
    for (const auto& [id, label] : g1.nodes()) order.push_back(id);

    // Candidate images per g1 node, filtered by label and signature.
    std::map<NodeId, std::vector<NodeId>> candidates;
    for (NodeId u : order) {
        auto sig = detail::node_signature(g1, adj1, u);
        auto& c = candidates[u];
        for (const auto& [v, vl] : g2.nodes())
            if (vl == g1.label_of(u) && detail::node_signature(g2, adj2, v) == sig)
                c.push_back(v);
        if (c.empty()) return false;
    }

    // Most-constrained first, then prefer nodes adjacent to already placed
    // ones so the consistency check bites early.
    std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
        return candidates[a].size() < candidates[b].size();
    });
    std::vector<NodeId> placed;
    std::vector<NodeId> arranged;
    std::vector<bool> taken(order.size(), false);
    for (std::size_t step = 0; step < order.size(); ++step) {
        std::size_t pick = order.size();
        for (std::size_t i = 0; i < order.size(); ++i) {
            if (taken[i]) continue;
            bool touches = false;
            for (NodeId p : arranged)
                if (adj1.at(order[i]).count(p)) { touches = true; break; }
            if (touches) { pick = i; break; }
            if (pick == order.size()) pick = i;
        }
        taken[pick] = true;
        arranged.push_back(order[pick]);
    }

    std::map<NodeId, NodeId> mapping;
    std::map<NodeId, bool> used;
    for (const auto& [v, l] : g2.nodes()) used[v] = false;

    std::function<bool(std::size_t)> extend = [&](std::size_t depth) -> bool {
        if (depth == arranged.size()) return true;
        NodeId u = arranged[depth];
        for (NodeId v : candidates[u]) {
            if (used[v]) continue;
            bool ok = true;
            for (const auto& [w, x] : mapping) {
                if (g1.edge_labels_between(u, w) != g2.edge_labels_between(v, x)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            mapping[u] = v;
            used[v] = true;
            if (extend(depth + 1)) return true;
            mapping.erase(u);
            used[v] = false;
        }
        return false;
    };
    return extend(0);
}

} // namespace ncence

#endif // NCENCE_ISOMORPHISM_HPP
