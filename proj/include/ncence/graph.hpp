#ifndef NCENCE_GRAPH_HPP
#define NCENCE_GRAPH_HPP

#include <algorithm>
#include <compare>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ncence/errors.hpp"
#include "ncence/label.hpp"

namespace ncence {

/// Label every node and edge carries after underlying(): labels are erased
/// by mapping them to this single reserved label, not by deletion.
inline const Label& erased_label() {
    static const Label l{"#u"};
    return l;
}

/// An undirected labeled edge. The endpoint pair is unordered; we keep the
/// normalized form u < v.
struct Edge {
    NodeId u;
    NodeId v;
    Label label;

    Edge(NodeId a, NodeId b, Label l)
        : u(std::min(a, b)), v(std::max(a, b)), label(std::move(l)) {}

    auto operator<=>(const Edge&) const = default;
};

/// A finite undirected graph with node labels and edge labels. No
/// self-loops; at most one edge per (unordered pair, edge label), though
/// distinct labels between the same pair may coexist. Immutable after
/// construction; every operation returns a new graph.
class LabeledGraph {
public:
    /// The empty graph (the epsilon daughter of a deleting production).
    LabeledGraph() = default;

    static LabeledGraph build(const std::vector<std::pair<NodeId, Label>>& nodes,
                              const std::vector<std::tuple<NodeId, NodeId, Label>>& edges) {
        LabeledGraph g;
        for (const auto& [id, label] : nodes) {
            if (g.nodes_.count(id))
                throw DuplicateNode("duplicate node id " + std::to_string(id));
            g.nodes_.emplace(id, label);
        }
        for (const auto& [u, v, label] : edges) {
            if (u == v)
                throw SelfLoop("self-loop at node " + std::to_string(u));
            if (!g.nodes_.count(u) || !g.nodes_.count(v))
                throw DanglingEdge("edge endpoint not a node: " + std::to_string(u) +
                                   "-" + std::to_string(v));
            Edge e{u, v, label};
            if (g.edges_.count(e))
                throw DuplicateEdge("duplicate edge " + std::to_string(u) + "-" +
                                    std::to_string(v) + " " + label.str());
            g.edges_.insert(std::move(e));
        }
        return g;
    }

    const std::map<NodeId, Label>& nodes() const { return nodes_; }
    const std::set<Edge>& edges() const { return edges_; }

    bool empty() const { return nodes_.empty(); }
    std::size_t node_count() const { return nodes_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    bool has_node(NodeId id) const { return nodes_.count(id) != 0; }

    const Label& label_of(NodeId id) const {
        auto it = nodes_.find(id);
        if (it == nodes_.end())
            throw UnknownNode("no node " + std::to_string(id));
        return it->second;
    }

    NodeId max_id() const { return nodes_.empty() ? 0 : nodes_.rbegin()->first; }

    /// Sorted labels of the edges joining {a,b}; empty if none.
    std::vector<Label> edge_labels_between(NodeId a, NodeId b) const {
        std::vector<Label> out;
        if (a == b) return out;
        NodeId u = std::min(a, b), v = std::max(a, b);
        // "#" is the least valid label, so this finds the pair's first edge.
        for (auto it = edges_.lower_bound(Edge{u, v, Label{"#"}}); it != edges_.end(); ++it) {
            if (it->u != u || it->v != v) break;
            out.push_back(it->label);
        }
        return out;
    }

    std::size_t degree(NodeId id) const {
        std::size_t d = 0;
        for (const auto& e : edges_)
            if (e.u == id || e.v == id) ++d;
        return d;
    }

    bool operator==(const LabeledGraph& other) const {
        return nodes_ == other.nodes_ && edges_ == other.edges_;
    }

private:
    // Edge sort order places Label last, so lower_bound with the minimal
    // label "0" finds the first edge of a pair.
    std::map<NodeId, Label> nodes_;
    std::set<Edge> edges_;
};

inline LabeledGraph build_graph(const std::vector<std::pair<NodeId, Label>>& nodes,
                                const std::vector<std::tuple<NodeId, NodeId, Label>>& edges) {
    return LabeledGraph::build(nodes, edges);
}

/// Side-by-side union: g2's ids are shifted past g1's maximum, no nodes
/// are identified and no edges added.
inline LabeledGraph disjoint_sum_graphs(const LabeledGraph& g1, const LabeledGraph& g2) {
    std::vector<std::pair<NodeId, Label>> nodes;
    std::vector<std::tuple<NodeId, NodeId, Label>> edges;
    for (const auto& [id, label] : g1.nodes()) nodes.emplace_back(id, label);
    for (const auto& e : g1.edges()) edges.emplace_back(e.u, e.v, e.label);
    NodeId shift = g1.empty() ? 0 : g1.max_id() + 1;
    for (const auto& [id, label] : g2.nodes()) nodes.emplace_back(id + shift, label);
    for (const auto& e : g2.edges()) edges.emplace_back(e.u + shift, e.v + shift, e.label);
    return LabeledGraph::build(nodes, edges);
}

/// Erase all labels: every node and edge label becomes "#u". Parallel
/// edges between a pair collapse to one. Idempotent.
inline LabeledGraph underlying(const LabeledGraph& g) {
    std::vector<std::pair<NodeId, Label>> nodes;
    for (const auto& [id, label] : g.nodes()) nodes.emplace_back(id, erased_label());
    std::set<std::pair<NodeId, NodeId>> pairs;
    std::vector<std::tuple<NodeId, NodeId, Label>> edges;
    for (const auto& e : g.edges())
        if (pairs.insert({e.u, e.v}).second)
            edges.emplace_back(e.u, e.v, erased_label());
    return LabeledGraph::build(nodes, edges);
}

/// Join designated nodes of two nonempty graphs by one new alpha edge.
inline LabeledGraph chain_join(const LabeledGraph& g1, NodeId d1,
                               const LabeledGraph& g2, NodeId d2, const Label& alpha) {
    if (g1.empty() || g2.empty())
        throw EmptyOperand("chain_join operands must be nonempty");
    if (!g1.has_node(d1))
        throw UnknownNode("chain_join: no node " + std::to_string(d1) + " in g1");
    if (!g2.has_node(d2))
        throw UnknownNode("chain_join: no node " + std::to_string(d2) + " in g2");
    NodeId shift = g1.max_id() + 1;
    std::vector<std::pair<NodeId, Label>> nodes;
    std::vector<std::tuple<NodeId, NodeId, Label>> edges;
    for (const auto& [id, label] : g1.nodes()) nodes.emplace_back(id, label);
    for (const auto& e : g1.edges()) edges.emplace_back(e.u, e.v, e.label);
    for (const auto& [id, label] : g2.nodes()) nodes.emplace_back(id + shift, label);
    for (const auto& e : g2.edges()) edges.emplace_back(e.u + shift, e.v + shift, e.label);
    edges.emplace_back(d1, d2 + shift, alpha);
    return LabeledGraph::build(nodes, edges);
}

/// Join the designated node of each part to one fresh central node via
/// alpha edges. The center receives the next free id.
inline LabeledGraph star_join(const std::vector<std::pair<LabeledGraph, NodeId>>& parts,
                              const Label& center_label, const Label& alpha) {
    if (parts.empty())
        throw EmptyOperand("star_join needs at least one part");
    std::vector<std::pair<NodeId, Label>> nodes;
    std::vector<std::tuple<NodeId, NodeId, Label>> edges;
    std::vector<NodeId> designated;
    NodeId shift = 0;
    for (const auto& [g, d] : parts) {
        if (g.empty())
            throw EmptyOperand("star_join parts must be nonempty");
        if (!g.has_node(d))
            throw UnknownNode("star_join: no node " + std::to_string(d));
        for (const auto& [id, label] : g.nodes()) nodes.emplace_back(id + shift, label);
        for (const auto& e : g.edges()) edges.emplace_back(e.u + shift, e.v + shift, e.label);
        designated.push_back(d + shift);
        shift += g.max_id() + 1;
    }
    NodeId center = shift;
    nodes.emplace_back(center, center_label);
    for (NodeId d : designated) edges.emplace_back(center, d, alpha);
    return LabeledGraph::build(nodes, edges);
}

} // namespace ncence

#endif // NCENCE_GRAPH_HPP
