#ifndef NCENCE_CANONICAL_HPP
#define NCENCE_CANONICAL_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ncence/graph.hpp"

namespace ncence {

/// Node-count cap for canonicalization. Past this the search may get slow,
/// so we fail loudly instead.
inline constexpr std::size_t kDefaultCanonicalCap = 16;

namespace detail {

// Serialization of a graph under a (possibly partial) node ordering, as
// one segment per position: the node's label followed by its labeled
// adjacency toward earlier positions. A k-node prefix therefore yields a
// literal string prefix of every completion, which makes minimization
// over orderings prunable against the best key so far.
inline std::string serialize_ordered(const LabeledGraph& g, const std::vector<NodeId>& order) {
    std::string out = "n" + std::to_string(g.node_count()) + "|";
    for (std::size_t j = 0; j < order.size(); ++j) {
        out += g.label_of(order[j]).str() + ",";
        for (std::size_t i = 0; i < j; ++i) {
            auto labels = g.edge_labels_between(order[i], order[j]);
            if (labels.empty()) continue;
            out += std::to_string(i) + ":";
            for (const auto& l : labels) out += l.str() + ",";
            out += ";";
        }
        out += "$";
    }
    return out;
}

// Color refinement: start from (label, sorted incident (edge label,
// neighbor label) pairs), then repeatedly append the sorted multiset of
// (edge label, neighbor color). Chosen prefix nodes are pinned to unique
// colors. Colors are plain strings so the induced cell order is stable
// across platforms.
class Refiner {
public:
    explicit Refiner(const LabeledGraph& g) : g_(g) {
        for (const auto& [id, label] : g.nodes()) ids_.push_back(id);
        for (NodeId v : ids_) {
            std::vector<std::string> inc;
            for (const auto& e : g.edges()) {
                if (e.u == v) inc.push_back(e.label.str() + "~" + g.label_of(e.v).str());
                else if (e.v == v) inc.push_back(e.label.str() + "~" + g.label_of(e.u).str());
            }
            std::sort(inc.begin(), inc.end());
            std::string c = g.label_of(v).str() + "/";
            for (const auto& s : inc) c += s + ";";
            base_[v] = c;
        }
        for (const auto& e : g.edges()) {
            nbrs_[e.u].emplace_back(e.v, e.label);
            nbrs_[e.v].emplace_back(e.u, e.label);
        }
    }

    /// Cells of the stable partition over the nodes not in `pinned`,
    /// ordered by color value; each cell sorted by id.
    std::vector<std::vector<NodeId>> refine(const std::vector<NodeId>& pinned) const {
        std::map<NodeId, std::string> color;
        for (NodeId v : ids_) color[v] = base_.at(v);
        for (std::size_t i = 0; i < pinned.size(); ++i)
            color[pinned[i]] = "@" + std::to_string(i);

        for (std::size_t round = 0; round < ids_.size(); ++round) {
            std::map<NodeId, std::string> next;
            for (NodeId v : ids_) {
                std::vector<std::string> parts;
                auto it = nbrs_.find(v);
                if (it != nbrs_.end())
                    for (const auto& [w, el] : it->second)
                        parts.push_back(el.str() + ">" + color[w]);
                std::sort(parts.begin(), parts.end());
                std::string c = color[v] + "[";
                for (const auto& p : parts) c += p + "|";
                c += "]";
                next[v] = c;
            }
            // Compress to ranks (ordered by color string) to stop growth.
            std::vector<std::string> palette;
            for (const auto& [v, c] : next) palette.push_back(c);
            std::sort(palette.begin(), palette.end());
            palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
            std::map<NodeId, std::string> ranked;
            for (NodeId v : ids_) {
                auto r = std::lower_bound(palette.begin(), palette.end(), next[v]) - palette.begin();
                ranked[v] = std::to_string(r);
            }
            bool stable = true;
            {
                // Partition is stable when the rank classes match the old
                // color classes.
                std::map<std::string, std::string> seen;
                for (NodeId v : ids_) {
                    auto [it2, fresh] = seen.emplace(color[v], ranked[v]);
                    if (!fresh && it2->second != ranked[v]) { stable = false; break; }
                }
                std::map<std::string, std::string> back;
                if (stable)
                    for (NodeId v : ids_) {
                        auto [it2, fresh] = back.emplace(ranked[v], color[v]);
                        if (!fresh && it2->second != color[v]) { stable = false; break; }
                    }
            }
            color = std::move(ranked);
            if (stable) break;
        }

        std::map<std::string, std::vector<NodeId>> cells;
        std::vector<NodeId> pin(pinned);
        std::sort(pin.begin(), pin.end());
        for (NodeId v : ids_)
            if (!std::binary_search(pin.begin(), pin.end(), v)) cells[color[v]].push_back(v);
        std::vector<std::vector<NodeId>> out;
        for (auto& [c, members] : cells) out.push_back(std::move(members));
        return out;
    }

private:
    const LabeledGraph& g_;
    std::vector<NodeId> ids_;
    std::map<NodeId, std::string> base_;
    std::map<NodeId, std::vector<std::pair<NodeId, Label>>> nbrs_;
};

// u and u' are interchangeable when swapping them is an automorphism:
// same label and identical labeled adjacency toward every other node.
inline bool twin_nodes(const LabeledGraph& g, NodeId u, NodeId v) {
    if (g.label_of(u) != g.label_of(v)) return false;
    for (const auto& [w, l] : g.nodes()) {
        if (w == u || w == v) continue;
        if (g.edge_labels_between(u, w) != g.edge_labels_between(v, w)) return false;
    }
    return true;
}

} // namespace detail

/// Canonical key: canonical_key(g1) == canonical_key(g2) iff the graphs
/// are isomorphic. Minimizes serialize_ordered over node orderings,
/// searching cells of an individualization-refinement partition, skipping
/// interchangeable candidates and pruning against the best key found.
inline std::string canonical_key(const LabeledGraph& g,
                                 std::size_t cap = kDefaultCanonicalCap) {
    if (g.node_count() > cap)
        throw TooLarge("canonicalization cap exceeded: " + std::to_string(g.node_count()) +
                       " > " + std::to_string(cap));
    if (g.empty()) return "n0|";

    detail::Refiner refiner(g);
    std::string best;
    bool have_best = false;
    std::vector<NodeId> prefix;

    std::function<void()> search = [&]() {
        if (prefix.size() == g.node_count()) {
            std::string key = detail::serialize_ordered(g, prefix);
            if (!have_best || key < best) {
                best = std::move(key);
                have_best = true;
            }
            return;
        }
        if (have_best) {
            // A longer prefix only appends to the serialization of the
            // chosen nodes, so an already-larger partial key cannot win.
            std::string partial = detail::serialize_ordered(g, prefix);
            std::string cut = best.substr(0, partial.size());
            if (partial > cut) return;
        }
        auto cells = refiner.refine(prefix);
        const auto& cell = cells.front();
        std::vector<NodeId> tried;
        for (NodeId u : cell) {
            bool redundant = false;
            for (NodeId t : tried)
                if (detail::twin_nodes(g, t, u)) { redundant = true; break; }
            if (redundant) continue;
            tried.push_back(u);
            prefix.push_back(u);
            search();
            prefix.pop_back();
        }
    };
    search();
    return best;
}

} // namespace ncence

#endif // NCENCE_CANONICAL_HPP
