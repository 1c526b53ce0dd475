#ifndef NCENCE_GRAPH_SET_HPP
#define NCENCE_GRAPH_SET_HPP

#include <map>
#include <string>
#include <vector>

#include "ncence/canonical.hpp"
#include "ncence/graph.hpp"

namespace ncence {

/// A set of labeled graphs deduplicated up to isomorphism, keyed by
/// canonical_key. Inserting a graph isomorphic to a member is a no-op.
class GraphSet {
public:
    GraphSet() = default;
    explicit GraphSet(std::size_t canonical_cap) : cap_(canonical_cap) {}

    /// Returns true when the graph was new.
    bool insert(const LabeledGraph& g) {
        return members_.emplace(canonical_key(g, cap_), g).second;
    }

    bool contains(const LabeledGraph& g) const {
        return members_.count(canonical_key(g, cap_)) != 0;
    }
    bool contains_key(const std::string& key) const { return members_.count(key) != 0; }

    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }

    /// Sorted canonical keys.
    std::vector<std::string> keys() const {
        std::vector<std::string> out;
        out.reserve(members_.size());
        for (const auto& [k, g] : members_) out.push_back(k);
        return out;
    }

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    bool operator==(const GraphSet& other) const {
        return keys() == other.keys();
    }

private:
    std::size_t cap_ = kDefaultCanonicalCap;
    std::map<std::string, LabeledGraph> members_;
};

} // namespace ncence

#endif // NCENCE_GRAPH_SET_HPP
