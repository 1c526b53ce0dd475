#ifndef NCENCE_GRAMMAR_HPP
#define NCENCE_GRAMMAR_HPP

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "ncence/control.hpp"
#include "ncence/graph.hpp"
#include "ncence/label.hpp"

namespace ncence {

/// (a, p|q, B): when a former neighbor labeled `a` was joined to the
/// mother by a p-labeled edge, attach it to daughter node B with a
/// q-labeled edge.
struct StandardInstruction {
    Label neighbor_label;
    Label old_edge;
    Label new_edge;
    NodeId target;

    auto operator<=>(const StandardInstruction&) const = default;
};

/// (a, alpha, b): attach every daughter node labeled `a` to every node
/// labeled `b` of the host remainder via an alpha-labeled edge,
/// independent of prior adjacency.
struct JumpingInstruction {
    Label daughter_label;
    Label edge;
    Label host_label;

    auto operator<=>(const JumpingInstruction&) const = default;
};

using ConnectionInstruction = std::variant<StandardInstruction, JumpingInstruction>;

inline bool operator<(const ConnectionInstruction& a, const ConnectionInstruction& b) {
    if (a.index() != b.index()) return a.index() < b.index();
    if (a.index() == 0)
        return std::get<StandardInstruction>(a) < std::get<StandardInstruction>(b);
    return std::get<JumpingInstruction>(a) < std::get<JumpingInstruction>(b);
}

/// p: A -> (D, C). Instructions form a set; they are kept sorted and
/// deduplicated.
struct Production {
    Label name;
    Label lhs;
    LabeledGraph daughter;
    std::vector<ConnectionInstruction> instructions;

    Production(Label n, Label l, LabeledGraph d, std::vector<ConnectionInstruction> c)
        : name(std::move(n)), lhs(std::move(l)), daughter(std::move(d)),
          instructions(std::move(c)) {
        std::sort(instructions.begin(), instructions.end());
        instructions.erase(std::unique(instructions.begin(), instructions.end()),
                           instructions.end());
    }

    bool operator==(const Production& other) const {
        return name == other.name && lhs == other.lhs && daughter == other.daughter &&
               instructions == other.instructions;
    }
};

/// The grammar 7-tuple (node labels, terminal node labels, edge labels,
/// terminal edge labels, productions, start graph, regular control).
/// `generated` marks machine-built grammars, whose labels may use the
/// reserved '#' namespace.
struct Grammar {
    Label name;
    std::set<Label> sigma;
    std::set<Label> delta;
    std::set<Label> gamma;
    std::set<Label> omega;
    std::map<Label, Production> productions;
    LabeledGraph start;
    ControlPtr control;
    bool generated = false;

    bool is_terminal_node_label(const Label& l) const { return delta.count(l) != 0; }
    bool is_nonterminal_node_label(const Label& l) const {
        return sigma.count(l) != 0 && delta.count(l) == 0;
    }

    /// Node labels in delta and edge labels in omega: the graphs that may
    /// enter the language.
    bool is_terminal_graph(const LabeledGraph& g) const {
        for (const auto& [id, label] : g.nodes())
            if (!delta.count(label)) return false;
        for (const auto& e : g.edges())
            if (!omega.count(e.label)) return false;
        return true;
    }

    /// Every label in use anywhere (alphabets, production names).
    std::set<Label> all_labels() const {
        std::set<Label> out(sigma.begin(), sigma.end());
        out.insert(gamma.begin(), gamma.end());
        for (const auto& [n, p] : productions) out.insert(n);
        return out;
    }

    bool operator==(const Grammar& other) const {
        return name == other.name && sigma == other.sigma && delta == other.delta &&
               gamma == other.gamma && omega == other.omega &&
               productions == other.productions && start == other.start &&
               equal(control, other.control) && generated == other.generated;
    }
};

struct Violation {
    enum class Code {
        DeltaNotInSigma,
        OmegaNotInGamma,
        UnknownProduction,
        TerminalLhs,
        UnknownLhs,
        NodeLabelNotInSigma,
        EdgeLabelNotInGamma,
        InstructionTargetMissing,
        InstructionOnEmptyDaughter,
        ReservedLabel,
    };

    Code code;
    std::string where;
    std::string detail;
};

inline std::string violation_text(const Violation& v) {
    static const char* names[] = {
        "DeltaNotInSigma",    "OmegaNotInGamma",       "UnknownProduction",
        "TerminalLhs",        "UnknownLhs",            "NodeLabelNotInSigma",
        "EdgeLabelNotInGamma", "InstructionTargetMissing",
        "InstructionOnEmptyDaughter", "ReservedLabel",
    };
    return std::string(names[static_cast<int>(v.code)]) + " at " + v.where + ": " + v.detail;
}

/// All invariant violations of a grammar; empty result means valid.
/// Total: reports problems as data rather than aborting.
inline std::vector<Violation> validate_grammar(const Grammar& g) {
    std::vector<Violation> out;
    using Code = Violation::Code;

    for (const auto& l : g.delta)
        if (!g.sigma.count(l))
            out.push_back({Code::DeltaNotInSigma, "terminal_nodes", l.str()});
    for (const auto& l : g.omega)
        if (!g.gamma.count(l))
            out.push_back({Code::OmegaNotInGamma, "terminal_edges", l.str()});

    for (const auto& sym : alphabet(g.control))
        if (!g.productions.count(sym))
            out.push_back({Code::UnknownProduction, "control", sym.str()});

    auto check_graph = [&](const LabeledGraph& graph, const std::string& where) {
        for (const auto& [id, label] : graph.nodes())
            if (!g.sigma.count(label))
                out.push_back({Code::NodeLabelNotInSigma, where,
                               label.str() + " (node " + std::to_string(id) + ")"});
        for (const auto& e : graph.edges())
            if (!g.gamma.count(e.label))
                out.push_back({Code::EdgeLabelNotInGamma, where, e.label.str()});
    };
    check_graph(g.start, "start");

    for (const auto& [name, p] : g.productions) {
        std::string where = "prod " + name.str();
        if (g.delta.count(p.lhs))
            out.push_back({Code::TerminalLhs, where, p.lhs.str()});
        else if (!g.sigma.count(p.lhs))
            out.push_back({Code::UnknownLhs, where, p.lhs.str()});
        check_graph(p.daughter, where);
        if (p.daughter.empty() && !p.instructions.empty())
            out.push_back({Code::InstructionOnEmptyDaughter, where,
                           std::to_string(p.instructions.size()) + " instructions"});
        for (const auto& instr : p.instructions) {
            if (const auto* s = std::get_if<StandardInstruction>(&instr)) {
                if (!p.daughter.has_node(s->target))
                    out.push_back({Code::InstructionTargetMissing, where,
                                   "node " + std::to_string(s->target)});
                if (!g.sigma.count(s->neighbor_label))
                    out.push_back({Code::NodeLabelNotInSigma, where, s->neighbor_label.str()});
                if (!g.gamma.count(s->old_edge))
                    out.push_back({Code::EdgeLabelNotInGamma, where, s->old_edge.str()});
                if (!g.gamma.count(s->new_edge))
                    out.push_back({Code::EdgeLabelNotInGamma, where, s->new_edge.str()});
            } else {
                const auto& j = std::get<JumpingInstruction>(instr);
                if (!g.sigma.count(j.daughter_label))
                    out.push_back({Code::NodeLabelNotInSigma, where, j.daughter_label.str()});
                if (!g.sigma.count(j.host_label))
                    out.push_back({Code::NodeLabelNotInSigma, where, j.host_label.str()});
                if (!g.gamma.count(j.edge))
                    out.push_back({Code::EdgeLabelNotInGamma, where, j.edge.str()});
            }
        }
    }

    if (!g.generated) {
        for (const auto& l : g.all_labels())
            if (l.reserved())
                out.push_back({Code::ReservedLabel, "labels", l.str()});
    }
    return out;
}

/// Wraps validate_grammar output when a parsed grammar is invalid.
class ValidationError : public Error {
public:
    explicit ValidationError(std::vector<Violation> violations)
        : Error(render(violations)), violations_(std::move(violations)) {}

    const std::vector<Violation>& violations() const { return violations_; }

private:
    static std::string render(const std::vector<Violation>& vs) {
        std::string msg = "invalid grammar:";
        for (const auto& v : vs) msg += "\n  " + violation_text(v);
        return msg;
    }
    std::vector<Violation> violations_;
};

/// Smallest fresh label "#<stem><k>", k >= 1, avoiding `taken`. The '#'
/// namespace is excluded from user files, so the result is fresh against
/// any user grammar by construction.
inline Label fresh_label(const std::set<Label>& taken, const std::string& stem) {
    for (std::size_t k = 1;; ++k) {
        Label candidate{"#" + stem + std::to_string(k)};
        if (!taken.count(candidate)) return candidate;
    }
}

} // namespace ncence

#endif // NCENCE_GRAMMAR_HPP
