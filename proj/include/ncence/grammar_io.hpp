#ifndef NCENCE_GRAMMAR_IO_HPP
#define NCENCE_GRAMMAR_IO_HPP

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ncence/grammar.hpp"

namespace ncence {

namespace detail {

// A '#' starts a comment when it is the first non-blank character of the
// line, or is preceded by whitespace and followed by whitespace or end of
// line. Anywhere else '#' is part of a label ("#x1", "A#1").
inline std::string strip_comment(const std::string& line) {
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos) return "";
    if (line[first] == '#') return "";
    for (std::size_t i = first + 1; i < line.size(); ++i) {
        if (line[i] != '#') continue;
        bool prev_ws = line[i - 1] == ' ' || line[i - 1] == '\t';
        bool next_ws = i + 1 == line.size() || line[i + 1] == ' ' || line[i + 1] == '\t';
        if (prev_ws && next_ws) return line.substr(0, i);
    }
    return line;
}

inline std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

inline NodeId parse_node_id(const std::string& tok, std::size_t lineno) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        throw SyntaxError("expected a node id, got \"" + tok + "\"", lineno);
    return static_cast<NodeId>(std::stoul(tok));
}

inline Label parse_label_tok(const std::string& tok, std::size_t lineno) {
    if (!is_valid_label_text(tok))
        throw SyntaxError("invalid label \"" + tok + "\"", lineno);
    return Label{tok};
}

inline std::set<Label> parse_label_list(const std::string& rest, std::size_t lineno) {
    std::set<Label> out;
    std::string item;
    std::istringstream in(rest);
    while (std::getline(in, item, ',')) {
        std::size_t a = item.find_first_not_of(" \t");
        if (a == std::string::npos) {
            if (out.empty() && in.eof()) break; // wholly blank list
            throw SyntaxError("empty entry in label list", lineno);
        }
        std::size_t b = item.find_last_not_of(" \t");
        out.insert(parse_label_tok(item.substr(a, b - a + 1), lineno));
    }
    return out;
}

struct GraphAccum {
    std::vector<std::pair<NodeId, Label>> nodes;
    std::vector<std::tuple<NodeId, NodeId, Label>> edges;

    LabeledGraph build(std::size_t lineno) const {
        try {
            return LabeledGraph::build(nodes, edges);
        } catch (const Error& e) {
            throw SyntaxError(std::string("bad graph block: ") + e.what(), lineno);
        }
    }
};

} // namespace detail

/// Parse the line-oriented grammar format. Runs validate_grammar on the
/// result and throws ValidationError when it reports anything.
inline Grammar parse_grammar_file(const std::string& text) {
    using detail::tokenize;

    std::optional<Label> name;
    bool generated = false;
    std::optional<std::set<Label>> sigma, delta, gamma, omega;
    std::optional<LabeledGraph> start;
    std::map<Label, Production> productions;
    std::optional<ControlPtr> control;

    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;

    // Block state while inside start:/prod: sections.
    bool in_block = false;
    bool block_is_start = false;
    std::optional<Label> block_name, block_lhs;
    detail::GraphAccum accum;
    std::vector<ConnectionInstruction> instructions;
    std::size_t block_line = 0;

    auto finish_block = [&]() {
        if (block_is_start) {
            start = accum.build(block_line);
        } else {
            LabeledGraph daughter = accum.build(block_line);
            Production p{*block_name, *block_lhs, daughter, instructions};
            if (!productions.emplace(p.name, p).second)
                throw SyntaxError("duplicate production \"" + p.name.str() + "\"", block_line);
        }
        in_block = false;
        accum = {};
        instructions.clear();
    };

    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = detail::strip_comment(raw);
        auto toks = tokenize(line);
        if (toks.empty()) continue;

        if (in_block) {
            const std::string& head = toks[0];
            if (head == "end") {
                if (toks.size() != 1) throw SyntaxError("unexpected tokens after end", lineno);
                finish_block();
            } else if (head == "node") {
                if (toks.size() != 3) throw SyntaxError("node line needs: node <id> <label>", lineno);
                accum.nodes.emplace_back(detail::parse_node_id(toks[1], lineno),
                                         detail::parse_label_tok(toks[2], lineno));
            } else if (head == "edge") {
                if (toks.size() != 4)
                    throw SyntaxError("edge line needs: edge <u> <v> <label>", lineno);
                accum.edges.emplace_back(detail::parse_node_id(toks[1], lineno),
                                         detail::parse_node_id(toks[2], lineno),
                                         detail::parse_label_tok(toks[3], lineno));
            } else if (head == "connect") {
                if (block_is_start) throw SyntaxError("connect not allowed in start block", lineno);
                if (toks.size() != 4)
                    throw SyntaxError("connect line needs: connect <a> <p>|<q> <B>", lineno);
                std::size_t bar = toks[2].find('|');
                if (bar == std::string::npos)
                    throw SyntaxError("connect edge pair needs the form <p>|<q>", lineno);
                instructions.push_back(StandardInstruction{
                    detail::parse_label_tok(toks[1], lineno),
                    detail::parse_label_tok(toks[2].substr(0, bar), lineno),
                    detail::parse_label_tok(toks[2].substr(bar + 1), lineno),
                    detail::parse_node_id(toks[3], lineno)});
            } else if (head == "jump") {
                if (block_is_start) throw SyntaxError("jump not allowed in start block", lineno);
                if (toks.size() != 4)
                    throw SyntaxError("jump line needs: jump <a> <alpha> <b>", lineno);
                instructions.push_back(JumpingInstruction{
                    detail::parse_label_tok(toks[1], lineno),
                    detail::parse_label_tok(toks[2], lineno),
                    detail::parse_label_tok(toks[3], lineno)});
            } else {
                throw SyntaxError("unexpected line in block: \"" + head + "\"", lineno);
            }
            continue;
        }

        const std::string& head = toks[0];
        if (head == "grammar") {
            if (name) throw SyntaxError("duplicate grammar line", lineno);
            if (toks.size() != 2) throw SyntaxError("grammar line needs a name", lineno);
            name = detail::parse_label_tok(toks[1], lineno);
        } else if (head == "generated") {
            if (toks.size() != 1) throw SyntaxError("unexpected tokens after generated", lineno);
            generated = true;
        } else if (head == "node_labels:" || head == "terminal_nodes:" ||
                   head == "edge_labels:" || head == "terminal_edges:") {
            std::size_t colon = line.find(':');
            auto set = detail::parse_label_list(line.substr(colon + 1), lineno);
            auto assign = [&](std::optional<std::set<Label>>& slot) {
                if (slot) throw SyntaxError("duplicate " + head, lineno);
                slot = std::move(set);
            };
            if (head == "node_labels:") assign(sigma);
            else if (head == "terminal_nodes:") assign(delta);
            else if (head == "edge_labels:") assign(gamma);
            else assign(omega);
        } else if (head == "start:") {
            if (toks.size() != 1) throw SyntaxError("unexpected tokens after start:", lineno);
            if (start) throw SyntaxError("duplicate start block", lineno);
            in_block = true;
            block_is_start = true;
            block_line = lineno;
        } else if (head == "prod") {
            // prod <name>: <lhs> ->
            if (toks.size() != 4 || toks[1].size() < 2 || toks[1].back() != ':' ||
                toks[3] != "->")
                throw SyntaxError("production header needs: prod <name>: <lhs> ->", lineno);
            in_block = true;
            block_is_start = false;
            block_line = lineno;
            block_name = detail::parse_label_tok(toks[1].substr(0, toks[1].size() - 1), lineno);
            block_lhs = detail::parse_label_tok(toks[2], lineno);
        } else if (head == "control:") {
            if (control) throw SyntaxError("duplicate control line", lineno);
            std::size_t colon = line.find(':');
            try {
                control = parse_control(line.substr(colon + 1));
            } catch (const SyntaxError& e) {
                throw SyntaxError(std::string("in control expression: ") + e.what(), lineno);
            }
        } else {
            throw SyntaxError("unexpected line: \"" + head + "\"", lineno);
        }
    }

    if (in_block) throw SyntaxError("unterminated block (missing end)", lineno);
    if (!name) throw SyntaxError("missing grammar line", lineno);
    if (!sigma) throw SyntaxError("missing node_labels line", lineno);
    if (!delta) throw SyntaxError("missing terminal_nodes line", lineno);
    if (!gamma) throw SyntaxError("missing edge_labels line", lineno);
    if (!omega) throw SyntaxError("missing terminal_edges line", lineno);
    if (!start) throw SyntaxError("missing start block", lineno);
    if (!control) throw SyntaxError("missing control line", lineno);

    Grammar g{*name, *sigma, *delta, *gamma, *omega, std::move(productions),
              *start, *control, generated};
    auto violations = validate_grammar(g);
    if (!violations.empty()) throw ValidationError(std::move(violations));
    return g;
}

/// Canonical text: fixed section order, label sets comma-separated in
/// lexicographic order, productions in name order, block contents sorted.
/// Equal grammars serialize identically.
inline std::string serialize_grammar(const Grammar& g) {
    std::string out = "grammar " + g.name.str() + "\n";
    if (g.generated) out += "generated\n";

    auto label_line = [](const std::string& key, const std::set<Label>& set) {
        std::string line = key + ":";
        bool first = true;
        for (const auto& l : set) {
            line += first ? " " : ", ";
            line += l.str();
            first = false;
        }
        return line + "\n";
    };
    out += label_line("node_labels", g.sigma);
    out += label_line("terminal_nodes", g.delta);
    out += label_line("edge_labels", g.gamma);
    out += label_line("terminal_edges", g.omega);

    auto graph_block = [](const LabeledGraph& graph) {
        std::string block;
        for (const auto& [id, label] : graph.nodes())
            block += "  node " + std::to_string(id) + " " + label.str() + "\n";
        for (const auto& e : graph.edges())
            block += "  edge " + std::to_string(e.u) + " " + std::to_string(e.v) + " " +
                     e.label.str() + "\n";
        return block;
    };

    out += "start:\n" + graph_block(g.start) + "end\n";

    for (const auto& [name, p] : g.productions) {
        out += "prod " + name.str() + ": " + p.lhs.str() + " ->\n";
        out += graph_block(p.daughter);
        for (const auto& instr : p.instructions) {
            if (const auto* s = std::get_if<StandardInstruction>(&instr))
                out += "  connect " + s->neighbor_label.str() + " " + s->old_edge.str() + "|" +
                       s->new_edge.str() + " " + std::to_string(s->target) + "\n";
        }
        for (const auto& instr : p.instructions) {
            if (const auto* j = std::get_if<JumpingInstruction>(&instr))
                out += "  jump " + j->daughter_label.str() + " " + j->edge.str() + " " +
                       j->host_label.str() + "\n";
        }
        out += "end\n";
    }

    out += "control: " + control_to_text(g.control) + "\n";
    return out;
}

} // namespace ncence

#endif // NCENCE_GRAMMAR_IO_HPP
