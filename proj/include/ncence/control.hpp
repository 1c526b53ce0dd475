#ifndef NCENCE_CONTROL_HPP
#define NCENCE_CONTROL_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "ncence/errors.hpp"
#include "ncence/label.hpp"

namespace ncence {

/// Regular control expression over production names. Nodes are immutable
/// and shared; use the make_* constructors, which normalize as they build
/// (flattening, unit/annihilator removal, sorted deduplicated unions,
/// star collapse). Empty never appears in parsed input; it closes the
/// algebra under derivatives.
struct ControlExpr {
    enum class Kind { Empty, Epsilon, Symbol, Concat, Union, Star };

    Kind kind;
    Label symbol;                                        // Symbol only
    std::vector<std::shared_ptr<const ControlExpr>> kids; // Concat/Union >=2, Star ==1

    ControlExpr(Kind k, Label sym, std::vector<std::shared_ptr<const ControlExpr>> ks)
        : kind(k), symbol(std::move(sym)), kids(std::move(ks)) {}
};

using ControlPtr = std::shared_ptr<const ControlExpr>;

namespace detail {
inline const Label& placeholder_label() {
    static const Label l{"_"};
    return l;
}
} // namespace detail

inline ControlPtr make_empty() {
    static const ControlPtr e = std::make_shared<const ControlExpr>(
        ControlExpr::Kind::Empty, detail::placeholder_label(), std::vector<ControlPtr>{});
    return e;
}

inline ControlPtr make_epsilon() {
    static const ControlPtr e = std::make_shared<const ControlExpr>(
        ControlExpr::Kind::Epsilon, detail::placeholder_label(), std::vector<ControlPtr>{});
    return e;
}

inline ControlPtr make_symbol(Label name) {
    return std::make_shared<const ControlExpr>(ControlExpr::Kind::Symbol, std::move(name),
                                               std::vector<ControlPtr>{});
}

/// Total structural order; 0 when equal.
inline int compare(const ControlPtr& a, const ControlPtr& b) {
    if (a->kind != b->kind) return a->kind < b->kind ? -1 : 1;
    if (a->kind == ControlExpr::Kind::Symbol) {
        if (a->symbol != b->symbol) return a->symbol < b->symbol ? -1 : 1;
        return 0;
    }
    if (a->kids.size() != b->kids.size()) return a->kids.size() < b->kids.size() ? -1 : 1;
    for (std::size_t i = 0; i < a->kids.size(); ++i)
        if (int c = compare(a->kids[i], b->kids[i])) return c;
    return 0;
}

inline bool equal(const ControlPtr& a, const ControlPtr& b) { return compare(a, b) == 0; }

inline ControlPtr make_concat(std::vector<ControlPtr> parts) {
    std::vector<ControlPtr> flat;
    for (auto& p : parts) {
        if (p->kind == ControlExpr::Kind::Empty) return make_empty();
        if (p->kind == ControlExpr::Kind::Epsilon) continue;
        if (p->kind == ControlExpr::Kind::Concat)
            flat.insert(flat.end(), p->kids.begin(), p->kids.end());
        else
            flat.push_back(p);
    }
    if (flat.empty()) return make_epsilon();
    if (flat.size() == 1) return flat.front();
    return std::make_shared<const ControlExpr>(ControlExpr::Kind::Concat,
                                               detail::placeholder_label(), std::move(flat));
}

inline ControlPtr make_union(std::vector<ControlPtr> parts) {
    std::vector<ControlPtr> flat;
    for (auto& p : parts) {
        if (p->kind == ControlExpr::Kind::Empty) continue;
        if (p->kind == ControlExpr::Kind::Union)
            flat.insert(flat.end(), p->kids.begin(), p->kids.end());
        else
            flat.push_back(p);
    }
    std::sort(flat.begin(), flat.end(),
              [](const ControlPtr& a, const ControlPtr& b) { return compare(a, b) < 0; });
    flat.erase(std::unique(flat.begin(), flat.end(),
                           [](const ControlPtr& a, const ControlPtr& b) { return equal(a, b); }),
               flat.end());
    if (flat.empty()) return make_empty();
    if (flat.size() == 1) return flat.front();
    return std::make_shared<const ControlExpr>(ControlExpr::Kind::Union,
                                               detail::placeholder_label(), std::move(flat));
}

inline ControlPtr make_star(ControlPtr child) {
    switch (child->kind) {
        case ControlExpr::Kind::Empty:
        case ControlExpr::Kind::Epsilon:
            return make_epsilon();
        case ControlExpr::Kind::Star:
            return child;
        default:
            return std::make_shared<const ControlExpr>(ControlExpr::Kind::Star,
                                                       detail::placeholder_label(),
                                                       std::vector<ControlPtr>{std::move(child)});
    }
}

/// True iff the empty word belongs to the language.
inline bool nullable(const ControlPtr& r) {
    switch (r->kind) {
        case ControlExpr::Kind::Empty: return false;
        case ControlExpr::Kind::Epsilon: return true;
        case ControlExpr::Kind::Symbol: return false;
        case ControlExpr::Kind::Star: return true;
        case ControlExpr::Kind::Concat:
            return std::all_of(r->kids.begin(), r->kids.end(), nullable);
        case ControlExpr::Kind::Union:
            return std::any_of(r->kids.begin(), r->kids.end(), nullable);
    }
    return false;
}

/// Brzozowski derivative with respect to one symbol. Normalization in the
/// smart constructors keeps the reachable expression space small.
inline ControlPtr derivative(const ControlPtr& r, const Label& a) {
    switch (r->kind) {
        case ControlExpr::Kind::Empty:
        case ControlExpr::Kind::Epsilon:
            return make_empty();
        case ControlExpr::Kind::Symbol:
            return r->symbol == a ? make_epsilon() : make_empty();
        case ControlExpr::Kind::Union: {
            std::vector<ControlPtr> parts;
            for (const auto& k : r->kids) parts.push_back(derivative(k, a));
            return make_union(std::move(parts));
        }
        case ControlExpr::Kind::Concat: {
            // d(xy) = d(x)y + [nullable(x)] d(y), folded over the list.
            std::vector<ControlPtr> rest(r->kids.begin() + 1, r->kids.end());
            ControlPtr tail = make_concat(rest);
            std::vector<ControlPtr> head{derivative(r->kids.front(), a)};
            head.push_back(tail);
            ControlPtr first = make_concat(std::move(head));
            if (!nullable(r->kids.front())) return first;
            return make_union({first, derivative(tail, a)});
        }
        case ControlExpr::Kind::Star: {
            std::vector<ControlPtr> parts{derivative(r->kids.front(), a), r};
            return make_concat(std::move(parts));
        }
    }
    return make_empty();
}

/// Language emptiness. Normalized expressions denote the empty language
/// exactly when they are the Empty node.
inline bool is_empty_language(const ControlPtr& r) {
    return r->kind == ControlExpr::Kind::Empty;
}

/// Symbols occurring in the expression, sorted.
inline std::vector<Label> alphabet(const ControlPtr& r) {
    std::set<Label> acc;
    std::function<void(const ControlPtr&)> walk = [&](const ControlPtr& e) {
        if (e->kind == ControlExpr::Kind::Symbol) acc.insert(e->symbol);
        for (const auto& k : e->kids) walk(k);
    };
    walk(r);
    return {acc.begin(), acc.end()};
}

using Word = std::vector<Label>;

/// Word membership, by folding derivatives over the word.
inline bool accepts(const ControlPtr& r, const Word& word) {
    ControlPtr cur = r;
    for (const auto& a : word) {
        cur = derivative(cur, a);
        if (is_empty_language(cur)) return false;
    }
    return nullable(cur);
}

inline constexpr std::size_t kDefaultWordBudget = 10000;

/// Exactly the words of length <= max_len, via breadth-first expansion of
/// live derivative states. Throws BudgetError past `budget` words.
inline std::set<Word> words_up_to(const ControlPtr& r, std::size_t max_len,
                                  std::size_t budget = kDefaultWordBudget) {
    std::set<Word> out;
    const auto sigma = alphabet(r);
    std::vector<std::pair<ControlPtr, Word>> frontier{{r, {}}};
    for (std::size_t len = 0; len <= max_len && !frontier.empty(); ++len) {
        for (const auto& [expr, word] : frontier) {
            if (nullable(expr)) {
                out.insert(word);
                if (out.size() > budget)
                    throw BudgetError("words_up_to budget exceeded (" +
                                      std::to_string(budget) + " words)");
            }
        }
        if (len == max_len) break;
        std::vector<std::pair<ControlPtr, Word>> next;
        for (const auto& [expr, word] : frontier) {
            for (const auto& a : sigma) {
                ControlPtr d = derivative(expr, a);
                if (is_empty_language(d)) continue;
                Word w = word;
                w.push_back(a);
                next.emplace_back(std::move(d), std::move(w));
            }
        }
        frontier = std::move(next);
    }
    return out;
}

// ---------------------------------------------------------------------
// Text syntax. Symbols are production names; `.` concatenates, `+` is
// union, postfix `*` is star, `eps` the empty word; precedence * > . > +.

namespace detail {

class ControlParser {
public:
    explicit ControlParser(const std::string& text) : text_(text) {}

    ControlPtr parse() {
        ControlPtr r = parse_union();
        skip_ws();
        if (pos_ != text_.size())
            throw SyntaxError("unexpected input after expression", pos_);
        return r;
    }

private:
    ControlPtr parse_union() {
        std::vector<ControlPtr> parts{parse_concat()};
        while (peek() == '+') {
            ++pos_;
            parts.push_back(parse_concat());
        }
        return make_union(std::move(parts));
    }

    ControlPtr parse_concat() {
        std::vector<ControlPtr> parts{parse_star()};
        while (peek() == '.') {
            ++pos_;
            parts.push_back(parse_star());
        }
        return make_concat(std::move(parts));
    }

    ControlPtr parse_star() {
        ControlPtr r = parse_atom();
        while (peek() == '*') {
            ++pos_;
            r = make_star(r);
        }
        return r;
    }

    ControlPtr parse_atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            ControlPtr r = parse_union();
            if (peek() != ')') throw SyntaxError("expected ')'", pos_);
            ++pos_;
            return r;
        }
        if (is_label_char(c)) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && is_label_char(text_[pos_])) ++pos_;
            std::string name = text_.substr(start, pos_ - start);
            if (name == "eps") return make_epsilon();
            return make_symbol(Label{name});
        }
        throw SyntaxError(c == '\0' ? "unexpected end of expression"
                                    : std::string("unexpected character '") + c + "'",
                          pos_);
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline ControlPtr parse_control(const std::string& text) {
    return detail::ControlParser(text).parse();
}

/// Canonical rendering; parse_control(control_to_text(r)) reproduces r.
inline std::string control_to_text(const ControlPtr& r) {
    switch (r->kind) {
        case ControlExpr::Kind::Empty:
            // Internal-only node; validated grammars never carry it.
            throw Error("empty control expression has no surface syntax");
        case ControlExpr::Kind::Epsilon:
            return "eps";
        case ControlExpr::Kind::Symbol:
            return r->symbol.str();
        case ControlExpr::Kind::Star: {
            const auto& k = r->kids.front();
            bool atom = k->kind == ControlExpr::Kind::Symbol ||
                        k->kind == ControlExpr::Kind::Epsilon;
            return atom ? control_to_text(k) + "*" : "(" + control_to_text(k) + ")*";
        }
        case ControlExpr::Kind::Concat: {
            std::string out;
            for (std::size_t i = 0; i < r->kids.size(); ++i) {
                if (i) out += " . ";
                const auto& k = r->kids[i];
                bool paren = k->kind == ControlExpr::Kind::Union;
                out += paren ? "(" + control_to_text(k) + ")" : control_to_text(k);
            }
            return out;
        }
        case ControlExpr::Kind::Union: {
            std::string out;
            for (std::size_t i = 0; i < r->kids.size(); ++i) {
                if (i) out += " + ";
                out += control_to_text(r->kids[i]);
            }
            return out;
        }
    }
    return "";
}

} // namespace ncence

#endif // NCENCE_CONTROL_HPP
