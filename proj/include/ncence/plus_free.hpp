#ifndef NCENCE_PLUS_FREE_HPP
#define NCENCE_PLUS_FREE_HPP

#include <string>
#include <vector>

#include "ncence/control.hpp"
#include "ncence/errors.hpp"

namespace ncence {

inline constexpr std::size_t kDefaultComponentBudget = 256;

/// Rewrite a control expression into components R_1 ... R_n with
/// L(r) = union of L(R_k) and no Union anywhere inside any R_k.
///
/// Stars are unfolded once, innermost first: with the body's own
/// components c_1..c_m in hand, x* becomes K.c_1 + ... + K.c_m + eps,
/// where K = (c_1* ... c_m*)* is a union-free expression for L(x)*
/// ((A+B)* = (A*B*)*). The unfold makes the final iteration of every
/// starred block an explicit factor, which is what the marking step of
/// the concatenation constructions needs.
inline std::vector<ControlPtr> plus_free_normal_form(
    const ControlPtr& r, std::size_t budget = kDefaultComponentBudget) {
    using Kind = ControlExpr::Kind;

    std::function<std::vector<ControlPtr>(const ControlPtr&)> pf =
        [&](const ControlPtr& e) -> std::vector<ControlPtr> {
        switch (e->kind) {
            case Kind::Empty:
                return {};
            case Kind::Epsilon:
            case Kind::Symbol:
                return {e};
            case Kind::Union: {
                std::vector<ControlPtr> out;
                for (const auto& k : e->kids) {
                    auto sub = pf(k);
                    out.insert(out.end(), sub.begin(), sub.end());
                    if (out.size() > budget)
                        throw BudgetError("plus-free component budget exceeded");
                }
                return out;
            }
            case Kind::Concat: {
                std::vector<ControlPtr> acc{make_epsilon()};
                for (const auto& k : e->kids) {
                    auto sub = pf(k);
                    std::vector<ControlPtr> next;
                    for (const auto& a : acc)
                        for (const auto& b : sub) {
                            next.push_back(make_concat({a, b}));
                            if (next.size() > budget)
                                throw BudgetError("plus-free component budget exceeded");
                        }
                    acc = std::move(next);
                    if (acc.empty()) return {};
                }
                return acc;
            }
            case Kind::Star: {
                auto comps = pf(e->kids.front());
                std::vector<ControlPtr> nonempty;
                for (const auto& c : comps)
                    if (c->kind != Kind::Epsilon) nonempty.push_back(c);
                if (nonempty.empty()) return {make_epsilon()};
                std::vector<ControlPtr> starred;
                for (const auto& c : nonempty) starred.push_back(make_star(c));
                ControlPtr closure = make_star(make_concat(std::move(starred)));
                std::vector<ControlPtr> out{make_epsilon()};
                for (const auto& c : nonempty) {
                    out.push_back(make_concat({closure, c}));
                    if (out.size() > budget)
                        throw BudgetError("plus-free component budget exceeded");
                }
                return out;
            }
        }
        return {};
    };

    std::vector<ControlPtr> comps = pf(r);
    std::sort(comps.begin(), comps.end(),
              [](const ControlPtr& a, const ControlPtr& b) { return compare(a, b) < 0; });
    comps.erase(std::unique(comps.begin(), comps.end(),
                            [](const ControlPtr& a, const ControlPtr& b) { return equal(a, b); }),
                comps.end());
    return comps;
}

/// One Symbol occurrence of a union-free component that sits outside
/// every Star: such an occurrence executes exactly once in every word.
struct OccurrenceHandle {
    std::vector<std::size_t> path; // child indices from the root
    Label name;
};

/// Left-to-right explicit (non-starred) Symbol occurrences of a
/// union-free component.
inline std::vector<OccurrenceHandle> explicit_occurrences(const ControlPtr& seq) {
    std::vector<OccurrenceHandle> out;
    std::vector<std::size_t> path;
    std::function<void(const ControlPtr&)> walk = [&](const ControlPtr& e) {
        switch (e->kind) {
            case ControlExpr::Kind::Symbol:
                out.push_back({path, e->symbol});
                return;
            case ControlExpr::Kind::Star:
                return; // starred occurrences may run zero times
            case ControlExpr::Kind::Concat:
                for (std::size_t i = 0; i < e->kids.size(); ++i) {
                    path.push_back(i);
                    walk(e->kids[i]);
                    path.pop_back();
                }
                return;
            case ControlExpr::Kind::Union:
                throw Error("explicit_occurrences requires a union-free component");
            default:
                return;
        }
    };
    walk(seq);
    return out;
}

/// Rename exactly the Symbol at the handle's position.
inline ControlPtr substitute_occurrence(const ControlPtr& seq, const OccurrenceHandle& handle,
                                        const Label& new_name) {
    std::function<ControlPtr(const ControlPtr&, std::size_t)> rebuild =
        [&](const ControlPtr& e, std::size_t depth) -> ControlPtr {
        if (depth == handle.path.size()) {
            if (e->kind != ControlExpr::Kind::Symbol || e->symbol != handle.name)
                throw StaleHandle("occurrence handle does not match the expression");
            return make_symbol(new_name);
        }
        std::size_t idx = handle.path[depth];
        if (idx >= e->kids.size())
            throw StaleHandle("occurrence handle path out of range");
        std::vector<ControlPtr> kids = e->kids;
        kids[idx] = rebuild(kids[idx], depth + 1);
        switch (e->kind) {
            case ControlExpr::Kind::Concat: return make_concat(std::move(kids));
            case ControlExpr::Kind::Union: return make_union(std::move(kids));
            case ControlExpr::Kind::Star: return make_star(kids.front());
            default: throw StaleHandle("occurrence handle path into a leaf");
        }
    };
    return rebuild(seq, 0);
}

} // namespace ncence

#endif // NCENCE_PLUS_FREE_HPP
