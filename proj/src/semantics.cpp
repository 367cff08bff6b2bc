#include "rtg/semantics.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <utility>

namespace rtg {

namespace {

void require_simplified(const Grammar& g, const char* op) {
    if (!g.simplified())
        throw std::logic_error(std::string(op) + " requires a simplified grammar");
}

// ---------------------------------------------------------------------------
// member
// ---------------------------------------------------------------------------

// Memoized on (subterm identity, type-term identity); both trees are stable
// for the duration of a query. Recursion terminates because expanding a type
// symbol reaches a function-rooted right-hand side (no chain rules), which
// strictly shrinks t.
struct MemberQuery {
    const Grammar& g;
    std::map<std::pair<const GroundTerm*, const Term*>, bool> cache;

    bool run(const GroundTerm& t, const Term& tau) {
        auto key = std::make_pair(&t, &tau);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
        bool result = false;
        if (tau.is_type_symbol()) {
            for (const Term& rhs : g.rhs_of(tau.name())) {
                if (run(t, rhs)) {
                    result = true;
                    break;
                }
            }
        } else if (t.name() == tau.name()) {
            result = true;
            for (size_t i = 0; i < t.args().size(); ++i) {
                if (!run(t.args()[i], tau.args()[i])) {
                    result = false;
                    break;
                }
            }
        }
        cache.emplace(key, result);
        return result;
    }
};

// ---------------------------------------------------------------------------
// member_td
// ---------------------------------------------------------------------------

// Replaces bare type symbols by their rule right-hand sides until every
// element is function-rooted. One pass suffices on a simplified grammar; the
// visited set makes the loop total regardless.
TermSet expand_to_function_roots(const Grammar& g, const TermSet& upsilon) {
    TermSet out;
    std::set<std::string> visited;
    std::vector<const Term*> work;
    for (const Term& t : upsilon) work.push_back(&t);
    while (!work.empty()) {
        const Term* t = work.back();
        work.pop_back();
        if (!t->is_type_symbol()) {
            out.insert(*t);
            continue;
        }
        if (!visited.insert(t->name()).second) continue;
        for (const Term& rhs : g.rhs_of(t->name())) work.push_back(&rhs);
    }
    return out;
}

bool member_td_rec(const Grammar& g, const GroundTerm& t, const TermSet& upsilon) {
    TermSet roots = expand_to_function_roots(g, upsilon);
    std::vector<const Term*> selected;
    for (const Term& e : roots) {
        if (!e.is_type_symbol() && e.name() == t.name()) selected.push_back(&e);
    }
    if (selected.empty()) return false;
    for (size_t i = 0; i < t.args().size(); ++i) {
        TermSet projection;
        for (const Term* e : selected) projection.insert(e->args()[i]);
        if (!member_td_rec(g, t.args()[i], projection)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// enumerate
// ---------------------------------------------------------------------------

// Terms paired with their printed form, kept sorted by print. Children sets
// are combined leftmost-major, which already yields print order because ','
// and ')' sort below every identifier character.
using EnumSet = std::vector<std::pair<std::string, GroundTerm>>;
using EnumSetPtr = std::shared_ptr<const EnumSet>;

struct Enumerator {
    const Grammar& g;
    std::map<std::pair<std::string, Depth>, EnumSetPtr> cache;

    EnumSetPtr run(const Term& tau, Depth d) {
        static const EnumSetPtr kEmpty = std::make_shared<EnumSet>();
        if (d <= 0) return kEmpty;
        auto key = std::make_pair(tau.str(), d);
        if (auto it = cache.find(key); it != cache.end()) return it->second;

        auto out = std::make_shared<EnumSet>();
        if (tau.is_type_symbol()) {
            std::map<std::string, GroundTerm> merged;
            for (const Term& rhs : g.rhs_of(tau.name())) {
                for (const auto& [print, term] : *run(rhs, d)) merged.emplace(print, term);
            }
            out->assign(merged.begin(), merged.end());
        } else if (tau.args().empty()) {
            out->push_back({tau.name(), GroundTerm(tau.name())});
        } else if (d >= 2) {
            std::vector<EnumSetPtr> child_sets;
            child_sets.reserve(tau.args().size());
            bool any_empty = false;
            for (const Term& a : tau.args()) {
                child_sets.push_back(run(a, d - 1));
                if (child_sets.back()->empty()) any_empty = true;
            }
            if (!any_empty) {
                std::vector<size_t> at(child_sets.size(), 0);
                bool done = false;
                while (!done) {
                    std::string print = tau.name();
                    print += '(';
                    std::vector<GroundTerm> args;
                    args.reserve(at.size());
                    for (size_t i = 0; i < at.size(); ++i) {
                        const auto& [child_print, child] = (*child_sets[i])[at[i]];
                        if (i > 0) print += ',';
                        print += child_print;
                        args.push_back(child);
                    }
                    print += ')';
                    out->push_back({std::move(print), GroundTerm(tau.name(), std::move(args))});
                    size_t i = at.size();
                    while (true) {
                        if (i == 0) {
                            done = true;
                            break;
                        }
                        --i;
                        if (++at[i] < child_sets[i]->size()) break;
                        at[i] = 0;
                    }
                }
            }
        }
        cache.emplace(std::move(key), out);
        return out;
    }
};

}  // namespace

bool member(const Grammar& g, const GroundTerm& t, const Term& tau) {
    require_simplified(g, "member");
    MemberQuery query{g, {}};
    return query.run(t, tau);
}

bool member_td(const Grammar& g, const GroundTerm& t, const TermSet& upsilon) {
    require_simplified(g, "member_td");
    return member_td_rec(g, t, upsilon);
}

std::vector<GroundTerm> enumerate(const Grammar& g, const Term& tau, Depth d) {
    require_simplified(g, "enumerate");
    if (d < 1) throw std::invalid_argument("enumerate requires depth >= 1");
    Enumerator en{g, {}};
    EnumSetPtr set = en.run(tau, d);
    std::vector<GroundTerm> out;
    out.reserve(set->size());
    for (const auto& [print, term] : *set) out.push_back(term);
    return out;
}

std::optional<GroundTerm> find_regular_counterexample(
        const Grammar& g, const Term& tau1, const Term& tau2, Depth d) {
    for (const GroundTerm& t : enumerate(g, tau1, d)) {
        if (!member(g, t, tau2)) return t;
    }
    return std::nullopt;
}

std::optional<GroundTerm> find_td_counterexample(
        const Grammar& g, const Term& tau1, const Term& tau2, Depth d) {
    for (const GroundTerm& t : enumerate(g, tau1, d)) {
        if (!member_td(g, t, {tau2})) return t;
    }
    return std::nullopt;
}

}  // namespace rtg
