#include "rtg/tdsubset.hpp"

#include <algorithm>
#include <ostream>

namespace rtg {

TermSet td_expand(const Grammar& g, const Term& tau) {
    if (!tau.is_type_symbol()) return {tau};
    TermSet out;
    for (const Term& rhs : g.rhs_of(tau.name())) out.insert(rhs);
    return out;
}

TermSet td_expands(const Grammar& g, const TermSet& upsilon) {
    TermSet out;
    for (const Term& tau : upsilon) out.merge(td_expand(g, tau));
    return out;
}

namespace {

std::string term_set_str(const TermSet& upsilon) {
    std::string out = "{";
    bool first = true;
    for (const Term& t : upsilon) {
        if (!first) out += ' ';
        first = false;
        t.append_to(out);
    }
    out += '}';
    return out;
}

struct TdRun {
    const Grammar& g;
    const SubsetOptions& options;
    long long fuel;

    void trace(int alternative, const Term& tau, const TermSet& upsilon,
            const TdAssumptionSet& C) {
        if (options.trace == nullptr) return;
        *options.trace << "td\t" << alternative << '\t' << tau.str() << '\t'
                       << term_set_str(upsilon) << '\t' << C.size() << '\n';
    }

    bool subset_term(const Term& tau, const TermSet& upsilon, const TdAssumptionSet& C) {
        if (fuel-- <= 0) throw FuelExhaustedError(options.fuel);
        if (upsilon.empty()) {
            trace(1, tau, upsilon, C);
            return false;
        }
        for (const auto& [key, recorded] : C) {
            if (!(key == tau)) continue;
            if (std::includes(upsilon.begin(), upsilon.end(), recorded.begin(), recorded.end())) {
                trace(2, tau, upsilon, C);
                return true;
            }
        }
        if (tau.is_type_symbol()) {
            trace(3, tau, upsilon, C);
            TdAssumptionSet extended = C;
            extended.emplace(tau, upsilon);
            for (const Term& expanded : td_expand(g, tau)) {
                if (!subset_term(expanded, upsilon, extended)) return false;
            }
            return true;
        }
        trace(4, tau, upsilon, C);
        SeqSet arg_sequences;
        for (const Term& e : td_expands(g, upsilon)) {
            if (!e.is_type_symbol() && e.name() == tau.name()) arg_sequences.insert(e.args());
        }
        return subsetv_seq(tau.args(), arg_sequences, C);
    }

    bool subsetv_seq(const Sequence& psi, const SeqSet& Psi, const TdAssumptionSet& C) {
        if (fuel-- <= 0) throw FuelExhaustedError(options.fuel);
        if (psi.empty()) return !Psi.empty();
        TermSet heads;
        SeqSet tails;
        for (const Sequence& other : Psi) {
            heads.insert(other.front());
            tails.insert(Sequence(other.begin() + 1, other.end()));
        }
        return subset_term(psi.front(), heads, C) && subsetv_seq(Sequence(psi.begin() + 1, psi.end()), tails, C);
    }
};

void check_entry(const Grammar& g, const SubsetOptions& options, const char* op) {
    if (!g.simplified()) throw std::logic_error(std::string(op) + " requires a simplified grammar");
    if (options.fuel <= 0) throw std::invalid_argument(std::string(op) + ": fuel must be positive");
}

}  // namespace

bool td_subset_term(const Grammar& g, const Term& tau, const TermSet& upsilon,
        const TdAssumptionSet& C, const SubsetOptions& options) {
    check_entry(g, options, "td_subset_term");
    TdRun run{g, options, options.fuel};
    return run.subset_term(tau, upsilon, C);
}

bool td_subsetv_seq(const Grammar& g, const Sequence& psi, const SeqSet& Psi,
        const TdAssumptionSet& C, const SubsetOptions& options) {
    check_entry(g, options, "td_subsetv_seq");
    for (const Sequence& other : Psi) {
        if (other.size() != psi.size())
            throw std::invalid_argument("td_subsetv_seq: sequence lengths differ");
    }
    TdRun run{g, options, options.fuel};
    return run.subsetv_seq(psi, Psi, C);
}

bool td_subset(const Grammar& g, const Term& tau1, const Term& tau2,
        const SubsetOptions& options) {
    return td_subset_term(g, tau1, {tau2}, {}, options);
}

}  // namespace rtg
