#include "rtg/dartzobel.hpp"

#include <algorithm>
#include <ostream>

namespace rtg {

FuelExhaustedError::FuelExhaustedError(long long budget_)
        : std::runtime_error("inclusion check exhausted its fuel budget of "
                  + std::to_string(budget_) + " steps"),
          budget(budget_) {}

std::string seq_str(const Sequence& psi) {
    std::string out = "<";
    for (size_t i = 0; i < psi.size(); ++i) {
        if (i > 0) out += ' ';
        psi[i].append_to(out);
    }
    out += '>';
    return out;
}

std::string seq_set_str(const SeqSet& Psi) {
    std::string out = "{";
    bool first = true;
    for (const Sequence& psi : Psi) {
        if (!first) out += ' ';
        first = false;
        out += seq_str(psi);
    }
    out += '}';
    return out;
}

SeqSet expand_seq(const Grammar& g, const Sequence& psi) {
    if (psi.empty()) throw std::logic_error("expand_seq: empty sequence");
    const Term& head = psi.front();
    if (!head.is_type_symbol()) return {psi};
    SeqSet out;
    for (const Term& rhs : g.rhs_of(head.name())) {
        Sequence expanded;
        expanded.reserve(psi.size());
        expanded.push_back(rhs);
        expanded.insert(expanded.end(), psi.begin() + 1, psi.end());
        out.insert(std::move(expanded));
    }
    return out;
}

SeqSet expands_set(const Grammar& g, const SeqSet& Psi) {
    SeqSet out;
    for (const Sequence& psi : Psi) out.merge(expand_seq(g, psi));
    return out;
}

SeqSet selects(const Term& tau, const SeqSet& Psi) {
    if (tau.is_type_symbol()) throw std::logic_error("selects: type-symbol selector");
    SeqSet out;
    for (const Sequence& psi : Psi) {
        if (psi.empty() || psi.front().is_type_symbol())
            throw std::logic_error("selects: sequence head is not function-rooted");
        if (psi.front().name() == tau.name()) out.insert(psi);
    }
    return out;
}

Sequence open_seq(const Sequence& psi) {
    if (psi.empty() || psi.front().is_type_symbol())
        throw std::logic_error("open_seq: head is not function-rooted");
    Sequence out;
    const std::vector<Term>& args = psi.front().args();
    out.reserve(args.size() + psi.size() - 1);
    out.insert(out.end(), args.begin(), args.end());
    out.insert(out.end(), psi.begin() + 1, psi.end());
    return out;
}

SeqSet opens_set(const SeqSet& Psi) {
    SeqSet out;
    for (const Sequence& psi : Psi) out.insert(open_seq(psi));
    return out;
}

namespace {

TermSet heads_of(const SeqSet& Psi) {
    TermSet out;
    for (const Sequence& psi : Psi) out.insert(psi.front());
    return out;
}

SeqSet tails_of(const SeqSet& Psi) {
    SeqSet out;
    for (const Sequence& psi : Psi) out.insert(Sequence(psi.begin() + 1, psi.end()));
    return out;
}

struct DzRun {
    const Grammar& g;
    const SubsetOptions& options;
    long long fuel;

    void trace(int alternative, const Sequence& psi, const SeqSet& Psi, const AssumptionSet& C) {
        if (options.trace == nullptr) return;
        *options.trace << "dz\t" << alternative << '\t' << seq_str(psi) << '\t'
                       << seq_set_str(Psi) << '\t' << C.size() << '\n';
    }

    bool subsetv(const Sequence& psi, const SeqSet& Psi, const AssumptionSet& C) {
        if (fuel-- <= 0) throw FuelExhaustedError(options.fuel);
        if (Psi.empty()) {
            trace(1, psi, Psi, C);
            return false;
        }
        if (psi.empty()) {
            trace(2, psi, Psi, C);
            return true;
        }
        const Term& head = psi.front();
        if (head.is_type_symbol()) {
            TermSet heads = heads_of(Psi);
            for (const auto& [beta, upsilon] : C) {
                if (beta != head.name()) continue;
                bool covered = options.assumption_subseteq
                        ? std::includes(upsilon.begin(), upsilon.end(), heads.begin(), heads.end())
                        : std::includes(heads.begin(), heads.end(), upsilon.begin(), upsilon.end());
                if (covered) {
                    trace(3, psi, Psi, C);
                    return subsetv(Sequence(psi.begin() + 1, psi.end()), tails_of(Psi), C);
                }
            }
            trace(4, psi, Psi, C);
            AssumptionSet extended = C;
            extended.emplace(head.name(), std::move(heads));
            for (const Sequence& expanded : expand_seq(g, psi)) {
                if (!subsetv(expanded, Psi, extended)) return false;
            }
            return true;
        }
        trace(5, psi, Psi, C);
        return subsetv(open_seq(psi), opens_set(selects(head, expands_set(g, Psi))), C);
    }
};

}  // namespace

bool dz_subsetv(const Grammar& g, const Sequence& psi, const SeqSet& Psi, const AssumptionSet& C,
        const SubsetOptions& options) {
    if (!g.simplified()) throw std::logic_error("dz_subsetv requires a simplified grammar");
    for (const Sequence& other : Psi) {
        if (other.size() != psi.size())
            throw std::invalid_argument("dz_subsetv: sequence lengths differ");
    }
    if (options.fuel <= 0) throw std::invalid_argument("dz_subsetv: fuel must be positive");
    DzRun run{g, options, options.fuel};
    return run.subsetv(psi, Psi, C);
}

bool dz_subset(const Grammar& g, const Term& tau1, const Term& tau2,
        const SubsetOptions& options) {
    return dz_subsetv(g, {tau1}, {{tau2}}, {}, options);
}

}  // namespace rtg
