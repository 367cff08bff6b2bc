#pragma once

#include <optional>
#include <vector>

#include "rtg/grammar.hpp"
#include "rtg/term.hpp"

namespace rtg {

/// Whether t can be derived from tau by the grammar's rewrite relation.
/// Requires a simplified grammar.
bool member(const Grammar& g, const GroundTerm& t, const Term& tau);

/// Whether t lies in the tuple-distributive closure of the union of the
/// languages of `upsilon`: constants must occur among the function-rooted
/// expansions of upsilon, and an f-rooted term needs each argument in the
/// closure of the corresponding argument projection. Requires a simplified
/// grammar.
bool member_td(const Grammar& g, const GroundTerm& t, const TermSet& upsilon);

/// Every ground term of tau's language with depth at most d, in canonical
/// (print) order. Requires a simplified grammar and d >= 1.
std::vector<GroundTerm> enumerate(const Grammar& g, const Term& tau, Depth d);

/// First term of tau1's language (canonical order, depth at most d) outside
/// tau2's language; nullopt when none exists within the bound, which is
/// inconclusive rather than a proof of inclusion.
std::optional<GroundTerm> find_regular_counterexample(
        const Grammar& g, const Term& tau1, const Term& tau2, Depth d);

/// As find_regular_counterexample, but against the tuple-distributive
/// closure of tau2's language.
std::optional<GroundTerm> find_td_counterexample(
        const Grammar& g, const Term& tau1, const Term& tau2, Depth d);

}  // namespace rtg
