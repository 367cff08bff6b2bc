#pragma once

#include <set>
#include <utility>

#include "rtg/dartzobel.hpp"
#include "rtg/grammar.hpp"
#include "rtg/term.hpp"

namespace rtg {

/// Assumption pairs <tau, upsilon> keyed by arbitrary pure type terms. The
/// checker only ever inserts pairs whose key is a type symbol, so lookups
/// for other keys never hit; the general key type follows the checker's
/// dispatch, which consults C before inspecting tau.
using TdAssumptionSet = std::set<std::pair<Term, TermSet>>;

/// {tau} when tau is not a type symbol, otherwise the set of tau's rule
/// right-hand sides.
TermSet td_expand(const Grammar& g, const Term& tau);

/// Union of td_expand over the set.
TermSet td_expands(const Grammar& g, const TermSet& upsilon);

/// Inclusion checker specialized to tuple-distributive closures: decides
/// whether the closure of tau's language is included in the closure of the
/// union of upsilon's languages. Four alternatives, first applicable wins:
///
///   1. upsilon empty                             -> false
///   2. <tau, Y> in C with upsilon a superset of Y -> true
///   3. tau a type symbol                          -> all expansions of tau,
///                                                    recording <tau, upsilon>
///   4. tau = f(t1,..,tn)                          -> argument sequences of
///                                                    f-rooted expansions,
///                                                    componentwise
///
/// Throws FuelExhaustedError when the budget runs out. The
/// assumption_subseteq option is ignored.
bool td_subset_term(const Grammar& g, const Term& tau, const TermSet& upsilon,
        const TdAssumptionSet& C, const SubsetOptions& options = {});

/// Componentwise conjunction: head against heads, tail against tails. The
/// empty sequence holds only against {epsilon}; an empty Psi fails (for
/// non-empty psi it propagates into td_subset_term with an empty upsilon).
bool td_subsetv_seq(const Grammar& g, const Sequence& psi, const SeqSet& Psi,
        const TdAssumptionSet& C, const SubsetOptions& options = {});

/// td_subset_term(tau1, {tau2}, {}). Agrees with dz_subset on every input;
/// both decide inclusion of tuple-distributive closures exactly.
bool td_subset(const Grammar& g, const Term& tau1, const Term& tau2,
        const SubsetOptions& options = {});

}  // namespace rtg
