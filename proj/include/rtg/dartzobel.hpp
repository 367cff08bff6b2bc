#pragma once

#include <iosfwd>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rtg/grammar.hpp"
#include "rtg/term.hpp"

namespace rtg {

/// A sequence of pure type terms; empty is the epsilon sequence.
using Sequence = std::vector<Term>;

/// A set of equal-length sequences, canonically ordered.
using SeqSet = std::set<Sequence>;

/// Inclusion hypotheses <beta, upsilon> recorded to force termination: the
/// language of the type symbol beta is assumed included in the union of the
/// languages of upsilon.
using AssumptionSet = std::set<std::pair<std::string, TermSet>>;

/// The recursion budget ran out. This signals a suspected termination bug in
/// the checker and is never converted to a boolean answer.
struct FuelExhaustedError : std::runtime_error {
    explicit FuelExhaustedError(long long budget);
    long long budget;
};

struct SubsetOptions {
    /// One unit per recursive step of the checker.
    long long fuel = 1'000'000;

    /// When set, receives one tab-separated line per dispatch: algorithm id,
    /// the alternative fired, the sequence, the sequence set, and the size
    /// of the assumption set.
    std::ostream* trace = nullptr;

    /// Flips the assumption test of dz_subsetv's third alternative from
    /// heads(Psi) >= upsilon to heads(Psi) <= upsilon. That reversed test
    /// appears in some presentations of the algorithm; it is kept only to
    /// demonstrate the divergence and is ignored by the tuple-distributive
    /// checker.
    bool assumption_subseteq = false;
};

/// `<alpha a b>` with terms in canonical syntax; epsilon prints as `<>`.
std::string seq_str(const Sequence& psi);
/// `{<a> <b c>}` in canonical order.
std::string seq_set_str(const SeqSet& Psi);

/// {psi} when head(psi) is not a type symbol; otherwise one sequence per
/// rule of the head, with the head replaced by the rule's right-hand side.
SeqSet expand_seq(const Grammar& g, const Sequence& psi);

/// Union of expand_seq over the set.
SeqSet expands_set(const Grammar& g, const SeqSet& Psi);

/// The sequences of Psi whose head has tau's principal function symbol.
/// tau and all heads must be function-rooted (the algorithm expands first).
SeqSet selects(const Term& tau, const SeqSet& Psi);

/// Replaces the function-rooted head f(t1,..,tn) by the n-element prefix
/// t1..tn; a constant head is dropped.
Sequence open_seq(const Sequence& psi);

/// Elementwise open_seq.
SeqSet opens_set(const SeqSet& Psi);

/// Core of the Dart-Zobel inclusion check: whether the language of the
/// sequence psi is included in the language of the sequence set Psi, under
/// the recorded assumptions C. Five alternatives, first applicable wins:
///
///   1. Psi empty                      -> false
///   2. psi epsilon                    -> true
///   3. <head(psi), Y> in C with
///      heads(Psi) a superset of Y     -> recurse on tails
///   4. head(psi) a type symbol        -> all expansions of psi against Psi,
///                                        recording <head(psi), heads(Psi)>
///   5. head(psi) function-rooted      -> open psi against the opened
///                                        selection of Psi's expansions
///
/// Every sequence of Psi must have psi's length. Throws FuelExhaustedError
/// when the budget runs out.
bool dz_subsetv(const Grammar& g, const Sequence& psi, const SeqSet& Psi, const AssumptionSet& C,
        const SubsetOptions& options = {});

/// dz_subsetv(<tau1>, {<tau2>}, {}). Decides inclusion of the
/// tuple-distributive closures exactly; for plain term languages it can
/// accept non-inclusions (see the skewed-tree grammar in the tests), though
/// a true inclusion is always accepted.
bool dz_subset(const Grammar& g, const Term& tau1, const Term& tau2,
        const SubsetOptions& options = {});

}  // namespace rtg
