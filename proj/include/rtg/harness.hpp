#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rtg/grammar.hpp"
#include "rtg/semantics.hpp"
#include "rtg/term.hpp"

namespace rtg {

/// Bounds for random grammar generation. Deterministic in the seed. The
/// generator keeps every type symbol non-empty (each has a ground base rule)
/// and rejects grammars whose languages would make exhaustive bounded
/// enumeration intractable.
struct GenConfig {
    int max_type_symbols = 5;
    int max_function_symbols = 5;  // arities 0..max_arity, at least one constant
    int max_arity = 3;
    int max_rules_per_symbol = 3;
    int max_rhs_depth = 2;
    std::uint64_t seed = 0;
};

/// Outcome of one bounded counterexample search.
struct OracleOutcome {
    std::optional<GroundTerm> witness;
    Depth depth = 0;  // the search bound; without a witness the outcome is inconclusive
};

enum class TrialLabel {
    AgreeInclude,       // both checkers accept, no refutation found
    AgreeExclude,       // both checkers refuse and a witness confirms
    DzUnsoundRegular,   // dz accepts although a plain-language witness exists
    DzTdMismatch,       // dz and td disagree; must never happen
    IncompleteSuspect,  // both refuse but no witness within the bound (inconclusive)
    FuelExhausted,      // a checker ran out of fuel; must never happen
};

const char* to_string(TrialLabel label);

struct TrialReport {
    int trial = 0;
    std::uint64_t seed = 0;
    std::string grammar_digest;
    std::string tau1;
    std::string tau2;
    std::optional<bool> dz_result;  // empty when the checker exhausted fuel
    std::optional<bool> td_result;
    OracleOutcome oracle_regular;
    OracleOutcome oracle_td;
    TrialLabel label = TrialLabel::AgreeInclude;
    /// Canonical grammar text; carried only when the label demands full
    /// reproduction data (mismatch or fuel exhaustion).
    std::optional<std::string> grammar_text;
};

/// FNV-1a over the canonical rendering, as 16 hex digits.
std::string grammar_digest(const Grammar& g);

/// A random simplified grammar; deterministic in cfg.seed.
Grammar gen_grammar(const GenConfig& cfg);

struct InclusionPair {
    Grammar g;
    Term tau1;
    Term tau2;
    int extra_rules = 0;
};

/// A grammar plus a pair with guaranteed language inclusion: tau2 is a fresh
/// type symbol carrying every rule of tau1 (re-targeted) plus extra_rules
/// generated ones.
InclusionPair gen_inclusion_pair(const GenConfig& cfg);

/// The skewed-tree grammar on which the sequence-based checker accepts an
/// inclusion that fails for plain term languages; the pair to query is
/// (alpha, beta).
const Grammar& dz_unsound_instance();

struct TrialInstance {
    Grammar g;
    Term tau1;
    Term tau2;
    std::uint64_t seed = 0;
};

/// The inputs run_trials evaluates at the given index: index 0 is the pinned
/// skewed-tree instance, later indices are random. Deterministic in
/// (cfg.seed, trial).
TrialInstance trial_instance(const GenConfig& cfg, int trial);

/// Runs n differential trials: both checkers plus both bounded refutation
/// searches at the given depth, classified per TrialLabel. Reports are
/// byte-for-byte reproducible from (cfg, n, depth) and ordered by trial
/// index. Requires n >= 1.
std::vector<TrialReport> run_trials(const GenConfig& cfg, int n, Depth depth);

/// One canonical JSON line, fixed key order, no trailing newline.
std::string to_jsonl(const TrialReport& report);

}  // namespace rtg
