#include "rtg/harness.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "rtg/dartzobel.hpp"
#include "rtg/tdsubset.hpp"

namespace rtg {

namespace {

// Exhaustive depth-8 enumeration must stay desk-scale for the refutation
// oracles; candidates whose (overestimated) language size at the probe depth
// exceeds the cap are rejected and regenerated.
constexpr Depth kOracleProbeDepth = 8;
constexpr double kLanguageSizeCap = 20000.0;

constexpr const char* kConstantPool[] = {"a", "b", "c", "d", "e"};
constexpr const char* kFunctionPool[] = {"f", "g", "h", "k", "m"};
constexpr const char* kTypePool[] = {"T0", "T1", "T2", "T3", "T4"};
constexpr const char* kFreshSupertype = "S";

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t x = seed + 0x9E3779B97F4A7C15ull * (salt + 1);
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// mt19937_64 has a standard-specified output sequence, so draws derived from
// it by modulus are reproducible across toolchains (unlike the standard
// distributions).
struct Rng {
    std::mt19937_64 engine;

    explicit Rng(std::uint64_t seed) : engine(seed) {}

    int below(int n) { return static_cast<int>(engine() % static_cast<std::uint64_t>(n)); }
    bool chance(int percent) { return below(100) < percent; }
};

void check_config(const GenConfig& cfg) {
    auto bad = [](const char* what) {
        throw std::invalid_argument(std::string("GenConfig: ") + what);
    };
    if (cfg.max_type_symbols < 1 || cfg.max_type_symbols > 5)
        bad("max_type_symbols must be in [1,5]");
    if (cfg.max_function_symbols < 1 || cfg.max_function_symbols > 5)
        bad("max_function_symbols must be in [1,5]");
    if (cfg.max_arity < 0 || cfg.max_arity > 3) bad("max_arity must be in [0,3]");
    if (cfg.max_rules_per_symbol < 1) bad("max_rules_per_symbol must be positive");
    if (cfg.max_rhs_depth < 1) bad("max_rhs_depth must be positive");
}

struct SymbolPools {
    std::vector<FunctionSymbol> sigma;
    std::vector<std::string> constants;
    std::vector<std::string> type_symbols;
};

int pick_arity(Rng& rng, int max_arity) {
    int r = rng.below(100);
    int arity = r < 35 ? 0 : r < 65 ? 1 : r < 90 ? 2 : 3;
    return std::min(arity, max_arity);
}

SymbolPools gen_symbols(Rng& rng, const GenConfig& cfg) {
    SymbolPools pools;
    int function_count = 1 + rng.below(cfg.max_function_symbols);
    size_t next_constant = 0;
    size_t next_function = 0;
    for (int i = 0; i < function_count; ++i) {
        int arity = i == 0 ? 0 : pick_arity(rng, cfg.max_arity);
        std::string name = arity == 0 ? kConstantPool[next_constant++]
                                      : kFunctionPool[next_function++];
        pools.sigma.push_back({name, arity});
        if (arity == 0) pools.constants.push_back(name);
    }
    int type_count = 1 + rng.below(cfg.max_type_symbols);
    for (int i = 0; i < type_count; ++i) pools.type_symbols.push_back(kTypePool[i]);
    return pools;
}

Term gen_leaf(Rng& rng, const SymbolPools& pools, bool allow_types) {
    if (allow_types && rng.chance(45)) {
        return Term::type_symbol(
                pools.type_symbols[rng.below(static_cast<int>(pools.type_symbols.size()))]);
    }
    return Term::apply(pools.constants[rng.below(static_cast<int>(pools.constants.size()))]);
}

// A rule right-hand side: function-rooted (never a bare type symbol, so the
// generated grammar is chain-free), depth at most `budget`.
Term gen_rhs(Rng& rng, const SymbolPools& pools, bool allow_types, int budget) {
    if (budget <= 1) {
        return Term::apply(pools.constants[rng.below(static_cast<int>(pools.constants.size()))]);
    }
    const FunctionSymbol& f = pools.sigma[rng.below(static_cast<int>(pools.sigma.size()))];
    std::vector<Term> args;
    args.reserve(f.arity);
    for (int i = 0; i < f.arity; ++i) {
        if (budget - 1 > 1 && rng.chance(25)) {
            args.push_back(gen_rhs(rng, pools, allow_types, budget - 1));
        } else {
            args.push_back(gen_leaf(rng, pools, allow_types));
        }
    }
    return Term::apply(f.name, std::move(args));
}

double count_upper_bound(const Grammar& g, const Term& tau, Depth d,
        std::map<std::pair<std::string, Depth>, double>& memo) {
    if (d <= 0) return 0.0;
    auto key = std::make_pair(tau.str(), d);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    double total = 0.0;
    if (tau.is_type_symbol()) {
        // Valid only on chain-free grammars, where expansion always reaches a
        // function root before recursing at the same depth.
        for (const Term& rhs : g.rhs_of(tau.name()))
            total += count_upper_bound(g, rhs, d, memo);
    } else if (tau.args().empty()) {
        total = 1.0;
    } else if (d >= 2) {
        total = 1.0;
        for (const Term& a : tau.args()) total *= count_upper_bound(g, a, d - 1, memo);
    }
    total = std::min(total, 1e18);
    memo.emplace(std::move(key), total);
    return total;
}

bool within_size_cap(const Grammar& g) {
    std::map<std::pair<std::string, Depth>, double> memo;
    for (const std::string& ts : g.pi()) {
        if (count_upper_bound(g, Term::type_symbol(ts), kOracleProbeDepth, memo)
                > kLanguageSizeCap)
            return false;
    }
    return true;
}

}  // namespace

std::string grammar_digest(const Grammar& g) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : render(g)) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    static const char* kHex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = kHex[h & 0xF];
        h >>= 4;
    }
    return out;
}

Grammar gen_grammar(const GenConfig& cfg) {
    check_config(cfg);
    Rng rng(mix_seed(cfg.seed, 0));
    for (int attempt = 0; attempt < 10000; ++attempt) {
        SymbolPools pools = gen_symbols(rng, cfg);
        std::vector<ProductionRule> delta;
        for (const std::string& ts : pools.type_symbols) {
            int rule_count = 1 + rng.below(cfg.max_rules_per_symbol);
            for (int r = 0; r < rule_count; ++r) {
                // the first rule is ground, which keeps every symbol
                // non-empty with a shallow base term
                bool allow_types = r > 0;
                delta.push_back({ts, gen_rhs(rng, pools, allow_types, cfg.max_rhs_depth)});
            }
        }
        Grammar g = Grammar::make(pools.sigma, pools.type_symbols, std::move(delta),
                /*simplified=*/true);
        if (within_size_cap(g)) return g;
    }
    throw std::runtime_error("gen_grammar: could not satisfy the size cap");
}

InclusionPair gen_inclusion_pair(const GenConfig& cfg) {
    Grammar base = gen_grammar(cfg);
    Rng rng(mix_seed(cfg.seed, 1));
    const std::string& tau1 = base.pi()[rng.below(static_cast<int>(base.pi().size()))];

    SymbolPools pools;
    pools.sigma = base.sigma();
    for (const FunctionSymbol& f : pools.sigma) {
        if (f.arity == 0) pools.constants.push_back(f.name);
    }
    pools.type_symbols = base.pi();
    pools.type_symbols.push_back(kFreshSupertype);

    std::vector<std::string> pi = base.pi();
    pi.push_back(kFreshSupertype);

    std::vector<ProductionRule> with_extras = base.delta();
    for (const Term& rhs : base.rhs_of(tau1)) with_extras.push_back({kFreshSupertype, rhs});
    std::vector<ProductionRule> retargeted_only = with_extras;
    int extra_count = rng.below(3);
    for (int i = 0; i < extra_count; ++i) {
        with_extras.push_back(
                {kFreshSupertype, gen_rhs(rng, pools, /*allow_types=*/true, cfg.max_rhs_depth)});
    }

    Grammar g = Grammar::make(base.sigma(), pi, std::move(with_extras), /*simplified=*/true);
    if (!within_size_cap(g)) {
        g = Grammar::make(base.sigma(), pi, std::move(retargeted_only), /*simplified=*/true);
    }
    int extra_rules = static_cast<int>(g.rhs_of(kFreshSupertype).size())
            - static_cast<int>(g.rhs_of(tau1).size());
    return {std::move(g), Term::type_symbol(tau1), Term::type_symbol(kFreshSupertype),
            extra_rules};
}

const Grammar& dz_unsound_instance() {
    static const Grammar g = simplify(parse_grammar(
            "%sig a/0 b/0 g/1 h/2\n"
            "alpha -> g(omega)\n"
            "beta -> g(theta) | g(sigma)\n"
            "theta -> a | h(theta,a)\n"
            "sigma -> b | h(sigma,b)\n"
            "omega -> a | b | h(omega,a) | h(omega,b)\n"));
    return g;
}

TrialInstance trial_instance(const GenConfig& cfg, int trial) {
    if (trial == 0) {
        return {dz_unsound_instance(), Term::type_symbol("alpha"), Term::type_symbol("beta"),
                cfg.seed};
    }
    std::uint64_t trial_seed = mix_seed(cfg.seed, 0x1000 + static_cast<std::uint64_t>(trial));
    GenConfig trial_cfg = cfg;
    trial_cfg.seed = trial_seed;
    Grammar g = gen_grammar(trial_cfg);
    Rng rng(mix_seed(trial_seed, 2));
    const std::vector<std::string>& pi = g.pi();
    Term tau1 = Term::type_symbol(pi[rng.below(static_cast<int>(pi.size()))]);
    Term tau2 = Term::type_symbol(pi[rng.below(static_cast<int>(pi.size()))]);
    return {std::move(g), std::move(tau1), std::move(tau2), trial_seed};
}

const char* to_string(TrialLabel label) {
    switch (label) {
        case TrialLabel::AgreeInclude: return "agree-include";
        case TrialLabel::AgreeExclude: return "agree-exclude";
        case TrialLabel::DzUnsoundRegular: return "dz-unsound-regular";
        case TrialLabel::DzTdMismatch: return "dz-td-mismatch";
        case TrialLabel::IncompleteSuspect: return "incomplete-suspect";
        case TrialLabel::FuelExhausted: return "fuel-exhausted";
    }
    return "unknown";
}

namespace {

TrialLabel classify(const TrialReport& r) {
    if (!r.dz_result.has_value() || !r.td_result.has_value()) return TrialLabel::FuelExhausted;
    if (*r.dz_result != *r.td_result) return TrialLabel::DzTdMismatch;
    if (*r.dz_result) {
        return r.oracle_regular.witness.has_value() ? TrialLabel::DzUnsoundRegular
                                                    : TrialLabel::AgreeInclude;
    }
    return r.oracle_regular.witness.has_value() || r.oracle_td.witness.has_value()
            ? TrialLabel::AgreeExclude
            : TrialLabel::IncompleteSuspect;
}

}  // namespace

std::vector<TrialReport> run_trials(const GenConfig& cfg, int n, Depth depth) {
    if (n < 1) throw std::invalid_argument("run_trials: need at least one trial");
    if (depth < 1) throw std::invalid_argument("run_trials: depth must be positive");
    std::vector<TrialReport> reports;
    reports.reserve(n);
    for (int trial = 0; trial < n; ++trial) {
        TrialInstance inst = trial_instance(cfg, trial);
        TrialReport r;
        r.trial = trial;
        r.seed = inst.seed;
        r.grammar_digest = grammar_digest(inst.g);
        r.tau1 = inst.tau1.str();
        r.tau2 = inst.tau2.str();
        try {
            r.dz_result = dz_subset(inst.g, inst.tau1, inst.tau2);
        } catch (const FuelExhaustedError&) {
        }
        try {
            r.td_result = td_subset(inst.g, inst.tau1, inst.tau2);
        } catch (const FuelExhaustedError&) {
        }
        r.oracle_regular.depth = depth;
        r.oracle_td.depth = depth;
        for (const GroundTerm& t : enumerate(inst.g, inst.tau1, depth)) {
            if (!r.oracle_regular.witness && !member(inst.g, t, inst.tau2))
                r.oracle_regular.witness = t;
            if (!r.oracle_td.witness && !member_td(inst.g, t, {inst.tau2}))
                r.oracle_td.witness = t;
            if (r.oracle_regular.witness && r.oracle_td.witness) break;
        }
        r.label = classify(r);
        if (r.label == TrialLabel::DzTdMismatch || r.label == TrialLabel::FuelExhausted)
            r.grammar_text = render(inst.g);
        reports.push_back(std::move(r));
    }
    return reports;
}

std::string to_jsonl(const TrialReport& report) {
    nlohmann::ordered_json j;
    j["trial"] = report.trial;
    j["seed"] = report.seed;
    j["grammar"] = report.grammar_digest;
    j["tau1"] = report.tau1;
    j["tau2"] = report.tau2;
    j["dz"] = report.dz_result ? nlohmann::ordered_json(*report.dz_result)
                               : nlohmann::ordered_json(nullptr);
    j["td"] = report.td_result ? nlohmann::ordered_json(*report.td_result)
                               : nlohmann::ordered_json(nullptr);
    auto outcome = [](const OracleOutcome& o) {
        nlohmann::ordered_json out;
        out["depth"] = o.depth;
        out["witness"] = o.witness ? nlohmann::ordered_json(o.witness->str())
                                   : nlohmann::ordered_json(nullptr);
        return out;
    };
    j["oracle_regular"] = outcome(report.oracle_regular);
    j["oracle_td"] = outcome(report.oracle_td);
    j["classification"] = to_string(report.label);
    if (report.grammar_text) j["grammar_text"] = *report.grammar_text;
    return j.dump();
}

}  // namespace rtg
