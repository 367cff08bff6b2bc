#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "rtg/term.hpp"

namespace rtg {

struct GrammarError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed grammar text or an ill-formed grammar value: syntax errors,
/// arity mismatches, undeclared symbols, a name used both as a function and
/// a type symbol, or a signature without a constant.
struct ParseError : GrammarError {
    ParseError(int line, const std::string& message);

    /// 1-based source line, 0 when the error is not tied to source text.
    int line;
};

/// The designated root symbol denotes the empty language.
struct EmptyTypeError : GrammarError {
    explicit EmptyTypeError(const std::string& symbol);
};

struct ProductionRule {
    std::string lhs;
    Term rhs;

    std::string str() const { return lhs + " -> " + rhs.str(); }

    friend bool operator==(const ProductionRule& a, const ProductionRule& b) {
        return a.lhs == b.lhs && a.rhs == b.rhs;
    }
    friend bool operator<(const ProductionRule& a, const ProductionRule& b) {
        if (a.lhs != b.lhs) return a.lhs < b.lhs;
        return a.rhs < b.rhs;
    }
};

/// A regular term grammar: a ranked alphabet, a set of type symbols disjoint
/// from it, and a set of production rules `alpha -> tau` whose right-hand
/// sides are terms over both. Immutable after construction and safe to share
/// across concurrent readers.
///
/// The `simplified` flag records that every type symbol denotes a non-empty
/// language and no rule has a bare type symbol as its right-hand side; the
/// inclusion algorithms and the term enumerator require it.
class Grammar {
public:
    /// Validates and canonicalizes. Duplicate rules are dropped (rule sets
    /// have set semantics); symbols and rules are stored in canonical order.
    /// Throws ParseError on an ill-formed grammar, including a request for
    /// the simplified flag when the simplification invariants do not hold.
    static Grammar make(std::vector<FunctionSymbol> sigma, std::vector<std::string> pi,
            std::vector<ProductionRule> delta, bool simplified = false);

    const std::vector<FunctionSymbol>& sigma() const { return sigma_; }
    const std::vector<std::string>& pi() const { return pi_; }
    const std::vector<ProductionRule>& delta() const { return delta_; }
    bool simplified() const { return simplified_; }

    bool has_type_symbol(const std::string& name) const;
    /// The declared symbol, or nullptr.
    const FunctionSymbol* function(const std::string& name) const;
    /// Right-hand sides of the symbol's rules in canonical order; empty for
    /// a ruleless symbol. The returned storage lives as long as the grammar.
    const std::vector<Term>& rhs_of(const std::string& type_symbol) const;

    /// Structural equality on the (sigma, pi, delta) triple; the simplified
    /// flag is bookkeeping and does not participate.
    friend bool operator==(const Grammar& a, const Grammar& b) {
        return a.sigma_ == b.sigma_ && a.pi_ == b.pi_ && a.delta_ == b.delta_;
    }

private:
    Grammar() = default;

    std::vector<FunctionSymbol> sigma_;
    std::vector<std::string> pi_;
    std::vector<ProductionRule> delta_;
    bool simplified_ = false;

    std::map<std::string, FunctionSymbol> functions_;
    std::map<std::string, std::vector<Term>> rules_;
};

/// Parses the line-oriented grammar format:
///
///     # lists of naturals
///     %sig 0/0 s/1 nil/0 cons/2
///     Nat -> 0 | s(Nat)
///     Natlist -> nil | cons(Nat,Natlist)
///
/// `%sig` lines declare function symbols as name/arity pairs; at least one
/// constant (arity 0) is required. A rule line declares its left-hand
/// identifier as a type symbol; `|` separates alternative right-hand sides.
/// Terms use prefix syntax with constants bare. `#` starts a comment.
/// Identifiers are nonempty runs of [A-Za-z0-9_]. A name may not appear both
/// in `%sig` and on a left-hand side.
///
/// The returned grammar has the simplified flag unset. Throws ParseError.
Grammar parse_grammar(const std::string& text);

/// Canonical text for the grammar: one `%sig` line, then one line per type
/// symbol with alternatives joined by ` | `, everything in canonical order.
/// parse_grammar(render(g)) == g whenever every type symbol of g has at
/// least one rule (the format cannot declare a ruleless symbol).
std::string render(const Grammar& g);

/// Parses a term in prefix syntax against the grammar's symbols, checking
/// arities. Throws ParseError.
Term parse_term(const Grammar& g, const std::string& text);

/// The type symbols denoting non-empty languages, as the least fixpoint:
/// alpha is non-empty iff some rule alpha -> tau has every type-symbol
/// occurrence of tau already non-empty.
std::set<std::string> nonempty_symbols(const Grammar& g);

/// Simplifies: drops empty type symbols and every rule mentioning one,
/// inlines chain rules `alpha -> beta` by giving alpha every non-chain
/// right-hand side reachable through chains, and sets the simplified flag.
/// Languages of retained symbols are unchanged; idempotent.
Grammar simplify(const Grammar& g);

/// As simplify(g), but throws EmptyTypeError if `root` would be dropped.
Grammar simplify(const Grammar& g, const std::string& root);

}  // namespace rtg
