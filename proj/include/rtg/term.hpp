#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace rtg {

/// A ranked-alphabet symbol. Arity-0 symbols are the constants.
struct FunctionSymbol {
    std::string name;
    int arity = 0;

    /// Printed as in signature declarations: `cons/2`.
    std::string str() const { return name + "/" + std::to_string(arity); }

    friend bool operator==(const FunctionSymbol&, const FunctionSymbol&) = default;
    friend auto operator<=>(const FunctionSymbol&, const FunctionSymbol&) = default;
};

/// A term over the alphabet plus the type symbols. A leaf is a constant or a
/// type symbol; an inner node applies a function symbol to exactly arity-many
/// children. Immutable value type; ordering follows the printed form so that
/// every set of terms in the library is canonically ordered.
class Term {
public:
    static Term type_symbol(std::string name);
    static Term apply(std::string function_name, std::vector<Term> args = {});

    bool is_type_symbol() const { return type_symbol_; }
    const std::string& name() const { return name_; }
    const std::vector<Term>& args() const { return args_; }

    /// Canonical prefix syntax: `cons(Nat,Natlist)`; constants and type
    /// symbols print bare.
    std::string str() const;
    void append_to(std::string& out) const;

    friend bool operator==(const Term& a, const Term& b);
    friend bool operator<(const Term& a, const Term& b);

private:
    Term(std::string name, bool is_type, std::vector<Term> args);

    std::string name_;
    bool type_symbol_ = false;
    std::vector<Term> args_;
};

using TermSet = std::set<Term>;

/// Enumeration bound; see depth().
using Depth = int;

/// A term over the alphabet only.
class GroundTerm {
public:
    explicit GroundTerm(std::string function_name, std::vector<GroundTerm> args = {});

    const std::string& name() const { return name_; }
    const std::vector<GroundTerm>& args() const { return args_; }

    std::string str() const;
    void append_to(std::string& out) const;

    friend bool operator==(const GroundTerm& a, const GroundTerm& b);
    friend bool operator<(const GroundTerm& a, const GroundTerm& b);

private:
    std::string name_;
    std::vector<GroundTerm> args_;
};

/// Constants have depth 1; f(t1,..,tn) has 1 + the maximum child depth.
Depth depth(const GroundTerm& t);

/// View a ground term as a pure type term (every leaf a constant).
Term to_term(const GroundTerm& t);

/// Converts when the term contains no type-symbol leaves.
std::optional<GroundTerm> to_ground(const Term& t);

}  // namespace rtg
