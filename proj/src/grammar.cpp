#include "rtg/grammar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

namespace rtg {

ParseError::ParseError(int line_no, const std::string& message)
        : GrammarError(line_no > 0 ? "line " + std::to_string(line_no) + ": " + message : message),
          line(line_no) {}

EmptyTypeError::EmptyTypeError(const std::string& symbol)
        : GrammarError("type symbol '" + symbol + "' denotes the empty language") {}

namespace {

void collect_type_symbols(const Term& t, std::set<std::string>& out) {
    if (t.is_type_symbol()) {
        out.insert(t.name());
        return;
    }
    for (const Term& a : t.args()) collect_type_symbols(a, out);
}

void check_rhs(const Grammar& g, const Term& t) {
    if (t.is_type_symbol()) {
        if (!g.has_type_symbol(t.name()))
            throw ParseError(0, "undeclared type symbol '" + t.name() + "'");
        return;
    }
    const FunctionSymbol* f = g.function(t.name());
    if (f == nullptr) throw ParseError(0, "undeclared function symbol '" + t.name() + "'");
    if (static_cast<size_t>(f->arity) != t.args().size())
        throw ParseError(0, "symbol '" + t.name() + "' has arity " + std::to_string(f->arity)
                + ", applied to " + std::to_string(t.args().size()) + " arguments");
    for (const Term& a : t.args()) check_rhs(g, a);
}

}  // namespace

Grammar Grammar::make(std::vector<FunctionSymbol> sigma, std::vector<std::string> pi,
        std::vector<ProductionRule> delta, bool simplified) {
    Grammar g;
    g.sigma_ = std::move(sigma);
    g.pi_ = std::move(pi);
    g.delta_ = std::move(delta);
    g.simplified_ = simplified;

    std::sort(g.sigma_.begin(), g.sigma_.end(),
            [](const FunctionSymbol& a, const FunctionSymbol& b) { return a.str() < b.str(); });
    g.sigma_.erase(std::unique(g.sigma_.begin(), g.sigma_.end()), g.sigma_.end());
    std::sort(g.pi_.begin(), g.pi_.end());
    g.pi_.erase(std::unique(g.pi_.begin(), g.pi_.end()), g.pi_.end());
    std::sort(g.delta_.begin(), g.delta_.end());
    g.delta_.erase(std::unique(g.delta_.begin(), g.delta_.end()), g.delta_.end());

    bool has_constant = false;
    for (const FunctionSymbol& f : g.sigma_) {
        if (f.arity < 0) throw ParseError(0, "negative arity for '" + f.name + "'");
        if (f.arity == 0) has_constant = true;
        auto [it, fresh] = g.functions_.emplace(f.name, f);
        if (!fresh) throw ParseError(0, "function symbol '" + f.name + "' declared twice");
    }
    if (g.sigma_.empty() || !has_constant)
        throw ParseError(0, "signature declares no constant");
    for (const std::string& ts : g.pi_) {
        if (g.functions_.count(ts))
            throw ParseError(0, "'" + ts + "' is both a function symbol and a type symbol");
    }
    for (const ProductionRule& r : g.delta_) {
        if (!g.has_type_symbol(r.lhs))
            throw ParseError(0, "rule for undeclared type symbol '" + r.lhs + "'");
        check_rhs(g, r.rhs);
        g.rules_[r.lhs].push_back(r.rhs);
    }

    if (simplified) {
        for (const ProductionRule& r : g.delta_) {
            if (r.rhs.is_type_symbol())
                throw ParseError(0, "simplified grammar has chain rule " + r.str());
        }
        std::set<std::string> ne = nonempty_symbols(g);
        for (const std::string& ts : g.pi_) {
            if (!ne.count(ts))
                throw ParseError(0, "simplified grammar has empty type symbol '" + ts + "'");
        }
    }
    return g;
}

bool Grammar::has_type_symbol(const std::string& name) const {
    return std::binary_search(pi_.begin(), pi_.end(), name);
}

const FunctionSymbol* Grammar::function(const std::string& name) const {
    auto it = functions_.find(name);
    return it == functions_.end() ? nullptr : &it->second;
}

const std::vector<Term>& Grammar::rhs_of(const std::string& type_symbol) const {
    static const std::vector<Term> kNone;
    auto it = rules_.find(type_symbol);
    return it == rules_.end() ? kNone : it->second;
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace {

bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

struct TermParser {
    const std::string& text;
    size_t pos = 0;
    int line;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    std::string ident() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && ident_char(text[pos])) ++pos;
        if (pos == start) {
            std::string got = pos < text.size() ? std::string(1, text[pos]) : "end of input";
            throw ParseError(line, "expected identifier, got '" + got + "'");
        }
        return text.substr(start, pos - start);
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    // ident | ident '(' term {',' term} ')'
    // Classification against the grammar happens here so that arity errors
    // carry the source line.
    Term term(const Grammar& g) {
        std::string name = ident();
        std::vector<Term> args;
        bool applied = false;
        if (eat('(')) {
            applied = true;
            args.push_back(term(g));
            while (eat(',')) args.push_back(term(g));
            if (!eat(')')) throw ParseError(line, "expected ')' in term");
        }
        if (g.has_type_symbol(name)) {
            if (applied)
                throw ParseError(line, "type symbol '" + name + "' takes no arguments");
            return Term::type_symbol(name);
        }
        const FunctionSymbol* f = g.function(name);
        if (f == nullptr) throw ParseError(line, "undeclared symbol '" + name + "'");
        if (static_cast<size_t>(f->arity) != args.size())
            throw ParseError(line, "symbol '" + name + "' has arity " + std::to_string(f->arity)
                    + ", applied to " + std::to_string(args.size()) + " arguments");
        return Term::apply(name, std::move(args));
    }

    void expect_end() {
        skip_ws();
        if (pos != text.size())
            throw ParseError(line, "trailing input '" + text.substr(pos) + "'");
    }
};

struct RawLine {
    int number;
    std::string text;
};

std::vector<RawLine> logical_lines(const std::string& text) {
    std::vector<RawLine> out;
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        size_t b = line.find_last_not_of(" \t\r");
        out.push_back({number, line.substr(a, b - a + 1)});
    }
    return out;
}

}  // namespace

Grammar parse_grammar(const std::string& text) {
    std::vector<FunctionSymbol> sigma;
    std::set<std::string> sigma_names;
    struct RuleLine {
        int number;
        std::string lhs;
        std::string rhs_text;
    };
    std::vector<RuleLine> rule_lines;
    std::set<std::string> pi_names;

    for (const RawLine& raw : logical_lines(text)) {
        if (raw.text.rfind("%sig", 0) == 0) {
            std::istringstream fields(raw.text.substr(4));
            std::string field;
            if (!(fields >> field))
                throw ParseError(raw.number, "%sig line declares no symbols");
            do {
                auto slash = field.find('/');
                if (slash == std::string::npos || slash == 0 || slash + 1 == field.size())
                    throw ParseError(raw.number, "expected name/arity, got '" + field + "'");
                std::string name = field.substr(0, slash);
                std::string arity_text = field.substr(slash + 1);
                if (!std::all_of(name.begin(), name.end(), ident_char))
                    throw ParseError(raw.number, "bad symbol name '" + name + "'");
                if (!std::all_of(arity_text.begin(), arity_text.end(),
                            [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
                    throw ParseError(raw.number, "bad arity '" + arity_text + "'");
                int arity = std::stoi(arity_text);
                auto [it, fresh] = sigma_names.insert(name);
                if (!fresh)
                    throw ParseError(raw.number, "function symbol '" + name + "' declared twice");
                sigma.push_back({name, arity});
            } while (fields >> field);
            continue;
        }
        auto arrow = raw.text.find("->");
        if (arrow == std::string::npos)
            throw ParseError(raw.number, "expected a %sig line or a rule");
        std::string lhs = raw.text.substr(0, arrow);
        if (auto b = lhs.find_last_not_of(" \t"); b != std::string::npos) lhs.erase(b + 1);
        if (lhs.empty() || !std::all_of(lhs.begin(), lhs.end(), ident_char))
            throw ParseError(raw.number, "bad rule left-hand side '" + lhs + "'");
        pi_names.insert(lhs);
        rule_lines.push_back({raw.number, lhs, raw.text.substr(arrow + 2)});
    }

    for (const std::string& name : pi_names) {
        if (sigma_names.count(name))
            throw ParseError(0, "'" + name + "' is both a function symbol and a type symbol");
    }

    // The rule-free skeleton first, so that right-hand sides can be
    // classified against the full symbol tables.
    Grammar skeleton = Grammar::make(sigma, {pi_names.begin(), pi_names.end()}, {});

    std::vector<ProductionRule> delta;
    for (const RuleLine& rl : rule_lines) {
        size_t start = 0;
        while (true) {
            size_t bar = rl.rhs_text.find('|', start);
            std::string alt = rl.rhs_text.substr(
                    start, bar == std::string::npos ? std::string::npos : bar - start);
            TermParser parser{alt, 0, rl.number};
            Term rhs = parser.term(skeleton);
            parser.expect_end();
            delta.push_back({rl.lhs, std::move(rhs)});
            if (bar == std::string::npos) break;
            start = bar + 1;
        }
    }
    return Grammar::make(std::move(sigma), {pi_names.begin(), pi_names.end()}, std::move(delta));
}

Term parse_term(const Grammar& g, const std::string& text) {
    TermParser parser{text, 0, 0};
    Term t = parser.term(g);
    parser.expect_end();
    return t;
}

std::string render(const Grammar& g) {
    std::string out = "%sig";
    for (const FunctionSymbol& f : g.sigma()) {
        out += ' ';
        out += f.str();
    }
    out += '\n';
    for (const std::string& ts : g.pi()) {
        const std::vector<Term>& alts = g.rhs_of(ts);
        if (alts.empty()) continue;
        out += ts;
        out += " ->";
        for (size_t i = 0; i < alts.size(); ++i) {
            out += i == 0 ? " " : " | ";
            alts[i].append_to(out);
        }
        out += '\n';
    }
    return out;
}

std::set<std::string> nonempty_symbols(const Grammar& g) {
    std::set<std::string> nonempty;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const ProductionRule& r : g.delta()) {
            if (nonempty.count(r.lhs)) continue;
            std::set<std::string> occurring;
            collect_type_symbols(r.rhs, occurring);
            if (std::includes(nonempty.begin(), nonempty.end(), occurring.begin(),
                        occurring.end())) {
                nonempty.insert(r.lhs);
                changed = true;
            }
        }
    }
    return nonempty;
}

namespace {

Grammar simplify_impl(const Grammar& g, const std::string* root) {
    std::set<std::string> nonempty = nonempty_symbols(g);
    if (root != nullptr && !nonempty.count(*root)) throw EmptyTypeError(*root);

    std::vector<ProductionRule> kept;
    for (const ProductionRule& r : g.delta()) {
        if (!nonempty.count(r.lhs)) continue;
        std::set<std::string> occurring;
        collect_type_symbols(r.rhs, occurring);
        if (!std::includes(nonempty.begin(), nonempty.end(), occurring.begin(), occurring.end()))
            continue;
        kept.push_back(r);
    }

    // Chain reachability: alpha -> beta edges, closed transitively. A cycle
    // contributes nothing beyond the non-chain right-hand sides reachable
    // from it.
    std::map<std::string, std::set<std::string>> chain_targets;
    for (const ProductionRule& r : kept) {
        if (r.rhs.is_type_symbol()) chain_targets[r.lhs].insert(r.rhs.name());
    }
    auto chain_reach = [&](const std::string& start) {
        std::set<std::string> seen{start};
        std::vector<std::string> work{start};
        while (!work.empty()) {
            std::string at = work.back();
            work.pop_back();
            auto it = chain_targets.find(at);
            if (it == chain_targets.end()) continue;
            for (const std::string& next : it->second) {
                if (seen.insert(next).second) work.push_back(next);
            }
        }
        return seen;
    };

    std::map<std::string, std::vector<const Term*>> non_chain;
    for (const ProductionRule& r : kept) {
        if (!r.rhs.is_type_symbol()) non_chain[r.lhs].push_back(&r.rhs);
    }

    std::vector<ProductionRule> delta;
    for (const std::string& ts : nonempty) {
        for (const std::string& reached : chain_reach(ts)) {
            auto it = non_chain.find(reached);
            if (it == non_chain.end()) continue;
            for (const Term* rhs : it->second) delta.push_back({ts, *rhs});
        }
    }
    return Grammar::make(g.sigma(), {nonempty.begin(), nonempty.end()}, std::move(delta),
            /*simplified=*/true);
}

}  // namespace

Grammar simplify(const Grammar& g) {
    return simplify_impl(g, nullptr);
}

Grammar simplify(const Grammar& g, const std::string& root) {
    return simplify_impl(g, &root);
}

}  // namespace rtg
