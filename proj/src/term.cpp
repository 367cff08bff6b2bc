#include "rtg/term.hpp"

#include <algorithm>
#include <utility>

namespace rtg {

Term::Term(std::string name, bool is_type, std::vector<Term> args)
        : name_(std::move(name)), type_symbol_(is_type), args_(std::move(args)) {}

Term Term::type_symbol(std::string name) {
    return Term(std::move(name), true, {});
}

Term Term::apply(std::string function_name, std::vector<Term> args) {
    return Term(std::move(function_name), false, std::move(args));
}

void Term::append_to(std::string& out) const {
    out += name_;
    if (args_.empty()) return;
    out += '(';
    for (size_t i = 0; i < args_.size(); ++i) {
        if (i > 0) out += ',';
        args_[i].append_to(out);
    }
    out += ')';
}

std::string Term::str() const {
    std::string out;
    append_to(out);
    return out;
}

bool operator==(const Term& a, const Term& b) {
    return a.type_symbol_ == b.type_symbol_ && a.name_ == b.name_ && a.args_ == b.args_;
}

namespace {

// Preorder walk of the type-symbol flags. Only consulted to break ties
// between terms whose printed forms coincide, which cannot happen among
// terms of a single grammar (type symbols and function symbols have
// disjoint names there).
void append_flags(const Term& t, std::string& out) {
    out += t.is_type_symbol() ? '1' : '0';
    for (const Term& a : t.args()) append_flags(a, out);
}

}  // namespace

bool operator<(const Term& a, const Term& b) {
    std::string sa = a.str();
    std::string sb = b.str();
    if (sa != sb) return sa < sb;
    std::string fa, fb;
    append_flags(a, fa);
    append_flags(b, fb);
    return fa < fb;
}

GroundTerm::GroundTerm(std::string function_name, std::vector<GroundTerm> args)
        : name_(std::move(function_name)), args_(std::move(args)) {}

void GroundTerm::append_to(std::string& out) const {
    out += name_;
    if (args_.empty()) return;
    out += '(';
    for (size_t i = 0; i < args_.size(); ++i) {
        if (i > 0) out += ',';
        args_[i].append_to(out);
    }
    out += ')';
}

std::string GroundTerm::str() const {
    std::string out;
    append_to(out);
    return out;
}

bool operator==(const GroundTerm& a, const GroundTerm& b) {
    return a.name_ == b.name_ && a.args_ == b.args_;
}

bool operator<(const GroundTerm& a, const GroundTerm& b) {
    return a.str() < b.str();
}

Depth depth(const GroundTerm& t) {
    Depth d = 0;
    for (const GroundTerm& a : t.args()) d = std::max(d, depth(a));
    return d + 1;
}

Term to_term(const GroundTerm& t) {
    std::vector<Term> args;
    args.reserve(t.args().size());
    for (const GroundTerm& a : t.args()) args.push_back(to_term(a));
    return Term::apply(t.name(), std::move(args));
}

std::optional<GroundTerm> to_ground(const Term& t) {
    if (t.is_type_symbol()) return std::nullopt;
    std::vector<GroundTerm> args;
    args.reserve(t.args().size());
    for (const Term& a : t.args()) {
        auto g = to_ground(a);
        if (!g) return std::nullopt;
        args.push_back(std::move(*g));
    }
    return GroundTerm(t.name(), std::move(args));
}

}  // namespace rtg
