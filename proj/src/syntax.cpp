#include "clog/syntax.hpp"

namespace clog {

Term Term::variable(std::string name)
{
    Term t;
    t.kind = Kind::variable;
    t.name = std::move(name);
    return t;
}

Term Term::constant(std::string name)
{
    Term t;
    t.kind = Kind::constant;
    t.name = std::move(name);
    return t;
}

Term Term::integer(std::int64_t value)
{
    Term t;
    t.kind = Kind::integer;
    t.value = value;
    return t;
}

Term Term::sum(Term lhs, Term rhs)
{
    Term t;
    t.kind = Kind::sum;
    t.operands.push_back(std::move(lhs));
    t.operands.push_back(std::move(rhs));
    return t;
}

const char* symbol(CompareOp op)
{
    switch (op) {
    case CompareOp::eq: return "=";
    case CompareOp::ne: return "!=";
    case CompareOp::lt: return "<";
    case CompareOp::le: return "<=";
    case CompareOp::gt: return ">";
    case CompareOp::ge: return ">=";
    }
    return "?";
}

bool operator==(const Formula& a, const Formula& b)
{
    if (a.kind != b.kind)
        return false;
    switch (a.kind) {
    case Formula::Kind::truth:
    case Formula::Kind::falsity:
        return true;
    case Formula::Kind::atom:
        return a.atom == b.atom;
    case Formula::Kind::compare:
        return a.op == b.op && a.lhs == b.lhs && a.rhs == b.rhs;
    case Formula::Kind::forall:
    case Formula::Kind::exists:
        if (a.var != b.var)
            return false;
        break;
    default:
        break;
    }
    if (a.children.size() != b.children.size())
        return false;
    for (std::size_t i = 0; i < a.children.size(); ++i)
        if (!same(a.children[i], b.children[i]))
            return false;
    return true;
}

bool same(const FormulaPtr& a, const FormulaPtr& b)
{
    if (!a || !b)
        return !a && !b;
    return a == b || *a == *b;
}

namespace fo {

namespace {

FormulaPtr node(Formula::Kind kind, std::vector<FormulaPtr> children = {})
{
    auto f = std::make_shared<Formula>();
    f->kind = kind;
    f->children = std::move(children);
    return f;
}

} // namespace

FormulaPtr top() { return node(Formula::Kind::truth); }
FormulaPtr bottom() { return node(Formula::Kind::falsity); }

FormulaPtr atom(Atom a)
{
    auto f = std::make_shared<Formula>();
    f->kind = Formula::Kind::atom;
    f->atom = std::move(a);
    return f;
}

FormulaPtr compare(CompareOp op, Term lhs, Term rhs)
{
    auto f = std::make_shared<Formula>();
    f->kind = Formula::Kind::compare;
    f->op = op;
    f->lhs = std::move(lhs);
    f->rhs = std::move(rhs);
    return f;
}

FormulaPtr negate(FormulaPtr f) { return node(Formula::Kind::negation, {std::move(f)}); }
FormulaPtr conj(FormulaPtr a, FormulaPtr b) { return node(Formula::Kind::conjunction, {std::move(a), std::move(b)}); }
FormulaPtr disj(FormulaPtr a, FormulaPtr b) { return node(Formula::Kind::disjunction, {std::move(a), std::move(b)}); }
FormulaPtr implies(FormulaPtr a, FormulaPtr b) { return node(Formula::Kind::implication, {std::move(a), std::move(b)}); }
FormulaPtr iff(FormulaPtr a, FormulaPtr b) { return node(Formula::Kind::equivalence, {std::move(a), std::move(b)}); }

FormulaPtr forall(std::string var, FormulaPtr qualification, FormulaPtr assertion)
{
    auto f = std::make_shared<Formula>();
    f->kind = Formula::Kind::forall;
    f->var = std::move(var);
    f->children = {std::move(qualification), std::move(assertion)};
    return f;
}

FormulaPtr exists(std::string var, FormulaPtr qualification, FormulaPtr assertion)
{
    auto f = std::make_shared<Formula>();
    f->kind = Formula::Kind::exists;
    f->var = std::move(var);
    f->children = {std::move(qualification), std::move(assertion)};
    return f;
}

FormulaPtr conj_all(const std::vector<FormulaPtr>& parts)
{
    if (parts.empty())
        return top();
    FormulaPtr acc = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i)
        acc = conj(acc, parts[i]);
    return acc;
}

FormulaPtr with_pos(FormulaPtr f, SourcePos pos)
{
    auto copy = std::make_shared<Formula>(*f);
    copy->pos = pos;
    return copy;
}

} // namespace fo

void collect_variables(const Term& t, std::set<std::string>& out)
{
    if (t.kind == Term::Kind::variable)
        out.insert(t.name);
    for (const auto& op : t.operands)
        collect_variables(op, out);
}

namespace {

void free_vars(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out)
{
    auto add_term = [&](const Term& t) {
        std::set<std::string> vs;
        collect_variables(t, vs);
        for (const auto& v : vs)
            if (!bound.contains(v))
                out.insert(v);
    };
    switch (f.kind) {
    case Formula::Kind::atom:
        for (const auto& t : f.atom.args)
            add_term(t);
        return;
    case Formula::Kind::compare:
        add_term(f.lhs);
        add_term(f.rhs);
        return;
    case Formula::Kind::forall:
    case Formula::Kind::exists: {
        bool inserted = bound.insert(f.var).second;
        for (const auto& c : f.children)
            free_vars(*c, bound, out);
        if (inserted)
            bound.erase(f.var);
        return;
    }
    default:
        for (const auto& c : f.children)
            free_vars(*c, bound, out);
    }
}

} // namespace

std::set<std::string> free_variables(const Formula& f)
{
    std::set<std::string> bound, out;
    free_vars(f, bound, out);
    return out;
}

void collect_predicates(const Formula& f, std::set<std::pair<std::string, std::size_t>>& out)
{
    if (f.kind == Formula::Kind::atom)
        out.emplace(f.atom.predicate, f.atom.args.size());
    for (const auto& c : f.children)
        collect_predicates(*c, out);
}

void collect_constants(const Term& t, std::set<std::string>& out)
{
    if (t.kind == Term::Kind::constant)
        out.insert(t.name);
    for (const auto& op : t.operands)
        collect_constants(op, out);
}

void collect_constants(const Formula& f, std::set<std::string>& out)
{
    if (f.kind == Formula::Kind::atom)
        for (const auto& t : f.atom.args)
            collect_constants(t, out);
    if (f.kind == Formula::Kind::compare) {
        collect_constants(f.lhs, out);
        collect_constants(f.rhs, out);
    }
    for (const auto& c : f.children)
        collect_constants(*c, out);
}

FormulaPtr desugar(const FormulaPtr& f)
{
    switch (f->kind) {
    case Formula::Kind::truth:
    case Formula::Kind::falsity:
    case Formula::Kind::atom:
    case Formula::Kind::compare:
        return f;
    case Formula::Kind::forall:
    case Formula::Kind::exists: {
        auto qual = desugar(f->children[0]);
        auto body = desugar(f->children[1]);
        if (qual->kind != Formula::Kind::truth)
            body = f->kind == Formula::Kind::forall ? fo::implies(qual, body) : fo::conj(qual, body);
        return f->kind == Formula::Kind::forall ? fo::forall(f->var, fo::top(), body)
                                                : fo::exists(f->var, fo::top(), body);
    }
    default: {
        auto copy = std::make_shared<Formula>(*f);
        for (auto& c : copy->children)
            c = desugar(c);
        return copy;
    }
    }
}

} // namespace clog
