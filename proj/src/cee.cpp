#include "clog/cee.hpp"

namespace clog {

bool operator==(const Cee& a, const Cee& b)
{
    if (a.kind != b.kind || a.var != b.var || !(a.atom == b.atom) || !same(a.condition, b.condition) ||
        a.children.size() != b.children.size())
        return false;
    for (std::size_t i = 0; i < a.children.size(); ++i)
        if (!same(a.children[i], b.children[i]))
            return false;
    return true;
}

bool same(const CeePtr& a, const CeePtr& b)
{
    if (!a || !b)
        return !a && !b;
    return a == b || *a == *b;
}

const char* kind_name(Cee::Kind kind)
{
    switch (kind) {
    case Cee::Kind::atom: return "Atom";
    case Cee::Kind::rule: return "Rule";
    case Cee::Kind::conj: return "And";
    case Cee::Kind::disj: return "Or";
    case Cee::Kind::all: return "All";
    case Cee::Kind::sel: return "Sel";
    case Cee::Kind::create: return "New";
    }
    return "?";
}

namespace cee {

namespace {

CeePtr node(Cee::Kind kind, std::vector<CeePtr> children, FormulaPtr condition = nullptr, std::string var = {})
{
    auto c = std::make_shared<Cee>();
    c->kind = kind;
    c->children = std::move(children);
    c->condition = std::move(condition);
    c->var = std::move(var);
    return c;
}

} // namespace

CeePtr atom(Atom a)
{
    auto c = std::make_shared<Cee>();
    c->kind = Cee::Kind::atom;
    c->atom = std::move(a);
    return c;
}

CeePtr rule(CeePtr head, FormulaPtr body) { return node(Cee::Kind::rule, {std::move(head)}, std::move(body)); }
CeePtr conj(CeePtr a, CeePtr b) { return node(Cee::Kind::conj, {std::move(a), std::move(b)}); }
CeePtr disj(CeePtr a, CeePtr b) { return node(Cee::Kind::disj, {std::move(a), std::move(b)}); }

CeePtr all(std::string var, FormulaPtr qualification, CeePtr body)
{
    return node(Cee::Kind::all, {std::move(body)}, std::move(qualification), std::move(var));
}

CeePtr sel(std::string var, FormulaPtr qualification, CeePtr body)
{
    return node(Cee::Kind::sel, {std::move(body)}, std::move(qualification), std::move(var));
}

CeePtr create(std::string var, CeePtr body) { return node(Cee::Kind::create, {std::move(body)}, nullptr, std::move(var)); }

CeePtr with_pos(CeePtr c, SourcePos pos)
{
    auto copy = std::make_shared<Cee>(*c);
    copy->pos = pos;
    return copy;
}

} // namespace cee

CausalTheory and_fold(const std::vector<CeePtr>& parts)
{
    CausalTheory t;
    for (const auto& p : parts)
        t.root = t.root ? cee::conj(t.root, p) : p;
    return t;
}

std::vector<CeePtr> and_unfold(const CausalTheory& theory)
{
    std::vector<CeePtr> parts;
    CeePtr cur = theory.root;
    while (cur && cur->kind == Cee::Kind::conj) {
        parts.push_back(cur->children[1]);
        cur = cur->children[0];
    }
    if (cur)
        parts.push_back(cur);
    return {parts.rbegin(), parts.rend()};
}

bool FOClogTheory::operator==(const FOClogTheory& other) const
{
    if (causal.has_value() != other.causal.has_value())
        return false;
    if (causal && !(*causal == *other.causal))
        return false;
    if (sentences.size() != other.sentences.size())
        return false;
    for (std::size_t i = 0; i < sentences.size(); ++i)
        if (!same(sentences[i], other.sentences[i]))
            return false;
    return true;
}

const CausalTheory& FOClogTheory::causal_part() const
{
    static const CausalTheory neutral;
    return causal ? *causal : neutral;
}

FOClogTheory as_foclog(CausalTheory theory)
{
    FOClogTheory t;
    t.causal = std::move(theory);
    return t;
}

namespace {

void walk(const Cee& c, Vocabulary& vocab, std::set<std::string>* endogenous)
{
    auto add_formula = [&](const FormulaPtr& f) {
        if (!f)
            return;
        std::set<std::pair<std::string, std::size_t>> preds;
        collect_predicates(*f, preds);
        for (const auto& [name, arity] : preds)
            vocab.add_predicate(name, arity);
        collect_constants(*f, vocab.constants);
    };
    if (c.kind == Cee::Kind::atom) {
        vocab.add_predicate(c.atom.predicate, c.atom.args.size());
        for (const auto& t : c.atom.args)
            collect_constants(t, vocab.constants);
        if (endogenous)
            endogenous->insert(c.atom.predicate);
    }
    add_formula(c.condition);
    for (const auto& ch : c.children)
        walk(*ch, vocab, endogenous);
}

void free_vars(const Cee& c, std::set<std::string>& bound, std::set<std::string>& out)
{
    auto add = [&](const std::set<std::string>& vs) {
        for (const auto& v : vs)
            if (!bound.contains(v))
                out.insert(v);
    };
    if (c.kind == Cee::Kind::atom) {
        std::set<std::string> vs;
        for (const auto& t : c.atom.args)
            collect_variables(t, vs);
        add(vs);
        return;
    }
    bool binds = c.kind == Cee::Kind::all || c.kind == Cee::Kind::sel || c.kind == Cee::Kind::create;
    bool inserted = binds && bound.insert(c.var).second;
    if (c.condition) {
        auto vs = free_variables(*c.condition);
        add(vs);
    }
    for (const auto& ch : c.children)
        free_vars(*ch, bound, out);
    if (inserted)
        bound.erase(c.var);
}

bool creation_free(const Cee& c)
{
    if (c.kind == Cee::Kind::create)
        return false;
    for (const auto& ch : c.children)
        if (!creation_free(*ch))
            return false;
    return true;
}

} // namespace

Vocabulary vocabulary_of(const CausalTheory& theory)
{
    Vocabulary v;
    if (theory.root)
        walk(*theory.root, v, nullptr);
    return v;
}

Vocabulary vocabulary_of(const FOClogTheory& theory)
{
    Vocabulary v = vocabulary_of(theory.causal_part());
    for (const auto& s : theory.sentences) {
        std::set<std::pair<std::string, std::size_t>> preds;
        collect_predicates(*s, preds);
        for (const auto& [name, arity] : preds)
            v.add_predicate(name, arity);
        collect_constants(*s, v.constants);
    }
    return v;
}

SymbolClassification classify_symbols(const CausalTheory& theory)
{
    return classify_symbols(as_foclog(theory));
}

SymbolClassification classify_symbols(const FOClogTheory& theory)
{
    SymbolClassification out;
    Vocabulary scratch;
    if (theory.causal && theory.causal->root)
        walk(*theory.causal->root, scratch, &out.endogenous);
    for (const auto& [name, arity] : vocabulary_of(theory).predicates)
        if (!out.endogenous.contains(name))
            out.exogenous.insert(name);
    return out;
}

std::set<std::string> free_variables(const Cee& c)
{
    std::set<std::string> bound, out;
    free_vars(c, bound, out);
    return out;
}

bool is_creation_free(const CausalTheory& theory)
{
    return !theory.root || creation_free(*theory.root);
}

} // namespace clog
