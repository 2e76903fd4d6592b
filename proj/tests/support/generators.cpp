#include "generators.hpp"

#include "clog/io.hpp"

#include <fstream>

namespace clog::testkit {

nlohmann::json generator_config()
{
    std::ifstream in(std::string(CLOG_TEST_DATA) + "/generator.json");
    return nlohmann::json::parse(in);
}

namespace {

Signature signature(const nlohmann::json& j)
{
    Signature out;
    for (const auto& p : j)
        out.emplace_back(p[0].get<std::string>(), p[1].get<std::size_t>());
    return out;
}

Atom random_atom(Rng& rng, const Signature& preds, const std::vector<std::string>& scope)
{
    Signature usable;
    for (const auto& p : preds)
        if (p.second == 0 || !scope.empty())
            usable.push_back(p);
    const auto& [name, arity] = rng.pick(usable);
    Atom a{name, {}};
    for (std::size_t i = 0; i < arity; ++i)
        a.args.push_back(Term::variable(rng.pick(scope)));
    return a;
}

class SemanticGen
{
public:
    SemanticGen(Rng& rng, const TheoryShape& shape) : _rng(rng), _shape(shape)
    {
        _all = shape.endogenous;
        _all.insert(_all.end(), shape.exogenous.begin(), shape.exogenous.end());
    }

    CeePtr cee(int depth)
    {
        int kind = depth <= 0 ? 0 : _rng.uniform(0, _shape.allow_new ? 6 : 5);
        switch (kind) {
        case 1: return cee::rule(cee(depth - 1), condition(1));
        case 2: return cee::conj(cee(depth - 1), cee(depth - 1));
        case 3: return cee::disj(cee(depth - 1), cee(depth - 1));
        case 4: {
            auto v = fresh();
            auto q = condition(1);
            auto body = cee(depth - 1);
            _scope.pop_back();
            return cee::all(v, q, body);
        }
        case 5: {
            auto v = fresh();
            auto q = _rng.chance(0.4) ? fo::top() : condition(1);
            auto body = cee(depth - 1);
            _scope.pop_back();
            return cee::sel(v, q, body);
        }
        case 6: {
            auto v = fresh();
            auto body = cee(depth - 1);
            _scope.pop_back();
            return cee::create(v, body);
        }
        default: return cee::atom(random_atom(_rng, _shape.endogenous, _scope));
        }
    }

    FormulaPtr condition(int depth)
    {
        int kind = depth <= 0 ? _rng.uniform(0, 1) : _rng.uniform(0, 6);
        switch (kind) {
        case 1: return fo::negate(fo::atom(random_atom(_rng, _all, _scope)));
        case 2: return fo::conj(condition(depth - 1), condition(depth - 1));
        case 3: return fo::disj(condition(depth - 1), condition(depth - 1));
        case 4: {
            auto v = fresh();
            auto body = condition(depth - 1);
            _scope.pop_back();
            return _rng.chance(0.5) ? fo::exists(v, fo::top(), body) : fo::forall(v, fo::top(), body);
        }
        case 5:
            if (_scope.size() >= 2)
                return fo::compare(_rng.chance(0.5) ? CompareOp::eq : CompareOp::ne,
                                   Term::variable(_rng.pick(_scope)), Term::variable(_rng.pick(_scope)));
            return fo::atom(random_atom(_rng, _all, _scope));
        case 6: return fo::negate(condition(depth - 1));
        default: return fo::atom(random_atom(_rng, _all, _scope));
        }
    }

private:
    std::string fresh()
    {
        _scope.push_back("x" + std::to_string(_scope.size() + 1));
        return _scope.back();
    }

    Rng& _rng;
    const TheoryShape& _shape;
    Signature _all;
    std::vector<std::string> _scope;
};

// --- surface round-trip ASTs -----------------------------------------------

const Signature surface_preds = {{"P", 0}, {"Q", 1}, {"R", 2}, {"Turn", 1}, {"OnCh", 2}, {"E", 0}, {"Lvl", 3}};
const std::vector<std::string> var_pool = {"x", "y", "z", "t", "p", "X", "B", "d'"};
const std::vector<std::string> const_pool = {"A",   "Bob",   "MyMail", "x",  "And", "a b",  "",
                                             "say \"hi\"", "back\\slash", "New", "B",   "true", "y"};

class SurfaceGen
{
public:
    explicit SurfaceGen(Rng& rng) : _rng(rng) {}

    CeePtr cee(int depth)
    {
        int kind = depth <= 0 ? 0 : _rng.uniform(0, 6);
        switch (kind) {
        case 1: return cee::rule(cee(depth - 1), formula(depth - 1));
        case 2: return cee::conj(cee(depth - 1), cee(depth - 1));
        case 3: return cee::disj(cee(depth - 1), cee(depth - 1));
        case 4:
        case 5:
        case 6: {
            auto v = _rng.pick(var_pool);
            _scope.push_back(v);
            auto q = kind == 6 ? nullptr : (_rng.chance(0.3) ? fo::top() : formula(depth - 1));
            auto body = cee(depth - 1);
            _scope.pop_back();
            if (kind == 4)
                return cee::all(v, q, body);
            if (kind == 5)
                return cee::sel(v, q, body);
            return cee::create(v, body);
        }
        default: return cee::atom(atom());
        }
    }

    FormulaPtr formula(int depth)
    {
        int kind = depth <= 0 ? _rng.uniform(0, 3) : _rng.uniform(0, 11);
        switch (kind) {
        case 1: return fo::top();
        case 2: return fo::bottom();
        case 3: {
            static const CompareOp ops[] = {CompareOp::eq, CompareOp::ne, CompareOp::lt,
                                            CompareOp::le, CompareOp::gt, CompareOp::ge};
            return fo::compare(ops[_rng.uniform(0, 5)], term(2), term(2));
        }
        case 4: return fo::negate(formula(depth - 1));
        case 5: return fo::conj(formula(depth - 1), formula(depth - 1));
        case 6: return fo::disj(formula(depth - 1), formula(depth - 1));
        case 7: return fo::implies(formula(depth - 1), formula(depth - 1));
        case 8: return fo::iff(formula(depth - 1), formula(depth - 1));
        case 9:
        case 10: {
            auto v = _rng.pick(var_pool);
            _scope.push_back(v);
            auto q = _rng.chance(0.5) ? fo::top() : formula(depth - 1);
            auto body = formula(depth - 1);
            _scope.pop_back();
            return kind == 9 ? fo::forall(v, q, body) : fo::exists(v, q, body);
        }
        default: return fo::atom(atom());
        }
    }

    Term term(int depth)
    {
        int kind = _rng.uniform(0, depth > 0 ? 3 : 2);
        if (kind == 0 && !_scope.empty())
            return Term::variable(_rng.pick(_scope));
        if (kind == 1)
            return Term::integer(_rng.uniform(0, 12));
        if (kind == 3)
            return Term::sum(term(depth - 1), term(depth - 1));
        return Term::constant(_rng.pick(const_pool));
    }

    Atom atom()
    {
        const auto& [name, arity] = _rng.pick(surface_preds);
        Atom a{name, {}};
        for (std::size_t i = 0; i < arity; ++i)
            a.args.push_back(term(1));
        return a;
    }

private:
    Rng& _rng;
    std::vector<std::string> _scope;
};

} // namespace

CausalTheory random_theory(Rng& rng, const TheoryShape& shape)
{
    SemanticGen g(rng, shape);
    std::vector<CeePtr> parts;
    int n = rng.uniform(1, 3);
    for (int i = 0; i < n; ++i)
        parts.push_back(g.cee(rng.uniform(1, shape.max_depth)));
    return and_fold(parts);
}

Structure random_exo(Rng& rng, const Signature& exogenous, int size, double density)
{
    Structure s;
    for (int i = 0; i < size; ++i)
        s.add_element(std::string(1, static_cast<char>('A' + i)));
    auto ids = s.all_ids();
    for (const auto& [pred, arity] : exogenous) {
        s.declare(pred, arity);
        std::vector<Tuple> tuples{{}};
        for (std::size_t k = 0; k < arity; ++k) {
            std::vector<Tuple> longer;
            for (const auto& t : tuples)
                for (auto id : ids) {
                    auto u = t;
                    u.push_back(id);
                    longer.push_back(u);
                }
            tuples = std::move(longer);
        }
        for (auto& t : tuples)
            if (rng.chance(density))
                s.insert(pred, t);
    }
    return s;
}

CausalTheory random_surface_theory(Rng& rng, int max_depth)
{
    SurfaceGen g(rng);
    std::vector<CeePtr> parts;
    int n = rng.uniform(0, 3);
    for (int i = 0; i < n; ++i)
        parts.push_back(g.cee(rng.uniform(0, max_depth)));
    return and_fold(parts);
}

FOClogTheory random_surface_foclog(Rng& rng, int max_depth)
{
    FOClogTheory t;
    if (rng.chance(0.8))
        t.causal = random_surface_theory(rng, max_depth);
    SurfaceGen g(rng);
    int n = rng.uniform(0, 3);
    for (int i = 0; i < n; ++i)
        t.sentences.push_back(g.formula(rng.uniform(0, max_depth)));
    return t;
}

EDisjProgram random_surface_program(Rng& rng)
{
    static const Signature preds = {{"p", 0}, {"q", 1}, {"r", 2}, {"p'", 1}, {"chosen", 1}, {"lvl", 3}};
    static const std::vector<std::string> vars = {"X", "Y", "Z", "_W", "Long'"};
    static const std::vector<std::string> consts = {"a", "bob", "Big", "two words", "x_1", "not"};
    auto term = [&]() -> Term {
        int k = rng.uniform(0, 4);
        if (k <= 1)
            return Term::variable(rng.pick(vars));
        if (k == 2)
            return Term::integer(rng.uniform(0, 9));
        return Term::constant(rng.pick(consts));
    };
    auto atom = [&]() {
        const auto& [name, arity] = rng.pick(preds);
        Atom a{name, {}};
        for (std::size_t i = 0; i < arity; ++i)
            a.args.push_back(term());
        return a;
    };
    auto vars_of = [](const std::vector<Atom>& atoms) {
        std::set<std::string> out;
        for (const auto& a : atoms)
            for (const auto& t : a.args)
                collect_variables(t, out);
        return out;
    };
    EDisjProgram p;
    int n = rng.uniform(0, 5);
    while (static_cast<int>(p.rules.size()) < n) {
        std::vector<Atom> head, pos, neg;
        for (int i = rng.uniform(0, 3); i > 0; --i)
            head.push_back(atom());
        for (int i = rng.uniform(0, 3); i > 0; --i)
            pos.push_back(atom());
        auto bound = vars_of(pos);
        for (int i = rng.uniform(0, 2); i > 0; --i) {
            auto a = atom();
            for (auto& t : a.args)
                if (t.kind == Term::Kind::variable && !bound.contains(t.name))
                    t = bound.empty() ? Term::constant("a") : Term::variable(*bound.begin());
            neg.push_back(a);
        }
        if (head.empty() && pos.empty() && neg.empty())
            continue;
        p.rules.push_back(make_rule(head, pos, neg));
    }
    return p;
}

EDisjProgram random_program(Rng& rng, const ProgramShape& shape)
{
    static const std::vector<std::string> vars = {"X", "Y", "Z"};
    auto atom = [&](const std::vector<std::string>& pool) {
        Signature usable;
        for (const auto& p : shape.predicates)
            if (p.second == 0 || !pool.empty())
                usable.push_back(p);
        const auto& [name, arity] = rng.pick(usable);
        Atom a{name, {}};
        for (std::size_t i = 0; i < arity; ++i)
            a.args.push_back(Term::variable(rng.pick(pool)));
        return a;
    };
    EDisjProgram p;
    int n = rng.uniform(1, shape.max_rules);
    for (int r = 0; r < n; ++r) {
        std::vector<Atom> pos, neg, head;
        for (int i = rng.uniform(0, shape.max_body); i > 0; --i)
            pos.push_back(atom(vars));
        std::vector<std::string> bound;
        for (const auto& a : pos)
            for (const auto& t : a.args)
                if (std::find(bound.begin(), bound.end(), t.name) == bound.end())
                    bound.push_back(t.name);
        for (int i = 0; i < shape.max_body; ++i)
            if (rng.chance(shape.negation_density))
                neg.push_back(atom(bound));
        bool constraint = (!pos.empty() || !neg.empty()) && rng.chance(shape.constraint_rate);
        if (!constraint) {
            auto head_pool = bound;
            if (head_pool.empty() || rng.chance(shape.existential_rate))
                head_pool.push_back("W");
            int m = rng.uniform(1, shape.max_head);
            for (int i = 0; i < m; ++i)
                head.push_back(atom(head_pool));
        }
        p.rules.push_back(make_rule(head, pos, neg));
    }
    return p;
}

TheoryShape theory_shape(const nlohmann::json& j)
{
    TheoryShape s;
    s.max_depth = j.value("max_depth", 3);
    s.endogenous = signature(j.at("endogenous"));
    s.exogenous = signature(j.at("exogenous"));
    return s;
}

ProgramShape program_shape(const nlohmann::json& j)
{
    ProgramShape s;
    s.max_rules = j.value("max_rules", 4);
    s.max_head = j.value("max_head", 2);
    s.max_body = j.value("max_body", 2);
    s.predicates = signature(j.at("predicates"));
    s.negation_density = j.value("negation_density", 0.3);
    s.existential_rate = j.value("existential_rate", 0.2);
    s.constraint_rate = j.value("constraint_rate", 0.1);
    return s;
}

Structure program_domain(int size)
{
    Structure s;
    for (int i = 0; i < size; ++i)
        s.add_element(std::string(1, static_cast<char>('a' + i)));
    return s;
}

} // namespace clog::testkit
