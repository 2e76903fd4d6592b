#include "clog/evaluate.hpp"

namespace clog {

TermValue evaluate_term(const Term& t, const Structure& world, const Assignment& env)
{
    TermValue v;
    switch (t.kind) {
    case Term::Kind::variable: {
        auto e = env.lookup(t.name);
        if (!e)
            throw EvaluationError("unbound variable " + t.name);
        v.element = *e;
        v.number = world.element(*e).number;
        return v;
    }
    case Term::Kind::constant: {
        auto e = world.constant(t.name);
        if (!e)
            throw EvaluationError("unknown constant " + t.name);
        v.element = *e;
        v.number = world.element(*e).number;
        return v;
    }
    case Term::Kind::integer:
        v.number = t.value;
        v.element = world.find_number(t.value);
        return v;
    case Term::Kind::sum: {
        auto a = evaluate_term(t.operands[0], world, env);
        auto b = evaluate_term(t.operands[1], world, env);
        if (!a.number || !b.number)
            return v;
        v.number = *a.number + *b.number;
        v.element = world.find_number(*v.number);
        return v;
    }
    }
    return v;
}

std::optional<GroundAtom> ground_atom(const Atom& a, const Structure& world, const Assignment& env)
{
    GroundAtom g{a.predicate, {}};
    g.args.reserve(a.args.size());
    for (const auto& t : a.args) {
        auto v = evaluate_term(t, world, env);
        if (!v.element)
            return std::nullopt;
        g.args.push_back(*v.element);
    }
    return g;
}

namespace {

Truth from_bool(bool b) { return b ? Truth::yes : Truth::no; }

bool compare_values(CompareOp op, const TermValue& a, const TermValue& b)
{
    if (!a.defined() || !b.defined())
        return false;
    if (op == CompareOp::eq || op == CompareOp::ne) {
        bool equal = *a.element == *b.element;
        return op == CompareOp::eq ? equal : !equal;
    }
    if (!a.number || !b.number)
        return false;
    switch (op) {
    case CompareOp::lt: return *a.number < *b.number;
    case CompareOp::le: return *a.number <= *b.number;
    case CompareOp::gt: return *a.number > *b.number;
    case CompareOp::ge: return *a.number >= *b.number;
    default: return false;
    }
}

class Evaluator
{
public:
    explicit Evaluator(const EvalContext& ctx) : _ctx(ctx) {}

    Verdict run(const Formula& f, Assignment& env, bool positive)
    {
        switch (f.kind) {
        case Formula::Kind::truth: return {Truth::yes, {}};
        case Formula::Kind::falsity: return {Truth::no, {}};
        case Formula::Kind::atom: return atom(f.atom, env, positive);
        case Formula::Kind::compare:
            return {from_bool(compare_values(f.op, evaluate_term(f.lhs, _ctx.world, env),
                                             evaluate_term(f.rhs, _ctx.world, env))),
                    {}};
        case Formula::Kind::negation: {
            auto v = run(f.child(0), env, !positive);
            return {flip(v.value), std::move(v.open_atom)};
        }
        case Formula::Kind::conjunction: {
            Junction j(Truth::no);
            for (const auto& c : f.children)
                if (j.add(run(*c, env, positive)))
                    break;
            return j.result(Truth::yes);
        }
        case Formula::Kind::disjunction: {
            Junction j(Truth::yes);
            for (const auto& c : f.children)
                if (j.add(run(*c, env, positive)))
                    break;
            return j.result(Truth::no);
        }
        case Formula::Kind::implication: {
            Junction j(Truth::yes);
            if (!j.add(negated(run(f.child(0), env, !positive))))
                j.add(run(f.child(1), env, positive));
            return j.result(Truth::no);
        }
        case Formula::Kind::equivalence: {
            // (a => b) & (b => a), reading each side in both polarities.
            Junction outer(Truth::no);
            for (int dir = 0; dir < 2; ++dir) {
                const Formula& lhs = f.child(dir);
                const Formula& rhs = f.child(1 - dir);
                Junction inner(Truth::yes);
                if (!inner.add(negated(run(lhs, env, !positive))))
                    inner.add(run(rhs, env, positive));
                if (outer.add(inner.result(Truth::no)))
                    break;
            }
            return outer.result(Truth::yes);
        }
        case Formula::Kind::forall: {
            Junction j(Truth::no);
            for (ElementId e : _ctx.domain) {
                env.push(f.var, e);
                Junction each(Truth::yes);
                if (!each.add(negated(run(f.child(0), env, !positive))))
                    each.add(run(f.child(1), env, positive));
                env.pop();
                if (j.add(each.result(Truth::no)))
                    break;
            }
            return j.result(Truth::yes);
        }
        case Formula::Kind::exists: {
            Junction j(Truth::yes);
            for (ElementId e : _ctx.domain) {
                env.push(f.var, e);
                Junction each(Truth::no);
                if (!each.add(run(f.child(0), env, positive)))
                    each.add(run(f.child(1), env, positive));
                env.pop();
                if (j.add(each.result(Truth::yes)))
                    break;
            }
            return j.result(Truth::no);
        }
        }
        return {Truth::no, {}};
    }

private:
    // Accumulates a Kleene conjunction (dominant = no) or disjunction
    // (dominant = yes), remembering the first open atom.
    class Junction
    {
    public:
        explicit Junction(Truth dominant) : _dominant(dominant) {}

        // Returns true once the result is decided.
        bool add(Verdict v)
        {
            if (v.value == _dominant) {
                _decided = true;
                return true;
            }
            if (v.value == Truth::unknown && !_open) {
                _unknown = true;
                _open = std::move(v.open_atom);
            } else if (v.value == Truth::unknown) {
                _unknown = true;
            }
            return false;
        }

        Verdict result(Truth otherwise)
        {
            if (_decided)
                return {_dominant, {}};
            if (_unknown)
                return {Truth::unknown, std::move(_open)};
            return {otherwise, {}};
        }

    private:
        Truth _dominant;
        bool _decided = false;
        bool _unknown = false;
        std::optional<GroundAtom> _open;
    };

    static Truth flip(Truth t)
    {
        if (t == Truth::yes)
            return Truth::no;
        if (t == Truth::no)
            return Truth::yes;
        return t;
    }

    static Verdict negated(Verdict v) { return {flip(v.value), std::move(v.open_atom)}; }

    Verdict atom(const Atom& a, Assignment& env, bool positive)
    {
        if (auto declared = _ctx.world.arity(a.predicate); declared && *declared != a.args.size())
            throw StructuralError("predicate " + a.predicate + " has arity " + std::to_string(*declared) +
                                  ", used with " + std::to_string(a.args.size()));
        auto g = ground_atom(a, _ctx.world, env);
        if (!g)
            return {Truth::no, {}};
        if (_ctx.reader && _ctx.endogenous && _ctx.endogenous->contains(a.predicate)) {
            Truth t = _ctx.reader->read(*g, positive);
            if (t == Truth::unknown)
                return {t, std::move(*g)};
            return {t, {}};
        }
        return {from_bool(_ctx.world.holds(*g)), {}};
    }

    const EvalContext& _ctx;
};

} // namespace

Verdict evaluate(const Formula& f, const EvalContext& ctx, Assignment& env)
{
    return Evaluator(ctx).run(f, env, true);
}

bool evaluate_formula(const Formula& f, const Structure& s, const Assignment& env)
{
    for (const auto& v : free_variables(f))
        if (!env.lookup(v))
            throw EvaluationError("unbound variable " + v);
    auto ids = s.all_ids();
    EvalContext ctx{s, nullptr, nullptr, ids};
    Assignment scratch = env;
    return evaluate(f, ctx, scratch).value == Truth::yes;
}

} // namespace clog
