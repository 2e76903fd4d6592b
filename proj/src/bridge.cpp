#include "clog/bridge.hpp"

#include "clog/canonical.hpp"
#include "clog/engine.hpp"
#include "clog/evaluate.hpp"
#include "clog/stable.hpp"

#include <algorithm>
#include <future>
#include <map>

namespace clog {

namespace {

FormulaPtr body_formula(const EDisjRule& r)
{
    std::vector<FormulaPtr> parts;
    for (const auto& a : r.positive)
        parts.push_back(fo::atom(a));
    for (const auto& a : r.negative)
        parts.push_back(fo::negate(fo::atom(a)));
    return fo::conj_all(parts);
}

FormulaPtr forall_all(const std::vector<std::string>& vars, FormulaPtr body)
{
    for (auto it = vars.rbegin(); it != vars.rend(); ++it)
        body = fo::forall(*it, fo::top(), body);
    return body;
}

template <class F>
void for_each_tuple(const std::vector<ElementId>& domain, std::size_t n, F&& f)
{
    std::vector<std::size_t> idx(n, 0);
    Tuple t(n);
    if (n > 0 && domain.empty())
        return;
    for (;;) {
        for (std::size_t i = 0; i < n; ++i)
            t[i] = domain[idx[i]];
        f(t);
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (++idx[i] < domain.size())
                break;
            idx[i] = 0;
            if (i == 0)
                return;
        }
        if (n == 0)
            return;
    }
}

Structure with_constants(const EDisjProgram& p, const Structure& domain)
{
    Structure s;
    for (const auto& e : domain.elements())
        s.add_element(e.name);
    for (const auto& c : p.vocabulary().constants)
        if (!s.constant(c))
            s.add_element(c);
    return s;
}

std::set<CanonicalForm> forms(const std::vector<Structure>& models)
{
    std::set<CanonicalForm> out;
    for (const auto& m : models)
        out.insert(canonical_form(m));
    return out;
}

bool subset(const std::vector<Structure>& a, const std::set<CanonicalForm>& b, const std::string& expectation,
            bool expected, std::vector<Counterexample>& counterexamples, const std::string& detail)
{
    bool ok = true;
    for (const auto& m : a)
        if (!b.contains(canonical_form(m))) {
            ok = false;
            if (expected)
                counterexamples.push_back({expectation, detail, m});
        }
    return ok;
}

} // namespace

FOClogTheory translate_to_foclog(const EDisjProgram& p)
{
    std::vector<CeePtr> parts;
    FOClogTheory t;
    for (const auto& r : p.rules) {
        FormulaPtr body = body_formula(r);
        if (r.is_constraint()) {
            t.sentences.push_back(forall_all(r.universal, fo::negate(body)));
            continue;
        }
        CeePtr c = cee::atom(r.head[0]);
        for (std::size_t i = 1; i < r.head.size(); ++i)
            c = cee::disj(c, cee::atom(r.head[i]));
        for (auto it = r.existential.rbegin(); it != r.existential.rend(); ++it)
            c = cee::sel(*it, fo::top(), c);
        if (r.universal.empty()) {
            if (body->kind != Formula::Kind::truth)
                c = cee::rule(c, body);
        } else {
            c = cee::all(r.universal.back(), body, c);
            for (std::size_t i = r.universal.size() - 1; i-- > 0;)
                c = cee::all(r.universal[i], fo::top(), c);
        }
        parts.push_back(c);
    }
    t.causal = and_fold(parts);
    auto heads = p.head_predicates();
    for (const auto& [pred, arity] : p.vocabulary().predicates) {
        if (heads.contains(pred))
            continue;
        Atom a{pred, {}};
        std::vector<std::string> vars;
        for (std::size_t i = 0; i < arity; ++i) {
            vars.push_back("X" + std::to_string(i + 1));
            a.args.push_back(Term::variable(vars.back()));
        }
        t.sentences.push_back(forall_all(vars, fo::negate(fo::atom(a))));
    }
    return t;
}

namespace {

FormulaPtr weaken(const Cee& c)
{
    switch (c.kind) {
    case Cee::Kind::atom: return fo::atom(c.atom);
    case Cee::Kind::rule: return fo::implies(c.condition, weaken(c.child(0)));
    case Cee::Kind::conj: return fo::conj(weaken(c.child(0)), weaken(c.child(1)));
    case Cee::Kind::disj: return fo::disj(weaken(c.child(0)), weaken(c.child(1)));
    case Cee::Kind::all: return fo::forall(c.var, c.condition, weaken(c.child(0)));
    case Cee::Kind::sel: return fo::exists(c.var, c.condition, weaken(c.child(0)));
    case Cee::Kind::create:
        throw GuardError(to_string(c.pos) + ": the FO weakening is only defined for creation-free theories (New " +
                         c.var + ")");
    }
    return fo::top();
}

} // namespace

FormulaPtr fo_weakening(const CausalTheory& delta)
{
    return delta.root ? weaken(*delta.root) : fo::top();
}

FormulaPtr fo_weakening(const FOClogTheory& theory)
{
    std::vector<FormulaPtr> parts;
    if (theory.causal && theory.causal->root)
        parts.push_back(fo_weakening(*theory.causal));
    parts.insert(parts.end(), theory.sentences.begin(), theory.sentences.end());
    return fo::conj_all(parts);
}

AnalysisReport analyze(const EDisjProgram& p, const Structure& domain)
{
    AnalysisReport report;
    report.domain = with_constants(p, domain);
    const Structure& s = report.domain;
    auto ids = s.all_ids();

    std::map<GroundAtom, std::vector<OccurrenceWitness>> occurrences;
    for (std::size_t ri = 0; ri < p.rules.size(); ++ri) {
        const auto& r = p.rules[ri];
        std::vector<std::string> vars = r.universal;
        vars.insert(vars.end(), r.existential.begin(), r.existential.end());
        for (std::size_t i = 0; i < r.head.size(); ++i)
            for_each_tuple(ids, vars.size(), [&](const Tuple& t) {
                Assignment env;
                OccurrenceWitness w{ri, i, {}, {}};
                for (std::size_t k = 0; k < vars.size(); ++k) {
                    env.push(vars[k], t[k]);
                    w.eta.emplace_back(vars[k], t[k]);
                }
                auto g = ground_atom(r.head[i], s, env);
                if (!g)
                    return;
                w.atom = *g;
                occurrences[*g].push_back(std::move(w));
            });
    }
    for (const auto& [atom, occ] : occurrences) {
        if (occ.size() < 2)
            continue;
        auto dis = std::find_if(occ.begin(), occ.end(),
                                [&](const auto& w) { return p.rules[w.rule].is_disjunctive(); });
        if (dis == occ.end())
            continue;
        const auto& other = dis == occ.begin() ? occ[1] : occ.front();
        report.non_overlapping = false;
        report.overlap = std::make_pair(*dis, other);
        break;
    }

    // Predicate dependency graph: head -> body, negative for `not` literals.
    std::map<std::string, std::set<std::pair<std::string, bool>>> edges;
    for (const auto& r : p.rules)
        for (const auto& h : r.head) {
            for (const auto& b : r.positive)
                edges[h.predicate].insert({b.predicate, false});
            for (const auto& b : r.negative)
                edges[h.predicate].insert({b.predicate, true});
        }
    auto path = [&](const std::string& from, const std::string& to) -> std::vector<std::string> {
        std::map<std::string, std::string> parent;
        std::vector<std::string> queue{from};
        parent[from] = from;
        for (std::size_t i = 0; i < queue.size(); ++i) {
            auto cur = queue[i];
            if (cur == to) {
                std::vector<std::string> out{to};
                while (out.back() != from)
                    out.push_back(parent[out.back()]);
                return {out.rbegin(), out.rend()};
            }
            for (const auto& [next, neg] : edges[cur])
                if (!parent.contains(next)) {
                    parent[next] = cur;
                    queue.push_back(next);
                }
        }
        return {};
    };
    for (const auto& [u, out] : std::map(edges)) {
        for (const auto& [v, negative] : out) {
            if (!negative)
                continue;
            auto back = path(v, u);
            if (back.empty())
                continue;
            report.neg_recursion = true;
            report.cycle = {u};
            report.cycle.insert(report.cycle.end(), back.begin(), back.end());
            break;
        }
        if (report.neg_recursion)
            break;
    }

    report.head_symbols = p.head_predicates();
    for (const auto& [pred, arity] : p.vocabulary().predicates)
        if (!report.head_symbols.contains(pred))
            report.never_in_head.insert(pred);
    return report;
}

bool verify_witness(const EDisjProgram& p, const Structure& domain, const OccurrenceWitness& w)
{
    if (w.rule >= p.rules.size() || w.head_index >= p.rules[w.rule].head.size())
        return false;
    Assignment env;
    for (const auto& [var, id] : w.eta)
        env.push(var, id);
    auto g = ground_atom(p.rules[w.rule].head[w.head_index], domain, env);
    return g && *g == w.atom;
}

std::vector<Structure> formula_models(const FormulaPtr& f, const Structure& base, const std::set<std::string>& open)
{
    std::vector<GroundAtom> atoms;
    auto ids = base.all_ids();
    for (const auto& [pred, arity] : base.arities()) {
        if (!open.contains(pred))
            continue;
        for_each_tuple(ids, arity, [&](const Tuple& t) { atoms.push_back({pred, t}); });
    }
    if (atoms.size() > stable_atom_limit)
        throw GuardError("model enumeration over " + std::to_string(atoms.size()) +
                         " atoms exceeds the limit of " + std::to_string(stable_atom_limit));
    std::vector<Structure> out;
    Structure s = base;
    for (const auto& p : open)
        s.clear(p);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << atoms.size()); ++m) {
        Structure c = s;
        for (std::size_t i = 0; i < atoms.size(); ++i)
            if (m >> i & 1)
                c.insert(atoms[i]);
        if (evaluate_formula(*f, c))
            out.push_back(std::move(c));
    }
    return canonical_set(std::move(out));
}

ComparisonReport compare_semantics(const EDisjProgram& p, const Structure& domain, int budget)
{
    ComparisonReport report;
    report.budget = budget;
    report.analysis = analyze(p, domain);
    const Structure& elements = report.analysis.domain;

    auto theory = translate_to_foclog(p);
    auto vocab = p.vocabulary();
    Structure exo = elements;
    for (const auto& pred : report.analysis.never_in_head)
        exo.declare(pred, vocab.predicates.at(pred));

    auto stable = std::async(std::launch::async, [&] { return stable_models(p, elements); });
    auto foclog = std::async(std::launch::async, [&] { return enumerate_models(theory, exo, budget); });
    auto weak = std::async(std::launch::async, [&]() -> std::optional<std::vector<Structure>> {
        Structure base = exo;
        for (const auto& [pred, arity] : vocab.predicates)
            base.declare(pred, arity);
        std::size_t atoms = 0;
        for (const auto& pred : report.analysis.head_symbols) {
            std::size_t n = 1;
            for (std::size_t i = 0; i < vocab.predicates.at(pred); ++i)
                n *= base.size();
            atoms += n;
        }
        if (atoms > stable_atom_limit)
            return std::nullopt;
        return formula_models(fo_weakening(theory), base, report.analysis.head_symbols);
    });
    report.stable = stable.get();
    auto fm = foclog.get();
    report.foclog = std::move(fm.models);
    report.foclog_truncated = fm.truncated;
    if (auto w = weak.get()) {
        report.fo_weak = std::move(*w);
        report.fo_weak_computed = true;
    }

    report.expect_equal = report.analysis.non_overlapping && !report.analysis.neg_recursion;
    report.expect_stable_subset_foclog = !report.analysis.neg_recursion;
    report.expect_foclog_subset_fo_weak = report.fo_weak_computed;

    auto foclog_forms = forms(report.foclog);
    auto stable_forms = forms(report.stable);
    report.stable_subset_foclog =
        subset(report.stable, foclog_forms, "stable_subset_foclog", report.expect_stable_subset_foclog,
               report.counterexamples, "stable model rejected by the FO(C-Log) translation");
    report.foclog_subset_stable =
        subset(report.foclog, stable_forms, "equal", report.expect_equal, report.counterexamples,
               "FO(C-Log) model that is not stable in a non-overlapping program without negative recursion");
    if (report.fo_weak_computed)
        report.foclog_subset_fo_weak =
            subset(report.foclog, forms(report.fo_weak), "foclog_subset_fo_weak", true, report.counterexamples,
                   "FO(C-Log) model violating the FO weakening");
    return report;
}

} // namespace clog
