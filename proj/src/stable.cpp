#include "clog/stable.hpp"

#include "clog/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

namespace clog {

namespace {

// Odometer over all tuples of `domain` of length `n`; calls f for each.
template <class F>
void for_each_tuple(const std::vector<ElementId>& domain, std::size_t n, F&& f)
{
    std::vector<std::size_t> idx(n, 0);
    Tuple t(n);
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

GroundAtom ground(const Atom& a, const Structure& s, const Assignment& env)
{
    GroundAtom g{a.predicate, {}};
    for (const auto& t : a.args) {
        std::optional<ElementId> e;
        switch (t.kind) {
        case Term::Kind::variable: e = env.lookup(t.name); break;
        case Term::Kind::constant: e = s.constant(t.name); break;
        case Term::Kind::integer: e = s.find_number(t.value); break;
        case Term::Kind::sum: break;
        }
        if (!e)
            throw GuardError("term of " + a.predicate + " is not a domain element");
        g.args.push_back(*e);
    }
    return g;
}

// A ground program over a fixed atom universe, as bitmasks.
struct MaskRule
{
    std::uint64_t positive = 0;
    std::uint64_t negative = 0;
    std::uint64_t head = 0;
    bool positive_outside = false; // some positive atom can never be in X
};

class MaskProgram
{
public:
    MaskProgram(const std::vector<GroundRule>& rules, const std::vector<GroundAtom>& universe)
    {
        for (std::size_t i = 0; i < universe.size(); ++i)
            _index.emplace(universe[i], i);
        for (const auto& r : rules) {
            MaskRule m;
            for (const auto& a : r.positive) {
                if (auto b = bit(a))
                    m.positive |= *b;
                else
                    m.positive_outside = true;
            }
            for (const auto& a : r.negative)
                if (auto b = bit(a))
                    m.negative |= *b;
            for (const auto& a : r.head)
                if (auto b = bit(a))
                    m.head |= *b;
            if (!m.positive_outside)
                _rules.push_back(m);
        }
    }

    // The closure condition for X relative to M (both subsets of the universe).
    [[nodiscard]] bool closed(std::uint64_t x, std::uint64_t m) const
    {
        for (const auto& r : _rules) {
            if (r.negative & m)
                continue;
            if (r.positive & ~x)
                continue;
            if (!(r.head & x))
                return false;
        }
        return true;
    }

    [[nodiscard]] bool stable(std::uint64_t m) const
    {
        if (!closed(m, m))
            return false;
        if (m == 0)
            return true;
        // Proper subsets of m, largest first.
        for (std::uint64_t x = (m - 1) & m;; x = (x - 1) & m) {
            if (closed(x, m))
                return false;
            if (x == 0)
                break;
        }
        return true;
    }

    [[nodiscard]] std::optional<std::uint64_t> bit(const GroundAtom& a) const
    {
        auto it = _index.find(a);
        if (it == _index.end())
            return std::nullopt;
        return std::uint64_t{1} << it->second;
    }

private:
    std::map<GroundAtom, std::size_t> _index;
    std::vector<MaskRule> _rules;
};

void guard(std::size_t n)
{
    if (n > stable_atom_limit)
        throw GuardError("stable-model search over " + std::to_string(n) + " atoms exceeds the limit of " +
                         std::to_string(stable_atom_limit));
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

} // namespace

Structure make_domain(const std::vector<std::string>& names)
{
    Structure s;
    for (const auto& n : names)
        s.add_element(n);
    return s;
}

std::vector<GroundRule> ground_program(const EDisjProgram& p, const Structure& domain)
{
    std::vector<GroundRule> out;
    if (p.rules.empty())
        return out;
    auto ids = domain.all_ids();
    if (ids.empty())
        throw GuardError("cannot ground a non-empty program over an empty domain (no variable assignments exist; supply domain elements)");
    for (std::size_t ri = 0; ri < p.rules.size(); ++ri) {
        const auto& r = p.rules[ri];
        for_each_tuple(ids, r.universal.size(), [&](const Tuple& eta) {
            Assignment env;
            for (std::size_t i = 0; i < eta.size(); ++i)
                env.push(r.universal[i], eta[i]);
            GroundRule g;
            g.rule = ri;
            g.eta = eta;
            for (const auto& a : r.positive)
                g.positive.push_back(ground(a, domain, env));
            for (const auto& a : r.negative)
                g.negative.push_back(ground(a, domain, env));
            std::set<GroundAtom> head;
            for_each_tuple(ids, r.existential.size(), [&](const Tuple& theta) {
                for (std::size_t i = 0; i < theta.size(); ++i)
                    env.push(r.existential[i], theta[i]);
                for (const auto& a : r.head)
                    head.insert(ground(a, domain, env));
                for (std::size_t i = 0; i < theta.size(); ++i)
                    env.pop();
            });
            g.head.assign(head.begin(), head.end());
            out.push_back(std::move(g));
        });
    }
    return out;
}

LiteralSet minus_set(const Structure& m)
{
    LiteralSet out;
    auto ids = m.all_ids();
    for (const auto& [pred, arity] : m.arities()) {
        if (arity > 0 && ids.empty())
            continue;
        for_each_tuple(ids, arity, [&](const Tuple& t) {
            if (!m.holds(pred, t))
                out.insert(Literal{false, GroundAtom{pred, t}});
        });
    }
    return out;
}

bool is_stable(const EDisjProgram& p, const Structure& m)
{
    auto rules = ground_program(p, m);
    std::vector<GroundAtom> universe = m.atoms();
    guard(universe.size());
    MaskProgram program(rules, universe);
    std::uint64_t all = universe.empty() ? 0 : (std::uint64_t{1} << universe.size()) - 1;
    // Negative literals are read against M itself.
    return program.stable(all);
}

std::vector<Structure> stable_models(const EDisjProgram& p, const Structure& domain)
{
    Structure base = with_constants(p, domain);
    auto vocab = p.vocabulary();
    for (const auto& [pred, arity] : vocab.predicates)
        base.declare(pred, arity);
    auto rules = ground_program(p, base);
    // Atoms outside every head instance are false in every stable model.
    std::set<GroundAtom> heads;
    for (const auto& r : rules)
        heads.insert(r.head.begin(), r.head.end());
    std::vector<GroundAtom> universe(heads.begin(), heads.end());
    guard(universe.size());
    MaskProgram program(rules, universe);

    std::vector<Structure> out;
    std::uint64_t limit = std::uint64_t{1} << universe.size();
    for (std::uint64_t m = 0; m < limit; ++m) {
        if (!program.stable(m))
            continue;
        Structure s = base;
        for (std::size_t i = 0; i < universe.size(); ++i)
            if (m >> i & 1)
                s.insert(universe[i]);
        out.push_back(std::move(s));
    }
    return canonical_set(std::move(out));
}

} // namespace clog
