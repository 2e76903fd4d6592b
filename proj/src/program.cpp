#include "clog/program.hpp"

#include <algorithm>

namespace clog {

namespace {

void ordered_vars(const std::vector<Atom>& atoms, std::vector<std::string>& out)
{
    for (const auto& a : atoms)
        for (const auto& t : a.args) {
            std::set<std::string> vs;
            collect_variables(t, vs);
            for (const auto& v : vs)
                if (std::find(out.begin(), out.end(), v) == out.end())
                    out.push_back(v);
        }
}

} // namespace

EDisjRule make_rule(std::vector<Atom> head, std::vector<Atom> positive, std::vector<Atom> negative, SourcePos pos)
{
    if (head.empty() && positive.empty() && negative.empty())
        throw GuardError(to_string(pos) + ": empty rule");
    EDisjRule r;
    r.head = std::move(head);
    r.positive = std::move(positive);
    r.negative = std::move(negative);
    r.pos = pos;
    ordered_vars(r.positive, r.universal);
    std::vector<std::string> neg_vars;
    ordered_vars(r.negative, neg_vars);
    for (const auto& v : neg_vars)
        if (std::find(r.universal.begin(), r.universal.end(), v) == r.universal.end())
            throw GuardError(to_string(pos) + ": unsafe rule, variable " + v +
                             " occurs under `not` but not in the positive body");
    std::vector<std::string> head_vars;
    ordered_vars(r.head, head_vars);
    for (const auto& v : head_vars)
        if (std::find(r.universal.begin(), r.universal.end(), v) == r.universal.end())
            r.existential.push_back(v);
    return r;
}

Vocabulary EDisjProgram::vocabulary() const
{
    Vocabulary v;
    auto add = [&](const std::vector<Atom>& atoms) {
        for (const auto& a : atoms) {
            v.add_predicate(a.predicate, a.args.size());
            for (const auto& t : a.args)
                collect_constants(t, v.constants);
        }
    };
    for (const auto& r : rules) {
        add(r.head);
        add(r.positive);
        add(r.negative);
    }
    return v;
}

std::set<std::string> EDisjProgram::head_predicates() const
{
    std::set<std::string> out;
    for (const auto& r : rules)
        for (const auto& a : r.head)
            out.insert(a.predicate);
    return out;
}

} // namespace clog
