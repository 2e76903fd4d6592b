#include "clog/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace clog {

namespace {

std::string created_name(std::size_t i)
{
    return "_n" + std::to_string(i + 1);
}

// Sorted atom texts when created element created[perm[i]] is named _n(i+1).
std::vector<std::string> atoms_under(const Structure& s, const std::vector<ElementId>& created,
                                     const std::vector<std::size_t>& perm)
{
    std::vector<std::string> names(s.size());
    for (ElementId id = 0; id < s.size(); ++id)
        names[id] = s.element(id).name;
    for (std::size_t i = 0; i < perm.size(); ++i)
        names[created[perm[i]]] = created_name(i);
    std::vector<std::string> out;
    for (const auto& [pred, tuples] : s.relations())
        for (const auto& t : tuples) {
            std::string text = pred;
            if (!t.empty()) {
                text += "(";
                for (std::size_t i = 0; i < t.size(); ++i)
                    text += (i ? "," : "") + names[t[i]];
                text += ")";
            }
            out.push_back(std::move(text));
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> best_permutation(const Structure& s, const std::vector<ElementId>& created)
{
    std::vector<std::size_t> perm(created.size());
    std::iota(perm.begin(), perm.end(), 0);
    if (created.size() > canonical_permutation_limit)
        return perm;
    auto best = perm;
    auto best_atoms = atoms_under(s, created, perm);
    while (std::next_permutation(perm.begin(), perm.end())) {
        auto atoms = atoms_under(s, created, perm);
        if (atoms < best_atoms) {
            best_atoms = std::move(atoms);
            best = perm;
        }
    }
    return best;
}

} // namespace

CanonicalForm canonical_form(const Structure& s)
{
    CanonicalForm f;
    for (ElementId id : s.initial_ids())
        f.initial.push_back(s.element(id).name);
    std::sort(f.initial.begin(), f.initial.end());
    auto created = s.created_ids();
    f.created = created.size();
    f.atoms = atoms_under(s, created, best_permutation(s, created));
    return f;
}

Structure canonicalize(const Structure& s)
{
    auto created = s.created_ids();
    auto perm = best_permutation(s, created);
    // Old id -> new id; initial elements first in their original order.
    std::vector<ElementId> remap(s.size());
    Structure out;
    for (ElementId id : s.initial_ids())
        remap[id] = out.add_element(s.element(id).name, false);
    for (std::size_t i = 0; i < perm.size(); ++i)
        remap[created[perm[i]]] = out.add_element(created_name(i), true);
    for (const auto& [pred, arity] : s.arities())
        out.declare(pred, arity);
    for (const auto& [pred, tuples] : s.relations())
        for (const auto& t : tuples) {
            Tuple mapped;
            for (ElementId e : t)
                mapped.push_back(remap[e]);
            out.insert(pred, std::move(mapped));
        }
    for (const auto& [name, id] : s.constants())
        out.bind_constant(name, remap[id]);
    return out;
}

std::vector<Structure> canonical_set(std::vector<Structure> models)
{
    std::vector<std::pair<CanonicalForm, Structure>> keyed;
    for (auto& m : models) {
        auto c = canonicalize(m);
        keyed.emplace_back(canonical_form(c), std::move(c));
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Structure> out;
    for (std::size_t i = 0; i < keyed.size(); ++i)
        if (i == 0 || keyed[i].first != keyed[i - 1].first)
            out.push_back(std::move(keyed[i].second));
    return out;
}

} // namespace clog
