#include "clog/structure.hpp"

#include <charconv>

namespace clog {

void Vocabulary::add_predicate(const std::string& name, std::size_t arity)
{
    auto [it, inserted] = predicates.emplace(name, arity);
    if (!inserted && it->second != arity)
        throw StructuralError("predicate " + name + " used with arity " + std::to_string(arity) +
                              " and " + std::to_string(it->second));
}

void Vocabulary::merge(const Vocabulary& other)
{
    for (const auto& [name, arity] : other.predicates)
        add_predicate(name, arity);
    constants.insert(other.constants.begin(), other.constants.end());
}

std::optional<std::int64_t> parse_numeral(std::string_view name)
{
    if (name.empty() || name.size() > 18)
        return std::nullopt;
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(name.data(), name.data() + name.size(), value);
    if (ec != std::errc() || ptr != name.data() + name.size() || name.front() == '-')
        return std::nullopt;
    if (name.size() > 1 && name.front() == '0')
        return std::nullopt;
    return value;
}

ElementId Structure::add_element(std::string name, bool created)
{
    if (_by_name.contains(name))
        throw StructuralError("duplicate domain element " + name);
    auto id = static_cast<ElementId>(_elements.size());
    auto number = parse_numeral(name);
    if (number)
        _by_number.emplace(*number, id);
    _by_name.emplace(name, id);
    _elements.push_back(Element{std::move(name), created, number});
    return id;
}

ElementId Structure::ensure_element(const std::string& name)
{
    if (auto id = find(name))
        return *id;
    return add_element(name);
}

std::optional<ElementId> Structure::find(std::string_view name) const
{
    auto it = _by_name.find(std::string(name));
    if (it == _by_name.end())
        return std::nullopt;
    return it->second;
}

std::optional<ElementId> Structure::find_number(std::int64_t value) const
{
    auto it = _by_number.find(value);
    if (it == _by_number.end())
        return std::nullopt;
    return it->second;
}

std::vector<ElementId> Structure::all_ids() const
{
    std::vector<ElementId> ids(_elements.size());
    for (std::size_t i = 0; i < ids.size(); ++i)
        ids[i] = static_cast<ElementId>(i);
    return ids;
}

std::vector<ElementId> Structure::initial_ids() const
{
    std::vector<ElementId> ids;
    for (std::size_t i = 0; i < _elements.size(); ++i)
        if (!_elements[i].created)
            ids.push_back(static_cast<ElementId>(i));
    return ids;
}

std::vector<ElementId> Structure::created_ids() const
{
    std::vector<ElementId> ids;
    for (std::size_t i = 0; i < _elements.size(); ++i)
        if (_elements[i].created)
            ids.push_back(static_cast<ElementId>(i));
    return ids;
}

void Structure::declare(const std::string& predicate, std::size_t arity)
{
    auto [it, inserted] = _arity.emplace(predicate, arity);
    if (!inserted && it->second != arity)
        throw StructuralError("predicate " + predicate + " has arity " + std::to_string(it->second) +
                              ", not " + std::to_string(arity));
    _relations[predicate];
}

std::optional<std::size_t> Structure::arity(const std::string& predicate) const
{
    auto it = _arity.find(predicate);
    if (it == _arity.end())
        return std::nullopt;
    return it->second;
}

bool Structure::holds(const std::string& predicate, const Tuple& args) const
{
    auto it = _relations.find(predicate);
    return it != _relations.end() && it->second.contains(args);
}

void Structure::insert(const std::string& predicate, Tuple args)
{
    declare(predicate, args.size());
    for (auto e : args)
        if (e >= _elements.size())
            throw StructuralError("tuple of " + predicate + " refers to an element outside the domain");
    _relations[predicate].insert(std::move(args));
}

void Structure::clear(const std::string& predicate)
{
    auto it = _relations.find(predicate);
    if (it != _relations.end())
        it->second.clear();
}

void Structure::undeclare(const std::string& predicate)
{
    _relations.erase(predicate);
    _arity.erase(predicate);
}

std::vector<GroundAtom> Structure::atoms() const
{
    std::vector<GroundAtom> out;
    for (const auto& [pred, tuples] : _relations)
        for (const auto& t : tuples)
            out.push_back(GroundAtom{pred, t});
    return out;
}

void Structure::bind_constant(const std::string& name, ElementId id)
{
    if (id >= _elements.size())
        throw StructuralError("constant " + name + " bound outside the domain");
    _constants[name] = id;
}

std::optional<ElementId> Structure::constant(const std::string& name) const
{
    auto it = _constants.find(name);
    if (it != _constants.end())
        return it->second;
    return find(name);
}

std::string Structure::atom_text(const GroundAtom& a) const
{
    return atom_text(a.predicate, a.args);
}

std::string Structure::atom_text(const std::string& predicate, const Tuple& args) const
{
    std::string out = predicate;
    if (args.empty())
        return out;
    out += '(';
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i)
            out += ',';
        out += args[i] < _elements.size() ? _elements[args[i]].name : "#" + std::to_string(args[i]);
    }
    out += ')';
    return out;
}

std::optional<ElementId> Assignment::lookup(std::string_view var) const
{
    for (auto it = _slots.rbegin(); it != _slots.rend(); ++it)
        if (it->first == var)
            return it->second;
    return std::nullopt;
}

} // namespace clog
