#pragma once

#include "clog/structure.hpp"

#include <string>
#include <vector>

namespace clog {

// Isomorphism-invariant description of a structure modulo renaming of created
// elements: initial elements keep their names, created ones become _n1.._nk
// under the renaming that yields the lexicographically least sorted atom list.
struct CanonicalForm
{
    std::vector<std::string> initial;
    std::size_t created = 0;
    std::vector<std::string> atoms;

    auto operator<=>(const CanonicalForm&) const = default;
};

// Exhaustive over permutations up to this many created elements; beyond it the
// creation order is used as is.
inline constexpr std::size_t canonical_permutation_limit = 8;

CanonicalForm canonical_form(const Structure& s);

// A copy of `s` whose created elements are renamed per canonical_form.
Structure canonicalize(const Structure& s);

// Sorts structures by canonical form and drops isomorphic duplicates.
std::vector<Structure> canonical_set(std::vector<Structure> models);

} // namespace clog
