#pragma once

#include "clog/cee.hpp"
#include "clog/program.hpp"
#include "clog/structure.hpp"

#include <json.hpp>

#include <random>
#include <string>
#include <utility>
#include <vector>

namespace clog::testkit {

using Signature = std::vector<std::pair<std::string, std::size_t>>;

nlohmann::json generator_config();

class Rng
{
public:
    explicit Rng(std::uint64_t seed) : _engine(seed) {}
    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(_engine); }
    bool chance(double p) { return std::bernoulli_distribution(p)(_engine); }
    template <class T>
    const T& pick(const std::vector<T>& v)
    {
        return v.at(static_cast<std::size_t>(uniform(0, static_cast<int>(v.size()) - 1)));
    }
    std::mt19937_64& engine() { return _engine; }

private:
    std::mt19937_64 _engine;
};

// Creation-free theories for semantic suites: no constants, no arithmetic,
// bound variables never shadow each other.
struct TheoryShape
{
    int max_depth = 3;
    Signature endogenous;
    Signature exogenous;
    bool allow_new = false;
};

CausalTheory random_theory(Rng& rng, const TheoryShape& shape);
// Initial elements A, B, ... and a random interpretation of `exogenous`.
Structure random_exo(Rng& rng, const Signature& exogenous, int size, double density);

// Unrestricted ASTs for parse/render round trips: New, integers, sums, quoted
// and shadowed constants, every formula connective.
CausalTheory random_surface_theory(Rng& rng, int max_depth);
FOClogTheory random_surface_foclog(Rng& rng, int max_depth);
EDisjProgram random_surface_program(Rng& rng);

struct ProgramShape
{
    int max_rules = 4;
    int max_head = 2;
    int max_body = 2;
    Signature predicates;
    double negation_density = 0.3;
    double existential_rate = 0.2;
    double constraint_rate = 0.1;
};

EDisjProgram random_program(Rng& rng, const ProgramShape& shape);

TheoryShape theory_shape(const nlohmann::json& j);
ProgramShape program_shape(const nlohmann::json& j);

// Elements a, b, c, ... (lower case, matching program constants).
Structure program_domain(int size);

} // namespace clog::testkit
