#include "clog/io.hpp"
#include "clog/parser.hpp"
#include "clog/render.hpp"
#include "clog/stable.hpp"

#include "generators.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

using namespace clog;

namespace {

std::set<std::string> texts(const Structure& s)
{
    std::set<std::string> out;
    for (const auto& a : s.atoms())
        out.insert(s.atom_text(a));
    return out;
}

std::set<std::set<std::string>> model_texts(const std::vector<Structure>& models)
{
    std::set<std::set<std::string>> out;
    for (const auto& m : models)
        out.insert(texts(m));
    return out;
}

// A structure over `domain` in which exactly `atoms` hold.
Structure over(const EDisjProgram& p, const Structure& domain, const std::vector<GroundAtom>& atoms)
{
    Structure s = domain;
    for (const auto& [pred, arity] : p.vocabulary().predicates)
        s.declare(pred, arity);
    for (const auto& a : atoms)
        s.insert(a);
    return s;
}

Structure over(const EDisjProgram& p, const std::vector<std::string>& names, const std::vector<std::string>& props)
{
    std::vector<GroundAtom> atoms;
    for (const auto& n : props)
        atoms.push_back({n, {}});
    return over(p, make_domain(names), atoms);
}

std::string lottery_program()
{
    return read_file(std::string(CLOG_CORPUS) + "/lottery.edlp");
}

} // namespace

TEST(GroundProgram, OneRulePerAssignment)
{
    EXPECT_EQ(ground_program(parse_edlp("p. p ; q."), make_domain({"a"})).size(), 2u);
    EXPECT_EQ(ground_program(parse_edlp("p. p ; q."), make_domain({"a", "b", "c"})).size(), 2u);
    EXPECT_EQ(ground_program(parse_edlp("s(X, Y) :- q(X), r(Y)."), make_domain({"a", "b", "c"})).size(), 9u);
    EXPECT_TRUE(ground_program(EDisjProgram{}, make_domain({"a"})).empty());
    EXPECT_TRUE(ground_program(EDisjProgram{}, Structure{}).empty());
}

TEST(GroundProgram, ExistentialHeadsListEveryInstance)
{
    auto domain = make_domain({"a", "b"});
    auto g = ground_program(parse_edlp("permres(X) :- lottery."), domain);
    ASSERT_EQ(g.size(), 1u);
    std::set<std::string> heads;
    for (const auto& a : g[0].head)
        heads.insert(domain.atom_text(a));
    EXPECT_EQ(heads, (std::set<std::string>{"permres(a)", "permres(b)"}));
    EXPECT_TRUE(g[0].eta.empty());
}

TEST(GroundProgram, Guards)
{
    EXPECT_THROW(ground_program(parse_edlp("p."), Structure{}), GuardError);
    EXPECT_THROW(ground_program(parse_edlp("p(c)."), make_domain({"a"})), GuardError);
}

TEST(MinusSet, NegatesTheFalseDomainAtoms)
{
    auto p = parse_edlp("p. q :- p.");
    auto m = over(p, {"a"}, {"p"});
    EXPECT_EQ(minus_set(m), (LiteralSet{{false, {"q", {}}}}));
    auto empty = over(p, {"a"}, {});
    EXPECT_EQ(minus_set(empty), (LiteralSet{{false, {"p", {}}}, {false, {"q", {}}}}));
}

TEST(MinusSet, LotteryVocabulary)
{
    auto p = parse_edlp(lottery_program());
    auto domain = make_domain({"a", "b"});
    auto m = over(p, domain, {{"permres", {*domain.find("a")}}});
    // Oracle: the domain atoms are permres/passtest over {a, b} plus lottery,
    // five in all; every one except permres(a) is false.
    std::size_t oracle = 0;
    for (const auto& [pred, arity] : m.arities())
        oracle += arity == 0 ? 1 : static_cast<std::size_t>(std::pow(m.size(), arity));
    oracle -= m.atoms().size();
    auto minus = minus_set(m);
    EXPECT_EQ(minus.size(), oracle);
    EXPECT_EQ(minus.size(), 4u);
    for (const auto& l : minus) {
        EXPECT_FALSE(l.positive);
        EXPECT_FALSE(m.holds(l.atom));
    }
}

TEST(IsStable, ThePOrQProgram)
{
    auto p = parse_edlp("p. p ; q.");
    EXPECT_TRUE(is_stable(p, over(p, {"a"}, {"p"})));
    EXPECT_FALSE(is_stable(p, over(p, {"a"}, {"p", "q"})));
    EXPECT_FALSE(is_stable(p, over(p, {"a"}, {"q"})));
    EXPECT_FALSE(is_stable(p, over(p, {"a"}, {})));
}

TEST(IsStable, ConstraintOnQFollowsTheDefinition)
{
    // X = {p} closes the rules inside M = {p, q}: M⁻ is empty, so `not q` is
    // not entailed and the constraint stays silent. No candidate is minimal.
    auto p = parse_edlp(read_file(std::string(CLOG_CORPUS) + "/overlap_constraint.edlp"));
    EXPECT_FALSE(is_stable(p, over(p, {"a"}, {"p", "q"})));
    EXPECT_FALSE(is_stable(p, over(p, {"a"}, {"p"})));
    EXPECT_TRUE(stable_models(p, make_domain({"a"})).empty());
}

TEST(IsStable, EmptyProgram)
{
    EDisjProgram p;
    EXPECT_TRUE(is_stable(p, make_domain({"a"})));
}

TEST(StableModels, POrQ)
{
    EXPECT_EQ(model_texts(stable_models(parse_edlp("p. p ; q."), make_domain({"a"}))),
              (std::set<std::set<std::string>>{{"p"}}));
}

TEST(StableModels, Lottery)
{
    auto models = stable_models(parse_edlp(lottery_program()), make_domain({"a", "b"}));
    EXPECT_EQ(model_texts(models), (std::set<std::set<std::string>>{{"lottery", "passtest(a)", "permres(a)"}}));
}

TEST(StableModels, EvenNegativeLoop)
{
    auto p = parse_edlp(read_file(std::string(CLOG_CORPUS) + "/negcycle.edlp"));
    EXPECT_EQ(model_texts(stable_models(p, make_domain({"a"}))), (std::set<std::set<std::string>>{{"p"}, {"p'"}}));
}

TEST(StableModels, Robot)
{
    auto p = parse_edlp(read_file(std::string(CLOG_CORPUS) + "/robot.edlp"));
    auto models = model_texts(stable_models(p, make_domain({"d1", "d2", "d3"})));
    EXPECT_EQ(models, (std::set<std::set<std::string>>{
                          {"open(d1)", "open(d2)", "chosen(d1)", "leave(d1)"},
                          {"open(d1)", "open(d2)", "chosen(d2)", "leave(d2)"},
                      }));
}

TEST(StableModels, AtomGuardNamesTheCount)
{
    auto p = parse_edlp("s(X, Y, Z) :- q(X). q(X) :- r(X). r(W).");
    try {
        (void)stable_models(p, make_domain({"a", "b", "c"}));
        FAIL() << "guard not raised";
    } catch (const GuardError& e) {
        EXPECT_NE(std::string(e.what()).find("33"), std::string::npos) << e.what();
    }
}

// Properties over generated programs: every returned model satisfies the
// constraints, is minimal, and the set agrees with is_stable on every subset
// of the head atoms.
TEST(StableModels, AgreeWithIsStableOnTheWholeLattice)
{
    auto cfg = testkit::generator_config();
    auto shape = testkit::program_shape(cfg.at("programs"));
    testkit::Rng rng(cfg.at("seed").get<std::uint64_t>() + 7);
    int checked = 0;
    for (int round = 0; round < 120; ++round) {
        auto p = testkit::random_program(rng, shape);
        auto domain = testkit::program_domain(rng.uniform(1, 2));
        std::set<GroundAtom> heads;
        for (const auto& g : ground_program(p, domain))
            heads.insert(g.head.begin(), g.head.end());
        if (heads.size() > 10)
            continue;
        std::vector<GroundAtom> universe(heads.begin(), heads.end());
        auto models = model_texts(stable_models(p, domain));
        for (std::size_t mask = 0; mask < (std::size_t{1} << universe.size()); ++mask) {
            std::vector<GroundAtom> subset;
            for (std::size_t i = 0; i < universe.size(); ++i)
                if (mask >> i & 1)
                    subset.push_back(universe[i]);
            auto m = over(p, domain, subset);
            EXPECT_EQ(is_stable(p, m), models.contains(texts(m))) << render(p) << texts(m).size();
        }
        for (const auto& m : stable_models(p, domain)) {
            auto atoms = m.atoms();
            for (const auto& g : ground_program(p, domain)) {
                if (!g.head.empty())
                    continue;
                bool body = std::all_of(g.positive.begin(), g.positive.end(), [&](auto& a) { return m.holds(a); }) &&
                            std::none_of(g.negative.begin(), g.negative.end(), [&](auto& a) { return m.holds(a); });
                EXPECT_FALSE(body) << "constraint violated";
            }
            for (std::size_t drop = 0; drop < atoms.size(); ++drop) {
                auto smaller = atoms;
                smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(drop));
                EXPECT_FALSE(models.contains(texts(over(p, domain, smaller))));
            }
        }
        ++checked;
    }
    EXPECT_GT(checked, 60);
}
