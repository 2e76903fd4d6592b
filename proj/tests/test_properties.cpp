#include "clog/bridge.hpp"
#include "clog/canonical.hpp"
#include "clog/engine.hpp"
#include "clog/evaluate.hpp"
#include "clog/io.hpp"
#include "clog/parser.hpp"
#include "clog/render.hpp"
#include "clog/stable.hpp"

#include "generators.hpp"
#include "oracles.hpp"
#include "suites.hpp"

#include <gtest/gtest.h>

using namespace clog;
using namespace clog::testkit;

namespace {

void expect_ok(const SuiteResult& r, std::size_t min_instances)
{
    EXPECT_GE(r.instances, min_instances);
    EXPECT_EQ(r.violations, 0u);
    for (const auto& f : r.failures)
        ADD_FAILURE() << f;
}

TheoryShape shape()
{
    return theory_shape(generator_config().at("theories"));
}

std::string corpus(const std::string& name)
{
    return std::string(CLOG_CORPUS) + "/" + name;
}

std::set<std::string> texts(const Structure& s)
{
    std::set<std::string> out;
    for (const auto& a : s.atoms())
        out.insert(s.atom_text(a));
    return out;
}

// Events, atom growth and element freshness along one trace.
void expect_wellformed(const ProcessTrace& t)
{
    std::set<EventKey> fired;
    std::set<GroundAtom> atoms;
    std::set<ElementId> domain;
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
        const auto& step = t.steps[i];
        for (const auto& e : step.fired)
            EXPECT_TRUE(fired.insert(e.key).second) << "event fired twice: " << e.label;
        std::set<ElementId> next_domain(step.domain.begin(), step.domain.end());
        EXPECT_TRUE(std::includes(step.atoms.begin(), step.atoms.end(), atoms.begin(), atoms.end()));
        EXPECT_TRUE(std::includes(next_domain.begin(), next_domain.end(), domain.begin(), domain.end()));
        for (auto e : step.new_elements) {
            EXPECT_FALSE(domain.contains(e)) << "element reused";
            EXPECT_TRUE(t.world.element(e).created);
        }
        atoms = step.atoms;
        domain = std::move(next_domain);
    }
}

} // namespace

TEST(Properties, RestrictedQuantifiersMatchTheirDesugaring)
{
    const std::vector<std::string> pool = {"E(x)", "~E(x)", "G(x)", "E(x) & G(x)", "E(x) | F",
                                           "? y: G(y) & y != x", "F", "x = x"};
    for (int size = 1; size <= 3; ++size) {
        for (int mask = 0; mask < (1 << (2 * size + 1)); ++mask) {
            Structure s;
            for (int i = 0; i < size; ++i)
                s.add_element(std::string(1, static_cast<char>('A' + i)));
            s.declare("E", 1);
            s.declare("G", 1);
            s.declare("F", 0);
            for (int i = 0; i < size; ++i) {
                if (mask >> i & 1)
                    s.insert("E", {static_cast<ElementId>(i)});
                if (mask >> (size + i) & 1)
                    s.insert("G", {static_cast<ElementId>(i)});
            }
            if (mask >> (2 * size) & 1)
                s.insert("F", {});
            for (const auto& q : pool)
                for (const auto& a : pool) {
                    EXPECT_EQ(evaluate_formula(*parse_formula("! x [" + q + "]: " + a), s),
                              evaluate_formula(*parse_formula("! x: (" + q + ") => (" + a + ")"), s));
                    EXPECT_EQ(evaluate_formula(*parse_formula("? x [" + q + "]: " + a), s),
                              evaluate_formula(*parse_formula("? x: (" + q + ") & (" + a + ")"), s));
                }
        }
    }
}

TEST(Properties, ClassificationPartitionsTheVocabulary)
{
    Rng rng(suite_seed() + 31);
    auto sh = shape();
    for (int i = 0; i < 200; ++i) {
        sh.allow_new = i % 2;
        auto t = random_theory(rng, sh);
        auto c = classify_symbols(t);
        std::set<std::string> both;
        std::set_intersection(c.endogenous.begin(), c.endogenous.end(), c.exogenous.begin(), c.exogenous.end(),
                              std::inserter(both, both.end()));
        EXPECT_TRUE(both.empty());
        std::set<std::string> all = c.endogenous;
        all.insert(c.exogenous.begin(), c.exogenous.end());
        std::set<std::string> vocab;
        for (const auto& [p, n] : vocabulary_of(t).predicates)
            vocab.insert(p);
        EXPECT_EQ(all, vocab);
    }
}

TEST(Properties, EvaluationIsDeterministic)
{
    Rng rng(suite_seed() + 37);
    auto sh = shape();
    for (int i = 0; i < 100; ++i) {
        auto weak = fo_weakening(random_theory(rng, sh));
        auto exo = random_exo(rng, sh.exogenous, rng.uniform(1, 3), 0.5);
        for (const auto& [p, n] : sh.endogenous)
            exo.declare(p, n);
        EXPECT_EQ(evaluate_formula(*weak, exo), evaluate_formula(*weak, exo));
    }
}

TEST(Properties, TracesFireOnceGrowAndCreateFreshElements)
{
    Rng rng(suite_seed() + 41);
    auto sh = shape();
    sh.allow_new = true;
    for (int i = 0; i < 150; ++i) {
        auto t = random_theory(rng, sh);
        auto exo = random_exo(rng, sh.exogenous, rng.uniform(1, 3), 0.5);
        expect_wellformed(run_process(t, exo, static_cast<std::uint64_t>(i), 3));
    }
    for (const char* name : {"mail.clog", "president.clog", "nat.clog", "whilenew.clog"}) {
        auto t = parse_clog(read_file(corpus(name)));
        Structure exo;
        if (std::string(name) == "mail.clog")
            exo = load_structure(corpus("mail_two_exo.json"));
        if (std::string(name) == "president.clog")
            exo = load_structure(corpus("president_exo.json"));
        if (std::string(name) == "whilenew.clog")
            exo = load_structure(corpus("whilenew_exo.json"));
        for (int v = 0; v <= 6; ++v)
            if (std::string(name) != "nat.clog" && std::string(name) != "president.clog")
                exo.ensure_element(std::to_string(v));
        for (std::uint64_t seed = 0; seed < 5; ++seed)
            expect_wellformed(run_process(t, exo, seed, 4));
    }
}

TEST(Properties, DistinctBindingsCreateDistinctElements)
{
    auto t = parse_clog(read_file(corpus("president.clog")));
    auto trace = run_process(t, load_structure(corpus("president_exo.json")), 0, 2);
    auto s = trace.state();
    ASSERT_EQ(s.created_ids().size(), 2u);
    std::set<ElementId> presidents;
    for (const auto& args : s.relations().at("PresOf"))
        presidents.insert(args[1]);
    EXPECT_EQ(presidents.size(), 2u);
    for (auto e : presidents)
        EXPECT_TRUE(s.element(e).created);
}

TEST(Properties, AcceptedModelsAreExactlyTheirCSet)
{
    Rng rng(suite_seed() + 43);
    auto sh = shape();
    std::size_t seen = 0;
    for (int i = 0; i < 150; ++i) {
        sh.allow_new = i % 3 == 0;
        auto t = random_theory(rng, sh);
        auto exo = random_exo(rng, sh.exogenous, rng.uniform(1, 2), 0.5);
        auto endo = classify_symbols(t).endogenous;
        for (const auto& m : enumerate_models(t, exo, 1).models) {
            auto v = check_model(t, m, 1);
            ASSERT_TRUE(v.accepted) << render(t) << v.reason;
            ASSERT_TRUE(v.cset);
            std::set<GroundAtom> endo_atoms;
            for (const auto& a : m.atoms())
                if (endo.contains(a.predicate))
                    endo_atoms.insert(a);
            EXPECT_EQ(v.cset->caused, endo_atoms) << render(t);
            ++seen;
        }
    }
    EXPECT_GT(seen, 50u);
}

TEST(Properties, CreatedElementIsNeverTheEarlierSelection)
{
    auto t = as_foclog(parse_clog(read_file(corpus("selnewsel.clog"))));
    auto exo = load_structure(corpus("selnewsel_exo.json"));
    auto candidates = all_candidates(t, exo, 2);
    ASSERT_TRUE(candidates);
    std::size_t accepted = 0;
    for (const auto& c : *candidates) {
        if (!check_model(t, c, 2).accepted)
            continue;
        ++accepted;
        for (const auto& args : c.relations().at("P"))
            EXPECT_FALSE(c.element(args[0]).created);
        EXPECT_EQ(c.size(), 2u);
    }
    EXPECT_EQ(accepted, 2u);
}

TEST(Properties, FOClogModelsAreCausalModelsSatisfyingTheSentences)
{
    Rng rng(suite_seed() + 47);
    auto sh = shape();
    for (int i = 0; i < 120; ++i) {
        auto delta = random_theory(rng, sh);
        auto sentence = fo_weakening(random_theory(rng, sh));
        auto exo = random_exo(rng, sh.exogenous, rng.uniform(1, 3), 0.5);
        FOClogTheory t{delta, {sentence}};
        std::set<CanonicalForm> expected;
        for (const auto& m : enumerate_models(delta, exo, 0).models)
            if (evaluate_formula(*sentence, m))
                expected.insert(canonical_form(m));
        std::set<CanonicalForm> got;
        for (const auto& m : enumerate_models(t, exo, 0).models)
            got.insert(canonical_form(m));
        EXPECT_EQ(got, expected) << render(t);
    }
}

TEST(Properties, SerialAndRoundExecutionAgreeOnDeterministicTheories)
{
    struct Case
    {
        const char* theory;
        const char* exo;
        int ints;
    };
    for (const auto& c : std::vector<Case>{{"bicycle.clog", "bicycle_exo.json", -1},
                                           {"electrician.clog", "electrician_exo.json", -1},
                                           {"president.clog", "president_exo.json", -1},
                                           {"jboss.clog", "jboss_exo.json", -1},
                                           {"whilenew.clog", "whilenew_exo.json", 2},
                                           {"nat_bounded.clog", nullptr, 3}}) {
        auto t = as_foclog(parse_clog(read_file(corpus(c.theory))));
        Structure exo = c.exo ? load_structure(corpus(c.exo)) : Structure{};
        for (int v = 0; v <= c.ints; ++v)
            exo.ensure_element(std::to_string(v));
        auto rounds = canonical_form(run_process(t, exo, 0, 4).state());
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            auto serial = run_serial(t, exo, seed, 4);
            ASSERT_TRUE(serial) << c.theory;
            EXPECT_EQ(canonical_form(*serial), rounds) << c.theory << " seed " << seed;
        }
    }
}

TEST(Properties, AcceptedSerialRunsAreEnumeratedModels)
{
    Rng rng(suite_seed() + 53);
    auto sh = shape();
    std::size_t accepted = 0;
    for (int i = 0; i < 100; ++i) {
        auto t = as_foclog(random_theory(rng, sh));
        auto exo = random_exo(rng, sh.exogenous, rng.uniform(1, 3), 0.5);
        std::set<CanonicalForm> models;
        for (const auto& m : enumerate_models(t, exo, 0).models)
            models.insert(canonical_form(m));
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
            auto s = run_serial(t, exo, seed, 0);
            if (s && check_model(t, *s, 0).accepted) {
                ++accepted;
                EXPECT_TRUE(models.contains(canonical_form(*s))) << render(t);
            }
        }
    }
    EXPECT_GT(accepted, 50u);
}

TEST(Properties, PropositionalOracleAgreesWithCheckModel)
{
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        auto t = random_propositional_theory(suite_seed() + seed, 3);
        auto exo = random_propositional_exo(suite_seed() + seed);
        for (int mask = 0; mask < 8; ++mask) {
            Structure c = exo;
            for (int i = 0; i < 3; ++i) {
                std::string p(1, "PQR"[i]);
                c.declare(p, 0);
                if (mask >> i & 1)
                    c.insert(p, {});
            }
            // Predicates absent from the theory would be exogenous; keep the
            // candidate within the theory's vocabulary.
            auto vocab = vocabulary_of(t);
            bool foreign = false;
            for (const auto& a : c.atoms())
                foreign = foreign || !vocab.has_predicate(a.predicate) && a.predicate != "F" && a.predicate != "G";
            if (foreign)
                continue;
            for (const char* p : {"P", "Q", "R"})
                if (!vocab.has_predicate(p))
                    c.undeclare(p);
            EXPECT_EQ(check_model(t, c, 0).accepted, propositional_model(t, c)) << render(t) << " mask " << mask;
        }
    }
}

TEST(Properties, CrossOracleOnTheCorpus)
{
    expect_ok(corpus_cross_oracle_suite(), 10);
}

TEST(Properties, CrossOracleOnGeneratedTheories)
{
    expect_ok(random_cross_oracle_suite(60), 40);
}

TEST(Properties, WeakeningHoldsInEveryModel)
{
    expect_ok(weakening_suite(100), 100);
}

TEST(Properties, StableModelsAreFOClogModels)
{
    expect_ok(stable_subset_suite(80), 80);
}

TEST(Properties, NonOverlappingProgramsHaveEqualModelSets)
{
    expect_ok(equivalence_suite(40, 4000), 40);
}

TEST(Properties, OpenPredicateIdiom)
{
    auto cfg = generator_config().at("programs");
    auto sh = program_shape(cfg);
    sh.predicates.push_back({"o", 0});
    Rng rng(suite_seed() + 59);
    auto loop = parse_edlp("o :- not o'. o' :- not o.");
    auto choice = parse_edlp("o ; o'.");
    std::size_t checked = 0;
    for (int attempt = 0; attempt < 3000 && checked < 60; ++attempt) {
        auto base = random_program(rng, sh);
        if (base.head_predicates().contains("o"))
            continue;
        auto with_loop = base;
        with_loop.rules.insert(with_loop.rules.end(), loop.rules.begin(), loop.rules.end());
        auto with_choice = base;
        with_choice.rules.insert(with_choice.rules.end(), choice.rules.begin(), choice.rules.end());
        auto domain = program_domain(rng.uniform(1, 2));
        if (!analyze(with_choice, domain).non_overlapping)
            continue;
        ++checked;
        std::set<std::set<std::string>> a, b;
        for (const auto& m : stable_models(with_loop, domain))
            a.insert(texts(m));
        for (const auto& m : stable_models(with_choice, domain))
            b.insert(texts(m));
        EXPECT_EQ(a, b) << render(base);
    }
    EXPECT_GE(checked, 60u);
}
