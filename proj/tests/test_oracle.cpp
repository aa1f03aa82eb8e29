#include <catch2/catch_amalgamated.hpp>

#include "corpus.hpp"
#include "sysrel/oracle.hpp"
#include "sysrel/projection.hpp"

using namespace sysrel;
using corpus::kPad;

namespace {

const Alphabet omega = corpus::omega4();

} // namespace

TEST_CASE("brute pairs of the identity are the diagonal") {
    oracle::SimConfig cfg;
    cfg.max_input_len = 2;
    auto pairs = oracle::brute_pairs(corpus::id4(), cfg);
    std::set<WordPair> expected;
    for (const auto& x : all_words(omega, 2))
        expected.insert(WordPair{x, x});
    CHECK(pairs == expected);
}

TEST_CASE("brute pairs respect the configured bounds") {
    oracle::SimConfig cfg;
    cfg.max_input_len = 2;
    cfg.pad_extension = 3;
    cfg.max_output_len = 4;
    for (const auto& [name, machine] : corpus::shared_machines()) {
        INFO(name);
        for (const auto& pair : oracle::brute_pairs(machine, cfg)) {
            CHECK(pair.left.size() <= 2);
            CHECK(pair.right.size() <= pair.left.size() + 3);
        }
    }
}

TEST_CASE("brute sigma of the identity is the identity relation") {
    for (int n = 1; n <= 3; ++n)
        CHECK(oracle::brute_sigma(corpus::id4(), n) == identity_relation(omega, n));
}

TEST_CASE("brute sigma of a machine without initial transitions is empty") {
    SysTransducer t(omega, {"q", "r"}, "q");
    for (const auto& letter : omega.letters())
        t.add_transition("r", letter, letter, "r");
    CHECK(oracle::brute_sigma(t, 1) == FiniteRelation(1, {}));
    CHECK(oracle::brute_sigma(t, 2) == FiniteRelation(2, {}));
}

TEST_CASE("the empty chain projects to the identity") {
    CHECK(oracle::brute_sigma_chain(omega, {}, 2) == identity_relation(omega, 2));
}

TEST_CASE("brute language agrees with engine membership") {
    oracle::SimConfig cfg;
    for (const auto& [name, sca] : corpus::corpus_scas()) {
        INFO(name);
        auto words = oracle::brute_language(sca, 4, cfg);
        for (std::size_t len = 0; len <= 4; ++len)
            for (const auto& w : outer_words_of_length(sca.base.outer, len)) {
                CHECK(words.count(w) == (member(sca, w) ? 1u : 0u));
                CHECK(oracle::brute_member(sca, w, cfg) == member(sca, w));
            }
    }
}

TEST_CASE("brute language of an empty accepting relation is empty") {
    oracle::SimConfig cfg;
    CHECK(oracle::brute_language(corpus::sca_empty(), 4, cfg).empty());
}

TEST_CASE("brute language grows with the length bound") {
    oracle::SimConfig cfg;
    Sca anbn = corpus::anbn().sca;
    auto small = oracle::brute_language(anbn, 2, cfg);
    auto large = oracle::brute_language(anbn, 4, cfg);
    for (const auto& w : small)
        CHECK(large.count(w) == 1);
    CHECK(small.size() < large.size());
}

TEST_CASE("brute closure matches the engine closure") {
    for (const auto& [name, semi] : corpus::corpus_semiscas()) {
        INFO(name);
        const Alphabet inner = semi.inner();
        for (int n = 1; n <= 2; ++n) {
            std::vector<FiniteRelation> gens;
            for (const auto& letter : semi.outer.tokens())
                gens.push_back(sigma_n(semi.machine(letter), n));
            ClosureResult engine = closure_plus(inner, gens);
            oracle::BruteClosure brute = oracle::brute_closure(inner, gens, 64);
            CHECK(engine.relation == brute.relation);
            CHECK(engine.rounds == brute.rounds);
        }
    }
}

TEST_CASE("brute closure round counting") {
    Alphabet abc({"a", "b", "c", kPad}, kPad);
    FiniteRelation chain(1, {{{"a"}, {"b"}}, {{"b"}, {"c"}}});
    CHECK(oracle::brute_closure(abc, {chain}, 32).rounds == 2);

    FiniteRelation idem(1, {{{"a"}, {"a"}}, {{"b"}, {"a"}}});
    CHECK(oracle::brute_closure(abc, {idem}, 32).rounds == 1);
}
