#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "corpus.hpp"
#include "sysrel/oracle.hpp"
#include "sysrel/transducer.hpp"

using namespace sysrel;
using corpus::kAbsorb;
using corpus::kPad;

namespace {

const Alphabet omega = corpus::omega4();

Word w4(const std::string& text) { return corpus::w(omega, text); }

/// Engine-side image restricted to |y| <= bound, as a set of words.
std::set<Word> engine_image(const SysTransducer& t, const Word& x, std::size_t bound) {
    std::set<Word> out;
    for (const auto& letters : enumerate_language(image_nfa(t, x), bound))
        out.insert(eta_normalize(t.alphabet(), letters));
    return out;
}

std::set<Word> oracle_image(const SysTransducer& t, const Word& x, std::size_t bound) {
    oracle::SimConfig cfg;
    cfg.pad_extension = bound > x.size() ? bound - x.size() : 0;
    cfg.max_output_len = bound;
    return oracle::brute_image(t, x, cfg);
}

} // namespace

TEST_CASE("identity machine is valid with all states final") {
    auto report = validate(corpus::id4());
    CHECK(report.is_valid);
    CHECK(report.final_states == std::set<std::string>{"id"});
}

TEST_CASE("missing transitions are totality violations") {
    SysTransducer t(omega, {"q"}, "q");
    t.add_transition("q", "a", "a", "q");
    t.add_transition("q", kPad, kPad, "q");
    t.add_transition("q", kAbsorb, kAbsorb, "q");
    auto report = validate(t);
    CHECK_FALSE(report.is_valid);
    CHECK(report.totality_violations ==
          std::vector<std::pair<std::string, std::string>>{{"q", "b"}});
}

TEST_CASE("pad loops emitting letters are pad-cycle violations") {
    SysTransducer t(omega, {"q"}, "q");
    for (const auto& letter : {"a", "b"})
        t.add_transition("q", letter, letter, "q");
    t.add_transition("q", kAbsorb, kAbsorb, "q");
    t.add_transition("q", kPad, "a", "q");
    auto report = validate(t);
    CHECK_FALSE(report.is_valid);
    REQUIRE(report.pad_cycle_violations.size() == 1);
    CHECK(report.pad_cycle_violations[0].in == omega.pad_index());
    CHECK(report.pad_cycle_violations[0].out == omega.index("a"));
    CHECK_THROWS_AS(pair_member(t, w4("a"), w4("a")), ValidationError);
}

TEST_CASE("only unreachable states escape the checks") {
    SysTransducer t(omega, {"q", "dead"}, "q");
    for (const auto& letter : omega.letters())
        t.add_transition("q", letter, letter, "q");
    // dead state has no transitions at all, but is unreachable
    CHECK(validate(t).is_valid);
}

TEST_CASE("final states of the push machine") {
    auto report = validate(corpus::push_a());
    CHECK(report.is_valid);
    CHECK(report.final_states == std::set<std::string>{"done", "sink"});
}

TEST_CASE("validation matches brute-force eta-finiteness on total machines") {
    // simulate every short input padded out to |Q|+3 letters and look for a
    // run that emits a non-pad letter while revisiting a state on pad input
    auto grows_inside_pad_loop = [](const SysTransducer& t) {
        for (const auto& x : all_words(t.alphabet(), 3)) {
            std::size_t span = x.size() + t.state_count() + 3;
            auto xs = pad_to(t.alphabet(), x, span);
            struct Frame {
                int state;
                std::size_t depth;
                std::vector<std::pair<int, bool>> seen;  // (state, emitted non-pad since)
            };
            std::vector<Frame> stack{{t.initial(), 0, {{t.initial(), false}}}};
            while (!stack.empty()) {
                Frame f = stack.back();
                stack.pop_back();
                if (f.depth == span) continue;
                int in = t.alphabet().index(xs[f.depth]);
                for (const auto& tr : t.transitions()) {
                    if (tr.from != f.state || tr.in != in) continue;
                    bool emits = tr.out != t.alphabet().pad_index();
                    bool in_pad_phase = f.depth >= x.size();
                    Frame next{tr.to, f.depth + 1, f.seen};
                    if (in_pad_phase) {
                        for (auto& [state, grew] : next.seen) {
                            if (emits) grew = true;
                            if (state == tr.to && grew) return true;
                        }
                        next.seen.emplace_back(tr.to, false);
                    } else {
                        next.seen = {{tr.to, false}};
                    }
                    stack.push_back(std::move(next));
                }
            }
        }
        return false;
    };

    for (const auto& [name, machine] : corpus::shared_machines()) {
        INFO(name);
        CHECK(validate(machine).is_valid);
        CHECK_FALSE(grows_inside_pad_loop(machine));
    }

    SysTransducer bad(omega, {"q", "r"}, "q");
    for (const auto& letter : omega.letters()) {
        bad.add_transition("q", letter, letter, "r");
        bad.add_transition("r", letter, letter == kPad ? "a" : letter, "q");
    }
    CHECK_FALSE(validate(bad).is_valid);
    CHECK(grows_inside_pad_loop(bad));
}

TEST_CASE("identity pairs") {
    CHECK(pair_member(corpus::id4(), w4("a b"), w4("a b")));
    CHECK_FALSE(pair_member(corpus::id4(), w4("a b"), w4("a")));
    CHECK(pair_member(corpus::id4(), Word{}, Word{}));
}

TEST_CASE("push machine appends one letter") {
    CHECK(pair_member(corpus::push_a(), w4("a b"), w4("a b a")));
    CHECK_FALSE(pair_member(corpus::push_a(), w4("a b"), w4("a b b")));
    CHECK_FALSE(pair_member(corpus::push_a(), w4("a b"), w4("a b")));
}

TEST_CASE("pair_member agrees with the brute-force oracle") {
    for (const auto& [name, machine] : corpus::shared_machines()) {
        INFO(name);
        for (const auto& x : all_words(omega, 2)) {
            std::size_t bound = x.size() + 4;
            auto expected = oracle_image(machine, x, bound);
            for (const auto& y : all_words(omega, bound))
                CHECK(pair_member(machine, x, y) == (expected.count(y) > 0));
        }
    }
}

TEST_CASE("image of the identity is a singleton") {
    Nfa image = image_nfa(corpus::id4(), w4("a b"));
    CHECK(is_finite(image));
    CHECK(engine_image(corpus::id4(), w4("a b"), 6) == std::set<Word>{w4("a b")});
}

TEST_CASE("absorb-free image of push") {
    Nfa clean = right_strip_filter(image_nfa(corpus::push_a(), w4("a b")), kAbsorb);
    std::set<Word> words;
    for (const auto& letters : enumerate_language(clean, 8))
        words.insert(eta_normalize(omega, letters));
    CHECK(words == std::set<Word>{w4("a b a")});
}

TEST_CASE("delay machine has an infinite image") {
    Nfa image = image_nfa(corpus::loopy(), w4("a"));
    CHECK_FALSE(is_finite(image));
    // every enumerated member of the pad-delayed family is accepted
    auto members = oracle_image(corpus::loopy(), w4("a"), 6);
    CHECK(members.count(w4("a")) == 1);
    std::string delayed = kPad + " " + kPad + " a";
    CHECK(members.count(w4(delayed)) == 1);
    for (const auto& y : members)
        CHECK(word_in(image, y.letters()));
}

TEST_CASE("image agrees with the oracle on short inputs") {
    for (const auto& [name, machine] : corpus::shared_machines()) {
        INFO(name);
        for (const auto& x : all_words(omega, 2)) {
            std::size_t bound = x.size() + 5;
            CHECK(engine_image(machine, x, bound) == oracle_image(machine, x, bound));
        }
    }
}

TEST_CASE("image of a language unions the per-word images") {
    Nfa inputs = nfa_union(singleton_nfa(omega.tokens(), {"a"}),
                           singleton_nfa(omega.tokens(), {"b", "b"}));
    Nfa image = image_of_language(corpus::push_a(), inputs);
    CHECK(word_in(image, {"a", "a"}));
    CHECK(word_in(image, {"b", "b", "a"}));
    CHECK_FALSE(word_in(image, {"a", "b", "a"}));
}

TEST_CASE("composition with the identity is neutral") {
    for (const auto& [name, machine] : corpus::shared_machines()) {
        INFO(name);
        SysTransducer left = compose(identity_transducer(omega), machine);
        SysTransducer right = compose(machine, identity_transducer(omega));
        for (const auto& x : all_words(omega, 2))
            for (const auto& y : all_words(omega, 2)) {
                bool expected = pair_member(machine, x, y);
                CHECK(pair_member(left, x, y) == expected);
                CHECK(pair_member(right, x, y) == expected);
            }
    }
}

TEST_CASE("composed push machines append two letters") {
    SysTransducer ab = compose(corpus::push_a(), corpus::push_letter("b"));
    CHECK(validate(ab).is_valid);
    CHECK(pair_member(ab, w4("b"), w4("b a b")));
    CHECK_FALSE(pair_member(ab, w4("b"), w4("b a a")));
}

TEST_CASE("absorb-free image of a composition is the relational composition") {
    auto machines = corpus::shared_machines();
    for (const auto& [n1, t1] : machines) {
        for (const auto& [n2, t2] : machines) {
            INFO(n1 << " ; " << n2);
            SysTransducer c = compose(t1, t2);
            CHECK(validate(c).is_valid);
            for (const auto& x : all_words(omega, 1)) {
                // none of the shared machines shrinks eta-length, so mids
                // never need to exceed the output bound
                std::size_t bound = x.size() + 6;
                std::size_t mid_bound = bound;
                std::set<Word> expected;
                for (const auto& mid : oracle_image(t1, x, mid_bound))
                    for (const auto& y : oracle_image(t2, mid, bound))
                        expected.insert(y);
                std::set<Word> clean_expected;
                for (const auto& y : expected)
                    if (std::find(y.letters().begin(), y.letters().end(), kAbsorb) ==
                        y.letters().end())
                        clean_expected.insert(y);
                std::set<Word> got;
                for (const auto& letters :
                     enumerate_language(right_strip_filter(image_nfa(c, x), kAbsorb), bound))
                    got.insert(eta_normalize(omega, letters));
                CHECK(got == clean_expected);
            }
        }
    }
}

TEST_CASE("composition is associative on samples") {
    SysTransducer l =
        compose(compose(corpus::push_a(), corpus::flip_tail()), corpus::inc());
    SysTransducer r =
        compose(corpus::push_a(), compose(corpus::flip_tail(), corpus::inc()));
    for (const auto& x : all_words(omega, 2))
        for (const auto& y : all_words(omega, 3))
            CHECK(pair_member(l, x, y) == pair_member(r, x, y));
}

TEST_CASE("composition rejects different alphabets") {
    CHECK_THROWS_AS(compose(corpus::id4(), identity_transducer(corpus::omega3())), Error);
}

TEST_CASE("diamond of identities is the product identity") {
    ProductAlphabet prod(omega, omega);
    SysTransducer d = diamond(corpus::id4(), corpus::id4(), prod);
    CHECK(validate(d).is_valid);
    for (const auto& x1 : all_words(omega, 1))
        for (const auto& x2 : all_words(omega, 1))
            for (const auto& y1 : all_words(omega, 1))
                for (const auto& y2 : all_words(omega, 1))
                    CHECK(pair_member(d, prod.zip(x1, x2), prod.zip(y1, y2)) ==
                          (x1 == y1 && x2 == y2));
}

TEST_CASE("diamond pairs decompose into the factors") {
    ProductAlphabet prod(omega, omega);
    std::vector<Word> sample{Word{}, w4("a"), w4("b"), w4("a b"), w4("b a"), w4("a a")};
    std::vector<std::pair<std::string, SysTransducer>> factors{
        {"push_a", corpus::push_a()}, {"flip", corpus::flip_tail()}, {"inc", corpus::inc()}};
    for (const auto& [n1, t1] : factors) {
        for (const auto& [n2, t2] : factors) {
            INFO(n1 << " x " << n2);
            SysTransducer d = diamond(t1, t2, prod);
            CHECK(validate(d).is_valid);
            for (const auto& x1 : sample)
                for (const auto& x2 : sample)
                    for (const auto& y1 : sample)
                        for (const auto& y2 : sample)
                            CHECK(pair_member(d, prod.zip(x1, x2), prod.zip(y1, y2)) ==
                                  (pair_member(t1, x1, y1) && pair_member(t2, x2, y2)));
        }
    }
}

TEST_CASE("diamond with an absorb-router factor has no clean pairs") {
    ProductAlphabet prod(omega, omega);
    SysTransducer d = diamond(corpus::id4(), absorb_router(omega), prod);
    auto clean = [](const Word& word) {
        for (const auto& letter : word.letters())
            if (letter == kAbsorb) return false;
        return true;
    };
    for (const auto& x1 : all_words(omega, 1))
        for (const auto& x2 : all_words(omega, 1))
            for (const auto& y1 : all_words(omega, 1))
                for (const auto& y2 : all_words(omega, 1)) {
                    if (!clean(y2)) continue;  // the router marks every run
                    CHECK_FALSE(pair_member(d, prod.zip(x1, x2), prod.zip(y1, y2)));
                }
}

TEST_CASE("product alphabet round trip and zipping") {
    ProductAlphabet prod(omega, omega);
    CHECK(prod.alphabet().pad() == prod.token(kPad, kPad));
    CHECK(prod.components(prod.token("a", "b")) == std::make_pair(std::string("a"),
                                                                  std::string("b")));
    Word z = prod.zip(w4("a"), w4("b b"));
    REQUIRE(z.size() == 2);
    CHECK(z.letters()[0] == prod.token("a", "b"));
    CHECK(z.letters()[1] == prod.token(kPad, "b"));
    CHECK(prod.zip(Word{}, Word{}).empty());
}
