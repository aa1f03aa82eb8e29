// Acceptance suite: runs the ten headline checks end to end and prints one
// pass/fail line per criterion. All comparisons are exact; the enumeration
// bounds are spelled out inline.

#include <algorithm>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "sysrel/approx.hpp"
#include "sysrel/distance.hpp"
#include "sysrel/encoders.hpp"
#include "sysrel/oracle.hpp"
#include "sysrel/projection.hpp"
#include "sysrel/sca.hpp"

using namespace sysrel;
using corpus::kAbsorb;
using corpus::kPad;

namespace {

struct Criterion {
    int fails = 0;
    std::ostringstream detail;

    void expect(bool ok, const std::string& what) {
        if (!ok) {
            ++fails;
            if (fails <= 3)
                detail << (fails == 1 ? "" : "; ") << what;
        }
    }
};

std::set<Word> engine_image(const SysTransducer& t, const Word& x, std::size_t bound,
                            bool absorb_free) {
    Nfa image = image_nfa(t, x);
    if (absorb_free)
        image = right_strip_filter(image, *t.alphabet().absorb());
    std::set<Word> out;
    for (const auto& letters : enumerate_language(image, bound))
        out.insert(eta_normalize(t.alphabet(), letters));
    return out;
}

std::set<Word> oracle_image(const SysTransducer& t, const Word& x, std::size_t bound) {
    oracle::SimConfig cfg;
    cfg.pad_extension = bound > x.size() ? bound - x.size() : 0;
    cfg.max_output_len = bound;
    return oracle::brute_image(t, x, cfg);
}

bool absorb_free_word(const Word& w) {
    return std::find(w.letters().begin(), w.letters().end(), kAbsorb) ==
           w.letters().end();
}

std::vector<std::pair<std::string, SysTransducer>> criterion_machines() {
    auto machines = corpus::shared_machines();
    PdaEncoding enc = corpus::anbn();
    machines.emplace_back("anbn_a", enc.sca.base.machine("a"));
    machines.emplace_back("anbn_b", enc.sca.base.machine("b"));
    return machines;
}

Criterion criterion_oracle_equivalence() {
    Criterion c;
    for (const auto& [name, machine] : criterion_machines()) {
        const Alphabet& alphabet = machine.alphabet();
        for (const auto& x : all_words(alphabet, 3)) {
            std::size_t bound = x.size() + machine.state_count();
            auto expected = oracle_image(machine, x, bound);
            c.expect(engine_image(machine, x, bound, false) == expected,
                     name + ": image mismatch on \"" + x.str() + "\"");
            for (const auto& y : expected)
                c.expect(pair_member(machine, x, y),
                         name + ": member misses (" + x.str() + ", " + y.str() + ")");
            for (const auto& y :
                 all_words(alphabet, std::min<std::size_t>(bound, x.size() + 2)))
                c.expect(pair_member(machine, x, y) == (expected.count(y) > 0),
                         name + ": member verdict on (" + x.str() + ", " + y.str() +
                             ")");
        }
    }
    return c;
}

Criterion criterion_composition_closure() {
    Criterion c;
    auto machines = criterion_machines();
    for (const auto& [n1, t1] : machines) {
        for (const auto& [n2, t2] : machines) {
            if (!(t1.alphabet() == t2.alphabet())) continue;
            SysTransducer composed = compose(t1, t2);
            for (const auto& x : all_words(t1.alphabet(), 3)) {
                // mids never need more than one letter beyond the target
                // bound: no corpus machine shrinks eta-length by more than 1
                std::size_t bound = x.size() + 6;
                std::size_t mid_bound = bound + 2;
                std::set<Word> expected;
                for (const auto& mid : oracle_image(t1, x, mid_bound))
                    for (const auto& z : oracle_image(t2, mid, bound))
                        if (z.size() <= bound && absorb_free_word(z))
                            expected.insert(z);
                c.expect(engine_image(composed, x, bound, true) == expected,
                         n1 + ";" + n2 + " image mismatch on \"" + x.str() + "\"");
            }
        }
    }
    return c;
}

Criterion criterion_sigma_homomorphism() {
    Criterion c;
    auto machines = criterion_machines();
    for (const auto& [n1, t1] : machines)
        for (const auto& [n2, t2] : machines) {
            if (!(t1.alphabet() == t2.alphabet())) continue;
            SysTransducer composed = compose(t1, t2);
            for (int n = 1; n <= 3; ++n)
                c.expect(sigma_n(composed, n) ==
                             compose_fr(sigma_n(t1, n), sigma_n(t2, n)),
                         n1 + ";" + n2 + " at level " + std::to_string(n));
        }
    for (const auto& [name, semi] : corpus::corpus_semiscas()) {
        const Alphabet inner = semi.inner();
        for (int n = 1; n <= 3; ++n) {
            std::vector<FiniteRelation> gens;
            for (const auto& letter : semi.outer.tokens())
                gens.push_back(sigma_n(semi.machine(letter), n));
            c.expect(closure_plus(inner, gens).relation ==
                         oracle::brute_closure(inner, gens, 256).relation,
                     name + " closure at level " + std::to_string(n));
        }
    }
    return c;
}

Criterion criterion_regular_chi() {
    Criterion c;
    for (const auto& [name, semi] : corpus::corpus_semiscas()) {
        const Alphabet inner = semi.inner();
        for (int n = 1; n <= 3; ++n) {
            MonoidAutomaton m = build_monoid_automaton(semi.outer, semi.phi, n);
            for (std::size_t len = 0; len <= 6; ++len)
                for (const auto& w : outer_words_of_length(semi.outer, len)) {
                    std::vector<const SysTransducer*> chain;
                    for (const auto& letter : w)
                        chain.push_back(&semi.machine(letter));
                    c.expect(m.states[static_cast<std::size_t>(m.state_on(w))] ==
                                 oracle::brute_sigma_chain(inner, chain, n),
                             name + " level " + std::to_string(n) + " word \"" +
                                 outer_str(w) + "\"");
                }
        }
    }
    // the chi automaton realizes exactly the per-word membership of a pair
    PdaEncoding enc = corpus::anbn();
    const Alphabet& inner = enc.inner;
    const WordPair& target = enc.sca.accepting.front();
    for (int n = 1; n <= 3; ++n) {
        auto u = pad_to(inner, target.left, static_cast<std::size_t>(n));
        auto v = pad_to(inner, target.right, static_cast<std::size_t>(n));
        Nfa chi = chi_nfa(enc.sca.base.outer, enc.sca.base.phi, u, v);
        for (std::size_t len = 0; len <= 6; ++len)
            for (const auto& w : outer_words_of_length(enc.sca.base.outer, len)) {
                std::vector<const SysTransducer*> chain;
                for (const auto& letter : w)
                    chain.push_back(&enc.sca.base.machine(letter));
                c.expect(word_in(chi, w) ==
                             oracle::brute_sigma_chain(inner, chain, n).contains(u, v),
                         "chi vs projection at level " + std::to_string(n));
            }
    }
    return c;
}

Criterion criterion_approx_monotone() {
    Criterion c;
    oracle::SimConfig cfg;
    for (const auto& [name, sca] : corpus::corpus_scas()) {
        std::vector<Nfa> levels;
        for (int n = 1; n <= 3; ++n)
            levels.push_back(approx_language(sca, n));
        for (int n = 1; n <= 2; ++n)
            c.expect(includes(levels[static_cast<std::size_t>(n)],
                              levels[static_cast<std::size_t>(n - 1)]),
                     name + " not decreasing at level " + std::to_string(n));
        auto members = oracle::brute_language(sca, 6, cfg);
        for (const auto& w : members)
            for (const auto& level : levels)
                c.expect(word_in(level, w), name + " loses member \"" + outer_str(w) +
                                                "\"");
    }
    return c;
}

Criterion criterion_pda_encoding() {
    Criterion c;
    PdaEncoding anbn = corpus::anbn();
    for (std::size_t len = 0; len <= 8; ++len)
        for (const auto& w : outer_words_of_length(anbn.sca.base.outer, len))
            c.expect(member(anbn.sca, w) == corpus::in_anbn(w),
                     "anbn verdict on \"" + outer_str(w) + "\"");

    PdaEncoding enc1 = encode_pda(corpus::abc1_pda());
    PdaEncoding enc2 = encode_pda(corpus::abc2_pda());
    Sca both = intersect_sca(enc1.sca, enc2.sca);
    ProductAlphabet prod(enc1.inner, enc2.inner);

    // prefix-shared sweep to length 9; a subtree is dead once its image has
    // no junk-free word, because the absorbing letters persist through every
    // letter machine
    std::set<std::string> tainted;
    for (const auto& la : enc1.inner.letters())
        for (const auto& lb : enc2.inner.letters())
            if (la == *enc1.inner.absorb() || lb == *enc2.inner.absorb())
                tainted.insert(prod.token(la, lb));
    auto has_clean_word = [&](const Nfa& image) {
        Nfa cleaned = image;
        for (const auto& token : tainted)
            cleaned = right_strip_filter(cleaned, token);
        return !is_empty(cleaned);
    };
    const WordPair& target = both.accepting.front();
    std::set<OuterWord> got;
    OuterWord w;
    std::function<void(const Nfa&)> walk = [&](const Nfa& image) {
        if (word_in(image, target.right.letters()))
            got.insert(w);
        if (w.size() == 9 || !has_clean_word(image)) return;
        for (const auto& letter : both.base.outer.tokens()) {
            w.push_back(letter);
            walk(image_of_language(both.base.machine(letter), image));
            w.pop_back();
        }
    };
    walk(singleton_nfa(both.base.inner().tokens(), target.left.letters()));

    std::set<OuterWord> expected;
    for (std::size_t len = 0; len <= 9; ++len)
        for (const auto& word : outer_words_of_length(both.base.outer, len))
            if (corpus::in_anbncn(word))
                expected.insert(word);
    c.expect(got == expected, "intersection language differs from a^n b^n c^n");

    // spot checks through the public membership entry point
    for (const auto* probe : {"a b c", "a a b b c c", "a a b c", "a b c c", "",
                              "c b a", "a a a b b b c c c"})
        c.expect(member(both, corpus::ow(probe)) ==
                     corpus::in_anbncn(corpus::ow(probe)),
                 std::string("intersection verdict on \"") + probe + "\"");
    return c;
}

Criterion criterion_correct_approximation() {
    Criterion c;
    // finite automaton-of-relations with accepting pair lengths at most k = 2
    Sca fin = corpus::sca_fin();
    Sca universal;
    universal.base.outer = fin.base.outer;
    for (const auto& letter : fin.base.outer.tokens())
        universal.base.phi.emplace(letter, corpus::id4());
    universal.accepting = {WordPair{Word{}, Word{}}};

    const int k = 2;
    for (int n = k + 1; n <= k + 2; ++n)
        c.expect(decide_inclusion_n(fin, universal, n).verdict,
                 "inclusion verdict at level " + std::to_string(n));
    auto estimates = lim_estimate(fin, universal, k + 2);
    for (int n = k + 1; n <= k + 2; ++n)
        c.expect(estimates[static_cast<std::size_t>(n - 1)] == Rational(1),
                 "estimator not constant at level " + std::to_string(n));

    // identity machines with an unreachable diagonal pair: the exact verdict
    // is positive and every level beyond k agrees
    Sca left;
    left.base.outer = TokenSet({"s"});
    left.base.phi.emplace("s", corpus::id4());
    left.accepting = {WordPair{corpus::w(corpus::omega4(), "a"),
                               corpus::w(corpus::omega4(), "a b")}};
    Sca right = left;
    right.accepting.clear();
    std::vector<bool> verdicts;
    for (int n = 1; n <= k + 2; ++n)
        verdicts.push_back(decide_inclusion_n(left, right, n).verdict);
    c.expect(!verdicts[0], "level-1 verdict should still be negative");
    for (int n = k + 1; n <= k + 2; ++n)
        c.expect(verdicts[static_cast<std::size_t>(n - 1)],
                 "stabilized verdict at level " + std::to_string(n));
    return c;
}

Criterion criterion_semidecision() {
    Criterion c;
    PdaEncoding anbn = corpus::anbn();
    SemiSca flip = corpus::sca_flip().base;
    SemiSca push = corpus::sca_push().base;
    SemiSca counter;
    counter.outer = TokenSet({"i"});
    counter.phi.emplace("i", corpus::inc());
    const Alphabet omega = corpus::omega4();
    auto w4 = [&](const std::string& text) { return corpus::w(omega, text); };

    struct Query {
        std::string name;
        SemiSca semi;
        Word x, y;
        Budget budget;
        std::optional<SemiDecisionOutcome::Kind> expect_kind;
    };
    Budget roomy{6, 3, std::nullopt};
    Budget tight{1, 1, std::nullopt};
    using Kind = SemiDecisionOutcome::Kind;
    std::vector<Query> queries = {
        {"push diagonal", push, w4("a b"), w4("a b"), roomy, Kind::Reached},
        {"push epsilon", push, Word{}, Word{}, roomy, Kind::Reached},
        {"push append", push, w4("a"), w4("a a"), roomy, Kind::Reached},
        {"push double append", push, w4("b"), w4("b a a"), roomy, Kind::Reached},
        {"push foreign letter", push, w4("a"), w4("a b"), roomy,
         Kind::EmptyCertificate},
        {"push shrink", push, w4("a a"), w4("a"), roomy, Kind::EmptyCertificate},
        {"flip diagonal", flip, w4("b a"), w4("b a"), roomy, Kind::Reached},
        {"flip single", flip, w4("a b"), w4("a a"), roomy, Kind::Reached},
        {"flip first letter", flip, w4("a b"), w4("b b"), roomy,
         Kind::EmptyCertificate},
        {"flip first letter 2", flip, w4("b"), w4("a"), roomy, Kind::EmptyCertificate},
        {"flip pad first", flip, w4(kPad + " a"), w4("b a"), roomy,
         Kind::EmptyCertificate},
        {"flip grow", flip, w4("a"), w4("a a a"), roomy, Kind::EmptyCertificate},
        {"counter increment", counter, w4("a"), w4("b"), roomy, Kind::Reached},
        {"counter carry", counter, w4("b"), w4("a b"), roomy, Kind::Reached},
        {"counter from zero", counter, Word{}, w4("b"), roomy, Kind::Reached},
        {"counter diagonal", counter, w4("b b"), w4("b b"), roomy, Kind::Reached},
        {"stack pop word", anbn.sca.base, anbn.config("q", {"S"}),
         anbn.config("q", {}), Budget{4, 4, std::nullopt}, Kind::Reached},
        {"stack one push", anbn.sca.base, anbn.config("q", {"S"}),
         anbn.config("q", {"B"}), Budget{4, 4, std::nullopt}, Kind::Reached},
        {"stack tight budget", anbn.sca.base, anbn.config("q", {"S"}),
         anbn.config("q", {}), tight, Kind::Exhausted},
        {"stack level starved", anbn.sca.base, Word{}, anbn.config("q", {}),
         Budget{0, 1, std::nullopt}, Kind::Exhausted},
    };

    c.expect(queries.size() == 20, "query count");
    std::set<Kind> seen;
    for (const auto& query : queries) {
        SemiDecisionOutcome out =
            reach_semidecide(query.semi, query.x, query.y, query.budget);
        seen.insert(out.kind);
        if (query.expect_kind)
            c.expect(out.kind == *query.expect_kind, query.name + ": outcome kind");
        if (out.kind == Kind::Reached) {
            c.expect(member(reach_query(query.semi, query.x, query.y), out.witness),
                     query.name + ": witness fails to re-verify");
        } else if (out.kind == Kind::EmptyCertificate) {
            Sca probe = reach_query(query.semi, query.x, query.y);
            bool contradicted = false;
            for (std::size_t len = 0; len <= 8 && !contradicted; ++len)
                for (const auto& w : outer_words_of_length(query.semi.outer, len))
                    if (member(probe, w)) {
                        contradicted = true;
                        break;
                    }
            c.expect(!contradicted, query.name + ": certificate contradicted");
        }
    }
    c.expect(seen.count(Kind::Reached) == 1, "no query reached");
    c.expect(seen.count(Kind::EmptyCertificate) == 1, "no query certified empty");
    c.expect(seen.count(Kind::Exhausted) == 1, "no query exhausted");
    return c;
}

Criterion criterion_tau_counterexample() {
    Criterion c;
    FiniteRelation r1(2, {{{"a", "b"}, {"b", "a"}}});
    FiniteRelation r2(2, {{{"b", "b"}, {"a", "a"}}});
    c.expect(compose_fr(tau_of(r1, 1), tau_of(r2, 1)) ==
                 FiniteRelation(1, {{{"a"}, {"a"}}}),
             "composed first projections");
    c.expect(tau_of(compose_fr(r1, r2), 1) == FiniteRelation(1, {}),
             "projection of the composition");
    return c;
}

Criterion criterion_distance() {
    Criterion c;
    const Alphabet three = corpus::omega3();
    NormalDistance nd(three);
    auto words = all_words(three, 4);

    // condition 1: pad-prefix dominance, exhaustively
    for (std::size_t n = 1; n <= 4; ++n)
        for (const auto& w : words) {
            if (w.size() < n) continue;
            bool w_padded = true;
            for (std::size_t i = 0; i < n; ++i)
                w_padded = w_padded && w.letters()[i] == kPad;
            if (!w_padded) continue;
            for (const auto& v : words) {
                bool v_padded = v.size() >= n;
                for (std::size_t i = 0; v_padded && i < n; ++i)
                    v_padded = v.letters()[i] == kPad;
                if (!v_padded)
                    c.expect(nd.val(w) > nd.val(v),
                             "dominance: " + w.str() + " vs " + v.str());
            }
        }

    // condition 2, positional form: dist(w, v) < base^-|gcp(w, v)|
    for (const auto& w : words)
        for (const auto& v : words) {
            if (w == v) continue;
            std::size_t g = 0;
            while (g < w.size() && g < v.size() && w.letters()[g] == v.letters()[g])
                ++g;
            std::int64_t denom = 1;
            for (std::size_t i = 0; i < g; ++i)
                denom *= 3;
            c.expect(nd.dist(w, v) < Rational(1, denom),
                     "gcp bound: " + w.str() + " vs " + v.str());
        }

    // condition 3, positional form: dist(w, wx) = val(x) shifted by |w|
    for (const auto& w : words)
        for (const auto& x : words) {
            if (w.size() + x.size() > 4) continue;
            auto letters = w.letters();
            letters.insert(letters.end(), x.letters().begin(), x.letters().end());
            Word wx = eta_normalize(three, letters);
            if (wx.size() != w.size() + x.size()) continue;
            std::int64_t denom = 1;
            for (std::size_t i = 0; i < w.size(); ++i)
                denom *= 3;
            c.expect(nd.dist(w, wx) == nd.val(x) * Rational(1, denom),
                     "suffix valuation: " + w.str() + " + " + x.str());
        }

    // ball convexity under the padded-completion valuation
    for (int n = 1; n <= 3; ++n)
        for (const auto& center : words) {
            auto prefix = pad_to(three, center, static_cast<std::size_t>(n));
            Rational lo(1), hi(0);
            for (const auto& v : words) {
                if (pad_to(three, v, static_cast<std::size_t>(n)) != prefix) continue;
                Rational value = nd.val_padded(v);
                if (value < lo) lo = value;
                if (hi < value) hi = value;
            }
            for (const auto& outside : words) {
                if (pad_to(three, outside, static_cast<std::size_t>(n)) == prefix)
                    continue;
                Rational value = nd.val_padded(outside);
                c.expect(!(lo < value && value < hi),
                         "ball around " + center.str() + " at level " +
                             std::to_string(n));
            }
        }
    return c;
}

} // namespace

int main() {
    struct Entry {
        const char* name;
        Criterion (*run)();
    };
    const Entry entries[] = {
        {"C1 oracle equivalence of membership and images", criterion_oracle_equivalence},
        {"C2 composition closure against oracle images", criterion_composition_closure},
        {"C3 projection homomorphism and closure", criterion_sigma_homomorphism},
        {"C4 chi languages equal per-word projections", criterion_regular_chi},
        {"C5 approximations decrease and contain the language", criterion_approx_monotone},
        {"C6 pushdown encoding and intersection language", criterion_pda_encoding},
        {"C7 correct approximation of finite automata", criterion_correct_approximation},
        {"C8 semi-decision outcomes are sound", criterion_semidecision},
        {"C9 first-coordinate projection counterexample", criterion_tau_counterexample},
        {"C10 normal distance layer", criterion_distance},
    };
    int failed = 0;
    for (const auto& entry : entries) {
        Criterion c = entry.run();
        if (c.fails == 0) {
            std::cout << "[PASS] " << entry.name << "\n";
        } else {
            ++failed;
            std::cout << "[FAIL] " << entry.name << " (" << c.fails
                      << " checks failed: " << c.detail.str() << ")\n";
        }
    }
    std::cout << (failed == 0 ? "all criteria passed" : "criteria failed") << "\n";
    return failed;
}
