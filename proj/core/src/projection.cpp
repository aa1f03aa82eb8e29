#include "sysrel/projection.hpp"

#include <algorithm>
#include <deque>

#include "sysrel/error.hpp"

namespace sysrel {

FiniteRelation::FiniteRelation(int level, std::vector<std::pair<LetterSeq, LetterSeq>> pairs)
    : level_(level), pairs_(std::move(pairs)) {
    if (level < 0)
        throw Error("finite relation: negative level");
    for (const auto& [u, v] : pairs_)
        if (u.size() != static_cast<std::size_t>(level) ||
            v.size() != static_cast<std::size_t>(level))
            throw Error("finite relation: pair component length differs from level");
    std::sort(pairs_.begin(), pairs_.end());
    pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

bool FiniteRelation::contains(const LetterSeq& u, const LetterSeq& v) const {
    return std::binary_search(pairs_.begin(), pairs_.end(), std::make_pair(u, v));
}

FiniteRelation identity_relation(const Alphabet& alphabet, int n) {
    std::vector<LetterSeq> words{{}};
    for (int i = 0; i < n; ++i) {
        std::vector<LetterSeq> next;
        for (const auto& stem : words)
            for (const auto& letter : alphabet.letters()) {
                auto w = stem;
                w.push_back(letter);
                next.push_back(std::move(w));
            }
        words = std::move(next);
    }
    std::vector<std::pair<LetterSeq, LetterSeq>> pairs;
    pairs.reserve(words.size());
    for (const auto& w : words)
        pairs.emplace_back(w, w);
    return FiniteRelation(n, std::move(pairs));
}

FiniteRelation compose_fr(const FiniteRelation& s, const FiniteRelation& t) {
    if (s.level() != t.level())
        throw Error("compose_fr: level mismatch");
    std::map<LetterSeq, std::vector<const LetterSeq*>> by_left;
    for (const auto& [v, w] : t.pairs())
        by_left[v].push_back(&w);
    std::vector<std::pair<LetterSeq, LetterSeq>> pairs;
    for (const auto& [u, v] : s.pairs()) {
        auto it = by_left.find(v);
        if (it == by_left.end()) continue;
        for (const LetterSeq* w : it->second)
            pairs.emplace_back(u, *w);
    }
    return FiniteRelation(s.level(), std::move(pairs));
}

FiniteRelation tau_of(const FiniteRelation& s, int i) {
    if (i < 1 || i > s.level())
        throw Error("tau_of: coordinate out of range");
    std::vector<std::pair<LetterSeq, LetterSeq>> pairs;
    for (const auto& [u, v] : s.pairs())
        pairs.emplace_back(LetterSeq{u[static_cast<std::size_t>(i - 1)]},
                           LetterSeq{v[static_cast<std::size_t>(i - 1)]});
    return FiniteRelation(1, std::move(pairs));
}

FiniteRelation sigma_n(const SysTransducer& t, int n) {
    require_valid(t);
    if (n < 1)
        throw Error("sigma_n: level must be at least 1");
    // frontier of distinct (state, input prefix, output prefix) triples
    std::vector<std::vector<Transition>> by_from(t.state_count());
    for (const auto& tr : t.transitions())
        by_from[static_cast<std::size_t>(tr.from)].push_back(tr);
    struct Config {
        int state;
        LetterSeq in, out;
        bool operator<(const Config& o) const {
            return std::tie(state, in, out) < std::tie(o.state, o.in, o.out);
        }
    };
    std::set<Config> frontier{Config{t.initial(), {}, {}}};
    const auto& letters = t.alphabet().letters();
    for (int step = 0; step < n; ++step) {
        std::set<Config> next;
        for (const auto& c : frontier) {
            for (const auto& tr : by_from[static_cast<std::size_t>(c.state)]) {
                Config d{tr.to, c.in, c.out};
                d.in.push_back(letters[static_cast<std::size_t>(tr.in)]);
                d.out.push_back(letters[static_cast<std::size_t>(tr.out)]);
                next.insert(std::move(d));
            }
        }
        frontier = std::move(next);
    }
    std::vector<std::pair<LetterSeq, LetterSeq>> pairs;
    for (const auto& c : frontier)
        pairs.emplace_back(c.in, c.out);
    return FiniteRelation(n, std::move(pairs));
}

FiniteRelation tau_n(const SysTransducer& t, int n) {
    return tau_of(sigma_n(t, n), n);
}

ClosureResult closure_plus(const Alphabet& alphabet, const std::vector<FiniteRelation>& gens) {
    int level = gens.empty() ? 1 : gens.front().level();
    for (const auto& g : gens)
        if (g.level() != level)
            throw Error("closure_plus: generators at different levels");

    ClosureResult result;
    FiniteRelation id = identity_relation(alphabet, level);
    std::set<FiniteRelation> seen{id};
    result.monoid.push_back(id);

    auto union_pairs = [](const FiniteRelation& a, const FiniteRelation& b) {
        auto pairs = a.pairs();
        const auto& more = b.pairs();
        pairs.insert(pairs.end(), more.begin(), more.end());
        return FiniteRelation(a.level(), std::move(pairs));
    };

    FiniteRelation total = id;
    std::vector<FiniteRelation> frontier;
    for (const auto& g : gens)
        if (seen.insert(g).second) {
            result.monoid.push_back(g);
            frontier.push_back(g);
        }
    int round = 1;
    if (!frontier.empty()) {
        FiniteRelation grown = total;
        for (const auto& g : frontier)
            grown = union_pairs(grown, g);
        if (!(grown == total))
            result.rounds = round;
        total = std::move(grown);
    }
    while (!frontier.empty()) {
        ++round;
        std::vector<FiniteRelation> next;
        for (const auto& m : frontier) {
            for (const auto& g : gens) {
                FiniteRelation prod = compose_fr(m, g);
                if (seen.insert(prod).second) {
                    result.monoid.push_back(prod);
                    next.push_back(std::move(prod));
                }
            }
        }
        FiniteRelation grown = total;
        for (const auto& m : next)
            grown = union_pairs(grown, m);
        if (!(grown == total))
            result.rounds = round;
        total = std::move(grown);
        frontier = std::move(next);
    }
    result.relation = std::move(total);
    return result;
}

bool tau_homomorphic(const std::vector<FiniteRelation>& monoid, int i) {
    for (const auto& s : monoid)
        for (const auto& t : monoid)
            if (!(tau_of(compose_fr(s, t), i) ==
                  compose_fr(tau_of(s, i), tau_of(t, i))))
                return false;
    return true;
}

int MonoidAutomaton::state_on(const OuterWord& w) const {
    int q = initial;
    for (const auto& letter : w)
        q = step[static_cast<std::size_t>(q)][static_cast<std::size_t>(outer.index(letter))];
    return q;
}

MonoidAutomaton build_monoid_automaton(const TokenSet& outer,
                                       const std::map<std::string, SysTransducer>& phi,
                                       int n,
                                       std::optional<std::size_t> state_limit) {
    if (outer.size() == 0)
        throw Error("monoid automaton: empty outer alphabet");
    std::vector<FiniteRelation> gens;
    const Alphabet* inner = nullptr;
    for (const auto& letter : outer.tokens()) {
        auto it = phi.find(letter);
        if (it == phi.end())
            throw Error("monoid automaton: no machine for outer letter '" + letter + "'");
        if (inner && !(it->second.alphabet() == *inner))
            throw Error("monoid automaton: letter machines over different inner alphabets");
        inner = &it->second.alphabet();
        gens.push_back(sigma_n(it->second, n));
    }

    MonoidAutomaton out;
    out.outer = outer;
    out.level = n;
    std::map<FiniteRelation, int> id;
    std::deque<int> work;
    auto state_of = [&](FiniteRelation rel) {
        auto it = id.find(rel);
        if (it != id.end()) return it->second;
        if (state_limit && out.states.size() >= *state_limit)
            throw BudgetExceeded("monoid automaton: state limit reached");
        int s = static_cast<int>(out.states.size());
        id.emplace(rel, s);
        out.states.push_back(std::move(rel));
        out.step.emplace_back(outer.size(), -1);
        work.push_back(s);
        return s;
    };
    out.initial = state_of(identity_relation(*inner, n));
    while (!work.empty()) {
        int s = work.front();
        work.pop_front();
        for (std::size_t li = 0; li < outer.size(); ++li) {
            FiniteRelation next = compose_fr(out.states[static_cast<std::size_t>(s)], gens[li]);
            out.step[static_cast<std::size_t>(s)][li] = state_of(std::move(next));
        }
    }
    return out;
}

Nfa chi_nfa(const TokenSet& outer, const std::map<std::string, SysTransducer>& phi,
            const LetterSeq& u, const LetterSeq& v,
            std::optional<std::size_t> state_limit) {
    if (u.size() != v.size() || u.empty())
        throw Error("chi: prefixes must have equal positive length");
    MonoidAutomaton m =
        build_monoid_automaton(outer, phi, static_cast<int>(u.size()), state_limit);
    Nfa a;
    a.alphabet = outer;
    a.states = static_cast<int>(m.states.size());
    a.delta.resize(static_cast<std::size_t>(a.states));
    for (std::size_t s = 0; s < m.states.size(); ++s)
        for (std::size_t li = 0; li < outer.size(); ++li)
            a.add_edge(static_cast<int>(s), static_cast<int>(li), m.step[s][li]);
    a.initial.insert(m.initial);
    for (std::size_t s = 0; s < m.states.size(); ++s)
        if (m.states[s].contains(u, v))
            a.accepting.insert(static_cast<int>(s));
    return a;
}

std::map<std::string, FiniteRelation>
eps_saturate(const TokenSet& outer, const std::map<std::string, SysTransducer>& phi,
             const SysTransducer& eps, int n) {
    FiniteRelation closure = closure_plus(eps.alphabet(), {sigma_n(eps, n)}).relation;
    std::map<std::string, FiniteRelation> out;
    for (const auto& letter : outer.tokens()) {
        auto it = phi.find(letter);
        if (it == phi.end())
            throw Error("eps_saturate: no machine for outer letter '" + letter + "'");
        out.emplace(letter,
                    compose_fr(compose_fr(closure, sigma_n(it->second, n)), closure));
    }
    return out;
}

} // namespace sysrel
