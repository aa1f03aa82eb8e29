#include "sysrel/nfa.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>

#include "sysrel/error.hpp"

namespace sysrel {

int Nfa::add_state() {
    delta.emplace_back();
    return states++;
}

void Nfa::add_edge(int from, int letter, int to) {
    delta.at(static_cast<std::size_t>(from))[letter].insert(to);
}

void Nfa::add_edge(int from, const std::string& letter, int to) {
    add_edge(from, alphabet.index(letter), to);
}

Nfa empty_nfa(const TokenSet& alphabet) {
    Nfa a;
    a.alphabet = alphabet;
    return a;
}

Nfa universal_nfa(const TokenSet& alphabet) {
    Nfa a;
    a.alphabet = alphabet;
    int q = a.add_state();
    a.initial.insert(q);
    a.accepting.insert(q);
    for (std::size_t i = 0; i < alphabet.size(); ++i)
        a.add_edge(q, static_cast<int>(i), q);
    return a;
}

Nfa singleton_nfa(const TokenSet& alphabet, const std::vector<std::string>& word) {
    Nfa a;
    a.alphabet = alphabet;
    int prev = a.add_state();
    a.initial.insert(prev);
    for (const auto& letter : word) {
        int next = a.add_state();
        a.add_edge(prev, alphabet.index(letter), next);
        prev = next;
    }
    a.accepting.insert(prev);
    return a;
}

bool word_in(const Nfa& a, const std::vector<std::string>& word) {
    std::set<int> cur = a.initial;
    for (const auto& letter : word) {
        int li = a.alphabet.index(letter);
        std::set<int> next;
        for (int q : cur) {
            auto it = a.delta[static_cast<std::size_t>(q)].find(li);
            if (it != a.delta[static_cast<std::size_t>(q)].end())
                next.insert(it->second.begin(), it->second.end());
        }
        cur = std::move(next);
        if (cur.empty()) return false;
    }
    return std::any_of(cur.begin(), cur.end(),
                       [&](int q) { return a.accepting.count(q) > 0; });
}

namespace {

void require_same_alphabet(const Nfa& a, const Nfa& b) {
    if (!(a.alphabet == b.alphabet))
        throw Error("automata are over different alphabets");
}

std::set<int> reachable_states(const Nfa& a) {
    std::set<int> seen(a.initial.begin(), a.initial.end());
    std::deque<int> work(a.initial.begin(), a.initial.end());
    while (!work.empty()) {
        int q = work.front();
        work.pop_front();
        for (const auto& [letter, targets] : a.delta[static_cast<std::size_t>(q)])
            for (int t : targets)
                if (seen.insert(t).second)
                    work.push_back(t);
    }
    return seen;
}

std::set<int> coreachable_states(const Nfa& a) {
    std::vector<std::vector<int>> rev(static_cast<std::size_t>(a.states));
    for (int q = 0; q < a.states; ++q)
        for (const auto& [letter, targets] : a.delta[static_cast<std::size_t>(q)])
            for (int t : targets)
                rev[static_cast<std::size_t>(t)].push_back(q);
    std::set<int> seen(a.accepting.begin(), a.accepting.end());
    std::deque<int> work(a.accepting.begin(), a.accepting.end());
    while (!work.empty()) {
        int q = work.front();
        work.pop_front();
        for (int p : rev[static_cast<std::size_t>(q)])
            if (seen.insert(p).second)
                work.push_back(p);
    }
    return seen;
}

} // namespace

Nfa intersect(const Nfa& a, const Nfa& b) {
    require_same_alphabet(a, b);
    Nfa out;
    out.alphabet = a.alphabet;
    std::map<std::pair<int, int>, int> id;
    std::deque<std::pair<int, int>> work;
    auto state_of = [&](int p, int q) {
        auto key = std::make_pair(p, q);
        auto it = id.find(key);
        if (it != id.end()) return it->second;
        int s = out.add_state();
        id.emplace(key, s);
        work.push_back(key);
        if (a.accepting.count(p) && b.accepting.count(q))
            out.accepting.insert(s);
        return s;
    };
    for (int p : a.initial)
        for (int q : b.initial)
            out.initial.insert(state_of(p, q));
    while (!work.empty()) {
        auto [p, q] = work.front();
        work.pop_front();
        int s = id.at({p, q});
        const auto& dp = a.delta[static_cast<std::size_t>(p)];
        const auto& dq = b.delta[static_cast<std::size_t>(q)];
        for (const auto& [letter, ptargets] : dp) {
            auto it = dq.find(letter);
            if (it == dq.end()) continue;
            for (int pt : ptargets)
                for (int qt : it->second)
                    out.add_edge(s, letter, state_of(pt, qt));
        }
    }
    return out;
}

Nfa nfa_union(const Nfa& a, const Nfa& b) {
    require_same_alphabet(a, b);
    Nfa out;
    out.alphabet = a.alphabet;
    out.states = a.states + b.states;
    out.delta.resize(static_cast<std::size_t>(out.states));
    for (int q = 0; q < a.states; ++q)
        out.delta[static_cast<std::size_t>(q)] = a.delta[static_cast<std::size_t>(q)];
    for (int q = 0; q < b.states; ++q)
        for (const auto& [letter, targets] : b.delta[static_cast<std::size_t>(q)])
            for (int t : targets)
                out.add_edge(a.states + q, letter, a.states + t);
    for (int q : a.initial) out.initial.insert(q);
    for (int q : a.accepting) out.accepting.insert(q);
    for (int q : b.initial) out.initial.insert(a.states + q);
    for (int q : b.accepting) out.accepting.insert(a.states + q);
    return out;
}

Nfa determinize(const Nfa& a) {
    Nfa out;
    out.alphabet = a.alphabet;
    std::map<std::set<int>, int> id;
    std::deque<std::set<int>> work;
    auto state_of = [&](const std::set<int>& subset) {
        auto it = id.find(subset);
        if (it != id.end()) return it->second;
        int s = out.add_state();
        id.emplace(subset, s);
        work.push_back(subset);
        if (std::any_of(subset.begin(), subset.end(),
                        [&](int q) { return a.accepting.count(q) > 0; }))
            out.accepting.insert(s);
        return s;
    };
    out.initial.insert(state_of(a.initial));
    while (!work.empty()) {
        std::set<int> subset = work.front();
        work.pop_front();
        int s = id.at(subset);
        for (std::size_t li = 0; li < a.alphabet.size(); ++li) {
            std::set<int> next;
            for (int q : subset) {
                auto it = a.delta[static_cast<std::size_t>(q)].find(static_cast<int>(li));
                if (it != a.delta[static_cast<std::size_t>(q)].end())
                    next.insert(it->second.begin(), it->second.end());
            }
            out.add_edge(s, static_cast<int>(li), state_of(next));
        }
    }
    return out;
}

Nfa complement(const Nfa& a) {
    Nfa d = determinize(a);
    std::set<int> flipped;
    for (int q = 0; q < d.states; ++q)
        if (!d.accepting.count(q))
            flipped.insert(q);
    d.accepting = std::move(flipped);
    return d;
}

Nfa trim(const Nfa& a) {
    std::set<int> keep;
    {
        auto reach = reachable_states(a);
        auto coreach = coreachable_states(a);
        for (int q : reach)
            if (coreach.count(q))
                keep.insert(q);
    }
    Nfa out;
    out.alphabet = a.alphabet;
    std::map<int, int> id;
    for (int q : keep)
        id[q] = out.add_state();
    for (int q : keep) {
        for (const auto& [letter, targets] : a.delta[static_cast<std::size_t>(q)])
            for (int t : targets)
                if (keep.count(t))
                    out.add_edge(id[q], letter, id[t]);
    }
    for (int q : a.initial)
        if (keep.count(q))
            out.initial.insert(id[q]);
    for (int q : a.accepting)
        if (keep.count(q))
            out.accepting.insert(id[q]);
    return out;
}

bool is_empty(const Nfa& a) {
    auto reach = reachable_states(a);
    return std::none_of(reach.begin(), reach.end(),
                        [&](int q) { return a.accepting.count(q) > 0; });
}

bool is_universal(const Nfa& a) {
    return is_empty(complement(a));
}

bool includes(const Nfa& a, const Nfa& b) {
    require_same_alphabet(a, b);
    return is_empty(intersect(a, complement(b)));
}

bool is_finite(const Nfa& a) {
    Nfa t = trim(a);
    // the trimmed language is infinite iff some useful state lies on a cycle
    std::vector<int> color(static_cast<std::size_t>(t.states), 0);
    std::function<bool(int)> has_cycle = [&](int q) -> bool {
        color[static_cast<std::size_t>(q)] = 1;
        for (const auto& [letter, targets] : t.delta[static_cast<std::size_t>(q)]) {
            for (int next : targets) {
                if (color[static_cast<std::size_t>(next)] == 1) return true;
                if (color[static_cast<std::size_t>(next)] == 0 && has_cycle(next)) return true;
            }
        }
        color[static_cast<std::size_t>(q)] = 2;
        return false;
    };
    for (int q = 0; q < t.states; ++q)
        if (color[static_cast<std::size_t>(q)] == 0 && has_cycle(q))
            return false;
    return true;
}

std::vector<std::vector<std::string>> enumerate_language(const Nfa& a, std::size_t max_len) {
    Nfa d = determinize(trim(a));
    // distance from each state to the nearest accepting state
    const int inf = std::numeric_limits<int>::max() / 2;
    std::vector<int> dist(static_cast<std::size_t>(d.states), inf);
    std::vector<std::vector<int>> rev(static_cast<std::size_t>(d.states));
    for (int q = 0; q < d.states; ++q)
        for (const auto& [letter, targets] : d.delta[static_cast<std::size_t>(q)])
            for (int t : targets)
                rev[static_cast<std::size_t>(t)].push_back(q);
    std::deque<int> work;
    for (int q : d.accepting) {
        dist[static_cast<std::size_t>(q)] = 0;
        work.push_back(q);
    }
    while (!work.empty()) {
        int q = work.front();
        work.pop_front();
        for (int p : rev[static_cast<std::size_t>(q)]) {
            if (dist[static_cast<std::size_t>(p)] > dist[static_cast<std::size_t>(q)] + 1) {
                dist[static_cast<std::size_t>(p)] = dist[static_cast<std::size_t>(q)] + 1;
                work.push_back(p);
            }
        }
    }
    std::vector<std::vector<std::string>> out;
    std::vector<std::string> word;
    std::function<void(int)> walk = [&](int q) {
        if (dist[static_cast<std::size_t>(q)] > static_cast<int>(max_len - word.size()))
            return;
        if (d.accepting.count(q))
            out.push_back(word);
        if (word.size() == max_len) return;
        for (const auto& [letter, targets] : d.delta[static_cast<std::size_t>(q)]) {
            for (int t : targets) {
                word.push_back(d.alphabet.tokens()[static_cast<std::size_t>(letter)]);
                walk(t);
                word.pop_back();
            }
        }
    };
    for (int q : d.initial)
        walk(q);
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Nfa right_strip_filter(const Nfa& a, const std::string& forbidden) {
    int li = a.alphabet.index(forbidden);
    Nfa out = a;
    for (auto& edges : out.delta)
        edges.erase(li);
    return out;
}

} // namespace sysrel
