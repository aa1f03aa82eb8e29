#include "sysrel/transducer.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "sysrel/error.hpp"

namespace sysrel {

SysTransducer::SysTransducer(Alphabet alphabet, std::vector<std::string> states,
                             const std::string& initial)
    : alphabet_(std::move(alphabet)), state_names_(std::move(states)) {
    for (std::size_t i = 0; i < state_names_.size(); ++i) {
        const auto& name = state_names_[i];
        if (name.empty())
            throw Error("transducer: empty state name");
        if (!state_index_.emplace(name, static_cast<int>(i)).second)
            throw Error("transducer: duplicate state '" + name + "'");
    }
    initial_ = state_index(initial);
}

int SysTransducer::state_index(const std::string& name) const {
    auto it = state_index_.find(name);
    if (it == state_index_.end())
        throw Error("transducer: unknown state '" + name + "'");
    return it->second;
}

void SysTransducer::add_transition(const std::string& from, const std::string& in,
                                   const std::string& out, const std::string& to) {
    transitions_.insert(Transition{state_index(from), alphabet_.index(in),
                                   alphabet_.index(out), state_index(to)});
    valid_cache_.reset();
    pad_live_cache_.reset();
}

namespace {

/// adj[state][input-letter] -> list of (output-letter, target)
using Adjacency = std::vector<std::vector<std::vector<std::pair<int, int>>>>;

Adjacency make_adjacency(const SysTransducer& t) {
    Adjacency adj(t.state_count(),
                  std::vector<std::vector<std::pair<int, int>>>(t.alphabet().size()));
    for (const auto& tr : t.transitions())
        adj[static_cast<std::size_t>(tr.from)][static_cast<std::size_t>(tr.in)]
            .emplace_back(tr.out, tr.to);
    return adj;
}

std::vector<bool> reachable_from_initial(const SysTransducer& t) {
    std::vector<bool> seen(t.state_count(), false);
    std::deque<int> work{t.initial()};
    seen[static_cast<std::size_t>(t.initial())] = true;
    auto adj = make_adjacency(t);
    while (!work.empty()) {
        int q = work.front();
        work.pop_front();
        for (const auto& per_letter : adj[static_cast<std::size_t>(q)])
            for (const auto& [out, to] : per_letter)
                if (!seen[static_cast<std::size_t>(to)]) {
                    seen[static_cast<std::size_t>(to)] = true;
                    work.push_back(to);
                }
    }
    return seen;
}

/// Tarjan SCC over an explicit successor list.
std::vector<int> scc_of(int n, const std::vector<std::vector<int>>& succ) {
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<int> index(static_cast<std::size_t>(n), -1);
    std::vector<int> low(static_cast<std::size_t>(n), 0);
    std::vector<bool> on_stack(static_cast<std::size_t>(n), false);
    std::vector<int> stack;
    int next_index = 0;
    int next_comp = 0;
    std::function<void(int)> strongconnect = [&](int v) {
        index[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = next_index++;
        stack.push_back(v);
        on_stack[static_cast<std::size_t>(v)] = true;
        for (int w : succ[static_cast<std::size_t>(v)]) {
            if (index[static_cast<std::size_t>(w)] < 0) {
                strongconnect(w);
                low[static_cast<std::size_t>(v)] =
                    std::min(low[static_cast<std::size_t>(v)], low[static_cast<std::size_t>(w)]);
            } else if (on_stack[static_cast<std::size_t>(w)]) {
                low[static_cast<std::size_t>(v)] =
                    std::min(low[static_cast<std::size_t>(v)], index[static_cast<std::size_t>(w)]);
            }
        }
        if (low[static_cast<std::size_t>(v)] == index[static_cast<std::size_t>(v)]) {
            while (true) {
                int w = stack.back();
                stack.pop_back();
                on_stack[static_cast<std::size_t>(w)] = false;
                comp[static_cast<std::size_t>(w)] = next_comp;
                if (w == v) break;
            }
            ++next_comp;
        }
    };
    for (int v = 0; v < n; ++v)
        if (index[static_cast<std::size_t>(v)] < 0)
            strongconnect(v);
    return comp;
}

/// States admitting an infinite run that consumes pads and emits pads only:
/// the greatest set closed under "has a (pad, pad) successor inside the set".
std::vector<bool> pad_live_states(const SysTransducer& t) {
    int pad = t.alphabet().pad_index();
    std::vector<bool> live(t.state_count(), true);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t q = 0; q < t.state_count(); ++q) {
            if (!live[q]) continue;
            bool has_successor = false;
            for (const auto& tr : t.transitions()) {
                if (tr.from == static_cast<int>(q) && tr.in == pad && tr.out == pad &&
                    live[static_cast<std::size_t>(tr.to)]) {
                    has_successor = true;
                    break;
                }
            }
            if (!has_successor) {
                live[q] = false;
                changed = true;
            }
        }
    }
    return live;
}

} // namespace

ValidationReport validate(const SysTransducer& t) {
    ValidationReport report;
    if (t.state_count() == 0)
        throw Error("transducer: no states");
    auto reach = reachable_from_initial(t);
    auto adj = make_adjacency(t);
    int pad = t.alphabet().pad_index();

    for (std::size_t q = 0; q < t.state_count(); ++q) {
        if (!reach[q]) continue;
        for (std::size_t li = 0; li < t.alphabet().size(); ++li)
            if (adj[q][li].empty())
                report.totality_violations.emplace_back(t.state_names()[q],
                                                        t.alphabet().letters()[li]);
    }

    // pad-input subgraph on reachable states; offending transitions are the
    // non-pad-output edges lying inside one of its strongly connected components
    std::vector<std::vector<int>> pad_succ(t.state_count());
    for (const auto& tr : t.transitions())
        if (tr.in == pad && reach[static_cast<std::size_t>(tr.from)] &&
            reach[static_cast<std::size_t>(tr.to)])
            pad_succ[static_cast<std::size_t>(tr.from)].push_back(tr.to);
    auto comp = scc_of(static_cast<int>(t.state_count()), pad_succ);
    for (const auto& tr : t.transitions()) {
        if (tr.in != pad || tr.out == pad) continue;
        if (!reach[static_cast<std::size_t>(tr.from)] || !reach[static_cast<std::size_t>(tr.to)])
            continue;
        bool on_cycle = (tr.from == tr.to) ||
                        comp[static_cast<std::size_t>(tr.from)] ==
                            comp[static_cast<std::size_t>(tr.to)];
        if (on_cycle)
            report.pad_cycle_violations.push_back(tr);
    }

    // greatest fixpoint for final states
    std::vector<bool> final_set(t.state_count(), false);
    for (std::size_t q = 0; q < t.state_count(); ++q)
        final_set[q] = reach[q];
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& tr : t.transitions()) {
            if (tr.in != pad) continue;
            auto from = static_cast<std::size_t>(tr.from);
            if (!final_set[from]) continue;
            if (tr.out != pad || !final_set[static_cast<std::size_t>(tr.to)]) {
                final_set[from] = false;
                changed = true;
            }
        }
    }
    for (std::size_t q = 0; q < t.state_count(); ++q)
        if (final_set[q])
            report.final_states.insert(t.state_names()[q]);

    report.is_valid =
        report.totality_violations.empty() && report.pad_cycle_violations.empty();
    return report;
}

void require_valid(const SysTransducer& t) {
    if (!t.valid_cache_)
        t.valid_cache_ = validate(t).is_valid;
    if (!*t.valid_cache_)
        throw ValidationError("transducer fails validation (totality or pad-finiteness)");
}

const std::vector<bool>& pad_live(const SysTransducer& t) {
    if (!t.pad_live_cache_)
        t.pad_live_cache_ = pad_live_states(t);
    return *t.pad_live_cache_;
}

bool pair_member(const SysTransducer& t, const Word& x, const Word& y) {
    require_valid(t);
    std::size_t m = std::max(x.size(), y.size());
    auto xs = pad_to(t.alphabet(), x, m);
    auto ys = pad_to(t.alphabet(), y, m);
    auto adj = make_adjacency(t);
    std::set<int> cur{t.initial()};
    for (std::size_t i = 0; i < m; ++i) {
        int in = t.alphabet().index(xs[i]);
        int out = t.alphabet().index(ys[i]);
        std::set<int> next;
        for (int q : cur)
            for (const auto& [o, to] : adj[static_cast<std::size_t>(q)][static_cast<std::size_t>(in)])
                if (o == out)
                    next.insert(to);
        cur = std::move(next);
        if (cur.empty()) return false;
    }
    const auto& live = pad_live(t);
    return std::any_of(cur.begin(), cur.end(),
                       [&](int q) { return live[static_cast<std::size_t>(q)]; });
}

Nfa image_of_language(const SysTransducer& t, const Nfa& inputs) {
    require_valid(t);
    if (!(inputs.alphabet == t.alphabet().tokens()))
        throw Error("image: input automaton alphabet differs from machine alphabet");
    Nfa lang = trim(inputs);
    int pad = t.alphabet().pad_index();
    auto adj = make_adjacency(t);
    const auto& live = pad_live(t);
    std::size_t nl = static_cast<std::size_t>(lang.states);
    std::size_t nq = t.state_count();

    // fin[l][q]: from language state l and machine state q, the remaining
    // input (some accepted suffix, then pads) can be consumed emitting only
    // pads and reaching an all-pad cycle
    std::vector<std::vector<bool>> fin(nl, std::vector<bool>(nq, false));
    for (std::size_t l = 0; l < nl; ++l)
        if (lang.accepting.count(static_cast<int>(l)))
            for (std::size_t q = 0; q < nq; ++q)
                fin[l][q] = live[q];
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t l = 0; l < nl; ++l) {
            for (const auto& [letter, targets] : lang.delta[l]) {
                for (std::size_t q = 0; q < nq; ++q) {
                    if (fin[l][q]) continue;
                    for (const auto& [o, to] : adj[q][static_cast<std::size_t>(letter)]) {
                        if (o != pad) continue;
                        bool ok = false;
                        for (int lt : targets)
                            if (fin[static_cast<std::size_t>(lt)][static_cast<std::size_t>(to)]) {
                                ok = true;
                                break;
                            }
                        if (ok) {
                            fin[l][q] = true;
                            changed = true;
                            break;
                        }
                    }
                }
            }
        }
    }

    Nfa raw;
    raw.alphabet = t.alphabet().tokens();
    // run states (l, q), then pad-phase states (q)
    auto run_state = [&](std::size_t l, std::size_t q) {
        return static_cast<int>(l * nq + q);
    };
    auto pad_state = [&](std::size_t q) { return static_cast<int>(nl * nq + q); };
    raw.states = static_cast<int>(nl * nq + nq);
    raw.delta.resize(static_cast<std::size_t>(raw.states));
    for (std::size_t l = 0; l < nl; ++l) {
        for (const auto& [letter, targets] : lang.delta[l])
            for (std::size_t q = 0; q < nq; ++q)
                for (const auto& [o, to] : adj[q][static_cast<std::size_t>(letter)])
                    for (int lt : targets)
                        raw.add_edge(run_state(l, q), o,
                                     run_state(static_cast<std::size_t>(lt),
                                               static_cast<std::size_t>(to)));
        if (lang.accepting.count(static_cast<int>(l)))
            for (std::size_t q = 0; q < nq; ++q)
                for (const auto& [o, to] : adj[q][static_cast<std::size_t>(pad)])
                    raw.add_edge(run_state(l, q), o, pad_state(static_cast<std::size_t>(to)));
    }
    for (std::size_t q = 0; q < nq; ++q)
        for (const auto& [o, to] : adj[q][static_cast<std::size_t>(pad)])
            raw.add_edge(pad_state(q), o, pad_state(static_cast<std::size_t>(to)));
    for (int l : lang.initial)
        raw.initial.insert(run_state(static_cast<std::size_t>(l),
                                     static_cast<std::size_t>(t.initial())));
    for (std::size_t l = 0; l < nl; ++l)
        for (std::size_t q = 0; q < nq; ++q)
            if (fin[l][q])
                raw.accepting.insert(run_state(l, q));
    for (std::size_t q = 0; q < nq; ++q)
        if (live[q])
            raw.accepting.insert(pad_state(q));

    // restrict to eta-normal outputs (no trailing pads)
    Nfa notend;
    notend.alphabet = t.alphabet().tokens();
    int a = notend.add_state();
    int b = notend.add_state();
    notend.initial.insert(a);
    notend.accepting.insert(a);
    for (std::size_t li = 0; li < t.alphabet().size(); ++li) {
        int target = (static_cast<int>(li) == pad) ? b : a;
        notend.add_edge(a, static_cast<int>(li), target);
        notend.add_edge(b, static_cast<int>(li), target);
    }
    return trim(intersect(raw, notend));
}

Nfa image_nfa(const SysTransducer& t, const Word& x) {
    return image_of_language(t, singleton_nfa(t.alphabet().tokens(), x.letters()));
}

SysTransducer compose(const SysTransducer& t1, const SysTransducer& t2) {
    if (!(t1.alphabet() == t2.alphabet()))
        throw Error("compose: alphabet mismatch");
    require_valid(t1);
    require_valid(t2);
    auto adj1 = make_adjacency(t1);
    auto adj2 = make_adjacency(t2);

    std::map<std::pair<int, int>, std::string> names;
    std::deque<std::pair<int, int>> work;
    auto name_of = [&](int q, int r) {
        auto key = std::make_pair(q, r);
        auto it = names.find(key);
        if (it != names.end()) return it->second;
        std::string name = t1.state_names()[static_cast<std::size_t>(q)] + "|" +
                           t2.state_names()[static_cast<std::size_t>(r)];
        names.emplace(key, name);
        work.push_back(key);
        return name;
    };
    std::string initial = name_of(t1.initial(), t2.initial());
    struct Edge {
        std::string from, in, out, to;
    };
    std::vector<Edge> edges;
    while (!work.empty()) {
        auto [q, r] = work.front();
        work.pop_front();
        std::string from = names.at({q, r});
        for (std::size_t li = 0; li < t1.alphabet().size(); ++li) {
            for (const auto& [mid, q2] : adj1[static_cast<std::size_t>(q)][li]) {
                for (const auto& [out, r2] : adj2[static_cast<std::size_t>(r)]
                                                 [static_cast<std::size_t>(mid)]) {
                    std::string to = name_of(q2, r2);
                    edges.push_back(Edge{from, t1.alphabet().letters()[li],
                                         t1.alphabet().letters()[static_cast<std::size_t>(out)],
                                         to});
                }
            }
        }
    }
    std::vector<std::string> state_names;
    state_names.reserve(names.size());
    for (const auto& [key, name] : names)
        state_names.push_back(name);
    std::sort(state_names.begin(), state_names.end());
    SysTransducer out(t1.alphabet(), state_names, initial);
    for (const auto& e : edges)
        out.add_transition(e.from, e.in, e.out, e.to);
    return out;
}

ProductAlphabet::ProductAlphabet(const Alphabet& left, const Alphabet& right)
    : left_(left), right_(right) {
    std::set<std::string> used;
    std::vector<std::string> letters;
    std::string pad_token;
    for (const auto& la : left.letters()) {
        for (const auto& lb : right.letters()) {
            std::string base = la + "," + lb;
            std::string token = base;
            int k = 2;
            while (used.count(token))
                token = base + "#" + std::to_string(k++);
            used.insert(token);
            letters.push_back(token);
            token_.emplace(std::make_pair(la, lb), token);
            components_.emplace(token, std::make_pair(la, lb));
            if (la == left.pad() && lb == right.pad())
                pad_token = token;
        }
    }
    product_ = Alphabet(letters, pad_token);
}

const std::string& ProductAlphabet::token(const std::string& left,
                                          const std::string& right) const {
    auto it = token_.find({left, right});
    if (it == token_.end())
        throw Error("product alphabet: unknown letter pair (" + left + ", " + right + ")");
    return it->second;
}

const std::pair<std::string, std::string>&
ProductAlphabet::components(const std::string& token) const {
    auto it = components_.find(token);
    if (it == components_.end())
        throw Error("product alphabet: unknown token '" + token + "'");
    return it->second;
}

Word ProductAlphabet::zip(const Word& left, const Word& right) const {
    std::size_t m = std::max(left.size(), right.size());
    auto ls = pad_to(left_, left, m);
    auto rs = pad_to(right_, right, m);
    std::vector<std::string> letters;
    letters.reserve(m);
    for (std::size_t i = 0; i < m; ++i)
        letters.push_back(token(ls[i], rs[i]));
    return eta_normalize(product_, std::move(letters));
}

SysTransducer diamond(const SysTransducer& t1, const SysTransducer& t2,
                      const ProductAlphabet& prod) {
    require_valid(t1);
    require_valid(t2);
    std::map<std::pair<int, int>, std::string> names;
    std::deque<std::pair<int, int>> work;
    auto name_of = [&](int q, int r) {
        auto key = std::make_pair(q, r);
        auto it = names.find(key);
        if (it != names.end()) return it->second;
        std::string name = t1.state_names()[static_cast<std::size_t>(q)] + "|" +
                           t2.state_names()[static_cast<std::size_t>(r)];
        names.emplace(key, name);
        work.push_back(key);
        return name;
    };
    std::string initial = name_of(t1.initial(), t2.initial());
    struct Edge {
        std::string from, in, out, to;
    };
    std::vector<Edge> edges;
    std::vector<std::vector<Transition>> by_from1(t1.state_count());
    std::vector<std::vector<Transition>> by_from2(t2.state_count());
    for (const auto& tr : t1.transitions())
        by_from1[static_cast<std::size_t>(tr.from)].push_back(tr);
    for (const auto& tr : t2.transitions())
        by_from2[static_cast<std::size_t>(tr.from)].push_back(tr);
    while (!work.empty()) {
        auto [q, r] = work.front();
        work.pop_front();
        std::string from = names.at({q, r});
        for (const auto& tr1 : by_from1[static_cast<std::size_t>(q)]) {
            for (const auto& tr2 : by_from2[static_cast<std::size_t>(r)]) {
                const auto& a1 = t1.alphabet().letters();
                const auto& a2 = t2.alphabet().letters();
                std::string in = prod.token(a1[static_cast<std::size_t>(tr1.in)],
                                            a2[static_cast<std::size_t>(tr2.in)]);
                std::string out = prod.token(a1[static_cast<std::size_t>(tr1.out)],
                                             a2[static_cast<std::size_t>(tr2.out)]);
                edges.push_back(Edge{from, in, out, name_of(tr1.to, tr2.to)});
            }
        }
    }
    std::vector<std::string> state_names;
    for (const auto& [key, name] : names)
        state_names.push_back(name);
    std::sort(state_names.begin(), state_names.end());
    SysTransducer out(prod.alphabet(), state_names, initial);
    for (const auto& e : edges)
        out.add_transition(e.from, e.in, e.out, e.to);
    return out;
}

SysTransducer diamond(const SysTransducer& t1, const SysTransducer& t2) {
    return diamond(t1, t2, ProductAlphabet(t1.alphabet(), t2.alphabet()));
}

SysTransducer identity_transducer(const Alphabet& alphabet) {
    SysTransducer t(alphabet, {"id"}, "id");
    for (const auto& letter : alphabet.letters())
        t.add_transition("id", letter, letter, "id");
    return t;
}

SysTransducer absorb_router(const Alphabet& alphabet) {
    if (!alphabet.absorb())
        throw Error("absorb_router: alphabet has no absorbing symbol");
    const std::string& absorb = *alphabet.absorb();
    const std::string& pad = alphabet.pad();
    SysTransducer t(alphabet, {"init", "sink"}, "init");
    for (const auto& letter : alphabet.letters()) {
        t.add_transition("init", letter, absorb, "sink");
        t.add_transition("sink", letter, letter == pad ? pad : absorb, "sink");
    }
    return t;
}

} // namespace sysrel
