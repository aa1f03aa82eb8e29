#include "sysrel/encoders.hpp"

#include <algorithm>
#include <set>

#include "sysrel/error.hpp"
#include "sysrel/projection.hpp"

namespace sysrel {

void require_normalized(const Pda& p) {
    if (p.states.empty())
        throw Error("pda: no states");
    std::set<std::string> states(p.states.begin(), p.states.end());
    if (states.size() != p.states.size())
        throw Error("pda: duplicate state");
    if (!states.count(p.initial))
        throw Error("pda: unknown initial state");
    if (p.initial_stack && !p.stack.contains(*p.initial_stack))
        throw Error("pda: unknown initial stack symbol");
    for (const auto& reserved : {std::string("□"), std::string("■"), kConvolutionFiller})
        for (const auto& t : p.stack.tokens())
            if (t == reserved)
                throw Error("pda: stack symbol '" + t + "' collides with a reserved letter");
    for (const auto& tr : p.transitions) {
        if (!states.count(tr.from) || !states.count(tr.to))
            throw Error("pda: transition references unknown state");
        if (!p.stack.contains(tr.top))
            throw Error("pda: transition references unknown stack symbol '" + tr.top + "'");
        for (const auto& g : tr.push)
            if (!p.stack.contains(g))
                throw Error("pda: transition pushes unknown stack symbol '" + g + "'");
        if (tr.push.size() > 2)
            throw Error("pda: not normalized (push string longer than 2)");
        if (!tr.input)
            throw Error("pda: not normalized (epsilon-input move)");
        if (!p.inputs.contains(*tr.input))
            throw Error("pda: transition reads unknown input letter '" + *tr.input + "'");
    }
}

Word PdaEncoding::config(const std::string& state,
                         const std::vector<std::string>& stack) const {
    auto it = control_token_.find(state);
    if (it == control_token_.end())
        throw Error("pda encoding: unknown state '" + state + "'");
    std::vector<std::string> letters{it->second};
    letters.insert(letters.end(), stack.begin(), stack.end());
    return eta_normalize(inner, std::move(letters));
}

PdaEncoding encode_pda(const Pda& p) {
    require_normalized(p);
    const std::string pad = "□";
    const std::string absorb = "■";

    PdaEncoding enc;
    std::vector<std::string> letters;
    for (const auto& q : p.states) {
        std::string token = "q:" + q;
        while (p.stack.contains(token))
            token += "#";
        enc.control_token_.emplace(q, token);
        enc.legend.emplace(token, LegendEntry{"control", q});
        letters.push_back(token);
    }
    for (const auto& g : p.stack.tokens()) {
        enc.legend.emplace(g, LegendEntry{"stack", g});
        letters.push_back(g);
    }
    letters.push_back(pad);
    letters.push_back(absorb);
    enc.legend.emplace(pad, LegendEntry{"pad", ""});
    enc.legend.emplace(absorb, LegendEntry{"absorb", ""});
    enc.inner = Alphabet(letters, pad, absorb);

    SemiSca base;
    base.outer = p.inputs;
    for (const auto& sigma : p.inputs.tokens()) {
        std::vector<PdaTransition> moves;
        for (const auto& tr : p.transitions)
            if (tr.input && *tr.input == sigma)
                moves.push_back(tr);

        std::vector<std::string> states{"in", "ok", "junk"};
        for (std::size_t m = 0; m < moves.size(); ++m) {
            states.push_back("cp:" + std::to_string(m));
            if (moves[m].push.size() == 2)
                states.push_back("p2:" + std::to_string(m));
        }
        SysTransducer t(enc.inner, states, "in");

        for (const auto& q : p.states) {
            const std::string& ctl = enc.control_token_.at(q);
            bool any = false;
            for (std::size_t m = 0; m < moves.size(); ++m) {
                if (moves[m].from != q) continue;
                t.add_transition("in", ctl, enc.control_token_.at(moves[m].to),
                                 "cp:" + std::to_string(m));
                any = true;
            }
            if (!any)
                t.add_transition("in", ctl, absorb, "junk");
        }
        for (const auto& g : p.stack.tokens())
            t.add_transition("in", g, absorb, "junk");
        t.add_transition("in", pad, absorb, "junk");
        t.add_transition("in", absorb, absorb, "junk");

        for (std::size_t m = 0; m < moves.size(); ++m) {
            std::string cp = "cp:" + std::to_string(m);
            const auto& mv = moves[m];
            for (const auto& g : p.stack.tokens()) {
                t.add_transition(cp, g, g, cp);
                if (g == mv.top) {
                    if (mv.push.empty())
                        t.add_transition(cp, g, pad, "ok");
                    else if (mv.push.size() == 1)
                        t.add_transition(cp, g, mv.push[0], "ok");
                    else
                        t.add_transition(cp, g, mv.push[0], "p2:" + std::to_string(m));
                }
            }
            for (const auto& q : p.states)
                t.add_transition(cp, enc.control_token_.at(q), absorb, "junk");
            t.add_transition(cp, pad, absorb, "junk");
            t.add_transition(cp, absorb, absorb, "junk");
            if (mv.push.size() == 2) {
                std::string p2 = "p2:" + std::to_string(m);
                for (const auto& letter : enc.inner.letters())
                    if (letter == pad)
                        t.add_transition(p2, pad, mv.push[1], "ok");
                    else
                        t.add_transition(p2, letter, absorb, "junk");
            }
        }
        for (const auto& letter : enc.inner.letters()) {
            t.add_transition("ok", letter, letter == pad ? pad : absorb,
                             letter == pad ? "ok" : "junk");
            t.add_transition("junk", letter, letter == pad ? pad : absorb, "junk");
        }
        base.phi.emplace(sigma, std::move(t));
    }

    std::vector<std::string> initial_stack;
    if (p.initial_stack)
        initial_stack.push_back(*p.initial_stack);
    enc.sca.base = std::move(base);
    Word start = enc.config(p.initial, initial_stack);
    for (const auto& q : p.states)
        enc.sca.accepting.push_back(WordPair{start, enc.config(q, {})});
    return enc;
}

SysTransducer build_hierarchy_machine(const HierarchySpec& spec) {
    const Alphabet& alphabet = spec.alphabet;
    if (!alphabet.absorb())
        throw Error("hierarchy machine: alphabet needs an absorbing symbol");
    if (spec.widths.size() != spec.rules.size())
        throw Error("hierarchy machine: one rule list per region required");
    for (std::size_t r = 0; r < spec.rules.size(); ++r)
        for (const auto& rule : spec.rules[r]) {
            for (const auto& [region, letter] : rule.guard) {
                if (region < 0 || static_cast<std::size_t>(region) >= r)
                    throw Error("hierarchy machine: guard references region " +
                                std::to_string(region) + " from region " + std::to_string(r));
                if (!alphabet.contains(letter))
                    throw Error("hierarchy machine: guard letter not in alphabet");
            }
            for (const auto& [from, to] : rule.transform) {
                if (!alphabet.contains(from) || !alphabet.contains(to))
                    throw Error("hierarchy machine: transform letter not in alphabet");
                if (from == alphabet.pad() && to != alphabet.pad())
                    throw Error("hierarchy machine: pads must pass through unchanged");
            }
        }
    for (int w : spec.widths)
        if (w < 1)
            throw Error("hierarchy machine: region width must be positive");

    const std::string& pad = alphabet.pad();
    const std::string& absorb = *alphabet.absorb();

    // state = (region, offset, first letters of regions seen so far)
    struct State {
        std::size_t region;
        int offset;
        std::vector<std::string> memory;
        bool operator<(const State& o) const {
            return std::tie(region, offset, memory) < std::tie(o.region, o.offset, o.memory);
        }
    };
    auto name_of = [](const State& s) {
        std::string n = "r" + std::to_string(s.region) + "o" + std::to_string(s.offset);
        for (const auto& m : s.memory)
            n += "." + m;
        return n;
    };
    auto applies = [&](const HierarchyRule& rule, const std::vector<std::string>& memory) {
        for (const auto& [region, letter] : rule.guard)
            if (memory[static_cast<std::size_t>(region)] != letter)
                return false;
        return true;
    };
    auto transform_letter = [&](std::size_t region, const std::vector<std::string>& memory,
                                const std::string& letter) -> std::string {
        if (letter == pad) return pad;
        for (const auto& rule : spec.rules[region]) {
            if (!applies(rule, memory)) continue;
            auto it = rule.transform.find(letter);
            return it == rule.transform.end() ? letter : it->second;
        }
        return letter;
    };

    struct Edge {
        std::string from, in, out, to;
    };
    std::vector<Edge> edges;
    std::set<State> seen;
    std::vector<State> work;
    std::vector<std::string> names{"tail", "junk"};
    auto visit = [&](const State& s) {
        if (seen.insert(s).second) {
            work.push_back(s);
            names.push_back(name_of(s));
        }
    };
    State start{0, 0, {}};
    std::string initial;
    if (spec.widths.empty()) {
        initial = "tail";
    } else {
        visit(start);
        initial = name_of(start);
    }
    while (!work.empty()) {
        State s = work.back();
        work.pop_back();
        std::string from = name_of(s);
        for (const auto& letter : alphabet.letters()) {
            if (letter == absorb) {
                edges.push_back(Edge{from, letter, absorb, "junk"});
                continue;
            }
            std::string out = transform_letter(s.region, s.memory, letter);
            State next = s;
            if (s.offset == 0)
                next.memory.push_back(letter);
            if (s.offset + 1 < spec.widths[s.region]) {
                next.offset = s.offset + 1;
            } else {
                next.region = s.region + 1;
                next.offset = 0;
            }
            if (next.region == spec.widths.size()) {
                edges.push_back(Edge{from, letter, out, "tail"});
            } else {
                visit(next);
                edges.push_back(Edge{from, letter, out, name_of(next)});
            }
        }
    }

    SysTransducer t(alphabet, names, initial);
    for (const auto& e : edges)
        t.add_transition(e.from, e.in, e.out, e.to);
    for (const auto& letter : alphabet.letters()) {
        t.add_transition("tail", letter, letter == pad ? pad : absorb,
                         letter == pad ? "tail" : "junk");
        t.add_transition("junk", letter, letter == pad ? pad : absorb, "junk");
    }
    return t;
}

Nfa region_query(const SemiSca& s, const Word& x, const Word& y, int n) {
    if (n < 1)
        throw Error("region_query: level must be at least 1");
    const Alphabet& inner = s.inner();
    return chi_nfa(s.outer, s.phi, pad_to(inner, x, static_cast<std::size_t>(n)),
                   pad_to(inner, y, static_cast<std::size_t>(n)));
}

} // namespace sysrel
