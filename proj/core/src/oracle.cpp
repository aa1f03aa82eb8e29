#include "sysrel/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "sysrel/error.hpp"

namespace sysrel::oracle {

namespace {

/// A state can start an infinite all-pad run iff the set survives |Q| + 1
/// steps of (pad, pad) successors (pigeonhole: a path that long hits a cycle).
std::vector<bool> pad_live_by_stepping(const SysTransducer& t) {
    int pad = t.alphabet().pad_index();
    std::vector<bool> live(t.state_count(), false);
    for (std::size_t q0 = 0; q0 < t.state_count(); ++q0) {
        std::set<int> cur{static_cast<int>(q0)};
        for (std::size_t step = 0; step <= t.state_count() && !cur.empty(); ++step) {
            std::set<int> next;
            for (const auto& tr : t.transitions())
                if (cur.count(tr.from) && tr.in == pad && tr.out == pad)
                    next.insert(tr.to);
            cur = std::move(next);
        }
        live[q0] = !cur.empty();
    }
    return live;
}

std::size_t eta_length(const std::vector<std::string>& out, const std::string& pad) {
    std::size_t n = out.size();
    while (n > 0 && out[n - 1] == pad)
        --n;
    return n;
}

} // namespace

std::set<Word> brute_image(const SysTransducer& t, const Word& x, const SimConfig& cfg) {
    const Alphabet& alphabet = t.alphabet();
    const std::string& pad = alphabet.pad();
    std::size_t extension = cfg.pad_extension.value_or(x.size() + t.state_count());
    std::size_t span = x.size() + extension;
    auto live = pad_live_by_stepping(t);

    struct Config {
        int state;
        std::vector<std::string> out;
        bool operator<(const Config& o) const {
            return std::tie(state, out) < std::tie(o.state, o.out);
        }
    };
    std::set<Word> image;
    std::set<Config> configs{Config{t.initial(), {}}};
    for (std::size_t step = 0; step < span; ++step) {
        const std::string in = step < x.size() ? x.letters()[step] : pad;
        int in_index = alphabet.index(in);
        std::set<Config> next;
        for (const auto& c : configs) {
            for (const auto& tr : t.transitions()) {
                if (tr.from != c.state || tr.in != in_index) continue;
                Config d{tr.to, c.out};
                d.out.push_back(alphabet.letters()[static_cast<std::size_t>(tr.out)]);
                if (eta_length(d.out, pad) <= cfg.max_output_len)
                    next.insert(std::move(d));
            }
        }
        configs = std::move(next);
        if (step + 1 >= x.size())
            for (const auto& c : configs)
                if (live[static_cast<std::size_t>(c.state)])
                    image.insert(eta_normalize(alphabet, c.out));
    }
    if (x.empty()) {
        // zero simulated steps also end the input
        if (live[static_cast<std::size_t>(t.initial())])
            image.insert(eta_normalize(alphabet, {}));
    }
    return image;
}

std::set<WordPair> brute_pairs(const SysTransducer& t, const SimConfig& cfg) {
    std::set<WordPair> pairs;
    for (const auto& x : all_words(t.alphabet(), cfg.max_input_len))
        for (const auto& y : brute_image(t, x, cfg))
            pairs.insert(WordPair{x, y});
    return pairs;
}

FiniteRelation brute_sigma(const SysTransducer& t, int n) {
    std::vector<std::pair<LetterSeq, LetterSeq>> pairs;
    const auto& letters = t.alphabet().letters();
    std::function<void(int, LetterSeq&, LetterSeq&)> walk = [&](int state, LetterSeq& in,
                                                                LetterSeq& out) {
        if (in.size() == static_cast<std::size_t>(n)) {
            pairs.emplace_back(in, out);
            return;
        }
        for (const auto& tr : t.transitions()) {
            if (tr.from != state) continue;
            in.push_back(letters[static_cast<std::size_t>(tr.in)]);
            out.push_back(letters[static_cast<std::size_t>(tr.out)]);
            walk(tr.to, in, out);
            in.pop_back();
            out.pop_back();
        }
    };
    LetterSeq in, out;
    walk(t.initial(), in, out);
    return FiniteRelation(n, std::move(pairs));
}

FiniteRelation brute_sigma_chain(const Alphabet& alphabet,
                                 const std::vector<const SysTransducer*>& chain, int n) {
    struct Config {
        std::vector<int> states;
        LetterSeq in, out;
        bool operator<(const Config& o) const {
            return std::tie(states, in, out) < std::tie(o.states, o.in, o.out);
        }
    };
    Config start;
    for (const SysTransducer* t : chain)
        start.states.push_back(t->initial());
    std::set<Config> configs{start};
    for (int step = 0; step < n; ++step) {
        std::set<Config> next;
        for (const auto& c : configs) {
            // thread one input letter through the whole chain
            std::function<void(std::size_t, const std::string&, const std::string&,
                               std::vector<int>&)>
                thread = [&](std::size_t idx, const std::string& first,
                             const std::string& carried, std::vector<int>& states) {
                    if (idx == chain.size()) {
                        Config d{states, c.in, c.out};
                        d.in.push_back(first);
                        d.out.push_back(carried);
                        next.insert(std::move(d));
                        return;
                    }
                    const SysTransducer* t = chain[idx];
                    int in_index = t->alphabet().index(carried);
                    for (const auto& tr : t->transitions()) {
                        if (tr.from != c.states[idx] || tr.in != in_index) continue;
                        states.push_back(tr.to);
                        thread(idx + 1, first,
                               t->alphabet().letters()[static_cast<std::size_t>(tr.out)],
                               states);
                        states.pop_back();
                    }
                };
            for (const auto& letter : alphabet.letters()) {
                std::vector<int> states;
                thread(0, letter, letter, states);
            }
        }
        configs = std::move(next);
    }
    std::vector<std::pair<LetterSeq, LetterSeq>> pairs;
    for (const auto& c : configs)
        pairs.emplace_back(c.in, c.out);
    return FiniteRelation(n, std::move(pairs));
}

bool brute_member(const Sca& a, const OuterWord& w, const SimConfig& cfg) {
    for (const auto& pair : a.accepting) {
        std::set<Word> mids{pair.left};
        for (const auto& letter : w) {
            std::set<Word> next;
            for (const auto& mid : mids)
                for (const auto& out : brute_image(a.base.machine(letter), mid, cfg))
                    next.insert(out);
            mids = std::move(next);
            if (mids.empty()) break;
        }
        if (mids.count(pair.right))
            return true;
    }
    return false;
}

std::set<OuterWord> brute_language(const Sca& a, std::size_t max_len, const SimConfig& cfg) {
    std::set<OuterWord> out;
    for (const auto& pair : a.accepting) {
        OuterWord w;
        std::function<void(const std::set<Word>&)> walk = [&](const std::set<Word>& mids) {
            if (mids.count(pair.right))
                out.insert(w);
            if (w.size() == max_len || mids.empty()) return;
            for (const auto& letter : a.base.outer.tokens()) {
                std::set<Word> next;
                for (const auto& mid : mids)
                    for (const auto& img : brute_image(a.base.machine(letter), mid, cfg))
                        next.insert(img);
                w.push_back(letter);
                walk(next);
                w.pop_back();
            }
        };
        walk({pair.left});
    }
    return out;
}

BruteClosure brute_closure(const Alphabet& alphabet, const std::vector<FiniteRelation>& gens,
                           int max_rounds) {
    int level = gens.empty() ? 1 : gens.front().level();
    FiniteRelation id = identity_relation(alphabet, level);
    auto union_of = [&](const std::vector<FiniteRelation>& members) {
        std::vector<std::pair<LetterSeq, LetterSeq>> pairs;
        for (const auto& m : members)
            pairs.insert(pairs.end(), m.pairs().begin(), m.pairs().end());
        return FiniteRelation(level, std::move(pairs));
    };

    std::vector<FiniteRelation> members{id};
    BruteClosure result;
    result.relation = id;
    for (int round = 1; round <= max_rounds; ++round) {
        std::vector<FiniteRelation> grown = members;
        if (round == 1) {
            for (const auto& g : gens)
                if (std::find(grown.begin(), grown.end(), g) == grown.end())
                    grown.push_back(g);
        } else {
            for (const auto& m : members)
                for (const auto& g : gens) {
                    FiniteRelation prod = compose_fr(m, g);
                    if (std::find(grown.begin(), grown.end(), prod) == grown.end())
                        grown.push_back(prod);
                }
        }
        bool element_growth = grown.size() != members.size();
        members = std::move(grown);
        FiniteRelation next_union = union_of(members);
        if (!(next_union == result.relation))
            result.rounds = round;
        result.relation = std::move(next_union);
        if (!element_growth) break;
    }
    return result;
}

} // namespace sysrel::oracle
