#include "sysrel/sca.hpp"

#include <algorithm>
#include <functional>

#include "sysrel/error.hpp"

namespace sysrel {

const SysTransducer& SemiSca::machine(const std::string& outer_letter) const {
    auto it = phi.find(outer_letter);
    if (it == phi.end())
        throw Error("semi-sca: no machine for outer letter '" + outer_letter + "'");
    return it->second;
}

const Alphabet& SemiSca::inner() const {
    if (phi.empty())
        throw Error("semi-sca: no letter machines");
    return phi.begin()->second.alphabet();
}

void SemiSca::check() const {
    const Alphabet* inner_alphabet = nullptr;
    for (const auto& letter : outer.tokens()) {
        const SysTransducer& t = machine(letter);
        require_valid(t);
        if (inner_alphabet && !(t.alphabet() == *inner_alphabet))
            throw Error("semi-sca: letter machines over different inner alphabets");
        inner_alphabet = &t.alphabet();
    }
}

SysTransducer phi_of_word(const SemiSca& s, const OuterWord& w) {
    SysTransducer acc = identity_transducer(s.inner());
    for (const auto& letter : w)
        acc = compose(acc, s.machine(letter));
    return acc;
}

namespace {

/// Forward image of {x} through the machines of w, step by step.
Nfa image_through(const SemiSca& s, const OuterWord& w, const Word& x) {
    Nfa cur = singleton_nfa(s.inner().tokens(), x.letters());
    for (const auto& letter : w)
        cur = image_of_language(s.machine(letter), cur);
    return cur;
}

} // namespace

bool member(const Sca& a, const OuterWord& w) {
    // group accepting pairs by source word so each chain is swept once
    std::map<Word, std::vector<const Word*>> by_left;
    for (const auto& pair : a.accepting)
        by_left[pair.left].push_back(&pair.right);
    for (const auto& [left, rights] : by_left) {
        Nfa image = image_through(a.base, w, left);
        for (const Word* right : rights)
            if (word_in(image, right->letters()))
                return true;
    }
    return false;
}

Sca reach_query(const SemiSca& s, const Word& x, const Word& y) {
    return Sca{s, {WordPair{x, y}}};
}

Sca intersect_sca(const Sca& a, const Sca& b) {
    // unified outer alphabet, preserving declared order, left first
    std::vector<std::string> outer_letters = a.base.outer.tokens();
    for (const auto& letter : b.base.outer.tokens())
        if (std::find(outer_letters.begin(), outer_letters.end(), letter) ==
            outer_letters.end())
            outer_letters.push_back(letter);
    TokenSet outer(outer_letters);

    const Alphabet& left_inner = a.base.inner();
    const Alphabet& right_inner = b.base.inner();
    ProductAlphabet prod(left_inner, right_inner);

    auto machine_or_router = [](const Sca& side, const std::string& letter) {
        if (side.base.outer.contains(letter))
            return side.base.machine(letter);
        return absorb_router(side.base.inner());
    };

    SemiSca base;
    base.outer = outer;
    for (const auto& letter : outer_letters)
        base.phi.emplace(letter, diamond(machine_or_router(a, letter),
                                         machine_or_router(b, letter), prod));

    Sca out{std::move(base), {}};
    for (const auto& pa : a.accepting)
        for (const auto& pb : b.accepting)
            out.accepting.push_back(WordPair{prod.zip(pa.left, pb.left),
                                             prod.zip(pa.right, pb.right)});
    return out;
}

std::vector<OuterWord> language_upto(const Sca& a, std::size_t max_len) {
    std::vector<OuterWord> out;
    std::map<Word, std::vector<const Word*>> by_left;
    for (const auto& pair : a.accepting)
        by_left[pair.left].push_back(&pair.right);
    for (const auto& [left, rights] : by_left) {
        OuterWord w;
        std::function<void(const Nfa&)> walk = [&](const Nfa& image) {
            for (const Word* right : rights) {
                if (word_in(image, right->letters())) {
                    out.push_back(w);
                    break;
                }
            }
            if (w.size() == max_len || is_empty(image)) return;
            for (const auto& letter : a.base.outer.tokens()) {
                w.push_back(letter);
                walk(image_of_language(a.base.machine(letter), image));
                w.pop_back();
            }
        };
        walk(singleton_nfa(a.base.inner().tokens(), left.letters()));
    }
    std::sort(out.begin(), out.end(), [](const OuterWord& x, const OuterWord& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace sysrel
