#pragma once

#include <map>
#include <string>
#include <vector>

#include "sysrel/projection.hpp"
#include "sysrel/transducer.hpp"
#include "sysrel/words.hpp"

namespace sysrel {

/// A semi-automaton: an outer alphabet together with one letter machine per
/// outer letter, all over one inner alphabet. The empty outer word is always
/// interpreted as the identity relation.
struct SemiSca {
    TokenSet outer;
    std::map<std::string, SysTransducer> phi;

    const SysTransducer& machine(const std::string& outer_letter) const;
    const Alphabet& inner() const;
    void check() const;
};

/// A full automaton: a semi-automaton plus a finite accepting relation.
struct Sca {
    SemiSca base;
    std::vector<WordPair> accepting;
};

/// Left-to-right composition of the letter machines; the empty word yields
/// the identity machine.
SysTransducer phi_of_word(const SemiSca& s, const OuterWord& w);

/// Language membership: some accepting pair belongs to the relation of w.
bool member(const Sca& a, const OuterWord& w);

/// Packages the reachability question "is (x, y) in phi(w) for some w" as
/// emptiness of an automaton with the singleton accepting relation {(x, y)}.
Sca reach_query(const SemiSca& s, const Word& x, const Word& y);

/// Intersection via the pairwise diamond product. Outer alphabets are
/// unified; letters missing on one side are mapped to the absorb-everything
/// machine, which requires that side's inner alphabet to have an absorbing
/// symbol.
Sca intersect_sca(const Sca& a, const Sca& b);

/// Every accepted outer word of length at most max_len, computed by a
/// prefix-shared image sweep (dead prefixes are pruned).
std::vector<OuterWord> language_upto(const Sca& a, std::size_t max_len);

} // namespace sysrel
