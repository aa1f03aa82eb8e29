#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "sysrel/words.hpp"

namespace sysrel {

/// Nondeterministic finite automaton over an explicit token alphabet.
/// A token never enters an automaton implicitly: every edge label is an
/// index into `alphabet`, and binary operations require equal alphabets so
/// that chi automata over the outer alphabet and image automata over the
/// inner alphabet can never mix.
struct Nfa {
    TokenSet alphabet;
    int states = 0;
    std::set<int> initial;
    std::set<int> accepting;
    /// delta[state][letter-index] = successor set
    std::vector<std::map<int, std::set<int>>> delta;

    int add_state();
    void add_edge(int from, int letter, int to);
    void add_edge(int from, const std::string& letter, int to);
};

/// Automaton recognizing the empty language.
Nfa empty_nfa(const TokenSet& alphabet);
/// Automaton recognizing every word over the alphabet.
Nfa universal_nfa(const TokenSet& alphabet);
/// Automaton recognizing exactly the given word.
Nfa singleton_nfa(const TokenSet& alphabet, const std::vector<std::string>& word);

bool word_in(const Nfa& a, const std::vector<std::string>& word);

/// Product construction; languages intersect. Requires equal alphabets.
Nfa intersect(const Nfa& a, const Nfa& b);
/// Disjoint-sum union. Requires equal alphabets.
Nfa nfa_union(const Nfa& a, const Nfa& b);
/// Subset construction; the result is deterministic and complete.
Nfa determinize(const Nfa& a);
/// Complement via determinization.
Nfa complement(const Nfa& a);
/// Restriction to reachable and co-reachable states.
Nfa trim(const Nfa& a);

bool is_empty(const Nfa& a);
bool is_universal(const Nfa& a);
/// includes(a, b) holds iff language(a) is a subset of language(b).
bool includes(const Nfa& a, const Nfa& b);
bool is_finite(const Nfa& a);

/// Accepted words of length at most max_len, ordered by (length, lex).
std::vector<std::vector<std::string>> enumerate_language(const Nfa& a, std::size_t max_len);

/// language(a) restricted to words avoiding the forbidden token.
Nfa right_strip_filter(const Nfa& a, const std::string& forbidden);

} // namespace sysrel
