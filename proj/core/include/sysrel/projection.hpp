#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sysrel/nfa.hpp"
#include "sysrel/transducer.hpp"
#include "sysrel/words.hpp"

namespace sysrel {

using LetterSeq = std::vector<std::string>;

/// A finite relation over length-n letter sequences: the image of a
/// relation under the level-n prefix projection. Pairs are kept sorted and
/// unique, so equality of relations is structural equality.
class FiniteRelation {
public:
    FiniteRelation() = default;
    FiniteRelation(int level, std::vector<std::pair<LetterSeq, LetterSeq>> pairs);

    int level() const { return level_; }
    const std::vector<std::pair<LetterSeq, LetterSeq>>& pairs() const { return pairs_; }
    std::size_t size() const { return pairs_.size(); }
    bool contains(const LetterSeq& u, const LetterSeq& v) const;

    auto operator<=>(const FiniteRelation&) const = default;

private:
    int level_ = 0;
    std::vector<std::pair<LetterSeq, LetterSeq>> pairs_;
};

/// The identity relation { (u, u) : u over the alphabet, |u| = n }.
FiniteRelation identity_relation(const Alphabet& alphabet, int n);

/// Ordinary relation composition at one level.
FiniteRelation compose_fr(const FiniteRelation& s, const FiniteRelation& t);

/// i-th coordinate projection (1-based) of a finite relation; level 1 result.
FiniteRelation tau_of(const FiniteRelation& s, int i);

/// The level-n prefix projection of a machine: the set of (input, output)
/// prefixes labeling length-n paths from the initial state. Totality and
/// pad-finiteness guarantee that every such prefix extends to a pair of the
/// relation, so no filtering is required.
FiniteRelation sigma_n(const SysTransducer& t, int n);

/// The n-th coordinate projection of sigma_n.
FiniteRelation tau_n(const SysTransducer& t, int n);

struct ClosureResult {
    /// The union of the generated monoid together with the identity.
    FiniteRelation relation;
    /// Every element of the generated monoid (identity first).
    std::vector<FiniteRelation> monoid;
    /// Number of composition rounds that grew the union.
    int rounds = 0;
};

/// Composition closure with union: fixpoint iteration over the monoid
/// generated by `gens`, memoizing seen relations and stopping at the first
/// round that discovers nothing new.
ClosureResult closure_plus(const Alphabet& alphabet, const std::vector<FiniteRelation>& gens);

/// True when the i-th coordinate projection is a composition homomorphism
/// on the given monoid: tau(S o S') = tau(S) o tau(S') for all members.
bool tau_homomorphic(const std::vector<FiniteRelation>& monoid, int i);

/// Deterministic complete automaton over the outer alphabet whose states are
/// level-n relations: state S steps by letter a to compose_fr(S, sigma_n(phi(a))).
struct MonoidAutomaton {
    TokenSet outer;
    int level = 0;
    std::vector<FiniteRelation> states;
    int initial = 0;
    /// step[state][outer-letter-index]
    std::vector<std::vector<int>> step;

    int state_on(const OuterWord& w) const;
};

/// Builds the monoid automaton; states are discovered on the fly from the
/// identity relation. Throws BudgetExceeded when `state_limit` is hit.
MonoidAutomaton build_monoid_automaton(const TokenSet& outer,
                                       const std::map<std::string, SysTransducer>& phi,
                                       int n,
                                       std::optional<std::size_t> state_limit = std::nullopt);

/// The regular language { w : (u, v) in sigma_n(phi(w)) } as an automaton
/// over the outer alphabet. |u| = |v| = n is required.
Nfa chi_nfa(const TokenSet& outer, const std::map<std::string, SysTransducer>& phi,
            const LetterSeq& u, const LetterSeq& v,
            std::optional<std::size_t> state_limit = std::nullopt);

/// Projection-level simulation of epsilon transitions: wraps the level-n
/// projection of every letter machine in the closure of the level-n
/// projection of the epsilon machine.
std::map<std::string, FiniteRelation>
eps_saturate(const TokenSet& outer, const std::map<std::string, SysTransducer>& phi,
             const SysTransducer& eps, int n);

} // namespace sysrel
