#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sysrel/nfa.hpp"
#include "sysrel/words.hpp"

namespace sysrel {

/// One letter-to-letter step: consume `in`, emit `out`, move `from` -> `to`.
/// Letters are indices into the machine's alphabet, states indices into its
/// state list.
struct Transition {
    int from;
    int in;
    int out;
    int to;

    auto operator<=>(const Transition&) const = default;
};

/// A total, epsilon-free, letter-synchronous transducer without accepting
/// states: the machine form of a synchronous subsequential relation on
/// padded words. Validity (totality and pad-finiteness) is checked by
/// validate(), not enforced structurally.
class SysTransducer {
public:
    SysTransducer() = default;
    SysTransducer(Alphabet alphabet, std::vector<std::string> states,
                  const std::string& initial);

    void add_transition(const std::string& from, const std::string& in,
                        const std::string& out, const std::string& to);

    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<std::string>& state_names() const { return state_names_; }
    std::size_t state_count() const { return state_names_.size(); }
    int initial() const { return initial_; }
    int state_index(const std::string& name) const;
    const std::set<Transition>& transitions() const { return transitions_; }

    bool operator==(const SysTransducer& o) const {
        return alphabet_ == o.alphabet_ && state_names_ == o.state_names_ &&
               initial_ == o.initial_ && transitions_ == o.transitions_;
    }

private:
    Alphabet alphabet_;
    std::vector<std::string> state_names_;
    std::map<std::string, int> state_index_;
    int initial_ = -1;
    std::set<Transition> transitions_;

    // derived data, recomputed lazily after mutation
    mutable std::optional<bool> valid_cache_;
    mutable std::optional<std::vector<bool>> pad_live_cache_;
    friend void require_valid(const SysTransducer&);
    friend const std::vector<bool>& pad_live(const SysTransducer&);
};

struct ValidationReport {
    bool is_valid = false;
    /// Reachable (state, letter) pairs with no outgoing transition.
    std::vector<std::pair<std::string, std::string>> totality_violations;
    /// Pad-input transitions with non-pad output lying on a pad-input cycle.
    std::vector<Transition> pad_cycle_violations;
    /// Greatest set F such that every pad-input transition from a member
    /// outputs pad and targets a member.
    std::set<std::string> final_states;
};

ValidationReport validate(const SysTransducer& t);

/// Throws ValidationError unless validate(t).is_valid.
void require_valid(const SysTransducer& t);

/// Per-state flags: an infinite run consuming pads and emitting pads exists.
const std::vector<bool>& pad_live(const SysTransducer& t);

/// Decides (x . pad^omega, y . pad^omega) in the relation of t.
bool pair_member(const SysTransducer& t, const Word& x, const Word& y);

/// Automaton over the inner alphabet recognizing the eta-images of all
/// outputs reachable on input x . pad^omega.
Nfa image_nfa(const SysTransducer& t, const Word& x);

/// Image of a whole input language: the union of image_nfa over all words
/// accepted by `inputs` (an automaton over the same inner alphabet).
Nfa image_of_language(const SysTransducer& t, const Nfa& inputs);

/// Product machine realizing relation composition: first t1, then t2.
SysTransducer compose(const SysTransducer& t1, const SysTransducer& t2);

/// The product alphabet of two inner alphabets, with (pad, pad) identified
/// as the pad of the product. Other letter pairs get fresh composite tokens.
class ProductAlphabet {
public:
    ProductAlphabet() = default;
    ProductAlphabet(const Alphabet& left, const Alphabet& right);

    const Alphabet& alphabet() const { return product_; }
    const std::string& token(const std::string& left, const std::string& right) const;
    /// The (left, right) pair a composite token stands for.
    const std::pair<std::string, std::string>& components(const std::string& token) const;
    /// Interleaves two words into one word over the product alphabet.
    Word zip(const Word& left, const Word& right) const;

private:
    Alphabet left_;
    Alphabet right_;
    Alphabet product_;
    std::map<std::pair<std::string, std::string>, std::string> token_;
    std::map<std::string, std::pair<std::string, std::string>> components_;
};

/// Machine over the product alphabet realizing the pad-fused pairing of the
/// two relations: a pair of zipped words belongs to it iff each component
/// pair belongs to the corresponding factor.
SysTransducer diamond(const SysTransducer& t1, const SysTransducer& t2,
                      const ProductAlphabet& prod);
SysTransducer diamond(const SysTransducer& t1, const SysTransducer& t2);

/// One-state machine realizing the identity relation.
SysTransducer identity_transducer(const Alphabet& alphabet);

/// Machine whose clean (absorb-free) relation is empty: every run emits the
/// absorbing symbol immediately. Requires an absorb symbol in the alphabet.
SysTransducer absorb_router(const Alphabet& alphabet);

} // namespace sysrel
