#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sysrel/sca.hpp"
#include "sysrel/transducer.hpp"

namespace sysrel {

/// One pushdown move: in `from`, reading `input` (nullopt for epsilon) with
/// `top` on the stack, go to `to` and replace the top by `push` (bottom
/// first; empty = pop). Acceptance is by empty stack.
struct PdaTransition {
    std::string from;
    std::optional<std::string> input;
    std::string top;
    std::string to;
    std::vector<std::string> push;

    auto operator<=>(const PdaTransition&) const = default;
};

struct Pda {
    std::vector<std::string> states;
    TokenSet inputs;
    TokenSet stack;
    std::string initial;
    /// Empty optional = start with the empty stack (the word is accepted
    /// immediately, so the language contains epsilon).
    std::optional<std::string> initial_stack;
    std::vector<PdaTransition> transitions;

    bool operator==(const Pda&) const = default;
};

/// Throws unless the machine is well-formed, push strings have length at
/// most 2, and there are no epsilon-input moves.
void require_normalized(const Pda& p);

struct LegendEntry {
    std::string kind;     // "control", "stack", "pad", "absorb"
    std::string payload;  // state or stack letter; empty otherwise
};

struct PdaEncoding {
    Sca sca;
    /// Inner letter -> meaning, for human inspection of encoded words.
    std::map<std::string, LegendEntry> legend;
    /// The encoded configuration of (state, stack).
    Word config(const std::string& state, const std::vector<std::string>& stack) const;
    Alphabet inner;

private:
    friend PdaEncoding encode_pda(const Pda& p);
    std::map<std::string, std::string> control_token_;
};

/// Encodes a normalized pushdown automaton as an automaton over relations:
/// one machine per input letter realizing all moves on that letter, with
/// pop moves overwriting the popped symbol by the pad, push moves guessing
/// the first trailing pad, and every wrong guess routed through the
/// absorbing symbol. The accepting relation pairs the initial configuration
/// with the empty-stack configurations, so the outer language equals the
/// pushdown language.
PdaEncoding encode_pda(const Pda& p);

/// One update rule of a region: applies when every guarded earlier region
/// has the required first letter; transforms the region's letters pointwise.
/// Pads always pass through unchanged.
struct HierarchyRule {
    std::map<int, std::string> guard;
    std::map<std::string, std::string> transform;
};

/// A layout of fixed-width regions over an alphabet with an absorbing
/// symbol, plus per-region rule lists (first match wins, identity default).
struct HierarchySpec {
    Alphabet alphabet;
    std::vector<int> widths;
    std::vector<std::vector<HierarchyRule>> rules;
};

/// Deterministic machine computing each region's update as a function of the
/// first letters of already-read regions; subsequential by construction.
/// Inputs longer than the layout are routed through the absorbing symbol.
SysTransducer build_hierarchy_machine(const HierarchySpec& spec);

/// The set of transition words carrying the level-n ball around x into the
/// level-n ball around y; larger n means a smaller ball.
Nfa region_query(const SemiSca& s, const Word& x, const Word& y, int n);

} // namespace sysrel
