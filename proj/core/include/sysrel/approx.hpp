#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sysrel/nfa.hpp"
#include "sysrel/rational.hpp"
#include "sysrel/sca.hpp"

namespace sysrel {

enum class ProblemKind { Emptiness, Universality, Inclusion };

std::string problem_name(ProblemKind kind);

/// A decided level-n instance together with the automata the verdict was
/// computed from, so it can be reproduced.
struct ApproxDecision {
    ProblemKind problem;
    int level = 0;
    bool verdict = false;
    Nfa left;
    std::optional<Nfa> right;
};

/// The n-approximation language: the union over accepting pairs of the chi
/// automata of their level-n pad extensions. Recognizes a regular superset
/// of the exact language that shrinks as n grows.
Nfa approx_language(const Sca& a, int n);

ApproxDecision decide_empty_n(const Sca& a, int n);
ApproxDecision decide_universal_n(const Sca& a, int n);
ApproxDecision decide_inclusion_n(const Sca& a, const Sca& b, int n);

/// The finite prefix (Lim_1, ..., Lim_N) of the running fraction of levels
/// at which the verdicts are positive.
std::vector<Rational> lim_prefix(const std::vector<bool>& verdicts);

/// Estimator for the inclusion instance L(a) included in L(b): per-level
/// verdicts at levels 1..horizon, folded into running fractions.
std::vector<Rational> lim_estimate(const Sca& a, const Sca& b, int horizon);

struct Budget {
    std::size_t max_word_len = 6;
    int max_level = 3;
    std::optional<std::size_t> max_monoid_states;
};

struct BudgetReport {
    std::size_t words_tested = 0;
    std::size_t max_len_reached = 0;
    int max_level_reached = 0;
    bool level_budget_hit = false;
};

/// Outcome of the interleaved semi-decision procedure for reachability.
struct SemiDecisionOutcome {
    enum class Kind { Reached, EmptyCertificate, Exhausted };
    Kind kind = Kind::Exhausted;
    OuterWord witness;   // meaningful for Reached
    int level = 0;       // meaningful for EmptyCertificate
    BudgetReport report;
};

/// Alternates enumerating outer words by length with raising the projection
/// level and testing emptiness of the chi language. Sound in both positive
/// directions; termination within the budget is not guaranteed, and an
/// exhausted budget is an ordinary outcome.
SemiDecisionOutcome reach_semidecide(const SemiSca& s, const Word& x, const Word& y,
                                     const Budget& budget);

} // namespace sysrel
