#include "sysrel/approx.hpp"

#include "sysrel/error.hpp"

namespace sysrel {

std::string problem_name(ProblemKind kind) {
    switch (kind) {
        case ProblemKind::Emptiness: return "emptiness";
        case ProblemKind::Universality: return "universality";
        case ProblemKind::Inclusion: return "inclusion";
    }
    return "?";
}

Nfa approx_language(const Sca& a, int n) {
    if (n < 1)
        throw Error("approx_language: level must be at least 1");
    Nfa out = empty_nfa(a.base.outer);
    for (const auto& pair : a.accepting) {
        const Alphabet& inner = a.base.inner();
        Nfa chi = chi_nfa(a.base.outer, a.base.phi,
                          pad_to(inner, pair.left, static_cast<std::size_t>(n)),
                          pad_to(inner, pair.right, static_cast<std::size_t>(n)));
        out = nfa_union(out, chi);
    }
    return out;
}

ApproxDecision decide_empty_n(const Sca& a, int n) {
    ApproxDecision d;
    d.problem = ProblemKind::Emptiness;
    d.level = n;
    d.left = approx_language(a, n);
    d.verdict = is_empty(d.left);
    return d;
}

ApproxDecision decide_universal_n(const Sca& a, int n) {
    ApproxDecision d;
    d.problem = ProblemKind::Universality;
    d.level = n;
    d.left = approx_language(a, n);
    d.verdict = is_universal(d.left);
    return d;
}

ApproxDecision decide_inclusion_n(const Sca& a, const Sca& b, int n) {
    if (!(a.base.outer == b.base.outer))
        throw Error("inclusion: outer alphabet mismatch");
    ApproxDecision d;
    d.problem = ProblemKind::Inclusion;
    d.level = n;
    d.left = approx_language(a, n);
    d.right = approx_language(b, n);
    d.verdict = includes(d.left, *d.right);
    return d;
}

std::vector<Rational> lim_prefix(const std::vector<bool>& verdicts) {
    std::vector<Rational> out;
    out.reserve(verdicts.size());
    std::int64_t positive = 0;
    for (std::size_t i = 0; i < verdicts.size(); ++i) {
        if (verdicts[i]) ++positive;
        out.emplace_back(positive, static_cast<std::int64_t>(i + 1));
    }
    return out;
}

std::vector<Rational> lim_estimate(const Sca& a, const Sca& b, int horizon) {
    if (horizon < 1)
        throw Error("lim_estimate: horizon must be at least 1");
    std::vector<bool> verdicts;
    verdicts.reserve(static_cast<std::size_t>(horizon));
    for (int n = 1; n <= horizon; ++n)
        verdicts.push_back(decide_inclusion_n(a, b, n).verdict);
    return lim_prefix(verdicts);
}

SemiDecisionOutcome reach_semidecide(const SemiSca& s, const Word& x, const Word& y,
                                     const Budget& budget) {
    s.check();
    SemiDecisionOutcome outcome;
    const Alphabet& inner = s.inner();
    Sca query = reach_query(s, x, y);

    std::size_t len = 0;
    int level = 0;
    bool words_left = true;
    bool levels_left = budget.max_level >= 1;
    while (words_left || levels_left) {
        if (words_left) {
            for (const auto& w : outer_words_of_length(s.outer, len)) {
                ++outcome.report.words_tested;
                if (member(query, w)) {
                    outcome.kind = SemiDecisionOutcome::Kind::Reached;
                    outcome.witness = w;
                    return outcome;
                }
            }
            outcome.report.max_len_reached = len;
            if (len == budget.max_word_len)
                words_left = false;
            else
                ++len;
        }
        if (levels_left) {
            ++level;
            try {
                Nfa chi = chi_nfa(s.outer, s.phi,
                                  pad_to(inner, x, static_cast<std::size_t>(level)),
                                  pad_to(inner, y, static_cast<std::size_t>(level)),
                                  budget.max_monoid_states);
                outcome.report.max_level_reached = level;
                if (is_empty(chi)) {
                    outcome.kind = SemiDecisionOutcome::Kind::EmptyCertificate;
                    outcome.level = level;
                    return outcome;
                }
            } catch (const BudgetExceeded&) {
                outcome.report.level_budget_hit = true;
                levels_left = false;
            }
            if (level >= budget.max_level)
                levels_left = false;
        }
    }
    outcome.kind = SemiDecisionOutcome::Kind::Exhausted;
    return outcome;
}

} // namespace sysrel
