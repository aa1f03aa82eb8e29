#pragma once

#include <set>
#include <vector>

#include "sysrel/projection.hpp"
#include "sysrel/sca.hpp"
#include "sysrel/transducer.hpp"
#include "sysrel/words.hpp"

namespace sysrel::oracle {

/// Bounds for brute-force enumeration. The simulation span for one input x
/// is |x| + pad_extension steps; pad_extension defaults to |x| + |Q|.
struct SimConfig {
    std::size_t max_input_len = 3;
    std::optional<std::size_t> pad_extension;
    std::size_t max_output_len = 12;
    std::size_t max_outer_len = 6;
};

/// Outputs reached on input x within the simulation span, by direct padded
/// run enumeration; keeps outputs whose runs reach an all-pad cycle.
std::set<Word> brute_image(const SysTransducer& t, const Word& x, const SimConfig& cfg);

/// All pairs (x, y) with |x| bounded by the configuration.
std::set<WordPair> brute_pairs(const SysTransducer& t, const SimConfig& cfg);

/// Plain path enumeration of length n from the initial state.
FiniteRelation brute_sigma(const SysTransducer& t, int n);

/// Level-n path relation of a chain of machines composed left to right,
/// simulated on state tuples; the empty chain yields the identity relation.
FiniteRelation brute_sigma_chain(const Alphabet& alphabet,
                                 const std::vector<const SysTransducer*>& chain, int n);

/// Membership loop over accepting pairs via bounded image chaining.
bool brute_member(const Sca& a, const OuterWord& w, const SimConfig& cfg);

/// Accepted outer words up to max_len, with dead prefixes pruned.
std::set<OuterWord> brute_language(const Sca& a, std::size_t max_len, const SimConfig& cfg);

struct BruteClosure {
    FiniteRelation relation;
    int rounds = 0;
};

/// Naive iterated composition with union, at most max_rounds rounds.
BruteClosure brute_closure(const Alphabet& alphabet, const std::vector<FiniteRelation>& gens,
                           int max_rounds);

} // namespace sysrel::oracle
