#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sysrel/approx.hpp"
#include "sysrel/encoders.hpp"
#include "sysrel/projection.hpp"
#include "sysrel/sca.hpp"
#include "sysrel/transducer.hpp"

namespace sysrel::io {

/// Line-oriented UTF-8, whitespace-separated tokens, `#` starts a comment.
/// Serializer output re-parses to an equal value.

SysTransducer parse_transducer(const std::string& text);
std::string serialize_transducer(const SysTransducer& t);

/// `map` lines name machine files relative to base_dir.
Sca parse_sca(const std::string& text, const std::filesystem::path& base_dir);
/// machine_files maps each outer letter to the file name written next to
/// the .sca document.
std::string serialize_sca(const Sca& a, const std::map<std::string, std::string>& machine_files);

Pda parse_pda(const std::string& text);
std::string serialize_pda(const Pda& p);

struct AlphabetSpec {
    Alphabet alphabet;
    std::optional<std::vector<std::string>> digit_order;
};
AlphabetSpec parse_alphabet(const std::string& text);

std::string legend_text(const std::map<std::string, LegendEntry>& legend);

/// Sorted dump, one pair per line: "u  ->  v".
std::string dump_relation(const FiniteRelation& r);
std::string dump_nfa(const Nfa& a);

std::string to_dot(const SysTransducer& t);
std::string to_dot(const Nfa& a);
std::string to_dot(const MonoidAutomaton& m);

/// One JSON object per decision, suitable for appending to a .jsonl report.
std::string decision_record(const ApproxDecision& d, double millis);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

} // namespace sysrel::io
