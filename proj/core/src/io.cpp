#include "sysrel/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sysrel/error.hpp"

namespace sysrel::io {

namespace {

/// Tokenized line with the leading keyword split off; `#` at token start
/// comments out the rest of the line.
struct Line {
    std::string keyword;
    std::vector<std::string> args;
    std::string raw;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
        std::istringstream ls(raw);
        std::vector<std::string> toks;
        std::string tok;
        while (ls >> tok) {
            if (tok[0] == '#') break;
            toks.push_back(tok);
        }
        if (toks.empty()) continue;
        Line line;
        line.keyword = toks.front();
        line.args.assign(toks.begin() + 1, toks.end());
        line.raw = raw;
        lines.push_back(std::move(line));
    }
    return lines;
}

void require_header(const std::vector<Line>& lines, const std::string& name) {
    if (lines.empty() || lines.front().keyword != name ||
        lines.front().args != std::vector<std::string>{"v1"})
        throw ParseError("expected header '" + name + " v1'");
}

/// Extracts the quoted strings of a line, e.g. accept "a b" "c".
std::vector<std::string> quoted_fields(const std::string& raw) {
    std::vector<std::string> fields;
    std::string cur;
    bool open = false;
    for (char c : raw) {
        if (c == '"') {
            if (open) fields.push_back(cur);
            cur.clear();
            open = !open;
        } else if (open) {
            cur += c;
        }
    }
    if (open)
        throw ParseError("unterminated quote: " + raw);
    return fields;
}

Alphabet alphabet_from_lines(const std::vector<Line>& lines, const std::string& context) {
    std::vector<std::string> letters;
    std::optional<std::string> pad, absorb;
    for (const auto& line : lines) {
        if (line.keyword == "alphabet")
            letters = line.args;
        else if (line.keyword == "pad" && line.args.size() == 1)
            pad = line.args[0];
        else if (line.keyword == "absorb" && line.args.size() == 1)
            absorb = line.args[0];
    }
    if (letters.empty())
        throw ParseError(context + ": missing alphabet line");
    if (!pad)
        throw ParseError(context + ": missing pad line");
    return Alphabet(letters, *pad, absorb);
}

} // namespace

SysTransducer parse_transducer(const std::string& text) {
    auto lines = tokenize(text);
    require_header(lines, "sys-transducer");
    Alphabet alphabet;
    try {
        alphabet = alphabet_from_lines(lines, "transducer");
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(std::string("transducer: ") + e.what());
    }
    std::vector<std::string> states;
    std::optional<std::string> initial;
    for (const auto& line : lines) {
        if (line.keyword == "states")
            states = line.args;
        else if (line.keyword == "initial" && line.args.size() == 1)
            initial = line.args[0];
    }
    if (states.empty())
        throw ParseError("transducer: missing states line");
    if (!initial)
        throw ParseError("transducer: missing initial line");
    try {
        SysTransducer t(alphabet, states, *initial);
        for (const auto& line : lines) {
            if (line.keyword != "trans") continue;
            if (line.args.size() != 4)
                throw ParseError("transducer: bad trans line: " + line.raw);
            t.add_transition(line.args[0], line.args[1], line.args[2], line.args[3]);
        }
        return t;
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(std::string("transducer: ") + e.what());
    }
}

std::string serialize_transducer(const SysTransducer& t) {
    std::ostringstream out;
    out << "sys-transducer v1\n";
    out << "alphabet";
    for (const auto& letter : t.alphabet().letters())
        out << ' ' << letter;
    out << "\npad " << t.alphabet().pad() << '\n';
    if (t.alphabet().absorb())
        out << "absorb " << *t.alphabet().absorb() << '\n';
    out << "states";
    for (const auto& name : t.state_names())
        out << ' ' << name;
    out << "\ninitial " << t.state_names()[static_cast<std::size_t>(t.initial())] << '\n';
    for (const auto& tr : t.transitions()) {
        const auto& letters = t.alphabet().letters();
        out << "trans " << t.state_names()[static_cast<std::size_t>(tr.from)] << ' '
            << letters[static_cast<std::size_t>(tr.in)] << ' '
            << letters[static_cast<std::size_t>(tr.out)] << ' '
            << t.state_names()[static_cast<std::size_t>(tr.to)] << '\n';
    }
    return out.str();
}

Sca parse_sca(const std::string& text, const std::filesystem::path& base_dir) {
    auto lines = tokenize(text);
    require_header(lines, "sys-sca");
    Sca a;
    std::vector<std::string> outer;
    for (const auto& line : lines)
        if (line.keyword == "outer")
            outer = line.args;
    if (outer.empty())
        throw ParseError("sca: missing outer line");
    a.base.outer = TokenSet(outer);
    for (const auto& line : lines) {
        if (line.keyword != "map") continue;
        if (line.args.size() != 3 || line.args[1] != "=")
            throw ParseError("sca: bad map line: " + line.raw);
        if (!a.base.outer.contains(line.args[0]))
            throw ParseError("sca: map for unknown outer letter '" + line.args[0] + "'");
        a.base.phi.emplace(line.args[0],
                           parse_transducer(read_text_file(base_dir / line.args[2])));
    }
    for (const auto& letter : outer)
        if (!a.base.phi.count(letter))
            throw ParseError("sca: no map line for outer letter '" + letter + "'");
    const Alphabet& inner = a.base.inner();
    for (const auto& line : lines) {
        if (line.keyword != "accept") continue;
        auto fields = quoted_fields(line.raw);
        if (fields.size() != 2)
            throw ParseError("sca: accept line needs two quoted words: " + line.raw);
        try {
            a.accepting.push_back(
                WordPair{parse_word(inner, fields[0]), parse_word(inner, fields[1])});
        } catch (const Error& e) {
            throw ParseError(std::string("sca: ") + e.what());
        }
    }
    return a;
}

std::string serialize_sca(const Sca& a, const std::map<std::string, std::string>& machine_files) {
    std::ostringstream out;
    out << "sys-sca v1\n";
    out << "outer";
    for (const auto& letter : a.base.outer.tokens())
        out << ' ' << letter;
    out << '\n';
    for (const auto& letter : a.base.outer.tokens()) {
        auto it = machine_files.find(letter);
        if (it == machine_files.end())
            throw Error("serialize_sca: no file name for outer letter '" + letter + "'");
        out << "map " << letter << " = " << it->second << '\n';
    }
    for (const auto& pair : a.accepting)
        out << "accept \"" << pair.left.str() << "\" \"" << pair.right.str() << "\"\n";
    return out.str();
}

Pda parse_pda(const std::string& text) {
    auto lines = tokenize(text);
    require_header(lines, "sys-pda");
    Pda p;
    for (const auto& line : lines) {
        if (line.keyword == "states")
            p.states = line.args;
        else if (line.keyword == "inputs")
            p.inputs = TokenSet(line.args);
        else if (line.keyword == "stack")
            p.stack = TokenSet(line.args);
        else if (line.keyword == "initial" && line.args.size() == 1)
            p.initial = line.args[0];
        else if (line.keyword == "stack-init" && line.args.size() == 1)
            p.initial_stack = line.args[0] == "-"
                                  ? std::nullopt
                                  : std::optional<std::string>(line.args[0]);
    }
    if (p.states.empty())
        throw ParseError("pda: missing states line");
    if (p.initial.empty())
        throw ParseError("pda: missing initial line");
    for (const auto& line : lines) {
        if (line.keyword != "trans") continue;
        // trans <q> <in|-> <top> -> <q'> [g1 [g2]]
        if (line.args.size() < 5 || line.args[3] != "->")
            throw ParseError("pda: bad trans line: " + line.raw);
        PdaTransition tr;
        tr.from = line.args[0];
        tr.input = line.args[1] == "-" ? std::nullopt
                                       : std::optional<std::string>(line.args[1]);
        tr.top = line.args[2];
        tr.to = line.args[4];
        tr.push.assign(line.args.begin() + 5, line.args.end());
        p.transitions.push_back(std::move(tr));
    }
    std::sort(p.transitions.begin(), p.transitions.end());
    p.transitions.erase(std::unique(p.transitions.begin(), p.transitions.end()),
                        p.transitions.end());
    return p;
}

std::string serialize_pda(const Pda& p) {
    std::ostringstream out;
    out << "sys-pda v1\n";
    out << "states";
    for (const auto& q : p.states) out << ' ' << q;
    out << "\ninputs";
    for (const auto& i : p.inputs.tokens()) out << ' ' << i;
    out << "\nstack";
    for (const auto& g : p.stack.tokens()) out << ' ' << g;
    out << "\ninitial " << p.initial << '\n';
    out << "stack-init " << (p.initial_stack ? *p.initial_stack : "-") << '\n';
    auto transitions = p.transitions;
    std::sort(transitions.begin(), transitions.end());
    for (const auto& tr : transitions) {
        out << "trans " << tr.from << ' ' << (tr.input ? *tr.input : "-") << ' ' << tr.top
            << " -> " << tr.to;
        for (const auto& g : tr.push) out << ' ' << g;
        out << '\n';
    }
    return out.str();
}

AlphabetSpec parse_alphabet(const std::string& text) {
    auto lines = tokenize(text);
    require_header(lines, "sys-alphabet");
    AlphabetSpec spec;
    try {
        spec.alphabet = alphabet_from_lines(lines, "alphabet");
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(std::string("alphabet: ") + e.what());
    }
    for (const auto& line : lines)
        if (line.keyword == "order")
            spec.digit_order = line.args;
    return spec;
}

std::string legend_text(const std::map<std::string, LegendEntry>& legend) {
    std::ostringstream out;
    out << "sys-legend v1\n";
    for (const auto& [token, entry] : legend) {
        out << "letter " << token << ' ' << entry.kind;
        if (!entry.payload.empty())
            out << ' ' << entry.payload;
        out << '\n';
    }
    return out.str();
}

std::string dump_relation(const FiniteRelation& r) {
    std::ostringstream out;
    for (const auto& [u, v] : r.pairs()) {
        for (std::size_t i = 0; i < u.size(); ++i)
            out << (i ? " " : "") << u[i];
        out << "  ->  ";
        for (std::size_t i = 0; i < v.size(); ++i)
            out << (i ? " " : "") << v[i];
        out << '\n';
    }
    return out.str();
}

std::string dump_nfa(const Nfa& a) {
    std::ostringstream out;
    out << "nfa states " << a.states << '\n';
    out << "initial";
    for (int q : a.initial) out << ' ' << q;
    out << "\naccepting";
    for (int q : a.accepting) out << ' ' << q;
    out << '\n';
    for (int q = 0; q < a.states; ++q)
        for (const auto& [letter, targets] : a.delta[static_cast<std::size_t>(q)])
            for (int t : targets)
                out << "edge " << q << ' '
                    << a.alphabet.tokens()[static_cast<std::size_t>(letter)] << ' ' << t
                    << '\n';
    return out.str();
}

std::string to_dot(const SysTransducer& t) {
    std::ostringstream out;
    out << "digraph transducer {\n  rankdir = LR;\n  node [shape = circle];\n";
    out << "  __start [shape = point];\n";
    out << "  __start -> \"" << t.state_names()[static_cast<std::size_t>(t.initial())]
        << "\";\n";
    const auto& letters = t.alphabet().letters();
    for (const auto& tr : t.transitions())
        out << "  \"" << t.state_names()[static_cast<std::size_t>(tr.from)] << "\" -> \""
            << t.state_names()[static_cast<std::size_t>(tr.to)] << "\" [label = \""
            << letters[static_cast<std::size_t>(tr.in)] << ":"
            << letters[static_cast<std::size_t>(tr.out)] << "\"];\n";
    out << "}\n";
    return out.str();
}

std::string to_dot(const Nfa& a) {
    std::ostringstream out;
    out << "digraph nfa {\n  rankdir = LR;\n  node [shape = circle];\n";
    for (int q : a.accepting)
        out << "  " << q << " [shape = doublecircle];\n";
    int start_marker = 0;
    for (int q : a.initial) {
        out << "  __start" << start_marker << " [shape = point];\n";
        out << "  __start" << start_marker << " -> " << q << ";\n";
        ++start_marker;
    }
    for (int q = 0; q < a.states; ++q)
        for (const auto& [letter, targets] : a.delta[static_cast<std::size_t>(q)])
            for (int t : targets)
                out << "  " << q << " -> " << t << " [label = \""
                    << a.alphabet.tokens()[static_cast<std::size_t>(letter)] << "\"];\n";
    out << "}\n";
    return out.str();
}

std::string to_dot(const MonoidAutomaton& m) {
    std::ostringstream out;
    out << "digraph monoid {\n  rankdir = LR;\n  node [shape = circle];\n";
    for (std::size_t s = 0; s < m.states.size(); ++s)
        out << "  " << s << " [label = \"S" << s << "\\n" << m.states[s].size()
            << " pairs\"];\n";
    out << "  __start [shape = point];\n  __start -> " << m.initial << ";\n";
    for (std::size_t s = 0; s < m.states.size(); ++s)
        for (std::size_t li = 0; li < m.outer.size(); ++li)
            out << "  " << s << " -> " << m.step[s][li] << " [label = \""
                << m.outer.tokens()[li] << "\"];\n";
    out << "}\n";
    return out.str();
}

std::string decision_record(const ApproxDecision& d, double millis) {
    nlohmann::json j;
    j["problem"] = problem_name(d.problem);
    j["n"] = d.level;
    j["verdict"] = d.verdict;
    j["left_states"] = d.left.states;
    if (d.right)
        j["right_states"] = d.right->states;
    j["millis"] = millis;
    return j.dump();
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot read file: " + path.string());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot write file: " + path.string());
    out << text;
}

} // namespace sysrel::io
