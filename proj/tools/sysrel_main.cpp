// Command-line front end: validation, application, composition, projection,
// chi languages, approximation decisions, estimators, reachability probes,
// pushdown encoding, and the distance layer.
//
// Exit codes: 0 positive verdict / success, 1 negative verdict, 2 exhausted
// budget, 3 usage or parse error, 4 validation failure.

#include <chrono>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sysrel/approx.hpp"
#include "sysrel/distance.hpp"
#include "sysrel/encoders.hpp"
#include "sysrel/io.hpp"
#include "sysrel/projection.hpp"
#include "sysrel/sca.hpp"

namespace {

using namespace sysrel;
namespace fs = std::filesystem;

constexpr int kExitPositive = 0;
constexpr int kExitNegative = 1;
constexpr int kExitExhausted = 2;
constexpr int kExitUsage = 3;
constexpr int kExitInvalid = 4;

SysTransducer load_transducer(const std::string& path) {
    return io::parse_transducer(io::read_text_file(path));
}

Sca load_sca(const std::string& path) {
    fs::path p(path);
    return io::parse_sca(io::read_text_file(p), p.parent_path());
}

int cmd_validate(const std::string& file, const std::string& dot_file) {
    SysTransducer t = load_transducer(file);
    ValidationReport report = validate(t);
    if (!dot_file.empty())
        io::write_text_file(dot_file, io::to_dot(t));
    if (report.is_valid) {
        std::cout << "valid: " << t.state_count() << " states, "
                  << t.transitions().size() << " transitions\n";
        std::cout << "final states:";
        for (const auto& name : report.final_states)
            std::cout << ' ' << name;
        std::cout << '\n';
        return kExitPositive;
    }
    for (const auto& [state, letter] : report.totality_violations)
        std::cout << "missing transition: state " << state << ", letter " << letter
                  << '\n';
    for (const auto& tr : report.pad_cycle_violations)
        std::cout << "pad cycle emits non-pad: "
                  << t.state_names()[static_cast<std::size_t>(tr.from)] << " -> "
                  << t.state_names()[static_cast<std::size_t>(tr.to)] << '\n';
    return kExitInvalid;
}

int cmd_apply(const std::string& file, const std::string& input, bool strip_absorb,
              const std::string& dot_file) {
    SysTransducer t = load_transducer(file);
    Word x = parse_word(t.alphabet(), input);
    Nfa image = image_nfa(t, x);
    if (strip_absorb) {
        if (!t.alphabet().absorb())
            throw Error("--strip-absorb: alphabet has no absorbing symbol");
        image = trim(right_strip_filter(image, *t.alphabet().absorb()));
    }
    if (!dot_file.empty())
        io::write_text_file(dot_file, io::to_dot(image));
    if (is_finite(image)) {
        auto words = enumerate_language(image, static_cast<std::size_t>(image.states));
        std::cout << "finite image, " << words.size() << " words\n";
        for (const auto& w : words)
            std::cout << '"' << eta_normalize(t.alphabet(), w).str() << "\"\n";
    } else {
        std::cout << "infinite image\n" << io::dump_nfa(image);
    }
    return kExitPositive;
}

int cmd_compose(const std::string& left, const std::string& right,
                const std::string& out) {
    SysTransducer composed = compose(load_transducer(left), load_transducer(right));
    io::write_text_file(out, io::serialize_transducer(composed));
    std::cout << "wrote " << out << " (" << composed.state_count() << " states)\n";
    return kExitPositive;
}

int cmd_project(const std::string& file, int level) {
    std::cout << io::dump_relation(sigma_n(load_transducer(file), level));
    return kExitPositive;
}

int cmd_chi(const std::string& file, const std::vector<std::string>& pair, int level,
            const std::string& dot_file) {
    Sca sca = load_sca(file);
    sca.base.check();
    const Alphabet& inner = sca.base.inner();
    Nfa chi = chi_nfa(
        sca.base.outer, sca.base.phi,
        pad_to(inner, parse_word(inner, pair[0]), static_cast<std::size_t>(level)),
        pad_to(inner, parse_word(inner, pair[1]), static_cast<std::size_t>(level)));
    if (!dot_file.empty())
        io::write_text_file(dot_file, io::to_dot(chi));
    std::cout << "chi automaton: " << chi.states << " states, "
              << (is_empty(chi) ? "empty" : "nonempty") << " language\n";
    return kExitPositive;
}

int cmd_approx(const std::string& file, int level, const std::string& problem,
               const std::string& report_file) {
    Sca sca = load_sca(file);
    auto started = std::chrono::steady_clock::now();
    ApproxDecision d = problem == "empty" ? decide_empty_n(sca, level)
                                          : decide_universal_n(sca, level);
    double millis = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - started)
                        .count();
    if (!report_file.empty())
        io::write_text_file(report_file, io::decision_record(d, millis) + "\n");
    std::cout << problem_name(d.problem) << " at level " << level << ": "
              << (d.verdict ? "yes" : "no") << '\n';
    return d.verdict ? kExitPositive : kExitNegative;
}

int cmd_include(const std::string& left, const std::string& right, int level) {
    ApproxDecision d = decide_inclusion_n(load_sca(left), load_sca(right), level);
    std::cout << "inclusion at level " << level << ": " << (d.verdict ? "yes" : "no")
              << '\n';
    return d.verdict ? kExitPositive : kExitNegative;
}

int cmd_lim(const std::string& left, const std::string& right, int upto,
            const std::string& report_file) {
    Sca a = load_sca(left);
    Sca b = load_sca(right);
    std::string report;
    std::vector<bool> verdicts;
    for (int n = 1; n <= upto; ++n) {
        auto started = std::chrono::steady_clock::now();
        ApproxDecision d = decide_inclusion_n(a, b, n);
        double millis = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - started)
                            .count();
        verdicts.push_back(d.verdict);
        report += io::decision_record(d, millis) + "\n";
    }
    if (!report_file.empty())
        io::write_text_file(report_file, report);
    std::cout << "estimator:";
    for (const auto& value : lim_prefix(verdicts))
        std::cout << ' ' << value.str();
    std::cout << '\n';
    return kExitPositive;
}

int cmd_reach(const std::string& file, const std::vector<std::string>& pair,
              std::size_t max_len, int max_level) {
    Sca sca = load_sca(file);
    sca.base.check();
    const Alphabet& inner = sca.base.inner();
    Budget budget;
    budget.max_word_len = max_len;
    budget.max_level = max_level;
    SemiDecisionOutcome out = reach_semidecide(sca.base, parse_word(inner, pair[0]),
                                               parse_word(inner, pair[1]), budget);
    switch (out.kind) {
        case SemiDecisionOutcome::Kind::Reached:
            std::cout << "reached: witness \"" << outer_str(out.witness) << "\"\n";
            return kExitPositive;
        case SemiDecisionOutcome::Kind::EmptyCertificate:
            std::cout << "empty certificate at level " << out.level << '\n';
            return kExitNegative;
        case SemiDecisionOutcome::Kind::Exhausted:
            break;
    }
    std::cout << "exhausted: " << out.report.words_tested << " words up to length "
              << out.report.max_len_reached << ", levels up to "
              << out.report.max_level_reached << '\n';
    return kExitExhausted;
}

int cmd_encode_pda(const std::string& file, const std::string& out_dir) {
    Pda pda = io::parse_pda(io::read_text_file(file));
    PdaEncoding enc = encode_pda(pda);
    fs::path dir(out_dir);
    fs::create_directories(dir);
    std::string stem = fs::path(file).stem().string();
    std::map<std::string, std::string> files;
    for (const auto& letter : enc.sca.base.outer.tokens()) {
        std::string name = stem + "_" + letter + ".syst";
        files[letter] = name;
        io::write_text_file(dir / name,
                            io::serialize_transducer(enc.sca.base.machine(letter)));
    }
    io::write_text_file(dir / (stem + ".sca"), io::serialize_sca(enc.sca, files));
    io::write_text_file(dir / (stem + ".legend"), io::legend_text(enc.legend));
    std::cout << "wrote " << (dir / (stem + ".sca")).string() << " and "
              << files.size() << " letter machines\n";
    return kExitPositive;
}

int cmd_dist(const std::string& file, const std::string& left,
             const std::string& right) {
    io::AlphabetSpec spec = io::parse_alphabet(io::read_text_file(file));
    NormalDistance nd(spec.alphabet, spec.digit_order);
    Word x = parse_word(spec.alphabet, left);
    Word y = parse_word(spec.alphabet, right);
    std::cout << "val(x) = " << nd.val(x).str() << '\n';
    std::cout << "val(y) = " << nd.val(y).str() << '\n';
    std::cout << "dist = " << nd.dist(x, y).str() << '\n';
    return kExitPositive;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"synchronous subsequential relation toolkit"};
    app.require_subcommand(1);

    std::string file, second, output, input_word, dot_file;
    std::vector<std::string> pair;
    std::string problem = "empty";
    std::string report_file;
    bool strip_absorb = false;
    int level = 1;
    int upto = 3;
    std::size_t max_len = 6;
    int max_level = 3;

    auto* validate_cmd = app.add_subcommand("validate", "check a transducer file");
    validate_cmd->add_option("file", file)->required();
    validate_cmd->add_option("--dot", dot_file, "write the transition graph");

    auto* apply_cmd = app.add_subcommand("apply", "image of a word under a transducer");
    apply_cmd->add_option("file", file)->required();
    apply_cmd->add_option("--input", input_word, "quoted token sequence")->required();
    apply_cmd->add_flag("--strip-absorb", strip_absorb, "drop junk-marked outputs");
    apply_cmd->add_option("--dot", dot_file, "write the image automaton");

    auto* compose_cmd = app.add_subcommand("compose", "compose two transducers");
    compose_cmd->add_option("left", file)->required();
    compose_cmd->add_option("right", second)->required();
    compose_cmd->add_option("-o,--output", output)->required();

    auto* project_cmd = app.add_subcommand("project", "level-n projection of a machine");
    project_cmd->add_option("file", file)->required();
    project_cmd->add_option("-n,--level", level)->required();

    auto* chi_cmd = app.add_subcommand("chi", "transition-word language of a pair");
    chi_cmd->add_option("file", file)->required();
    chi_cmd->add_option("--pair", pair, "source and target words")
        ->required()
        ->expected(2);
    chi_cmd->add_option("-n,--level", level)->required();
    chi_cmd->add_option("--dot", dot_file, "write the chi automaton");

    auto* approx_cmd = app.add_subcommand("approx", "decide a level-n approximation");
    approx_cmd->add_option("file", file)->required();
    approx_cmd->add_option("-n,--level", level)->required();
    approx_cmd->add_option("--problem", problem)
        ->check(CLI::IsMember({"empty", "universal"}));
    approx_cmd->add_option("--report", report_file, "write a json record");

    auto* include_cmd = app.add_subcommand("include", "level-n language inclusion");
    include_cmd->add_option("left", file)->required();
    include_cmd->add_option("right", second)->required();
    include_cmd->add_option("-n,--level", level)->required();

    auto* lim_cmd = app.add_subcommand("lim", "inclusion estimator prefix");
    lim_cmd->add_option("left", file)->required();
    lim_cmd->add_option("right", second)->required();
    lim_cmd->add_option("--upto", upto)->required();
    lim_cmd->add_option("--report", report_file, "json-lines decision report");

    auto* reach_cmd = app.add_subcommand("reach", "interleaved reachability probe");
    reach_cmd->add_option("file", file)->required();
    reach_cmd->add_option("--pair", pair, "source and target words")
        ->required()
        ->expected(2);
    reach_cmd->add_option("--max-len", max_len);
    reach_cmd->add_option("--max-level", max_level);

    auto* encode_cmd = app.add_subcommand("encode-pda", "encode a pushdown machine");
    encode_cmd->add_option("file", file)->required();
    encode_cmd->add_option("-o,--output", output)->required();

    auto* dist_cmd = app.add_subcommand("dist", "normal distance between two words");
    dist_cmd->add_option("alphabet", file)->required();
    dist_cmd->add_option("x", input_word)->required();
    dist_cmd->add_option("y", second)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (app.got_subcommand(validate_cmd))
            return cmd_validate(file, dot_file);
        if (app.got_subcommand(apply_cmd))
            return cmd_apply(file, input_word, strip_absorb, dot_file);
        if (app.got_subcommand(compose_cmd))
            return cmd_compose(file, second, output);
        if (app.got_subcommand(project_cmd))
            return cmd_project(file, level);
        if (app.got_subcommand(chi_cmd))
            return cmd_chi(file, pair, level, dot_file);
        if (app.got_subcommand(approx_cmd))
            return cmd_approx(file, level, problem, report_file);
        if (app.got_subcommand(include_cmd))
            return cmd_include(file, second, level);
        if (app.got_subcommand(lim_cmd))
            return cmd_lim(file, second, upto, report_file);
        if (app.got_subcommand(reach_cmd))
            return cmd_reach(file, pair, max_len, max_level);
        if (app.got_subcommand(encode_cmd))
            return cmd_encode_pda(file, output);
        if (app.got_subcommand(dist_cmd))
            return cmd_dist(file, input_word, second);
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
