/*
    Licensed under the Apache License, Version 2.0 (the "License");
    you may not use this file except in compliance with the License.
    You may obtain a copy of the License at

        https://www.apache.org/licenses/LICENSE-2.0

    Unless required by applicable law or agreed to in writing, software
    distributed under the License is distributed on an "AS IS" BASIS,
    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
    See the License for the specific language governing permissions and
    limitations under the License.
*/

#include "cli.hpp"

#include "descpat/angluin_match.hpp"
#include "descpat/discovery.hpp"
#include "descpat/error.hpp"
#include "descpat/oracle.hpp"
#include "descpat/subseq_match.hpp"
#include "descpat/trace_file.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iomanip>
#include <optional>
#include <sstream>

namespace descpat::cli {

namespace {

using nlohmann::ordered_json;

struct DiscoverArgs {
    std::string sample_path;
    bool chars = false;
    std::size_t length = 0;
    std::optional<std::string> gaps;
    std::string support = "1";
    std::string pattern_class = "all";
    std::string order = "l2r";
    std::string candidates = "terms-first";
    std::optional<std::string> start;
    bool json = false;
};

struct MatchArgs {
    std::optional<std::string> word;
    std::optional<std::string> sample_path;
    std::string pattern;
    std::optional<std::string> gaps;
    std::optional<std::string> alphabet;
    bool angluin = false;
    bool chars = false;
    bool json = false;
};

struct VerifyArgs {
    std::string suite = "tiny";
    std::uint64_t seed = 42;
    std::size_t cases = 10000;
    bool json = false;
};

std::vector<std::string> terminal_tokens(const std::string& pattern_text) {
    std::vector<std::string> out;
    std::istringstream in(pattern_text);
    for (std::string tok; in >> tok;) {
        if (tok.front() != '$') out.push_back(tok);
    }
    return out;
}

std::string decimal(const Ratio& r) {
    std::ostringstream os;
    os << std::setprecision(6) << r.to_double();
    return os.str();
}

ordered_json ratio_json(const Ratio& r) {
    return ordered_json{{"fraction", r.str()},
                        {"numerator", r.numerator()},
                        {"denominator", r.denominator()},
                        {"value", r.to_double()}};
}

const char* outcome_name(StepOutcome o) {
    switch (o) {
        case StepOutcome::Accepted: return "accepted";
        case StepOutcome::KeptVariable: return "kept";
        case StepOutcome::Skipped: return "skipped";
    }
    return "";
}

std::string item_text(const Item& it, const Alphabet& alphabet) {
    return it.is_variable() ? "$" + std::to_string(it.var()) : alphabet.token(it.symbol());
}

// Discovery configuration ---------------------------------------------------

struct Prepared {
    Sample sample;
    DiscoveryConfig config;
};

Prepared prepare(const DiscoverArgs& a) {
    const TraceSyntax syntax = a.chars ? TraceSyntax::Chars : TraceSyntax::Tokens;
    Sample sample = read_trace_file(a.sample_path, syntax);

    DiscoveryConfig cfg;
    cfg.length = a.length;
    if (cfg.length == 0) {
        throw ConfigError("--length must be positive");
    }
    cfg.constraints = a.gaps ? parse_gaps(*a.gaps) : GapConstraints::unconstrained(cfg.length - 1);
    if (cfg.constraints.size() + 1 != cfg.length) {
        throw ConfigError("--gaps has " + std::to_string(cfg.constraints.size()) + " bounds but --length " +
                          std::to_string(cfg.length) + " needs " + std::to_string(cfg.length - 1));
    }
    cfg.threshold = Ratio::parse(a.support);
    check_threshold(cfg.threshold);
    cfg.pattern_class = PatternClass::parse(a.pattern_class);
    cfg.strategy.position_order = parse_position_order(a.order, cfg.strategy.seed);
    cfg.strategy.candidate_order = parse_candidate_order(a.candidates);
    if (a.start) {
        Pattern p = parse_pattern(*a.start, sample.alphabet());
        if (p.size() != cfg.length) {
            throw ConfigError("--start has length " + std::to_string(p.size()) + ", expected " +
                              std::to_string(cfg.length));
        }
        cfg.start = ConstrainedPattern(std::move(p), cfg.constraints);
    }
    return Prepared{std::move(sample), std::move(cfg)};
}

ordered_json config_json(const Prepared& in) {
    const DiscoveryConfig& c = in.config;
    ordered_json strategy{{"order", c.strategy.order_str()}, {"candidates", c.strategy.candidates_str()}};
    strategy["seed"] = c.strategy.seed ? ordered_json(*c.strategy.seed) : ordered_json(nullptr);
    ordered_json j{{"sample_size", in.sample.size()},
                   {"alphabet", in.sample.alphabet().tokens()},
                   {"length", c.length},
                   {"gaps", render_gaps(c.constraints)},
                   {"support_threshold", c.threshold.str()},
                   {"class", c.pattern_class.str()},
                   {"strategy", strategy}};
    j["start"] = c.start ? ordered_json(render_pattern(c.start->pattern(), in.sample.alphabet())) : ordered_json(nullptr);
    return j;
}

ordered_json trace_json(const RefinementTrace& trace, const Alphabet& alphabet) {
    ordered_json steps = ordered_json::array();
    for (std::size_t k = 0; k < trace.steps.size(); ++k) {
        const RefinementStep& s = trace.steps[k];
        ordered_json attempts = ordered_json::array();
        for (const CandidateAttempt& a : s.attempts) {
            ordered_json aj{{"candidate", item_text(a.replacement, alphabet)}, {"in_class", a.in_class}};
            aj["support"] = a.support ? ordered_json(a.support->str()) : ordered_json(nullptr);
            attempts.push_back(std::move(aj));
        }
        ordered_json sj{{"position", s.position}};
        sj["variable"] = s.variable ? ordered_json("$" + std::to_string(*s.variable)) : ordered_json(nullptr);
        sj["outcome"] = outcome_name(s.outcome);
        sj["accepted"] = s.accepted ? ordered_json(item_text(*s.accepted, alphabet)) : ordered_json(nullptr);
        sj["support"] = s.support.str();
        sj["attempts"] = std::move(attempts);
        sj["pattern"] = render_pattern(trace.snapshots[k + 1], alphabet);
        steps.push_back(std::move(sj));
    }
    return steps;
}

void print_trace_text(std::ostream& out, const RefinementTrace& trace, const Alphabet& alphabet) {
    out << "trace:\n";
    for (const RefinementStep& s : trace.steps) {
        out << "  position " << s.position;
        if (s.variable) out << " $" << *s.variable;
        switch (s.outcome) {
            case StepOutcome::Accepted:
                out << ": accepted " << item_text(*s.accepted, alphabet);
                break;
            case StepOutcome::KeptVariable:
                out << ": kept";
                break;
            case StepOutcome::Skipped:
                out << ": skipped";
                break;
        }
        out << " (support " << s.support.str() << ")";
        if (!s.attempts.empty()) {
            out << "; tried";
            for (const CandidateAttempt& a : s.attempts) {
                out << ' ' << item_text(a.replacement, alphabet) << '=';
                out << (a.support ? a.support->str() : std::string("not-in-class"));
            }
        }
        out << '\n';
    }
}

std::size_t accepted_changes(const RefinementTrace& trace) {
    std::size_t n = 0;
    for (const RefinementStep& s : trace.steps) n += s.outcome == StepOutcome::Accepted ? 1 : 0;
    return n;
}

int report_threshold_miss(const ThresholdError& e, const Prepared& in, bool json, std::ostream& out,
                          std::ostream& err) {
    if (json) {
        ordered_json j{{"config", config_json(in)}, {"error", e.what()}, {"achieved_support", ratio_json(e.achieved())}};
        out << j.dump(2) << '\n';
    } else {
        out << "achieved support: " << e.achieved().str() << " (" << decimal(e.achieved()) << ")\n";
    }
    err << "error: " << e.what() << '\n';
    return kExitConfig;
}

int cmd_discover(const DiscoverArgs& a, std::ostream& out, std::ostream& err) {
    const Prepared in = prepare(a);
    const auto t0 = std::chrono::steady_clock::now();
    std::optional<DiscoveryResult> result;
    try {
        result = discover_subseq(in.sample, in.config);
    } catch (const ThresholdError& e) {
        return report_threshold_miss(e, in, a.json, out, err);
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    const Alphabet& alphabet = in.sample.alphabet();
    const SupportValue supp = support(in.sample, result->pattern);
    const std::string pattern = render_pattern(canonicalize(result->pattern.pattern()), alphabet);

    if (a.json) {
        ordered_json j{{"config", config_json(in)},
                       {"pattern", pattern},
                       {"support", ratio_json(supp)},
                       {"accepted_changes", accepted_changes(result->trace)},
                       {"trace", trace_json(result->trace, alphabet)},
                       {"wall_time_ms", ms}};
        out << j.dump(2) << '\n';
    } else {
        out << "pattern: " << pattern << '\n';
        out << "gaps: " << render_gaps(in.config.constraints) << '\n';
        out << "support: " << supp.str() << " (" << decimal(supp) << ")\n";
        out << "accepted changes: " << accepted_changes(result->trace) << '\n';
        print_trace_text(out, result->trace, alphabet);
    }
    return kExitOk;
}

int cmd_check(const DiscoverArgs& a, std::ostream& out, std::ostream& err) {
    Prepared in = prepare(a);
    const ConstrainedPattern candidate = *in.config.start;
    std::optional<DescriptivenessCheck> check;
    try {
        check = check_descriptive(candidate, in.sample, in.config);
    } catch (const ThresholdError& e) {
        return report_threshold_miss(e, in, a.json, out, err);
    }
    const Alphabet& alphabet = in.sample.alphabet();
    const std::string refined = render_pattern(canonicalize(check->refinement.pattern.pattern()), alphabet);
    if (a.json) {
        ordered_json j{{"config", config_json(in)},
                       {"pattern", render_pattern(canonicalize(candidate.pattern()), alphabet)},
                       {"descriptive", check->descriptive}};
        j["certificate"] = check->descriptive ? ordered_json(nullptr) : ordered_json(refined);
        j["trace"] = trace_json(check->refinement.trace, alphabet);
        out << j.dump(2) << '\n';
    } else if (check->descriptive) {
        out << "descriptive\n";
    } else {
        out << "not-descriptive\n";
        out << "certificate: " << refined << '\n';
    }
    return kExitOk;
}

// Matching ------------------------------------------------------------------

Word read_word(const std::string& text, const Alphabet& alphabet, bool chars) {
    const bool tokens = !chars && text.find_first_of(" \t") != std::string::npos;
    return tokens ? parse_word(text, alphabet) : parse_char_word(text, alphabet);
}

std::vector<std::string> word_tokens(const std::string& text, bool chars) {
    std::vector<std::string> out;
    if (!chars && text.find_first_of(" \t") != std::string::npos) {
        std::istringstream in(text);
        for (std::string tok; in >> tok;) out.push_back(tok);
    } else {
        for (char c : text) {
            if (c != ' ' && c != '\t') out.emplace_back(1, c);
        }
    }
    return out;
}

int cmd_match(const MatchArgs& a, std::ostream& out, std::ostream&) {
    if (a.word.has_value() == a.sample_path.has_value()) {
        throw ParseError("match needs exactly one of --word or --sample");
    }
    if (a.angluin && a.gaps) {
        throw ConfigError("--gaps does not apply with --angluin");
    }
    const TraceSyntax syntax = a.chars ? TraceSyntax::Chars : TraceSyntax::Tokens;
    const auto extra = terminal_tokens(a.pattern);

    std::optional<Sample> sample;
    if (a.sample_path) {
        sample.emplace(read_trace_file(*a.sample_path, syntax, extra));
    } else {
        Alphabet alphabet = [&] {
            try {
                if (a.alphabet) {
                    std::istringstream in(*a.alphabet);
                    std::vector<std::string> toks;
                    for (std::string t; in >> t;) toks.push_back(t);
                    return Alphabet(toks);
                }
                return infer_alphabet({word_tokens(*a.word, a.chars)}, extra);
            } catch (const ConfigError& e) {
                throw ParseError(std::string("bad alphabet: ") + e.what());
            }
        }();
        Word w = read_word(*a.word, alphabet, a.chars);
        if (w.empty()) {
            throw ParseError("--word is empty");
        }
        sample.emplace(std::vector<Word>{std::move(w)}, std::move(alphabet));
    }
    const Alphabet& alphabet = sample->alphabet();
    const Pattern p = parse_pattern(a.pattern, alphabet);

    std::optional<ConstrainedPattern> cp;
    if (!a.angluin) {
        cp.emplace(p, a.gaps ? parse_gaps(*a.gaps) : GapConstraints::unconstrained(p.size() - 1));
    }

    ordered_json results = ordered_json::array();
    std::uint64_t hits = 0;
    for (const Word& w : sample->words()) {
        ordered_json r{{"word", render_word(w, alphabet)}};
        std::ostringstream line;
        if (a.angluin) {
            const MatchResult m = member(w, p);
            r["matched"] = m.matched;
            line << (m.matched ? "matched  " : "unmatched  ") << render_word(w, alphabet);
            if (m.witness) {
                ordered_json h = ordered_json::object();
                for (const auto& [v, img] : m.witness->images) {
                    h["$" + std::to_string(v)] = render_word(img, alphabet);
                    line << "  $" << v << '=' << render_word(img, alphabet);
                }
                r["substitution"] = std::move(h);
            }
            hits += m.matched ? 1 : 0;
        } else {
            const SubseqMatch m = match_subseq(w, *cp);
            r["matched"] = m.matched;
            line << (m.matched ? "matched  " : "unmatched  ") << render_word(w, alphabet);
            if (m.witness) {
                ordered_json h = ordered_json::object();
                for (const auto& [v, sym] : m.witness->assignment.images) {
                    h["$" + std::to_string(v)] = alphabet.token(sym);
                    line << "  $" << v << '=' << alphabet.token(sym);
                }
                r["assignment"] = std::move(h);
                r["embedding"] = m.witness->embedding.positions;
                line << "  positions=";
                for (std::size_t k = 0; k < m.witness->embedding.positions.size(); ++k) {
                    line << (k ? "," : "") << m.witness->embedding.positions[k];
                }
            }
            hits += m.matched ? 1 : 0;
        }
        results.push_back(std::move(r));
        if (!a.json) out << line.str() << '\n';
    }

    const SupportValue supp(hits, sample->size());
    if (a.json) {
        ordered_json j{{"mode", a.angluin ? "angluin" : "subsequence"}, {"pattern", render_pattern(p, alphabet)}};
        j["gaps"] = cp ? ordered_json(render_gaps(cp->constraints())) : ordered_json(nullptr);
        j["results"] = std::move(results);
        if (a.sample_path) j["support"] = ratio_json(supp);
        out << j.dump(2) << '\n';
    } else if (a.sample_path) {
        out << "support: " << supp.str() << " (" << decimal(supp) << ")\n";
    }
    return kExitOk;
}

// Verification sweeps -------------------------------------------------------

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream&) {
    if (a.cases == 0) {
        throw ConfigError("--cases must be positive");
    }
    std::vector<oracle::SweepReport> reports;
    if (a.suite == "tiny") {
        reports.push_back(oracle::sweep_subseq_exhaustive());
        reports.push_back(oracle::sweep_angluin_exhaustive());
    } else if (a.suite == "random") {
        reports.push_back(oracle::sweep_subseq_random(a.seed, a.cases));
        reports.push_back(oracle::sweep_angluin_random(a.seed, a.cases));
        reports.push_back(oracle::sweep_widening_monotonicity(a.seed, a.cases));
    } else {
        throw ParseError("unknown suite '" + a.suite + "' (expected tiny or random)");
    }

    std::size_t disagreements = 0;
    ordered_json sweeps = ordered_json::array();
    for (const auto& r : reports) {
        disagreements += r.disagreements;
        sweeps.push_back(ordered_json{{"name", r.name},
                                      {"cases", r.cases},
                                      {"positives", r.positives},
                                      {"disagreements", r.disagreements},
                                      {"counterexamples", r.counterexamples}});
        if (!a.json) {
            out << r.name << ": " << r.cases << " cases (" << r.positives << " matched), " << r.disagreements
                << " disagreements\n";
            for (const auto& c : r.counterexamples) out << "  counterexample: " << c << '\n';
        }
    }
    if (a.json) {
        ordered_json j{{"suite", a.suite}, {"seed", a.seed}, {"cases", a.cases}, {"sweeps", std::move(sweeps)},
                       {"disagreements", disagreements}};
        out << j.dump(2) << '\n';
    }
    return disagreements == 0 ? kExitOk : kExitInput;
}

void add_discover_flags(CLI::App& cmd, DiscoverArgs& a, bool start_required) {
    cmd.add_option("--sample", a.sample_path, "Trace file")->required();
    cmd.add_flag("--chars", a.chars, "Treat each trace line as single-character symbols");
    cmd.add_option("--length", a.length, "Pattern length")->required();
    cmd.add_option("--gaps", a.gaps, "Gap bounds lo-hi,... (inf for unbounded); default 0-inf everywhere");
    cmd.add_option("--support", a.support, "Support threshold p/q or decimal in (0,1]");
    cmd.add_option("--class", a.pattern_class, "all | regular | noncross | maxvars:k");
    cmd.add_option("--order", a.order, "l2r | r2l | random:SEED");
    cmd.add_option("--candidates", a.candidates, "terms-first | vars-first");
    auto* start = cmd.add_option("--start", a.start, "Warm-start pattern");
    if (start_required) start->required();
    cmd.add_flag("--json", a.json, "Machine-readable output");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Descriptive pattern discovery for strings and event traces", "descpat"};
    app.require_subcommand(1);

    DiscoverArgs discover_args;
    auto* discover = app.add_subcommand("discover", "Compute a descriptive gap-constrained subsequence pattern");
    add_discover_flags(*discover, discover_args, false);

    DiscoverArgs check_args;
    auto* check = app.add_subcommand("check", "Decide whether --start is descriptive for the sample");
    add_discover_flags(*check, check_args, true);

    MatchArgs match_args;
    auto* match = app.add_subcommand("match", "Match a pattern against a word or a sample");
    match->add_option("--word", match_args.word, "Word (whitespace-separated tokens, else one symbol per character)");
    match->add_option("--sample", match_args.sample_path, "Trace file");
    match->add_option("--pattern", match_args.pattern, "Pattern, e.g. \"a $1 b $1\"")->required();
    match->add_option("--gaps", match_args.gaps, "Gap bounds lo-hi,...; default 0-inf everywhere");
    match->add_option("--alphabet", match_args.alphabet, "Explicit alphabet for --word");
    match->add_flag("--angluin", match_args.angluin, "Classical pattern-language membership");
    match->add_flag("--chars", match_args.chars, "Single-character symbols");
    match->add_flag("--json", match_args.json, "Machine-readable output");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Run oracle agreement sweeps");
    verify->add_option("--suite", verify_args.suite, "tiny | random");
    verify->add_option("--seed", verify_args.seed, "Random suite seed");
    verify->add_option("--cases", verify_args.cases, "Random suite size");
    verify->add_flag("--json", verify_args.json, "Machine-readable output");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (discover->parsed()) return cmd_discover(discover_args, out, err);
        if (check->parsed()) return cmd_check(check_args, out, err);
        if (match->parsed()) return cmd_match(match_args, out, err);
        if (verify->parsed()) return cmd_verify(verify_args, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.kind() == ErrorKind::Parse ? kExitInput : kExitConfig;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}

}  // namespace descpat::cli
