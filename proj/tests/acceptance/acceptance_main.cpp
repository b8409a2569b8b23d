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

// One line per acceptance criterion; exit status 0 only when all pass.

#include "descpat/angluin_match.hpp"
#include "descpat/discovery.hpp"
#include "descpat/error.hpp"
#include "descpat/inclusion.hpp"
#include "descpat/oracle.hpp"
#include "descpat/subseq_match.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace descpat;

namespace {

struct Verdict {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    int id;
    std::string name;
    double limit_seconds;
    std::function<Verdict()> body;
};

const Alphabet& abc() {
    static const Alphabet a({"a", "b", "c"});
    return a;
}

const Alphabet& ab() {
    static const Alphabet a({"a", "b"});
    return a;
}

Verdict angluin_witness() {
    const Word w = parse_char_word("baabcacbaacbccac", abc());
    const Pattern p = parse_pattern("$1 a b $2 $1 a $3 b c $2", abc());
    const MatchResult r = member(w, p);
    if (!r.matched || !r.witness) return {false, "not matched"};
    const auto& img = r.witness->images;
    const auto show = [&](std::uint32_t v) { return img.count(v) ? render_word(img.at(v), abc()) : "?"; };
    const std::string got = "x1=" + show(1) + " x2=" + show(2) + " x3=" + show(3);
    const bool exact = img.size() == 3 && show(1) == "ba" && show(2) == "cac" && show(3) == "c" &&
                       r.witness->apply(p) == w;
    return {exact, got};
}

Verdict gap_example() {
    const Word w = parse_char_word("aabacabcbbacc", abc());
    const ConstrainedPattern cp(parse_pattern("a $1 b $1", abc()), parse_gaps("1-3,4-4,2-3"));
    const SubseqMatch m = match_subseq(w, cp);
    if (!m.matched || !m.witness) return {false, "not matched"};
    const Symbol c = *abc().find("c");
    if (m.witness->assignment.images.at(1) != c) return {false, "x1 is not c"};

    const auto all = enumerate_embeddings(w, cp, 1000);
    std::set<Symbol> assignments;
    std::set<std::size_t> third;
    for (const auto& wit : all) {
        assignments.insert(wit.assignment.images.at(1));
        third.insert(wit.embedding.positions[2]);
    }
    std::ostringstream detail;
    detail << all.size() << " embeddings, x1=c, b at word position 10";
    const bool ok = !all.empty() && assignments == std::set<Symbol>{c} && third == std::set<std::size_t>{10};
    return {ok, ok ? detail.str() : "unexpected embeddings"};
}

std::string summarize(const std::vector<oracle::SweepReport>& reports) {
    std::ostringstream out;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& r = reports[i];
        if (i) out << "; ";
        out << r.name << " " << r.cases << " cases, " << r.positives << " matched, " << r.disagreements
            << " disagreements";
    }
    return out.str();
}

Verdict matching_oracle() {
    const std::vector<oracle::SweepReport> reports{oracle::sweep_subseq_exhaustive(),
                                                   oracle::sweep_subseq_random(42, 10000)};
    const bool ok = reports[0].ok() && reports[1].ok();
    return {ok, summarize(reports)};
}

Verdict angluin_oracle() {
    const std::vector<oracle::SweepReport> reports{oracle::sweep_angluin_exhaustive()};
    return {reports[0].ok(), summarize(reports)};
}

// Shared corpus for the discovery criteria.

struct Run {
    Sample sample;
    DiscoveryConfig cfg;
};

struct CorpusOutcome {
    std::vector<Run> runs;
    std::vector<DiscoveryResult> results;
    std::size_t samples = 0;
    std::size_t rejected = 0;            // starting pattern below the threshold
    std::size_t rejected_confirmed = 0;  // ... with the brute-force support confirming it
};

std::vector<Sample> corpus_samples() {
    std::mt19937_64 rng(20240611);
    const auto below = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
    std::vector<Sample> out;
    while (out.size() < 60) {
        std::vector<Word> words;
        const std::size_t n = 1 + below(4);
        for (std::size_t k = 0; k < n; ++k) {
            Word w(1 + below(6));
            for (Symbol& s : w) s = static_cast<Symbol>(below(2));
            words.push_back(std::move(w));
        }
        out.emplace_back(std::move(words), ab());
    }
    return out;
}

std::vector<GapConstraints> corpus_constraints(std::size_t length) {
    std::vector<GapBound> bounds;
    for (std::size_t lo = 0; lo <= 2; ++lo) {
        for (std::size_t hi = lo; hi <= 2; ++hi) bounds.push_back(GapBound{lo, hi});
    }
    std::vector<std::vector<GapBound>> tuples{{}};
    for (std::size_t g = 0; g + 1 < length; ++g) {
        std::vector<std::vector<GapBound>> next;
        for (const auto& t : tuples) {
            for (const auto& b : bounds) {
                auto longer = t;
                longer.push_back(b);
                next.push_back(std::move(longer));
            }
        }
        tuples = std::move(next);
    }
    std::vector<GapConstraints> out;
    for (auto& t : tuples) out.emplace_back(std::move(t));
    return out;
}

const CorpusOutcome& corpus() {
    static const CorpusOutcome outcome = [] {
        CorpusOutcome o;
        const auto samples = corpus_samples();
        o.samples = samples.size();
        for (const Sample& s : samples) {
            for (std::size_t len : {2u, 3u}) {
                for (const GapConstraints& c : corpus_constraints(len)) {
                    for (const Ratio& supp : {Ratio(1, 1), Ratio(2, 3), Ratio(1, 2)}) {
                        for (const PatternClass& cls : {PatternClass::all(), PatternClass::regular()}) {
                            DiscoveryConfig cfg;
                            cfg.length = len;
                            cfg.constraints = c;
                            cfg.threshold = supp;
                            cfg.pattern_class = cls;
                            try {
                                o.results.push_back(discover_subseq(s, cfg));
                                o.runs.push_back(Run{s, cfg});
                            } catch (const ThresholdError&) {
                                ++o.rejected;
                                const ConstrainedPattern general(Pattern::all_variables(len), c);
                                if (oracle::brute_support(s.words(), general) < supp) ++o.rejected_confirmed;
                            }
                        }
                    }
                }
            }
        }
        return o;
    }();
    return outcome;
}

Verdict descriptiveness() {
    const CorpusOutcome& o = corpus();
    std::size_t failures = 0;
    std::size_t refined = 0;
    std::string first;
    for (std::size_t i = 0; i < o.runs.size(); ++i) {
        const Run& run = o.runs[i];
        const ConstrainedPattern& out = o.results[i].pattern;
        if (out.pattern() != Pattern::all_variables(out.size())) ++refined;
        if (!oracle::brute_descriptive(out, run.sample, run.cfg.threshold, run.cfg.pattern_class)) {
            if (failures++ == 0) first = render_pattern(out.pattern(), ab()) + " C=" + render_gaps(out.constraints());
        }
    }
    std::ostringstream detail;
    detail << o.samples << " samples, " << o.runs.size() << " runs (" << refined << " refined), " << failures << " failures, " << o.rejected
           << " rejected by the starting support (" << o.rejected_confirmed << " confirmed by brute force)";
    if (failures) detail << "; first failure " << first;
    const bool ok = failures == 0 && o.samples >= 50 && !o.runs.empty() && o.rejected == o.rejected_confirmed;
    return {ok, detail.str()};
}

std::vector<bool> matched_set(const Sample& s, const ConstrainedPattern& cp) {
    std::vector<bool> out;
    for (const Word& w : s.words()) out.push_back(matches(w, cp));
    return out;
}

Verdict refinement_chain() {
    const CorpusOutcome& o = corpus();
    std::size_t steps = 0;
    std::size_t failures = 0;
    for (std::size_t i = 0; i < o.runs.size(); ++i) {
        const auto& snaps = o.results[i].trace.snapshots;
        const GapConstraints& c = o.runs[i].cfg.constraints;
        std::vector<bool> prev = matched_set(o.runs[i].sample, ConstrainedPattern(snaps.front(), c));
        for (std::size_t k = 0; k + 1 < snaps.size(); ++k) {
            ++steps;
            std::vector<bool> next = matched_set(o.runs[i].sample, ConstrainedPattern(snaps[k + 1], c));
            bool subset = true;
            for (std::size_t j = 0; j < next.size(); ++j) subset = subset && (!next[j] || prev[j]);
            if (!find_substitution(snaps[k], snaps[k + 1]) || !subset) ++failures;
            prev = std::move(next);
        }
    }
    std::ostringstream detail;
    detail << o.runs.size() << " runs, " << steps << " consecutive snapshot pairs, " << failures << " failures";
    return {failures == 0 && steps > 0, detail.str()};
}

Verdict fixed_point() {
    const CorpusOutcome& o = corpus();
    std::size_t failures = 0;
    for (std::size_t i = 0; i < o.runs.size(); ++i) {
        DiscoveryConfig cfg = o.runs[i].cfg;
        cfg.start = o.results[i].pattern;
        const DiscoveryResult again = discover_subseq(o.runs[i].sample, cfg);
        if (canonicalize(again.pattern.pattern()) != canonicalize(o.results[i].pattern.pattern())) ++failures;
    }
    std::ostringstream detail;
    detail << o.runs.size() << " re-runs, " << failures << " changed";
    return {failures == 0 && !o.runs.empty(), detail.str()};
}

Verdict classic() {
    std::mt19937_64 rng(7);
    std::size_t singleton_failures = 0;
    for (int i = 0; i < 20; ++i) {
        Word w(1 + rng() % 6);
        for (Symbol& s : w) s = static_cast<Symbol>(rng() % 3);
        if (shinohara_classic(Sample({w}, abc())).pattern != Pattern::from_word(w)) ++singleton_failures;
    }
    const Sample crossed({parse_char_word("ab", abc()), parse_char_word("ba", abc())}, abc());
    const bool crossed_ok = shinohara_classic(crossed).pattern == parse_pattern("$1 $2", abc());

    const Sample s({parse_char_word("abb", abc()), parse_char_word("abab", abc())}, abc());
    const Pattern p = shinohara_classic(s).pattern;
    const bool abb_ok = canonicalize(p) == parse_pattern("a b $1", abc());
    const bool brute_ok = oracle::brute_descriptive_classic(p, s, PatternClass::all());

    std::ostringstream detail;
    detail << "singletons " << (20 - singleton_failures) << "/20, {ab,ba} -> "
           << render_pattern(shinohara_classic(crossed).pattern, abc()) << ", {abb,abab} -> "
           << render_pattern(canonicalize(p), abc()) << (brute_ok ? " (brute force: minimal)" : " (brute force: NOT minimal)");
    return {singleton_failures == 0 && crossed_ok && abb_ok && brute_ok, detail.str()};
}

Verdict widening() {
    const std::vector<oracle::SweepReport> reports{oracle::sweep_widening_monotonicity(42, 10000)};
    return {reports[0].ok() && reports[0].cases == 10000, summarize(reports)};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "angluin membership witness", 1.0, angluin_witness},
        {2, "gap-constrained match and embeddings", 1.0, gap_example},
        {3, "subsequence matcher vs brute force", 120.0, matching_oracle},
        {4, "pattern membership vs brute force", 60.0, angluin_oracle},
        {5, "discovery output is descriptive", 300.0, descriptiveness},
        {6, "refinement chain", 60.0, refinement_chain},
        {7, "fixed point from discovered pattern", 60.0, fixed_point},
        {8, "classical algorithm", 60.0, classic},
        {9, "constraint widening monotonicity", 60.0, widening},
    };
    int failed = 0;
    for (const Criterion& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.body();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = seconds < c.limit_seconds;
        const bool pass = v.pass && in_time;
        if (!pass) ++failed;
        std::printf("[%s] %d %s: %s (%.3f s, limit %.0f s%s)\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(),
                    v.detail.c_str(), seconds, c.limit_seconds, in_time ? "" : ", exceeded");
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
