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

#include "descpat/angluin_match.hpp"
#include "descpat/error.hpp"
#include "descpat/oracle.hpp"
#include "descpat/subseq_match.hpp"

#include <random>

namespace descpat::oracle {

namespace {

constexpr std::size_t kMaxCounterexamples = 10;

const Alphabet& letters() {
    static const Alphabet abc({"a", "b", "c"});
    return abc;
}

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
    std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }

  private:
    std::mt19937_64 engine_;
};

std::vector<Word> all_words(std::size_t max_length, std::size_t sigma) {
    std::vector<Word> out;
    std::vector<Word> layer{Word{}};
    for (std::size_t len = 1; len <= max_length; ++len) {
        std::vector<Word> next;
        for (const Word& w : layer) {
            for (Symbol a = 0; a < sigma; ++a) {
                Word longer = w;
                longer.push_back(a);
                next.push_back(std::move(longer));
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

std::vector<GapConstraints> all_constraints(std::size_t gaps, const std::vector<GapBound>& choices) {
    std::vector<std::vector<GapBound>> tuples{{}};
    for (std::size_t g = 0; g < gaps; ++g) {
        std::vector<std::vector<GapBound>> next;
        for (const auto& t : tuples) {
            for (const GapBound& b : choices) {
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

std::string describe(WordView w, const Pattern& p, const GapConstraints* c) {
    std::string out = "w=" + render_word(w, letters()) + " p=" + render_pattern(p, letters());
    if (c) out += " C=" + render_gaps(*c);
    return out;
}

void record(SweepReport& report, bool fast, bool reference, const std::string& what) {
    ++report.cases;
    if (fast) ++report.positives;
    if (fast == reference) return;
    ++report.disagreements;
    if (report.counterexamples.size() < kMaxCounterexamples) report.counterexamples.push_back(what);
}

Pattern random_pattern(Rng& rng, std::size_t length, std::size_t sigma, std::size_t max_vars) {
    std::vector<Item> items;
    for (std::size_t i = 0; i < length; ++i) {
        if (rng.below(2) == 0) {
            items.push_back(Item::terminal(static_cast<Symbol>(rng.below(sigma))));
        } else {
            items.push_back(Item::variable(static_cast<std::uint32_t>(rng.between(1, max_vars))));
        }
    }
    return Pattern(std::move(items));
}

Word random_word(Rng& rng, std::size_t length, std::size_t sigma) {
    Word w(length);
    for (Symbol& s : w) s = static_cast<Symbol>(rng.below(sigma));
    return w;
}

GapBound random_bound(Rng& rng) {
    GapBound b;
    b.lower = rng.below(3);
    const std::size_t pick = rng.below(4);
    b.upper = pick == 3 ? kUnbounded : pick;
    if (b.upper < b.lower) std::swap(b.upper, b.lower);
    return b;
}

ConstrainedPattern random_constrained(Rng& rng, std::size_t sigma) {
    const std::size_t length = rng.between(1, kSubseqMaxPattern);
    Pattern p = random_pattern(rng, length, sigma, kSubseqMaxVars);
    std::vector<GapBound> bounds;
    for (std::size_t g = 0; g + 1 < length; ++g) bounds.push_back(random_bound(rng));
    return ConstrainedPattern(std::move(p), GapConstraints(std::move(bounds)));
}

void require_cases(std::size_t cases) {
    if (cases == 0) {
        throw ConfigError("a sweep needs at least one case");
    }
}

}  // namespace

SweepReport sweep_subseq_exhaustive() {
    SweepReport report;
    report.name = "subseq-exhaustive";
    const Alphabet ab({"a", "b"});
    const std::vector<GapBound> choices{{0, 0}, {0, 1}, {0, kUnbounded}, {1, 1}, {1, kUnbounded}};
    const auto words = all_words(6, 2);
    for (std::size_t len = 1; len <= 3; ++len) {
        const auto patterns = enumerate_patterns(len, ab, PatternClass::all());
        for (const GapConstraints& c : all_constraints(len - 1, choices)) {
            for (const Pattern& p : patterns) {
                const ConstrainedPattern cp(p, c);
                for (const Word& w : words) {
                    record(report, match_subseq(w, cp).matched, brute_match_subseq(w, cp), describe(w, p, &c));
                }
            }
        }
    }
    return report;
}

SweepReport sweep_angluin_exhaustive() {
    SweepReport report;
    report.name = "angluin-exhaustive";
    const Alphabet ab({"a", "b"});
    const auto words = all_words(6, 2);
    for (std::size_t len = 1; len <= 3; ++len) {
        for (const Pattern& p : enumerate_patterns(len, ab, PatternClass::all())) {
            for (const Word& w : words) {
                record(report, member(w, p).matched, brute_member_angluin(w, p), describe(w, p, nullptr));
            }
        }
    }
    return report;
}

SweepReport sweep_subseq_random(std::uint64_t seed, std::size_t cases) {
    require_cases(cases);
    SweepReport report;
    report.name = "subseq-random";
    Rng rng(seed);
    for (std::size_t i = 0; i < cases; ++i) {
        const std::size_t sigma = rng.between(1, 3);
        const ConstrainedPattern cp = random_constrained(rng, sigma);
        const Word w = random_word(rng, rng.between(1, kSubseqMaxWord), sigma);
        record(report, match_subseq(w, cp).matched, brute_match_subseq(w, cp),
               describe(w, cp.pattern(), &cp.constraints()));
    }
    return report;
}

SweepReport sweep_angluin_random(std::uint64_t seed, std::size_t cases) {
    require_cases(cases);
    SweepReport report;
    report.name = "angluin-random";
    Rng rng(seed);
    for (std::size_t i = 0; i < cases; ++i) {
        const std::size_t sigma = rng.between(1, 3);
        const Pattern p = random_pattern(rng, rng.between(1, 5), sigma, kAngluinMaxVars);
        Word w;
        if (rng.below(2) == 0) {
            // Planted positive: apply a random substitution, keeping within the word cap.
            WordSubstitution h;
            for (std::uint32_t v : p.variables()) h.images[v] = random_word(rng, rng.between(1, 3), sigma);
            w = h.apply(p);
        }
        if (w.empty() || w.size() > kAngluinMaxWord) w = random_word(rng, rng.between(1, kAngluinMaxWord), sigma);
        record(report, member(w, p).matched, brute_member_angluin(w, p), describe(w, p, nullptr));
    }
    return report;
}

SweepReport sweep_widening_monotonicity(std::uint64_t seed, std::size_t cases) {
    require_cases(cases);
    SweepReport report;
    report.name = "widening-monotonicity";
    Rng rng(seed);
    while (report.cases < cases) {
        const std::size_t sigma = rng.between(1, 3);
        ConstrainedPattern cp = random_constrained(rng, sigma);
        if (cp.constraints().empty()) continue;
        const Word w = random_word(rng, rng.between(1, kSubseqMaxWord), sigma);

        std::vector<GapBound> widened = cp.constraints().bounds();
        GapBound& b = widened[rng.below(widened.size())];
        if (rng.below(2) == 0 && b.lower > 0) {
            b.lower -= rng.between(1, b.lower);
        } else if (!b.unbounded()) {
            const std::size_t extra = rng.below(4);
            b.upper = extra == 3 ? kUnbounded : b.upper + extra + 1;
        } else if (b.lower > 0) {
            --b.lower;
        } else {
            continue;  // (0, inf) cannot be widened
        }
        const ConstrainedPattern wide(cp.pattern(), GapConstraints(widened));
        const bool before = match_subseq(w, cp).matched;
        const bool after = match_subseq(w, wide).matched;
        // before         // A violation is recorded as a disagreement; positives count widened matches.        // A violation is recorded as a disagreement; positives count widened matches. !after is the only disagreement.
        record(report, after, before || after,
               describe(w, cp.pattern(), &cp.constraints()) + " widened=" + render_gaps(wide.constraints()));
    }
    return report;
}

}  // namespace descpat::oracle
