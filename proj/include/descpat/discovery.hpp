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

#pragma once

// Descriptive pattern discovery by greedy per-position refinement.
//
// Both algorithms start from a most general pattern and visit each position
// once. At a position still holding an undecided variable they try to replace
// that variable (all of its occurrences) by a terminal or by an already kept
// variable; the first candidate that stays in the pattern class and still
// covers the sample is kept. If none works the variable is kept, and becomes a
// candidate for positions visited later. The result is descriptive: no pattern
// of the class with a strictly smaller language (same length, same gaps)
// reaches the required coverage.

#include "descpat/error.hpp"
#include "descpat/pattern.hpp"
#include "descpat/pattern_class.hpp"
#include "descpat/ratio.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace descpat {

enum class PositionOrder { LeftToRight, RightToLeft, SeededRandom };
enum class CandidateOrder { TerminalsThenVars, VarsThenTerminals };

struct Strategy {
    PositionOrder position_order = PositionOrder::LeftToRight;
    CandidateOrder candidate_order = CandidateOrder::TerminalsThenVars;
    /// Required for SeededRandom, ignored otherwise.
    std::optional<std::uint64_t> seed;

    static Strategy seeded_random(std::uint64_t seed,
                                  CandidateOrder candidates = CandidateOrder::TerminalsThenVars) {
        return Strategy{PositionOrder::SeededRandom, candidates, seed};
    }

    /// 0-based visiting order of `length` positions. Deterministic for a seed.
    std::vector<std::size_t> visit_order(std::size_t length) const;

    /// `l2r`, `r2l` or `random:SEED`.
    std::string order_str() const;
    /// `terms-first` or `vars-first`.
    std::string candidates_str() const;

    bool operator==(const Strategy&) const = default;
};

/// Parses the CLI forms accepted by Strategy::order_str / candidates_str.
PositionOrder parse_position_order(std::string_view text, std::optional<std::uint64_t>& seed);
CandidateOrder parse_candidate_order(std::string_view text);

struct DiscoveryConfig {
    std::size_t length = 1;
    GapConstraints constraints;
    Ratio threshold{1, 1};
    PatternClass pattern_class = PatternClass::all();
    Strategy strategy;
    /// Warm start; must have `length` positions and exactly `constraints`.
    std::optional<ConstrainedPattern> start;
};

enum class StepOutcome {
    Accepted,      // the variable was replaced by a candidate
    KeptVariable,  // every candidate failed
    Skipped        // terminal, or a variable already decided at an earlier step
};

struct CandidateAttempt {
    Item replacement;
    bool in_class = false;
    /// Absent when the candidate was rejected by the class check alone.
    std::optional<SupportValue> support;
};

struct RefinementStep {
    std::size_t position = 0;  // 1-based
    std::optional<std::uint32_t> variable;
    std::vector<CandidateAttempt> attempts;
    StepOutcome outcome = StepOutcome::Skipped;
    std::optional<Item> accepted;
    /// Support of the pattern after this step.
    SupportValue support;
};

/// snapshots[0] is the starting pattern; snapshots[k + 1] follows steps[k].
struct RefinementTrace {
    std::vector<Pattern> snapshots;
    std::vector<RefinementStep> steps;
};

struct ClassicResult {
    Pattern pattern;
    RefinementTrace trace;
};

struct DiscoveryResult {
    ConstrainedPattern pattern;
    RefinementTrace trace;
};

/// The starting pattern misses the support threshold.
class ThresholdError : public ConfigError {
  public:
    ThresholdError(const std::string& what, SupportValue achieved) : ConfigError(what), achieved_(achieved) {}
    const SupportValue& achieved() const noexcept { return achieved_; }

  private:
    SupportValue achieved_;
};

/// Classical algorithm: start from x1 ... x_m for the first shortest word
/// w = a1 ... am, visit positions left to right, try a_i then the variables of
/// the prefix. Full containment of the sample is required.
ClassicResult shinohara_classic(const Sample& s, const PatternClass& cls = PatternClass::all());

/// Thresholded discovery for gap-constrained subsequence patterns, with every
/// alphabet symbol as a terminal candidate.
DiscoveryResult discover_subseq(const Sample& s, const DiscoveryConfig& cfg);

struct DescriptivenessCheck {
    bool descriptive = false;
    /// Output of the refinement run started at the checked pattern; strictly
    /// refines it when not descriptive.
    DiscoveryResult refinement;
};

/// Runs discovery from `cp` and compares the result up to variable renaming.
DescriptivenessCheck check_descriptive(const ConstrainedPattern& cp, const Sample& s, const DiscoveryConfig& cfg);
bool is_descriptive(const ConstrainedPattern& cp, const Sample& s, const DiscoveryConfig& cfg);

}  // namespace descpat
