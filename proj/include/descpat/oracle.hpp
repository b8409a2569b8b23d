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

// Exhaustive reference implementations. They share nothing with the main
// matchers beyond the pattern-core types and refuse inputs beyond their size
// guards with SizeLimitError.

#include "descpat/pattern.hpp"
#include "descpat/pattern_class.hpp"
#include "descpat/ratio.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace descpat::oracle {

inline constexpr std::size_t kAngluinMaxWord = 10;
inline constexpr std::size_t kAngluinMaxVars = 4;
inline constexpr std::size_t kSubseqMaxWord = 12;
inline constexpr std::size_t kSubseqMaxPattern = 5;
inline constexpr std::size_t kSubseqMaxVars = 3;
inline constexpr std::size_t kEnumMaxLength = 4;
inline constexpr std::size_t kEnumMaxAlphabet = 3;

/// Tries every composition of |w| into |p| non-empty image lengths.
bool brute_member_angluin(WordView w, const Pattern& p);

/// Tries every symbol assignment and every strictly increasing position tuple.
bool brute_match_subseq(WordView w, const ConstrainedPattern& cp);

/// Matched-word count through brute_match_subseq.
SupportValue brute_support(const std::vector<Word>& words, const ConstrainedPattern& cp);

/// Canonical patterns of the given length in the class, lexicographically
/// (terminals before variables).
std::vector<Pattern> enumerate_patterns(std::size_t length, const Alphabet& alphabet, const PatternClass& cls);

/// Descriptiveness by definition: cp is in the class, reaches the threshold,
/// and no class member of the same length reaching the threshold is strictly
/// included in it under the same gap constraints.
bool brute_descriptive(const ConstrainedPattern& cp, const Sample& s, const Ratio& threshold, const PatternClass& cls);

/// Classical counterpart: the sample is contained in L(p) and no class member
/// of the same length containing the sample has a strictly smaller language.
bool brute_descriptive_classic(const Pattern& p, const Sample& s, const PatternClass& cls);

// Agreement sweeps -------------------------------------------------------------

struct SweepReport {
    std::string name;
    std::size_t cases = 0;
    std::size_t disagreements = 0;
    std::size_t positives = 0;  // cases the main implementation reported as matched
    std::vector<std::string> counterexamples;  // first few only

    bool ok() const noexcept { return disagreements == 0 && cases > 0; }
};

/// Gap-constrained matching on every canonical pattern up to length 3 over two
/// symbols, bounds from {0, 1, inf}, against every word up to length 6.
SweepReport sweep_subseq_exhaustive();

/// Classical membership on every canonical pattern up to length 3 over two
/// symbols against every word up to length 6.
SweepReport sweep_angluin_exhaustive();

/// Random gap-constrained cases at the oracle size caps, bounds from {0, 1, 2, inf}.
SweepReport sweep_subseq_random(std::uint64_t seed, std::size_t cases);

/// Random classical cases at the oracle size caps.
SweepReport sweep_angluin_random(std::uint64_t seed, std::size_t cases);

/// Widening a single bound never turns a match into a non-match.
SweepReport sweep_widening_monotonicity(std::uint64_t seed, std::size_t cases);

}  // namespace descpat::oracle
