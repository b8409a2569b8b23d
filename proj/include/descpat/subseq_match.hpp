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

#include "descpat/pattern.hpp"
#include "descpat/ratio.hpp"

#include <optional>
#include <vector>

namespace descpat {

struct SubseqWitness {
    SymbolSubstitution assignment;
    Embedding embedding;

    auto operator<=>(const SubseqWitness&) const = default;
};

struct SubseqMatch {
    bool matched = false;
    std::optional<SubseqWitness> witness;
};

/// Gap-constrained subsequence matching with symbol-valued variables.
///
/// Variables are assigned in order of first occurrence while sweeping the set of
/// word positions reachable by each pattern prefix, so only symbols that can
/// actually occur at a reachable position are tried. The witness is the first
/// assignment in that order (symbols ascending) with its lexicographically
/// smallest embedding.
SubseqMatch match_subseq(WordView w, const ConstrainedPattern& cp);

/// Same decision as match_subseq without building a witness.
bool matches(WordView w, const ConstrainedPattern& cp);

/// All witnesses ordered by assignment (symbol tuple in first-occurrence order
/// of the variables), then by embedding; truncated at `limit` (>= 1).
std::vector<SubseqWitness> enumerate_embeddings(WordView w, const ConstrainedPattern& cp, std::size_t limit);

/// Number of sample words matched over the sample size.
SupportValue support(const Sample& s, const ConstrainedPattern& cp);

}  // namespace descpat
