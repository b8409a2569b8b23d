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

#include <optional>

namespace descpat {

struct MatchResult {
    bool matched = false;
    /// Present iff matched; applying it to the pattern reproduces the word.
    std::optional<WordSubstitution> witness;
};

/// Classical membership w in L(p): variables map uniformly to non-empty words.
/// Backtracking search; at a variable's first occurrence image lengths are tried
/// shortest first, so the witness is deterministic.
MatchResult member(WordView w, const Pattern& p);

/// True iff every sample word is in L(p).
bool sample_subset(const Sample& s, const Pattern& p);

}  // namespace descpat
