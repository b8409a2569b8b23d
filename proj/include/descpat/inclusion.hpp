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

// Language inclusion for equal-length patterns, decided by the existence of an
// item-to-item substitution. Unequal lengths (and, for subsequence patterns,
// unequal gap tuples) are rejected with ConfigError.

#include "descpat/pattern.hpp"

#include <optional>

namespace descpat {

/// h with h(source) = target, binding each source variable on first sight.
std::optional<PatternSubstitution> find_substitution(const Pattern& source, const Pattern& target);

/// L(a) is a subset of L(b), classical semantics.
bool included(const Pattern& a, const Pattern& b);
bool strictly_included(const Pattern& a, const Pattern& b);
bool equivalent(const Pattern& a, const Pattern& b);

/// L(a, C) is a subset of L(b, C); both must carry the same C.
bool included_subseq(const ConstrainedPattern& a, const ConstrainedPattern& b);
bool strictly_included_subseq(const ConstrainedPattern& a, const ConstrainedPattern& b);
bool equivalent_subseq(const ConstrainedPattern& a, const ConstrainedPattern& b);

}  // namespace descpat
