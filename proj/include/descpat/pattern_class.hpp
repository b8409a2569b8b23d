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

#include <cstddef>
#include <string>
#include <string_view>

namespace descpat {

/// Syntactic restriction on the patterns a discovery run may produce.
class PatternClass {
  public:
    enum class Kind { All, Regular, NonCross, MaxVars };

    static PatternClass all() { return PatternClass(Kind::All, 0); }
    /// Every variable occurs at most once.
    static PatternClass regular() { return PatternClass(Kind::Regular, 0); }
    /// Occurrence blocks of distinct variables do not interleave.
    static PatternClass noncross() { return PatternClass(Kind::NonCross, 0); }
    /// At most k distinct variables.
    static PatternClass max_vars(std::size_t k) { return PatternClass(Kind::MaxVars, k); }

    /// `all`, `regular`, `noncross` or `maxvars:k`. Throws ParseError.
    static PatternClass parse(std::string_view text);
    std::string str() const;

    Kind kind() const noexcept { return kind_; }
    std::size_t limit() const noexcept { return limit_; }

    bool operator==(const PatternClass&) const = default;

  private:
    PatternClass(Kind kind, std::size_t limit) : kind_(kind), limit_(limit) {}

    Kind kind_;
    std::size_t limit_;
};

bool in_class(const Pattern& p, const PatternClass& cls);

/// Exhaustive check, for patterns of the given length over the alphabet, that
/// the class supports refinement-based discovery:
///  (i)  x1 ... x_length belongs to the class, and
///  (ii) whenever a class member beta strictly refines a class member alpha,
///       some single refinement step of alpha (one variable replaced by a
///       terminal or merged into another variable of alpha) stays in the class
///       and is still refined by beta.
/// Requires length <= 4 and |alphabet| <= 3; throws SizeLimitError otherwise.
bool validate_closure(const PatternClass& cls, std::size_t length, const Alphabet& alphabet);

}  // namespace descpat
