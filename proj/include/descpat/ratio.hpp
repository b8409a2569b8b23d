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

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace descpat {

/// Exact non-negative fraction. The stored numerator and denominator are kept as
/// given (3/3 stays 3/3); comparisons are by value.
class Ratio {
  public:
    constexpr Ratio() = default;
    Ratio(std::uint64_t numerator, std::uint64_t denominator);

    std::uint64_t numerator() const noexcept { return num_; }
    std::uint64_t denominator() const noexcept { return den_; }

    double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
    Ratio reduced() const;

    /// "p/q" as stored.
    std::string str() const;

    /// Accepts "p/q", an integer, or a decimal such as "0.25"; decimals are read
    /// as exact decimal fractions, never through floating point.
    static Ratio parse(std::string_view text);

    friend bool operator==(const Ratio& a, const Ratio& b) noexcept;
    friend std::weak_ordering operator<=>(const Ratio& a, const Ratio& b) noexcept;

  private:
    std::uint64_t num_ = 0;
    std::uint64_t den_ = 1;
};

/// Fraction of sample words matched by a pattern; denominator is the sample size.
using SupportValue = Ratio;

/// Support threshold in (0, 1]. Throws ConfigError otherwise.
Ratio parse_threshold(std::string_view text);
void check_threshold(const Ratio& threshold);

}  // namespace descpat
