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

#include "descpat/ratio.hpp"

#include "descpat/error.hpp"

#include <charconv>
#include <limits>
#include <numeric>

namespace descpat {

namespace {

__extension__ using Wide = unsigned __int128;

std::uint64_t parse_digits(std::string_view digits, std::string_view whole) {
    if (digits.empty()) {
        throw ParseError("malformed number '" + std::string(whole) + "'");
    }
    std::uint64_t value = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || end != digits.data() + digits.size()) {
        throw ParseError("malformed number '" + std::string(whole) + "'");
    }
    return value;
}

}  // namespace

Ratio::Ratio(std::uint64_t numerator, std::uint64_t denominator) : num_(numerator), den_(denominator) {
    if (denominator == 0) {
        throw ConfigError("ratio with zero denominator");
    }
}

Ratio Ratio::reduced() const {
    const std::uint64_t g = std::gcd(num_, den_);
    return g == 0 ? *this : Ratio(num_ / g, den_ / g);
}

std::string Ratio::str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

Ratio Ratio::parse(std::string_view text) {
    if (text.empty()) {
        throw ParseError("empty number");
    }
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        const auto num = parse_digits(text.substr(0, slash), text);
        const auto den = parse_digits(text.substr(slash + 1), text);
        if (den == 0) {
            throw ParseError("zero denominator in '" + std::string(text) + "'");
        }
        return Ratio(num, den);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        if (frac.size() > 18) {
            throw ParseError("too many decimal places in '" + std::string(text) + "'");
        }
        const std::uint64_t int_part = whole.empty() ? 0 : parse_digits(whole, text);
        const std::uint64_t frac_part = frac.empty() ? 0 : parse_digits(frac, text);
        std::uint64_t scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) {
            scale *= 10;
        }
        if (int_part > (std::numeric_limits<std::uint64_t>::max() - frac_part) / scale) {
            throw ParseError("number out of range '" + std::string(text) + "'");
        }
        return Ratio(int_part * scale + frac_part, scale).reduced();
    }
    return Ratio(parse_digits(text, text), 1);
}

bool operator==(const Ratio& a, const Ratio& b) noexcept {
    return static_cast<Wide>(a.num_) * b.den_ == static_cast<Wide>(b.num_) * a.den_;
}

std::weak_ordering operator<=>(const Ratio& a, const Ratio& b) noexcept {
    const auto lhs = static_cast<Wide>(a.num_) * b.den_;
    const auto rhs = static_cast<Wide>(b.num_) * a.den_;
    if (lhs < rhs) return std::weak_ordering::less;
    if (lhs > rhs) return std::weak_ordering::greater;
    return std::weak_ordering::equivalent;
}

void check_threshold(const Ratio& threshold) {
    if (threshold.numerator() == 0 || threshold > Ratio(1, 1)) {
        throw ConfigError("support threshold " + threshold.str() + " is outside (0, 1]");
    }
}

Ratio parse_threshold(std::string_view text) {
    Ratio r = Ratio::parse(text);
    check_threshold(r);
    return r;
}

}  // namespace descpat
