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

#include "descpat/pattern_class.hpp"

#include "descpat/error.hpp"
#include "descpat/inclusion.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <set>

namespace descpat {

PatternClass PatternClass::parse(std::string_view text) {
    if (text == "all") return all();
    if (text == "regular") return regular();
    if (text == "noncross") return noncross();
    constexpr std::string_view prefix = "maxvars:";
    if (text.substr(0, prefix.size()) == prefix) {
        std::string_view digits = text.substr(prefix.size());
        std::size_t k = 0;
        auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
        if (!digits.empty() && ec == std::errc() && end == digits.data() + digits.size()) {
            return max_vars(k);
        }
    }
    throw ParseError("unknown pattern class '" + std::string(text) + "' (expected all, regular, noncross, maxvars:k)");
}

std::string PatternClass::str() const {
    switch (kind_) {
        case Kind::All: return "all";
        case Kind::Regular: return "regular";
        case Kind::NonCross: return "noncross";
        case Kind::MaxVars: return "maxvars:" + std::to_string(limit_);
    }
    return {};
}

bool in_class(const Pattern& p, const PatternClass& cls) {
    switch (cls.kind()) {
        case PatternClass::Kind::All:
            return true;
        case PatternClass::Kind::Regular: {
            std::set<std::uint32_t> seen;
            for (const Item& it : p) {
                if (it.is_variable() && !seen.insert(it.var()).second) return false;
            }
            return true;
        }
        case PatternClass::Kind::NonCross: {
            std::set<std::uint32_t> closed;
            std::optional<std::uint32_t> current;
            for (const Item& it : p) {
                if (!it.is_variable() || it.var() == current) continue;
                if (closed.count(it.var()) != 0) return false;
                if (current) closed.insert(*current);
                current = it.var();
            }
            return true;
        }
        case PatternClass::Kind::MaxVars:
            return p.variable_count() <= cls.limit();
    }
    return false;
}

namespace {

std::vector<Pattern> canonical_patterns(std::size_t length, std::size_t sigma) {
    std::vector<Pattern> out;
    std::vector<Item> items;
    std::function<void(std::uint32_t)> grow = [&](std::uint32_t next_var) {
        if (items.size() == length) {
            out.emplace_back(items);
            return;
        }
        for (Symbol s = 0; s < sigma; ++s) {
            items.push_back(Item::terminal(s));
            grow(next_var);
            items.pop_back();
        }
        for (std::uint32_t v = 1; v <= next_var; ++v) {
            items.push_back(Item::variable(v));
            grow(v == next_var ? next_var + 1 : next_var);
            items.pop_back();
        }
    };
    grow(1);
    return out;
}

std::vector<Pattern> single_steps(const Pattern& p, std::size_t sigma) {
    std::vector<Pattern> out;
    const auto vars = p.variables();
    for (std::uint32_t v : vars) {
        for (Symbol s = 0; s < sigma; ++s) out.push_back(p.replace(v, Item::terminal(s)));
        for (std::uint32_t u : vars) {
            if (u != v) out.push_back(p.replace(v, Item::variable(u)));
        }
    }
    return out;
}

}  // namespace

bool validate_closure(const PatternClass& cls, std::size_t length, const Alphabet& alphabet) {
    if (length == 0 || length > 4 || alphabet.size() > 3) {
        throw SizeLimitError("closure validation needs 1 <= length <= 4 and at most 3 symbols");
    }
    if (!in_class(Pattern::all_variables(length), cls)) return false;

    std::vector<Pattern> members;
    for (Pattern& p : canonical_patterns(length, alphabet.size())) {
        if (in_class(p, cls)) members.push_back(std::move(p));
    }
    for (const Pattern& alpha : members) {
        const auto steps = single_steps(alpha, alphabet.size());
        for (const Pattern& beta : members) {
            if (!strictly_included(beta, alpha)) continue;
            const bool bridged = std::any_of(steps.begin(), steps.end(), [&](const Pattern& gamma) {
                return in_class(gamma, cls) && included(beta, gamma);
            });
            if (!bridged) return false;
        }
    }
    return true;
}

}  // namespace descpat
