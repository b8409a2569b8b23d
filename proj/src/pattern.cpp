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

#include "descpat/pattern.hpp"

#include "descpat/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>
#include <unordered_map>

namespace descpat {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::vector<std::string_view> split_ws(std::string_view text) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && is_space(text[i])) ++i;
        std::size_t j = i;
        while (j < text.size() && !is_space(text[j])) ++j;
        if (j > i) out.push_back(text.substr(i, j - i));
        i = j;
    }
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

std::size_t parse_count(std::string_view digits, std::string_view context) {
    std::size_t value = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || ec != std::errc() || end != digits.data() + digits.size()) {
        throw ParseError("malformed gap bound '" + std::string(context) + "'");
    }
    return value;
}

}  // namespace

// Alphabet --------------------------------------------------------------------

Alphabet::Alphabet(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
    if (tokens_.empty()) {
        throw ConfigError("alphabet must not be empty");
    }
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
        const std::string& t = tokens_[i];
        if (t.empty() || t.front() == '$' || std::any_of(t.begin(), t.end(), is_space)) {
            throw ConfigError("invalid alphabet token '" + t + "'");
        }
        if (!index_.emplace(t, static_cast<Symbol>(i)).second) {
            throw ConfigError("duplicate alphabet token '" + t + "'");
        }
        single_char_ = single_char_ && t.size() == 1;
    }
}

std::optional<Symbol> Alphabet::find(std::string_view token) const {
    if (auto it = index_.find(token); it != index_.end()) {
        return it->second;
    }
    return std::nullopt;
}

// Pattern ---------------------------------------------------------------------

Pattern::Pattern(std::vector<Item> items) : items_(std::move(items)) {
    if (items_.empty()) {
        throw ConfigError("pattern must not be empty");
    }
    for (const Item& it : items_) {
        if (it.is_variable() && it.var() == 0) {
            throw ConfigError("variable indices start at 1");
        }
    }
}

Pattern Pattern::all_variables(std::size_t length) {
    std::vector<Item> items;
    items.reserve(length);
    for (std::size_t i = 1; i <= length; ++i) {
        items.push_back(Item::variable(static_cast<std::uint32_t>(i)));
    }
    return Pattern(std::move(items));
}

Pattern Pattern::from_word(WordView word) {
    std::vector<Item> items;
    items.reserve(word.size());
    for (Symbol s : word) items.push_back(Item::terminal(s));
    return Pattern(std::move(items));
}

std::vector<std::uint32_t> Pattern::variables() const {
    std::vector<std::uint32_t> vars;
    for (const Item& it : items_) {
        if (it.is_variable() && std::find(vars.begin(), vars.end(), it.var()) == vars.end()) {
            vars.push_back(it.var());
        }
    }
    return vars;
}

bool Pattern::variable_free() const {
    return std::none_of(items_.begin(), items_.end(), [](const Item& it) { return it.is_variable(); });
}

std::uint32_t Pattern::max_variable() const {
    std::uint32_t m = 0;
    for (const Item& it : items_) {
        if (it.is_variable()) m = std::max(m, it.var());
    }
    return m;
}

Pattern Pattern::replace(std::uint32_t index, Item replacement) const {
    std::vector<Item> items = items_;
    for (Item& it : items) {
        if (it.is_variable() && it.var() == index) it = replacement;
    }
    return Pattern(std::move(items));
}

// Gap constraints ---------------------------------------------------------------

GapConstraints::GapConstraints(std::vector<GapBound> bounds) : bounds_(std::move(bounds)) {
    for (std::size_t i = 0; i < bounds_.size(); ++i) {
        if (bounds_[i].lower > bounds_[i].upper) {
            throw ConfigError("gap bound " + std::to_string(i + 1) + " has lower > upper");
        }
    }
}

GapConstraints GapConstraints::unconstrained(std::size_t gaps) {
    return GapConstraints(std::vector<GapBound>(gaps, GapBound{}));
}

ConstrainedPattern::ConstrainedPattern(Pattern pattern, GapConstraints constraints)
    : pattern_(std::move(pattern)), constraints_(std::move(constraints)) {
    if (constraints_.size() + 1 != pattern_.size()) {
        throw ConfigError("pattern of length " + std::to_string(pattern_.size()) + " needs " +
                          std::to_string(pattern_.size() - 1) + " gap bounds, got " +
                          std::to_string(constraints_.size()));
    }
}

ConstrainedPattern validate_constrained(const Pattern& p, const GapConstraints& c) { return ConstrainedPattern(p, c); }

// Sample ------------------------------------------------------------------------

Sample::Sample(std::vector<Word> words, Alphabet alphabet) : alphabet_(std::move(alphabet)) {
    std::set<Word> seen;
    for (Word& w : words) {
        if (w.empty()) {
            throw ConfigError("sample words must be non-empty");
        }
        for (Symbol s : w) {
            if (!alphabet_.contains(s)) {
                throw ConfigError("sample word uses a symbol outside the alphabet");
            }
        }
        if (seen.insert(w).second) {
            words_.push_back(std::move(w));
        }
    }
    if (words_.empty()) {
        throw ConfigError("sample must not be empty");
    }
}

const Word& Sample::shortest() const {
    return *std::min_element(words_.begin(), words_.end(),
                             [](const Word& a, const Word& b) { return a.size() < b.size(); });
}

// Substitutions -----------------------------------------------------------------

Word WordSubstitution::apply(const Pattern& p) const {
    Word out;
    for (const Item& it : p) {
        if (it.is_terminal()) {
            out.push_back(it.symbol());
            continue;
        }
        auto img = images.find(it.var());
        if (img == images.end() || img->second.empty()) {
            throw ConfigError("substitution has no non-empty image for $" + std::to_string(it.var()));
        }
        out.insert(out.end(), img->second.begin(), img->second.end());
    }
    return out;
}

Word SymbolSubstitution::apply(const Pattern& p) const {
    Word out;
    out.reserve(p.size());
    for (const Item& it : p) {
        if (it.is_terminal()) {
            out.push_back(it.symbol());
            continue;
        }
        auto img = images.find(it.var());
        if (img == images.end()) {
            throw ConfigError("substitution has no image for $" + std::to_string(it.var()));
        }
        out.push_back(img->second);
    }
    return out;
}

Pattern PatternSubstitution::apply(const Pattern& p) const {
    std::vector<Item> out;
    out.reserve(p.size());
    for (const Item& it : p) {
        if (it.is_terminal()) {
            out.push_back(it);
            continue;
        }
        auto img = images.find(it.var());
        if (img == images.end()) {
            throw ConfigError("substitution has no image for $" + std::to_string(it.var()));
        }
        out.push_back(img->second);
    }
    return Pattern(std::move(out));
}

// Canonical form ----------------------------------------------------------------

Pattern canonicalize(const Pattern& p) {
    std::unordered_map<std::uint32_t, std::uint32_t> renumber;
    std::vector<Item> out;
    out.reserve(p.size());
    for (const Item& it : p) {
        if (it.is_terminal()) {
            out.push_back(it);
            continue;
        }
        auto [pos, fresh] = renumber.emplace(it.var(), static_cast<std::uint32_t>(renumber.size() + 1));
        out.push_back(Item::variable(pos->second));
    }
    return Pattern(std::move(out));
}

void check_alphabet(const Pattern& p, const Alphabet& alphabet) {
    for (const Item& it : p) {
        if (it.is_terminal() && !alphabet.contains(it.symbol())) {
            throw ConfigError("pattern terminal outside the alphabet");
        }
    }
}

// Text forms --------------------------------------------------------------------

Pattern parse_pattern(std::string_view text, const Alphabet& alphabet) {
    const auto tokens = split_ws(text);
    if (tokens.empty()) {
        throw ParseError("empty pattern");
    }
    std::vector<Item> items;
    items.reserve(tokens.size());
    for (std::string_view tok : tokens) {
        if (tok.front() == '$') {
            std::string_view digits = tok.substr(1);
            std::uint32_t index = 0;
            auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
            if (digits.empty() || ec != std::errc() || end != digits.data() + digits.size() || index == 0) {
                throw ParseError("malformed variable token '" + std::string(tok) + "'");
            }
            items.push_back(Item::variable(index));
            continue;
        }
        auto sym = alphabet.find(tok);
        if (!sym) {
            throw ParseError("unknown terminal '" + std::string(tok) + "'");
        }
        items.push_back(Item::terminal(*sym));
    }
    return Pattern(std::move(items));
}

std::string render_pattern(const Pattern& p, const Alphabet& alphabet) {
    std::string out;
    for (const Item& it : p) {
        if (!out.empty()) out += ' ';
        if (it.is_variable()) {
            out += '$';
            out += std::to_string(it.var());
        } else {
            out += alphabet.token(it.symbol());
        }
    }
    return out;
}

GapConstraints parse_gaps(std::string_view text) {
    text = trim(text);
    std::vector<GapBound> bounds;
    if (text.empty()) {
        return GapConstraints(std::move(bounds));
    }
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view pair = trim(text.substr(start, comma - start));
        const std::size_t dash = pair.find('-');
        if (dash == std::string_view::npos) {
            throw ParseError("malformed gap bound '" + std::string(pair) + "', expected lo-hi");
        }
        GapBound b;
        b.lower = parse_count(trim(pair.substr(0, dash)), pair);
        std::string_view hi = trim(pair.substr(dash + 1));
        b.upper = hi == "inf" ? kUnbounded : parse_count(hi, pair);
        bounds.push_back(b);
        start = comma + 1;
    }
    return GapConstraints(std::move(bounds));
}

std::string render_gaps(const GapConstraints& c) {
    std::string out;
    for (const GapBound& b : c.bounds()) {
        if (!out.empty()) out += ',';
        out += std::to_string(b.lower);
        out += '-';
        out += b.unbounded() ? std::string("inf") : std::to_string(b.upper);
    }
    return out;
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
    Word out;
    for (std::string_view tok : split_ws(text)) {
        auto sym = alphabet.find(tok);
        if (!sym) {
            throw ParseError("unknown symbol '" + std::string(tok) + "'");
        }
        out.push_back(*sym);
    }
    return out;
}

Word parse_char_word(std::string_view text, const Alphabet& alphabet) {
    Word out;
    for (char c : text) {
        if (is_space(c)) continue;
        auto sym = alphabet.find(std::string_view(&c, 1));
        if (!sym) {
            throw ParseError(std::string("unknown symbol '") + c + "'");
        }
        out.push_back(*sym);
    }
    return out;
}

std::string render_word(WordView word, const Alphabet& alphabet) {
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i > 0 && !alphabet.single_char()) out += ' ';
        out += alphabet.token(word[i]);
    }
    return out;
}

}  // namespace descpat
