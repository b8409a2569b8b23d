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

// Shared syntactic objects: alphabets, words, patterns over terminals and
// variables, gap constraints, samples and the substitution kinds that act on
// them. Everything here is an immutable value once constructed.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace descpat {

/// Index of a terminal symbol in its Alphabet.
using Symbol = std::uint32_t;
using Word = std::vector<Symbol>;
using WordView = std::span<const Symbol>;

/// Terminal symbol tokens in declaration order. Tokens are non-empty, contain no
/// whitespace and must not start with '$' (reserved for variables).
class Alphabet {
  public:
    explicit Alphabet(std::vector<std::string> tokens);

    std::size_t size() const noexcept { return tokens_.size(); }
    const std::string& token(Symbol s) const { return tokens_.at(s); }
    const std::vector<std::string>& tokens() const noexcept { return tokens_; }
    std::optional<Symbol> find(std::string_view token) const;
    bool contains(Symbol s) const noexcept { return s < tokens_.size(); }

    /// True when every token is one character, so words render without separators.
    bool single_char() const noexcept { return single_char_; }

    friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.tokens_ == b.tokens_; }

  private:
    std::vector<std::string> tokens_;
    std::map<std::string, Symbol, std::less<>> index_;
    bool single_char_ = true;
};

struct Variable {
    std::uint32_t index = 1;
    auto operator<=>(const Variable&) const = default;
};

/// One pattern position: a terminal or a variable. Terminals order before
/// variables; within a kind, by symbol or variable index.
class Item {
  public:
    static constexpr Item terminal(Symbol s) noexcept { return Item(Kind::Terminal, s); }
    static constexpr Item variable(std::uint32_t index) noexcept { return Item(Kind::Variable, index); }

    constexpr bool is_terminal() const noexcept { return kind_ == Kind::Terminal; }
    constexpr bool is_variable() const noexcept { return kind_ == Kind::Variable; }
    constexpr Symbol symbol() const noexcept { return value_; }
    constexpr std::uint32_t var() const noexcept { return value_; }

    auto operator<=>(const Item&) const = default;

  private:
    enum class Kind : std::uint8_t { Terminal, Variable };
    constexpr Item(Kind kind, std::uint32_t value) noexcept : kind_(kind), value_(value) {}

    Kind kind_;
    std::uint32_t value_;
};

class Pattern {
  public:
    /// Throws ConfigError on an empty sequence or a variable index of 0.
    explicit Pattern(std::vector<Item> items);

    /// x1 x2 ... x_length
    static Pattern all_variables(std::size_t length);
    static Pattern from_word(WordView word);

    std::size_t size() const noexcept { return items_.size(); }
    const Item& operator[](std::size_t i) const { return items_[i]; }
    const std::vector<Item>& items() const noexcept { return items_; }
    auto begin() const noexcept { return items_.begin(); }
    auto end() const noexcept { return items_.end(); }

    /// Distinct variable indices in order of first occurrence.
    std::vector<std::uint32_t> variables() const;
    std::size_t variable_count() const { return variables().size(); }
    bool variable_free() const;
    std::uint32_t max_variable() const;

    /// Replaces every occurrence of variable `index` by `replacement`.
    Pattern replace(std::uint32_t index, Item replacement) const;

    auto operator<=>(const Pattern&) const = default;

  private:
    std::vector<Item> items_;
};

inline constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

/// Lower and upper bound on the number of word positions skipped between two
/// consecutive embedded pattern positions.
struct GapBound {
    std::size_t lower = 0;
    std::size_t upper = kUnbounded;

    bool admits(std::size_t gap) const noexcept { return lower <= gap && gap <= upper; }
    bool unbounded() const noexcept { return upper == kUnbounded; }
    auto operator<=>(const GapBound&) const = default;
};

class GapConstraints {
  public:
    GapConstraints() = default;
    /// Throws ConfigError if some pair has lower > upper.
    explicit GapConstraints(std::vector<GapBound> bounds);

    static GapConstraints unconstrained(std::size_t gaps);

    std::size_t size() const noexcept { return bounds_.size(); }
    bool empty() const noexcept { return bounds_.empty(); }
    const GapBound& operator[](std::size_t i) const { return bounds_[i]; }
    const std::vector<GapBound>& bounds() const noexcept { return bounds_; }

    auto operator<=>(const GapConstraints&) const = default;

  private:
    std::vector<GapBound> bounds_;
};

/// A pattern paired with exactly |pattern| - 1 gap bounds.
class ConstrainedPattern {
  public:
    /// Throws ConfigError on arity mismatch.
    ConstrainedPattern(Pattern pattern, GapConstraints constraints);

    const Pattern& pattern() const noexcept { return pattern_; }
    const GapConstraints& constraints() const noexcept { return constraints_; }
    std::size_t size() const noexcept { return pattern_.size(); }

    bool operator==(const ConstrainedPattern&) const = default;

  private:
    Pattern pattern_;
    GapConstraints constraints_;
};

/// Distinct non-empty words over an alphabet. Duplicates are dropped at
/// construction, keeping first occurrences in input order.
class Sample {
  public:
    Sample(std::vector<Word> words, Alphabet alphabet);

    const std::vector<Word>& words() const noexcept { return words_; }
    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t size() const noexcept { return words_.size(); }

    /// First shortest word in sample order.
    const Word& shortest() const;

  private:
    std::vector<Word> words_;
    Alphabet alphabet_;
};

/// Classical substitution: variables to non-empty words.
struct WordSubstitution {
    std::map<std::uint32_t, Word> images;

    /// Throws ConfigError if a variable of p has no image.
    Word apply(const Pattern& p) const;
    bool operator==(const WordSubstitution&) const = default;
};

/// Subsequence substitution: variables to single symbols.
struct SymbolSubstitution {
    std::map<std::uint32_t, Symbol> images;

    Word apply(const Pattern& p) const;
    auto operator<=>(const SymbolSubstitution&) const = default;
};

/// Pattern-to-pattern substitution mapping each variable to one item;
/// terminals map to themselves.
struct PatternSubstitution {
    std::map<std::uint32_t, Item> images;

    Pattern apply(const Pattern& p) const;
    bool operator==(const PatternSubstitution&) const = default;
};

/// 1-based, strictly increasing word positions, one per pattern position.
struct Embedding {
    std::vector<std::size_t> positions;
    auto operator<=>(const Embedding&) const = default;
};

/// Variables renumbered 1, 2, ... by first occurrence.
Pattern canonicalize(const Pattern& p);

ConstrainedPattern validate_constrained(const Pattern& p, const GapConstraints& c);

/// Throws ConfigError if a terminal of p is outside the alphabet.
void check_alphabet(const Pattern& p, const Alphabet& alphabet);

// Text forms ---------------------------------------------------------------

/// Whitespace-separated tokens; `$k` is variable k, anything else must be an
/// alphabet token. Throws ParseError.
Pattern parse_pattern(std::string_view text, const Alphabet& alphabet);
std::string render_pattern(const Pattern& p, const Alphabet& alphabet);

/// Comma-separated `lo-hi` pairs with `inf` for an unbounded upper gap. The
/// empty string is the empty tuple.
GapConstraints parse_gaps(std::string_view text);
std::string render_gaps(const GapConstraints& c);

/// Whitespace-separated tokens.
Word parse_word(std::string_view text, const Alphabet& alphabet);
/// Each non-whitespace character is one symbol.
Word parse_char_word(std::string_view text, const Alphabet& alphabet);
/// Concatenated for single-character alphabets, space-separated otherwise.
std::string render_word(WordView word, const Alphabet& alphabet);

}  // namespace descpat
