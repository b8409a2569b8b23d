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

#include "descpat/oracle.hpp"

#include "descpat/error.hpp"
#include "descpat/inclusion.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace descpat::oracle {

bool brute_member_angluin(WordView w, const Pattern& p) {
    if (w.size() > kAngluinMaxWord || p.variable_count() > kAngluinMaxVars) {
        throw SizeLimitError("brute_member_angluin: word length <= 10 and at most 4 variables");
    }
    const std::size_t m = p.size();
    if (w.size() < m) return false;

    std::vector<std::size_t> lengths(m, 0);
    const auto consistent = [&] {
        std::map<std::uint32_t, Word> images;
        std::size_t at = 0;
        for (std::size_t i = 0; i < m; ++i) {
            Word piece(w.begin() + at, w.begin() + at + lengths[i]);
            at += lengths[i];
            if (p[i].is_terminal()) {
                if (piece.size() != 1 || piece[0] != p[i].symbol()) return false;
                continue;
            }
            auto [it, fresh] = images.emplace(p[i].var(), piece);
            if (!fresh && it->second != piece) return false;
        }
        return true;
    };
    std::function<bool(std::size_t, std::size_t)> compose = [&](std::size_t i, std::size_t left) {
        if (i + 1 == m) {
            lengths[i] = left;
            return consistent();
        }
        for (std::size_t len = 1; len + (m - i - 1) <= left; ++len) {
            lengths[i] = len;
            if (compose(i + 1, left - len)) return true;
        }
        return false;
    };
    return compose(0, w.size());
}

bool brute_match_subseq(WordView w, const ConstrainedPattern& cp) {
    const Pattern& p = cp.pattern();
    const auto vars = p.variables();
    if (w.size() > kSubseqMaxWord || p.size() > kSubseqMaxPattern || vars.size() > kSubseqMaxVars) {
        throw SizeLimitError("brute_match_subseq: word length <= 12, pattern length <= 5, at most 3 variables");
    }
    const std::size_t n = w.size();
    const std::size_t m = p.size();
    if (n < m) return false;

    // Symbols absent from w can never be embedded.
    const std::size_t sigma = static_cast<std::size_t>(*std::max_element(w.begin(), w.end())) + 1;
    std::size_t assignments = 1;
    for (std::size_t k = 0; k < vars.size(); ++k) assignments *= sigma;

    std::vector<std::size_t> pos(m, 0);
    for (std::size_t code = 0; code < assignments; ++code) {
        SymbolSubstitution h;
        std::size_t rest = code;
        for (std::uint32_t v : vars) {
            h.images[v] = static_cast<Symbol>(rest % sigma);
            rest /= sigma;
        }
        const Word target = h.apply(p);

        std::function<bool(std::size_t, std::size_t)> place = [&](std::size_t j, std::size_t from) {
            if (j == m) {
                for (std::size_t g = 0; g + 1 < m; ++g) {
                    if (!cp.constraints()[g].admits(pos[g + 1] - pos[g] - 1)) return false;
                }
                return true;
            }
            for (std::size_t q = from; q < n; ++q) {
                if (w[q] != target[j]) continue;
                pos[j] = q;
                if (place(j + 1, q + 1)) return true;
            }
            return false;
        };
        if (place(0, 0)) return true;
    }
    return false;
}

SupportValue brute_support(const std::vector<Word>& words, const ConstrainedPattern& cp) {
    std::uint64_t hits = 0;
    for (const Word& w : words) hits += brute_match_subseq(w, cp) ? 1 : 0;
    return SupportValue(hits, words.size());
}

std::vector<Pattern> enumerate_patterns(std::size_t length, const Alphabet& alphabet, const PatternClass& cls) {
    if (length == 0 || length > kEnumMaxLength || alphabet.size() > kEnumMaxAlphabet) {
        throw SizeLimitError("enumerate_patterns: 1 <= length <= 4 and at most 3 symbols");
    }
    std::vector<Pattern> out;
    std::vector<Item> items;
    // Canonical form: a variable either repeats an earlier one or is the next fresh index.
    std::function<void(std::uint32_t)> extend = [&](std::uint32_t fresh) {
        if (items.size() == length) {
            Pattern p(items);
            if (in_class(p, cls)) out.push_back(std::move(p));
            return;
        }
        for (Symbol a = 0; a < alphabet.size(); ++a) {
            items.push_back(Item::terminal(a));
            extend(fresh);
            items.pop_back();
        }
        for (std::uint32_t v = 1; v <= fresh; ++v) {
            items.push_back(Item::variable(v));
            extend(v == fresh ? fresh + 1 : fresh);
            items.pop_back();
        }
    };
    extend(1);
    return out;
}

bool brute_descriptive(const ConstrainedPattern& cp, const Sample& s, const Ratio& threshold, const PatternClass& cls) {
    if (!in_class(cp.pattern(), cls)) return false;
    if (brute_support(s.words(), cp) < threshold) return false;
    for (const Pattern& beta : enumerate_patterns(cp.size(), s.alphabet(), cls)) {
        const ConstrainedPattern other(beta, cp.constraints());
        if (strictly_included_subseq(other, cp) && brute_support(s.words(), other) >= threshold) return false;
    }
    return true;
}

bool brute_descriptive_classic(const Pattern& p, const Sample& s, const PatternClass& cls) {
    const auto covers = [&](const Pattern& q) {
        return std::all_of(s.words().begin(), s.words().end(),
                           [&](const Word& w) { return brute_member_angluin(w, q); });
    };
    if (!in_class(p, cls) || !covers(p)) return false;
    for (const Pattern& beta : enumerate_patterns(p.size(), s.alphabet(), cls)) {
        if (strictly_included(beta, p) && covers(beta)) return false;
    }
    return true;
}

}  // namespace descpat::oracle
