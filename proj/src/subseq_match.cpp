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

#include "descpat/subseq_match.hpp"

#include "descpat/error.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

namespace descpat {

namespace {

class SubseqSearch {
  public:
    // Called once per complete feasible assignment; return true to stop.
    using Visitor = std::function<bool(SubseqSearch&)>;

    SubseqSearch(WordView w, const ConstrainedPattern& cp)
        : word_(w), pattern_(cp.pattern()), gaps_(cp.constraints()) {
        const auto vars = pattern_.variables();
        slot_of_.assign(pattern_.max_variable() + 1, 0);
        for (std::size_t s = 0; s < vars.size(); ++s) slot_of_[vars[s]] = s;
        var_of_slot_ = vars;
        assigned_.assign(vars.size(), kFree);
        reach_.assign(pattern_.size(), std::vector<char>(word_.size(), 0));
    }

    void run(const Visitor& visit) {
        if (word_.size() < pattern_.size()) return;
        visit_ = &visit;
        descend(0);
    }

    SymbolSubstitution assignment() const {
        SymbolSubstitution h;
        for (std::size_t s = 0; s < assigned_.size(); ++s) h.images.emplace(var_of_slot_[s], assigned_[s]);
        return h;
    }

    /// Embeddings for the current complete assignment, lexicographically, at most `limit`.
    std::vector<Embedding> embeddings(std::size_t limit) const {
        const std::size_t m = pattern_.size();
        const std::size_t n = word_.size();
        // completes[j][p]: position p at level j lies on some full embedding.
        std::vector<std::vector<char>> completes(m, std::vector<char>(n, 0));
        completes[m - 1] = reach_[m - 1];
        for (std::size_t j = m - 1; j-- > 0;) {
            std::vector<std::size_t> prefix(n + 1, 0);
            for (std::size_t q = 0; q < n; ++q) prefix[q + 1] = prefix[q] + (completes[j + 1][q] ? 1 : 0);
            for (std::size_t p = 0; p < n; ++p) {
                if (!reach_[j][p]) continue;
                auto [lo, hi] = forward_window(j, p);
                completes[j][p] = lo < hi && prefix[hi] - prefix[lo] > 0;
            }
        }

        std::vector<Embedding> out;
        std::vector<std::size_t> current;
        std::function<void(std::size_t)> walk = [&](std::size_t j) {
            if (out.size() >= limit) return;
            if (j == m) {
                Embedding e;
                for (std::size_t p : current) e.positions.push_back(p + 1);
                out.push_back(std::move(e));
                return;
            }
            std::size_t lo = 0;
            std::size_t hi = n;
            if (j > 0) std::tie(lo, hi) = forward_window(j - 1, current.back());
            for (std::size_t q = lo; q < hi && out.size() < limit; ++q) {
                if (!completes[j][q]) continue;
                current.push_back(q);
                walk(j + 1);
                current.pop_back();
            }
        };
        walk(0);
        return out;
    }

  private:
    static constexpr Symbol kFree = static_cast<Symbol>(-1);

    // Half-open range of positions at level j+1 admissible after position p at level j.
    std::pair<std::size_t, std::size_t> forward_window(std::size_t j, std::size_t p) const {
        const GapBound& b = gaps_[j];
        const std::size_t n = word_.size();
        const std::size_t lo = p + 1 + std::min(b.lower, n);
        const std::size_t hi = b.unbounded() || b.upper >= n ? n : std::min(n, p + 2 + b.upper);
        return {std::min(lo, n), hi};
    }

    // Positions admissible at level j given the reachable set at level j-1.
    std::vector<char> candidates(std::size_t j) const {
        const std::size_t n = word_.size();
        if (j == 0) return std::vector<char>(n, 1);
        const GapBound& b = gaps_[j - 1];
        const std::vector<char>& prev = reach_[j - 1];
        std::vector<std::size_t> prefix(n + 1, 0);
        for (std::size_t q = 0; q < n; ++q) prefix[q + 1] = prefix[q] + (prev[q] ? 1 : 0);
        // UNBOUNDED behaves as an upper bound of |w|.
        const std::size_t upper = b.unbounded() ? n : std::min(b.upper, n);
        std::vector<char> out(n, 0);
        for (std::size_t q = 0; q < n; ++q) {
            // predecessors p with lower + 1 <= q - p <= upper + 1
            if (q < b.lower + 1) continue;
            const std::size_t hi = q - b.lower;  // exclusive
            const std::size_t lo = q >= upper + 1 ? q - upper - 1 : 0;
            out[q] = prefix[hi] - prefix[lo] > 0;
        }
        return out;
    }

    bool fill(std::size_t j, const std::vector<char>& cand, Symbol sym) {
        bool any = false;
        for (std::size_t q = 0; q < word_.size(); ++q) {
            reach_[j][q] = cand[q] && word_[q] == sym;
            any = any || reach_[j][q];
        }
        return any;
    }

    bool descend(std::size_t j) {
        if (j == pattern_.size()) return (*visit_)(*this);
        const std::vector<char> cand = candidates(j);
        const Item& it = pattern_[j];
        if (it.is_terminal()) {
            return fill(j, cand, it.symbol()) && descend(j + 1);
        }
        const std::size_t s = slot_of_[it.var()];
        if (assigned_[s] != kFree) {
            return fill(j, cand, assigned_[s]) && descend(j + 1);
        }
        std::vector<Symbol> options;
        for (std::size_t q = 0; q < word_.size(); ++q) {
            if (cand[q]) options.push_back(word_[q]);
        }
        std::sort(options.begin(), options.end());
        options.erase(std::unique(options.begin(), options.end()), options.end());
        for (Symbol sym : options) {
            assigned_[s] = sym;
            fill(j, cand, sym);
            if (descend(j + 1)) return true;
        }
        assigned_[s] = kFree;
        return false;
    }

    WordView word_;
    const Pattern& pattern_;
    const GapConstraints& gaps_;
    std::vector<std::size_t> slot_of_;
    std::vector<std::uint32_t> var_of_slot_;
    std::vector<Symbol> assigned_;
    std::vector<std::vector<char>> reach_;
    const Visitor* visit_ = nullptr;
};

}  // namespace

SubseqMatch match_subseq(WordView w, const ConstrainedPattern& cp) {
    SubseqMatch result;
    SubseqSearch search(w, cp);
    search.run([&](SubseqSearch& s) {
        result.matched = true;
        result.witness = SubseqWitness{s.assignment(), s.embeddings(1).front()};
        return true;
    });
    return result;
}

bool matches(WordView w, const ConstrainedPattern& cp) {
    bool found = false;
    SubseqSearch search(w, cp);
    search.run([&](SubseqSearch&) { return found = true; });
    return found;
}

std::vector<SubseqWitness> enumerate_embeddings(WordView w, const ConstrainedPattern& cp, std::size_t limit) {
    if (limit == 0) {
        throw ConfigError("embedding limit must be at least 1");
    }
    std::vector<SubseqWitness> out;
    SubseqSearch search(w, cp);
    search.run([&](SubseqSearch& s) {
        const SymbolSubstitution h = s.assignment();
        for (Embedding& e : s.embeddings(limit - out.size())) out.push_back(SubseqWitness{h, std::move(e)});
        return out.size() >= limit;
    });
    return out;
}

SupportValue support(const Sample& s, const ConstrainedPattern& cp) {
    const auto hits = std::count_if(s.words().begin(), s.words().end(), [&](const Word& w) { return matches(w, cp); });
    return SupportValue(static_cast<std::uint64_t>(hits), s.size());
}

}  // namespace descpat
