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

#include "descpat/angluin_match.hpp"

#include <algorithm>
#include <unordered_set>

namespace descpat {

namespace {

struct KeyHash {
    std::size_t operator()(const std::vector<std::uint32_t>& key) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (std::uint32_t v : key) {
            h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

class AngluinMatcher {
  public:
    AngluinMatcher(WordView w, const Pattern& p) : word_(w), pattern_(p) {
        const auto vars = p.variables();
        slot_of_.assign(p.max_variable() + 1, 0);
        for (std::size_t s = 0; s < vars.size(); ++s) slot_of_[vars[s]] = s;
        var_of_slot_ = vars;
        binding_.assign(vars.size(), Binding{});

        // Suffix occurrence counts drive both the length bound and the memo key.
        const std::size_t n = p.size();
        occ_.assign(n + 1, std::vector<std::uint32_t>(vars.size(), 0));
        terminals_.assign(n + 1, 0);
        for (std::size_t i = n; i-- > 0;) {
            occ_[i] = occ_[i + 1];
            terminals_[i] = terminals_[i + 1];
            if (p[i].is_variable()) {
                ++occ_[i][slot_of_[p[i].var()]];
            } else {
                ++terminals_[i];
            }
        }
    }

    bool solve() { return step(0, 0); }

    WordSubstitution witness() const {
        WordSubstitution h;
        for (std::size_t s = 0; s < binding_.size(); ++s) {
            const Binding& b = binding_[s];
            h.images.emplace(var_of_slot_[s], Word(word_.begin() + b.start, word_.begin() + b.start + b.length));
        }
        return h;
    }

  private:
    struct Binding {
        std::size_t start = 0;
        std::size_t length = 0;  // 0 = unbound
    };

    bool step(std::size_t i, std::size_t j) {
        const std::size_t n = pattern_.size();
        if (i == n) return j == word_.size();

        std::size_t need = terminals_[i];
        bool open = false;
        for (std::size_t s = 0; s < binding_.size(); ++s) {
            if (occ_[i][s] == 0) continue;
            if (binding_[s].length == 0) {
                open = true;
                need += occ_[i][s];
            } else {
                need += occ_[i][s] * binding_[s].length;
            }
        }
        const std::size_t remaining = word_.size() - j;
        if (need > remaining || (!open && need != remaining)) return false;

        auto key = memo_key(i, j);
        if (failed_.count(key) != 0) return false;

        bool ok = false;
        const Item& it = pattern_[i];
        if (it.is_terminal()) {
            ok = word_[j] == it.symbol() && step(i + 1, j + 1);
        } else {
            const std::size_t s = slot_of_[it.var()];
            Binding& b = binding_[s];
            if (b.length != 0) {
                ok = std::equal(word_.begin() + b.start, word_.begin() + b.start + b.length, word_.begin() + j) &&
                     step(i + 1, j + b.length);
            } else {
                // Each extra symbol of this image is paid once per remaining occurrence.
                const std::size_t slack = remaining - need;
                const std::size_t max_len = 1 + slack / occ_[i][s];
                for (std::size_t len = 1; len <= max_len && !ok; ++len) {
                    b = Binding{j, len};
                    ok = step(i + 1, j + len);
                    if (!ok) b = Binding{};
                }
            }
        }
        if (!ok) failed_.insert(std::move(key));
        return ok;
    }

    // Failure at (i, j) depends only on the images of variables that still
    // occur in the suffix starting at i.
    std::vector<std::uint32_t> memo_key(std::size_t i, std::size_t j) const {
        std::vector<std::uint32_t> key{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)};
        for (std::size_t s = 0; s < binding_.size(); ++s) {
            if (occ_[i][s] == 0 || binding_[s].length == 0) continue;
            key.push_back(static_cast<std::uint32_t>(s));
            key.push_back(static_cast<std::uint32_t>(binding_[s].length));
            for (std::size_t k = 0; k < binding_[s].length; ++k) key.push_back(word_[binding_[s].start + k]);
        }
        return key;
    }

    WordView word_;
    const Pattern& pattern_;
    std::vector<std::size_t> slot_of_;
    std::vector<std::uint32_t> var_of_slot_;
    std::vector<Binding> binding_;
    std::vector<std::vector<std::uint32_t>> occ_;
    std::vector<std::size_t> terminals_;
    std::unordered_set<std::vector<std::uint32_t>, KeyHash> failed_;
};

}  // namespace

MatchResult member(WordView w, const Pattern& p) {
    if (w.size() < p.size()) return {};
    AngluinMatcher m(w, p);
    if (!m.solve()) return {};
    return MatchResult{true, m.witness()};
}

bool sample_subset(const Sample& s, const Pattern& p) {
    return std::all_of(s.words().begin(), s.words().end(), [&](const Word& w) { return member(w, p).matched; });
}

}  // namespace descpat
