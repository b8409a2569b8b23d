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

#include "descpat/inclusion.hpp"

#include "descpat/error.hpp"

namespace descpat {

namespace {

void require_same_length(const Pattern& a, const Pattern& b) {
    if (a.size() != b.size()) {
        throw ConfigError("inclusion is only decided for patterns of equal length (" + std::to_string(a.size()) +
                          " vs " + std::to_string(b.size()) + ")");
    }
}

void require_same_constraints(const ConstrainedPattern& a, const ConstrainedPattern& b) {
    require_same_length(a.pattern(), b.pattern());
    if (a.constraints() != b.constraints()) {
        throw ConfigError("inclusion is only decided for identical gap constraints");
    }
}

}  // namespace

std::optional<PatternSubstitution> find_substitution(const Pattern& source, const Pattern& target) {
    require_same_length(source, target);
    PatternSubstitution h;
    for (std::size_t i = 0; i < source.size(); ++i) {
        const Item& from = source[i];
        const Item& to = target[i];
        if (from.is_terminal()) {
            if (from != to) return std::nullopt;
            continue;
        }
        auto [it, fresh] = h.images.emplace(from.var(), to);
        if (!fresh && it->second != to) return std::nullopt;
    }
    return h;
}

bool included(const Pattern& a, const Pattern& b) { return find_substitution(b, a).has_value(); }

bool strictly_included(const Pattern& a, const Pattern& b) { return included(a, b) && !included(b, a); }

bool equivalent(const Pattern& a, const Pattern& b) { return included(a, b) && included(b, a); }

bool included_subseq(const ConstrainedPattern& a, const ConstrainedPattern& b) {
    require_same_constraints(a, b);
    return included(a.pattern(), b.pattern());
}

bool strictly_included_subseq(const ConstrainedPattern& a, const ConstrainedPattern& b) {
    require_same_constraints(a, b);
    return strictly_included(a.pattern(), b.pattern());
}

bool equivalent_subseq(const ConstrainedPattern& a, const ConstrainedPattern& b) {
    require_same_constraints(a, b);
    return equivalent(a.pattern(), b.pattern());
}

}  // namespace descpat
