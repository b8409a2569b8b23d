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

#include "descpat/discovery.hpp"

#include "descpat/angluin_match.hpp"
#include "descpat/subseq_match.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <random>

namespace descpat {

std::vector<std::size_t> Strategy::visit_order(std::size_t length) const {
    std::vector<std::size_t> order(length);
    std::iota(order.begin(), order.end(), std::size_t{0});
    switch (position_order) {
        case PositionOrder::LeftToRight:
            break;
        case PositionOrder::RightToLeft:
            std::reverse(order.begin(), order.end());
            break;
        case PositionOrder::SeededRandom: {
            if (!seed) {
                throw ConfigError("seeded random position order needs an explicit seed");
            }
            // Hand-rolled Fisher-Yates: std::shuffle and the standard
            // distributions are not specified bit-exactly across libraries.
            std::mt19937_64 rng(*seed);
            for (std::size_t i = length; i > 1; --i) {
                std::swap(order[i - 1], order[rng() % i]);
            }
            break;
        }
    }
    return order;
}

std::string Strategy::order_str() const {
    switch (position_order) {
        case PositionOrder::LeftToRight: return "l2r";
        case PositionOrder::RightToLeft: return "r2l";
        case PositionOrder::SeededRandom: return "random:" + (seed ? std::to_string(*seed) : std::string("?"));
    }
    return {};
}

std::string Strategy::candidates_str() const {
    return candidate_order == CandidateOrder::TerminalsThenVars ? "terms-first" : "vars-first";
}

PositionOrder parse_position_order(std::string_view text, std::optional<std::uint64_t>& seed) {
    if (text == "l2r") return PositionOrder::LeftToRight;
    if (text == "r2l") return PositionOrder::RightToLeft;
    constexpr std::string_view prefix = "random:";
    if (text.substr(0, prefix.size()) == prefix) {
        std::string_view digits = text.substr(prefix.size());
        std::uint64_t value = 0;
        auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
        if (!digits.empty() && ec == std::errc() && end == digits.data() + digits.size()) {
            seed = value;
            return PositionOrder::SeededRandom;
        }
    }
    throw ParseError("unknown position order '" + std::string(text) + "' (expected l2r, r2l, random:SEED)");
}

CandidateOrder parse_candidate_order(std::string_view text) {
    if (text == "terms-first") return CandidateOrder::TerminalsThenVars;
    if (text == "vars-first") return CandidateOrder::VarsThenTerminals;
    throw ParseError("unknown candidate order '" + std::string(text) + "' (expected terms-first, vars-first)");
}

namespace {

bool holds_variable(const std::vector<std::uint32_t>& vars, std::uint32_t v) {
    return std::find(vars.begin(), vars.end(), v) != vars.end();
}

SupportValue classic_support(const Sample& s, const Pattern& p) {
    const auto hits =
        std::count_if(s.words().begin(), s.words().end(), [&](const Word& w) { return member(w, p).matched; });
    return SupportValue(static_cast<std::uint64_t>(hits), s.size());
}

}  // namespace

ClassicResult shinohara_classic(const Sample& s, const PatternClass& cls) {
    const Word& shortest = s.shortest();
    Pattern current = Pattern::all_variables(shortest.size());
    if (!in_class(current, cls)) {
        throw ConfigError("the all-variables pattern of length " + std::to_string(shortest.size()) +
                          " is not in class " + cls.str());
    }
    const SupportValue full(s.size(), s.size());

    RefinementTrace trace;
    trace.snapshots.push_back(current);
    std::vector<std::uint32_t> kept;

    for (std::size_t i = 0; i < shortest.size(); ++i) {
        RefinementStep step;
        step.position = i + 1;
        step.variable = current[i].var();
        step.support = full;

        std::vector<Item> candidates{Item::terminal(shortest[i])};
        for (std::uint32_t v : kept) candidates.push_back(Item::variable(v));

        for (const Item& c : candidates) {
            Pattern refined = current.replace(*step.variable, c);
            CandidateAttempt attempt{c, in_class(refined, cls), std::nullopt};
            if (attempt.in_class) attempt.support = classic_support(s, refined);
            step.attempts.push_back(attempt);
            if (attempt.in_class && *attempt.support == full) {
                step.outcome = StepOutcome::Accepted;
                step.accepted = c;
                current = std::move(refined);
                break;
            }
        }
        if (step.outcome != StepOutcome::Accepted) {
            step.outcome = StepOutcome::KeptVariable;
            kept.push_back(*step.variable);
        }
        trace.steps.push_back(std::move(step));
        trace.snapshots.push_back(current);
    }
    return ClassicResult{std::move(current), std::move(trace)};
}

DiscoveryResult discover_subseq(const Sample& s, const DiscoveryConfig& cfg) {
    if (cfg.length == 0) {
        throw ConfigError("pattern length must be positive");
    }
    if (cfg.constraints.size() + 1 != cfg.length) {
        throw ConfigError("length " + std::to_string(cfg.length) + " needs " + std::to_string(cfg.length - 1) +
                          " gap bounds, got " + std::to_string(cfg.constraints.size()));
    }
    check_threshold(cfg.threshold);

    Pattern current = Pattern::all_variables(cfg.length);
    if (cfg.start) {
        if (cfg.start->size() != cfg.length || cfg.start->constraints() != cfg.constraints) {
            throw ConfigError("start pattern must have the configured length and gap constraints");
        }
        check_alphabet(cfg.start->pattern(), s.alphabet());
        current = cfg.start->pattern();
    }
    if (!in_class(current, cfg.pattern_class)) {
        throw ConfigError("starting pattern is not in class " + cfg.pattern_class.str());
    }
    const auto support_of = [&](const Pattern& p) { return support(s, ConstrainedPattern(p, cfg.constraints)); };
    SupportValue current_support = support_of(current);
    if (current_support < cfg.threshold) {
        throw ThresholdError("starting pattern has support " + current_support.str() + ", below threshold " +
                                 cfg.threshold.str(),
                             current_support);
    }

    RefinementTrace trace;
    trace.snapshots.push_back(current);
    std::vector<std::uint32_t> kept;

    for (std::size_t pos : cfg.strategy.visit_order(cfg.length)) {
        RefinementStep step;
        step.position = pos + 1;
        step.support = current_support;
        const Item here = current[pos];
        if (here.is_variable()) step.variable = here.var();

        if (here.is_terminal() || holds_variable(kept, here.var())) {
            step.outcome = StepOutcome::Skipped;
        } else {
            std::vector<Item> candidates;
            const auto add_terminals = [&] {
                for (Symbol a = 0; a < s.alphabet().size(); ++a) candidates.push_back(Item::terminal(a));
            };
            const auto add_variables = [&] {
                for (std::uint32_t v : kept) candidates.push_back(Item::variable(v));
            };
            if (cfg.strategy.candidate_order == CandidateOrder::TerminalsThenVars) {
                add_terminals();
                add_variables();
            } else {
                add_variables();
                add_terminals();
            }

            for (const Item& c : candidates) {
                Pattern refined = current.replace(here.var(), c);
                CandidateAttempt attempt{c, in_class(refined, cfg.pattern_class), std::nullopt};
                if (attempt.in_class) attempt.support = support_of(refined);
                step.attempts.push_back(attempt);
                if (attempt.in_class && *attempt.support >= cfg.threshold) {
                    step.outcome = StepOutcome::Accepted;
                    step.accepted = c;
                    step.support = *attempt.support;
                    current = std::move(refined);
                    current_support = step.support;
                    break;
                }
            }
            if (step.outcome != StepOutcome::Accepted) {
                step.outcome = StepOutcome::KeptVariable;
                kept.push_back(here.var());
            }
        }
        trace.steps.push_back(std::move(step));
        trace.snapshots.push_back(current);
    }
    return DiscoveryResult{ConstrainedPattern(std::move(current), cfg.constraints), std::move(trace)};
}

DescriptivenessCheck check_descriptive(const ConstrainedPattern& cp, const Sample& s, const DiscoveryConfig& cfg) {
    DiscoveryConfig run = cfg;
    run.start = cp;
    DiscoveryResult result = discover_subseq(s, run);
    const bool same = canonicalize(result.pattern.pattern()) == canonicalize(cp.pattern());
    return DescriptivenessCheck{same, std::move(result)};
}

bool is_descriptive(const ConstrainedPattern& cp, const Sample& s, const DiscoveryConfig& cfg) {
    return check_descriptive(cp, s, cfg).descriptive;
}

}  // namespace descpat
