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

#include "descpat/error.hpp"
#include "descpat/inclusion.hpp"
#include "descpat/oracle.hpp"
#include "descpat/subseq_match.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace descpat;
using namespace descpat::testing;

TEST(FindSubstitution, Examples) {
    const auto collapse = find_substitution(P("$1 $2"), P("$1 $1"));
    ASSERT_TRUE(collapse);
    EXPECT_EQ(collapse->images.at(1), Item::variable(1));
    EXPECT_EQ(collapse->images.at(2), Item::variable(1));

    const auto inst = find_substitution(P("$1 a"), P("b a"));
    ASSERT_TRUE(inst);
    EXPECT_EQ(inst->images.at(1), Item::terminal(1));

    EXPECT_FALSE(find_substitution(P("a $1"), P("$1 a")));
    EXPECT_THROW(find_substitution(P("a"), P("a b")), ConfigError);
}

TEST(Included, ClassicalExamples) {
    EXPECT_TRUE(included(P("$1 $1"), P("$1 $2")));
    // ab is in L($1 $2) but not in L($1 $1), so the converse fails.
    ASSERT_TRUE(oracle::brute_member_angluin(W("ab"), P("$1 $2")));
    ASSERT_FALSE(oracle::brute_member_angluin(W("ab"), P("$1 $1")));
    EXPECT_FALSE(included(P("$1 $2"), P("$1 $1")));
    EXPECT_TRUE(included(P("a $1 b"), P("a $1 b")));
    EXPECT_THROW(included(P("a"), P("$1 $2")), ConfigError);
}

TEST(IncludedSubseq, Examples) {
    EXPECT_TRUE(included_subseq(CP("a b", "0-1"), CP("a $1", "0-1")));
    EXPECT_FALSE(included_subseq(CP("a $1", "0-1"), CP("a b", "0-1")));
    EXPECT_TRUE(included_subseq(CP("$1 $1", "1-2"), CP("$1 $2", "1-2")));
    EXPECT_FALSE(included_subseq(CP("$1 $2", "1-2"), CP("$1 $1", "1-2")));
    EXPECT_THROW(included_subseq(CP("a b", "0-1"), CP("a b", "0-2")), ConfigError);
    EXPECT_THROW(included_subseq(CP("a", ""), CP("a b", "0-2")), ConfigError);
}

TEST(IncludedSubseq, StrictnessConfirmedByWords) {
    // Some word up to length 6 separates $1 $2 from $1 $1 under each shared C.
    for (const char* gaps : {"0-0", "0-1", "1-2", "0-inf"}) {
        const ConstrainedPattern general = CP("$1 $2", gaps, ab());
        const ConstrainedPattern special = CP("$1 $1", gaps, ab());
        bool separated = false;
        for (const Word& w : all_words(6, 2)) {
            const bool in_special = oracle::brute_match_subseq(w, special);
            EXPECT_TRUE(!in_special || oracle::brute_match_subseq(w, general));
            separated = separated || (!in_special && oracle::brute_match_subseq(w, general));
        }
        EXPECT_TRUE(separated) << gaps;
        EXPECT_TRUE(strictly_included_subseq(special, general));
    }
}

TEST(Strictness, Examples) {
    EXPECT_TRUE(strictly_included_subseq(CP("a b", "0-2"), CP("$1 $2", "0-2")));
    EXPECT_TRUE(equivalent(P("$3 a $3 $1"), canonicalize(P("$3 a $3 $1"))));
    EXPECT_TRUE(equivalent(P("$1 $1"), P("$1 $1")));
    EXPECT_FALSE(strictly_included(P("$1 $1"), P("$1 $1")));
}

TEST(IncludedSubseq, SoundAgainstWordSweep) {
    // Whenever a substitution exists, every matched word of length <= 7 is matched by the more general one.
    const auto words = all_words(7, 2);
    const std::vector<const char*> bounds{"0-0", "0-1", "1-inf"};
    for (std::size_t len = 2; len <= 3; ++len) {
        const auto patterns = oracle::enumerate_patterns(len, ab(), PatternClass::all());
        for (const char* g1 : bounds) {
            for (const char* g2 : bounds) {
                const std::string gaps = len == 2 ? std::string(g1) : std::string(g1) + "," + g2;
                if (len == 2 && g2 != bounds.front()) continue;
                for (const Pattern& a : patterns) {
                    for (const Pattern& b : patterns) {
                        const ConstrainedPattern ca(a, parse_gaps(gaps));
                        const ConstrainedPattern cb(b, parse_gaps(gaps));
                        if (!included_subseq(ca, cb)) continue;
                        for (const Word& w : words) {
                            if (matches(w, ca)) {
                                ASSERT_TRUE(matches(w, cb));
                            }
                        }
                    }
                }
            }
        }
    }
}

TEST(Included, ReflexiveTransitiveAndEquivalenceIsCanonicalEquality) {
    std::vector<Pattern> patterns;
    for (std::size_t len = 1; len <= 3; ++len) {
        for (const Pattern& p : oracle::enumerate_patterns(len, ab(), PatternClass::all())) patterns.push_back(p);
    }
    // Add non-canonical renamings so equivalence is exercised beyond identity.
    const std::size_t canonical_count = patterns.size();
    for (std::size_t i = 0; i < canonical_count; ++i) {
        PatternSubstitution shift;
        for (auto v : patterns[i].variables()) shift.images.insert_or_assign(v, Item::variable(10 - v));
        patterns.push_back(shift.apply(patterns[i]));
    }
    for (const Pattern& a : patterns) {
        EXPECT_TRUE(included(a, a));
        for (const Pattern& b : patterns) {
            if (a.size() != b.size()) continue;
            EXPECT_EQ(equivalent(a, b), canonicalize(a) == canonicalize(b));
            if (auto h = find_substitution(b, a)) {
                EXPECT_EQ(h->apply(b), a);
            }
            if (!included(a, b)) continue;
            for (const Pattern& c : patterns) {
                if (c.size() == a.size() && included(b, c)) {
                    EXPECT_TRUE(included(a, c));
                }
            }
        }
    }
}
