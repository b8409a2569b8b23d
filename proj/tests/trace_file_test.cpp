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
#include "descpat/trace_file.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

using namespace descpat;

TEST(TraceFile, TokensWithInferredAlphabet) {
    const Sample s = parse_traces("login read logout\n\n# comment\n  login logout\n", TraceSyntax::Tokens);
    EXPECT_EQ(s.alphabet().tokens(), (std::vector<std::string>{"login", "logout", "read"}));
    ASSERT_EQ(s.size(), 2u);
    EXPECT_EQ(s.words()[0], (Word{0, 2, 1}));
    EXPECT_EQ(s.words()[1], (Word{0, 1}));
}

TEST(TraceFile, HeaderFixesOrder) {
    const Sample s = parse_traces("#alphabet: c b a\nabc\ncab\n", TraceSyntax::Chars);
    EXPECT_EQ(s.alphabet().tokens(), (std::vector<std::string>{"c", "b", "a"}));
    EXPECT_EQ(s.words()[0], (Word{2, 1, 0}));
    EXPECT_THROW(parse_traces("#alphabet: a b\nabc\n", TraceSyntax::Chars), ParseError);
    EXPECT_THROW(parse_traces("#alphabet:\nab\n", TraceSyntax::Chars), ParseError);
    EXPECT_THROW(parse_traces("#alphabet: a\n#alphabet: a\na\n", TraceSyntax::Chars), ParseError);
}

TEST(TraceFile, ExtraTokensJoinInferredAlphabet) {
    const Sample s = parse_traces("ab\n", TraceSyntax::Chars, {"c"});
    EXPECT_EQ(s.alphabet().size(), 3u);
    const Sample declared = parse_traces("#alphabet: b a\nab\n", TraceSyntax::Chars, {"c"});
    EXPECT_EQ(declared.alphabet().size(), 2u);
}

TEST(TraceFile, Errors) {
    EXPECT_THROW(parse_traces("", TraceSyntax::Tokens), ParseError);
    EXPECT_THROW(parse_traces("# nothing\n\n", TraceSyntax::Tokens), ParseError);
    EXPECT_THROW(parse_traces("a $1\n", TraceSyntax::Tokens), ParseError);
    EXPECT_THROW(read_trace_file("/nonexistent/traces.txt", TraceSyntax::Tokens), ParseError);
}

TEST(TraceFile, ReadsFromDisk) {
    const auto path = std::filesystem::temp_directory_path() / "descpat_trace_file_test.txt";
    {
        std::ofstream out(path);
        out << "abc\r\nacb\n";
    }
    const Sample s = read_trace_file(path.string(), TraceSyntax::Chars);
    EXPECT_EQ(s.size(), 2u);
    EXPECT_EQ(s.alphabet().size(), 3u);
    std::filesystem::remove(path);
}
