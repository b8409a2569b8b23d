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

// Trace files: one trace per line, whitespace-separated event tokens (or one
// symbol per character in chars mode). Blank lines and `#` comments are
// ignored, except an optional `#alphabet: tok tok ...` header which fixes the
// alphabet and its order. Without a header the alphabet is the sorted union
// of all symbols seen.

#include "descpat/pattern.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace descpat {

enum class TraceSyntax { Tokens, Chars };

struct TraceText {
    std::vector<std::string> declared_alphabet;  // empty without a header
    std::vector<std::vector<std::string>> traces;
};

/// Lexing only; no alphabet checks.
TraceText lex_traces(std::string_view text, TraceSyntax syntax);

/// Builds a Sample. `extra_tokens` join an inferred alphabet (ignored when a
/// header is present). Throws ParseError on symbols outside a declared alphabet.
Sample parse_traces(std::string_view text, TraceSyntax syntax, const std::vector<std::string>& extra_tokens = {});

Sample read_trace_file(const std::string& path, TraceSyntax syntax, const std::vector<std::string>& extra_tokens = {});

/// Sorted union of the tokens, deduplicated.
Alphabet infer_alphabet(const std::vector<std::vector<std::string>>& traces,
                        const std::vector<std::string>& extra_tokens = {});

}  // namespace descpat
