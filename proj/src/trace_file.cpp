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

#include "descpat/trace_file.hpp"

#include "descpat/error.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace descpat {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::vector<std::string> split_tokens(std::string_view line) {
    std::vector<std::string> out;
    std::istringstream in{std::string(line)};
    for (std::string tok; in >> tok;) out.push_back(tok);
    return out;
}

std::vector<std::string> split_chars(std::string_view line) {
    std::vector<std::string> out;
    for (char c : line) {
        if (!is_space(c)) out.emplace_back(1, c);
    }
    return out;
}

std::string_view trim_left(std::string_view s) {
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    return s;
}

}  // namespace

TraceText lex_traces(std::string_view text, TraceSyntax syntax) {
    TraceText out;
    bool have_header = false;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = trim_left(text.substr(start, nl - start));
        start = nl + 1;
        ++line_no;
        if (line.empty()) continue;
        if (line.front() == '#') {
            constexpr std::string_view header = "#alphabet:";
            if (line.substr(0, header.size()) == header) {
                if (have_header) {
                    throw ParseError("line " + std::to_string(line_no) + ": duplicate #alphabet header");
                }
                have_header = true;
                out.declared_alphabet = split_tokens(line.substr(header.size()));
                if (out.declared_alphabet.empty()) {
                    throw ParseError("line " + std::to_string(line_no) + ": empty #alphabet header");
                }
            }
            continue;
        }
        auto symbols = syntax == TraceSyntax::Chars ? split_chars(line) : split_tokens(line);
        if (!symbols.empty()) out.traces.push_back(std::move(symbols));
    }
    return out;
}

Alphabet infer_alphabet(const std::vector<std::vector<std::string>>& traces,
                        const std::vector<std::string>& extra_tokens) {
    std::set<std::string> tokens(extra_tokens.begin(), extra_tokens.end());
    for (const auto& t : traces) tokens.insert(t.begin(), t.end());
    return Alphabet(std::vector<std::string>(tokens.begin(), tokens.end()));
}

Sample parse_traces(std::string_view text, TraceSyntax syntax, const std::vector<std::string>& extra_tokens) {
    TraceText lexed = lex_traces(text, syntax);
    if (lexed.traces.empty()) {
        throw ParseError("trace input contains no traces");
    }
    Alphabet alphabet = [&] {
        try {
            return lexed.declared_alphabet.empty() ? infer_alphabet(lexed.traces, extra_tokens)
                                                   : Alphabet(lexed.declared_alphabet);
        } catch (const ConfigError& e) {
            throw ParseError(std::string("bad alphabet: ") + e.what());
        }
    }();
    std::vector<Word> words;
    words.reserve(lexed.traces.size());
    for (std::size_t i = 0; i < lexed.traces.size(); ++i) {
        Word w;
        for (const std::string& tok : lexed.traces[i]) {
            auto sym = alphabet.find(tok);
            if (!sym) {
                throw ParseError("trace " + std::to_string(i + 1) + ": symbol '" + tok + "' not in the declared alphabet");
            }
            w.push_back(*sym);
        }
        words.push_back(std::move(w));
    }
    return Sample(std::move(words), std::move(alphabet));
}

Sample read_trace_file(const std::string& path, TraceSyntax syntax, const std::vector<std::string>& extra_tokens) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open trace file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_traces(buf.str(), syntax, extra_tokens);
}

}  // namespace descpat
