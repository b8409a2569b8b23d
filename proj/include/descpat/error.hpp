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

#include <stdexcept>
#include <string>

namespace descpat {

enum class ErrorKind {
    Parse,     // malformed text input or unreadable file
    Config,    // well-formed input that violates a contract
    SizeLimit  // oracle size guard exceeded
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

class ParseError : public Error {
  public:
    explicit ParseError(const std::string& what) : Error(ErrorKind::Parse, what) {}
};

class ConfigError : public Error {
  public:
    explicit ConfigError(const std::string& what) : Error(ErrorKind::Config, what) {}
};

class SizeLimitError : public Error {
  public:
    explicit SizeLimitError(const std::string& what) : Error(ErrorKind::SizeLimit, what) {}
};

}  // namespace descpat
