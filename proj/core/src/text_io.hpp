// Copyright 2026 The zxsynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Whitespace-separated numeric text with line tracking, shared by the state
// and matrix file readers.

#pragma once

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "zxsynth/numerics.hpp"

namespace zxsynth::detail {

struct Token {
  std::string text;
  int line;
};

inline std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  std::istringstream in(text);
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) out.push_back({tok, no});
  }
  return out;
}

[[noreturn]] inline void fail(const char* what, int line, const std::string& msg) {
  std::ostringstream os;
  os << what << ": line " << line << ": " << msg;
  throw Error(ErrorKind::ParseError, os.str());
}

class TokenReader {
 public:
  TokenReader(const std::string& text, const char* what) : tokens_(tokenize(text)), what_(what) {}

  bool done() const { return pos_ >= tokens_.size(); }
  int line() const { return done() ? (tokens_.empty() ? 1 : tokens_.back().line) : tokens_[pos_].line; }

  double real() {
    if (done()) fail(what_, line(), "unexpected end of input");
    const Token& t = tokens_[pos_++];
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(t.text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != t.text.size() || !std::isfinite(v)) fail(what_, t.line, "bad number '" + t.text + "'");
    return v;
  }

  long long integer() {
    if (done()) fail(what_, line(), "unexpected end of input");
    const Token& t = tokens_[pos_++];
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(t.text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != t.text.size()) fail(what_, t.line, "bad integer '" + t.text + "'");
    return v;
  }

  cplx complex() {
    const double re = real();
    const double im = real();
    return {re, im};
  }

  void expect_end() {
    if (!done()) fail(what_, tokens_[pos_].line, "trailing data '" + tokens_[pos_].text + "'");
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const char* what_;
};

inline std::string format_complex(cplx z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g %.17g", z.real(), z.imag());
  return buf;
}

}  // namespace zxsynth::detail
