// Copyright 2026 The twalg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cctype>

#include "twalg/cli.hpp"

namespace twalg {
namespace {

// Recursive-descent parser over the spec text with whitespace removed.
class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : original_(text) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) text_.push_back(c);
    }
  }

  std::vector<int> Parse() {
    if (text_.empty()) Fail("empty spec");
    std::vector<int> factors;
    ParseFactor(factors);
    while (pos_ < text_.size()) {
      Expect("wr");
      ParseFactor(factors);
    }
    return factors;
  }

 private:
  void ParseFactor(std::vector<int>& factors) {
    Expect("K");
    Expect("(");
    const long n = ParseInteger();
    if (n < 2) Fail("factor K(" + std::to_string(n) + ") needs n >= 2");
    Expect(")");
    long power = 1;
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      power = ParseInteger();
      if (power < 1) Fail("exponent must be at least 1");
    }
    if (factors.size() + power > kMaxFactors) Fail("too many factors");
    factors.insert(factors.end(), static_cast<std::size_t>(power), static_cast<int>(n));
  }

  long ParseInteger() {
    const std::size_t start = pos_;
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > kMaxInteger) Fail("integer too large");
      ++pos_;
    }
    if (pos_ == start) Fail("expected an integer");
    return v;
  }

  void Expect(std::string_view token) {
    if (text_.compare(pos_, token.size(), token) != 0) {
      Fail("expected '" + std::string(token) + "'");
    }
    pos_ += token.size();
  }

  [[noreturn]] void Fail(const std::string& what) const {
    throw ParseError("spec \"" + std::string(original_) + "\": " + what + " at offset " +
                     std::to_string(pos_));
  }

  static constexpr long kMaxInteger = 1'000'000'000;
  static constexpr std::size_t kMaxFactors = 64;

  std::string_view original_;
  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

SchemeSpec parse_spec(std::string_view text) {
  return SchemeSpec(SpecParser(text).Parse());
}

}  // namespace twalg
