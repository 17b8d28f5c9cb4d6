// Copyright 2026 gbit-toolbox authors
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

#include "gbit/types.hpp"

#include <algorithm>

namespace gbit {

std::int64_t SystemKind::complete_set_size() const {
  if (kind == GbitKind::Qubit) {
    return (std::int64_t(1) << (2 * n)) - 1;  // 4^n - 1
  }
  const std::int64_t two_n = std::int64_t(1) << n;
  return (two_n / 2) * (two_n + 1) - 1;  // 2^(n-1) (2^n + 1) - 1
}

std::string to_string(GbitKind kind) {
  return kind == GbitKind::Qubit ? "qubit" : "rebit";
}

GbitKind kind_from_string(const std::string& s) {
  if (s == "qubit") return GbitKind::Qubit;
  if (s == "rebit") return GbitKind::Rebit;
  throw Error("unknown gbit kind: '" + s + "' (expected qubit or rebit)");
}

namespace {

void check_entries(const std::vector<std::uint8_t>& idx) {
  if (idx.empty()) throw Error("QuestionIndex: empty index tuple");
  bool all_zero = true;
  for (auto v : idx) {
    if (v > 3) throw Error("QuestionIndex: entries must be in {0,1,2,3}");
    if (v != 0) all_zero = false;
  }
  if (all_zero) throw Error("QuestionIndex: all-zero tuple names no question");
}

}  // namespace

QuestionIndex::QuestionIndex(std::vector<std::uint8_t> indices) : idx_(std::move(indices)) {
  check_entries(idx_);
}

QuestionIndex::QuestionIndex(std::initializer_list<int> indices) {
  idx_.reserve(indices.size());
  for (int v : indices) {
    if (v < 0 || v > 3) throw Error("QuestionIndex: entries must be in {0,1,2,3}");
    idx_.push_back(static_cast<std::uint8_t>(v));
  }
  check_entries(idx_);
}

QuestionIndex QuestionIndex::parse(const std::string& digits) {
  std::vector<std::uint8_t> idx;
  idx.reserve(digits.size());
  for (char c : digits) {
    if (c < '0' || c > '3') {
      throw Error("QuestionIndex: bad digit '" + std::string(1, c) + "' in \"" + digits + "\"");
    }
    idx.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return QuestionIndex(std::move(idx));
}

int QuestionIndex::weight() const {
  return static_cast<int>(std::count_if(idx_.begin(), idx_.end(),
                                        [](std::uint8_t v) { return v != 0; }));
}

int QuestionIndex::count_threes() const {
  return static_cast<int>(std::count(idx_.begin(), idx_.end(), std::uint8_t(3)));
}

bool QuestionIndex::is_valid_for(const SystemKind& sys) const {
  if (n() != sys.n) return false;
  if (sys.kind == GbitKind::Rebit && count_threes() % 2 != 0) return false;
  return true;
}

void QuestionIndex::require_valid_for(const SystemKind& sys) const {
  if (n() != sys.n) {
    throw Error("question " + str() + " has " + std::to_string(n()) +
                " sites, system has " + std::to_string(sys.n));
  }
  if (!is_valid_for(sys)) {
    throw Error("question " + str() + " is not a rebit question (odd number of 3-indices)");
  }
}

std::string QuestionIndex::str() const {
  std::string s;
  s.reserve(idx_.size());
  for (auto v : idx_) s.push_back(static_cast<char>('0' + v));
  return s;
}

SignedQuestion SignedQuestion::parse(const std::string& text) {
  if (!text.empty() && text[0] == '!') {
    return SignedQuestion(QuestionIndex::parse(text.substr(1)), -1);
  }
  return SignedQuestion(QuestionIndex::parse(text), +1);
}

std::string SignedQuestion::str() const {
  return sign < 0 ? "!" + index.str() : index.str();
}

}  // namespace gbit
