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

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gbit {

/// Base class for all errors thrown by this library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Thrown when a logical connective of two complementary questions is
/// requested. Complementary questions have no joint truth table, so their
/// composition is undefined.
struct CompositionUndefined : Error {
  explicit CompositionUndefined(const std::string& msg) : Error(msg) {}
};

/// Thrown when a probability catalogue violates its invariants (e.g. an
/// information content above the n-gbit maximum).
struct InvalidStateError : Error {
  explicit InvalidStateError(const std::string& msg) : Error(msg) {}
};

enum class GbitKind { Qubit, Rebit };

/// A system of `n` generalized bits, each one a two-level system over either
/// a complex (qubit) or real (rebit) Hilbert space. A single qubit supports
/// three mutually complementary individual questions, a single rebit two.
struct SystemKind {
  GbitKind kind = GbitKind::Qubit;
  int n = 1;

  SystemKind() = default;
  SystemKind(GbitKind k, int num_gbits) : kind(k), n(num_gbits) {
    if (n < 1) throw Error("SystemKind: n must be >= 1");
  }

  /// Number of complementary individual questions of one gbit: 3 or 2.
  int d1() const { return kind == GbitKind::Qubit ? 3 : 2; }

  /// Size of the informationally complete question set:
  /// 4^n - 1 for qubits, 2^(n-1) (2^n + 1) - 1 for rebits.
  std::int64_t complete_set_size() const;

  /// Hilbert space dimension 2^n.
  std::int64_t dim() const { return std::int64_t(1) << n; }

  friend bool operator==(const SystemKind& a, const SystemKind& b) {
    return a.kind == b.kind && a.n == b.n;
  }
};

std::string to_string(GbitKind kind);
GbitKind kind_from_string(const std::string& s);

/// Names one question of the informationally complete set by a tuple of
/// per-gbit indices in {0,1,2,3}. Index 0 means the gbit does not take part
/// in the correlation; the all-zero tuple names no question and is rejected.
class QuestionIndex {
 public:
  QuestionIndex() = default;
  explicit QuestionIndex(std::vector<std::uint8_t> indices);
  QuestionIndex(std::initializer_list<int> indices);

  /// Parses a digit string such as "102" for the n=3 question with index 1
  /// on the first gbit and 2 on the third.
  static QuestionIndex parse(const std::string& digits);

  const std::vector<std::uint8_t>& indices() const { return idx_; }
  int n() const { return static_cast<int>(idx_.size()); }
  std::uint8_t operator[](int site) const { return idx_[site]; }

  /// Number of non-zero entries (the "partiteness" of the question).
  int weight() const;

  /// Number of entries equal to 3; rebit-valid questions have an even count.
  int count_threes() const;

  /// True when the tuple is a legal member of the complete set for `sys`:
  /// matching length and, for rebits, an even number of 3-indices.
  bool is_valid_for(const SystemKind& sys) const;

  /// Throws Error when !is_valid_for(sys).
  void require_valid_for(const SystemKind& sys) const;

  std::string str() const;

  friend bool operator==(const QuestionIndex& a, const QuestionIndex& b) {
    return a.idx_ == b.idx_;
  }
  friend bool operator!=(const QuestionIndex& a, const QuestionIndex& b) {
    return !(a == b);
  }
  // Lexicographic order on the index tuple; the canonical set ordering.
  friend bool operator<(const QuestionIndex& a, const QuestionIndex& b) {
    return a.idx_ < b.idx_;
  }

 private:
  std::vector<std::uint8_t> idx_;
};

/// A question or its negation: sign -1 stands for "not Q".
struct SignedQuestion {
  QuestionIndex index;
  int sign = +1;

  SignedQuestion() = default;
  SignedQuestion(QuestionIndex q, int s) : index(std::move(q)), sign(s) {
    if (sign != 1 && sign != -1) throw Error("SignedQuestion: sign must be +1 or -1");
  }

  /// Parses an optional '!' prefix followed by a digit string, e.g. "!102".
  static SignedQuestion parse(const std::string& text);

  SignedQuestion negated() const { return SignedQuestion(index, -sign); }
  std::string str() const;

  friend bool operator==(const SignedQuestion& a, const SignedQuestion& b) {
    return a.sign == b.sign && a.index == b.index;
  }
  friend bool operator<(const SignedQuestion& a, const SignedQuestion& b) {
    if (a.index != b.index) return a.index < b.index;
    return a.sign > b.sign;  // +1 before -1
  }
};

/// An ordered set of distinct questions for one system, lexicographic on the
/// index tuples.
struct QuestionSet {
  SystemKind kind;
  std::vector<QuestionIndex> members;

  std::int64_t size() const { return static_cast<std::int64_t>(members.size()); }
};

}  // namespace gbit
