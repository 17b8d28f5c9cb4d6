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

#include <optional>
#include <variant>
#include <vector>

#include "gbit/types.hpp"

namespace gbit {

/// Number of non-zero entries of the index tuple.
inline int weight(const QuestionIndex& q) { return q.weight(); }

/// Two questions are compatible iff they differ on an even number (possibly
/// zero) of sites where both carry a non-zero index. Compatible questions can
/// be answered simultaneously; the rule is equivalent to commutation of the
/// corresponding operator representations.
bool is_compatible(const QuestionIndex& q1, const QuestionIndex& q2);

/// Distinct and not compatible.
bool is_complementary(const QuestionIndex& q1, const QuestionIndex& q2);

/// All pairs compatible. Pairwise compatibility of pairwise independent
/// questions already implies mutual compatibility, so no further check is
/// needed; the oracle's simultaneous-diagonalizability test cross-validates
/// this.
bool is_mutually_compatible(const std::vector<QuestionIndex>& qs);

/// Outcome of composing a signed question with (a signed version of) itself:
/// the always-true or always-false sentence. Not a QuestionIndex.
enum class Truth { Always, Never };

/// Result of an XNOR composition: either a signed question or a tautology.
using XnorResult = std::variant<SignedQuestion, Truth>;

inline bool is_tautology(const XnorResult& r) { return std::holds_alternative<Truth>(r); }
inline const SignedQuestion& as_question(const XnorResult& r) { return std::get<SignedQuestion>(r); }

/// Composes two compatible signed questions with the logical biconditional
/// (XNOR, "are the answers the same?"). The result index is computed per
/// site: equal entries cancel to 0, a 0 passes the other entry through, and
/// two distinct non-zero entries i, j produce the third value 6-i-j. The
/// result sign is s1*s2*epsilon(q1,q2) where the structural parity epsilon is
/// the exact +-1 phase of the single-site operator products, accumulated as a
/// power of i. Composing a question with itself yields Truth.
///
/// Throws CompositionUndefined for complementary inputs and Error for
/// mismatched systems.
XnorResult xnor_compose(const SystemKind& sys, const SignedQuestion& s1,
                        const SignedQuestion& s2);

/// The structural parity epsilon(q1,q2) in {+1,-1} for a compatible pair,
/// tracked as an exact power of i per site. Matches the sign of the matrix
/// product of the two question operators relative to the composed operator.
int composition_parity(const SystemKind& sys, const QuestionIndex& q1,
                       const QuestionIndex& q2);

/// Index part of the composition (no sign); Truth collapses to nullopt.
std::optional<QuestionIndex> compose_index(const QuestionIndex& q1, const QuestionIndex& q2);

/// The lexicographically ordered informationally complete set: all valid
/// index tuples for the system. Sizes: 4^n - 1 (qubit),
/// 2^(n-1) (2^n + 1) - 1 (rebit).
QuestionSet enumerate_complete_set(const SystemKind& sys);

/// Position of `q` in enumerate_complete_set(sys), used to address Bloch
/// vector components. O(n) arithmetic, no enumeration.
std::int64_t complete_set_position(const SystemKind& sys, const QuestionIndex& q);

/// Closure of pairwise compatible generators under xnor_compose, excluding
/// the tautology sentinel. For k independent generators the closure is a
/// group with 2^k - 1 question members. Sorted by index.
///
/// Throws CompositionUndefined for incompatible generators; Error when the
/// generators force contradictory signs on one index.
std::vector<SignedQuestion> logical_closure(const SystemKind& sys,
                                            const std::vector<SignedQuestion>& gens);

}  // namespace gbit
