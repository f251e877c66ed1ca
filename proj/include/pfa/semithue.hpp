// Copyright 2026 The pfa-reductions Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Semi-Thue rewriting and the chain that turns an individual word problem
// into a GPCP over {a,b}, then a PCP over {a,b,[,],*}, then a PCP over {a,b}.

#ifndef PFA_SEMITHUE_HPP_
#define PFA_SEMITHUE_HPP_

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "pfa/pcp.hpp"

namespace pfa {

struct RewriteRule {
  std::string lhs;
  std::string rhs;
  friend bool operator==(const RewriteRule&, const RewriteRule&) = default;
};

struct SemiThueSystem {
  std::string alphabet;  // distinct symbols in declared order; '#' is reserved
  std::vector<RewriteRule> rules;

  // Throws InvalidInput on repeated or reserved symbols, or rule words
  // outside the alphabet.
  void validate() const;
  friend bool operator==(const SemiThueSystem&, const SemiThueSystem&) = default;
};

struct WordProblem {
  SemiThueSystem system;
  std::string source;
  std::string target;
};

// Every word reachable by rewriting one occurrence of some left side. A rule
// with an empty left side inserts its right side at every position.
std::set<std::string> one_step(const SemiThueSystem& system, std::string_view word);

struct DerivationResult {
  SearchStatus status = SearchStatus::closed;
  std::optional<std::vector<std::string>> derivation;  // source ... target
  std::size_t words_seen = 0;
};

// Shortest derivation with at most `depth` steps. `closed` means every
// reachable word was explored; `limit_reached` means the depth cut it off.
DerivationResult bounded_derives(const SemiThueSystem& system, std::string_view source,
                                 std::string_view target, std::size_t depth);

inline constexpr char kSeparator = '#';

// Codewords b a^(j+1) b: '#' gets bab, then the alphabet in declared order
// gets baab, baaab, ...
class SymbolCode {
 public:
  explicit SymbolCode(std::string_view alphabet);

  const std::string& symbols() const { return symbols_; }  // '#' first
  // Throws InvalidInput for an unknown symbol.
  std::string codeword(char symbol) const;
  std::string encode(std::string_view word) const;
  // Inverse of encode; nullopt if the word is not a concatenation of codewords.
  std::optional<std::string> decode(std::string_view binary) const;

 private:
  std::string symbols_;
};

struct CodeSplit {
  std::string before;  // v with <v> = x
  std::string after;   // w with <w> = y
};

// Given <u> = x <symbol> y, recovers v, w with <v> = x, <w> = y and
// u = v symbol w. Throws InvalidInput if x <symbol> y differs from <u>;
// nullopt means the decoding property failed.
std::optional<CodeSplit> check_code_substring(const SymbolCode& code, std::string_view u,
                                              std::string_view x, char symbol,
                                              std::string_view y);

// Pairs over {a,b}: start (<#>, <#source#>), end (<#target#>, <#>), one
// (<l>b, <r>b) per rule, then the copy pairs (a,a) and (b,b). The GPCP is
// solvable iff source derives target.
GpcpInstance gpcp_from_semithue(const SemiThueSystem& system, std::string_view target,
                                std::string_view source);

// "*" before (resp. after) every letter.
std::string star_before_each(std::string_view word);
std::string star_after_each(std::string_view word);

// Pairs over {a,b,[,],*}, declared in that order: ([s(v1), [s(w1)*),
// (*r(v2)], r(w2)]), (s(vi), r(wi)) for i >= 3, with s = star_before_each and
// r = star_after_each. Forced start 1, forced end 2. Throws InvalidInput on
// an empty word or letters other than a and b.
PcpInstance gpcp_to_pcp(const GpcpInstance& gpcp);

// Fixed-length code a->aaa, b->bbb, [->bba, ]->aba, *->bab. Throws
// InvalidInput unless the alphabet is exactly "ab[]*".
PcpInstance binarize_alphabet(const PcpInstance& instance);

struct Counterexample {
  PcpInstance instance;  // top = h, bottom = g
  IndexSequence witness;
};

// Three pairs built from phi(*) = aba, phi(u) = abba, phi(v) = abbba,
// phi(w) = abbbba, with a solution [2,1,3] that does not start with pair 1
// even though pair 2 has an empty bottom word.
Counterexample start_pair_counterexample();

}  // namespace pfa

#endif  // PFA_SEMITHUE_HPP_
