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

#include "pfa/semithue.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <utility>

#include "pfa/error.hpp"

namespace pfa {
namespace {

void require_over(std::string_view word, std::string_view alphabet, const std::string& what) {
  for (char c : word) {
    if (alphabet.find(c) == std::string_view::npos) {
      throw InvalidInput(what + " uses symbol '" + std::string(1, c) +
                         "' outside the alphabet");
    }
  }
}

}  // namespace

void SemiThueSystem::validate() const {
  std::string sorted = alphabet;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidInput("alphabet \"" + alphabet + "\" repeats a symbol");
  }
  if (alphabet.find(kSeparator) != std::string::npos) {
    throw InvalidInput("'#' is reserved as the separator symbol");
  }
  for (std::size_t i = 0; i < rules.size(); ++i) {
    require_over(rules[i].lhs, alphabet, "rule " + std::to_string(i + 1));
    require_over(rules[i].rhs, alphabet, "rule " + std::to_string(i + 1));
  }
}

std::set<std::string> one_step(const SemiThueSystem& system, std::string_view word) {
  std::set<std::string> out;
  for (const auto& rule : system.rules) {
    const std::size_t n = rule.lhs.size();
    if (n > word.size()) continue;
    for (std::size_t pos = 0; pos + n <= word.size(); ++pos) {
      if (word.compare(pos, n, rule.lhs) != 0) continue;
      std::string next(word.substr(0, pos));
      next += rule.rhs;
      next += word.substr(pos + n);
      out.insert(std::move(next));
    }
  }
  return out;
}

DerivationResult bounded_derives(const SemiThueSystem& system, std::string_view source,
                                 std::string_view target, std::size_t depth) {
  DerivationResult result;
  std::map<std::string, std::string> parent;  // word -> predecessor
  std::deque<std::pair<std::string, std::size_t>> frontier;
  parent.emplace(std::string(source), std::string());
  frontier.emplace_back(std::string(source), 0);

  auto path_to = [&](const std::string& word) {
    std::vector<std::string> path{word};
    for (std::string w = word; w != source;) {
      w = parent.at(w);
      path.push_back(w);
    }
    std::reverse(path.begin(), path.end());
    return path;
  };

  bool cut = false;
  while (!frontier.empty()) {
    auto [word, d] = std::move(frontier.front());
    frontier.pop_front();
    if (word == target) {
      result.status = SearchStatus::found;
      result.derivation = path_to(word);
      result.words_seen = parent.size();
      return result;
    }
    const auto next = one_step(system, word);
    if (d == depth) {
      if (std::any_of(next.begin(), next.end(),
                      [&](const std::string& w) { return !parent.contains(w); })) {
        cut = true;
      }
      continue;
    }
    for (const auto& w : next) {
      if (parent.emplace(w, word).second) frontier.emplace_back(w, d + 1);
    }
  }
  result.status = cut ? SearchStatus::limit_reached : SearchStatus::closed;
  result.words_seen = parent.size();
  return result;
}

SymbolCode::SymbolCode(std::string_view alphabet)
    : symbols_(std::string(1, kSeparator) + std::string(alphabet)) {
  std::string sorted = symbols_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidInput("code alphabet \"" + std::string(alphabet) +
                       "\" repeats a symbol or uses '#'");
  }
}

std::string SymbolCode::codeword(char symbol) const {
  const auto j = symbols_.find(symbol);
  if (j == std::string::npos) {
    throw InvalidInput("symbol '" + std::string(1, symbol) + "' has no codeword");
  }
  return "b" + std::string(j + 1, 'a') + "b";
}

std::string SymbolCode::encode(std::string_view word) const {
  std::string out;
  for (char c : word) out += codeword(c);
  return out;
}

std::optional<std::string> SymbolCode::decode(std::string_view binary) const {
  std::string out;
  std::size_t pos = 0;
  while (pos < binary.size()) {
    if (binary[pos] != 'b') return std::nullopt;
    std::size_t as = 0;
    ++pos;
    while (pos < binary.size() && binary[pos] == 'a') {
      ++as;
      ++pos;
    }
    if (pos == binary.size() || binary[pos] != 'b' || as == 0 || as > symbols_.size()) {
      return std::nullopt;
    }
    ++pos;
    out += symbols_[as - 1];
  }
  return out;
}

std::optional<CodeSplit> check_code_substring(const SymbolCode& code, std::string_view u,
                                              std::string_view x, char symbol,
                                              std::string_view y) {
  const std::string encoded = code.encode(u);
  const std::string split = std::string(x) + code.codeword(symbol) + std::string(y);
  if (split != encoded) {
    throw InvalidInput("x <symbol> y does not spell the encoding of u");
  }
  auto v = code.decode(x);
  auto w = code.decode(y);
  if (!v || !w || *v + symbol + *w != u) return std::nullopt;
  return CodeSplit{std::move(*v), std::move(*w)};
}

GpcpInstance gpcp_from_semithue(const SemiThueSystem& system, std::string_view target,
                                std::string_view source) {
  system.validate();
  require_over(source, system.alphabet, "source word");
  require_over(target, system.alphabet, "target word");
  const SymbolCode code(system.alphabet);
  const std::string sep = code.codeword(kSeparator);

  GpcpInstance g;
  g.alphabet = "ab";
  g.pairs.push_back({sep, sep + code.encode(source) + sep});
  g.pairs.push_back({sep + code.encode(target) + sep, sep});
  for (const auto& rule : system.rules) {
    g.pairs.push_back({code.encode(rule.lhs) + "b", code.encode(rule.rhs) + "b"});
  }
  g.pairs.push_back({"a", "a"});
  g.pairs.push_back({"b", "b"});
  return g;
}

std::string star_before_each(std::string_view word) {
  std::string out;
  for (char c : word) {
    out += '*';
    out += c;
  }
  return out;
}

std::string star_after_each(std::string_view word) {
  std::string out;
  for (char c : word) {
    out += c;
    out += '*';
  }
  return out;
}

PcpInstance gpcp_to_pcp(const GpcpInstance& gpcp) {
  gpcp.validate();
  for (std::size_t i = 0; i < gpcp.size(); ++i) {
    const auto& p = gpcp.pairs[i];
    if (p.top.empty() || p.bottom.empty()) {
      throw InvalidInput("pair " + std::to_string(i + 1) +
                         " has an empty word; the bracket construction needs nonempty words");
    }
    require_over(p.top, "ab", "pair " + std::to_string(i + 1));
    require_over(p.bottom, "ab", "pair " + std::to_string(i + 1));
  }
  PcpInstance out;
  out.alphabet = "ab[]*";
  const auto& p1 = gpcp.pairs[0];
  const auto& p2 = gpcp.pairs[1];
  out.pairs.push_back({"[" + star_before_each(p1.top), "[" + star_before_each(p1.bottom) + "*"});
  out.pairs.push_back({"*" + star_after_each(p2.top) + "]", star_after_each(p2.bottom) + "]"});
  for (std::size_t i = 2; i < gpcp.size(); ++i) {
    out.pairs.push_back(
        {star_before_each(gpcp.pairs[i].top), star_after_each(gpcp.pairs[i].bottom)});
  }
  out.forced_start = 1;
  out.forced_end = 2;
  return out;
}

PcpInstance binarize_alphabet(const PcpInstance& instance) {
  if (instance.alphabet != "ab[]*") {
    throw InvalidInput("expected the alphabet \"ab[]*\" in that order, got \"" +
                       instance.alphabet + "\"");
  }
  instance.validate();
  static const std::map<char, std::string> kCode = {
      {'a', "aaa"}, {'b', "bbb"}, {'[', "bba"}, {']', "aba"}, {'*', "bab"}};
  auto recode = [](const std::string& word) {
    std::string out;
    for (char c : word) out += kCode.at(c);
    return out;
  };
  PcpInstance out = instance;
  out.alphabet = "ab";
  for (auto& p : out.pairs) {
    p.top = recode(p.top);
    p.bottom = recode(p.bottom);
  }
  return out;
}

Counterexample start_pair_counterexample() {
  static const std::map<char, std::string> kPhi = {
      {'*', "aba"}, {'u', "abba"}, {'v', "abbba"}, {'w', "abbbba"}};
  auto phi = [](std::string_view word) {
    std::string out;
    for (char c : word) out += kPhi.at(c);
    return out;
  };
  Counterexample c;
  c.instance.alphabet = "ab";
  c.instance.pairs = {
      {phi("*v*w"), phi("*")},
      {phi("*u"), phi("")},
      {phi("**"), phi("u*v*w**")},
  };
  c.instance.forced_start = 1;
  c.instance.forced_end = 3;
  c.witness = {2, 1, 3};
  return c;
}

}  // namespace pfa
