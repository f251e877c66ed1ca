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

#include "pfa/automaton.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "pfa/error.hpp"

namespace pfa {

std::size_t WeightedAutomaton::symbol_index(std::string_view symbol) const {
  auto it = std::find(alphabet.begin(), alphabet.end(), symbol);
  if (it == alphabet.end()) {
    throw InvalidInput("unknown symbol \"" + std::string(symbol) + "\"");
  }
  return static_cast<std::size_t>(it - alphabet.begin());
}

void WeightedAutomaton::check_shape() const {
  if (alphabet.size() != matrices.size()) {
    throw InvalidInput("alphabet and matrix list differ in length");
  }
  std::set<std::string> seen;
  for (const auto& s : alphabet) {
    if (s.empty() || !seen.insert(s).second) {
      throw InvalidInput("symbols must be distinct and nonempty");
    }
  }
  const std::size_t n = start.size();
  if (n == 0 || end.size() != n) {
    throw InvalidInput("start and end vectors must have the same nonzero length");
  }
  for (std::size_t i = 0; i < matrices.size(); ++i) {
    if (matrices[i].dim() != n) {
      throw InvalidInput("matrix for symbol \"" + alphabet[i] +
                         "\" has dimension " + std::to_string(matrices[i].dim()) +
                         ", expected " + std::to_string(n));
    }
  }
}

Word WeightedAutomaton::parse_word(std::string_view text) const {
  Word word;
  if (text.empty()) return word;
  const bool single_chars = std::all_of(
      alphabet.begin(), alphabet.end(), [](const std::string& s) { return s.size() == 1; });
  if (single_chars && text.find(',') == std::string_view::npos) {
    for (char c : text) word.push_back(symbol_index(std::string_view(&c, 1)));
    return word;
  }
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    word.push_back(symbol_index(text.substr(pos, comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return word;
}

std::string WeightedAutomaton::format_word(const Word& word) const {
  const bool single_chars = std::all_of(
      alphabet.begin(), alphabet.end(), [](const std::string& s) { return s.size() == 1; });
  std::string out;
  for (std::size_t j = 0; j < word.size(); ++j) {
    if (!single_chars && j) out += ',';
    out += alphabet.at(word[j]);
  }
  return out;
}

Rational value(const WeightedAutomaton& automaton, const Word& word) {
  RowVector x = automaton.start;
  for (std::size_t s : word) x = x * automaton.matrices.at(s);
  return x * automaton.end;
}

std::string to_string(StochasticKind kind) {
  switch (kind) {
    case StochasticKind::none:
      return "none";
    case StochasticKind::row:
      return "row";
    case StochasticKind::column:
      return "column";
    case StochasticKind::doubly:
      return "doubly";
  }
  return "none";
}

StochasticKind parse_stochastic_kind(std::string_view text) {
  if (text == "none") return StochasticKind::none;
  if (text == "row") return StochasticKind::row;
  if (text == "column") return StochasticKind::column;
  if (text == "doubly") return StochasticKind::doubly;
  throw InvalidInput("unknown stochastic kind \"" + std::string(text) + "\"");
}

Rational value(const Pfa& pfa, const Word& word) {
  return value(pfa.automaton, word);
}

bool exceeds_cutpoint(const Pfa& pfa, const Rational& value) {
  return pfa.comparison == Comparison::strict ? value > pfa.cutpoint
                                              : value >= pfa.cutpoint;
}

bool accepts(const Pfa& pfa, const Word& word) {
  return exceeds_cutpoint(pfa, value(pfa, word));
}

EmptinessResult bounded_emptiness(const Pfa& pfa, std::size_t max_len,
                                  bool exclude_empty, const WordFilter& skip) {
  const auto& a = pfa.automaton;
  EmptinessResult result;
  // Level-by-level enumeration in lexicographic order, sharing prefixes.
  std::vector<std::pair<Word, RowVector>> level{{Word{}, a.start}};
  for (std::size_t len = 0;; ++len) {
    for (const auto& [word, x] : level) {
      if (len == 0 && exclude_empty) continue;
      if (skip && skip(word)) continue;
      ++result.words_checked;
      Rational v = x * a.end;
      if (exceeds_cutpoint(pfa, v)) {
        result.word = word;
        result.value = std::move(v);
        return result;
      }
    }
    if (len == max_len) break;
    std::vector<std::pair<Word, RowVector>> next;
    next.reserve(level.size() * a.alphabet.size());
    for (const auto& [word, x] : level) {
      for (std::size_t s = 0; s < a.alphabet.size(); ++s) {
        Word w = word;
        w.push_back(s);
        next.emplace_back(std::move(w), x * a.matrices[s]);
      }
    }
    level = std::move(next);
  }
  return result;
}

Pfa shift_cutpoint(const Pfa& pfa, const Rational& target) {
  if (target <= 0 || target >= 1) {
    throw InvalidInput("target cutpoint " + to_string(target) +
                       " is outside the open interval (0,1)");
  }
  Pfa out = pfa;
  if (target == pfa.cutpoint) return out;
  auto& f = out.automaton.end;
  if (target < pfa.cutpoint) {
    if (pfa.cutpoint <= 0) {
      throw PreconditionError("cannot lower a cutpoint that is not positive");
    }
    const Rational scale = target / pfa.cutpoint;
    for (std::size_t i = 0; i < f.size(); ++i) f[i] *= scale;
  } else {
    for (const auto& m : pfa.automaton.matrices) {
      for (const auto& s : m.row_sums()) {
        if (s != 1) {
          throw PreconditionError(
              "raising the cutpoint needs row sums 1 in every matrix");
        }
      }
    }
    if (pfa.automaton.start.sum() != 1) {
      throw PreconditionError("raising the cutpoint needs a start summing to 1");
    }
    if (pfa.cutpoint >= 1) {
      throw PreconditionError("cannot raise a cutpoint that is not below 1");
    }
    const Rational scale = (1 - target) / (1 - pfa.cutpoint);
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = 1 - scale + scale * f[i];
  }
  out.cutpoint = target;
  return out;
}

namespace {

bool rows_stochastic(const Matrix& m) {
  for (const auto& s : m.row_sums())
    if (s != 1) return false;
  return true;
}

bool columns_stochastic(const Matrix& m) {
  for (const auto& s : m.column_sums())
    if (s != 1) return false;
  return true;
}

bool nonnegative(const Matrix& m) {
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c)
      if (sgn(m(r, c)) < 0) return false;
  return true;
}

}  // namespace

StochasticKind detect_kind(const std::vector<Matrix>& matrices) {
  bool rows = true, cols = true;
  for (const auto& m : matrices) {
    if (!nonnegative(m)) return StochasticKind::none;
    rows = rows && rows_stochastic(m);
    cols = cols && columns_stochastic(m);
  }
  if (rows && cols) return StochasticKind::doubly;
  if (rows) return StochasticKind::row;
  if (cols) return StochasticKind::column;
  return StochasticKind::none;
}

ValidationReport validate(const Pfa& pfa) {
  ValidationReport report;
  const auto& a = pfa.automaton;
  try {
    a.check_shape();
  } catch (const InvalidInput& e) {
    report.violations.push_back(e.what());
    return report;
  }

  const bool want_rows =
      pfa.kind == StochasticKind::row || pfa.kind == StochasticKind::doubly;
  const bool want_cols =
      pfa.kind == StochasticKind::column || pfa.kind == StochasticKind::doubly;
  report.nonnegative = true;
  report.positive = true;
  for (std::size_t i = 0; i < a.matrices.size(); ++i) {
    const Matrix& m = a.matrices[i];
    const std::string name = "matrix \"" + a.alphabet[i] + "\"";
    for (std::size_t r = 0; r < m.dim(); ++r) {
      for (std::size_t c = 0; c < m.dim(); ++c) {
        const int s = sgn(m(r, c));
        if (s <= 0) report.positive = false;
        if (s < 0) {
          report.nonnegative = false;
          if (pfa.kind != StochasticKind::none) {
            report.violations.push_back(name + " entry (" + std::to_string(r + 1) +
                                        "," + std::to_string(c + 1) +
                                        ") is negative: " + to_string(m(r, c)));
          }
        }
      }
    }
    if (want_rows) {
      const auto sums = m.row_sums();
      for (std::size_t r = 0; r < sums.size(); ++r) {
        if (sums[r] != 1) {
          report.violations.push_back(name + " row " + std::to_string(r + 1) +
                                      " sums to " + to_string(sums[r]) +
                                      " (off by " + to_string(Rational(sums[r] - 1)) +
                                      ")");
        }
      }
    }
    if (want_cols) {
      const auto sums = m.column_sums();
      for (std::size_t c = 0; c < sums.size(); ++c) {
        if (sums[c] != 1) {
          report.violations.push_back(name + " column " + std::to_string(c + 1) +
                                      " sums to " + to_string(sums[c]) +
                                      " (off by " + to_string(Rational(sums[c] - 1)) +
                                      ")");
        }
      }
    }
  }
  report.detected_kind = detect_kind(a.matrices);

  const auto& pi = a.start;
  const bool start_nonnegative =
      std::all_of(pi.begin(), pi.end(), [](const Rational& x) { return sgn(x) >= 0; });
  report.start_is_distribution = start_nonnegative && pi.sum() == 1;
  report.start_is_deterministic =
      report.start_is_distribution &&
      std::count_if(pi.begin(), pi.end(), [](const Rational& x) { return x == 1; }) == 1;
  if (!report.start_is_distribution) {
    for (std::size_t i = 0; i < pi.size(); ++i) {
      if (sgn(pi[i]) < 0) {
        report.violations.push_back("start entry " + std::to_string(i + 1) +
                                    " is negative: " + to_string(pi[i]));
      }
    }
    if (pi.sum() != 1) {
      report.violations.push_back("start sums to " + to_string(pi.sum()));
    }
  }

  const auto& f = a.end;
  report.output_in_unit_interval = std::all_of(f.begin(), f.end(), [](const Rational& x) {
    return sgn(x) >= 0 && x <= 1;
  });
  report.output_is_zero_one = std::all_of(
      f.begin(), f.end(), [](const Rational& x) { return x == 0 || x == 1; });
  if (!report.output_in_unit_interval) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (sgn(f[i]) < 0 || f[i] > 1) {
        report.violations.push_back("output entry " + std::to_string(i + 1) +
                                    " is outside [0,1]: " + to_string(f[i]));
      }
    }
  }
  return report;
}

}  // namespace pfa
