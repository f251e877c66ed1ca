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

#include "pfa/checks.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <utility>

#include "pfa/automaton.hpp"
#include "pfa/binarize.hpp"
#include "pfa/construction.hpp"
#include "pfa/error.hpp"
#include "pfa/pipeline.hpp"
#include "pfa/semithue.hpp"

namespace pfa {
namespace {

using Rng = std::mt19937_64;

// Counts checks and remembers the first failure.
class Tally {
 public:
  explicit Tally(std::string name) : name_(std::move(name)) {}

  void expect(bool ok, const std::function<std::string()>& describe) {
    ++count_;
    if (!ok && failures_++ == 0) first_ = describe();
  }

  InvariantResult result() const {
    if (failures_ == 0) return {name_, true, std::to_string(count_) + " checks"};
    return {name_, false,
            std::to_string(failures_) + " of " + std::to_string(count_) + " failed; first: " +
                first_};
  }

 private:
  std::string name_;
  std::size_t count_ = 0;
  std::size_t failures_ = 0;
  std::string first_;
};

InvariantResult single(std::string name, bool ok, std::string detail) {
  return {std::move(name), ok, std::move(detail)};
}

DigitWord random_gadget_word(Rng& rng, std::size_t max_digits) {
  const std::size_t letters = rng() % (max_digits / 2 + 1);
  std::string digits;
  for (std::size_t i = 0; i < letters; ++i) digits += rng() % 2 ? "12" : "11";
  return DigitWord(digits);
}

std::vector<DigitWord> all_gadget_words(std::size_t max_digits) {
  std::vector<std::string> words{""};
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (words[i].size() + 2 > max_digits) continue;
    words.push_back(words[i] + "11");
    words.push_back(words[i] + "12");
  }
  std::vector<DigitWord> out;
  for (const auto& w : words) out.emplace_back(w);
  return out;
}

// Calls f on every word over k symbols of length <= max_len, shortest first,
// lexicographic within a length.
void for_each_word(std::size_t k, std::size_t max_len, const std::function<void(const Word&)>& f) {
  for (std::size_t len = 0; len <= max_len; ++len) {
    Word w(len, 0);
    while (true) {
      f(w);
      std::size_t j = len;
      while (j > 0 && ++w[j - 1] == k) w[--j] = 0;
      if (j == 0) break;
    }
    if (k == 0) break;
  }
}

std::string word_text(const Word& w) {
  std::string s;
  for (std::size_t x : w) s += std::to_string(x + 1);
  return s.empty() ? "(empty)" : s;
}

IndexSequence as_indices(const WeightedAutomaton& a, const Word& w) {
  IndexSequence s;
  for (std::size_t x : w) s.push_back(std::stoul(a.alphabet[x]));
  return s;
}

std::size_t option(const std::optional<std::size_t>& value, std::size_t fallback) {
  return value ? *value : fallback;
}

// Structured dummy instance: words are synthetic, the last pair is declared
// the forced end. Only the shape of the construction is exercised.
PcpInstance structured_instance(std::size_t k) {
  PcpInstance p;
  p.alphabet = "01";
  for (std::size_t i = 0; i + 1 < k; ++i) {
    std::string top = i % 2 ? "1" : "0";
    top += std::string(i / 2, '1');
    p.pairs.push_back({top, i % 2 ? "0" + top : top + "1"});
  }
  p.pairs.push_back({"10", "1"});
  p.forced_end = k;
  return p;
}

SuiteResult multiplicative(const CheckOptions& o) {
  const std::size_t trials = option(o.trials, 1000);
  const std::size_t max_len = option(o.max_len, 10);
  Rng rng(o.seed);
  Tally a0("a0-product-law"), a("a-product-law"), b("b-product-law");
  for (std::size_t t = 0; t < trials; ++t) {
    const DigitWord v1 = random_gadget_word(rng, max_len), w1 = random_gadget_word(rng, max_len);
    const DigitWord v2 = random_gadget_word(rng, max_len), w2 = random_gadget_word(rng, max_len);
    auto describe = [&] {
      return "v1=" + v1.digits() + " w1=" + w1.digits() + " v2=" + v2.digits() +
             " w2=" + w2.digits();
    };
    a0.expect(a0_matrix(v1, w1) * a0_matrix(v2, w2) == a0_matrix(v1 + v2, w1 + w2), describe);
    a.expect(a_matrix(v1, w1) * a_matrix(v2, w2) == a_matrix(v1 + v2, w1 + w2), describe);
    b.expect(b_matrix(v1, w1) * b_matrix(v2, w2) == b_matrix(v1 + v2, w1 + w2), describe);
  }
  return {"multiplicative", {a0.result(), a.result(), b.result()}};
}

SuiteResult equality_detection(const CheckOptions& o) {
  const auto words = all_gadget_words(option(o.max_len, 8));
  const auto& k = gadget_constants();
  Tally sign("sign-detects-equality"), closed("closed-form-value");
  for (const auto& v : words) {
    for (const auto& w : words) {
      const Rational value = k.pi1 * a_matrix(v, w) * k.f1;
      const Rational diff = fractional_value(v) - fractional_value(w);
      const Rational expected = -diff * diff + pow10_neg(2 * v.size()) / 99;
      auto describe = [&] {
        return "v=" + v.digits() + " w=" + w.digits() + " value=" + to_string(value);
      };
      sign.expect(sgn(value) != 0 && (sgn(value) > 0) == (v == w), describe);
      closed.expect(value == expected, describe);
    }
  }
  return {"equality-detection", {sign.result(), closed.result()}};
}

SuiteResult column_sums(const CheckOptions& o) {
  const std::size_t trials = option(o.trials, 500);
  const std::size_t max_len = option(o.max_len, 10);
  Rng rng(o.seed);
  Tally sums("column-sums-one"), positive("positive-when-nonempty");
  for (std::size_t t = 0; t < trials; ++t) {
    const DigitWord v = random_gadget_word(rng, max_len), w = random_gadget_word(rng, max_len);
    const Matrix b = b_matrix(v, w);
    auto describe = [&] { return "v=" + v.digits() + " w=" + w.digits(); };
    const auto cols = b.column_sums();
    sums.expect(std::all_of(cols.begin(), cols.end(), [](const Rational& s) { return s == 1; }),
                describe);
    if (!v.empty() && !w.empty()) {
      bool all_positive = true;
      for (std::size_t r = 0; r < b.dim(); ++r)
        for (std::size_t c = 0; c < b.dim(); ++c) all_positive = all_positive && sgn(b(r, c)) > 0;
      positive.expect(all_positive, describe);
    }
  }
  return {"column-sums", {sums.result(), positive.result()}};
}

SuiteResult pipeline_algebra(const CheckOptions& o) {
  const std::size_t max_len = option(o.max_len, 4);
  const WeightedAutomaton b = column_stochastic_automaton(classic_instance());
  SuiteResult out{"pipeline-algebra", {}};

  // Zero-sum start, and a merged start whose sum must be absorbed by the sink.
  const std::vector<std::pair<std::string, RowVector>> starts = {
      {"zero-sum start", b.start}, {"merged start", b.start * b.matrices[0]}};
  for (const auto& [label, start] : starts) {
    StochasticStage c = add_sink_state(b.matrices, start, b.end);
    const std::size_t n = c.start.size();
    out.invariants.push_back(single("start-annihilates-uniform (" + label + ")",
                                    c.start * uniform_matrix(n) == RowVector(n),
                                    "sink coordinate " + to_string(c.start[n - 1])));
    const Rational alpha = choose_alpha(c.matrices);
    const auto d = blend_with_uniform(c.matrices, alpha);
    const WeightedAutomaton wc{b.alphabet, c.matrices, c.start, c.end};
    const WeightedAutomaton wd{b.alphabet, d, c.start, c.end};
    const NormalizedStart norm = normalize_start(c.start);
    const WeightedAutomaton wn{b.alphabet, d, norm.start, c.end};
    Tally blend("blend-scales-by-alpha-power (" + label + ")");
    Tally shift("normalization-shifts-by-1/n (" + label + ")");
    for_each_word(b.alphabet.size(), max_len, [&](const Word& w) {
      Rational scale = 1;
      for (std::size_t i = 0; i < w.size(); ++i) scale *= alpha;
      const Rational vd = value(wd, w);
      blend.expect(vd == scale * value(wc, w), [&] { return word_text(w); });
      shift.expect(value(wn, w) == norm.offset * c.end.sum() + vd / (Rational(norm.scale) * n),
                   [&] { return word_text(w); });
    });
    out.invariants.push_back(blend.result());
    out.invariants.push_back(shift.result());
  }
  return out;
}

SuiteResult forward_toy(const CheckOptions& o) {
  const std::size_t max_len = option(o.max_len, 5);
  const PcpInstance instance = classic_instance();
  const BuildResult built = forward_pfa(instance);
  const Pfa& pfa = built.pfa;
  const ValidationReport report = validate(pfa);
  SuiteResult out{"forward-toy", {}};
  out.invariants.push_back(single("seven-states", pfa.automaton.dimension() == 7,
                                  std::to_string(pfa.automaton.dimension()) + " states"));
  out.invariants.push_back(single(
      "doubly-stochastic-positive",
      report.ok() && report.detected_kind == StochasticKind::doubly && report.positive &&
          report.start_is_distribution && report.output_is_zero_one,
      report.ok() ? "valid" : report.violations.front()));
  out.invariants.push_back(
      single("cutpoint-1/7", pfa.cutpoint == Rational(1, 7), to_string(pfa.cutpoint)));
  // Unmerged, the empty word is the trivial equality of two empty
  // concatenations: 1/7 + (1/99)/14. Searches exclude it.
  const Rational empty = value(pfa, Word{});
  out.invariants.push_back(single("empty-word-trivially-accepted",
                                  empty == Rational(199, 1386), to_string(empty)));
  Tally accept("accepts-iff-solution"), strict("value-never-at-cutpoint");
  for_each_word(pfa.automaton.alphabet.size(), max_len, [&](const Word& w) {
    const Rational v = value(pfa, w);
    strict.expect(v != pfa.cutpoint, [&] { return word_text(w); });
    if (w.empty()) return;
    const IndexSequence seq =
        to_instance_sequence(built.report.sequence_map, pfa.automaton, w);
    accept.expect(exceeds_cutpoint(pfa, v) == is_solution(instance, seq),
                  [&] { return word_text(w) + " value " + to_string(v); });
  });
  out.invariants.push_back(accept.result());
  out.invariants.push_back(strict.result());
  return out;
}

SuiteResult binary_reduction(const CheckOptions& o) {
  const std::size_t max_len = option(o.max_len, 4);
  const WeightedAutomaton a = gadget_automaton(classic_instance());
  const BinaryAutomaton bin = reduce_to_two(a);
  SuiteResult out{"binary-reduction", {}};
  Tally coded("value-preserved-on-codewords"), partial("partial-codeword-ignored");
  for_each_word(a.alphabet.size(), max_len, [&](const Word& w) {
    const std::string code = bin.code.encode(as_indices(a, w));
    coded.expect(value(a, w) == value(bin.automaton, bin.automaton.parse_word(code)),
                 [&] { return word_text(w); });
  });
  for_each_word(2, 2 * max_len, [&](const Word& w) {
    const auto decoded = bin.code.decode(bin.automaton.format_word(w));
    Word original;
    for (std::size_t i : decoded.indices) original.push_back(i - 1);
    partial.expect(value(bin.automaton, w) == value(a, original),
                   [&] { return bin.automaton.format_word(w); });
  });
  out.invariants.push_back(coded.result());
  out.invariants.push_back(partial.result());
  for (auto [k, expected] : {std::pair<std::size_t, std::size_t>{4, 16}, {6, 26}}) {
    const auto dim = reduce_to_two(gadget_automaton(structured_instance(k))).automaton.dimension();
    out.invariants.push_back(single("dimension k=" + std::to_string(k) + " d=6",
                                    dim == expected, std::to_string(dim) + " states"));
  }
  return out;
}

SuiteResult two_matrix(const CheckOptions& o) {
  const std::size_t max_len = option(o.max_len, 7);
  const PcpInstance instance = classic_instance();
  const BuildResult built = two_matrix_pfa(instance);
  const Pfa& pfa = built.pfa;
  const ValidationReport report = validate(pfa);
  SuiteResult out{"two-matrix", {}};
  out.invariants.push_back(single("toy-thirteen-states", pfa.automaton.dimension() == 13,
                                  std::to_string(pfa.automaton.dimension()) + " states"));
  out.invariants.push_back(single(
      "doubly-stochastic-positive",
      report.ok() && report.detected_kind == StochasticKind::doubly && report.positive,
      report.ok() ? "valid" : report.violations.front()));
  Tally accept("accepts-iff-decoded-solution");
  for_each_word(2, max_len, [&](const Word& w) {
    const IndexSequence seq = to_instance_sequence(built.report.sequence_map, pfa.automaton, w);
    if (seq.empty()) return;
    accept.expect(accepts(pfa, w) == is_solution(instance, seq),
                  [&] { return pfa.automaton.format_word(w); });
  });
  out.invariants.push_back(accept.result());
  const BuildResult five =
      two_matrix_pfa(structured_instance(5), {MergeMode::forced_end_reversed, std::nullopt});
  out.invariants.push_back(single(
      "five-pair-eighteen-states",
      five.pfa.automaton.dimension() == 18 && five.pfa.cutpoint == Rational(1, 18),
      std::to_string(five.pfa.automaton.dimension()) + " states, cutpoint " +
          to_string(five.pfa.cutpoint)));
  return out;
}

SuiteResult backward(const CheckOptions& o) {
  const std::size_t max_len = option(o.max_len, 4);
  PcpInstance instance = classic_instance();
  const BuildResult built = backward_pfa(instance, {MergeMode::forced_start, std::nullopt});
  const Pfa& pfa = built.pfa;
  const WeightedAutomaton forward = column_stochastic_automaton(instance);
  const ValidationReport report = validate(pfa);
  SuiteResult out{"backward", {}};
  out.invariants.push_back(single(
      "row-stochastic-positive",
      report.ok() && report.positive && pfa.automaton.dimension() == 6 &&
          report.start_is_deterministic && report.output_in_unit_interval,
      report.ok() ? "valid" : report.violations.front()));
  Tally identity("value-is-1/6-plus-forward/12");
  for_each_word(pfa.automaton.alphabet.size(), max_len, [&](const Word& w) {
    const IndexSequence seq = to_instance_sequence(built.report.sequence_map, pfa.automaton, w);
    Word fw;
    for (std::size_t i : seq) fw.push_back(i - 1);
    identity.expect(value(pfa, w) == Rational(1, 6) + value(forward, fw) / 12,
                    [&] { return word_text(w); });
  });
  out.invariants.push_back(identity.result());
  for (const Rational& target : {Rational(1, 12), Rational(1, 2)}) {
    const Pfa shifted = shift_cutpoint(pfa, target);
    Tally same("shift-to-" + to_string(target) + "-keeps-language");
    for_each_word(pfa.automaton.alphabet.size(), max_len, [&](const Word& w) {
      same.expect(accepts(pfa, w) == accepts(shifted, w), [&] { return word_text(w); });
    });
    out.invariants.push_back(same.result());
  }
  return out;
}

SuiteResult semithue_chain(const CheckOptions& o) {
  const std::size_t depth = option(o.max_len, 5);
  const SemiThueSystem system{"ab", {{"ab", "ba"}}};
  const SolveLimits limits{40, 256};
  SuiteResult out{"semithue-chain", {}};

  const auto derives = bounded_derives(system, "ab", "ba", depth);
  out.invariants.push_back(single("derivation-found", derives.status == SearchStatus::found,
                                  to_string(derives.status)));
  const GpcpInstance g = gpcp_from_semithue(system, "ba", "ab");
  Tally parity("separator-parity-on-partials");
  const SymbolCode code(system.alphabet);
  const std::string sep = code.codeword(kSeparator);
  auto count = [&](const std::string& s) {
    std::size_t n = 0;
    for (auto p = s.find(sep); p != std::string::npos; p = s.find(sep, p + 1)) ++n;
    return n;
  };
  const auto gs = bounded_solve(g, limits, [&](const IndexSequence& partial) {
    const auto [top, bottom] = apply(g, partial);
    parity.expect(count(bottom) == count(top) + 1 && bottom.size() > top.size() &&
                      bottom.compare(0, top.size(), top) == 0,
                  [&] { return to_string(partial); });
  });
  out.invariants.push_back(single("gpcp-solvable",
                                  gs.solution && is_solution(g, *gs.solution),
                                  gs.solution ? to_string(*gs.solution) : to_string(gs.status)));
  out.invariants.push_back(parity.result());

  const PcpInstance p5 = gpcp_to_pcp(g);
  const auto s5 = bounded_solve(p5, limits);
  const bool shaped = s5.solution && s5.solution->front() == 1 && s5.solution->back() == 2;
  out.invariants.push_back(single("bracket-pcp-solvable-with-shape", shaped,
                                  s5.solution ? to_string(*s5.solution) : to_string(s5.status)));
  const PcpInstance p2 = binarize_alphabet(p5);
  const auto s2 = bounded_solve(p2, {limits.max_steps, 3 * limits.max_overhang});
  out.invariants.push_back(single("binary-pcp-solvable", s2.solution.has_value(),
                                  s2.solution ? to_string(*s2.solution) : to_string(s2.status)));

  const auto back = bounded_derives(system, "ba", "ab", depth);
  const auto gback = bounded_solve(gpcp_from_semithue(system, "ab", "ba"), limits);
  out.invariants.push_back(single(
      "unreachable-target-closed",
      back.status == SearchStatus::closed && gback.status == SearchStatus::closed,
      "derivation " + to_string(back.status) + ", gpcp " + to_string(gback.status)));
  return out;
}

SuiteResult code_substrings(const CheckOptions& o) {
  const std::size_t max_len = option(o.max_len, 3);
  const SymbolCode code("xy");
  const std::string& symbols = code.symbols();
  Tally tally("decodes-around-every-codeword-occurrence");
  for_each_word(symbols.size(), max_len, [&](const Word& w) {
    std::string u;
    for (std::size_t x : w) u += symbols[x];
    const std::string encoded = code.encode(u);
    for (char alpha : symbols) {
      const std::string cw = code.codeword(alpha);
      for (auto p = encoded.find(cw); p != std::string::npos; p = encoded.find(cw, p + 1)) {
        const auto split = check_code_substring(code, u, encoded.substr(0, p), alpha,
                                                encoded.substr(p + cw.size()));
        tally.expect(split.has_value(), [&] {
          return "u=" + u + " symbol " + std::string(1, alpha) + " at " + std::to_string(p);
        });
      }
    }
  });
  return {"code-substrings", {tally.result()}};
}

SuiteResult counterexample_suite(const CheckOptions&) {
  const Counterexample c = start_pair_counterexample();
  const auto [top, bottom] = apply(c.instance, c.witness);
  SuiteResult out{"start-pair-counterexample", {}};
  out.invariants.push_back(single("witness-is-solution", is_solution(c.instance, c.witness),
                                  "witness " + to_string(c.witness)));
  out.invariants.push_back(single("witness-avoids-start-pair", c.witness.front() != 1,
                                  "first index " + std::to_string(c.witness.front())));
  out.invariants.push_back(single("empty-bottom-word", c.instance.pairs[1].bottom.empty(),
                                  "pair 2 bottom \"" + c.instance.pairs[1].bottom + "\""));
  return out;
}

using SuiteFn = SuiteResult (*)(const CheckOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"multiplicative", multiplicative},
      {"equality-detection", equality_detection},
      {"column-sums", column_sums},
      {"pipeline-algebra", pipeline_algebra},
      {"forward-toy", forward_toy},
      {"binary-reduction", binary_reduction},
      {"two-matrix", two_matrix},
      {"backward", backward},
      {"semithue-chain", semithue_chain},
      {"code-substrings", code_substrings},
      {"start-pair-counterexample", counterexample_suite},
  };
  return suites;
}

}  // namespace

bool SuiteResult::passed() const {
  return std::all_of(invariants.begin(), invariants.end(),
                     [](const InvariantResult& r) { return r.passed; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : registry()) n.push_back(name);
    return n;
  }();
  return names;
}

SuiteResult run_suite(std::string_view name, const CheckOptions& options) {
  for (const auto& [n, fn] : registry()) {
    if (n == name) return fn(options);
  }
  throw InvalidInput("unknown check suite \"" + std::string(name) + "\"");
}

PcpInstance classic_instance() {
  PcpInstance p;
  p.alphabet = "01";
  p.pairs = {{"1", "101"}, {"10", "00"}, {"011", "11"}};
  p.forced_start = 1;
  return p;
}

}  // namespace pfa
