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

#include "pfa/pipeline.hpp"

#include <algorithm>
#include <utility>

#include "pfa/binarize.hpp"
#include "pfa/construction.hpp"
#include "pfa/error.hpp"

namespace pfa {
namespace {

struct Prepared {
  PcpInstance instance;  // possibly reversed
  std::optional<std::size_t> merged;
  bool reversed = false;
};

void require_binary(const PcpInstance& instance) {
  instance.validate();
  if (instance.alphabet.size() != 2) {
    throw InvalidInput("matrix constructions need an alphabet of exactly 2 letters, got \"" +
                       instance.alphabet + "\"");
  }
}

Prepared prepare(const PcpInstance& instance, MergeMode mode) {
  require_binary(instance);
  switch (mode) {
    case MergeMode::none:
      return {instance, std::nullopt, false};
    case MergeMode::forced_start:
      if (!instance.forced_start) {
        throw PreconditionError("merging the start pair needs a forced start pair");
      }
      return {instance, instance.forced_start, false};
    case MergeMode::forced_end_reversed:
      if (!instance.forced_end) {
        throw PreconditionError("merging the reversed end pair needs a forced end pair");
      }
      return {reverse(instance), instance.forced_end, true};
  }
  return {instance, std::nullopt, false};
}

std::vector<std::string> pair_symbols(std::size_t k) {
  std::vector<std::string> s;
  for (std::size_t i = 1; i <= k; ++i) s.push_back(std::to_string(i));
  return s;
}

StageRecord record(std::string name, const std::vector<Matrix>& matrices,
                   std::size_t dimension) {
  StageRecord r{std::move(name), dimension, matrices.size(), {}};
  for (const auto& m : matrices) r.checksums.push_back(checksum_hex(m));
  return r;
}

StageRecord record(std::string name, const WeightedAutomaton& a) {
  return record(std::move(name), a.matrices, a.dimension());
}

// Sink, blend and normalize: turns column-stochastic matrices into a
// doubly stochastic positive PFA with cutpoint offset * (output mass).
Pfa stochastify(const std::vector<std::string>& alphabet, const std::vector<Matrix>& matrices,
                const RowVector& start, const ColumnVector& end,
                const PipelineOptions& options, BuildReport& report) {
  StochasticStage c = add_sink_state(matrices, start, end);
  report.stages.push_back(record("sink", c.matrices, c.start.size()));
  const Rational alpha = options.alpha ? *options.alpha : choose_alpha(c.matrices);
  std::vector<Matrix> d = blend_with_uniform(c.matrices, alpha);
  report.stages.push_back(record("blend", d, c.start.size()));
  report.alpha = alpha;
  NormalizedStart normalized = normalize_start(c.start);
  report.normalization_scale = normalized.scale;
  report.stages.push_back(record("normalize", d, c.start.size()));

  Pfa pfa;
  pfa.automaton = WeightedAutomaton{alphabet, std::move(d), std::move(normalized.start),
                                    std::move(c.end)};
  pfa.cutpoint = normalized.offset * end.sum();
  pfa.comparison = Comparison::strict;
  pfa.kind = StochasticKind::doubly;
  return pfa;
}

}  // namespace

std::string to_string(MergeMode mode) {
  switch (mode) {
    case MergeMode::none:
      return "none";
    case MergeMode::forced_end_reversed:
      return "forced-end-reversed";
    case MergeMode::forced_start:
      return "forced-start";
  }
  return "none";
}

MergeMode parse_merge_mode(std::string_view text) {
  if (text == "none") return MergeMode::none;
  if (text == "forced-end-reversed") return MergeMode::forced_end_reversed;
  if (text == "forced-start") return MergeMode::forced_start;
  throw InvalidInput("unknown merge mode \"" + std::string(text) + "\"");
}

WeightedAutomaton gadget_automaton(const PcpInstance& instance) {
  require_binary(instance);
  const auto& k = gadget_constants();
  WeightedAutomaton a;
  a.alphabet = pair_symbols(instance.size());
  for (const auto& p : instance.pairs) {
    a.matrices.push_back(a_matrix(recode_binary(p.top, instance.alphabet),
                                  recode_binary(p.bottom, instance.alphabet)));
  }
  a.start = k.pi1;
  a.end = k.f1;
  return a;
}

WeightedAutomaton column_stochastic_automaton(const PcpInstance& instance) {
  const auto& k = gadget_constants();
  WeightedAutomaton a = gadget_automaton(instance);
  for (auto& m : a.matrices) m = k.v_inverse * m * k.v;
  a.start = a.start * k.v;
  a.end = k.v_inverse * a.end;
  return a;
}

BuildResult forward_pfa(const PcpInstance& instance, const PipelineOptions& options) {
  Prepared prep = prepare(instance, options.merge);
  BuildResult out;
  BuildReport& report = out.report;
  report.variant = "forward7";
  report.alphabet_order = instance.alphabet;

  report.stages.push_back(record("gadget", gadget_automaton(prep.instance)));
  WeightedAutomaton b = column_stochastic_automaton(prep.instance);
  report.stages.push_back(record("column-stochastic", b));
  out.pfa = stochastify(b.alphabet, b.matrices, b.start, b.end, options, report);

  if (prep.merged) {
    out.pfa.automaton = merge_start(out.pfa.automaton, std::to_string(*prep.merged));
    report.stages.push_back(record("merge", out.pfa.automaton));
    report.empty_word = "stands for the merged pair alone";
  } else {
    report.empty_word = "not a solution; exclude it when searching";
  }
  report.cutpoint = out.pfa.cutpoint;
  report.sequence_map.merged_pair = prep.merged;
  report.sequence_map.instance_reversed = prep.reversed;
  return out;
}

BuildResult backward_pfa(const PcpInstance& instance, const PipelineOptions& options) {
  if (options.merge == MergeMode::none) {
    throw PreconditionError("the backward construction folds a forced pair into the output");
  }
  Prepared prep = prepare(instance, options.merge);
  for (std::size_t i = 0; i < prep.instance.size(); ++i) {
    const auto& p = prep.instance.pairs[i];
    if (p.top.empty() || p.bottom.empty()) {
      throw PreconditionError("the backward construction needs every word nonempty; pair " +
                              std::to_string(i + 1) + " has an empty word");
    }
  }
  BuildResult out;
  BuildReport& report = out.report;
  report.variant = "backward6";
  report.alphabet_order = instance.alphabet;

  WeightedAutomaton b = column_stochastic_automaton(prep.instance);
  report.stages.push_back(record("column-stochastic", b));
  for (std::size_t i = 0; i < b.matrices.size(); ++i) {
    for (std::size_t r = 0; r < b.dimension(); ++r)
      for (std::size_t c = 0; c < b.dimension(); ++c)
        if (sgn(b.matrices[i](r, c)) <= 0) {
          throw PreconditionError("matrix " + b.alphabet[i] + " is not strictly positive");
        }
  }
  NormalizedStart normalized = normalize_start(b.start);
  report.normalization_scale = normalized.scale;

  // Swap roles: the end becomes the (deterministic) start, the normalized
  // start becomes the output, and the matrices are transposed.
  WeightedAutomaton t;
  t.start = b.end.transposed();
  t.end = normalized.start.transposed();
  t.alphabet = b.alphabet;
  for (const auto& m : b.matrices) t.matrices.push_back(m.transposed());
  report.stages.push_back(record("transpose", t));

  // The merged pair comes first in the sequence, so its matrix acts last.
  const std::size_t s = t.symbol_index(std::to_string(*prep.merged));
  t.end = t.matrices[s] * t.end;
  t.alphabet.erase(t.alphabet.begin() + static_cast<std::ptrdiff_t>(s));
  t.matrices.erase(t.matrices.begin() + static_cast<std::ptrdiff_t>(s));
  report.stages.push_back(record("merge", t));

  out.pfa.cutpoint = normalized.offset * b.end.sum();
  out.pfa.automaton = std::move(t);
  out.pfa.comparison = Comparison::strict;
  out.pfa.kind = StochasticKind::row;
  report.cutpoint = out.pfa.cutpoint;
  report.empty_word = "stands for the merged pair alone";
  report.sequence_map.word_reversed = true;
  report.sequence_map.merged_pair = prep.merged;
  report.sequence_map.instance_reversed = prep.reversed;
  return out;
}

BuildResult two_matrix_pfa(const PcpInstance& instance, const PipelineOptions& options) {
  Prepared prep = prepare(instance, options.merge);
  BuildResult out;
  BuildReport& report = out.report;
  report.variant = "two-matrix";
  report.alphabet_order = instance.alphabet;

  WeightedAutomaton a = gadget_automaton(prep.instance);
  report.stages.push_back(record("gadget", a));
  if (prep.merged) {
    a = merge_start(a, std::to_string(*prep.merged));
    report.stages.push_back(record("merge", a));
  }
  for (const auto& s : a.alphabet) {
    report.sequence_map.code_symbols.push_back(std::stoul(s));
  }
  BinaryAutomaton bin = reduce_to_two(a);
  report.stages.push_back(record("binary", bin.automaton));
  StochasticStage fixed =
      column_fix(bin.automaton.matrices, bin.automaton.start, bin.automaton.end);
  report.stages.push_back(record("column-fix", fixed.matrices, fixed.start.size()));
  out.pfa = stochastify(bin.automaton.alphabet, fixed.matrices, fixed.start, fixed.end,
                        options, report);

  report.cutpoint = out.pfa.cutpoint;
  report.empty_word = prep.merged ? "decodes to the merged pair alone"
                                  : "words decoding to no pair are not solutions; exclude "
                                    "them when searching";
  report.sequence_map.binary = true;
  report.sequence_map.merged_pair = prep.merged;
  report.sequence_map.instance_reversed = prep.reversed;
  return out;
}

IndexSequence to_instance_sequence(const SequenceMap& map, const WeightedAutomaton& automaton,
                                   const Word& word) {
  IndexSequence body;
  if (map.binary) {
    const TauCode code(map.code_symbols.size());
    const auto decoded = code.decode(automaton.format_word(word));
    for (std::size_t i : decoded.indices) body.push_back(map.code_symbols.at(i - 1));
  } else {
    for (std::size_t s : word) body.push_back(std::stoul(automaton.alphabet.at(s)));
  }
  if (map.word_reversed) std::reverse(body.begin(), body.end());
  IndexSequence seq;
  if (map.merged_pair) seq.push_back(*map.merged_pair);
  seq.insert(seq.end(), body.begin(), body.end());
  if (map.instance_reversed) std::reverse(seq.begin(), seq.end());
  return seq;
}

}  // namespace pfa
