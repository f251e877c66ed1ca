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

#include "pfa/io.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include "pfa/binarize.hpp"
#include "pfa/error.hpp"

namespace pfa {
namespace {

// Runs `parse`, turning library type/range errors into InvalidInput.
template <typename F>
auto guarded(const char* what, F&& parse) {
  try {
    return parse();
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string(what) + ": " + e.what());
  }
}

Json alphabet_json(const std::string& alphabet) {
  Json a = Json::array();
  for (char c : alphabet) a.push_back(std::string(1, c));
  return a;
}

std::string alphabet_from_json(const Json& json) {
  if (!json.is_array()) throw InvalidInput("alphabet must be an array of symbols");
  std::string out;
  for (const auto& s : json) {
    const auto symbol = s.get<std::string>();
    if (symbol.size() != 1) {
      throw InvalidInput("symbols must be single characters, got \"" + symbol + "\"");
    }
    out += symbol;
  }
  return out;
}

Json pairs_json(const std::vector<WordPair>& pairs) {
  Json a = Json::array();
  for (const auto& p : pairs) a.push_back(Json{{"top", p.top}, {"bottom", p.bottom}});
  return a;
}

std::vector<WordPair> pairs_from_json(const Json& json) {
  if (!json.is_array()) throw InvalidInput("pairs must be an array");
  std::vector<WordPair> out;
  for (const auto& p : json) {
    out.push_back({p.at("top").get<std::string>(), p.at("bottom").get<std::string>()});
  }
  return out;
}

Rational rational_from_json(const Json& json) {
  if (json.is_string()) return parse_rational(json.get<std::string>());
  if (json.is_number_integer()) return parse_rational(std::to_string(json.get<long long>()));
  throw InvalidInput("rationals must be strings \"p/q\", got " + json.dump());
}

template <typename V>
Json vector_json(const V& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

template <typename V>
V vector_from_json(const Json& json, std::size_t n, const char* what) {
  if (!json.is_array() || json.size() != n) {
    throw InvalidInput(std::string(what) + " must be an array of " + std::to_string(n) +
                       " rationals");
  }
  V v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = rational_from_json(json[i]);
  return v;
}

}  // namespace

Json to_json(const PcpInstance& instance) {
  Json j;
  j["kind"] = "pcp";
  j["alphabet"] = alphabet_json(instance.alphabet);
  j["pairs"] = pairs_json(instance.pairs);
  if (instance.forced_start) j["start_index"] = *instance.forced_start;
  if (instance.forced_end) j["end_index"] = *instance.forced_end;
  return j;
}

Json to_json(const GpcpInstance& instance) {
  Json j;
  j["kind"] = "gpcp";
  j["alphabet"] = alphabet_json(instance.alphabet);
  j["pairs"] = pairs_json(instance.pairs);
  return j;
}

AnyInstance instance_from_json(const Json& json) {
  return guarded("instance", [&]() -> AnyInstance {
    const std::string kind = json.value("kind", std::string("pcp"));
    if (kind == "gpcp") {
      GpcpInstance g{alphabet_from_json(json.at("alphabet")), pairs_from_json(json.at("pairs"))};
      g.validate();
      return g;
    }
    if (kind != "pcp") throw InvalidInput("unknown instance kind \"" + kind + "\"");
    PcpInstance p{alphabet_from_json(json.at("alphabet")), pairs_from_json(json.at("pairs")),
                  std::nullopt, std::nullopt};
    if (json.contains("start_index")) p.forced_start = json["start_index"].get<std::size_t>();
    if (json.contains("end_index")) p.forced_end = json["end_index"].get<std::size_t>();
    p.validate();
    return p;
  });
}

PcpInstance pcp_from_json(const Json& json) {
  auto any = instance_from_json(json);
  if (auto* p = std::get_if<PcpInstance>(&any)) return *p;
  throw InvalidInput("expected a PCP instance, got a GPCP instance");
}

Json to_json(const WordProblem& problem) {
  Json j;
  j["alphabet"] = alphabet_json(problem.system.alphabet);
  Json rules = Json::array();
  for (const auto& r : problem.system.rules) rules.push_back(Json{{"l", r.lhs}, {"r", r.rhs}});
  j["rules"] = std::move(rules);
  j["source"] = problem.source;
  j["target"] = problem.target;
  return j;
}

WordProblem word_problem_from_json(const Json& json) {
  return guarded("semi-Thue system", [&] {
    WordProblem p;
    p.system.alphabet = alphabet_from_json(json.at("alphabet"));
    for (const auto& r : json.at("rules")) {
      p.system.rules.push_back({r.at("l").get<std::string>(), r.at("r").get<std::string>()});
    }
    p.source = json.at("source").get<std::string>();
    p.target = json.at("target").get<std::string>();
    p.system.validate();
    for (const auto* w : {&p.source, &p.target}) {
      for (char c : *w) {
        if (p.system.alphabet.find(c) == std::string::npos) {
          throw InvalidInput("word \"" + *w + "\" leaves the alphabet");
        }
      }
    }
    return p;
  });
}

Json to_json(const Pfa& pfa) {
  const auto& a = pfa.automaton;
  Json j;
  j["version"] = kPfaFormatVersion;
  j["states"] = a.dimension();
  j["alphabet"] = a.alphabet;
  Json matrices = Json::object();
  for (std::size_t s = 0; s < a.alphabet.size(); ++s) {
    const Matrix& m = a.matrices[s];
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.dim(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(to_string(m(r, c)));
      rows.push_back(std::move(row));
    }
    matrices[a.alphabet[s]] = std::move(rows);
  }
  j["matrices"] = std::move(matrices);
  j["start"] = vector_json(a.start);
  j["output"] = vector_json(a.end);
  j["cutpoint"] = to_string(pfa.cutpoint);
  j["strict"] = pfa.comparison == Comparison::strict;
  j["stochastic_kind"] = to_string(pfa.kind);
  j["convention"] = "value = start * M[w1] * ... * M[wm] * output";
  return j;
}

Pfa pfa_from_json(const Json& json) {
  return guarded("PFA", [&] {
    const int version = json.at("version").get<int>();
    if (version != kPfaFormatVersion) {
      throw InvalidInput("unsupported PFA format version " + std::to_string(version));
    }
    Pfa pfa;
    auto& a = pfa.automaton;
    const auto n = json.at("states").get<std::size_t>();
    a.alphabet = json.at("alphabet").get<std::vector<std::string>>();
    const Json& matrices = json.at("matrices");
    if (!matrices.is_object() || matrices.size() != a.alphabet.size()) {
      throw InvalidInput("matrices must map each alphabet symbol to a matrix");
    }
    for (const auto& s : a.alphabet) {
      const Json& rows = matrices.at(s);
      if (!rows.is_array() || rows.size() != n) {
        throw InvalidInput("matrix \"" + s + "\" must have " + std::to_string(n) + " rows");
      }
      Matrix m(n);
      for (std::size_t r = 0; r < n; ++r) {
        if (!rows[r].is_array() || rows[r].size() != n) {
          throw InvalidInput("matrix \"" + s + "\" row " + std::to_string(r + 1) +
                             " must have " + std::to_string(n) + " entries");
        }
        for (std::size_t c = 0; c < n; ++c) m(r, c) = rational_from_json(rows[r][c]);
      }
      a.matrices.push_back(std::move(m));
    }
    a.start = vector_from_json<RowVector>(json.at("start"), n, "start");
    a.end = vector_from_json<ColumnVector>(json.at("output"), n, "output");
    a.check_shape();
    pfa.cutpoint = rational_from_json(json.at("cutpoint"));
    pfa.comparison = json.at("strict").get<bool>() ? Comparison::strict : Comparison::weak;
    pfa.kind = parse_stochastic_kind(json.at("stochastic_kind").get<std::string>());
    return pfa;
  });
}

Json to_json(const BuildReport& report) {
  Json j;
  j["variant"] = report.variant;
  j["alphabet_order"] = alphabet_json(report.alphabet_order);
  Json stages = Json::array();
  for (const auto& s : report.stages) {
    stages.push_back(Json{{"name", s.name},
                          {"dimension", s.dimension},
                          {"symbols", s.symbols},
                          {"checksums", s.checksums}});
  }
  j["stages"] = std::move(stages);
  j["alpha"] = report.alpha ? Json(to_string(*report.alpha)) : Json(nullptr);
  j["normalization_scale"] =
      report.normalization_scale ? Json(report.normalization_scale->get_str()) : Json(nullptr);
  j["cutpoint"] = to_string(report.cutpoint);
  j["empty_word"] = report.empty_word;

  const auto& m = report.sequence_map;
  Json map;
  map["instance_reversed"] = m.instance_reversed;
  map["merged_pair"] = m.merged_pair ? Json(*m.merged_pair) : Json(nullptr);
  map["word_reversed"] = m.word_reversed;
  if (m.binary) {
    const TauCode code(m.code_symbols.size());
    Json table = Json::array();
    for (std::size_t i = 0; i < m.code_symbols.size(); ++i) {
      table.push_back(Json{{"pair", m.code_symbols[i]}, {"codeword", code.codeword(i + 1)}});
    }
    map["code"] = std::move(table);
  }
  j["sequence_map"] = std::move(map);
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    throw InvalidInput(path + " is not valid JSON: " + e.what());
  }
}

std::string dump(const Json& json) { return json.dump(2) + "\n"; }

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path);
  out << text;
  if (!out) throw InvalidInput("failed writing " + path);
}

}  // namespace pfa
