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

// JSON formats. Rationals are always strings "num/den" in lowest terms.
// Malformed documents throw InvalidInput.

#ifndef PFA_IO_HPP_
#define PFA_IO_HPP_

#include <string>
#include <variant>

#include "json.hpp"

#include "pfa/automaton.hpp"
#include "pfa/pcp.hpp"
#include "pfa/pipeline.hpp"
#include "pfa/semithue.hpp"

namespace pfa {

using Json = nlohmann::ordered_json;

inline constexpr int kPfaFormatVersion = 1;

using AnyInstance = std::variant<PcpInstance, GpcpInstance>;

// {"kind": "pcp"|"gpcp", "alphabet": ["0","1"], "pairs": [{"top","bottom"}],
//  "start_index": i, "end_index": j}; kind defaults to pcp, markers optional.
Json to_json(const PcpInstance& instance);
Json to_json(const GpcpInstance& instance);
AnyInstance instance_from_json(const Json& json);
PcpInstance pcp_from_json(const Json& json);  // rejects kind gpcp

// {"alphabet": [...], "rules": [{"l","r"}], "source", "target"}
Json to_json(const WordProblem& problem);
WordProblem word_problem_from_json(const Json& json);

// {"version", "states", "alphabet", "matrices": {symbol: rows}, "start",
//  "output", "cutpoint", "strict", "stochastic_kind"}
Json to_json(const Pfa& pfa);
Pfa pfa_from_json(const Json& json);

Json to_json(const BuildReport& report);

Json read_json_file(const std::string& path);
// Pretty-printed with a trailing newline.
std::string dump(const Json& json);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace pfa

#endif  // PFA_IO_HPP_
