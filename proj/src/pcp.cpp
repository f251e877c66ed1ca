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

#include "pfa/pcp.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "pfa/error.hpp"

namespace pfa {
namespace {

void validate_pairs(const std::string& alphabet,
                    const std::vector<WordPair>& pairs) {
  std::string sorted = alphabet;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidInput("alphabet \"" + alphabet + "\" repeats a symbol");
  }
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (const auto* word : {&pairs[i].top, &pairs[i].bottom}) {
      for (char c : *word) {
        if (alphabet.find(c) == std::string::npos) {
          throw InvalidInput("pair " + std::to_string(i + 1) + " uses symbol '" +
                             std::string(1, c) + "' outside the alphabet");
        }
      }
    }
  }
}

bool any_empty(const std::vector<WordPair>& pairs) {
  return std::any_of(pairs.begin(), pairs.end(), [](const WordPair& p) {
    return p.top.empty() || p.bottom.empty();
  });
}

std::pair<std::string, std::string> concatenate(
    const std::vector<WordPair>& pairs, const IndexSequence& indices) {
  std::pair<std::string, std::string> out;
  for (std::size_t i : indices) {
    if (i < 1 || i > pairs.size()) {
      throw InvalidInput("pair index " + std::to_string(i) +
                         " outside 1.." + std::to_string(pairs.size()));
    }
    out.first += pairs[i - 1].top;
    out.second += pairs[i - 1].bottom;
  }
  return out;
}

// Configuration of a partial solution: which row leads and by how much.
struct Config {
  int lead = 0;  // +1 top ahead, -1 bottom ahead, 0 balanced
  std::string overhang;

  std::string key() const {
    return (lead > 0 ? '+' : lead < 0 ? '-' : '=') + overhang;
  }
};

std::optional<Config> extend(const Config& c, const WordPair& p) {
  const std::string top = (c.lead > 0 ? c.overhang : std::string()) + p.top;
  const std::string bottom = (c.lead < 0 ? c.overhang : std::string()) + p.bottom;
  if (top.size() >= bottom.size()) {
    if (top.compare(0, bottom.size(), bottom) != 0) return std::nullopt;
    Config out{top.size() == bottom.size() ? 0 : 1, top.substr(bottom.size())};
    return out;
  }
  if (bottom.compare(0, top.size(), top) != 0) return std::nullopt;
  return Config{-1, bottom.substr(top.size())};
}

// Which indices may be appended, and which of them can close a solution.
struct Shape {
  std::vector<std::size_t> first;
  std::vector<std::size_t> middle;  // may follow and be followed
  std::vector<std::size_t> last;    // may follow; only ends a solution
};

SolveResult solve(const std::vector<WordPair>& pairs, const Shape& shape,
                  const SolveLimits& limits, const PartialVisitor& visitor) {
  if (limits.max_steps == 0 || limits.max_overhang == 0) {
    throw InvalidInput("solver limits must be positive");
  }
  struct Node {
    std::size_t parent;
    std::size_t index;
    Config config;
    std::size_t depth;
  };
  constexpr std::size_t kRoot = static_cast<std::size_t>(-1);
  std::vector<Node> nodes;
  std::unordered_set<std::string> visited;
  std::deque<std::size_t> frontier;
  SolveResult result;
  bool cut = false;

  auto path_of = [&](std::size_t node, std::size_t last) {
    IndexSequence path{last};
    for (std::size_t n = node; n != kRoot; n = nodes[n].parent)
      path.push_back(nodes[n].index);
    std::reverse(path.begin(), path.end());
    return path;
  };

  // Expands `from` (kRoot for the empty sequence). Returns a solution if one
  // is produced; otherwise stores new configurations when `store` is set,
  // or only records that a live child exists.
  auto expand = [&](std::size_t from, bool store) -> std::optional<IndexSequence> {
    // Copied: nodes may reallocate below.
    const Config config = from == kRoot ? Config{} : nodes[from].config;
    const std::size_t depth = from == kRoot ? 0 : nodes[from].depth;
    std::vector<std::pair<std::size_t, bool>> moves;  // (index, closes only)
    for (std::size_t i : from == kRoot ? shape.first : shape.middle)
      moves.emplace_back(i, false);
    if (from != kRoot)
      for (std::size_t i : shape.last) moves.emplace_back(i, true);
    std::sort(moves.begin(), moves.end());
    for (auto [index, closes_only] : moves) {
      auto next = extend(config, pairs[index - 1]);
      if (!next) continue;
      if (next->lead == 0 && (closes_only || shape.last.empty())) {
        if (!store) {
          cut = true;
          continue;
        }
        return path_of(from, index);
      }
      if (closes_only) continue;
      if (next->overhang.size() > limits.max_overhang) {
        cut = true;
        continue;
      }
      const std::string key = next->key();
      if (visited.contains(key)) continue;
      if (!store) {
        cut = true;
        continue;
      }
      visited.insert(key);
      nodes.push_back(Node{from, index, std::move(*next), depth + 1});
      frontier.push_back(nodes.size() - 1);
      if (visitor) visitor(path_of(from, index));
    }
    return std::nullopt;
  };

  if (auto s = expand(kRoot, true)) {
    result.status = SearchStatus::found;
    result.solution = std::move(s);
    result.configurations = nodes.size();
    return result;
  }
  while (!frontier.empty()) {
    const std::size_t n = frontier.front();
    frontier.pop_front();
    const bool store = nodes[n].depth < limits.max_steps;
    if (auto s = expand(n, store)) {
      result.status = SearchStatus::found;
      result.solution = std::move(s);
      result.configurations = nodes.size();
      return result;
    }
  }
  result.status = cut ? SearchStatus::limit_reached : SearchStatus::closed;
  result.configurations = nodes.size();
  return result;
}

std::vector<std::size_t> range(std::size_t lo, std::size_t hi) {
  std::vector<std::size_t> r;
  for (std::size_t i = lo; i <= hi; ++i) r.push_back(i);
  return r;
}

}  // namespace

bool PcpInstance::has_empty_word() const { return any_empty(pairs); }
bool GpcpInstance::has_empty_word() const { return any_empty(pairs); }

void PcpInstance::validate() const {
  if (pairs.empty()) throw InvalidInput("a PCP instance needs at least one pair");
  validate_pairs(alphabet, pairs);
  for (const auto& marker : {forced_start, forced_end}) {
    if (marker && (*marker < 1 || *marker > pairs.size())) {
      throw InvalidInput("structure marker " + std::to_string(*marker) +
                         " outside 1.." + std::to_string(pairs.size()));
    }
  }
}

void GpcpInstance::validate() const {
  if (pairs.size() < 2) {
    throw InvalidInput("a GPCP instance needs a start pair and an end pair");
  }
  validate_pairs(alphabet, pairs);
}

std::pair<std::string, std::string> apply(const PcpInstance& instance,
                                          const IndexSequence& indices) {
  return concatenate(instance.pairs, indices);
}

std::pair<std::string, std::string> apply(const GpcpInstance& instance,
                                          const IndexSequence& indices) {
  return concatenate(instance.pairs, indices);
}

bool is_solution(const PcpInstance& instance, const IndexSequence& indices) {
  if (indices.empty()) return false;
  const auto [top, bottom] = apply(instance, indices);
  return top == bottom;
}

bool is_solution(const GpcpInstance& instance, const IndexSequence& indices) {
  if (indices.size() < 2 || indices.front() != 1 || indices.back() != 2) {
    return false;
  }
  for (std::size_t j = 1; j + 1 < indices.size(); ++j) {
    if (indices[j] < 3) return false;
  }
  const auto [top, bottom] = apply(instance, indices);
  return top == bottom;
}

SolveResult bounded_solve(const PcpInstance& instance, const SolveLimits& limits,
                          const PartialVisitor& visitor) {
  const auto all = range(1, instance.size());
  return solve(instance.pairs, Shape{all, all, {}}, limits, visitor);
}

SolveResult bounded_solve(const GpcpInstance& instance, const SolveLimits& limits,
                          const PartialVisitor& visitor) {
  if (instance.size() < 2) {
    throw InvalidInput("a GPCP instance needs a start pair and an end pair");
  }
  return solve(instance.pairs, Shape{{1}, range(3, instance.size()), {2}},
               limits, visitor);
}

PcpInstance reverse(const PcpInstance& instance) {
  PcpInstance out = instance;
  for (auto& p : out.pairs) {
    std::reverse(p.top.begin(), p.top.end());
    std::reverse(p.bottom.begin(), p.bottom.end());
  }
  std::swap(out.forced_start, out.forced_end);
  return out;
}

IndexSequence reversed(IndexSequence indices) {
  std::reverse(indices.begin(), indices.end());
  return indices;
}

std::string to_string(const IndexSequence& indices) {
  std::string s = "[";
  for (std::size_t j = 0; j < indices.size(); ++j) {
    if (j) s += ',';
    s += std::to_string(indices[j]);
  }
  return s + "]";
}

std::string to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::found:
      return "found";
    case SearchStatus::closed:
      return "closed";
    case SearchStatus::limit_reached:
      return "limit_reached";
  }
  return "unknown";
}

}  // namespace pfa
