// Copyright 2026 The cuttree Authors
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

#include "dinic.hpp"

#include <algorithm>

#include "cuttree/errors.hpp"

namespace cuttree::detail {

std::uint32_t Dinic::add_arc_pair(std::uint32_t u, std::uint32_t v, Weight forward,
                                  Weight backward) {
  auto index = static_cast<std::uint32_t>(head_.size());
  tail_.push_back(u);
  head_.push_back(v);
  cap_.push_back(forward);
  tail_.push_back(v);
  head_.push_back(u);
  cap_.push_back(backward);
  return index;
}

void Dinic::finalize() {
  original_ = cap_;
  touched_flag_.assign(cap_.size(), 0);
  first_.assign(nodes_ + 1, 0);
  for (auto u : tail_) ++first_[u + 1];
  for (std::size_t i = 0; i < nodes_; ++i) first_[i + 1] += first_[i];
  order_.resize(tail_.size());
  std::vector<std::uint32_t> fill(first_.begin(), first_.end() - 1);
  for (std::uint32_t a = 0; a < tail_.size(); ++a) order_[fill[tail_[a]]++] = a;
  level_.assign(nodes_, -1);
  next_arc_.assign(nodes_, 0);
}

void Dinic::touch(std::uint32_t arc) {
  if (!touched_flag_[arc]) {
    touched_flag_[arc] = 1;
    touched_.push_back(arc);
  }
}

void Dinic::reset() {
  for (auto a : touched_) {
    cap_[a] = original_[a];
    touched_flag_[a] = 0;
  }
  touched_.clear();
}

bool Dinic::build_levels(std::uint32_t s, std::uint32_t t) {
  for (auto v : visited_) level_[v] = -1;
  visited_.clear();
  queue_.clear();
  level_[s] = 0;
  visited_.push_back(s);
  queue_.push_back(s);
  std::int32_t sink_level = -1;
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    auto u = queue_[head];
    if (sink_level >= 0 && level_[u] >= sink_level) break;
    for (auto it = out_begin(u); it != out_end(u); ++it) {
      auto v = head_[*it];
      if (cap_[*it] > 0 && level_[v] < 0) {
        level_[v] = level_[u] + 1;
        visited_.push_back(v);
        queue_.push_back(v);
        if (v == t) sink_level = level_[v];
      }
    }
  }
  for (auto v : visited_) next_arc_[v] = first_[v];
  return level_[t] >= 0;
}

Weight Dinic::blocking_flow(std::uint32_t s, std::uint32_t t, Weight limit) {
  Weight total = 0;
  path_.clear();
  const std::int32_t sink_level = level_[t];
  while (total < limit) {
    std::uint32_t u = path_.empty() ? s : head_[path_.back()];
    if (u == t) {
      Weight push = limit - total;
      for (auto a : path_) push = std::min(push, cap_[a]);
      std::size_t first_saturated = path_.size();
      for (std::size_t i = 0; i < path_.size(); ++i) {
        auto a = path_[i];
        cap_[a] -= push;
        cap_[a ^ 1U] += push;
        touch(a);
        touch(a ^ 1U);
        if (cap_[a] == 0 && first_saturated == path_.size()) first_saturated = i;
      }
      total += push;
      path_.resize(first_saturated);
      continue;
    }
    bool advanced = false;
    for (auto& it = next_arc_[u]; it < first_[u + 1]; ++it) {
      auto a = order_[it];
      auto v = head_[a];
      if (cap_[a] > 0 && level_[v] == level_[u] + 1 && (level_[v] < sink_level || v == t)) {
        path_.push_back(a);
        advanced = true;
        break;
      }
    }
    if (advanced) continue;
    if (u == s) break;
    level_[u] = -1;  // dead end for this phase
    path_.pop_back();
    // the arc into u is exhausted for this phase
    ++next_arc_[path_.empty() ? s : head_[path_.back()]];
  }
  return total;
}

Weight Dinic::augment(std::uint32_t s, std::uint32_t t, Weight limit) {
  if (s >= nodes_ || t >= nodes_ || s == t) throw InputError("invalid flow terminals");
  Weight total = 0;
  while (total < limit && build_levels(s, t)) {
    Weight pushed = blocking_flow(s, t, limit - total);
    if (pushed == 0) break;
    total += pushed;
  }
  return total;
}

std::vector<char> Dinic::reachable_from(std::uint32_t s) const {
  std::vector<char> seen(nodes_, 0);
  std::vector<std::uint32_t> stack{s};
  seen[s] = 1;
  while (!stack.empty()) {
    auto u = stack.back();
    stack.pop_back();
    for (auto it = out_begin(u); it != out_end(u); ++it) {
      auto v = head_[*it];
      if (cap_[*it] > 0 && !seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
    }
  }
  return seen;
}

std::vector<char> Dinic::reaching(std::uint32_t t) const {
  // arc a = (u -> v) with residual > 0 lets u reach v; walk reverse arcs a^1
  // stored at v to find such u.
  std::vector<char> seen(nodes_, 0);
  std::vector<std::uint32_t> stack{t};
  seen[t] = 1;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto it = out_begin(v); it != out_end(v); ++it) {
      auto forward = *it ^ 1U;
      auto u = tail_[forward];
      if (cap_[forward] > 0 && !seen[u]) {
        seen[u] = 1;
        stack.push_back(u);
      }
    }
  }
  return seen;
}

}  // namespace cuttree::detail
