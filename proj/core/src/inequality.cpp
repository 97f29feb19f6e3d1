// Copyright 2026 The dichoq Authors
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

#include "dichoq/inequality.hpp"

#include <algorithm>
#include <limits>

namespace dichoq {

void InequalityReport::add_lower_bound(std::string name, double value, double bound) {
  const double slack = value - bound;
  entries_.push_back({std::move(name), value, bound, slack, slack >= -kInequalityTolerance});
}

void InequalityReport::add_upper_bound(std::string name, double value, double bound) {
  const double slack = bound - value;
  entries_.push_back({std::move(name), value, bound, slack, slack >= -kInequalityTolerance});
}

void InequalityReport::append(const InequalityReport& other, std::string_view prefix) {
  for (auto e : other.entries_) {
    e.name.insert(0, prefix);
    entries_.push_back(std::move(e));
  }
  for (const auto& [k, v] : other.diagnostics_) diagnostics_[std::string(prefix) + k] = v;
}

std::optional<InequalityEntry> InequalityReport::find(std::string_view name) const {
  auto it = std::find_if(entries_.begin(), entries_.end(),
                         [&](const InequalityEntry& e) { return e.name == name; });
  if (it == entries_.end()) return std::nullopt;
  return *it;
}

bool InequalityReport::all_satisfied() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const InequalityEntry& e) { return e.satisfied; });
}

double InequalityReport::min_slack() const noexcept {
  double s = std::numeric_limits<double>::infinity();
  for (const auto& e : entries_) s = std::min(s, e.slack);
  return s;
}

}  // namespace dichoq
