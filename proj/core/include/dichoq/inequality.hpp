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

#pragma once

#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dichoq {

/// Slack below -kInequalityTolerance counts as a violation.
inline constexpr double kInequalityTolerance = 1e-10;

struct InequalityEntry {
  std::string name;
  double lhs = 0.0;
  double bound = 0.0;
  /// Distance to the bound, positive when satisfied. +inf for entries satisfied at infinity.
  double slack = 0.0;
  bool satisfied = true;

  bool saturated(double tol = kInequalityTolerance) const noexcept { return std::abs(slack) < tol; }
};

class InequalityReport {
 public:
  /// Records value >= bound.
  void add_lower_bound(std::string name, double value, double bound);
  /// Records value <= bound.
  void add_upper_bound(std::string name, double value, double bound);
  void add(InequalityEntry entry) { entries_.push_back(std::move(entry)); }
  /// Appends other's entries, prefixing names; diagnostics are merged with the same prefix.
  void append(const InequalityReport& other, std::string_view prefix = {});

  void set_diagnostic(std::string name, double value) { diagnostics_[std::move(name)] = value; }

  const std::vector<InequalityEntry>& entries() const noexcept { return entries_; }
  const std::map<std::string, double>& diagnostics() const noexcept { return diagnostics_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const InequalityEntry& operator[](std::size_t i) const noexcept { return entries_[i]; }

  std::optional<InequalityEntry> find(std::string_view name) const;
  bool all_satisfied() const noexcept;
  /// Smallest slack over all entries; +inf for an empty report.
  double min_slack() const noexcept;

 private:
  std::vector<InequalityEntry> entries_;
  std::map<std::string, double> diagnostics_;
};

}  // namespace dichoq
