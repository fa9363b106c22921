// Copyright (c) 2026 xopzeros contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

namespace xop {

/// Non-decreasing sequence of non-negative integers. The empty partition is
/// legal and indexes the classical family.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  /// Parses the CLI literal, e.g. "1,1,3,3". Empty string gives the empty partition.
  static Partition parse(const std::string& literal);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;

  /// Even length with equal consecutive pairs. True for the empty partition.
  bool is_double() const;

  std::string str() const;

 private:
  std::vector<int> parts_;
};

}  // namespace xop
