// Copyright (c) 2026 xopzeros contributors
// SPDX-License-Identifier: Apache-2.0
#include "xop/partition.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace xop {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("Partition: parts must be non-negative");
    if (i > 0 && parts_[i] < parts_[i - 1])
      throw std::invalid_argument("Partition: parts must be non-decreasing");
  }
}

Partition Partition::parse(const std::string& literal)
{
  std::vector<int> parts;
  std::stringstream ss(literal);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("Partition: bad literal '" + tok + "'");
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::is_double() const
{
  if (parts_.size() % 2 != 0) return false;
  for (size_t i = 0; i + 1 < parts_.size(); i += 2)
    if (parts_[i] != parts_[i + 1]) return false;
  return true;
}

std::string Partition::str() const
{
  std::string s;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s;
}

}  // namespace xop
