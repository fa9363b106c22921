// Copyright (c) 2026 xopzeros contributors
// SPDX-License-Identifier: Apache-2.0
#include "xop/roots.hpp"

namespace xop {

bool check_simplicity(const ExactPoly& p)
{
  if (p.degree() < 1) return true;
  return ExactPoly::gcd(p, p.derivative()).degree() == 0;
}

}  // namespace xop
