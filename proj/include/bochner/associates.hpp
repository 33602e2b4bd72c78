// Copyright 2026 The bochner-scan Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bochner/gauss_poly.hpp"

namespace bochner {

enum class AssociateKind { Base, D2q, Conv, ConvD2q };

/// Label and provenance of one associate: psi, psi_{2q}, psi_b or psi_{b,2q}.
struct AssociateTag {
  AssociateKind kind = AssociateKind::Base;
  int q = 0;
  double b = 0.0;

  /// "psi", "psi_2", "psi_b", "psi_b4", ...
  std::string label() const;
};

struct Associate {
  AssociateTag tag;
  GaussPoly f;
};

/// Positivity-preserving images of a base function. If the base transform is
/// nonnegative, so is every entry's.
struct AssociateSet {
  std::vector<Associate> entries;
  std::optional<double> b;
  int qmax = 0;

  const GaussPoly& base() const { return entries.front().f; }
  const Associate* find(const std::string& label) const;
  /// Subset in the given label order; unknown labels throw std::out_of_range.
  AssociateSet subset(const std::vector<std::string>& labels) const;
};

/// {psi} + {psi_2q}_{q<=qmax} + {psi_b} + {psi_b,2q}_{q<=qmax} (the convolution
/// block only when b is given).
AssociateSet build_associates(const GaussPoly& f, std::optional<double> b, int qmax);

}  // namespace bochner
