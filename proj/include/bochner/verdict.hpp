// Copyright 2026 The bochner-scan Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <string>

namespace bochner {

struct Witness {
  std::string associate;  // associate label, e.g. "psi_b2"
  double r = 0.0;
  double margin = 0.0;  // signed; negative means violated
};

/// Outcome of one necessary condition. A single detection is conclusive:
/// the transform cannot be nonnegative.
struct TestVerdict {
  std::string criterion;
  bool detected = false;
  std::optional<Witness> witness;  // present iff detected
  std::size_t cost = 0;            // function evaluations spent

  /// "psi_b@1.25" or "" when undetected.
  std::string witness_string() const;
};

}  // namespace bochner
