#pragma once

#include <cstdint>

#include "pellbraid/sequences.hpp"

namespace pellbraid {

/// Finite-horizon evidence for the GCD of all sums of k consecutive m-th
/// powers. value folds gcd over the sums at offsets n = 0..horizon-1; the
/// true (infinite) GCD divides value, and equality is what tests assert
/// against the closed forms.
struct OracleResult {
  Integer value;
  std::int64_t horizon;
  /// Smallest prefix length after which the running gcd stopped changing.
  std::int64_t stabilized_at;
  /// Running gcd at horizon/2 already equals the final value.
  bool stable;

  bool operator==(const OracleResult&) const = default;
};

/// sum_{i=1..k} term(kind, n+i)^m by direct evaluation.
Integer power_sum(SequenceKind kind, std::int64_t k, std::int64_t m,
                  std::int64_t n);

/// Fold gcd over power sums at offsets 0..horizon-1 (horizon >= 2). The fold
/// may stop early once the running gcd reaches 1.
OracleResult curl_oracle(SequenceKind kind, std::int64_t k, std::int64_t m,
                         std::int64_t horizon);

}  // namespace pellbraid
