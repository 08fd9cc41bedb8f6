#pragma once

#include <cstdint>
#include <optional>

#include "pellbraid/oracle.hpp"
#include "pellbraid/sequences.hpp"

namespace pellbraid {

/// One GCD-of-sums query: window length k, power m. m = 2 closed forms exist
/// only for pell and qell; every other (kind, 2) pair is oracle-only.
struct CurlQuery {
  SequenceKind kind;
  std::int64_t k;
  std::int64_t m = 1;

  bool operator==(const CurlQuery&) const = default;
};

/// Whether the theory supplies a closed form for this query.
bool has_closed_form(const CurlQuery& query);

/// Closed-form value of the GCD of all sums of k consecutive m-th powers.
/// Pure formula evaluation; never consults the oracle. Throws
/// UnsupportedQueryError when has_closed_form is false.
///
/// m = 1:  P: 2P_{k/2} / Q_{k/2} / 1 on k mod 4 = 0 / 2 / odd
///         Q: 2P_{k/2} / 2Q_{k/2} / 1 on the same split
///         B: P_k/2 (k even) or Q_k        C: 2P_k (k even) or Q_k
///         c: 4P_k (k even) or Q_k         b: gcd(P_k,k) (k even) or
///                                            2 gcd(Q_k,k) (k odd)
/// m = 2:  P: P_k/2 (k even) or 1          Q: P_k (k even) or 1
Integer curl_closed(const CurlQuery& query);

/// The two-gcd intermediary form of the cobalancing curl:
/// gcd((B_k-k)/2, P_k) for even k, gcd((B_k-k)/2, 2Q_k) for odd k.
/// B_k = k (mod 2) is verified, not assumed. Equals
/// curl_closed({Cobalancing, k, 1}).
Integer curl_b_intermediary(std::int64_t k);

/// The three observed squared-sum relations, tested through the oracle.
enum class Observation {
  BVsC,    // curl_B^2(k) = curl_C^2(k)/2 (k even) or curl_C^2(k) (k odd)
  CVsc,    // curl_C^2(k) = curl_c^2(k), except /3 when k = 3 (mod 6)
  BMod4,   // curl_b^2(k) = 0 (mod 4)
};

/// Verdict plus the values behind it. The observation asserts lhs ==
/// expected; rhs is the unscaled partner value (for BMod4, the residue).
/// A division by 2 or 3 that comes out inexact falsifies the observation
/// rather than throwing.
struct ObservationResult {
  bool holds;
  Integer lhs;
  Integer rhs;
  Integer expected;

  bool operator==(const ObservationResult&) const = default;
};

ObservationResult observation_check(Observation which, std::int64_t k,
                                    std::int64_t horizon);

/// Closed form vs oracle for one query. closed_form is empty for oracle-only
/// queries; agree is then vacuously true.
struct GcdReport {
  SequenceKind kind;
  std::int64_t k;
  std::int64_t m;
  std::optional<Integer> closed_form;
  Integer oracle;
  bool agree;
  std::int64_t horizon;
  std::int64_t stabilized_at;

  bool operator==(const GcdReport&) const = default;
};

GcdReport curl_report(const CurlQuery& query, std::int64_t horizon);

}  // namespace pellbraid
