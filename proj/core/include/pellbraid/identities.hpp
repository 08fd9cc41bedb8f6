#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pellbraid/sequences.hpp"

namespace pellbraid {

/// One failed parameter tuple of an identity sweep, with both evaluated sides.
struct IdentityFailure {
  std::vector<std::pair<std::string, std::int64_t>> params;
  Integer lhs;
  Integer rhs;

  bool operator==(const IdentityFailure&) const = default;
};

struct ParameterRange {
  std::string name;
  std::int64_t lo;
  std::int64_t hi;

  bool operator==(const ParameterRange&) const = default;
};

/// Result of sweeping one identity over a parameter grid. failures is empty
/// iff the identity held at every checked tuple; sweeps report all failures,
/// not just the first.
struct IdentityReport {
  std::string identity_id;
  std::vector<ParameterRange> ranges;
  std::int64_t checked = 0;
  std::vector<IdentityFailure> failures;

  bool ok() const { return failures.empty(); }
  bool operator==(const IdentityReport&) const = default;
};

/// Both sides of an identity, evaluated independently.
struct IdentityPair {
  Integer lhs;
  Integer rhs;

  bool holds() const { return lhs == rhs; }
  bool operator==(const IdentityPair&) const = default;
};

/// Closed form for sum_{i=1..k} S_i:
///   P: (Q_{k+1}-1)/2      Q: P_{k+1}-1          B: (P_{2k+1}-1)/4
///   C: (Q_{2k+1}-1)/2     b: (b_{k+1}-b_k-2k)/4 c: (Q_{2k}-1)/2
/// Divisions are checked exact; an inexact one throws
/// InternalInconsistencyError.
Integer prefix_sum_closed(SequenceKind kind, std::int64_t k);

/// Cassini: lhs = S_{k-1} S_{k+1}; rhs = P_k^2 + (-1)^k for Pell,
/// Q_k^2 + 2(-1)^{k-1} for the associated sequence. Other kinds are a
/// domain error.
IdentityPair cassini(SequenceKind kind, std::int64_t k);

enum class GcdIdentity {
  PellAdjacent,      // gcd(P_n, P_{n+1})      = 1
  QellAdjacent,      // gcd(Q_n, Q_{n+1})      = 1
  PellEvenTwoApart,  // gcd(P_{2n}, P_{2n+2})  = 2
  PellOddTwoApart,   // gcd(P_{2n-1}, P_{2n+1}) = 1
  QellTwoApart,      // gcd(Q_n, Q_{n+2})      = 1
};

Integer gcd_identity(GcdIdentity which, std::int64_t n);
long gcd_identity_expected(GcdIdentity which);

/// P_{s+r} - P_r, and its factorization 2P_{s/2}Q_{s/2+r} (s = 0 mod 4) or
/// 2Q_{s/2}P_{s/2+r} (s = 2 mod 4). s must be even and >= 2.
IdentityPair diff_factor_pell(std::int64_t s, std::int64_t r);

/// Q_{s+r} - Q_r against 4P_{s/2}P_{s/2+r} (s = 0 mod 4) or
/// 2Q_{s/2}Q_{s/2+r} (s = 2 mod 4).
IdentityPair diff_factor_qell(std::int64_t s, std::int64_t r);

/// sigma_S(k, n) = sum_{i=1..k} S_{n+i} by direct summation.
Integer sigma_direct(SequenceKind kind, std::int64_t k, std::int64_t n);

/// Closed form of sigma_S(k, n). P and Q factor into products only for even
/// k; for odd k the non-factored difference expressions are used. b uses
/// (B_{k+n} - B_n - k)/2.
Integer sigma_closed(SequenceKind kind, std::int64_t k, std::int64_t n);

/// lhs = (P_{2k+2i}-P_{2i})/2 - (P_{2k+2i-2}-P_{2i-2})/2;
/// rhs = 2P_k Q_{k+2i-1} for even k, 2Q_k P_{k+2i-1} for odd k.
IdentityPair t_term(std::int64_t k, std::int64_t i);

/// lhs = P_ell; rhs = sum_{i=1..ell/2} C(ell, 2i-1) 2^{i-1}. ell even >= 2.
IdentityPair pell_binomial(std::int64_t ell);

enum class BraidIdentity {
  BProduct,         // B_n = P_n Q_n
  BPiecewise,       // b_n = P_n Q_{n-1} (n even) / P_{n-1} Q_n (n odd)
  BPlus1Piecewise,  // b_n + 1 = P_{n-1} Q_n (n even) / P_n Q_{n-1} (n odd)
  DoubledBStep,     // 2B_n = b_{n+1} - b_n
};

IdentityPair braid_identity(BraidIdentity which, std::int64_t n);

// Grid sweeps. Each returns one report per identity; a report collects every
// failing tuple. All are pure and may run concurrently.
std::vector<IdentityReport> verify_sums(std::int64_t max_k);
std::vector<IdentityReport> verify_cassini(std::int64_t max_k);
std::vector<IdentityReport> verify_gcd_lemmas(std::int64_t max_n);
std::vector<IdentityReport> verify_diff_factors(std::int64_t max_s,
                                                std::int64_t max_r);
std::vector<IdentityReport> verify_sigma(std::int64_t max_k,
                                         std::int64_t max_n);
std::vector<IdentityReport> verify_t_lemma(std::int64_t max_k,
                                           std::int64_t max_i);
std::vector<IdentityReport> verify_pell_binomial(std::int64_t max_ell);
std::vector<IdentityReport> verify_braids(std::int64_t max_n);

}  // namespace pellbraid
