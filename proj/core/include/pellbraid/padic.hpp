#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pellbraid/identities.hpp"
#include "pellbraid/sequences.hpp"

namespace pellbraid {

/// True iff p is prime (trial division; scan-scale inputs only).
bool is_prime(std::int64_t p);

/// p-adic valuation: the exponent of p in |n|. Throws std::domain_error for
/// composite p or n = 0 (infinite valuation).
std::int64_t nu(std::int64_t p, const Integer& n);

/// nu_2(P_k) = nu_2(k) for k in [1, k_max].
IdentityReport verify_nu2_pell(std::int64_t k_max);

/// nu_2(P_k Q_k - k) >= 2 for k in [2, k_max], i.e. 4 | (B_k - k).
IdentityReport verify_nu2_product(std::int64_t k_max);

/// Entry point (rank of apparition) of a prime in one sequence, found by
/// iterating the recurrence modulo p. period is the length after which the
/// initial state pair recurs; entry is absent when no term in one full
/// period is divisible by p.
struct EntryPointRecord {
  SequenceKind kind;
  std::int64_t p;
  std::optional<std::int64_t> entry;
  std::int64_t period;

  bool operator==(const EntryPointRecord&) const = default;
};

EntryPointRecord entry_point(SequenceKind kind, std::int64_t p);

struct ConjectureWitness {
  std::int64_t p;
  std::int64_t entry;

  bool operator==(const ConjectureWitness&) const = default;
};

/// Verdict for one k of the gcd(Q_k, k) entry-point criterion. A witness is
/// a prime p | k whose entry point e_Q(p) divides k with odd quotient (the
/// divisibility law for the associated sequence: p | Q_n exactly when n is
/// an odd multiple of e_Q(p)).
struct ConjectureFinding {
  std::int64_t k;
  Integer gcd_qk_k;
  std::vector<ConjectureWitness> witnesses;
  bool biconditional_holds;

  bool operator==(const ConjectureFinding&) const = default;
};

/// Scan k = 1..k_max. Findings with biconditional_holds = false are
/// counterexamples; callers surface them loudly.
std::vector<ConjectureFinding> conjecture_scan(std::int64_t k_max);

}  // namespace pellbraid
