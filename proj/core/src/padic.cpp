#include "pellbraid/padic.hpp"

#include <map>
#include <stdexcept>

namespace pellbraid {

namespace {

// Step function of the kind's recurrence mod p, on the state (s_{n-1}, s_n).
struct ModularRecurrence {
  std::int64_t p;
  std::int64_t mult;
  std::int64_t sub;    // sign of the s_{n-2} coefficient
  std::int64_t drift;

  std::int64_t step(std::int64_t prev, std::int64_t cur) const {
    std::int64_t next = (mult * cur % p + sub * prev + drift) % p;
    return next < 0 ? next + p : next;
  }
};

struct ModularInit {
  std::int64_t s0;
  std::int64_t s1;
};

ModularRecurrence modular_recurrence(SequenceKind kind, std::int64_t p) {
  switch (kind) {
    case SequenceKind::Pell:
    case SequenceKind::AssociatedPell:
      return {p, 2, +1, 0};
    case SequenceKind::Cobalancing:
      return {p, 6, -1, 2};
    default:
      return {p, 6, -1, 0};
  }
}

ModularInit modular_init(SequenceKind kind, std::int64_t p) {
  switch (kind) {
    case SequenceKind::Pell:             return {0 % p, 1 % p};
    case SequenceKind::AssociatedPell:   return {1 % p, 1 % p};
    case SequenceKind::Balancing:        return {0 % p, 1 % p};
    case SequenceKind::LucasBalancing:   return {1 % p, 3 % p};
    case SequenceKind::Cobalancing:      return {0, 0};
    case SequenceKind::LucasCobalancing: return {(p - 1) % p, 1 % p};
  }
  throw std::logic_error("unreachable: bad SequenceKind");
}

void require_prime(std::int64_t p) {
  if (!is_prime(p)) throw std::domain_error("p must be prime");
}

std::vector<std::int64_t> prime_factors(std::int64_t k) {
  std::vector<std::int64_t> factors;
  for (std::int64_t d = 2; d * d <= k; ++d) {
    if (k % d == 0) {
      factors.push_back(d);
      while (k % d == 0) k /= d;
    }
  }
  if (k > 1) factors.push_back(k);
  return factors;
}

std::int64_t nu2(const Integer& n) {
  return static_cast<std::int64_t>(mpz_scan1(n.get_mpz_t(), 0));
}

}  // namespace

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::int64_t nu(std::int64_t p, const Integer& n) {
  require_prime(p);
  if (n == 0) throw std::domain_error("nu(p, 0) is infinite");
  Integer factor(static_cast<long>(p));
  Integer stripped;
  return static_cast<std::int64_t>(mpz_remove(
      stripped.get_mpz_t(), n.get_mpz_t(), factor.get_mpz_t()));
}

IdentityReport verify_nu2_pell(std::int64_t k_max) {
  if (k_max < 1) throw std::domain_error("k_max must be >= 1");
  IdentityReport report{"nu2_pell", {{"k", 1, k_max}}, 0, {}};
  auto pell = terms(SequenceKind::Pell, 0, k_max + 1);
  for (std::int64_t k = 1; k <= k_max; ++k) {
    ++report.checked;
    std::int64_t lhs = nu2(pell[k]);
    std::int64_t rhs = nu2(Integer(k));
    if (lhs != rhs)
      report.failures.push_back({{{"k", k}}, Integer(lhs), Integer(rhs)});
  }
  return report;
}

IdentityReport verify_nu2_product(std::int64_t k_max) {
  if (k_max < 2) throw std::domain_error("k_max must be >= 2");
  IdentityReport report{"nu2_pell_qell_product", {{"k", 2, k_max}}, 0, {}};
  auto pell = terms(SequenceKind::Pell, 0, k_max + 1);
  auto qell = terms(SequenceKind::AssociatedPell, 0, k_max + 1);
  for (std::int64_t k = 2; k <= k_max; ++k) {
    ++report.checked;
    Integer value = pell[k] * qell[k] - k;
    if (!mpz_divisible_ui_p(value.get_mpz_t(), 4))
      report.failures.push_back({{{"k", k}}, Integer(nu2(value)), Integer(2)});
  }
  return report;
}

EntryPointRecord entry_point(SequenceKind kind, std::int64_t p) {
  require_prime(p);
  const ModularRecurrence rec = modular_recurrence(kind, p);
  const auto [s0, s1] = modular_init(kind, p);

  std::optional<std::int64_t> entry;
  if (s1 == 0) entry = 1;
  std::int64_t prev = s0;
  std::int64_t cur = s1;
  std::int64_t t = 0;
  do {
    std::int64_t next = rec.step(prev, cur);
    prev = cur;
    cur = next;
    ++t;  // (prev, cur) is now (S_t, S_{t+1}) mod p
    if (!entry && cur == 0) entry = t + 1;
  } while (prev != s0 || cur != s1);
  return {kind, p, entry, t};
}

std::vector<ConjectureFinding> conjecture_scan(std::int64_t k_max) {
  if (k_max < 1) throw std::domain_error("k_max must be >= 1");
  auto qell = terms(SequenceKind::AssociatedPell, 0, k_max + 1);
  std::map<std::int64_t, std::optional<std::int64_t>> entry_cache;
  std::vector<ConjectureFinding> findings;
  findings.reserve(static_cast<std::size_t>(k_max));
  for (std::int64_t k = 1; k <= k_max; ++k) {
    ConjectureFinding finding{k, gcd(qell[k], Integer(k)), {}, false};
    for (std::int64_t p : prime_factors(k)) {
      auto [it, inserted] = entry_cache.try_emplace(p);
      if (inserted) it->second = entry_point(SequenceKind::AssociatedPell, p).entry;
      const auto& e = it->second;
      // p | Q_k exactly when k is an odd multiple of e_Q(p).
      if (e && k % *e == 0 && (k / *e) % 2 == 1)
        finding.witnesses.push_back({p, *e});
    }
    finding.biconditional_holds =
        (finding.gcd_qk_k > 1) == !finding.witnesses.empty();
    findings.push_back(std::move(finding));
  }
  return findings;
}

}  // namespace pellbraid
