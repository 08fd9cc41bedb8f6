#include "pellbraid/identities.hpp"

#include <stdexcept>

#include "exact_div.hpp"
#include "pellbraid/errors.hpp"

namespace pellbraid {

using detail::exact_div;

namespace {

void require_positive(std::int64_t v, const char* name) {
  if (v < 1) throw std::domain_error(std::string(name) + " must be >= 1");
}

void require_even_step(std::int64_t s) {
  if (s < 2 || s % 2 != 0)
    throw std::domain_error("step s must be even and >= 2");
}

std::string sum_id(SequenceKind kind) {
  return "sum_" + std::string(kind_symbol(kind));
}

std::string sigma_id(SequenceKind kind) {
  return "sigma_" + std::string(kind_symbol(kind));
}

}  // namespace

Integer prefix_sum_closed(SequenceKind kind, std::int64_t k) {
  require_positive(k, "k");
  switch (kind) {
    case SequenceKind::Pell:
      return exact_div(term(SequenceKind::AssociatedPell, k + 1) - 1, 2,
                       "sum_P");
    case SequenceKind::AssociatedPell:
      return term(SequenceKind::Pell, k + 1) - 1;
    case SequenceKind::Balancing:
      return exact_div(term(SequenceKind::Pell, 2 * k + 1) - 1, 4, "sum_B");
    case SequenceKind::LucasBalancing:
      return exact_div(term(SequenceKind::AssociatedPell, 2 * k + 1) - 1, 2,
                       "sum_C");
    case SequenceKind::Cobalancing: {
      auto b = terms(SequenceKind::Cobalancing, k, 2);
      return exact_div(b[1] - b[0] - 2 * k, 4, "sum_b");
    }
    case SequenceKind::LucasCobalancing:
      return exact_div(term(SequenceKind::AssociatedPell, 2 * k) - 1, 2,
                       "sum_c");
  }
  throw std::logic_error("unreachable: bad SequenceKind");
}

IdentityPair cassini(SequenceKind kind, std::int64_t k) {
  require_positive(k, "k");
  if (kind != SequenceKind::Pell && kind != SequenceKind::AssociatedPell)
    throw std::domain_error("cassini is defined for pell and qell only");
  auto window = terms(kind, k - 1, 3);
  Integer lhs = window[0] * window[2];
  long sign = (k % 2 == 0) ? 1 : -1;
  Integer rhs = kind == SequenceKind::Pell
                    ? Integer(window[1] * window[1] + sign)
                    : Integer(window[1] * window[1] - 2 * sign);
  return {lhs, rhs};
}

Integer gcd_identity(GcdIdentity which, std::int64_t n) {
  require_positive(n, "n");
  switch (which) {
    case GcdIdentity::PellAdjacent: {
      auto w = terms(SequenceKind::Pell, n, 2);
      return gcd(w[0], w[1]);
    }
    case GcdIdentity::QellAdjacent: {
      auto w = terms(SequenceKind::AssociatedPell, n, 2);
      return gcd(w[0], w[1]);
    }
    case GcdIdentity::PellEvenTwoApart: {
      auto w = terms(SequenceKind::Pell, 2 * n, 3);
      return gcd(w[0], w[2]);
    }
    case GcdIdentity::PellOddTwoApart: {
      auto w = terms(SequenceKind::Pell, 2 * n - 1, 3);
      return gcd(w[0], w[2]);
    }
    case GcdIdentity::QellTwoApart: {
      auto w = terms(SequenceKind::AssociatedPell, n, 3);
      return gcd(w[0], w[2]);
    }
  }
  throw std::logic_error("unreachable: bad GcdIdentity");
}

long gcd_identity_expected(GcdIdentity which) {
  return which == GcdIdentity::PellEvenTwoApart ? 2 : 1;
}

IdentityPair diff_factor_pell(std::int64_t s, std::int64_t r) {
  require_even_step(s);
  require_positive(r, "r");
  Integer difference =
      term(SequenceKind::Pell, s + r) - term(SequenceKind::Pell, r);
  Integer factored =
      s % 4 == 0 ? Integer(2 * term(SequenceKind::Pell, s / 2) *
                           term(SequenceKind::AssociatedPell, s / 2 + r))
                 : Integer(2 * term(SequenceKind::AssociatedPell, s / 2) *
                           term(SequenceKind::Pell, s / 2 + r));
  return {difference, factored};
}

IdentityPair diff_factor_qell(std::int64_t s, std::int64_t r) {
  require_even_step(s);
  require_positive(r, "r");
  Integer difference = term(SequenceKind::AssociatedPell, s + r) -
                       term(SequenceKind::AssociatedPell, r);
  Integer factored =
      s % 4 == 0 ? Integer(4 * term(SequenceKind::Pell, s / 2) *
                           term(SequenceKind::Pell, s / 2 + r))
                 : Integer(2 * term(SequenceKind::AssociatedPell, s / 2) *
                           term(SequenceKind::AssociatedPell, s / 2 + r));
  return {difference, factored};
}

Integer sigma_direct(SequenceKind kind, std::int64_t k, std::int64_t n) {
  require_positive(k, "k");
  if (n < 0) throw std::domain_error("n must be >= 0");
  Integer sum = 0;
  for (const Integer& t : terms(kind, n + 1, k)) sum += t;
  return sum;
}

Integer sigma_closed(SequenceKind kind, std::int64_t k, std::int64_t n) {
  require_positive(k, "k");
  if (n < 0) throw std::domain_error("n must be >= 0");
  const auto P = [](std::int64_t i) { return term(SequenceKind::Pell, i); };
  const auto Q = [](std::int64_t i) {
    return term(SequenceKind::AssociatedPell, i);
  };
  switch (kind) {
    case SequenceKind::Pell:
      if (k % 4 == 0) return 2 * P(k / 2) * P(k / 2 + n + 1);
      if (k % 4 == 2) return Q(k / 2) * Q(k / 2 + n + 1);
      return exact_div(Q(n + k + 1) - Q(n + 1), 2, "sigma_P");
    case SequenceKind::AssociatedPell:
      if (k % 4 == 0) return 2 * P(k / 2) * Q(k / 2 + n + 1);
      if (k % 4 == 2) return 2 * Q(k / 2) * P(k / 2 + n + 1);
      return P(n + k + 1) - P(n + 1);
    case SequenceKind::Balancing:
      return k % 2 == 0 ? exact_div(P(k) * Q(k + 2 * n + 1), 2, "sigma_B")
                        : exact_div(Q(k) * P(k + 2 * n + 1), 2, "sigma_B");
    case SequenceKind::LucasBalancing:
      return k % 2 == 0 ? Integer(2 * P(k) * P(k + 2 * n + 1))
                        : Integer(Q(k) * Q(k + 2 * n + 1));
    case SequenceKind::LucasCobalancing:
      return k % 2 == 0 ? Integer(2 * P(k) * P(k + 2 * n))
                        : Integer(Q(k) * Q(k + 2 * n));
    case SequenceKind::Cobalancing: {
      Integer b_kn = term(SequenceKind::Balancing, k + n);
      Integer b_n = term(SequenceKind::Balancing, n);
      return exact_div(b_kn - b_n - k, 2, "sigma_b");
    }
  }
  throw std::logic_error("unreachable: bad SequenceKind");
}

IdentityPair t_term(std::int64_t k, std::int64_t i) {
  require_positive(k, "k");
  require_positive(i, "i");
  auto pell = terms(SequenceKind::Pell, 0, 2 * k + 2 * i + 1);
  Integer lhs = exact_div(pell[2 * k + 2 * i] - pell[2 * i], 2, "t_lemma") -
                exact_div(pell[2 * k + 2 * i - 2] - pell[2 * i - 2], 2,
                          "t_lemma");
  Integer rhs =
      k % 2 == 0
          ? Integer(2 * pell[k] *
                    term(SequenceKind::AssociatedPell, k + 2 * i - 1))
          : Integer(2 * term(SequenceKind::AssociatedPell, k) *
                    pell[k + 2 * i - 1]);
  return {lhs, rhs};
}

IdentityPair pell_binomial(std::int64_t ell) {
  require_even_step(ell);
  Integer rhs = 0;
  Integer power = 1;  // 2^{i-1}
  for (std::int64_t i = 1; i <= ell / 2; ++i) {
    Integer binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(ell),
                 static_cast<unsigned long>(2 * i - 1));
    rhs += binom * power;
    power <<= 1;
  }
  return {term(SequenceKind::Pell, ell), rhs};
}

IdentityPair braid_identity(BraidIdentity which, std::int64_t n) {
  require_positive(n, "n");
  const auto P = [](std::int64_t i) { return term(SequenceKind::Pell, i); };
  const auto Q = [](std::int64_t i) {
    return term(SequenceKind::AssociatedPell, i);
  };
  switch (which) {
    case BraidIdentity::BProduct:
      return {term(SequenceKind::Balancing, n), P(n) * Q(n)};
    case BraidIdentity::BPiecewise:
      return {term(SequenceKind::Cobalancing, n),
              n % 2 == 0 ? Integer(P(n) * Q(n - 1))
                         : Integer(P(n - 1) * Q(n))};
    case BraidIdentity::BPlus1Piecewise:
      return {term(SequenceKind::Cobalancing, n) + 1,
              n % 2 == 0 ? Integer(P(n - 1) * Q(n))
                         : Integer(P(n) * Q(n - 1))};
    case BraidIdentity::DoubledBStep: {
      auto b = terms(SequenceKind::Cobalancing, n, 2);
      return {2 * term(SequenceKind::Balancing, n), b[1] - b[0]};
    }
  }
  throw std::logic_error("unreachable: bad BraidIdentity");
}

namespace {

using Params = std::vector<std::pair<std::string, std::int64_t>>;

void check(IdentityReport& report, Params params, Integer lhs, Integer rhs) {
  ++report.checked;
  if (lhs != rhs)
    report.failures.push_back(
        {std::move(params), std::move(lhs), std::move(rhs)});
}

}  // namespace

std::vector<IdentityReport> verify_sums(std::int64_t max_k) {
  require_positive(max_k, "max_k");
  std::vector<IdentityReport> reports;
  for (SequenceKind kind : kAllKinds) {
    IdentityReport report{sum_id(kind), {{"k", 1, max_k}}, 0, {}};
    Integer running = 0;
    auto seq = terms(kind, 0, max_k + 1);
    for (std::int64_t k = 1; k <= max_k; ++k) {
      running += seq[k];
      check(report, {{"k", k}}, running, prefix_sum_closed(kind, k));
    }
    reports.push_back(std::move(report));
  }
  return reports;
}

std::vector<IdentityReport> verify_cassini(std::int64_t max_k) {
  require_positive(max_k, "max_k");
  std::vector<IdentityReport> reports;
  for (SequenceKind kind :
       {SequenceKind::Pell, SequenceKind::AssociatedPell}) {
    IdentityReport report{"cassini_" + std::string(kind_symbol(kind)),
                          {{"k", 1, max_k}},
                          0,
                          {}};
    for (std::int64_t k = 1; k <= max_k; ++k) {
      auto [lhs, rhs] = cassini(kind, k);
      check(report, {{"k", k}}, lhs, rhs);
    }
    reports.push_back(std::move(report));
  }
  return reports;
}

std::vector<IdentityReport> verify_gcd_lemmas(std::int64_t max_n) {
  require_positive(max_n, "max_n");
  static constexpr std::pair<GcdIdentity, const char*> kIdentities[] = {
      {GcdIdentity::PellAdjacent, "gcd_pell_adjacent"},
      {GcdIdentity::QellAdjacent, "gcd_qell_adjacent"},
      {GcdIdentity::PellEvenTwoApart, "gcd_pell_even_two_apart"},
      {GcdIdentity::PellOddTwoApart, "gcd_pell_odd_two_apart"},
      {GcdIdentity::QellTwoApart, "gcd_q_two_apart"},
  };
  std::vector<IdentityReport> reports;
  for (auto [which, id] : kIdentities) {
    IdentityReport report{id, {{"n", 1, max_n}}, 0, {}};
    Integer expected(gcd_identity_expected(which));
    for (std::int64_t n = 1; n <= max_n; ++n)
      check(report, {{"n", n}}, gcd_identity(which, n), expected);
    reports.push_back(std::move(report));
  }
  return reports;
}

std::vector<IdentityReport> verify_diff_factors(std::int64_t max_s,
                                                std::int64_t max_r) {
  require_positive(max_s, "max_s");
  require_positive(max_r, "max_r");
  IdentityReport pell{"diff_factor_P",
                      {{"s", 2, max_s}, {"r", 1, max_r}},
                      0,
                      {}};
  IdentityReport qell{"diff_factor_Q",
                      {{"s", 2, max_s}, {"r", 1, max_r}},
                      0,
                      {}};
  for (std::int64_t s = 2; s <= max_s; s += 2) {
    for (std::int64_t r = 1; r <= max_r; ++r) {
      auto [pl, pr] = diff_factor_pell(s, r);
      check(pell, {{"s", s}, {"r", r}}, pl, pr);
      auto [ql, qr] = diff_factor_qell(s, r);
      check(qell, {{"s", s}, {"r", r}}, ql, qr);
    }
  }
  return {std::move(pell), std::move(qell)};
}

std::vector<IdentityReport> verify_sigma(std::int64_t max_k,
                                         std::int64_t max_n) {
  require_positive(max_k, "max_k");
  if (max_n < 0) throw std::domain_error("max_n must be >= 0");
  std::vector<IdentityReport> reports;
  for (SequenceKind kind : kAllKinds) {
    IdentityReport report{sigma_id(kind),
                          {{"k", 1, max_k}, {"n", 0, max_n}},
                          0,
                          {}};
    for (std::int64_t k = 1; k <= max_k; ++k)
      for (std::int64_t n = 0; n <= max_n; ++n)
        check(report, {{"k", k}, {"n", n}}, sigma_direct(kind, k, n),
              sigma_closed(kind, k, n));
    reports.push_back(std::move(report));
  }
  return reports;
}

std::vector<IdentityReport> verify_t_lemma(std::int64_t max_k,
                                           std::int64_t max_i) {
  require_positive(max_k, "max_k");
  require_positive(max_i, "max_i");
  IdentityReport report{"t_lemma", {{"k", 1, max_k}, {"i", 1, max_i}}, 0, {}};
  for (std::int64_t k = 1; k <= max_k; ++k)
    for (std::int64_t i = 1; i <= max_i; ++i) {
      auto [lhs, rhs] = t_term(k, i);
      check(report, {{"k", k}, {"i", i}}, lhs, rhs);
    }
  return {std::move(report)};
}

std::vector<IdentityReport> verify_pell_binomial(std::int64_t max_ell) {
  require_positive(max_ell, "max_ell");
  IdentityReport report{"pell_binomial", {{"ell", 2, max_ell}}, 0, {}};
  for (std::int64_t ell = 2; ell <= max_ell; ell += 2) {
    auto [lhs, rhs] = pell_binomial(ell);
    check(report, {{"ell", ell}}, lhs, rhs);
  }
  return {std::move(report)};
}

std::vector<IdentityReport> verify_braids(std::int64_t max_n) {
  require_positive(max_n, "max_n");
  static constexpr std::pair<BraidIdentity, const char*> kBraids[] = {
      {BraidIdentity::BProduct, "braid_B_product"},
      {BraidIdentity::BPiecewise, "braid_b_piecewise"},
      {BraidIdentity::BPlus1Piecewise, "braid_b_plus1_piecewise"},
      {BraidIdentity::DoubledBStep, "braid_2B_step"},
  };
  std::vector<IdentityReport> reports;
  for (auto [which, id] : kBraids) {
    IdentityReport report{id, {{"n", 1, max_n}}, 0, {}};
    for (std::int64_t n = 1; n <= max_n; ++n) {
      auto [lhs, rhs] = braid_identity(which, n);
      check(report, {{"n", n}}, lhs, rhs);
    }
    reports.push_back(std::move(report));
  }
  // The braid factorizations rest on adjacent terms being coprime.
  for (SequenceKind kind :
       {SequenceKind::Pell, SequenceKind::AssociatedPell}) {
    IdentityReport report{
        "braid_basis_" + std::string(kind_symbol(kind)) + "_coprime",
        {{"n", 1, max_n}},
        0,
        {}};
    auto seq = terms(kind, 0, max_n + 1);
    for (std::int64_t n = 1; n <= max_n; ++n)
      check(report, {{"n", n}}, gcd(seq[n - 1], seq[n]), Integer(1));
    reports.push_back(std::move(report));
  }
  return reports;
}

}  // namespace pellbraid
