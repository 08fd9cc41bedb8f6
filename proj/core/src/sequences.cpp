#include "pellbraid/sequences.hpp"

#include <stdexcept>
#include <utility>

namespace pellbraid {
namespace {

struct Recurrence {
  long mult;      // coefficient of s_{n-1}
  long sub;       // coefficient of s_{n-2} (always -1 or +1 here)
  long drift;     // additive constant per step
  long init0;
  long init1;
};

Recurrence recurrence_for(SequenceKind kind) {
  switch (kind) {
    case SequenceKind::Pell:             return {2, +1, 0, 0, 1};
    case SequenceKind::AssociatedPell:   return {2, +1, 0, 1, 1};
    case SequenceKind::Balancing:        return {6, -1, 0, 0, 1};
    case SequenceKind::LucasBalancing:   return {6, -1, 0, 1, 3};
    case SequenceKind::Cobalancing:      return {6, -1, 2, 0, 0};
    case SequenceKind::LucasCobalancing: return {6, -1, 0, -1, 1};
  }
  throw std::logic_error("unreachable: bad SequenceKind");
}

}  // namespace

std::string_view kind_name(SequenceKind kind) {
  switch (kind) {
    case SequenceKind::Pell:             return "pell";
    case SequenceKind::AssociatedPell:   return "qell";
    case SequenceKind::Balancing:        return "balancing";
    case SequenceKind::LucasBalancing:   return "lucas-balancing";
    case SequenceKind::Cobalancing:      return "cobalancing";
    case SequenceKind::LucasCobalancing: return "lucas-cobalancing";
  }
  throw std::logic_error("unreachable: bad SequenceKind");
}

std::string_view kind_symbol(SequenceKind kind) {
  switch (kind) {
    case SequenceKind::Pell:             return "P";
    case SequenceKind::AssociatedPell:   return "Q";
    case SequenceKind::Balancing:        return "B";
    case SequenceKind::LucasBalancing:   return "C";
    case SequenceKind::Cobalancing:      return "b";
    case SequenceKind::LucasCobalancing: return "c";
  }
  throw std::logic_error("unreachable: bad SequenceKind");
}

std::optional<SequenceKind> parse_kind(std::string_view name) {
  for (SequenceKind kind : kAllKinds) {
    if (name == kind_name(kind)) return kind;
  }
  return std::nullopt;
}

Integer term(SequenceKind kind, std::int64_t n) {
  if (n < 0) throw std::domain_error("sequence index must be nonnegative");
  const Recurrence rec = recurrence_for(kind);
  if (n == 0) return Integer(rec.init0);
  Integer prev(rec.init0);
  Integer cur(rec.init1);
  for (std::int64_t i = 1; i < n; ++i) {
    Integer next = rec.mult * cur + rec.sub * prev + rec.drift;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::vector<Integer> terms(SequenceKind kind, std::int64_t start,
                           std::int64_t count) {
  if (start < 0) throw std::domain_error("sequence index must be nonnegative");
  std::vector<Integer> out;
  if (count <= 0) return out;
  out.reserve(static_cast<std::size_t>(count));
  const Recurrence rec = recurrence_for(kind);
  Integer prev(rec.init0);
  Integer cur(rec.init1);
  if (start == 0) out.push_back(prev);
  if (start <= 1 && start + count > 1) out.push_back(cur);
  for (std::int64_t n = 2; n < start + count; ++n) {
    Integer next = rec.mult * cur + rec.sub * prev + rec.drift;
    prev = std::move(cur);
    cur = std::move(next);
    if (n >= start) out.push_back(cur);
  }
  return out;
}

QuadraticInt operator*(const QuadraticInt& x, const QuadraticInt& y) {
  return {x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a};
}

QuadraticInt gamma_power(std::int64_t n) {
  if (n < 0) throw std::domain_error("gamma exponent must be nonnegative");
  QuadraticInt result{1, 0};
  QuadraticInt base{1, 1};  // gamma = 1 + sqrt(2)
  while (n > 0) {
    if (n & 1) result = result * base;
    base = base * base;
    n >>= 1;
  }
  return result;
}

Integer gcd(const Integer& x, const Integer& y) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return g;
}

}  // namespace pellbraid
