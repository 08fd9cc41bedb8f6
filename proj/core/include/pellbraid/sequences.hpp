#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace pellbraid {

/// Arbitrary-precision signed integer; every sequence value, sum, and GCD
/// in this library is one of these.
using Integer = mpz_class;

/// The six sequences covered by the library. Each tag selects one
/// second-order recurrence plus its pair of initial conditions.
enum class SequenceKind {
  Pell,             // P_n = 2P_{n-1} + P_{n-2},      P_0 = 0,  P_1 = 1
  AssociatedPell,   // Q_n = 2Q_{n-1} + Q_{n-2},      Q_0 = 1,  Q_1 = 1
  Balancing,        // B_n = 6B_{n-1} - B_{n-2},      B_0 = 0,  B_1 = 1
  LucasBalancing,   // C_n = 6C_{n-1} - C_{n-2},      C_0 = 1,  C_1 = 3
  Cobalancing,      // b_n = 6b_{n-1} - b_{n-2} + 2,  b_0 = 0,  b_1 = 0
  LucasCobalancing, // c_n = 6c_{n-1} - c_{n-2},      c_0 = -1, c_1 = 1
};

inline constexpr std::array<SequenceKind, 6> kAllKinds = {
    SequenceKind::Pell,        SequenceKind::AssociatedPell,
    SequenceKind::Balancing,   SequenceKind::LucasBalancing,
    SequenceKind::Cobalancing, SequenceKind::LucasCobalancing,
};

/// CLI-facing name: pell, qell, balancing, lucas-balancing, cobalancing,
/// lucas-cobalancing.
std::string_view kind_name(SequenceKind kind);

/// One-letter symbol used in rendered tables: P, Q, B, C, b, c.
std::string_view kind_symbol(SequenceKind kind);

std::optional<SequenceKind> parse_kind(std::string_view name);

/// n-th term of the sequence. Throws std::domain_error for n < 0.
Integer term(SequenceKind kind, std::int64_t n);

/// [term(kind, start), ..., term(kind, start + count - 1)] in one linear pass.
std::vector<Integer> terms(SequenceKind kind, std::int64_t start,
                           std::int64_t count);

/// Element of Z[sqrt(2)]: value a + b*sqrt(2).
struct QuadraticInt {
  Integer a;
  Integer b;

  bool operator==(const QuadraticInt&) const = default;
};

QuadraticInt operator*(const QuadraticInt& x, const QuadraticInt& y);

/// gamma^n for gamma = 1 + sqrt(2), computed by exact square-and-multiply
/// in Z[sqrt(2)]. The result is (Q_n, P_n).
QuadraticInt gamma_power(std::int64_t n);

/// gcd with gcd(0, a) = |a|; always nonnegative.
Integer gcd(const Integer& x, const Integer& y);

}  // namespace pellbraid
