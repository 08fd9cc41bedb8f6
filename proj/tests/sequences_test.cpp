#include "pellbraid/sequences.hpp"

#include <doctest.h>

#include <random>

using namespace pellbraid;

TEST_CASE("term matches the first eleven values of every sequence") {
  const long expected[6][11] = {
      {0, 1, 2, 5, 12, 29, 70, 169, 408, 985, 2378},
      {1, 1, 3, 7, 17, 41, 99, 239, 577, 1393, 3363},
      {0, 1, 6, 35, 204, 1189, 6930, 40391, 235416, 1372105, 7997214},
      {1, 3, 17, 99, 577, 3363, 19601, 114243, 665857, 3880899, 22619537},
      {0, 0, 2, 14, 84, 492, 2870, 16730, 97512, 568344, 3312554},
      {-1, 1, 7, 41, 239, 1393, 8119, 47321, 275807, 1607521, 9369319},
  };
  for (std::size_t s = 0; s < kAllKinds.size(); ++s)
    for (int n = 0; n <= 10; ++n)
      CHECK(term(kAllKinds[s], n) == expected[s][n]);
}

TEST_CASE("term spot values") {
  CHECK(term(SequenceKind::Pell, 10) == 2378);
  CHECK(term(SequenceKind::Pell, 0) == 0);
  CHECK(term(SequenceKind::LucasCobalancing, 0) == -1);
  CHECK(term(SequenceKind::Balancing, 7) == 40391);
}

TEST_CASE("term rejects negative indices") {
  CHECK_THROWS_AS(term(SequenceKind::Pell, -1), std::domain_error);
  CHECK_THROWS_AS(terms(SequenceKind::Pell, -2, 3), std::domain_error);
  CHECK_THROWS_AS(gamma_power(-1), std::domain_error);
}

TEST_CASE("terms returns the requested window") {
  auto q = terms(SequenceKind::AssociatedPell, 0, 4);
  REQUIRE(q.size() == 4);
  CHECK(q[0] == 1);
  CHECK(q[1] == 1);
  CHECK(q[2] == 3);
  CHECK(q[3] == 7);

  CHECK(terms(SequenceKind::Pell, 0, 0).empty());
  CHECK(terms(SequenceKind::Pell, 7, 0).empty());

  auto b = terms(SequenceKind::Cobalancing, 2, 3);
  REQUIRE(b.size() == 3);
  CHECK(b[0] == 2);
  CHECK(b[1] == 14);
  CHECK(b[2] == 84);
}

TEST_CASE("terms agrees with term at scattered offsets") {
  for (SequenceKind kind : kAllKinds) {
    for (std::int64_t start : {0, 1, 2, 17, 40}) {
      auto window = terms(kind, start, 5);
      for (std::int64_t i = 0; i < 5; ++i)
        CHECK(window[i] == term(kind, start + i));
    }
  }
}

TEST_CASE("gamma_power base cases") {
  CHECK(gamma_power(0) == QuadraticInt{1, 0});
  CHECK(gamma_power(1) == QuadraticInt{1, 1});
  CHECK(gamma_power(2) == QuadraticInt{3, 2});
}

TEST_CASE("gamma_power equals (Q_n, P_n) up to n = 512") {
  auto pell = terms(SequenceKind::Pell, 0, 513);
  auto qell = terms(SequenceKind::AssociatedPell, 0, 513);
  for (std::int64_t n = 0; n <= 512; ++n) {
    QuadraticInt g = gamma_power(n);
    CHECK(g.a == qell[n]);
    CHECK(g.b == pell[n]);
  }
}

TEST_CASE("quadratic integer multiplication is the Z[sqrt 2] product") {
  QuadraticInt x{2, 3};
  QuadraticInt y{5, 7};
  // (2 + 3r)(5 + 7r) = 10 + 14r + 15r + 21*2 = 52 + 29r, r = sqrt(2)
  CHECK(x * y == QuadraticInt{52, 29});

  std::mt19937 rng(2023);
  std::uniform_int_distribution<int> exp(0, 60);
  for (int trial = 0; trial < 32; ++trial) {
    std::int64_t a = exp(rng);
    std::int64_t b = exp(rng);
    CHECK(gamma_power(a) * gamma_power(b) == gamma_power(a + b));
  }
}

TEST_CASE("inter-sequence consequences of the Binet forms") {
  auto pell = terms(SequenceKind::Pell, 0, 514);
  auto qell = terms(SequenceKind::AssociatedPell, 0, 514);
  for (std::int64_t n = 1; n <= 256; ++n) {
    CHECK(2 * term(SequenceKind::Balancing, n) == pell[2 * n]);
    CHECK(term(SequenceKind::LucasBalancing, n) == qell[2 * n]);
    CHECK(term(SequenceKind::LucasCobalancing, n) == qell[2 * n - 1]);
    CHECK(2 * term(SequenceKind::Cobalancing, n) == pell[2 * n - 1] - 1);
  }
}

TEST_CASE("associated Pell numbers are odd up to n = 512") {
  for (const Integer& q : terms(SequenceKind::AssociatedPell, 0, 513))
    CHECK(q % 2 != 0);
}

TEST_CASE("sequences are strictly increasing from n = 2") {
  for (SequenceKind kind : kAllKinds) {
    auto seq = terms(kind, 0, 203);
    for (std::int64_t n = 2; n <= 201; ++n) CHECK(seq[n + 1] > seq[n]);
  }
}

TEST_CASE("gcd uses the gcd(0, a) = |a| convention") {
  CHECK(gcd(Integer(0), Integer(7)) == 7);
  CHECK(gcd(Integer(0), Integer(-7)) == 7);
  CHECK(gcd(Integer(-4), Integer(6)) == 2);
  CHECK(gcd(Integer(0), Integer(0)) == 0);
}

TEST_CASE("kind names round-trip") {
  for (SequenceKind kind : kAllKinds) {
    auto parsed = parse_kind(kind_name(kind));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == kind);
  }
  CHECK(!parse_kind("fibonacci").has_value());
}
