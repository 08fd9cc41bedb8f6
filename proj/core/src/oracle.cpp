#include "pellbraid/oracle.hpp"

#include <stdexcept>

namespace pellbraid {

namespace {

void require(bool ok, const char* message) {
  if (!ok) throw std::domain_error(message);
}

Integer pow_int(const Integer& base, std::int64_t m) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(),
             static_cast<unsigned long>(m));
  return out;
}

}  // namespace

Integer power_sum(SequenceKind kind, std::int64_t k, std::int64_t m,
                  std::int64_t n) {
  require(k >= 1, "k must be >= 1");
  require(m >= 1, "m must be >= 1");
  require(n >= 0, "n must be >= 0");
  Integer sum = 0;
  for (const Integer& t : terms(kind, n + 1, k)) sum += pow_int(t, m);
  return sum;
}

OracleResult curl_oracle(SequenceKind kind, std::int64_t k, std::int64_t m,
                         std::int64_t horizon) {
  require(k >= 1, "k must be >= 1");
  require(m >= 1, "m must be >= 1");
  require(horizon >= 2, "horizon must be >= 2");

  // One linear pass: powers of terms 1..k+horizon-1, then prefix sums, so
  // each offset's window sum is a difference of prefixes.
  auto seq = terms(kind, 0, k + horizon);
  std::vector<Integer> prefix(seq.size());
  Integer acc = 0;
  prefix[0] = 0;
  for (std::size_t i = 1; i < seq.size(); ++i) {
    acc += pow_int(seq[i], m);
    prefix[i] = acc;
  }

  const std::int64_t half = horizon / 2;
  Integer running = 0;
  Integer at_half = 0;
  std::int64_t stabilized_at = 0;
  std::int64_t folded = 0;
  for (std::int64_t n = 0; n < horizon; ++n) {
    Integer window = prefix[n + k] - prefix[n];
    Integer next = gcd(running, window);
    if (n == 0 || next != running) stabilized_at = n + 1;
    running = std::move(next);
    folded = n + 1;
    if (folded == half) at_half = running;
    if (running == 1) break;  // 1 divides every later sum
  }
  if (folded < half) at_half = running;  // early exit: unchanged through half
  return {running, horizon, stabilized_at, at_half == running};
}

}  // namespace pellbraid
