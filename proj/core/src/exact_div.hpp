#pragma once

#include <string>

#include "pellbraid/errors.hpp"
#include "pellbraid/sequences.hpp"

namespace pellbraid::detail {

// Division that must come out exact; anything else means the sequence
// generator and the identity using it disagree.
inline Integer exact_div(const Integer& n, unsigned long d, const char* what) {
  if (!mpz_divisible_ui_p(n.get_mpz_t(), d)) {
    throw InternalInconsistencyError(std::string(what) +
                                     ": inexact division by " +
                                     std::to_string(d));
  }
  Integer q;
  mpz_divexact_ui(q.get_mpz_t(), n.get_mpz_t(), d);
  return q;
}

}  // namespace pellbraid::detail
