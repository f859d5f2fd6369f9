#pragma once

#include <random>
#include <string_view>

#include "eqknot/linalg.hpp"

namespace testing_support {

using namespace eqknot;

inline LaurentPoly P(std::string_view s) { return LaurentPoly::parse(s); }
inline Rational Q(long n, long d = 1) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

// Small random Laurent polynomial with integer-ish coefficients.
inline LaurentPoly random_poly(std::mt19937_64& rng, int max_span, int max_shift = 1, int coeff = 4) {
  std::uniform_int_distribution<int> span(0, max_span);
  std::uniform_int_distribution<int> shift(-max_shift, max_shift);
  std::uniform_int_distribution<int> c(-coeff, coeff);
  std::vector<Rational> v(static_cast<std::size_t>(span(rng)) + 1);
  for (auto& x : v) x = c(rng);
  return LaurentPoly::from_coeffs(shift(rng), std::move(v));
}

inline LaurentPoly random_nonzero(std::mt19937_64& rng, int max_span, int max_shift = 1) {
  LaurentPoly p;
  while (p.is_zero()) p = random_poly(rng, max_span, max_shift);
  return p;
}

inline LambdaMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int max_span,
                                  double zero_prob = 0.3) {
  std::bernoulli_distribution zero(zero_prob);
  LambdaMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (!zero(rng)) m(i, j) = random_poly(rng, max_span);
  return m;
}

}  // namespace testing_support
