#include "eqknot/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <limits>

namespace eqknot {

namespace {

// splitmix64
std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::vector<Rational> random_vector(std::size_t dim, std::uint64_t state) {
  std::vector<Rational> c(dim);
  bool nonzero = false;
  while (!nonzero) {
    for (auto& x : c) {
      state = mix(state);
      const long num = static_cast<long>(state % (2 * kFalsifierHeight + 1)) - kFalsifierHeight;
      state = mix(state);
      const long den = 1 + static_cast<long>(state % kFalsifierHeight);
      x = Rational(num, den);
      x.canonicalize();
      nonzero = nonzero || num != 0;
    }
  }
  return c;
}

bool common_zero(const std::vector<QMatrix>& forms, const std::vector<Rational>& c) {
  for (const auto& f : forms)
    if (evaluate(f, c) != 0) return false;
  return true;
}

bool isotropic(const EquivariantTriple& t, const QBasis& basis, const std::vector<Rational>& c) {
  const ModuleElement x = element_from_coordinates(t.h(), basis, c);
  return t.pairing.pair(x, t.involution.apply(x)).is_zero();
}

}  // namespace

std::vector<Rational> falsifier_candidate(std::size_t dim, std::uint64_t seed, std::size_t index) {
  std::vector<Rational> c(dim, Rational(0));
  if (index < dim) {
    c[index] = 1;
    return c;
  }
  std::size_t k = index - dim;
  const std::size_t pairs = dim * (dim - 1) / 2;
  if (k < 2 * pairs) {
    const bool diff = k >= pairs;
    if (diff) k -= pairs;
    std::size_t i = 0;
    while (k >= dim - 1 - i) {
      k -= dim - 1 - i;
      ++i;
    }
    c[i] = 1;
    c[i + 1 + k] = diff ? -1 : 1;
    return c;
  }
  return random_vector(dim, mix(seed) ^ mix(index + 0x5bd1e995ULL));
}

std::vector<Rational> audit_vector(std::size_t dim, std::uint64_t seed, std::size_t index) {
  return random_vector(dim, mix(~seed) ^ mix(index + 0x27d4eb2dULL));
}

std::optional<std::size_t> find_common_zero_serial(const std::vector<QMatrix>& forms, std::size_t dim,
                                                   std::uint64_t seed, std::size_t trials) {
  if (dim == 0) return std::nullopt;
  for (std::size_t i = 0; i < trials; ++i)
    if (common_zero(forms, falsifier_candidate(dim, seed, i))) return i;
  return std::nullopt;
}

std::optional<std::size_t> find_common_zero(const std::vector<QMatrix>& forms, std::size_t dim, std::uint64_t seed,
                                            std::size_t trials) {
  if (dim == 0) return std::nullopt;
  const long n = static_cast<long>(trials);
  long best = std::numeric_limits<long>::max();
#pragma omp parallel for schedule(dynamic, 16) reduction(min : best)
  for (long i = 0; i < n; ++i) {
    if (i >= best) continue;
    if (common_zero(forms, falsifier_candidate(dim, seed, static_cast<std::size_t>(i)))) best = std::min(best, i);
  }
  if (best == std::numeric_limits<long>::max()) return std::nullopt;
  return static_cast<std::size_t>(best);
}

std::vector<std::size_t> audit_isotropic_serial(const EquivariantTriple& t, const QBasis& basis, std::uint64_t seed,
                                                std::size_t samples) {
  std::vector<std::size_t> hits;
  if (basis.dimension() == 0) return hits;
  for (std::size_t i = 0; i < samples; ++i)
    if (isotropic(t, basis, audit_vector(basis.dimension(), seed, i))) hits.push_back(i);
  return hits;
}

std::vector<std::size_t> audit_isotropic(const EquivariantTriple& t, const QBasis& basis, std::uint64_t seed,
                                         std::size_t samples) {
  if (basis.dimension() == 0) return {};
  const long n = static_cast<long>(samples);
  std::vector<char> hit(samples, 0);
#pragma omp parallel for schedule(dynamic, 8)
  for (long i = 0; i < n; ++i)
    hit[static_cast<std::size_t>(i)] =
        isotropic(t, basis, audit_vector(basis.dimension(), seed, static_cast<std::size_t>(i))) ? 1 : 0;
  std::vector<std::size_t> hits;
  for (std::size_t i = 0; i < samples; ++i)
    if (hit[i]) hits.push_back(i);
  return hits;
}

}  // namespace eqknot
