#include "eqknot/quadratic_form.hpp"

namespace eqknot {

SquareDecomposition classify(const QMatrix& s) {
  if (!s.is_square()) throw DomainError("classify: form matrix is not square");
  const std::size_t n = s.rows();
  QMatrix a = s;
  std::vector<bool> done(n, false);
  SquareDecomposition out;
  int sign = 0;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t p = n;
    for (std::size_t i = 0; i < n && p == n; ++i)
      if (!done[i] && a(i, i) != 0) p = i;
    if (p == n) {
      // no usable diagonal: either the rest is zero or a hyperbolic pair remains
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!done[i] && !done[j] && a(i, j) != 0) {
            out.kind = Definiteness::indefinite;
            return out;
          }
      out.kind = Definiteness::degenerate;
      return out;
    }
    const Rational w = a(p, p);
    const int sg = sgn(w);
    if (sign != 0 && sg != sign) {
      out.kind = Definiteness::indefinite;
      return out;
    }
    sign = sg;
    out.pivots.push_back(p);
    out.weights.push_back(w);
    done[p] = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || a(i, p) == 0) continue;
      const Rational f = a(i, p) / w;
      for (std::size_t j = 0; j < n; ++j)
        if (!done[j]) a(i, j) -= f * a(p, j);
    }
  }
  out.kind = sign < 0 ? Definiteness::negative : Definiteness::positive;
  return out;
}

Rational evaluate(const QMatrix& s, std::span<const Rational> c) {
  if (c.size() != s.rows()) throw DomainError("evaluate: dimension mismatch");
  Rational acc = 0;
  for (std::size_t i = 0; i < s.rows(); ++i) {
    if (c[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < s.cols(); ++j)
      if (c[j] != 0 && s(i, j) != 0) row += s(i, j) * c[j];
    acc += c[i] * row;
  }
  return acc;
}

std::vector<std::size_t> support(const QMatrix& s) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j)
      if (s(i, j) != 0) {
        out.push_back(i);
        break;
      }
  return out;
}

QMatrix restrict_to(const QMatrix& s, std::span<const std::size_t> idx) {
  QMatrix out(idx.size(), idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) out(i, j) = s(idx[i], idx[j]);
  return out;
}

const char* to_string(Definiteness d) {
  switch (d) {
    case Definiteness::positive: return "positive";
    case Definiteness::negative: return "negative";
    case Definiteness::indefinite: return "indefinite";
    case Definiteness::degenerate: return "degenerate";
  }
  return "?";
}

}  // namespace eqknot
