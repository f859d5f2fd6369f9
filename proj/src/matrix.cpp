#include "eqknot/matrix.hpp"

namespace eqknot {

LambdaMatrix to_lambda(const IntMatrix& a) {
  const std::size_t r = a.size();
  const std::size_t c = r == 0 ? 0 : a.front().size();
  LambdaMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (a[i].size() != c) throw DomainError("ragged integer matrix");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = LaurentPoly(Rational(static_cast<long>(a[i][j])));
  }
  return m;
}

LambdaMatrix conj(const LambdaMatrix& m) {
  return m.map([](const LaurentPoly& p) { return p.conj(); });
}

LambdaVector conj(const LambdaVector& v) {
  LambdaVector out;
  out.reserve(v.size());
  for (const auto& p : v) out.push_back(p.conj());
  return out;
}

LambdaMatrix block_diagonal(const LambdaMatrix& a, const LambdaMatrix& b) {
  LambdaMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

LambdaMatrix hstack(const LambdaMatrix& a, const LambdaMatrix& b) {
  if (a.rows() != b.rows()) throw DomainError("hstack: row count mismatch");
  LambdaMatrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

LambdaVector mat_vec(const LambdaMatrix& m, const LambdaVector& v) {
  if (m.cols() != v.size()) throw DomainError("matrix-vector product: dimension mismatch");
  LambdaVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero() && !v[j].is_zero()) out[i] += m(i, j) * v[j];
  return out;
}

bool is_zero_vector(const LambdaVector& v) {
  for (const auto& p : v)
    if (!p.is_zero()) return false;
  return true;
}

std::string to_string(const LambdaMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) out += "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ", ";
      out += m(i, j).to_string();
    }
  }
  return out;
}

}  // namespace eqknot
