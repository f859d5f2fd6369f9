#include "eqknot/linalg.hpp"

#include <omp.h>

#include <utility>

namespace eqknot {

LaurentPoly det(const LambdaMatrix& m) {
  if (!m.is_square()) throw DomainError("det: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  LambdaMatrix a = m;
  LaurentPoly prev = 1;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a(p, k).is_zero()) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        const LaurentPoly num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        a(i, j) = *exact_divide(num, prev);
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return negate ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

namespace {

LambdaMatrix minor_matrix(const LambdaMatrix& m, std::size_t row, std::size_t col) {
  const std::size_t n = m.rows();
  LambdaMatrix out(n - 1, n - 1);
  for (std::size_t i = 0, oi = 0; i < n; ++i) {
    if (i == row) continue;
    for (std::size_t j = 0, oj = 0; j < n; ++j) {
      if (j == col) continue;
      out(oi, oj++) = m(i, j);
    }
    ++oi;
  }
  return out;
}

LaurentPoly cofactor(const LambdaMatrix& m, std::size_t i, std::size_t j) {
  LaurentPoly d = det(minor_matrix(m, i, j));
  return (i + j) % 2 == 0 ? d : -d;
}

}  // namespace

LambdaMatrix adjugate_serial(const LambdaMatrix& m) {
  if (!m.is_square()) throw DomainError("adjugate: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 1) return LambdaMatrix::identity(1);
  LambdaMatrix adj(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) adj(j, i) = cofactor(m, i, j);
  return adj;
}

LambdaMatrix adjugate(const LambdaMatrix& m) {
  if (!m.is_square()) throw DomainError("adjugate: matrix is not square");
  const std::size_t n = m.rows();
  if (n <= 2) return adjugate_serial(m);
  LambdaMatrix adj(n, n);
  const long total = static_cast<long>(n * n);
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < total; ++k) {
    const std::size_t i = static_cast<std::size_t>(k) / n;
    const std::size_t j = static_cast<std::size_t>(k) % n;
    adj(j, i) = cofactor(m, i, j);
  }
  return adj;
}

FracMatrix inverse_qt(const LambdaMatrix& m) {
  const LaurentPoly d = det(m);
  if (d.is_zero()) throw DomainError("inverse_qt: singular matrix");
  const LambdaMatrix adj = adjugate(m);
  return adj.map([&](const LaurentPoly& p) { return RationalFn(p, d); });
}

std::vector<RationalFn> solve_qt(const LambdaMatrix& m, const std::vector<RationalFn>& b) {
  if (!m.is_square() || m.rows() != b.size()) throw DomainError("solve_qt: dimension mismatch");
  const std::size_t n = m.rows();
  FracMatrix a = m.map([](const LaurentPoly& p) { return RationalFn(p); });
  std::vector<RationalFn> rhs = b;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k).is_zero()) ++p;
    if (p == n) throw DomainError("solve_qt: singular matrix");
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      std::swap(rhs[k], rhs[p]);
    }
    const RationalFn inv = a(k, k).inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      const RationalFn f = a(i, k) * inv;
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
      rhs[i] -= f * rhs[k];
    }
  }
  std::vector<RationalFn> z(n);
  for (std::size_t k = n; k-- > 0;) {
    RationalFn acc = rhs[k];
    for (std::size_t j = k + 1; j < n; ++j) acc -= a(k, j) * z[j];
    z[k] = acc / a(k, k);
  }
  return z;
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

class SnfEngine {
 public:
  SnfEngine(const LambdaMatrix& m, int cap)
      : D(m), U(LambdaMatrix::identity(m.rows())), Uinv(LambdaMatrix::identity(m.rows())),
        V(LambdaMatrix::identity(m.cols())), cap_(cap) {
    check_all();
  }

  SnfResult run() {
    const std::size_t r = D.rows(), c = D.cols();
    std::size_t k = 0;
    for (; k < std::min(r, c); ++k) {
      if (!reduce_at(k)) break;
      normalize_pivot(k);
    }
    SnfResult out;
    out.rank = k;
    for (std::size_t i = 0; i < k; ++i)
      if (D(i, i).span() > 0) out.invariant_factors.push_back(D(i, i));
    out.D = std::move(D);
    out.U = std::move(U);
    out.Uinv = std::move(Uinv);
    out.V = std::move(V);
    return out;
  }

  LambdaMatrix D, U, Uinv, V;

 private:
  // Brings a gcd-type pivot to (k,k) with zero row/column and divisibility of
  // the trailing block. Returns false when the trailing block is zero.
  bool reduce_at(std::size_t k) {
    const std::size_t r = D.rows(), c = D.cols();
    while (true) {
      std::size_t pi = r, pj = c;
      int best = -1;
      for (std::size_t i = k; i < r; ++i)
        for (std::size_t j = k; j < c; ++j) {
          const LaurentPoly& e = D(i, j);
          if (e.is_zero()) continue;
          if (best < 0 || e.span() < best) {
            best = e.span();
            pi = i;
            pj = j;
          }
        }
      if (best < 0) return false;
      swap_rows(k, pi);
      swap_cols(k, pj);

      bool clean = true;
      for (std::size_t i = k + 1; i < r; ++i) {
        if (D(i, k).is_zero()) continue;
        auto [q, rem] = divmod(D(i, k), D(k, k));
        add_row_multiple(i, k, -q);
        if (!rem.is_zero()) clean = false;
      }
      for (std::size_t j = k + 1; j < c; ++j) {
        if (D(k, j).is_zero()) continue;
        auto [q, rem] = divmod(D(k, j), D(k, k));
        add_col_multiple(j, k, -q);
        if (!rem.is_zero()) clean = false;
      }
      if (!clean) continue;

      bool divisible = true;
      for (std::size_t i = k + 1; i < r && divisible; ++i)
        for (std::size_t j = k + 1; j < c && divisible; ++j)
          if (!D(i, j).is_zero() && !divides(D(k, k), D(i, j))) {
            add_row_multiple(k, i, 1);
            divisible = false;
          }
      if (divisible) return true;
    }
  }

  void normalize_pivot(std::size_t k) {
    const LaurentPoly& p = D(k, k);
    const LaurentPoly unit = LaurentPoly::monomial(p.leading(), p.low());
    const LaurentPoly inv = LaurentPoly::monomial(1 / Rational(p.leading()), -p.low());
    scale_row(k, inv, unit);
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < D.cols(); ++j) std::swap(D(a, j), D(b, j));
    for (std::size_t j = 0; j < U.cols(); ++j) std::swap(U(a, j), U(b, j));
    for (std::size_t i = 0; i < Uinv.rows(); ++i) std::swap(Uinv(i, a), Uinv(i, b));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < D.rows(); ++i) std::swap(D(i, a), D(i, b));
    for (std::size_t i = 0; i < V.rows(); ++i) std::swap(V(i, a), V(i, b));
  }

  // row_dst += f * row_src
  void add_row_multiple(std::size_t dst, std::size_t src, const LaurentPoly& f) {
    if (f.is_zero()) return;
    for (std::size_t j = 0; j < D.cols(); ++j) axpy(D(dst, j), f, D(src, j));
    for (std::size_t j = 0; j < U.cols(); ++j) axpy(U(dst, j), f, U(src, j));
    // inverse operation applied on the right: col_src -= f * col_dst
    const LaurentPoly minus_f = -f;
    for (std::size_t i = 0; i < Uinv.rows(); ++i) axpy(Uinv(i, src), minus_f, Uinv(i, dst));
  }

  // col_dst += f * col_src
  void add_col_multiple(std::size_t dst, std::size_t src, const LaurentPoly& f) {
    if (f.is_zero()) return;
    for (std::size_t i = 0; i < D.rows(); ++i) axpy(D(i, dst), f, D(i, src));
    for (std::size_t i = 0; i < V.rows(); ++i) axpy(V(i, dst), f, V(i, src));
  }

  // y += f * x
  void axpy(LaurentPoly& y, const LaurentPoly& f, const LaurentPoly& x) const {
    if (x.is_zero()) return;
    y += f * x;
    check(y);
  }

  void scale_row(std::size_t k, const LaurentPoly& s, const LaurentPoly& s_inv) {
    for (std::size_t j = 0; j < D.cols(); ++j) D(k, j) *= s;
    for (std::size_t j = 0; j < U.cols(); ++j) U(k, j) *= s;
    for (std::size_t i = 0; i < Uinv.rows(); ++i) Uinv(i, k) *= s_inv;
  }

  void check(const LaurentPoly& p) const {
    if (p.span() > cap_)
      throw DegreeOverflow("snf: intermediate degree " + std::to_string(p.span()) + " exceeds cap " +
                           std::to_string(cap_));
  }
  void check_all() const {
    for (std::size_t i = 0; i < D.rows(); ++i)
      for (std::size_t j = 0; j < D.cols(); ++j) check(D(i, j));
  }

  int cap_;
};

}  // namespace

SnfResult snf(const LambdaMatrix& m, int degree_cap) { return SnfEngine(m, degree_cap).run(); }

LambdaMatrix kernel(const LambdaMatrix& m, const SnfResult& s) {
  const std::size_t c = m.cols();
  LambdaMatrix out(c, c - s.rank);
  for (std::size_t j = s.rank; j < c; ++j)
    for (std::size_t i = 0; i < c; ++i) out(i, j - s.rank) = s.V(i, j);
  return out;
}

LambdaMatrix kernel(const LambdaMatrix& m) { return kernel(m, snf(m)); }

std::optional<LambdaVector> in_span(const LambdaVector& v, const SnfResult& s) {
  if (v.size() != s.U.cols()) throw DomainError("in_span: vector length does not match row count");
  const LambdaVector u = mat_vec(s.U, v);
  LambdaVector z(s.V.rows());
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (i < s.rank) {
      auto q = exact_divide(u[i], s.D(i, i));
      if (!q) return std::nullopt;
      z[i] = std::move(*q);
    } else if (!u[i].is_zero()) {
      return std::nullopt;
    }
  }
  return mat_vec(s.V, z);
}

std::optional<LambdaVector> in_span(const LambdaVector& v, const LambdaMatrix& m) { return in_span(v, snf(m)); }

}  // namespace eqknot
