#include "ringforge/matrix.hpp"

#include <algorithm>
#include <string>

namespace ringforge {

Mat::Mat(std::size_t dim, std::vector<Elem> entries) : n(dim), e(std::move(entries)) {
  if (e.size() != n * n) throw Error(ErrorCode::ShapeMismatch, "matrix entry count is not n*n");
}

Mat Mat::identity(std::size_t dim) {
  Mat m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

bool Mat::is_zero() const {
  return std::all_of(e.begin(), e.end(), [](Elem x) { return x == 0; });
}

bool Mat::is_symmetric() const {
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

namespace linalg {

namespace {

void same_shape(const Mat& a, const Mat& b) {
  if (a.n != b.n) throw Error(ErrorCode::ShapeMismatch, "matrix dimensions differ");
}

}  // namespace

void check_entries(const FiniteField& f, const Mat& a) {
  if (a.e.size() != a.n * a.n) throw Error(ErrorCode::ShapeMismatch, "matrix is not square");
  for (Elem x : a.e) f.check(x);
}

Mat multiply(const FiniteField& f, const Mat& a, const Mat& b) {
  same_shape(a, b);
  const std::size_t n = a.n;
  Mat c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Elem aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) = f.add(c(i, j), f.mul(aik, b(k, j)));
    }
  }
  return c;
}

Mat add(const FiniteField& f, const Mat& a, const Mat& b) {
  same_shape(a, b);
  Mat c(a.n);
  for (std::size_t i = 0; i < a.e.size(); ++i) c.e[i] = f.add(a.e[i], b.e[i]);
  return c;
}

Mat scale(const FiniteField& f, Elem c, const Mat& a) {
  Mat out(a.n);
  for (std::size_t i = 0; i < a.e.size(); ++i) out.e[i] = f.mul(c, a.e[i]);
  return out;
}

Mat transpose(const Mat& a) {
  Mat t(a.n);
  for (std::size_t i = 0; i < a.n; ++i) {
    for (std::size_t j = 0; j < a.n; ++j) t(j, i) = a(i, j);
  }
  return t;
}

Mat frobenius(const FiniteField& f, Automorphism e, const Mat& a) {
  if (e.is_identity()) return a;
  Mat out(a.n);
  for (std::size_t i = 0; i < a.e.size(); ++i) out.e[i] = f.frobenius(e, a.e[i]);
  return out;
}

std::size_t rref(const FiniteField& f, std::span<Elem> rows, std::size_t nrows, std::size_t ncols) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < ncols && rank < nrows; ++c) {
    std::size_t piv = rank;
    while (piv < nrows && rows[piv * ncols + c] == 0) ++piv;
    if (piv == nrows) continue;
    if (piv != rank) {
      std::swap_ranges(rows.begin() + piv * ncols, rows.begin() + (piv + 1) * ncols,
                       rows.begin() + rank * ncols);
    }
    Elem* pr = rows.data() + rank * ncols;
    const Elem lead_inv = f.inv(pr[c]);
    if (lead_inv != 1) {
      for (std::size_t j = c; j < ncols; ++j) pr[j] = f.mul(pr[j], lead_inv);
    }
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i == rank) continue;
      Elem* ri = rows.data() + i * ncols;
      const Elem factor = ri[c];
      if (factor == 0) continue;
      const Elem nf = f.neg(factor);
      for (std::size_t j = c; j < ncols; ++j) {
        if (pr[j] != 0) ri[j] = f.add(ri[j], f.mul(nf, pr[j]));
      }
    }
    ++rank;
  }
  return rank;
}

std::optional<std::vector<Elem>> solve_in_span(const FiniteField& f, std::span<const Elem> basis,
                                               std::size_t k, std::size_t n,
                                               std::span<const Elem> target) {
  // Columns of the augmented system: unknowns are the k coefficients, one
  // equation per coordinate of the target vector.
  const std::size_t cols = k + 1;
  std::vector<Elem> sys(n * cols);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < k; ++i) sys[j * cols + i] = basis[i * n + j];
    sys[j * cols + k] = target[j];
  }
  const std::size_t rk = rref(f, sys, n, cols);
  std::vector<Elem> x(k, 0);
  for (std::size_t row = 0; row < rk; ++row) {
    const Elem* pr = sys.data() + row * cols;
    std::size_t lead = 0;
    while (lead < cols && pr[lead] == 0) ++lead;
    if (lead == k) return std::nullopt;  // inconsistent
    x[lead] = pr[k];
  }
  return x;
}

std::size_t rank(const FiniteField& f, const Mat& a) {
  std::vector<Elem> rows = a.e;
  return rref(f, rows, a.n, a.n);
}

Elem det(const FiniteField& f, const Mat& a) {
  const std::size_t n = a.n;
  std::vector<Elem> m = a.e;
  Elem d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv * n + c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap_ranges(m.begin() + piv * n, m.begin() + (piv + 1) * n, m.begin() + c * n);
      d = f.neg(d);
    }
    const Elem pv = m[c * n + c];
    d = f.mul(d, pv);
    const Elem pinv = f.inv(pv);
    for (std::size_t i = c + 1; i < n; ++i) {
      const Elem factor = f.mul(m[i * n + c], pinv);
      if (factor == 0) continue;
      const Elem nf = f.neg(factor);
      for (std::size_t j = c; j < n; ++j) m[i * n + j] = f.add(m[i * n + j], f.mul(nf, m[c * n + j]));
    }
  }
  return d;
}

std::optional<Mat> inverse(const FiniteField& f, const Mat& a) {
  const std::size_t n = a.n;
  const std::size_t cols = 2 * n;
  std::vector<Elem> aug(n * cols, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i * cols + j] = a(i, j);
    aug[i * cols + n + i] = 1;
  }
  rref(f, aug, n, cols);
  Mat inv(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (aug[i * cols + i] != 1) return std::nullopt;
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug[i * cols + n + j];
  }
  return inv;
}

std::uint64_t encode(const FiniteField& f, const Mat& a) {
  std::uint64_t code = 0;
  for (Elem x : a.e) code = code * f.q() + x;
  return code;
}

Mat decode(const FiniteField& f, std::size_t n, std::uint64_t code) {
  Mat m(n);
  for (std::size_t i = n * n; i-- > 0;) {
    m.e[i] = static_cast<Elem>(code % f.q());
    code /= f.q();
  }
  return m;
}

std::uint64_t gl_order(std::uint64_t q, std::size_t n) {
  std::uint64_t qn = 1;
  for (std::size_t i = 0; i < n; ++i) qn *= q;
  std::uint64_t order = 1, qi = 1;
  for (std::size_t i = 0; i < n; ++i) {
    order *= (qn - qi);
    qi *= q;
  }
  return order;
}

void for_each_invertible(const FiniteField& f, std::size_t n, const std::function<bool(const Mat&)>& fn) {
  // Odometer over entries, last entry fastest: ascending code order.
  Mat m(n);
  const std::size_t len = n * n;
  while (true) {
    if (det(f, m) != 0 && !fn(m)) return;
    std::size_t i = len;
    while (i > 0) {
      --i;
      if (++m.e[i] < f.q()) break;
      m.e[i] = 0;
      if (i == 0) return;
    }
    if (len == 0) return;
  }
}

}  // namespace linalg
}  // namespace ringforge
