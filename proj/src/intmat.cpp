#include "cubicfm/intmat.hpp"

#include <algorithm>
#include <sstream>

namespace cubicfm {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> data) {
  rows_ = data.size();
  cols_ = rows_ ? data.begin()->size() : 0;
  entries_.reserve(rows_ * cols_);
  for (const auto& row : data) {
    if (row.size() != cols_) throw std::invalid_argument("ragged initializer");
    for (long v : row) entries_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("dimension mismatch");
  IntMatrix p(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const mpz_class& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) p.at(i, j) += a * o.at(k, j);
    }
  return p;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) m.entries_[i] = -entries_[i];
  return m;
}

bool IntMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

bool IntMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const mpz_class& v) { return v == 0; });
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

namespace {

// Rounded quotient: q minimizing |a - q*b|.
mpz_class round_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (2 * r > abs(b)) q += 1;
  return q;
}

struct SnfWorker {
  IntMatrix s, u, v;

  explicit SnfWorker(const IntMatrix& a)
      : s(a),
        u(IntMatrix::identity(a.rows())),
        v(IntMatrix::identity(a.cols())) {}

  void add_row(std::size_t dst, std::size_t src, const mpz_class& c) {
    for (std::size_t k = 0; k < s.cols(); ++k) s.at(dst, k) += c * s.at(src, k);
    for (std::size_t k = 0; k < u.cols(); ++k) u.at(dst, k) += c * u.at(src, k);
  }
  void add_col(std::size_t dst, std::size_t src, const mpz_class& c) {
    for (std::size_t k = 0; k < s.rows(); ++k) s.at(k, dst) += c * s.at(k, src);
    for (std::size_t k = 0; k < v.rows(); ++k) v.at(k, dst) += c * v.at(k, src);
  }
  void negate_row(std::size_t i) {
    for (std::size_t k = 0; k < s.cols(); ++k) s.at(i, k) = -s.at(i, k);
    for (std::size_t k = 0; k < u.cols(); ++k) u.at(i, k) = -u.at(i, k);
  }

  // Smallest nonzero |entry| in the trailing submatrix, lowest index first.
  bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
    bool found = false;
    mpz_class best;
    for (std::size_t i = t; i < s.rows(); ++i)
      for (std::size_t j = t; j < s.cols(); ++j) {
        if (s.at(i, j) == 0) continue;
        mpz_class a = abs(s.at(i, j));
        if (!found || a < best) {
          found = true;
          best = a;
          pi = i;
          pj = j;
        }
      }
    return found;
  }

  void run() {
    const std::size_t n = std::min(s.rows(), s.cols());
    for (std::size_t t = 0; t < n; ++t) {
      std::size_t pi, pj;
      if (!find_pivot(t, pi, pj)) break;
      s.swap_rows(t, pi);
      u.swap_rows(t, pi);
      s.swap_cols(t, pj);
      v.swap_cols(t, pj);

      for (;;) {
        bool clean = true;
        for (std::size_t i = t + 1; i < s.rows(); ++i) {
          if (s.at(i, t) == 0) continue;
          mpz_class q = round_div(s.at(i, t), s.at(t, t));
          add_row(i, t, -q);
          if (s.at(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < s.cols(); ++j) {
          if (s.at(t, j) == 0) continue;
          mpz_class q = round_div(s.at(t, j), s.at(t, t));
          add_col(j, t, -q);
          if (s.at(t, j) != 0) clean = false;
        }
        if (clean) break;
        // A nonzero remainder is strictly smaller than the pivot; move the
        // new minimum into pivot position and repeat.
        std::size_t qi, qj;
        find_pivot(t, qi, qj);
        s.swap_rows(t, qi);
        u.swap_rows(t, qi);
        s.swap_cols(t, qj);
        v.swap_cols(t, qj);
      }

      if (s.at(t, t) < 0) negate_row(t);

      // Enforce divisibility: the pivot must divide the trailing submatrix.
      bool restart = false;
      for (std::size_t i = t + 1; i < s.rows() && !restart; ++i)
        for (std::size_t j = t + 1; j < s.cols() && !restart; ++j)
          if (s.at(i, j) % s.at(t, t) != 0) {
            add_row(t, i, 1);
            restart = true;
          }
      if (restart) --t;
    }
  }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  SnfWorker w(a);
  w.run();
  return {std::move(w.u), std::move(w.s), std::move(w.v)};
}

mpz_class determinant(const IntMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("determinant: non-square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m.at(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        mpz_divexact(m.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& a) {
  SmithDecomposition d = smith_normal_form(a);
  std::size_t r = 0;
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i)
    if (d.s.at(i, i) != 0) ++r;
  return r;
}

IntMatrix kernel_basis(const IntMatrix& a) {
  SmithDecomposition d = smith_normal_form(a);
  std::size_t r = 0;
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i)
    if (d.s.at(i, i) != 0) ++r;
  // A*x = 0 iff x lies in the span of the last cols-r columns of V; those
  // columns are part of a unimodular matrix, hence the kernel is saturated.
  IntMatrix k(a.cols() - r, a.cols());
  for (std::size_t b = 0; b < k.rows(); ++b)
    for (std::size_t j = 0; j < a.cols(); ++j) k.at(b, j) = d.v.at(j, r + b);
  return k;
}

IntMatrix saturate(const IntMatrix& b) {
  // U*B*V = S, so B = U^-1 * S * V^-1 and the rational row span of B equals
  // the span of the first rank rows of V^-1, which is saturated.
  SmithDecomposition d = smith_normal_form(b);
  std::size_t r = 0;
  for (std::size_t i = 0; i < std::min(b.rows(), b.cols()); ++i)
    if (d.s.at(i, i) != 0) ++r;
  if (r != b.rows()) throw std::invalid_argument("saturate: dependent rows");
  // V^-1 row i = (adjugate trick avoided): solve via V's unimodularity.
  // V^-1 = sign(det V) * adj(V); cheaper here: invert by elimination over Z
  // is not guaranteed, so compute V^-1 from the SNF of V itself.
  // For unimodular V, kernel-free: V^-1 = V_adj / det(V) with det = +-1.
  const std::size_t n = b.cols();
  IntMatrix vinv(n, n);
  // Gauss-Jordan over Q would do, but V is unimodular so Bareiss-style
  // adjugate stays integral. Use cofactor-free approach: solve V*x = e_i by
  // fraction-free elimination, denominators divide det(V) = +-1.
  {
    // augmented [V | I], reduce over Q using mpq, results are integers
    std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m[i][j] = d.v.at(i, j);
      m[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t p = c;
      while (m[p][c] == 0) ++p;
      std::swap(m[c], m[p]);
      mpq_class inv = 1 / m[c][c];
      for (auto& x : m[c]) x *= inv;
      for (std::size_t i = 0; i < n; ++i) {
        if (i == c || m[i][c] == 0) continue;
        mpq_class f = m[i][c];
        for (std::size_t j = c; j < 2 * n; ++j) m[i][j] -= f * m[c][j];
      }
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        mpq_class q = m[i][n + j];
        q.canonicalize();
        if (q.get_den() != 1)
          throw std::logic_error("saturate: V inverse not integral");
        vinv.at(i, j) = q.get_num();
      }
  }
  IntMatrix out(r, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) out.at(i, j) = vinv.at(i, j);
  return out;
}

IntMatrix hermite_normal_form(const IntMatrix& a) {
  IntMatrix h = a;
  const std::size_t rows = h.rows(), cols = h.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // clear column c below row r by gcd steps
    for (;;) {
      std::size_t p = rows;
      mpz_class best;
      for (std::size_t i = r; i < rows; ++i) {
        if (h.at(i, c) == 0) continue;
        mpz_class v = abs(h.at(i, c));
        if (p == rows || v < best) {
          p = i;
          best = v;
        }
      }
      if (p == rows) break;  // column all zero
      h.swap_rows(r, p);
      bool done = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (h.at(i, c) == 0) continue;
        mpz_class q = round_div(h.at(i, c), h.at(r, c));
        for (std::size_t j = 0; j < cols; ++j) h.at(i, j) -= q * h.at(r, j);
        if (h.at(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (r < rows && h.at(r, c) != 0) {
      if (h.at(r, c) < 0)
        for (std::size_t j = 0; j < cols; ++j) h.at(r, j) = -h.at(r, j);
      for (std::size_t i = 0; i < r; ++i) {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), h.at(i, c).get_mpz_t(),
                   h.at(r, c).get_mpz_t());
        if (q != 0)
          for (std::size_t j = 0; j < cols; ++j) h.at(i, j) -= q * h.at(r, j);
      }
      ++r;
    }
  }
  IntMatrix out(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) out.at(i, j) = h.at(i, j);
  return out;
}

std::vector<mpz_class> characteristic_polynomial(const IntMatrix& a) {
  if (!a.is_square())
    throw std::invalid_argument("characteristic_polynomial: non-square");
  const std::size_t n = a.rows();
  std::vector<mpz_class> c(n + 1);
  c[n] = 1;
  IntMatrix m(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) += c[n - k + 1];
    m = a * m;
    mpz_class tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += m.at(i, i);
    mpz_class ck = -tr;
    mpz_divexact(ck.get_mpz_t(), ck.get_mpz_t(), mpz_class(k).get_mpz_t());
    c[n - k] = ck;
  }
  return c;
}

}  // namespace cubicfm
