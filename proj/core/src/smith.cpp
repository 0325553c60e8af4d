#include "sbraid/smith.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sbraid {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b(k, j) != 0) mpz_addmul(out(i, j).get_mpz_t(), x.get_mpz_t(), b(k, j).get_mpz_t());
      }
    }
  }
  return out;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& f) {
  if (f == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) {
    if ((*this)(src, j) != 0) mpz_addmul((*this)(dst, j).get_mpz_t(), f.get_mpz_t(), (*this)(src, j).get_mpz_t());
  }
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& f) {
  if (f == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) {
    if ((*this)(i, src) != 0) mpz_addmul((*this)(i, dst).get_mpz_t(), f.get_mpz_t(), (*this)(i, src).get_mpz_t());
  }
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j) mpz_neg((*this)(r, j).get_mpz_t(), (*this)(r, j).get_mpz_t());
}

namespace {

// Row (or, with `cols`, column) operations on d, mirrored on the transform t
// when t is non-null.  "Line" means row or column accordingly.
class Lines {
 public:
  Lines(IntMatrix& d, IntMatrix* t, bool cols) : d_(d), t_(t), cols_(cols) {}

  std::size_t count() const { return cols_ ? d_.cols() : d_.rows(); }
  std::size_t length() const { return cols_ ? d_.rows() : d_.cols(); }
  Integer& at(std::size_t line, std::size_t k) { return cols_ ? d_(k, line) : d_(line, k); }

  void swap(std::size_t a, std::size_t b) {
    if (a == b) return;
    if (cols_) {
      d_.swap_cols(a, b);
      if (t_) t_->swap_cols(a, b);
    } else {
      d_.swap_rows(a, b);
      if (t_) t_->swap_rows(a, b);
    }
  }
  void add_multiple(std::size_t dst, std::size_t src, const Integer& f) {
    if (cols_) {
      d_.add_col_multiple(dst, src, f);
      if (t_) t_->add_col_multiple(dst, src, f);
    } else {
      d_.add_row_multiple(dst, src, f);
      if (t_) t_->add_row_multiple(dst, src, f);
    }
  }
  void negate(std::size_t a) {
    negate_in(d_, a);
    if (t_) negate_in(*t_, a);
  }
  // (a, b) <- (s a + u b, -y a + x b), determinant s x + u y = 1
  void combine(std::size_t a, std::size_t b, const Integer& s, const Integer& u, const Integer& x, const Integer& y) {
    combine_in(d_, a, b, s, u, x, y);
    if (t_) combine_in(*t_, a, b, s, u, x, y);
  }

 private:
  void negate_in(IntMatrix& m, std::size_t a) const {
    std::size_t n = cols_ ? m.rows() : m.cols();
    for (std::size_t k = 0; k < n; ++k) {
      Integer& v = cols_ ? m(k, a) : m(a, k);
      mpz_neg(v.get_mpz_t(), v.get_mpz_t());
    }
  }
  void combine_in(IntMatrix& m, std::size_t a, std::size_t b, const Integer& s, const Integer& u, const Integer& x,
                  const Integer& y) const {
    std::size_t n = cols_ ? m.rows() : m.cols();
    Integer va, vb;
    for (std::size_t k = 0; k < n; ++k) {
      Integer& pa = cols_ ? m(k, a) : m(a, k);
      Integer& pb = cols_ ? m(k, b) : m(b, k);
      if (pa == 0 && pb == 0) continue;
      va = pa;
      vb = pb;
      pa = s * va + u * vb;
      pb = x * vb - y * va;
    }
  }

  IntMatrix& d_;
  IntMatrix* t_;
  bool cols_;
};

// Echelon form with positive pivots and entries above each pivot reduced
// into [0, pivot).  Lines are inserted one at a time and the whole echelon
// block is size-reduced after every insertion, which keeps entries (and
// the transform) from blowing up.  Returns the pivot positions.
std::vector<std::size_t> hermite(Lines& m) {
  std::vector<std::size_t> piv;  // piv[p] = pivot position of line p
  const std::size_t len = m.length();
  Integer g, s, u, q;
  for (std::size_t i = 0; i < m.count(); ++i) {
    std::size_t cur = piv.size();
    m.swap(cur, i);
    // clear pivot columns in order; the first other nonzero becomes a pivot
    std::size_t lead = len;
    for (std::size_t p = 0, k = 0; k < len; ++k) {
      while (p < piv.size() && piv[p] < k) ++p;
      if (m.at(cur, k) == 0) continue;
      if (p == piv.size() || piv[p] != k) {
        lead = k;
        break;
      }
      if (mpz_divisible_p(m.at(cur, k).get_mpz_t(), m.at(p, k).get_mpz_t())) {
        mpz_divexact(q.get_mpz_t(), m.at(cur, k).get_mpz_t(), m.at(p, k).get_mpz_t());
        m.add_multiple(cur, p, -q);
        continue;
      }
      Integer a = m.at(p, k), b = m.at(cur, k);
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), u.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      Integer x = a / g, y = b / g;
      m.combine(p, cur, s, u, x, y);
    }
    if (lead == len) continue;  // dependent line; stays below the echelon block
    if (m.at(cur, lead) < 0) m.negate(cur);
    // move into place so that pivot positions increase
    std::size_t pos = cur;
    while (pos > 0 && piv[pos - 1] > lead) {
      m.swap(pos - 1, pos);
      --pos;
    }
    piv.insert(piv.begin() + static_cast<std::ptrdiff_t>(pos), lead);
    for (std::size_t r = 0; r < piv.size(); ++r) {
      const std::size_t c = piv[r];
      for (std::size_t k = 0; k < r; ++k) {
        if (m.at(k, c) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), m.at(k, c).get_mpz_t(), m.at(r, c).get_mpz_t());
        if (q != 0) m.add_multiple(k, r, -q);
      }
    }
  }
  return piv;
}

// at most one nonzero per row
bool pivots_only(const IntMatrix& d) {
  for (std::size_t i = 0; i < d.rows(); ++i) {
    int nz = 0;
    for (std::size_t j = 0; j < d.cols(); ++j) nz += d(i, j) != 0;
    if (nz > 1) return false;
  }
  return true;
}

void reduce_to_smith(IntMatrix& d, IntMatrix* u, IntMatrix* v) {
  Lines rows(d, u, false), cols(d, v, true);
  // Alternate row and column Hermite forms until only pivots are left.
  std::vector<std::size_t> piv = hermite(rows);
  while (!pivots_only(d)) {
    hermite(cols);
    piv = hermite(rows);
  }
  // pivots sit at (p, piv[p]) with piv increasing; move them onto the diagonal
  for (std::size_t p = 0; p < piv.size(); ++p) cols.swap(p, piv[p]);
  // divisibility chain
  const std::size_t k = piv.size();
  Integer g, s, t, q;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (mpz_divisible_p(d(j, j).get_mpz_t(), d(i, i).get_mpz_t())) continue;
      Integer a = d(i, i), b = d(j, j);
      rows.add_multiple(i, j, 1);  // [[a, b], [0, b]]
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      cols.combine(i, j, s, t, a / g, b / g);  // row i -> [g, 0], row j -> [t b, a b / g]
      mpz_divexact(q.get_mpz_t(), d(j, i).get_mpz_t(), g.get_mpz_t());
      rows.add_multiple(j, i, -q);
    }
  }
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm s{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  reduce_to_smith(s.D, &s.U, &s.V);
  return s;
}

std::vector<Integer> invariant_factors(IntMatrix m) {
  reduce_to_smith(m, nullptr, nullptr);
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) {
    if (m(i, i) != 0) out.push_back(m(i, i));
  }
  return out;
}

Integer determinant(IntMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return 0;
      m.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

}  // namespace sbraid
