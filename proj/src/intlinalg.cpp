#include "k0/intlinalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace k0::linalg {

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer trunc_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// row[dst] += factor * row[src]
void add_row_multiple(IntegerMatrix& m, std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += factor * m(src, j);
}

// col[dst] += factor * col[src]
void add_col_multiple(IntegerMatrix& m, std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += factor * m(i, src);
}

void swap_rows(IntegerMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) swap(m(a, j), m(b, j));
}

void swap_cols(IntegerMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) swap(m(i, a), m(i, b));
}

void negate_row(IntegerMatrix& m, std::size_t i) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
}

void subtract_multiple(IntVector& v, std::span<const Integer> row, const Integer& q) {
  for (std::size_t j = 0; j < v.size(); ++j) v[j] -= q * row[j];
}

void check_dim(const Lattice& lattice, std::size_t n) {
  if (lattice.ambient_dim() != n) {
    throw std::invalid_argument("dimension mismatch: lattice in Z^" +
                                std::to_string(lattice.ambient_dim()) + ", vector of length " +
                                std::to_string(n));
  }
}

}  // namespace

IntVector make_vector(std::initializer_list<long> values) {
  IntVector v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x);
  return v;
}

IntVector zero_vector(std::size_t n) { return IntVector(n, Integer(0)); }

IntVector unit_vector(std::size_t n, std::size_t i) {
  IntVector v = zero_vector(n);
  v.at(i) = 1;
  return v;
}

IntVector add(std::span<const Integer> u, std::span<const Integer> v) {
  if (u.size() != v.size()) throw std::invalid_argument("vector length mismatch");
  IntVector out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = u[i] + v[i];
  return out;
}

IntVector subtract(std::span<const Integer> u, std::span<const Integer> v) {
  if (u.size() != v.size()) throw std::invalid_argument("vector length mismatch");
  IntVector out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = u[i] - v[i];
  return out;
}

IntVector scaled(std::span<const Integer> v, const Integer& factor) {
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * factor;
  return out;
}

Integer coordinate_sum(std::span<const Integer> v) {
  Integer s = 0;
  for (const auto& x : v) s += x;
  return s;
}

bool is_zero(std::span<const Integer> v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

std::string to_string(std::span<const Integer> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

// ---------------------------------------------------------------------------
// IntegerMatrix

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Integer(0)) {}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(std::size_t cols, const std::vector<IntVector>& rows) {
  IntegerMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
    std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
  }
  return m;
}

IntegerMatrix IntegerMatrix::of(std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t cols = rows.size() ? rows.begin()->size() : 0;
  std::vector<IntVector> vs;
  for (auto r : rows) vs.push_back(make_vector(r));
  return from_rows(cols, vs);
}

IntVector IntegerMatrix::row_vector(std::size_t i) const {
  auto r = row(i);
  return IntVector(r.begin(), r.end());
}

std::vector<IntVector> IntegerMatrix::row_vectors() const {
  std::vector<IntVector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row_vector(i));
  return out;
}

IntegerMatrix IntegerMatrix::transposed() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntegerMatrix IntegerMatrix::without_column(std::size_t col) const {
  if (col >= cols_) throw std::out_of_range("column index out of range");
  IntegerMatrix m(rows_, cols_ - 1);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0, k = 0; j < cols_; ++j)
      if (j != col) m(i, k++) = (*this)(i, j);
  return m;
}

bool IntegerMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Integer& x) { return x == 0; });
}

std::string IntegerMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ",";
    os << linalg::to_string(row(i));
  }
  os << "]";
  return os.str();
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product dimension mismatch");
  IntegerMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

IntVector operator*(std::span<const Integer> v, const IntegerMatrix& m) {
  if (v.size() != m.rows()) throw std::invalid_argument("vector-matrix dimension mismatch");
  IntVector out = zero_vector(m.cols());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m(i, j);
  }
  return out;
}

Integer determinant(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntegerMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      swap_rows(a, k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

// ---------------------------------------------------------------------------
// Hermite normal form and lattices

Lattice::Lattice(std::size_t ambient_dim) : ambient_dim_(ambient_dim), basis_(0, ambient_dim) {}

Lattice hermite_normal_form(const IntegerMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::vector<IntVector> rows = a.row_vectors();
  std::vector<std::size_t> pivots;

  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    bool have_pivot = false;
    while (true) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i) {
        if (rows[i][c] == 0) continue;
        if (best == m || abs(rows[i][c]) < abs(rows[best][c])) best = i;
      }
      if (best == m) break;
      have_pivot = true;
      std::swap(rows[r], rows[best]);
      bool remainder = false;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (rows[i][c] == 0) continue;
        subtract_multiple(rows[i], rows[r], trunc_div(rows[i][c], rows[r][c]));
        if (rows[i][c] != 0) remainder = true;
      }
      if (!remainder) break;
    }
    if (!have_pivot) continue;
    if (rows[r][c] < 0)
      for (auto& x : rows[r]) x = -x;
    pivots.push_back(c);
    ++r;
  }

  // Reduce entries above each pivot into [0, pivot).
  for (std::size_t i = 0; i < r; ++i) {
    const std::size_t c = pivots[i];
    for (std::size_t k = 0; k < i; ++k) {
      Integer q = floor_div(rows[k][c], rows[i][c]);
      if (q != 0) subtract_multiple(rows[k], rows[i], q);
    }
  }

  Lattice lattice(n);
  rows.resize(r);
  lattice.basis_ = IntegerMatrix::from_rows(n, rows);
  lattice.pivots_ = std::move(pivots);
  return lattice;
}

Lattice lattice_span(std::size_t ambient_dim, const std::vector<IntVector>& generators) {
  return hermite_normal_form(IntegerMatrix::from_rows(ambient_dim, generators));
}

Lattice lattice_sum(const Lattice& a, const Lattice& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("dimension mismatch");
  auto rows = a.basis().row_vectors();
  auto more = b.basis().row_vectors();
  rows.insert(rows.end(), more.begin(), more.end());
  return lattice_span(a.ambient_dim(), rows);
}

Lattice lattice_image(const Lattice& lattice, const IntegerMatrix& m) {
  if (lattice.ambient_dim() != m.rows()) throw std::invalid_argument("dimension mismatch");
  return hermite_normal_form(lattice.basis() * m);
}

IntVector canonical_coset_rep(const Lattice& lattice, std::span<const Integer> v) {
  check_dim(lattice, v.size());
  IntVector out(v.begin(), v.end());
  const auto& basis = lattice.basis();
  const auto pivots = lattice.pivots();
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    Integer q = floor_div(out[pivots[i]], basis(i, pivots[i]));
    if (q != 0) subtract_multiple(out, basis.row(i), q);
  }
  return out;
}

bool lattice_contains(const Lattice& lattice, std::span<const Integer> v) {
  return is_zero(canonical_coset_rep(lattice, v));
}

bool lattice_equal(const Lattice& a, const Lattice& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("dimension mismatch");
  return a.basis() == b.basis();
}

std::vector<IntVector> canonical_coset_reps(const Lattice& lattice, std::span<const IntVector> vs) {
  for (const auto& v : vs) check_dim(lattice, v.size());
  std::vector<IntVector> out(vs.size());
  const long count = static_cast<long>(vs.size());
#pragma omp parallel for schedule(static) if (count > 64)
  for (long i = 0; i < count; ++i) out[i] = canonical_coset_rep(lattice, vs[i]);
  return out;
}

namespace serial {
std::vector<IntVector> canonical_coset_reps(const Lattice& lattice, std::span<const IntVector> vs) {
  std::vector<IntVector> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(canonical_coset_rep(lattice, v));
  return out;
}
}  // namespace serial

// ---------------------------------------------------------------------------
// Smith normal form

SmithDecomposition smith_normal_form(const IntegerMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  SmithDecomposition s{IntegerMatrix::identity(m), a, IntegerMatrix::identity(n),
                       IntegerMatrix::identity(n), {}, 0};
  IntegerMatrix& D = s.D;

  // Column operations are mirrored on V and, inverted, on V_inverse.
  auto col_add = [&](std::size_t dst, std::size_t src, const Integer& f) {
    add_col_multiple(D, dst, src, f);
    add_col_multiple(s.V, dst, src, f);
    add_row_multiple(s.V_inverse, src, dst, -f);
  };
  auto col_swap = [&](std::size_t x, std::size_t y) {
    swap_cols(D, x, y);
    swap_cols(s.V, x, y);
    swap_rows(s.V_inverse, x, y);
  };
  auto row_add = [&](std::size_t dst, std::size_t src, const Integer& f) {
    add_row_multiple(D, dst, src, f);
    add_row_multiple(s.U, dst, src, f);
  };
  auto row_swap = [&](std::size_t x, std::size_t y) {
    swap_rows(D, x, y);
    swap_rows(s.U, x, y);
  };

  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    std::size_t pi = m, pj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (D(i, j) != 0 && (pi == m || abs(D(i, j)) < abs(D(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi == m) break;
    row_swap(t, pi);
    col_swap(t, pj);

    while (true) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (D(i, t) == 0) continue;
        row_add(i, t, -trunc_div(D(i, t), D(t, t)));
        if (D(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (D(t, j) == 0) continue;
        col_add(j, t, -trunc_div(D(t, j), D(t, t)));
        if (D(t, j) != 0) dirty = true;
      }
      if (dirty) {
        // A remainder smaller than the pivot survived; promote it.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < m; ++i)
          if (D(i, t) != 0 && abs(D(i, t)) < abs(D(bi, bj))) {
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < n; ++j)
          if (D(t, j) != 0 && abs(D(t, j)) < abs(D(bi, bj))) {
            bi = t;
            bj = j;
          }
        row_swap(t, bi);
        col_swap(t, bj);
        continue;
      }
      // Row and column are clear; enforce divisibility of the remaining block.
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(D(i, j).get_mpz_t(), D(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == m) break;
      row_add(t, bad, 1);
    }
    if (D(t, t) < 0) {
      negate_row(D, t);
      negate_row(s.U, t);
    }
  }
  s.rank = t;
  for (std::size_t i = 0; i < t; ++i)
    if (D(i, i) > 1) s.invariant_factors.push_back(D(i, i));
  return s;
}

// ---------------------------------------------------------------------------
// Finitely presented abelian groups

std::string AbelianInvariants::to_string() const {
  if (trivial()) return "0";
  std::string s;
  if (free_rank > 0) s = "Z^" + std::to_string(free_rank);
  for (const auto& d : torsion) {
    if (!s.empty()) s += " + ";
    s += "Z/" + d.get_str();
  }
  return s;
}

FinitelyPresentedGroup::FinitelyPresentedGroup(Lattice relations) : relations_(std::move(relations)) {
  SmithDecomposition snf = smith_normal_form(relations_.basis());
  const std::size_t n = relations_.ambient_dim();
  V_ = std::move(snf.V);
  for (std::size_t i = 0; i < snf.rank; ++i) {
    if (snf.D(i, i) > 1) {
      columns_.push_back(i);
      moduli_.push_back(snf.D(i, i));
    }
  }
  for (std::size_t i = snf.rank; i < n; ++i) {
    columns_.push_back(i);
    moduli_.push_back(0);
  }
  invariants_.free_rank = n - snf.rank;
  invariants_.torsion = snf.invariant_factors;
  for (std::size_t c : columns_) generators_.push_back(snf.V_inverse.row_vector(c));
}

IntVector FinitelyPresentedGroup::coordinates(std::span<const Integer> v) const {
  if (v.size() != ambient_dim()) throw std::invalid_argument("dimension mismatch");
  IntVector y = v * V_;
  IntVector out;
  out.reserve(columns_.size());
  for (std::size_t k = 0; k < columns_.size(); ++k) {
    Integer c = y[columns_[k]];
    if (moduli_[k] != 0) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), moduli_[k].get_mpz_t());
    out.push_back(std::move(c));
  }
  return out;
}

bool FinitelyPresentedGroup::same_class(std::span<const Integer> u, std::span<const Integer> v) const {
  return lattice_contains(relations_, subtract(u, v));
}

}  // namespace k0::linalg
