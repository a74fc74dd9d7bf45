#pragma once

// Exact integer linear algebra over arbitrary-precision integers.
//
// Conventions used throughout the library:
//  * vectors are row vectors; a lattice is the row span of a matrix;
//  * Hermite normal form is row-style: rows are linearly independent, the
//    pivot (first nonzero entry) of each row is positive and lies strictly
//    to the right of the previous row's pivot, and every entry above a pivot
//    is reduced into [0, pivot);
//  * a Smith decomposition satisfies U * A * V == D.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace k0::linalg {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

IntVector make_vector(std::initializer_list<long> values);
IntVector zero_vector(std::size_t n);
IntVector unit_vector(std::size_t n, std::size_t i);

IntVector add(std::span<const Integer> u, std::span<const Integer> v);
IntVector subtract(std::span<const Integer> u, std::span<const Integer> v);
IntVector scaled(std::span<const Integer> v, const Integer& factor);
Integer coordinate_sum(std::span<const Integer> v);
bool is_zero(std::span<const Integer> v);
std::string to_string(std::span<const Integer> v);

class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);

  static IntegerMatrix identity(std::size_t n);
  /// Builds a matrix from row vectors; every row must have `cols` entries.
  static IntegerMatrix from_rows(std::size_t cols, const std::vector<IntVector>& rows);
  static IntegerMatrix of(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::span<Integer> row(std::size_t i) { return {entries_.data() + i * cols_, cols_}; }
  std::span<const Integer> row(std::size_t i) const { return {entries_.data() + i * cols_, cols_}; }
  IntVector row_vector(std::size_t i) const;
  std::vector<IntVector> row_vectors() const;

  IntegerMatrix transposed() const;
  IntegerMatrix without_column(std::size_t col) const;
  bool is_zero() const;
  std::string to_string() const;

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
/// Row vector times matrix.
IntVector operator*(std::span<const Integer> v, const IntegerMatrix& m);

/// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(const IntegerMatrix& m);

/// A sublattice of Z^n held by its canonical Hermite basis.
class Lattice {
 public:
  Lattice() = default;
  /// The zero lattice in Z^ambient_dim.
  explicit Lattice(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t rank() const { return basis_.rows(); }
  bool empty() const { return basis_.rows() == 0; }
  const IntegerMatrix& basis() const { return basis_; }
  /// Column index of the pivot of each basis row.
  std::span<const std::size_t> pivots() const { return pivots_; }

  friend bool operator==(const Lattice&, const Lattice&) = default;

 private:
  friend Lattice hermite_normal_form(const IntegerMatrix& a);

  std::size_t ambient_dim_ = 0;
  IntegerMatrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Canonical Hermite basis of the row span of `a`. Zero rows are dropped, so
/// an all-zero input yields the zero lattice.
Lattice hermite_normal_form(const IntegerMatrix& a);
Lattice lattice_span(std::size_t ambient_dim, const std::vector<IntVector>& generators);
Lattice lattice_sum(const Lattice& a, const Lattice& b);
/// Image of the lattice under v -> v * m.
Lattice lattice_image(const Lattice& lattice, const IntegerMatrix& m);

/// Throws std::invalid_argument when v has the wrong length.
bool lattice_contains(const Lattice& lattice, std::span<const Integer> v);
/// Unique representative of v + L: every pivot coordinate is reduced into
/// [0, pivot) by subtracting basis rows top to bottom.
IntVector canonical_coset_rep(const Lattice& lattice, std::span<const Integer> v);
bool lattice_equal(const Lattice& a, const Lattice& b);

/// Batch reduction of many vectors against one lattice (OpenMP over vectors).
std::vector<IntVector> canonical_coset_reps(const Lattice& lattice, std::span<const IntVector> vs);

namespace serial {
std::vector<IntVector> canonical_coset_reps(const Lattice& lattice, std::span<const IntVector> vs);
}  // namespace serial

struct SmithDecomposition {
  IntegerMatrix U;
  IntegerMatrix D;
  IntegerMatrix V;
  /// Inverse of V, tracked alongside it; rows give generators of the cokernel
  /// of the row-span map.
  IntegerMatrix V_inverse;
  /// Diagonal entries strictly greater than one, in divisibility order.
  std::vector<Integer> invariant_factors;
  /// Number of nonzero diagonal entries.
  std::size_t rank = 0;

  /// Free rank of Z^rows / (column span of A).
  std::size_t cokernel_free_rank() const { return D.rows() - rank; }
  /// Free rank of Z^cols / (row span of A).
  std::size_t row_quotient_free_rank() const { return D.cols() - rank; }
};

SmithDecomposition smith_normal_form(const IntegerMatrix& a);

/// Structure of a finitely generated abelian group Z^free_rank + sum Z/d_i.
struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  /// "0", "Z^2", "Z/2 + Z/4", "Z^1 + Z/3".
  std::string to_string() const;

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

/// The quotient Z^n / L together with Smith coordinates on it.
///
/// Coordinates of a class are listed torsion factors first (reduced into
/// [0, d)) and free factors after, matching invariants().
class FinitelyPresentedGroup {
 public:
  FinitelyPresentedGroup() : FinitelyPresentedGroup(Lattice(0)) {}
  explicit FinitelyPresentedGroup(Lattice relations);

  std::size_t ambient_dim() const { return relations_.ambient_dim(); }
  const Lattice& relations() const { return relations_; }
  const AbelianInvariants& invariants() const { return invariants_; }

  std::size_t coordinate_count() const { return columns_.size(); }
  /// Modulus of each coordinate; zero for free coordinates.
  std::span<const Integer> moduli() const { return moduli_; }
  IntVector coordinates(std::span<const Integer> v) const;
  /// Ambient representatives of the cyclic generators, one per coordinate.
  const std::vector<IntVector>& generators() const { return generators_; }

  bool same_class(std::span<const Integer> u, std::span<const Integer> v) const;

 private:
  Lattice relations_;
  IntegerMatrix V_;
  AbelianInvariants invariants_;
  std::vector<std::size_t> columns_;
  std::vector<Integer> moduli_;
  std::vector<IntVector> generators_;
};

}  // namespace k0::linalg
