#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "loewy/field.hpp"

namespace loewy {

using Vec = std::vector<Elem>;

/// Dense row-major matrix over a finite field.
class Mat {
 public:
  Mat() = default;
  Mat(Field field, std::size_t rows, std::size_t cols);

  static Mat identity(Field field, std::size_t n);
  /// Matrix whose rows are the given vectors (all of length cols).
  static Mat from_rows(Field field, std::size_t cols, const std::vector<Vec>& rows);
  /// Matrix whose columns are the given vectors (all of length rows).
  static Mat from_columns(Field field, std::size_t rows, const std::vector<Vec>& cols);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  Vec row_vec(std::size_t r) const { return Vec(row(r).begin(), row(r).end()); }
  Vec column(std::size_t c) const;

  const std::vector<Elem>& data() const { return data_; }

  Mat operator*(const Mat& rhs) const;
  Vec operator*(const Vec& v) const;
  Mat operator+(const Mat& rhs) const;
  Mat operator-(const Mat& rhs) const;
  Mat scaled(Elem s) const;
  Mat transpose() const;
  /// Adds s * other into this matrix.
  void axpy(Elem s, const Mat& other);

  bool is_zero() const;
  bool operator==(const Mat& other) const;
  bool operator!=(const Mat& other) const { return !(*this == other); }

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

struct Rref {
  Mat reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form by Gauss-Jordan elimination.
Rref rref(Mat m);

std::size_t rank(const Mat& m);

/// Inverts a square matrix; returns false when singular.
bool invert(const Mat& m, Mat& inverse);

/// Some solution x of m x = b, or nullopt when inconsistent.
std::optional<Vec> solve(const Mat& m, const Vec& b);

/// Subspace of F^n stored as a basis in reduced row-echelon form.
///
/// The RREF basis is canonical, so two subspaces are equal exactly when their
/// basis matrices are equal.
class Subspace {
 public:
  Subspace() = default;
  /// The zero subspace of F^ambient.
  Subspace(Field field, std::size_t ambient);

  static Subspace span(Field field, std::size_t ambient, const std::vector<Vec>& vectors);
  static Subspace full(Field field, std::size_t ambient);
  /// Row space of m.
  static Subspace row_space(const Mat& m);

  const Field& field() const { return basis_.field(); }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  const Mat& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vec vector(std::size_t i) const { return basis_.row_vec(i); }
  std::vector<Vec> vectors() const;

  /// v minus its projection along the pivot coordinates; zero iff v is in the span.
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v (which must lie in the subspace) relative to the basis.
  Vec coordinates(const Vec& v) const;
  /// Linear map F^n -> F^n with kernel exactly this subspace (reduction map).
  Mat reduction_matrix() const;

  bool operator==(const Subspace& other) const;
  bool operator!=(const Subspace& other) const { return !(*this == other); }

 private:
  std::size_t ambient_ = 0;
  Mat basis_;
  std::vector<std::size_t> pivots_;
};

/// Right kernel {x : m x = 0}.
Subspace nullspace(const Mat& m);

Subspace subspace_sum(const Subspace& u, const Subspace& v);
Subspace subspace_intersect(const Subspace& u, const Subspace& v);

/// Smallest subspace containing `vectors` and invariant under every action.
Subspace spin(Field field, std::size_t dim, const std::vector<Vec>& vectors, std::span<const Mat> actions);

/// All X with X g = g X for every generator g, as a subspace of F^(d*d)
/// (X flattened row-major).
Subspace commutant(std::span<const Mat> generators);

/// Flattens a matrix row-major into a vector, and back.
Vec flatten(const Mat& m);
Mat unflatten(Field field, std::size_t rows, std::size_t cols, const Vec& v);

Vec vec_add(const Field& f, const Vec& a, const Vec& b);
Vec vec_sub(const Field& f, const Vec& a, const Vec& b);
Vec vec_scale(const Field& f, Elem s, const Vec& a);
bool vec_is_zero(const Vec& v);
Vec unit_vector(std::size_t n, std::size_t i);

}  // namespace loewy
