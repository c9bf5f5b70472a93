#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "loewy/linalg.hpp"

namespace loewy {

/// An algebra element together with the simple-module name it certifies.
///
/// Simples are named by the first witness in list order that acts nonzero on
/// them. Lists are ordered so that this rule is unambiguous (e.g. weight
/// idempotents from the top weight down).
struct SimpleWitness {
  std::string name;
  Vec element;
};

/// Finite-dimensional associative unital algebra given by structure constants.
///
/// mult(i, j) holds the coordinate vector of b_i b_j. The optional involution
/// is stored column-wise: column j is the coordinate vector of i(b_j).
class Algebra {
 public:
  Algebra(Field field, std::vector<std::string> labels, std::vector<Vec> mult, Vec unit,
          std::optional<Mat> involution = std::nullopt, std::vector<SimpleWitness> witnesses = {});

  const Field& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Vec& mult(std::size_t i, std::size_t j) const { return mult_[i * dim_ + j]; }
  const Vec& unit() const { return unit_; }
  bool has_involution() const { return involution_.has_value(); }
  /// Throws NoInvolution when absent.
  const Mat& involution() const;
  const std::vector<SimpleWitness>& witnesses() const { return witnesses_; }

  Vec multiply(const Vec& a, const Vec& b) const;
  Vec apply_involution(const Vec& a) const;
  Vec basis_element(std::size_t i) const { return unit_vector(dim_, i); }

  /// Matrix of x -> b_i x, i.e. the regular representation of b_i.
  const Mat& left_mult(std::size_t i) const { return left_[i]; }
  /// Matrix of x -> x b_i.
  const Mat& right_mult(std::size_t i) const { return right_[i]; }
  Mat left_mult_of(const Vec& a) const;
  Mat right_mult_of(const Vec& a) const;

  /// Basis indices generating the algebra (together with the unit).
  const std::vector<std::size_t>& generators() const { return generators_; }

  /// Same multiplication with a different (or no) involution / witnesses.
  Algebra with_involution(std::optional<Mat> involution) const;
  Algebra with_witnesses(std::vector<SimpleWitness> witnesses) const;

  /// Re-expresses the algebra in a new basis; column j of `basis` is the j-th
  /// new basis vector in old coordinates. The involution and witnesses follow.
  Algebra change_basis(const Mat& basis, std::vector<std::string> new_labels) const;

  bool operator==(const Algebra& other) const;

 private:
  Field field_;
  std::size_t dim_;
  std::vector<std::string> labels_;
  std::vector<Vec> mult_;
  Vec unit_;
  std::optional<Mat> involution_;
  std::vector<SimpleWitness> witnesses_;
  std::vector<Mat> left_;
  std::vector<Mat> right_;
  std::vector<std::size_t> generators_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

struct AlgebraReport {
  bool valid = true;
  std::vector<std::string> violations;
};

/// The same structure constants read in a field with the same characteristic.
/// Throws Error unless `a` is defined over the prime field of `to`.
Algebra extend_scalars(const Algebra& a, const Field& to);

/// Equal field, structure constants, unit and involution (labels and witnesses ignored).
bool same_structure(const Algebra& a, const Algebra& b);

/// Checks associativity on all basis triples, the unit, and (if present) that
/// the involution is an anti-automorphism squaring to the identity.
AlgebraReport validate_algebra(const Algebra& a);

}  // namespace loewy
