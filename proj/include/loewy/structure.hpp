#pragma once

#include <string>
#include <vector>

#include "loewy/rep.hpp"

namespace loewy {

/// Jacobson radical by the characteristic-p iterated trace-form chain.
///
/// Works over the prime field: for GF(p^k) the algebra is viewed as a GF(p)
/// algebra of dimension k*dim, and the result is converted back.
Subspace radical(const Algebra& a);

/// (rad A)^s as a two-sided ideal; s = 0 gives A.
Subspace ideal_power(const Algebra& a, const Subspace& ideal, std::size_t s);

/// A/I for a two-sided ideal I, with the complement basis {b_j : j not a pivot of I}.
struct QuotientAlgebra {
  Algebra algebra;
  std::vector<std::size_t> complement;

  Vec project(const Subspace& ideal, const Vec& a) const;
  Vec lift(std::size_t ambient_dim, const Vec& b) const;
};

QuotientAlgebra quotient_algebra(const Algebra& a, const Subspace& ideal);

/// Complete list of orthogonal primitive idempotents of a split semisimple
/// algebra, grouped by block. Throws NotSplit.
std::vector<std::vector<Vec>> semisimple_idempotents(const Algebra& b);

/// Lifts an idempotent modulo a nilpotent ideal by e <- 3e^2 - 2e^3.
Vec lift_idempotent(const Algebra& a, Vec e);

/// Everything derived from a split algebra: radical, a complete set of
/// orthogonal primitive idempotents, PIMs and simples, labelled.
class AlgebraStructure {
 public:
  explicit AlgebraStructure(AlgebraPtr algebra);

  const AlgebraPtr& algebra() const { return algebra_; }
  const Subspace& radical() const { return radical_; }
  /// Radical basis vectors as action-ready algebra elements.
  const std::vector<Vec>& radical_basis() const { return radical_basis_; }

  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t count() const { return labels_.size(); }
  /// Throws UnknownLabel.
  std::size_t index_of(const std::string& label) const;

  /// Representative primitive idempotent e with P(label) = A e.
  const Vec& idempotent(std::size_t i) const { return idempotents_[i]; }
  /// Full orthogonal decomposition 1 = sum of primitive idempotents.
  const std::vector<Vec>& all_idempotents() const { return all_idempotents_; }
  const std::vector<std::size_t>& idempotent_blocks() const { return idempotent_blocks_; }

  const Rep& pim(std::size_t i) const { return pims_[i]; }
  const Rep& simple(std::size_t i) const { return simples_[i]; }
  /// The left ideal A e_i underlying P(i), as a subspace of A.
  const Subspace& pim_subspace(std::size_t i) const { return pim_subspaces_[i]; }

 private:
  AlgebraPtr algebra_;
  Subspace radical_;
  std::vector<Vec> radical_basis_;
  std::vector<std::string> labels_;
  std::vector<Vec> idempotents_;
  std::vector<Vec> all_idempotents_;
  std::vector<std::size_t> idempotent_blocks_;
  std::vector<Subspace> pim_subspaces_;
  std::vector<Rep> pims_;
  std::vector<Rep> simples_;
};

}  // namespace loewy
