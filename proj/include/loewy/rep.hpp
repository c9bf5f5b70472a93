#pragma once

#include <optional>
#include <vector>

#include "loewy/algebra.hpp"

namespace loewy {

/// A finite-dimensional left module: one action matrix per algebra basis element.
class Rep {
 public:
  Rep() = default;
  Rep(AlgebraPtr algebra, std::vector<Mat> action);

  static Rep regular(AlgebraPtr algebra);
  static Rep zero(AlgebraPtr algebra);

  const AlgebraPtr& algebra() const { return algebra_; }
  const Field& field() const { return algebra_->field(); }
  std::size_t dim() const { return dim_; }
  const Mat& action(std::size_t i) const { return action_[i]; }
  const std::vector<Mat>& actions() const { return action_; }
  /// Action matrices of the algebra's generating set; enough for closure tests.
  std::vector<Mat> generator_actions() const;
  /// Action of an arbitrary algebra element.
  Mat act(const Vec& element) const;

  bool operator==(const Rep& other) const;

 private:
  AlgebraPtr algebra_;
  std::size_t dim_ = 0;
  std::vector<Mat> action_;
};

/// Lists every failure of the homomorphism property (empty when valid).
std::vector<std::string> validate_rep(const Rep& m);

/// Smallest submodule containing the vectors.
Subspace generate_submodule(const Rep& m, const std::vector<Vec>& vectors);
bool is_submodule(const Rep& m, const Subspace& u);

/// Module structure on u (basis = RREF basis of u).
Rep submodule(const Rep& m, const Subspace& u);
/// Module structure on m/u. Quotient coordinates are the non-pivot coordinates of u.
Rep quotient(const Rep& m, const Subspace& u);
/// Module structure on w/u for submodules u ⊆ w.
Rep subquotient(const Rep& m, const Subspace& w, const Subspace& u);
/// Coordinates of v + u in quotient(m, u).
Vec quotient_coordinates(const Subspace& u, const Vec& v);
/// Preimage in m of a subspace of quotient(m, u).
Subspace quotient_preimage(const Subspace& u, const Subspace& image);

Rep direct_sum(const Rep& a, const Rep& b);

/// The ♯-dual: b acts on the dual space by the transpose of i(b).
Rep dual_sharp(const Rep& m);

/// Basis of Hom_A(m, n); each map is a dim(n) x dim(m) matrix.
std::vector<Mat> hom_space(const Rep& m, const Rep& n);
bool is_intertwiner(const Rep& m, const Rep& n, const Mat& f);

/// An explicit isomorphism m -> n, if one exists.
std::optional<Mat> find_isomorphism(const Rep& m, const Rep& n);
bool is_isomorphic(const Rep& m, const Rep& n);

/// Absolute irreducibility: the action spans all of End_k(m) (Burnside).
bool is_absolutely_simple(const Rep& m);

}  // namespace loewy
