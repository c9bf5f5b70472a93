#pragma once

#include <vector>

#include "loewy/cellular.hpp"
#include "loewy/poset.hpp"

namespace loewy {

/// Algebra together with a weight poset on its simple labels.
struct WeightedAlgebra {
  AlgebraPtr algebra;
  Poset poset;
};

/// k[S_n] on permutations in lexicographic order, involution g -> g^-1.
/// For n = 3 the simples are named (triv, sign, std as applicable).
Algebra group_algebra_sym(std::size_t n, const Field& field);

/// k[S_n] in the Murphy basis m_{st} = d(s) x_lambda d(t)^-1, as a cell datum.
/// Labels are partitions written as digit strings ("21"); more dominant is lower.
CellDatum murphy_sym(std::size_t n, const Field& field);

/// Temperley-Lieb algebra TL_n(delta) in the planar diagram basis, as a cell datum.
/// Cell labels are through-strand counts; fewer strands is lower.
CellDatum temperley_lieb(std::size_t n, Elem delta, const Field& field);

/// Schur algebra S(2, r) as the commutant of S_r on (k^2)^{tensor r};
/// weights "a,b" with a >= b, less dominant is lower.
WeightedAlgebra schur_algebra_2r(std::size_t r, const Field& field);

/// Direct sum of full matrix algebras M_d(k); simples L0, L1, ...
WeightedAlgebra semisimple(const std::vector<std::size_t>& blocks, const Field& field);

/// k[x]/(x^2), identity involution.
Algebra truncated_polynomial(const Field& field);

/// Upper triangular n x n matrices; no involution.
Algebra upper_triangular(std::size_t n, const Field& field);

}  // namespace loewy
