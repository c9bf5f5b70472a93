#pragma once

#include <map>
#include <string>
#include <vector>

#include "loewy/poset.hpp"
#include "loewy/structure.hpp"

namespace loewy {

struct CellIndex {
  std::string lambda;
  std::string s;
  std::string t;
  std::size_t basis = 0;
};

/// Cell datum (poset, index sets M(lambda), basis bijection, involution of the algebra).
/// Smaller labels index lower cells.
struct CellDatum {
  AlgebraPtr algebra;
  Poset poset;
  std::map<std::string, std::vector<std::string>> m_sets;
  std::vector<CellIndex> basis_index;
};

struct CellReport {
  bool valid = true;
  std::vector<std::string> violations;
};

/// Axioms C1 (basis bookkeeping), C2 (involution swaps S and T and is an
/// anti-automorphism of order 2) and C3 (left multiplication rule). Every
/// violated instance is listed.
CellReport check_axioms(const CellDatum& d);

/// 0 = I_0 < I_1 < ... < I_m = A along the poset's linear extension.
/// Throws ChainFailure naming an offending product.
std::vector<Subspace> cell_chain(const CellDatum& d);

/// Cell module W(lambda) on the basis M(lambda), built at a fixed T and
/// checked against every other T.
Rep cell_module(const CellDatum& d, const std::string& lambda);

/// phi(T, U) with C_{S,T} C_{U,V} = phi(T, U) C_{S,V} modulo lower cells.
/// Throws Error if the value depends on S or V.
Mat gram_form(const CellDatum& d, const std::string& lambda);

/// Labels with nonzero Gram form, in poset label order.
std::vector<std::string> simple_labels(const CellDatum& d);

/// W(lambda) modulo the radical of its Gram form.
Rep cell_simple(const CellDatum& d, const std::string& lambda);

/// Witnesses C_{U,T} (phi(T, U) != 0) naming each simple by its cell label,
/// bottom cells first.
std::vector<SimpleWitness> cell_witnesses(const CellDatum& d);

/// The datum's algebra with cell witnesses attached, so that simples carry
/// cell labels.
AlgebraPtr cell_labelled_algebra(const CellDatum& d);

/// Throws Error when the number of cell simples differs from the number of
/// simple modules found directly.
void check_cell_simple_count(const CellDatum& d, const AlgebraStructure& st);

}  // namespace loewy
