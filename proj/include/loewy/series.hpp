#pragma once

#include <map>
#include <string>
#include <vector>

#include "loewy/poset.hpp"
#include "loewy/structure.hpp"

namespace loewy {

/// Semisimple layer: simple label -> multiplicity.
using Layer = std::map<std::string, std::size_t>;
/// Layers from the top (head) or, for socle diagrams, from the socle.
using LoewyDiagram = std::vector<Layer>;

std::size_t layer_size(const Layer& layer);

/// rad^0 M = M, rad^1 M, ..., ending with the zero subspace (omitted for M = 0).
std::vector<Subspace> radical_series(const AlgebraStructure& st, const Rep& m);
/// soc^0 M = 0, soc^1 M, ..., ending with M.
std::vector<Subspace> socle_series(const AlgebraStructure& st, const Rep& m);
std::size_t loewy_length(const AlgebraStructure& st, const Rep& m);

/// Multiplicities of each simple in the semisimple subquotient upper/lower,
/// by dim Hom(upper/lower, L).
Layer semisimple_layer(const AlgebraStructure& st, const Rep& m, const Subspace& upper, const Subspace& lower);

/// Radical layers, layer 1 = head.
LoewyDiagram loewy_diagram(const AlgebraStructure& st, const Rep& m);
/// Socle layers, layer 1 = socle.
LoewyDiagram socle_diagram(const AlgebraStructure& st, const Rep& m);

/// rad^s M == soc^{l-s} M for every s.
bool is_rigid(const AlgebraStructure& st, const Rep& m);

/// I(i) realised as P(i)^#.
Rep injective_hull(const AlgebraStructure& st, std::size_t i);

/// Sum of the images of all maps P(nu) -> M over the given labels, i.e. A e_nu M.
Subspace trace_submodule(const AlgebraStructure& st, const Rep& m, const std::vector<std::size_t>& labels);

/// Largest submodule whose composition factors all avoid the given labels.
Subspace largest_submodule_avoiding(const AlgebraStructure& st, const Rep& m, const std::vector<std::size_t>& labels);

/// Labels nu with nu not <= lambda (indices into st.labels()).
std::vector<std::size_t> labels_not_below(const AlgebraStructure& st, const Poset& poset, std::size_t lambda);

/// Largest quotient of m with every composition factor labelled <= lambda.
/// Returns m itself when nothing has to be removed.
Rep max_quotient_leq(const AlgebraStructure& st, const Rep& m, std::size_t lambda, const Poset& poset);

/// Delta(lambda) = max_quotient_leq(P(lambda), lambda).
Rep standard_module(const AlgebraStructure& st, const Poset& poset, std::size_t lambda);
/// Nabla(lambda): largest submodule of I(lambda) with factors <= lambda.
Rep costandard_module(const AlgebraStructure& st, const Poset& poset, std::size_t lambda);

/// [M : L(i)] = dim e_i M.
std::size_t composition_multiplicity(const AlgebraStructure& st, const Rep& m, std::size_t i);

struct CartanMatrix {
  std::vector<std::string> labels;
  /// entries[mu][lambda] = [P(mu) : L(lambda)].
  std::vector<std::vector<std::size_t>> entries;
};

CartanMatrix cartan_matrix(const AlgebraStructure& st);

/// Checks that each layer's labels are known and the dimensions add up.
bool diagram_consistent(const AlgebraStructure& st, const Rep& m, const LoewyDiagram& d);

}  // namespace loewy
