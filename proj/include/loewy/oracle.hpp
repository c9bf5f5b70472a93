#pragma once

#include <optional>
#include <string>
#include <vector>

#include "loewy/structure.hpp"

namespace loewy {

/// Brute-force recomputation of the radical, simples and PIM layers, sharing
/// only the dense linear algebra with the main path (no trace forms, no
/// idempotent lifting).

/// A proper nonzero submodule, or nullopt when m is irreducible. Searches
/// eigenspaces of sample elements, proving irreducibility by Norton's test
/// and falling back to Burnside. Throws Error when neither succeeds.
std::optional<Subspace> find_proper_submodule(const Rep& m);

struct CompositionFactors {
  /// Pairwise non-isomorphic irreducible factors, in order of discovery.
  std::vector<Rep> simples;
  std::vector<std::size_t> multiplicities;
};

CompositionFactors composition_factors(const Rep& m);

/// Intersection of the annihilators of the given simples.
Subspace annihilator_radical(const Algebra& a, const std::vector<Rep>& simples);

struct OracleComparison {
  bool agrees = true;
  std::vector<std::string> mismatches;
};

/// Radical, simple dimensions, regular multiplicities and PIM radical layers
/// recomputed by brute force and compared with `st`.
OracleComparison oracle_crosscheck(const AlgebraStructure& st);

}  // namespace loewy
