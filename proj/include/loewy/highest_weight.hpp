#pragma once

#include <string>
#include <vector>

#include "loewy/series.hpp"

namespace loewy {

struct FiltrationSection {
  std::string lambda;
  /// Radical depth of the head (Delta side) or socle depth of the socle (Nabla side).
  std::size_t depth = 0;
  /// A vector of the filtered module: the head generator (Delta) or a socle vector (Nabla).
  Vec generator;
};

using Filtration = std::vector<FiltrationSection>;

enum class TieBreak { LabelOrder, Reversed };

/// Delta-filtration, maximal weights peeled off first as trace submodules.
/// Throws NotDeltaFiltered.
Filtration delta_filtration(const AlgebraStructure& st, const Rep& m, const Poset& poset,
                            TieBreak tie = TieBreak::LabelOrder);

/// Nabla-filtration, maximal weights peeled off the top first; depths are socle depths.
/// Throws NotDeltaFiltered.
Filtration nabla_filtration(const AlgebraStructure& st, const Rep& m, const Poset& poset,
                            TieBreak tie = TieBreak::LabelOrder);

struct CheckReport {
  bool holds = true;
  std::vector<std::string> failures;
};

/// Poset labels coincide with the simple labels.
void require_matching_poset(const AlgebraStructure& st, const Poset& poset);

/// End(Delta(lambda)) = k for all lambda and every PIM is Delta-filtered.
CheckReport check_quasi_hereditary(const AlgebraStructure& st, const Poset& poset);
/// Quasi-hereditary and L(lambda)^# = L(lambda) for all lambda. Throws NoInvolution.
CheckReport check_bgg(const AlgebraStructure& st, const Poset& poset);

struct ReciprocityRow {
  std::string lambda;
  std::string mu;
  std::size_t s = 0;
  long left = 0;
  long right = 0;
};

struct ReciprocityReport {
  std::string statement;
  /// "cellular", "bgg" or "unverified".
  std::string hypothesis = "unverified";
  bool holds = true;
  std::vector<ReciprocityRow> rows;
  /// Findings that do not affect `holds` (e.g. filtration dependence).
  std::vector<std::string> notes;
};

std::string hypothesis_label(bool cellular, bool bgg);

/// [rad_s P(mu) : L(lambda)] = [rad_s P(lambda) : L(mu)].
ReciprocityReport check_dagger(const AlgebraStructure& st, std::size_t jobs = 1);
/// Socle form: [soc_s I(mu) : L(lambda)] = [soc_s I(lambda) : L(mu)].
ReciprocityReport check_dagger_dual(const AlgebraStructure& st, std::size_t jobs = 1);

/// Delta-sections (lambda, depth s) of P(mu) against [rad_s Delta(lambda) : L(mu)].
/// Also reruns with reversed tie-breaking and notes any dependence.
ReciprocityReport check_ddagger(const AlgebraStructure& st, const Poset& poset, std::size_t jobs = 1);
/// Nabla-sections (lambda, socle depth s) of I(mu) against [soc_s Nabla(lambda) : L(mu)].
ReciprocityReport check_ddagger_dual(const AlgebraStructure& st, const Poset& poset, std::size_t jobs = 1);

/// Rows compare C(s)[mu][lambda] with C(s)[lambda][mu] for the truncated Cartan matrices.
ReciprocityReport check_cartan_truncations(const AlgebraStructure& st);
/// C(s)[mu][lambda] = sum over t <= s of [rad_t P(mu) : L(lambda)].
std::vector<std::vector<std::size_t>> truncated_cartan(const AlgebraStructure& st, std::size_t s);

/// m_s from Hom(P(nu)/rad^s P(nu), I(mu)) dimension differences against
/// [rad_s P(nu) : L(mu)], for s up to one past the Loewy length.
ReciprocityReport lemma9_crosscheck(const AlgebraStructure& st, std::size_t nu, std::size_t mu);
ReciprocityReport lemma9_all(const AlgebraStructure& st, std::size_t jobs = 1);

/// [P(mu) : Delta(lambda)] (section count) against [Delta(lambda) : L(mu)] (dim e_mu Delta).
ReciprocityReport check_numerical_bgg(const AlgebraStructure& st, const Poset& poset);

/// Same (lambda, mu, s, left, right) rows in both reports.
bool tables_agree(const ReciprocityReport& a, const ReciprocityReport& b);

/// Radical Loewy diagrams of all PIMs, computed with up to `jobs` threads.
std::vector<LoewyDiagram> pim_diagrams(const AlgebraStructure& st, std::size_t jobs = 1);

}  // namespace loewy
