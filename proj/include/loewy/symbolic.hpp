#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "loewy/poset.hpp"
#include "loewy/series.hpp"

namespace loewy {

/// Weight poset plus the layer structure of every standard module, as data.
struct DecompositionData {
  Poset poset;
  /// Radical layers of Delta(lambda), head first.
  std::map<std::string, LoewyDiagram> delta_layers;
  /// Socle layers of Nabla(lambda), socle first. Defaults to delta_layers.
  std::optional<std::map<std::string, LoewyDiagram>> nabla_layers;
  std::vector<std::string> projective_weights;
  std::string comment;
};

/// Every problem found: unknown labels, heads other than {lambda}, factors not
/// below lambda, missing standard modules.
std::vector<std::string> validate_decomposition(const DecompositionData& data);

struct PredictedSection {
  std::string lambda;
  std::size_t offset = 0;
  std::size_t copy = 0;
  /// The stacked module's own layers, placed from `offset` on.
  LoewyDiagram layers;
};

struct PredictedDiagram {
  std::string target;
  bool socle_side = false;
  /// Head first, or socle first when socle_side.
  LoewyDiagram layers;
  std::vector<PredictedSection> sections;
};

/// Stacks m copies of the layer list of Delta(lambda) from layer s for every
/// occurrence of mu with multiplicity m in layer s of Delta(lambda).
/// Throws UnknownLabel.
PredictedDiagram predict(const DecompositionData& data, const std::string& mu);
/// The same stacking on the socle lists of the costandard modules.
PredictedDiagram predict_socle_side(const DecompositionData& data, const std::string& mu);

/// Radical layer s equals socle layer l - s + 1 for all s.
bool rigidity_verdict(const PredictedDiagram& radical_side, const PredictedDiagram& socle_side);

enum class RenderFormat { Ascii, Dot };

/// Throws Error for anything but "ascii" or "dot".
RenderFormat parse_render_format(const std::string& name);

/// ASCII: "s: labels" per layer, bytewise sorted, section heads in brackets.
/// DOT: a layered digraph with edges inside each section.
std::string render(const PredictedDiagram& d, RenderFormat format);

}  // namespace loewy
