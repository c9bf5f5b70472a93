#include "loewy/symbolic.hpp"

#include <sstream>

namespace loewy {

namespace {

std::size_t mult_in(const Layer& layer, const std::string& label) {
  const auto it = layer.find(label);
  return it == layer.end() ? 0 : it->second;
}

void check_lists(const DecompositionData& data, const std::map<std::string, LoewyDiagram>& lists,
                 const std::string& kind, std::vector<std::string>& out) {
  for (const auto& label : data.poset.labels()) {
    if (!lists.count(label)) out.push_back("no " + kind + " layers for " + label);
  }
  for (const auto& [lambda, layers] : lists) {
    if (!data.poset.contains(lambda)) {
      out.push_back(kind + " layers given for unknown weight " + lambda);
      continue;
    }
    if (layers.empty() || layers.front() != Layer{{lambda, 1}}) {
      out.push_back(kind + "(" + lambda + ") does not have first layer {" + lambda + "}");
    }
    for (std::size_t s = 0; s < layers.size(); ++s) {
      if (layers[s].empty()) out.push_back(kind + "(" + lambda + ") has an empty layer " + std::to_string(s + 1));
      for (const auto& [label, m] : layers[s]) {
        if (!data.poset.contains(label)) {
          out.push_back(kind + "(" + lambda + ") layer " + std::to_string(s + 1) + " has unknown label " + label);
        } else if (s > 0 && !data.poset.less(label, lambda)) {
          out.push_back(kind + "(" + lambda + ") layer " + std::to_string(s + 1) + " has " + label + ", not below " +
                        lambda);
        }
      }
    }
  }
}

PredictedDiagram stack(const DecompositionData& data, const std::map<std::string, LoewyDiagram>& lists,
                       const std::string& mu, bool socle_side) {
  if (!data.poset.contains(mu)) throw UnknownLabel(mu);
  PredictedDiagram out;
  out.target = mu;
  out.socle_side = socle_side;
  for (const auto& lambda : data.poset.labels()) {
    const auto it = lists.find(lambda);
    if (it == lists.end()) continue;
    const LoewyDiagram& layers = it->second;
    for (std::size_t s = 0; s < layers.size(); ++s) {
      const std::size_t m = mult_in(layers[s], mu);
      for (std::size_t copy = 0; copy < m; ++copy) {
        out.sections.push_back({lambda, s + 1, copy, layers});
        if (out.layers.size() < s + layers.size()) out.layers.resize(s + layers.size());
        for (std::size_t t = 0; t < layers.size(); ++t) {
          for (const auto& [label, k] : layers[t]) out.layers[s + t][label] += k;
        }
      }
    }
  }
  return out;
}

}  // namespace

std::vector<std::string> validate_decomposition(const DecompositionData& data) {
  std::vector<std::string> out;
  check_lists(data, data.delta_layers, "Delta", out);
  if (data.nabla_layers) check_lists(data, *data.nabla_layers, "Nabla", out);
  for (const auto& w : data.projective_weights) {
    if (!data.poset.contains(w)) out.push_back("projective weight " + w + " is not in the poset");
  }
  return out;
}

PredictedDiagram predict(const DecompositionData& data, const std::string& mu) {
  return stack(data, data.delta_layers, mu, false);
}

PredictedDiagram predict_socle_side(const DecompositionData& data, const std::string& mu) {
  return stack(data, data.nabla_layers ? *data.nabla_layers : data.delta_layers, mu, true);
}

bool rigidity_verdict(const PredictedDiagram& radical_side, const PredictedDiagram& socle_side) {
  const auto& r = radical_side.layers;
  const auto& s = socle_side.layers;
  if (radical_side.target != socle_side.target || r.size() != s.size()) return false;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] != s[r.size() - 1 - i]) return false;
  }
  return true;
}

RenderFormat parse_render_format(const std::string& name) {
  if (name == "ascii") return RenderFormat::Ascii;
  if (name == "dot") return RenderFormat::Dot;
  throw Error("unknown render format '" + name + "' (expected ascii or dot)");
}

std::string render(const PredictedDiagram& d, RenderFormat format) {
  std::ostringstream out;
  if (format == RenderFormat::Ascii) {
    for (std::size_t s = 0; s < d.layers.size(); ++s) {
      std::map<std::string, std::size_t> heads;
      for (const auto& sec : d.sections) {
        if (sec.offset == s + 1) ++heads[sec.lambda];
      }
      out << s + 1 << ":";
      for (const auto& [label, m] : d.layers[s]) {
        const std::size_t h = std::min(m, heads[label]);
        for (std::size_t i = 0; i < m - h; ++i) out << ' ' << label;
        for (std::size_t i = 0; i < h; ++i) out << " [" << label << ']';
      }
      out << '\n';
    }
    return out.str();
  }
  if (d.layers.empty()) return "";
  out << "digraph loewy {\n  rankdir=TB;\n  node [shape=plaintext];\n";
  std::vector<std::vector<std::string>> rank(d.layers.size());
  std::ostringstream edges;
  auto add_node = [&](const std::string& id, const std::string& label, std::size_t layer, bool head) {
    out << "  " << id << " [label=\"" << (head ? "[" + label + "]" : label) << "\"];\n";
    rank[layer].push_back(id);
  };
  if (d.sections.empty()) {
    std::size_t k = 0;
    for (std::size_t s = 0; s < d.layers.size(); ++s) {
      for (const auto& [label, m] : d.layers[s]) {
        for (std::size_t i = 0; i < m; ++i) add_node("n" + std::to_string(k++), label, s, false);
      }
    }
  }
  for (std::size_t i = 0; i < d.sections.size(); ++i) {
    const auto& sec = d.sections[i];
    std::vector<std::string> previous;
    for (std::size_t t = 0; t < sec.layers.size(); ++t) {
      std::vector<std::string> here;
      std::size_t k = 0;
      for (const auto& [label, m] : sec.layers[t]) {
        for (std::size_t c = 0; c < m; ++c) {
          const std::string id = "s" + std::to_string(i) + "_" + std::to_string(t) + "_" + std::to_string(k++);
          add_node(id, label, sec.offset - 1 + t, t == 0);
          here.push_back(id);
        }
      }
      for (const auto& a : previous) {
        for (const auto& b : here) edges << "  " << a << " -> " << b << ";\n";
      }
      previous = std::move(here);
    }
  }
  for (std::size_t s = 0; s < rank.size(); ++s) {
    if (rank[s].empty()) continue;
    out << "  { rank=same;";
    for (const auto& id : rank[s]) out << ' ' << id << ';';
    out << " }\n";
  }
  out << edges.str() << "}\n";
  return out.str();
}

}  // namespace loewy
