#include "loewy/series.hpp"

#include <algorithm>

namespace loewy {

std::size_t layer_size(const Layer& layer) {
  std::size_t n = 0;
  for (const auto& [label, mult] : layer) n += mult;
  return n;
}

namespace {

Subspace apply_radical(const AlgebraStructure& st, const Rep& m, const Subspace& u) {
  std::vector<Vec> images;
  for (const auto& r : st.radical_basis()) {
    const Mat act = m.act(r);
    for (std::size_t j = 0; j < u.dim(); ++j) images.push_back(act * u.vector(j));
  }
  return generate_submodule(m, images);
}

// {v : r v in u for every radical basis element r}.
Subspace radical_preimage(const AlgebraStructure& st, const Rep& m, const Subspace& u) {
  const Field& f = m.field();
  const Mat red = u.reduction_matrix();
  const auto& rb = st.radical_basis();
  if (rb.empty()) return Subspace::full(f, m.dim());
  Mat stacked(f, rb.size() * m.dim(), m.dim());
  for (std::size_t k = 0; k < rb.size(); ++k) {
    const Mat x = red * m.act(rb[k]);
    for (std::size_t r = 0; r < m.dim(); ++r) {
      for (std::size_t c = 0; c < m.dim(); ++c) stacked(k * m.dim() + r, c) = x(r, c);
    }
  }
  return nullspace(stacked);
}

}  // namespace

std::vector<Subspace> radical_series(const AlgebraStructure& st, const Rep& m) {
  std::vector<Subspace> out{Subspace::full(m.field(), m.dim())};
  while (!out.back().is_zero()) {
    Subspace next = apply_radical(st, m, out.back());
    if (next == out.back()) throw Error("radical series stalled; radical is not nilpotent on the module");
    out.push_back(std::move(next));
  }
  return out;
}

std::vector<Subspace> socle_series(const AlgebraStructure& st, const Rep& m) {
  std::vector<Subspace> out{Subspace(m.field(), m.dim())};
  while (out.back().dim() < m.dim()) {
    Subspace next = radical_preimage(st, m, out.back());
    if (next == out.back()) throw Error("socle series stalled");
    out.push_back(std::move(next));
  }
  return out;
}

std::size_t loewy_length(const AlgebraStructure& st, const Rep& m) {
  return radical_series(st, m).size() - 1;
}

Layer semisimple_layer(const AlgebraStructure& st, const Rep& m, const Subspace& upper, const Subspace& lower) {
  const Rep layer = subquotient(m, upper, lower);
  Layer out;
  std::size_t seen = 0;
  for (std::size_t i = 0; i < st.count(); ++i) {
    const std::size_t h = hom_space(layer, st.simple(i)).size();
    if (h > 0) out[st.labels()[i]] = h;
    seen += h * st.simple(i).dim();
  }
  if (seen != layer.dim()) throw Error("layer is not semisimple or a simple module is missing");
  return out;
}

LoewyDiagram loewy_diagram(const AlgebraStructure& st, const Rep& m) {
  const auto series = radical_series(st, m);
  LoewyDiagram out;
  for (std::size_t s = 0; s + 1 < series.size(); ++s) out.push_back(semisimple_layer(st, m, series[s], series[s + 1]));
  return out;
}

LoewyDiagram socle_diagram(const AlgebraStructure& st, const Rep& m) {
  const auto series = socle_series(st, m);
  LoewyDiagram out;
  for (std::size_t s = 0; s + 1 < series.size(); ++s) out.push_back(semisimple_layer(st, m, series[s + 1], series[s]));
  return out;
}

bool is_rigid(const AlgebraStructure& st, const Rep& m) {
  const auto rad = radical_series(st, m);
  const auto soc = socle_series(st, m);
  if (rad.size() != soc.size()) return false;
  const std::size_t l = rad.size() - 1;
  for (std::size_t s = 0; s <= l; ++s) {
    if (rad[s] != soc[l - s]) return false;
  }
  return true;
}

Rep injective_hull(const AlgebraStructure& st, std::size_t i) { return dual_sharp(st.pim(i)); }

Subspace trace_submodule(const AlgebraStructure& st, const Rep& m, const std::vector<std::size_t>& labels) {
  std::vector<Vec> vectors;
  for (auto nu : labels) {
    const Mat e = m.act(st.idempotent(nu));
    for (std::size_t j = 0; j < m.dim(); ++j) vectors.push_back(e.column(j));
  }
  return generate_submodule(m, vectors);
}

Subspace largest_submodule_avoiding(const AlgebraStructure& st, const Rep& m, const std::vector<std::size_t>& labels) {
  // v lies in the submodule iff e_nu b v = 0 for every avoided nu and every basis element b.
  const Field& f = m.field();
  const Algebra& a = *st.algebra();
  if (labels.empty() || m.dim() == 0) return Subspace::full(f, m.dim());
  Mat stacked(f, labels.size() * a.dim() * m.dim(), m.dim());
  std::size_t row = 0;
  for (auto nu : labels) {
    const Mat e = m.act(st.idempotent(nu));
    for (std::size_t b = 0; b < a.dim(); ++b) {
      const Mat x = e * m.action(b);
      for (std::size_t r = 0; r < m.dim(); ++r, ++row) {
        for (std::size_t c = 0; c < m.dim(); ++c) stacked(row, c) = x(r, c);
      }
    }
  }
  return nullspace(stacked);
}

std::vector<std::size_t> labels_not_below(const AlgebraStructure& st, const Poset& poset, std::size_t lambda) {
  std::vector<std::size_t> out;
  const std::size_t l = poset.index_of(st.labels()[lambda]);
  for (std::size_t nu = 0; nu < st.count(); ++nu) {
    if (!poset.leq(poset.index_of(st.labels()[nu]), l)) out.push_back(nu);
  }
  return out;
}

Rep max_quotient_leq(const AlgebraStructure& st, const Rep& m, std::size_t lambda, const Poset& poset) {
  const Subspace trace = trace_submodule(st, m, labels_not_below(st, poset, lambda));
  if (trace.is_zero()) return m;
  return quotient(m, trace);
}

Rep standard_module(const AlgebraStructure& st, const Poset& poset, std::size_t lambda) {
  return max_quotient_leq(st, st.pim(lambda), lambda, poset);
}

Rep costandard_module(const AlgebraStructure& st, const Poset& poset, std::size_t lambda) {
  const Rep hull = injective_hull(st, lambda);
  const Subspace u = largest_submodule_avoiding(st, hull, labels_not_below(st, poset, lambda));
  if (u.dim() == hull.dim()) return hull;
  return submodule(hull, u);
}

std::size_t composition_multiplicity(const AlgebraStructure& st, const Rep& m, std::size_t i) {
  return rank(m.act(st.idempotent(i)));
}

CartanMatrix cartan_matrix(const AlgebraStructure& st) {
  CartanMatrix c{st.labels(), std::vector<std::vector<std::size_t>>(st.count(), std::vector<std::size_t>(st.count(), 0))};
  for (std::size_t mu = 0; mu < st.count(); ++mu) {
    for (const auto& layer : loewy_diagram(st, st.pim(mu))) {
      for (const auto& [label, mult] : layer) c.entries[mu][st.index_of(label)] += mult;
    }
  }
  return c;
}

bool diagram_consistent(const AlgebraStructure& st, const Rep& m, const LoewyDiagram& d) {
  std::size_t total = 0;
  for (const auto& layer : d) {
    if (layer.empty()) return false;
    for (const auto& [label, mult] : layer) {
      if (std::find(st.labels().begin(), st.labels().end(), label) == st.labels().end()) return false;
      total += mult * st.simple(st.index_of(label)).dim();
    }
  }
  return total == m.dim();
}

}  // namespace loewy
