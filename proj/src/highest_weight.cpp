#include "loewy/highest_weight.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <set>

namespace loewy {

namespace {

template <typename T>
std::vector<T> parallel_map(std::size_t count, std::size_t jobs, const std::function<T(std::size_t)>& fn) {
  std::vector<T> out(count);
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  for (std::size_t start = 0; start < count; start += jobs) {
    std::vector<std::future<T>> batch;
    for (std::size_t i = start; i < std::min(count, start + jobs); ++i) batch.push_back(std::async(std::launch::async, fn, i));
    for (std::size_t i = 0; i < batch.size(); ++i) out[start + i] = batch[i].get();
  }
  return out;
}

std::size_t layer_mult(const LoewyDiagram& d, std::size_t s, const std::string& label) {
  if (s == 0 || s > d.size()) return 0;
  const auto it = d[s - 1].find(label);
  return it == d[s - 1].end() ? 0 : it->second;
}

Vec lift_from_quotient(const Subspace& u, const Vec& coords) {
  std::vector<bool> pivot(u.ambient(), false);
  for (auto p : u.pivots()) pivot[p] = true;
  Vec out(u.ambient(), 0);
  std::size_t t = 0;
  for (std::size_t j = 0; j < u.ambient(); ++j) {
    if (!pivot[j]) out[j] = coords[t++];
  }
  return out;
}

Vec from_sub_coordinates(const Subspace& u, const Vec& coords) {
  Vec out(u.ambient(), 0);
  for (std::size_t i = 0; i < u.dim(); ++i) {
    if (coords[i] != 0) out = vec_add(u.field(), out, vec_scale(u.field(), coords[i], u.vector(i)));
  }
  return out;
}

// Maximal supported weight, ties broken by poset label order.
std::size_t pick_maximal(const AlgebraStructure& st, const Rep& m, const Poset& poset, TieBreak tie,
                         std::size_t& multiplicity) {
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < st.count(); ++i) {
    if (composition_multiplicity(st, m, i) > 0) support.push_back(i);
  }
  std::vector<std::size_t> maximal;
  for (auto l : support) {
    bool is_max = true;
    for (auto nu : support) {
      if (poset.less(st.labels()[l], st.labels()[nu])) is_max = false;
    }
    if (is_max) maximal.push_back(l);
  }
  std::sort(maximal.begin(), maximal.end(), [&](std::size_t a, std::size_t b) {
    return poset.index_of(st.labels()[a]) < poset.index_of(st.labels()[b]);
  });
  const std::size_t chosen = tie == TieBreak::LabelOrder ? maximal.front() : maximal.back();
  multiplicity = composition_multiplicity(st, m, chosen);
  return chosen;
}

bool factors_leq(const AlgebraStructure& st, const Rep& m, const Poset& poset, std::size_t lambda) {
  for (auto nu : labels_not_below(st, poset, lambda)) {
    if (composition_multiplicity(st, m, nu) > 0) return false;
  }
  return true;
}

}  // namespace

void require_matching_poset(const AlgebraStructure& st, const Poset& poset) {
  std::set<std::string> a(st.labels().begin(), st.labels().end());
  std::set<std::string> b(poset.labels().begin(), poset.labels().end());
  if (a != b) {
    std::string have;
    for (const auto& l : st.labels()) have += (have.empty() ? "" : ", ") + l;
    throw LabelError("poset labels do not match the simple modules (" + have + ")");
  }
}

Filtration delta_filtration(const AlgebraStructure& st, const Rep& m, const Poset& poset, TieBreak tie) {
  require_matching_poset(st, poset);
  const Field& f = m.field();
  const auto rad = radical_series(st, m);
  Subspace filtered(f, m.dim());
  Filtration out;
  while (filtered.dim() < m.dim()) {
    const Rep q = quotient(m, filtered);
    std::size_t mult = 0;
    const std::size_t lambda = pick_maximal(st, q, poset, tie, mult);
    const std::string& name = st.labels()[lambda];
    const Subspace u = trace_submodule(st, q, {lambda});
    const Rep delta = standard_module(st, poset, lambda);
    const Rep ur = submodule(q, u);
    const Layer head = semisimple_layer(st, ur, Subspace::full(f, ur.dim()), radical_series(st, ur)[1]);
    if (u.dim() != mult * delta.dim() || head != Layer{{name, mult}} || !factors_leq(st, ur, poset, lambda)) {
      throw NotDeltaFiltered("trace of P(" + name + ") is not a direct sum of " + std::to_string(mult) +
                             " copies of the standard module");
    }
    // Head generators adapted to the image of the original radical filtration.
    const Mat e = q.act(st.idempotent(lambda));
    std::vector<Subspace> g;
    for (const auto& r : rad) {
      std::vector<Vec> images;
      for (std::size_t i = 0; i < r.dim(); ++i) images.push_back(e * quotient_coordinates(filtered, r.vector(i)));
      g.push_back(Subspace::span(f, q.dim(), images));
    }
    std::vector<Vec> chosen;
    for (std::size_t s = g.size() - 1; s-- > 0;) {
      for (std::size_t i = 0; i < g[s].dim(); ++i) {
        const Vec v = g[s].vector(i);
        if (Subspace::span(f, q.dim(), chosen).contains(v)) continue;
        chosen.push_back(v);
        out.push_back({name, s + 1, lift_from_quotient(filtered, v)});
      }
    }
    filtered = quotient_preimage(filtered, u);
  }
  return out;
}

Filtration nabla_filtration(const AlgebraStructure& st, const Rep& m, const Poset& poset, TieBreak tie) {
  require_matching_poset(st, poset);
  const Field& f = m.field();
  const auto soc = socle_series(st, m);
  Subspace current = Subspace::full(f, m.dim());
  Filtration out;
  while (!current.is_zero()) {
    const Rep c = submodule(m, current);
    std::size_t mult = 0;
    const std::size_t lambda = pick_maximal(st, c, poset, tie, mult);
    const std::string& name = st.labels()[lambda];
    const Subspace k = largest_submodule_avoiding(st, c, {lambda});
    const Rep top = quotient(c, k);
    const Rep nabla = costandard_module(st, poset, lambda);
    const Layer bottom = semisimple_layer(st, top, socle_series(st, top)[1], Subspace(f, top.dim()));
    if (top.dim() != mult * nabla.dim() || bottom != Layer{{name, mult}} || !factors_leq(st, top, poset, lambda)) {
      throw NotDeltaFiltered("top of the module is not a direct sum of " + std::to_string(mult) +
                             " copies of the costandard module " + name);
    }
    // Socle vectors adapted to the original socle filtration, in coordinates of `current`.
    const Mat e = c.act(st.idempotent(lambda));
    std::vector<Vec> chosen;
    for (std::size_t t = 1; t < soc.size(); ++t) {
      const Subspace inter = subspace_intersect(soc[t], current);
      std::vector<Vec> images;
      for (std::size_t i = 0; i < inter.dim(); ++i) images.push_back(e * current.coordinates(inter.vector(i)));
      const Subspace layer = Subspace::span(f, c.dim(), images);
      for (std::size_t i = 0; i < layer.dim(); ++i) {
        const Vec v = layer.vector(i);
        if (Subspace::span(f, c.dim(), chosen).contains(v)) continue;
        chosen.push_back(v);
        out.push_back({name, t, from_sub_coordinates(current, v)});
      }
    }
    std::vector<Vec> next;
    for (std::size_t i = 0; i < k.dim(); ++i) next.push_back(from_sub_coordinates(current, k.vector(i)));
    current = Subspace::span(f, m.dim(), next);
  }
  return out;
}

CheckReport check_quasi_hereditary(const AlgebraStructure& st, const Poset& poset) {
  CheckReport r;
  try {
    require_matching_poset(st, poset);
  } catch (const LabelError& e) {
    r.holds = false;
    r.failures.push_back(e.what());
    return r;
  }
  for (std::size_t l = 0; l < st.count(); ++l) {
    const Rep delta = standard_module(st, poset, l);
    const std::size_t end = hom_space(delta, delta).size();
    if (end != 1) {
      r.failures.push_back("End(Delta(" + st.labels()[l] + ")) has dimension " + std::to_string(end));
    }
  }
  for (std::size_t l = 0; l < st.count(); ++l) {
    try {
      delta_filtration(st, st.pim(l), poset);
    } catch (const NotDeltaFiltered& e) {
      r.failures.push_back("P(" + st.labels()[l] + ") has no Delta-filtration: " + e.what());
    }
  }
  r.holds = r.failures.empty();
  return r;
}

CheckReport check_bgg(const AlgebraStructure& st, const Poset& poset) {
  if (!st.algebra()->has_involution()) throw NoInvolution();
  CheckReport r = check_quasi_hereditary(st, poset);
  for (std::size_t l = 0; l < st.count(); ++l) {
    if (!is_isomorphic(dual_sharp(st.simple(l)), st.simple(l))) {
      r.failures.push_back("L(" + st.labels()[l] + ") is not fixed by the duality");
    }
  }
  r.holds = r.failures.empty();
  return r;
}

std::string hypothesis_label(bool cellular, bool bgg) {
  if (cellular) return "cellular";
  if (bgg) return "bgg";
  return "unverified";
}

std::vector<LoewyDiagram> pim_diagrams(const AlgebraStructure& st, std::size_t jobs) {
  return parallel_map<LoewyDiagram>(st.count(), jobs, [&](std::size_t i) { return loewy_diagram(st, st.pim(i)); });
}

namespace {

void finish(ReciprocityReport& r) {
  r.holds = std::all_of(r.rows.begin(), r.rows.end(), [](const ReciprocityRow& row) { return row.left == row.right; });
}

ReciprocityReport symmetric_layer_table(const AlgebraStructure& st, const std::vector<LoewyDiagram>& d,
                                        const std::string& statement) {
  ReciprocityReport r;
  r.statement = statement;
  std::size_t length = 0;
  for (const auto& x : d) length = std::max(length, x.size());
  for (std::size_t lambda = 0; lambda < st.count(); ++lambda) {
    for (std::size_t mu = 0; mu < st.count(); ++mu) {
      for (std::size_t s = 1; s <= length; ++s) {
        r.rows.push_back({st.labels()[lambda], st.labels()[mu], s,
                          static_cast<long>(layer_mult(d[mu], s, st.labels()[lambda])),
                          static_cast<long>(layer_mult(d[lambda], s, st.labels()[mu]))});
      }
    }
  }
  finish(r);
  return r;
}

// counts[lambda][s] of sections.
std::vector<std::vector<std::size_t>> section_counts(const AlgebraStructure& st, const Filtration& f) {
  std::vector<std::vector<std::size_t>> counts(st.count());
  for (const auto& sec : f) {
    auto& row = counts[st.index_of(sec.lambda)];
    if (row.size() <= sec.depth) row.resize(sec.depth + 1, 0);
    ++row[sec.depth];
  }
  return counts;
}

std::size_t at(const std::vector<std::size_t>& v, std::size_t s) { return s < v.size() ? v[s] : 0; }

ReciprocityReport filtration_table(const AlgebraStructure& st, const std::vector<Filtration>& filtrations,
                                   const std::vector<LoewyDiagram>& module_layers, const std::string& statement) {
  ReciprocityReport r;
  r.statement = statement;
  std::size_t length = 0;
  for (const auto& d : module_layers) length = std::max(length, d.size());
  for (const auto& f : filtrations) {
    for (const auto& sec : f) length = std::max(length, sec.depth);
  }
  for (std::size_t lambda = 0; lambda < st.count(); ++lambda) {
    for (std::size_t mu = 0; mu < st.count(); ++mu) {
      const auto counts = section_counts(st, filtrations[mu]);
      for (std::size_t s = 1; s <= length; ++s) {
        r.rows.push_back({st.labels()[lambda], st.labels()[mu], s, static_cast<long>(at(counts[lambda], s)),
                          static_cast<long>(layer_mult(module_layers[lambda], s, st.labels()[mu]))});
      }
    }
  }
  finish(r);
  return r;
}

void note_tie_dependence(const AlgebraStructure& st, const std::vector<Filtration>& a,
                         const std::vector<Filtration>& b, ReciprocityReport& r) {
  for (std::size_t mu = 0; mu < st.count(); ++mu) {
    if (section_counts(st, a[mu]) != section_counts(st, b[mu])) {
      r.notes.push_back("section depths for " + st.labels()[mu] + " depend on the tie-break between maximal weights");
    }
  }
}

struct Attempt {
  Filtration filtration;
  std::string error;
};

using FiltrationFn = std::function<Filtration(std::size_t, TieBreak)>;

std::vector<Attempt> attempt_all(const AlgebraStructure& st, std::size_t jobs, const FiltrationFn& fn, TieBreak tie) {
  return parallel_map<Attempt>(st.count(), jobs, [&](std::size_t mu) {
    try {
      return Attempt{fn(mu, tie), {}};
    } catch (const NotDeltaFiltered& e) {
      return Attempt{{}, e.what()};
    }
  });
}

// A module without the required filtration makes the report fail with a note.
ReciprocityReport filtration_report(const AlgebraStructure& st, std::size_t jobs, const std::string& statement,
                                    const FiltrationFn& fn, const std::function<LoewyDiagram(std::size_t)>& layers) {
  const auto first = attempt_all(st, jobs, fn, TieBreak::LabelOrder);
  std::vector<Filtration> filt;
  for (const auto& a : first) filt.push_back(a.filtration);
  std::vector<LoewyDiagram> modules;
  std::vector<std::string> errors;
  try {
    modules = parallel_map<LoewyDiagram>(st.count(), jobs, layers);
  } catch (const Error& e) {
    errors.push_back(e.what());
    modules.assign(st.count(), {});
  }
  ReciprocityReport r = filtration_table(st, filt, modules, statement);
  for (std::size_t mu = 0; mu < st.count(); ++mu) {
    if (!first[mu].error.empty()) errors.push_back(st.labels()[mu] + ": " + first[mu].error);
  }
  if (!errors.empty()) {
    r.holds = false;
    for (const auto& e : errors) r.notes.push_back("no filtration, " + e);
    return r;
  }
  const auto second = attempt_all(st, jobs, fn, TieBreak::Reversed);
  std::vector<Filtration> reversed;
  for (const auto& a : second) reversed.push_back(a.filtration);
  note_tie_dependence(st, filt, reversed, r);
  return r;
}

}  // namespace

ReciprocityReport check_dagger(const AlgebraStructure& st, std::size_t jobs) {
  return symmetric_layer_table(st, pim_diagrams(st, jobs), "dagger");
}

ReciprocityReport check_dagger_dual(const AlgebraStructure& st, std::size_t jobs) {
  const auto d = parallel_map<LoewyDiagram>(st.count(), jobs,
                                            [&](std::size_t i) { return socle_diagram(st, injective_hull(st, i)); });
  return symmetric_layer_table(st, d, "dagger_dual");
}

ReciprocityReport check_ddagger(const AlgebraStructure& st, const Poset& poset, std::size_t jobs) {
  return filtration_report(
      st, jobs, "ddagger", [&](std::size_t mu, TieBreak tie) { return delta_filtration(st, st.pim(mu), poset, tie); },
      [&](std::size_t l) { return loewy_diagram(st, standard_module(st, poset, l)); });
}

ReciprocityReport check_ddagger_dual(const AlgebraStructure& st, const Poset& poset, std::size_t jobs) {
  return filtration_report(
      st, jobs, "ddagger_dual",
      [&](std::size_t mu, TieBreak tie) { return nabla_filtration(st, injective_hull(st, mu), poset, tie); },
      [&](std::size_t l) { return socle_diagram(st, costandard_module(st, poset, l)); });
}

std::vector<std::vector<std::size_t>> truncated_cartan(const AlgebraStructure& st, std::size_t s) {
  const auto d = pim_diagrams(st);
  std::vector<std::vector<std::size_t>> c(st.count(), std::vector<std::size_t>(st.count(), 0));
  for (std::size_t mu = 0; mu < st.count(); ++mu) {
    for (std::size_t t = 1; t <= s; ++t) {
      for (std::size_t l = 0; l < st.count(); ++l) c[mu][l] += layer_mult(d[mu], t, st.labels()[l]);
    }
  }
  return c;
}

ReciprocityReport check_cartan_truncations(const AlgebraStructure& st) {
  ReciprocityReport r;
  r.statement = "cartan";
  const auto d = pim_diagrams(st);
  std::size_t length = 0;
  for (const auto& x : d) length = std::max(length, x.size());
  std::vector<std::vector<long>> c(st.count(), std::vector<long>(st.count(), 0));
  for (std::size_t s = 1; s <= length; ++s) {
    for (std::size_t mu = 0; mu < st.count(); ++mu) {
      for (std::size_t l = 0; l < st.count(); ++l) c[mu][l] += static_cast<long>(layer_mult(d[mu], s, st.labels()[l]));
    }
    for (std::size_t l = 0; l < st.count(); ++l) {
      for (std::size_t mu = 0; mu < st.count(); ++mu) {
        r.rows.push_back({st.labels()[l], st.labels()[mu], s, c[mu][l], c[l][mu]});
      }
    }
  }
  finish(r);
  return r;
}

ReciprocityReport lemma9_crosscheck(const AlgebraStructure& st, std::size_t nu, std::size_t mu) {
  ReciprocityReport r;
  r.statement = "lemma9";
  const Rep& p = st.pim(nu);
  const Rep hull = injective_hull(st, mu);
  const auto series = radical_series(st, p);
  const auto layers = loewy_diagram(st, p);
  const std::size_t length = series.size() - 1;
  long previous = 0;  // Hom(P / rad^0 P, I) = 0
  for (std::size_t s = 1; s <= length + 1; ++s) {
    const Subspace& sub = s < series.size() ? series[s] : series.back();
    const Rep top = sub.is_zero() ? p : quotient(p, sub);
    const long h = static_cast<long>(hom_space(top, hull).size());
    r.rows.push_back({st.labels()[nu], st.labels()[mu], s, h - previous,
                      static_cast<long>(layer_mult(layers, s, st.labels()[mu]))});
    previous = h;
  }
  finish(r);
  return r;
}

ReciprocityReport lemma9_all(const AlgebraStructure& st, std::size_t jobs) {
  const std::size_t n = st.count();
  const auto parts = parallel_map<ReciprocityReport>(
      n * n, jobs, [&](std::size_t k) { return lemma9_crosscheck(st, k / n, k % n); });
  ReciprocityReport r;
  r.statement = "lemma9";
  for (const auto& p : parts) r.rows.insert(r.rows.end(), p.rows.begin(), p.rows.end());
  finish(r);
  return r;
}

ReciprocityReport check_numerical_bgg(const AlgebraStructure& st, const Poset& poset) {
  ReciprocityReport r;
  r.statement = "numerical";
  std::vector<Rep> deltas;
  for (std::size_t l = 0; l < st.count(); ++l) deltas.push_back(standard_module(st, poset, l));
  for (std::size_t mu = 0; mu < st.count(); ++mu) {
    Filtration filt;
    try {
      filt = delta_filtration(st, st.pim(mu), poset);
    } catch (const NotDeltaFiltered& e) {
      r.notes.push_back("no filtration, " + st.labels()[mu] + ": " + e.what());
    }
    for (std::size_t l = 0; l < st.count(); ++l) {
      const long sections = std::count_if(filt.begin(), filt.end(),
                                          [&](const FiltrationSection& s) { return s.lambda == st.labels()[l]; });
      r.rows.push_back({st.labels()[l], st.labels()[mu], 0, sections,
                        static_cast<long>(composition_multiplicity(st, deltas[l], mu))});
    }
  }
  finish(r);
  if (!r.notes.empty()) r.holds = false;
  return r;
}

bool tables_agree(const ReciprocityReport& a, const ReciprocityReport& b) {
  if (a.rows.size() != b.rows.size()) return false;
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    const auto& x = a.rows[i];
    const auto& y = b.rows[i];
    if (x.lambda != y.lambda || x.mu != y.mu || x.s != y.s || x.left != y.left || x.right != y.right) return false;
  }
  return true;
}

}  // namespace loewy
