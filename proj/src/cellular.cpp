#include "loewy/cellular.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <tuple>

namespace loewy {

namespace {

struct CellPos {
  std::size_t lambda;  // poset index
  std::size_t s;
  std::size_t t;
};

// Bookkeeping shared by all operations. `problems` collects C1 failures.
struct CellTable {
  std::vector<std::optional<CellPos>> of_basis;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> to_basis;
  std::vector<std::vector<std::string>> m;  // by poset index
  std::vector<std::string> problems;

  std::string name(std::size_t b, const CellDatum& d) const {
    const auto& p = *of_basis[b];
    return "C^" + d.poset.labels()[p.lambda] + "_{" + m[p.lambda][p.s] + "," + m[p.lambda][p.t] + "}";
  }
  std::optional<std::size_t> basis(std::size_t l, std::size_t s, std::size_t t) const {
    const auto it = to_basis.find({l, s, t});
    if (it == to_basis.end()) return std::nullopt;
    return it->second;
  }
};

CellTable build_table(const CellDatum& d) {
  CellTable tab;
  const std::size_t n = d.algebra->dim();
  const std::size_t labels = d.poset.size();
  tab.of_basis.assign(n, std::nullopt);
  tab.m.resize(labels);
  std::size_t expected = 0;
  for (std::size_t l = 0; l < labels; ++l) {
    const auto& lab = d.poset.labels()[l];
    const auto it = d.m_sets.find(lab);
    if (it == d.m_sets.end()) {
      tab.problems.push_back("(C1) no index set M(" + lab + ")");
      continue;
    }
    tab.m[l] = it->second;
    std::set<std::string> distinct(it->second.begin(), it->second.end());
    if (distinct.size() != it->second.size()) tab.problems.push_back("(C1) repeated entry in M(" + lab + ")");
    expected += it->second.size() * it->second.size();
  }
  for (const auto& [lab, set] : d.m_sets) {
    if (!d.poset.contains(lab)) tab.problems.push_back("(C1) index set for unknown label '" + lab + "'");
  }
  if (expected != n) {
    tab.problems.push_back("(C1) sum of |M(lambda)|^2 is " + std::to_string(expected) + " but the algebra has dimension " +
                           std::to_string(n));
  }
  for (const auto& entry : d.basis_index) {
    if (!d.poset.contains(entry.lambda)) {
      tab.problems.push_back("(C1) basis entry with unknown label '" + entry.lambda + "'");
      continue;
    }
    const std::size_t l = d.poset.index_of(entry.lambda);
    const auto& ms = tab.m[l];
    const auto si = std::find(ms.begin(), ms.end(), entry.s);
    const auto ti = std::find(ms.begin(), ms.end(), entry.t);
    if (si == ms.end() || ti == ms.end()) {
      tab.problems.push_back("(C1) basis entry (" + entry.lambda + ", " + entry.s + ", " + entry.t +
                             ") uses an index outside M(" + entry.lambda + ")");
      continue;
    }
    if (entry.basis >= n) {
      tab.problems.push_back("(C1) basis index " + std::to_string(entry.basis) + " out of range");
      continue;
    }
    const CellPos pos{l, static_cast<std::size_t>(si - ms.begin()), static_cast<std::size_t>(ti - ms.begin())};
    if (tab.of_basis[entry.basis]) {
      tab.problems.push_back("(C1) basis index " + std::to_string(entry.basis) + " assigned twice");
      continue;
    }
    if (!tab.to_basis.emplace(std::make_tuple(pos.lambda, pos.s, pos.t), entry.basis).second) {
      tab.problems.push_back("(C1) triple (" + entry.lambda + ", " + entry.s + ", " + entry.t + ") listed twice");
      continue;
    }
    tab.of_basis[entry.basis] = pos;
  }
  for (std::size_t b = 0; b < n; ++b) {
    if (!tab.of_basis[b]) tab.problems.push_back("(C1) basis element " + std::to_string(b) + " is not a cell element");
  }
  for (std::size_t l = 0; l < labels; ++l) {
    for (std::size_t s = 0; s < tab.m[l].size(); ++s) {
      for (std::size_t t = 0; t < tab.m[l].size(); ++t) {
        if (!tab.basis(l, s, t)) {
          tab.problems.push_back("(C1) no basis element for (" + d.poset.labels()[l] + ", " + tab.m[l][s] + ", " +
                                 tab.m[l][t] + ")");
        }
      }
    }
  }
  return tab;
}

const CellTable& require_valid_table(const CellTable& tab) {
  if (!tab.problems.empty()) throw Error("cell datum: " + tab.problems.front());
  return tab;
}

}  // namespace

CellReport check_axioms(const CellDatum& d) {
  CellReport report;
  const CellTable tab = build_table(d);
  report.violations = tab.problems;
  const Algebra& a = *d.algebra;
  const std::size_t n = a.dim();
  const Field& f = a.field();

  // C2.
  if (!a.has_involution()) {
    report.violations.push_back("(C2) algebra has no involution");
  } else if (tab.problems.empty()) {
    const Mat& inv = a.involution();
    for (std::size_t b = 0; b < n; ++b) {
      const auto& p = *tab.of_basis[b];
      const Vec expect = unit_vector(n, *tab.basis(p.lambda, p.t, p.s));
      if (inv.column(b) != expect) {
        report.violations.push_back("(C2) i(" + tab.name(b, d) + ") is not C^" + d.poset.labels()[p.lambda] + "_{" +
                                    tab.m[p.lambda][p.t] + "," + tab.m[p.lambda][p.s] + "}");
      }
    }
    if (inv * inv != Mat::identity(f, n)) report.violations.push_back("(C2) i^2 is not the identity");
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        const Vec lhs = inv * a.mult(x, y);
        const Vec rhs = a.multiply(inv.column(y), inv.column(x));
        if (lhs != rhs) {
          report.violations.push_back("(C2) i(ab) != i(b)i(a) at (" + a.labels()[x] + ", " + a.labels()[y] + ")");
        }
      }
    }
  }

  // C3.
  if (tab.problems.empty()) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t b = 0; b < n; ++b) {
        const auto& p = *tab.of_basis[b];
        const Vec& prod = a.mult(x, b);
        for (std::size_t c = 0; c < n; ++c) {
          if (prod[c] == 0) continue;
          const auto& q = *tab.of_basis[c];
          const bool same = q.lambda == p.lambda && q.t == p.t;
          if (!same && !d.poset.less(q.lambda, p.lambda)) {
            report.violations.push_back("(C3) " + a.labels()[x] + " * " + tab.name(b, d) + " has support on " +
                                        tab.name(c, d) + ", neither in the same row nor strictly lower");
          }
        }
        // Independence of T: compare with T = 0.
        if (p.t == 0) continue;
        const Vec& ref = a.mult(x, *tab.basis(p.lambda, p.s, 0));
        for (std::size_t u = 0; u < tab.m[p.lambda].size(); ++u) {
          const Elem here = prod[*tab.basis(p.lambda, u, p.t)];
          const Elem there = ref[*tab.basis(p.lambda, u, 0)];
          if (here != there) {
            report.violations.push_back("(C3) coefficient r_" + a.labels()[x] + "(" + tab.m[p.lambda][u] + ", " +
                                        tab.m[p.lambda][p.s] + ") depends on T (" + tab.m[p.lambda][p.t] + " vs " +
                                        tab.m[p.lambda][0] + ")");
          }
        }
      }
    }
  }
  report.valid = report.violations.empty();
  return report;
}

std::vector<Subspace> cell_chain(const CellDatum& d) {
  const CellTable tab = build_table(d);
  require_valid_table(tab);
  const Algebra& a = *d.algebra;
  const std::size_t n = a.dim();
  std::vector<Subspace> chain{Subspace(a.field(), n)};
  std::vector<bool> in_ideal(d.poset.size(), false);
  for (auto l : d.poset.linear_extension()) {
    in_ideal[l] = true;
    std::vector<Vec> basis;
    std::vector<std::size_t> members;
    for (std::size_t b = 0; b < n; ++b) {
      if (in_ideal[tab.of_basis[b]->lambda]) {
        basis.push_back(unit_vector(n, b));
        members.push_back(b);
      }
    }
    Subspace ideal = Subspace::span(a.field(), n, basis);
    for (auto b : members) {
      for (std::size_t x = 0; x < n; ++x) {
        if (!ideal.contains(a.mult(x, b))) {
          throw ChainFailure("left product " + a.labels()[x] + " * " + tab.name(b, d) + " leaves the ideal up to " +
                             d.poset.labels()[l]);
        }
        if (!ideal.contains(a.mult(b, x))) {
          throw ChainFailure("right product " + tab.name(b, d) + " * " + a.labels()[x] + " leaves the ideal up to " +
                             d.poset.labels()[l]);
        }
      }
      if (a.has_involution() && !ideal.contains(a.involution().column(b))) {
        throw ChainFailure("ideal up to " + d.poset.labels()[l] + " is not stable under the involution at " + tab.name(b, d));
      }
    }
    if (ideal.dim() - chain.back().dim() != tab.m[l].size() * tab.m[l].size()) {
      throw ChainFailure("layer " + d.poset.labels()[l] + " has the wrong dimension");
    }
    chain.push_back(std::move(ideal));
  }
  return chain;
}

namespace {

Mat cell_action_at(const CellDatum& d, const CellTable& tab, std::size_t l, std::size_t x, std::size_t t) {
  const std::size_t size = tab.m[l].size();
  Mat out(d.algebra->field(), size, size);
  for (std::size_t s = 0; s < size; ++s) {
    const Vec& prod = d.algebra->mult(x, *tab.basis(l, s, t));
    for (std::size_t u = 0; u < size; ++u) out(u, s) = prod[*tab.basis(l, u, t)];
  }
  return out;
}

}  // namespace

Rep cell_module(const CellDatum& d, const std::string& lambda) {
  const CellTable tab = build_table(d);
  require_valid_table(tab);
  const std::size_t l = d.poset.index_of(lambda);
  std::vector<Mat> action;
  for (std::size_t x = 0; x < d.algebra->dim(); ++x) {
    Mat at0 = cell_action_at(d, tab, l, x, 0);
    for (std::size_t t = 1; t < tab.m[l].size(); ++t) {
      if (cell_action_at(d, tab, l, x, t) != at0) {
        throw Error("cell module " + lambda + ": action of " + d.algebra->labels()[x] + " depends on T");
      }
    }
    action.push_back(std::move(at0));
  }
  return Rep(d.algebra, std::move(action));
}

Mat gram_form(const CellDatum& d, const std::string& lambda) {
  const CellTable tab = build_table(d);
  require_valid_table(tab);
  const Algebra& a = *d.algebra;
  const std::size_t l = d.poset.index_of(lambda);
  const std::size_t size = tab.m[l].size();
  Mat g(a.field(), size, size);
  for (std::size_t t = 0; t < size; ++t) {
    for (std::size_t u = 0; u < size; ++u) {
      std::optional<Elem> value;
      for (std::size_t s = 0; s < size; ++s) {
        for (std::size_t v = 0; v < size; ++v) {
          const Vec& prod = a.mult(*tab.basis(l, s, t), *tab.basis(l, u, v));
          for (std::size_t c = 0; c < a.dim(); ++c) {
            if (prod[c] == 0) continue;
            const auto& q = *tab.of_basis[c];
            if (q.lambda == l && !(q.s == s && q.t == v)) {
              throw Error("gram form " + lambda + ": product of " + tab.name(*tab.basis(l, s, t), d) + " and " +
                          tab.name(*tab.basis(l, u, v), d) + " has off-pattern support");
            }
          }
          const Elem phi = prod[*tab.basis(l, s, v)];
          if (value && *value != phi) throw Error("gram form " + lambda + ": phi depends on S or V");
          value = phi;
        }
      }
      g(t, u) = *value;
    }
  }
  return g;
}

std::vector<std::string> simple_labels(const CellDatum& d) {
  std::vector<std::string> out;
  for (const auto& lab : d.poset.labels()) {
    if (!gram_form(d, lab).is_zero()) out.push_back(lab);
  }
  return out;
}

Rep cell_simple(const CellDatum& d, const std::string& lambda) {
  const Rep w = cell_module(d, lambda);
  const Subspace rad = nullspace(gram_form(d, lambda));
  if (!is_submodule(w, rad)) throw Error("cell module " + lambda + ": radical of the form is not a submodule");
  return quotient(w, rad);
}

std::vector<SimpleWitness> cell_witnesses(const CellDatum& d) {
  const CellTable tab = build_table(d);
  require_valid_table(tab);
  std::vector<SimpleWitness> out;
  for (auto l : d.poset.linear_extension()) {
    const auto& lab = d.poset.labels()[l];
    const Mat g = gram_form(d, lab);
    bool done = false;
    for (std::size_t t = 0; t < g.rows() && !done; ++t) {
      for (std::size_t u = 0; u < g.cols() && !done; ++u) {
        if (g(t, u) == 0) continue;
        out.push_back({lab, unit_vector(d.algebra->dim(), *tab.basis(l, u, t))});
        done = true;
      }
    }
  }
  return out;
}

AlgebraPtr cell_labelled_algebra(const CellDatum& d) {
  return std::make_shared<const Algebra>(d.algebra->with_witnesses(cell_witnesses(d)));
}

void check_cell_simple_count(const CellDatum& d, const AlgebraStructure& st) {
  const auto labels = simple_labels(d);
  if (labels.size() != st.count()) {
    throw Error("cell datum gives " + std::to_string(labels.size()) + " simple modules but the algebra has " +
                std::to_string(st.count()));
  }
}

}  // namespace loewy
