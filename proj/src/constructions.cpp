#include "loewy/constructions.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>

namespace loewy {

namespace {

using Perm = std::vector<std::size_t>;

// (g h)(i) = g(h(i)).
Perm compose(const Perm& g, const Perm& h) {
  Perm out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = g[h[i]];
  return out;
}

Perm inverse(const Perm& g) {
  Perm out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[g[i]] = i;
  return out;
}

std::vector<Perm> all_perms(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::string one_line(const Perm& p) {
  std::string s;
  for (auto x : p) s += static_cast<char>('1' + x);
  return s;
}

int sign(const Perm& p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p[i] > p[j]) s = -s;
    }
  }
  return s;
}

struct GroupTable {
  std::vector<Perm> elements;
  std::map<Perm, std::size_t> index;
};

GroupTable sym_table(std::size_t n) {
  GroupTable t;
  t.elements = all_perms(n);
  for (std::size_t i = 0; i < t.elements.size(); ++i) t.index[t.elements[i]] = i;
  return t;
}

Algebra plain_group_algebra(const GroupTable& g, const Field& field) {
  const std::size_t n = g.elements.size();
  std::vector<std::string> labels;
  std::vector<Vec> mult;
  for (const auto& p : g.elements) labels.push_back(one_line(p));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) mult.push_back(unit_vector(n, g.index.at(compose(g.elements[i], g.elements[j]))));
  }
  Mat inv(field, n, n);
  for (std::size_t j = 0; j < n; ++j) inv(g.index.at(inverse(g.elements[j])), j) = 1;
  return Algebra(field, std::move(labels), std::move(mult), unit_vector(n, 0), std::move(inv));
}

}  // namespace

Algebra group_algebra_sym(std::size_t n, const Field& field) {
  if (n < 1 || n > 4) throw Error("group_algebra_sym: need 1 <= n <= 4");
  const GroupTable g = sym_table(n);
  Algebra a = plain_group_algebra(g, field);
  if (n != 3) return a;

  const std::size_t dim = g.elements.size();
  const std::size_t s = g.index.at(Perm{1, 0, 2});
  const Elem one = field.one();
  Vec unit = unit_vector(dim, 0);
  Vec one_plus_s = unit, one_minus_s = unit;
  one_plus_s[s] = one;
  one_minus_s[s] = field.neg(one);
  std::vector<SimpleWitness> w;
  const std::uint32_t p = field.characteristic();
  if (p == 3) {
    w = {{"sign", one_minus_s}, {"triv", one_plus_s}};
  } else if (p == 2) {
    w = {{"std", one_plus_s}, {"triv", unit}};
  } else {
    Vec total(dim), signed_total(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      total[i] = one;
      signed_total[i] = sign(g.elements[i]) > 0 ? one : field.neg(one);
    }
    w = {{"triv", total}, {"sign", signed_total}, {"std", unit}};
  }
  return a.with_witnesses(std::move(w));
}

namespace {

using Partition = std::vector<std::size_t>;
using Tableau = std::vector<std::vector<std::size_t>>;  // rows of 0-based entries

std::vector<Partition> partitions(std::size_t n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t left, std::size_t max) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (std::size_t part = std::min(left, max); part >= 1; --part) {
      cur.push_back(part);
      rec(left - part, part);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;  // reverse lexicographic: (n) first
}

std::string partition_name(const Partition& p) {
  std::string s;
  for (auto x : p) s += std::to_string(x);
  return s;
}

bool dominates(const Partition& a, const Partition& b) {
  std::size_t sa = 0, sb = 0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    sa += i < a.size() ? a[i] : 0;
    sb += i < b.size() ? b[i] : 0;
    if (sa < sb) return false;
  }
  return true;
}

std::vector<Tableau> standard_tableaux(const Partition& shape) {
  std::size_t n = 0;
  for (auto x : shape) n += x;
  std::vector<Tableau> out;
  Tableau cur(shape.size());
  std::function<void(std::size_t)> rec = [&](std::size_t next) {
    if (next == n) {
      out.push_back(cur);
      return;
    }
    for (std::size_t r = 0; r < shape.size(); ++r) {
      const std::size_t c = cur[r].size();
      if (c == shape[r]) continue;
      if (r > 0 && cur[r - 1].size() <= c) continue;
      cur[r].push_back(next);
      rec(next + 1);
      cur[r].pop_back();
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::string tableau_name(const Tableau& t) {
  std::string s;
  for (std::size_t r = 0; r < t.size(); ++r) {
    if (r > 0) s += '/';
    for (auto x : t[r]) s += static_cast<char>('1' + x);
  }
  return s;
}

}  // namespace

CellDatum murphy_sym(std::size_t n, const Field& field) {
  if (n < 1 || n > 4) throw Error("murphy_sym: need 1 <= n <= 4");
  const GroupTable g = sym_table(n);
  const Algebra group = plain_group_algebra(g, field);
  const std::size_t dim = g.elements.size();

  const auto parts = partitions(n);  // most dominant first = bottom cells first
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> less;
  for (const auto& p : parts) names.push_back(partition_name(p));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = 0; j < parts.size(); ++j) {
      if (i != j && dominates(parts[i], parts[j])) less.emplace_back(names[i], names[j]);
    }
  }

  CellDatum d;
  d.poset = Poset(names, less);
  std::vector<Vec> columns;
  std::vector<std::string> labels;
  for (std::size_t pi = 0; pi < parts.size(); ++pi) {
    const Partition& shape = parts[pi];
    // Initial tableau and its row stabiliser.
    std::vector<std::size_t> row_of(n);
    Tableau initial(shape.size());
    std::size_t next = 0;
    for (std::size_t r = 0; r < shape.size(); ++r) {
      for (std::size_t c = 0; c < shape[r]; ++c) {
        initial[r].push_back(next);
        row_of[next++] = r;
      }
    }
    Vec x_lambda(dim, 0);
    for (std::size_t i = 0; i < dim; ++i) {
      const Perm& w = g.elements[i];
      bool stab = true;
      for (std::size_t k = 0; k < n && stab; ++k) stab = row_of[w[k]] == row_of[k];
      if (stab) x_lambda[i] = field.one();
    }
    const auto tableaux = standard_tableaux(shape);
    std::vector<Perm> d_of;
    std::vector<std::string> tnames;
    for (const auto& t : tableaux) {
      Perm w(n);
      for (std::size_t r = 0; r < shape.size(); ++r) {
        for (std::size_t c = 0; c < shape[r]; ++c) w[initial[r][c]] = t[r][c];
      }
      d_of.push_back(std::move(w));
      tnames.push_back(tableau_name(t));
    }
    d.m_sets[names[pi]] = tnames;
    for (std::size_t s = 0; s < tableaux.size(); ++s) {
      const Vec left = unit_vector(dim, g.index.at(d_of[s]));
      for (std::size_t t = 0; t < tableaux.size(); ++t) {
        const Vec right = unit_vector(dim, g.index.at(inverse(d_of[t])));
        d.basis_index.push_back({names[pi], tnames[s], tnames[t], columns.size()});
        columns.push_back(group.multiply(group.multiply(left, x_lambda), right));
        labels.push_back("m(" + tnames[s] + "," + tnames[t] + ")");
      }
    }
  }
  d.algebra = std::make_shared<const Algebra>(group.change_basis(Mat::from_columns(field, dim, columns), labels));
  return d;
}

namespace {

using Matching = std::vector<std::size_t>;  // partner of each of 2n points; top 0..n-1, bottom n..2n-1

std::vector<Matching> planar_matchings(std::size_t n) {
  // Boundary order: top left to right, then bottom right to left.
  std::vector<std::size_t> point_at(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    point_at[i] = i;
    point_at[2 * n - 1 - i] = n + i;
  }
  std::vector<std::size_t> pos(2 * n);
  for (std::size_t c = 0; c < 2 * n; ++c) pos[point_at[c]] = c;
  auto noncrossing = [&](const Matching& m) {
    for (std::size_t x = 0; x < 2 * n; ++x) {
      for (std::size_t y = 0; y < 2 * n; ++y) {
        const std::size_t a = pos[x], b = pos[m[x]], c = pos[y], e = pos[m[y]];
        if (a < c && c < b && b < e) return false;
      }
    }
    return true;
  };
  std::vector<Matching> out;
  Matching cur(2 * n, 0);
  std::vector<bool> used(2 * n, false);
  std::function<void()> rec = [&]() {
    std::size_t a = 0;
    while (a < 2 * n && used[a]) ++a;
    if (a == 2 * n) {
      if (noncrossing(cur)) out.push_back(cur);
      return;
    }
    for (std::size_t b = a + 1; b < 2 * n; ++b) {
      if (used[b]) continue;
      used[a] = used[b] = true;
      cur[a] = b;
      cur[b] = a;
      rec();
      used[a] = used[b] = false;
    }
  };
  rec();
  return out;
}

std::string top_half(const Matching& m, std::size_t n) {
  std::string s;
  for (std::size_t i = 0; i < n; ++i) s += m[i] >= n ? '|' : (m[i] > i ? '(' : ')');
  return s;
}

std::string bottom_half(const Matching& m, std::size_t n) {
  std::string s;
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t q = m[n + j];
    s += q < n ? '|' : (q > n + j ? '(' : ')');
  }
  return s;
}

std::size_t through_count(const std::string& half) {
  return static_cast<std::size_t>(std::count(half.begin(), half.end(), '|'));
}

// d1 on top of d2; returns the composite and the number of closed loops.
std::pair<Matching, std::size_t> stack(const Matching& d1, const Matching& d2, std::size_t n) {
  // Nodes: A = d1 top (0..n-1), M = middle (n..2n-1), B = d2 bottom (2n..3n-1).
  const std::size_t none = 3 * n;
  std::vector<std::size_t> e1(3 * n, none), e2(3 * n, none);
  for (std::size_t p = 0; p < 2 * n; ++p) e1[p] = d1[p];  // d1 points map directly to A and M
  for (std::size_t p = 0; p < 2 * n; ++p) e2[n + p] = n + d2[p];
  std::vector<bool> seen(3 * n, false);
  Matching out(2 * n);
  auto to_point = [&](std::size_t node) { return node < n ? node : node - n; };
  auto walk = [&](std::size_t start, bool use_first) {
    std::size_t node = start;
    bool first = use_first;
    seen[node] = true;
    for (;;) {
      node = first ? e1[node] : e2[node];
      seen[node] = true;
      if (node < n || node >= 2 * n) return node;
      first = !first;
    }
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (!seen[i]) {
      const std::size_t end = walk(i, true);
      out[i] = to_point(end);
      out[to_point(end)] = i;
    }
  }
  for (std::size_t j = 2 * n; j < 3 * n; ++j) {
    if (!seen[j]) {
      const std::size_t end = walk(j, false);
      out[to_point(j)] = to_point(end);
      out[to_point(end)] = to_point(j);
    }
  }
  std::size_t loops = 0;
  for (std::size_t m = n; m < 2 * n; ++m) {
    if (seen[m]) continue;
    ++loops;
    std::size_t node = m;
    bool first = true;
    do {
      seen[node] = true;
      node = first ? e1[node] : e2[node];
      first = !first;
    } while (node != m);
  }
  return {out, loops};
}

}  // namespace

CellDatum temperley_lieb(std::size_t n, Elem delta, const Field& field) {
  if (n < 1 || n > 6) throw Error("temperley_lieb: need 1 <= n <= 6");
  auto matchings = planar_matchings(n);
  // Group by through-strand count (ascending), then top half, then bottom half.
  std::map<std::size_t, std::map<std::string, std::map<std::string, Matching>>> cells;
  for (const auto& m : matchings) {
    const std::string s = top_half(m, n), t = bottom_half(m, n);
    cells[through_count(s)][s][t] = m;
  }
  CellDatum d;
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> less;
  for (const auto& [lambda, rows] : cells) names.push_back(std::to_string(lambda));
  for (std::size_t i = 0; i + 1 < names.size(); ++i) less.emplace_back(names[i], names[i + 1]);
  d.poset = Poset(names, less);

  std::vector<Matching> basis;
  std::vector<std::string> labels;
  std::map<Matching, std::size_t> index;
  for (const auto& [lambda, rows] : cells) {
    std::vector<std::string> halves;
    for (const auto& [s, row] : rows) halves.push_back(s);
    d.m_sets[std::to_string(lambda)] = halves;
    for (const auto& s : halves) {
      for (const auto& t : halves) {
        const Matching& m = rows.at(s).at(t);
        index[m] = basis.size();
        d.basis_index.push_back({std::to_string(lambda), s, t, basis.size()});
        basis.push_back(m);
        labels.push_back(s + "/" + t);
      }
    }
  }
  const std::size_t dim = basis.size();
  std::vector<Vec> mult;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      const auto [m, loops] = stack(basis[i], basis[j], n);
      Elem coeff = field.one();
      for (std::size_t l = 0; l < loops; ++l) coeff = field.mul(coeff, delta);
      Vec v(dim, 0);
      v[index.at(m)] = coeff;
      mult.push_back(std::move(v));
    }
  }
  Matching identity(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    identity[i] = n + i;
    identity[n + i] = i;
  }
  Mat inv(field, dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    Matching flipped(2 * n);
    for (std::size_t p = 0; p < 2 * n; ++p) flipped[(p + n) % (2 * n)] = (basis[j][p] + n) % (2 * n);
    inv(index.at(flipped), j) = field.one();
  }
  d.algebra = std::make_shared<const Algebra>(field, labels, std::move(mult), unit_vector(dim, index.at(identity)), inv);
  return d;
}

WeightedAlgebra schur_algebra_2r(std::size_t r, const Field& field) {
  if (r < 1 || r > 4) throw Error("schur_algebra_2r: need 1 <= r <= 4");
  const std::size_t d = std::size_t{1} << r;
  // Multi-index I <-> bits; bit k set means tensor factor k is e_2.
  std::vector<Mat> swaps;
  for (std::size_t k = 0; k + 1 < r; ++k) {
    Mat p(field, d, d);
    for (std::size_t i = 0; i < d; ++i) {
      const std::size_t bk = (i >> k) & 1, bk1 = (i >> (k + 1)) & 1;
      std::size_t j = i & ~((std::size_t{1} << k) | (std::size_t{1} << (k + 1)));
      j |= (bk << (k + 1)) | (bk1 << k);
      p(j, i) = field.one();
    }
    swaps.push_back(std::move(p));
  }
  if (swaps.empty()) swaps.push_back(Mat::identity(field, d));
  const Subspace comm = commutant(swaps);
  const std::size_t dim = comm.dim();

  auto index_name = [&](std::size_t i) {
    std::string s;
    for (std::size_t k = 0; k < r; ++k) s += ((i >> k) & 1) ? '2' : '1';
    return s;
  };
  std::vector<Mat> mats;
  std::vector<std::string> labels;
  for (std::size_t b = 0; b < dim; ++b) {
    mats.push_back(unflatten(field, d, d, comm.vector(b)));
    const std::size_t lead = comm.pivots()[b];
    labels.push_back("xi(" + index_name(lead / d) + "," + index_name(lead % d) + ")");
  }
  std::vector<Vec> mult;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) mult.push_back(comm.coordinates(flatten(mats[i] * mats[j])));
  }
  const Vec unit = comm.coordinates(flatten(Mat::identity(field, d)));
  Mat inv(field, dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    const Vec c = comm.coordinates(flatten(mats[j].transpose()));
    for (std::size_t i = 0; i < dim; ++i) inv(i, j) = c[i];
  }

  // Weights (a, b), a >= b, most dominant first; xi_lambda projects onto tensors with b factors e_2.
  std::vector<std::string> names;
  std::vector<SimpleWitness> witnesses;
  for (std::size_t b = 0; 2 * b <= r; ++b) {
    const std::string name = std::to_string(r - b) + "," + std::to_string(b);
    names.push_back(name);
    Mat xi(field, d, d);
    for (std::size_t i = 0; i < d; ++i) {
      if (static_cast<std::size_t>(std::popcount(i)) == b) xi(i, i) = field.one();
    }
    witnesses.push_back({name, comm.coordinates(flatten(xi))});
  }
  std::vector<std::pair<std::string, std::string>> less;
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t j = i + 1; j < names.size(); ++j) less.emplace_back(names[j], names[i]);
  }
  auto algebra = std::make_shared<const Algebra>(field, labels, std::move(mult), unit, inv, witnesses);
  return {algebra, Poset(names, less)};
}

WeightedAlgebra semisimple(const std::vector<std::size_t>& blocks, const Field& field) {
  if (blocks.empty()) throw Error("semisimple: need at least one block");
  struct Entry {
    std::size_t block, i, j;
  };
  std::vector<Entry> entries;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> index;
  std::vector<std::string> labels;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b] == 0) throw Error("semisimple: block sizes must be positive");
    for (std::size_t i = 0; i < blocks[b]; ++i) {
      for (std::size_t j = 0; j < blocks[b]; ++j) {
        index[{b, i, j}] = entries.size();
        entries.push_back({b, i, j});
        labels.push_back("E" + std::to_string(b) + "(" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
  const std::size_t dim = entries.size();
  std::vector<Vec> mult;
  for (const auto& x : entries) {
    for (const auto& y : entries) {
      Vec v(dim, 0);
      if (x.block == y.block && x.j == y.i) v[index.at({x.block, x.i, y.j})] = field.one();
      mult.push_back(std::move(v));
    }
  }
  Vec unit(dim, 0);
  Mat inv(field, dim, dim);
  std::vector<SimpleWitness> witnesses;
  std::vector<std::string> names;
  for (std::size_t k = 0; k < dim; ++k) {
    const auto& e = entries[k];
    if (e.i == e.j) unit[k] = field.one();
    inv(index.at({e.block, e.j, e.i}), k) = field.one();
  }
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    names.push_back("L" + std::to_string(b));
    witnesses.push_back({names.back(), unit_vector(dim, index.at({b, 0, 0}))});
  }
  auto algebra = std::make_shared<const Algebra>(field, labels, std::move(mult), unit, inv, witnesses);
  return {algebra, Poset::discrete(names)};
}

Algebra truncated_polynomial(const Field& field) {
  std::vector<Vec> mult{{1, 0}, {0, 1}, {0, 1}, {0, 0}};
  return Algebra(field, {"1", "x"}, std::move(mult), {1, 0}, Mat::identity(field, 2));
}

Algebra upper_triangular(std::size_t n, const Field& field) {
  if (n < 1) throw Error("upper_triangular: need n >= 1");
  std::vector<std::pair<std::size_t, std::size_t>> entries;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      index[{i, j}] = entries.size();
      entries.emplace_back(i, j);
      labels.push_back("E(" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }
  const std::size_t dim = entries.size();
  std::vector<Vec> mult;
  for (const auto& [a, b] : entries) {
    for (const auto& [c, e] : entries) {
      Vec v(dim, 0);
      if (b == c) v[index.at({a, e})] = field.one();
      mult.push_back(std::move(v));
    }
  }
  Vec unit(dim, 0);
  for (std::size_t i = 0; i < n; ++i) unit[index.at({i, i})] = field.one();
  return Algebra(field, std::move(labels), std::move(mult), std::move(unit));
}

}  // namespace loewy
