#pragma once

// Brute-force helpers shared by the tests. Everything here works on explicit
// sets of vectors over a prime field and avoids the library's elimination code.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "loewy/rep.hpp"

namespace testing {

using loewy::Elem;
using loewy::Field;
using loewy::Mat;
using loewy::Vec;

using VecSet = std::set<Vec>;

inline Vec mat_vec(const Mat& m, const Vec& v, std::uint32_t p) {
  Vec out(m.rows(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) acc += static_cast<std::uint64_t>(m(r, c)) * v[c];
    out[r] = static_cast<Elem>(acc % p);
  }
  return out;
}

inline Vec add_mod(const Vec& a, const Vec& b, std::uint32_t p) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = (a[i] + b[i]) % p;
  return out;
}

/// Every vector of GF(p)^n.
inline std::vector<Vec> all_vectors(std::uint32_t p, std::size_t n) {
  std::vector<Vec> out;
  Vec v(n, 0);
  while (true) {
    out.push_back(v);
    std::size_t i = 0;
    while (i < n && ++v[i] == p) v[i++] = 0;
    if (i == n) break;
  }
  return out;
}

/// Additive closure (= GF(p)-span) of a set of vectors.
inline VecSet additive_closure(const VecSet& gens, std::size_t n, std::uint32_t p) {
  VecSet s{Vec(n, 0)};
  for (const auto& g : gens) {
    if (s.count(g)) continue;
    VecSet next = s;
    for (const auto& x : s) {
      Vec y = x;
      for (std::uint32_t k = 1; k < p; ++k) {
        y = add_mod(y, g, p);
        next.insert(y);
      }
    }
    s = std::move(next);
  }
  return s;
}

/// Smallest subset closed under addition and the given matrices.
inline VecSet submodule_closure(const VecSet& gens, const std::vector<Mat>& actions, std::size_t n, std::uint32_t p) {
  VecSet s = additive_closure(gens, n, p);
  while (true) {
    VecSet g = s;
    for (const auto& v : s) {
      for (const auto& a : actions) g.insert(mat_vec(a, v, p));
    }
    VecSet next = additive_closure(g, n, p);
    if (next.size() == s.size()) return s;
    s = std::move(next);
  }
}

inline VecSet set_intersection(const VecSet& a, const VecSet& b) {
  VecSet out;
  for (const auto& x : a) {
    if (b.count(x)) out.insert(x);
  }
  return out;
}

/// All submodules of a module over a prime field, by sums of cyclic submodules.
inline std::set<VecSet> all_submodules(const loewy::Rep& m) {
  const std::uint32_t p = m.field().characteristic();
  const std::size_t n = m.dim();
  std::set<VecSet> cyclic;
  for (const auto& v : all_vectors(p, n)) cyclic.insert(submodule_closure({v}, m.actions(), n, p));
  std::set<VecSet> all = cyclic;
  std::vector<VecSet> fresh(cyclic.begin(), cyclic.end());
  while (!fresh.empty()) {
    std::vector<VecSet> next;
    for (const auto& a : fresh) {
      for (const auto& c : cyclic) {
        if (std::includes(a.begin(), a.end(), c.begin(), c.end())) continue;
        VecSet u = a;
        u.insert(c.begin(), c.end());
        VecSet closed = additive_closure(u, n, p);
        if (all.insert(closed).second) next.push_back(std::move(closed));
      }
    }
    fresh = std::move(next);
  }
  return all;
}

/// Intersection of all maximal proper submodules.
inline VecSet radical_by_maximal_submodules(const loewy::Rep& m) {
  const auto subs = all_submodules(m);
  VecSet whole;
  for (const auto& s : subs) {
    if (s.size() > whole.size()) whole = s;
  }
  VecSet rad = whole;
  for (const auto& s : subs) {
    if (s.size() == whole.size()) continue;
    bool maximal = true;
    for (const auto& t : subs) {
      if (t.size() > s.size() && t.size() < whole.size() && std::includes(t.begin(), t.end(), s.begin(), s.end())) {
        maximal = false;
        break;
      }
    }
    if (maximal) rad = set_intersection(rad, s);
  }
  return rad;
}

/// All elements of a subspace given by a basis.
inline VecSet elements_of(const loewy::Subspace& s) {
  VecSet gens;
  for (const auto& v : s.vectors()) gens.insert(v);
  return additive_closure(gens, s.ambient(), s.field().characteristic());
}

inline Mat random_mat(const Field& f, std::size_t r, std::size_t c, std::mt19937& rng) {
  Mat m(f, r, c);
  std::uniform_int_distribution<std::uint32_t> d(0, f.order() - 1);
  const auto elems = f.elements();
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m(i, j) = elems[d(rng)];
  }
  return m;
}

inline Vec random_vec(const Field& f, std::size_t n, std::mt19937& rng) {
  std::uniform_int_distribution<std::uint32_t> d(0, f.order() - 1);
  const auto elems = f.elements();
  Vec v(n);
  for (auto& x : v) x = elems[d(rng)];
  return v;
}

}  // namespace testing
