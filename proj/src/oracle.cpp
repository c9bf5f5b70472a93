#include "loewy/oracle.hpp"

#include <random>

#include "loewy/series.hpp"

namespace loewy {

namespace {

constexpr std::size_t kMaxPoints = 4096;
constexpr std::size_t kRandomSamples = 48;

// Nonzero vectors of `space` up to scalars, or nullopt when there are too many.
std::optional<std::vector<Vec>> projective_points(const Subspace& space) {
  const Field& f = space.field();
  const std::size_t k = space.dim();
  double count = 1;
  for (std::size_t i = 0; i < k; ++i) count *= f.order();
  if (count / f.order() > kMaxPoints) return std::nullopt;
  const auto elems = f.elements();
  std::vector<Vec> out;
  // Leading coordinate 1 in the first nonzero position.
  for (std::size_t lead = 0; lead < k; ++lead) {
    std::size_t tail = k - lead - 1;
    std::size_t combos = 1;
    for (std::size_t i = 0; i < tail; ++i) combos *= f.order();
    for (std::size_t c = 0; c < combos; ++c) {
      Vec v = space.vector(lead);
      std::size_t x = c;
      for (std::size_t i = lead + 1; i < k; ++i) {
        const Elem coef = elems[x % f.order()];
        x /= f.order();
        if (coef != 0) v = vec_add(f, v, vec_scale(f, coef, space.vector(i)));
      }
      out.push_back(std::move(v));
    }
  }
  return out;
}

std::vector<Mat> transposes(const std::vector<Mat>& actions) {
  std::vector<Mat> out;
  for (const auto& a : actions) out.push_back(a.transpose());
  return out;
}

// Annihilator in F^n of a subspace of the dual space.
Subspace perp(const Subspace& w) { return nullspace(w.basis()); }

}  // namespace

std::optional<Subspace> find_proper_submodule(const Rep& m) {
  const std::size_t d = m.dim();
  if (d <= 1) return std::nullopt;
  const Field& f = m.field();
  const auto& alg = *m.algebra();
  const auto actions = m.generator_actions();
  const auto dual_actions = transposes(actions);

  std::vector<Vec> samples;
  for (std::size_t i = 0; i < alg.dim(); ++i) samples.push_back(alg.basis_element(i));
  std::mt19937 rng(0x5EED0000u + static_cast<unsigned>(d));
  std::uniform_int_distribution<std::uint32_t> pick(0, f.order() - 1);
  const auto elems = f.elements();
  for (std::size_t r = 0; r < kRandomSamples; ++r) {
    Vec v(alg.dim());
    for (auto& x : v) x = elems[pick(rng)];
    samples.push_back(std::move(v));
  }
  const std::size_t eigen_limit = std::min<std::size_t>(f.order(), 64);

  for (const auto& a : samples) {
    const Mat x = m.act(a);
    for (std::size_t e = 0; e < eigen_limit; ++e) {
      const Elem c = elems[e];
      const Mat y = x - Mat::identity(f, d).scaled(c);
      const Subspace kernel = nullspace(y);
      if (kernel.is_zero()) continue;
      const auto points = projective_points(kernel);
      if (!points) continue;
      for (const auto& v : *points) {
        const Subspace s = spin(f, d, {v}, actions);
        if (s.dim() < d) return s;
      }
      // Every kernel vector generates m: Norton's test on the dual side.
      const Subspace dual_kernel = nullspace(y.transpose());
      const Subspace s = spin(f, d, {dual_kernel.vector(0)}, dual_actions);
      if (s.dim() < d) return perp(s);
      return std::nullopt;
    }
  }
  if (is_absolutely_simple(m)) return std::nullopt;
  throw Error("oracle could not decide irreducibility of a module of dimension " + std::to_string(d));
}

CompositionFactors composition_factors(const Rep& m) {
  CompositionFactors out;
  std::vector<Rep> stack{m};
  while (!stack.empty()) {
    Rep cur = std::move(stack.back());
    stack.pop_back();
    if (cur.dim() == 0) continue;
    const auto sub = find_proper_submodule(cur);
    if (sub) {
      stack.push_back(submodule(cur, *sub));
      stack.push_back(quotient(cur, *sub));
      continue;
    }
    bool found = false;
    for (std::size_t i = 0; i < out.simples.size() && !found; ++i) {
      if (out.simples[i].dim() == cur.dim() && is_isomorphic(out.simples[i], cur)) {
        ++out.multiplicities[i];
        found = true;
      }
    }
    if (!found) {
      out.simples.push_back(cur);
      out.multiplicities.push_back(1);
    }
  }
  return out;
}

Subspace annihilator_radical(const Algebra& a, const std::vector<Rep>& simples) {
  std::size_t rows = 0;
  for (const auto& s : simples) rows += s.dim() * s.dim();
  Mat big(a.field(), rows, a.dim());
  std::size_t r0 = 0;
  for (const auto& s : simples) {
    for (std::size_t i = 0; i < a.dim(); ++i) {
      const Vec flat = flatten(s.action(i));
      for (std::size_t k = 0; k < flat.size(); ++k) big(r0 + k, i) = flat[k];
    }
    r0 += s.dim() * s.dim();
  }
  return nullspace(big);
}

OracleComparison oracle_crosscheck(const AlgebraStructure& st) {
  OracleComparison out;
  auto fail = [&](std::string msg) {
    out.agrees = false;
    out.mismatches.push_back(std::move(msg));
  };
  const Algebra& a = *st.algebra();
  const Field& f = a.field();
  const auto factors = composition_factors(Rep::regular(st.algebra()));
  const Subspace rad = annihilator_radical(a, factors.simples);
  if (rad != st.radical()) {
    fail("radical: oracle dimension " + std::to_string(rad.dim()) + ", computed " +
         std::to_string(st.radical().dim()) + (rad.dim() == st.radical().dim() ? " (different subspaces)" : ""));
  }
  if (factors.simples.size() != st.count()) {
    fail("simple count: oracle " + std::to_string(factors.simples.size()) + ", computed " +
         std::to_string(st.count()));
    return out;
  }
  // Match oracle simples to labels.
  std::vector<std::size_t> label_of(st.count(), st.count());
  for (std::size_t i = 0; i < factors.simples.size(); ++i) {
    for (std::size_t l = 0; l < st.count(); ++l) {
      if (is_isomorphic(factors.simples[i], st.simple(l))) label_of[i] = l;
    }
    if (label_of[i] == st.count()) {
      fail("oracle simple of dimension " + std::to_string(factors.simples[i].dim()) + " matches no computed simple");
      return out;
    }
  }
  const auto cartan = cartan_matrix(st);
  for (std::size_t i = 0; i < factors.simples.size(); ++i) {
    const std::size_t l = label_of[i];
    std::size_t expected = 0;
    for (std::size_t mu = 0; mu < st.count(); ++mu) expected += st.simple(mu).dim() * cartan.entries[mu][l];
    if (expected != factors.multiplicities[i]) {
      fail("[A : " + st.labels()[l] + "]: oracle " + std::to_string(factors.multiplicities[i]) + ", computed " +
           std::to_string(expected));
    }
  }
  // Layers of A e_lambda from powers of the oracle radical.
  std::vector<Subspace> powers{Subspace::full(f, a.dim())};
  while (!powers.back().is_zero()) powers.push_back(ideal_power(a, rad, powers.size()));
  for (std::size_t l = 0; l < st.count(); ++l) {
    const Vec& e = st.idempotent(l);
    const auto layers = loewy_diagram(st, st.pim(l));
    auto piece = [&](std::size_t s, std::size_t mu) {
      std::vector<Vec> vs;
      for (const auto& r : powers[s].vectors()) vs.push_back(a.multiply(st.idempotent(mu), a.multiply(r, e)));
      return Subspace::span(f, a.dim(), vs).dim();
    };
    const std::size_t length = powers.size() - 1;
    std::size_t oracle_length = 0;
    for (std::size_t s = 1; s <= length; ++s) {
      bool nonzero = false;
      for (std::size_t mu = 0; mu < st.count(); ++mu) {
        const std::size_t m = piece(s - 1, mu) - piece(s, mu);
        if (m) nonzero = true;
        const std::size_t computed = s <= layers.size() && layers[s - 1].count(st.labels()[mu])
                                         ? layers[s - 1].at(st.labels()[mu])
                                         : 0;
        if (m != computed) {
          fail("[rad_" + std::to_string(s) + " P(" + st.labels()[l] + ") : " + st.labels()[mu] + "]: oracle " +
               std::to_string(m) + ", computed " + std::to_string(computed));
        }
      }
      if (nonzero) oracle_length = s;
    }
    if (oracle_length != layers.size()) {
      fail("Loewy length of P(" + st.labels()[l] + "): oracle " + std::to_string(oracle_length) + ", computed " +
           std::to_string(layers.size()));
    }
  }
  return out;
}

}  // namespace loewy
