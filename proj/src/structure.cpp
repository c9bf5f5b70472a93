#include "loewy/structure.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

namespace loewy {

namespace {

// ---------------------------------------------------------------------------
// Radical over the prime field.

using IntMat = std::vector<std::int64_t>;  // square, row-major

IntMat int_mul(const IntMat& a, const IntMat& b, std::size_t n, std::int64_t mod) {
  IntMat out(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const std::int64_t x = a[i * n + k];
      if (x == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out[i * n + j] += x * b[k * n + j];
    }
    for (std::size_t j = 0; j < n; ++j) out[i * n + j] %= mod;
  }
  return out;
}

// Tr(Y^e) mod `mod` for e a power of two times an odd part, via square-and-multiply;
// the final product only needs its trace.
std::int64_t trace_power(const IntMat& y, std::size_t n, std::uint64_t e, std::int64_t mod) {
  if (e == 1) {
    std::int64_t t = 0;
    for (std::size_t i = 0; i < n; ++i) t += y[i * n + i];
    return t % mod;
  }
  // Y^e = Y^a * Y^b with a = e / 2, b = e - a.
  auto power = [&](std::uint64_t k) {
    IntMat result(n * n, 0), base = y;
    for (std::size_t i = 0; i < n; ++i) result[i * n + i] = 1;
    for (; k > 0; k >>= 1) {
      if (k & 1) result = int_mul(result, base, n, mod);
      if (k > 1) base = int_mul(base, base, n, mod);
    }
    return result;
  };
  const std::uint64_t a = e / 2;
  const IntMat ya = power(a);
  const IntMat yb = (e - a == a) ? ya : power(e - a);
  std::int64_t t = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t = (t + ya[i * n + j] * yb[j * n + i]) % mod;
  }
  return t;
}

}  // namespace

Subspace radical(const Algebra& a) {
  const Field& field = a.field();
  const std::uint32_t p = field.characteristic();
  const std::size_t k = field.degree();
  const std::size_t n = a.dim();
  const std::size_t big = n * k;
  const Field prime = Field::prime(p);

  // GF(p)-basis beta_{i,t} = x^t b_i, index i*k + t.
  auto to_fq = [&](const Vec& fp) {
    Vec out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::int64_t> c(k);
      for (std::size_t t = 0; t < k; ++t) c[t] = fp[i * k + t];
      out[i] = field.from_coefficients(c);
    }
    return out;
  };
  // Regular representation of an F_q element as a big x big integer matrix.
  auto fp_matrix = [&](const Vec& element) {
    const Mat l = a.left_mult_of(element);
    IntMat out(big * big, 0);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t t = 0; t < k; ++t) {
        std::vector<std::int64_t> xt(k, 0);
        xt[t] = 1;
        const Elem scale = field.from_coefficients(xt);
        for (std::size_t m = 0; m < n; ++m) {
          const auto coeffs = field.coefficients(field.mul(scale, l(m, j)));
          for (std::size_t s = 0; s < k; ++s) out[(m * k + s) * big + (j * k + t)] = coeffs[s];
        }
      }
    }
    return out;
  };

  std::vector<IntMat> basis_mats;
  basis_mats.reserve(big);
  for (std::size_t b = 0; b < big; ++b) basis_mats.push_back(fp_matrix(to_fq(unit_vector(big, b))));

  auto combine = [&](const Vec& fp) {
    IntMat out(big * big, 0);
    for (std::size_t b = 0; b < big; ++b) {
      if (fp[b] == 0) continue;
      for (std::size_t x = 0; x < big * big; ++x) out[x] += static_cast<std::int64_t>(fp[b]) * basis_mats[b][x];
    }
    for (auto& x : out) x %= p;
    return out;
  };

  std::size_t levels = 0;  // floor(log_p big)
  for (std::uint64_t pw = p; pw <= big; pw *= p) ++levels;

  Subspace current = Subspace::full(prime, big);
  std::uint64_t p_i = 1;  // p^i
  for (std::size_t i = 0; i <= levels && !current.is_zero(); ++i, p_i *= p) {
    const std::int64_t mod = static_cast<std::int64_t>(p_i * p);
    std::vector<IntMat> current_mats;
    for (std::size_t s = 0; s < current.dim(); ++s) current_mats.push_back(combine(current.vector(s)));
    // G[b][s] = g_i(a_s b) where g_i(y) = (Tr(y^{p^i}) mod p^{i+1}) / p^i.
    Mat g(prime, big, current.dim());
    for (std::size_t b = 0; b < big; ++b) {
      for (std::size_t s = 0; s < current.dim(); ++s) {
        const IntMat prod = int_mul(current_mats[s], basis_mats[b], big, p);
        const std::int64_t tr = trace_power(prod, big, p_i, mod);
        if (tr % static_cast<std::int64_t>(p_i) != 0) {
          throw Error("radical: trace form not divisible by p^i; input is not an associative algebra");
        }
        g(b, s) = static_cast<Elem>((tr / static_cast<std::int64_t>(p_i)) % p);
      }
    }
    const Subspace kernel = nullspace(g);
    std::vector<Vec> next;
    for (std::size_t c = 0; c < kernel.dim(); ++c) {
      Vec v(big, 0);
      for (std::size_t s = 0; s < current.dim(); ++s) {
        const Elem coeff = kernel.basis()(c, s);
        if (coeff == 0) continue;
        v = vec_add(prime, v, vec_scale(prime, coeff, current.vector(s)));
      }
      next.push_back(std::move(v));
    }
    current = Subspace::span(prime, big, next);
  }

  std::vector<Vec> fq_vectors;
  for (std::size_t s = 0; s < current.dim(); ++s) fq_vectors.push_back(to_fq(current.vector(s)));
  Subspace result = Subspace::span(field, n, fq_vectors);
  if (result.dim() * k != current.dim()) throw Error("radical: prime-field radical is not a GF(q)-subspace");
  return result;
}

Subspace ideal_power(const Algebra& a, const Subspace& ideal, std::size_t s) {
  Subspace power = Subspace::full(a.field(), a.dim());
  for (std::size_t step = 0; step < s && !power.is_zero(); ++step) {
    std::vector<Vec> products;
    for (std::size_t i = 0; i < ideal.dim(); ++i) {
      const Mat l = a.left_mult_of(ideal.vector(i));
      for (std::size_t j = 0; j < power.dim(); ++j) products.push_back(l * power.vector(j));
    }
    power = Subspace::span(a.field(), a.dim(), products);
  }
  return power;
}

Vec QuotientAlgebra::project(const Subspace& ideal, const Vec& a) const {
  const Vec r = ideal.reduce(a);
  Vec out(complement.size());
  for (std::size_t t = 0; t < complement.size(); ++t) out[t] = r[complement[t]];
  return out;
}

Vec QuotientAlgebra::lift(std::size_t ambient_dim, const Vec& b) const {
  Vec out(ambient_dim, 0);
  for (std::size_t t = 0; t < complement.size(); ++t) out[complement[t]] = b[t];
  return out;
}

QuotientAlgebra quotient_algebra(const Algebra& a, const Subspace& ideal) {
  std::vector<bool> pivot(a.dim(), false);
  for (auto p : ideal.pivots()) pivot[p] = true;
  std::vector<std::size_t> complement;
  for (std::size_t j = 0; j < a.dim(); ++j) {
    if (!pivot[j]) complement.push_back(j);
  }
  auto project = [&](const Vec& v) {
    const Vec r = ideal.reduce(v);
    Vec out(complement.size());
    for (std::size_t t = 0; t < complement.size(); ++t) out[t] = r[complement[t]];
    return out;
  };
  std::vector<std::string> labels;
  for (auto j : complement) labels.push_back(a.labels()[j]);
  std::vector<Vec> mult;
  for (auto i : complement) {
    for (auto j : complement) mult.push_back(project(a.mult(i, j)));
  }
  return QuotientAlgebra{Algebra(a.field(), std::move(labels), std::move(mult), project(a.unit())),
                         std::move(complement)};
}

namespace {

// ---------------------------------------------------------------------------
// Semisimple splitting.

Subspace products_span(const Algebra& b, const Vec& y, const std::vector<Vec>& basis) {
  std::vector<Vec> prods;
  prods.reserve(basis.size());
  for (const auto& u : basis) prods.push_back(b.multiply(y, u));
  return Subspace::span(b.field(), b.dim(), prods);
}

// Basis of the corner g B g.
std::vector<Vec> corner_basis(const Algebra& b, const Vec& g) {
  std::vector<Vec> elems;
  for (std::size_t i = 0; i < b.dim(); ++i) elems.push_back(b.multiply(b.multiply(g, b.basis_element(i)), g));
  return Subspace::span(b.field(), b.dim(), elems).vectors();
}

Vec combo(const Field& f, const Vec& x, Elem c, const Vec& g) { return vec_sub(f, x, vec_scale(f, c, g)); }

// Splits the central idempotents of a commutative split semisimple algebra.
std::vector<Vec> central_idempotents(const Algebra& b) {
  const Field& f = b.field();
  std::vector<Mat> constraints;
  for (auto g : b.generators()) constraints.push_back(b.left_mult(g) - b.right_mult(g));
  Subspace center = Subspace::full(f, b.dim());
  if (!constraints.empty()) {
    Mat stacked(f, constraints.size() * b.dim(), b.dim());
    for (std::size_t c = 0; c < constraints.size(); ++c) {
      for (std::size_t r = 0; r < b.dim(); ++r) {
        for (std::size_t j = 0; j < b.dim(); ++j) stacked(c * b.dim() + r, j) = constraints[c](r, j);
      }
    }
    center = nullspace(stacked);
  }
  const auto z_basis = center.vectors();

  std::vector<Vec> idempotents{b.unit()};
  for (const auto& z : z_basis) {
    std::vector<Vec> next;
    for (const auto& e : idempotents) {
      std::vector<Vec> ze;
      for (const auto& zz : z_basis) ze.push_back(b.multiply(zz, e));
      const auto ze_basis = Subspace::span(f, b.dim(), ze).vectors();
      if (ze_basis.size() <= 1) {
        next.push_back(e);
        continue;
      }
      const Vec w = b.multiply(z, e);
      std::vector<Elem> eigen;
      for (Elem c : f.elements()) {
        if (products_span(b, combo(f, w, c, e), ze_basis).dim() < ze_basis.size()) eigen.push_back(c);
      }
      if (eigen.size() <= 1) {
        next.push_back(e);
        continue;
      }
      Vec rest = e;
      for (Elem c : eigen) {
        Vec ec = e;
        for (Elem other : eigen) {
          if (other == c) continue;
          const Vec factor = vec_scale(f, f.inv(f.sub(c, other)), combo(f, w, other, e));
          ec = b.multiply(ec, factor);
        }
        rest = vec_sub(f, rest, ec);
        next.push_back(std::move(ec));
      }
      if (!vec_is_zero(rest)) next.push_back(std::move(rest));
    }
    idempotents = std::move(next);
  }
  for (const auto& e : idempotents) {
    std::vector<Vec> ze;
    for (const auto& zz : z_basis) ze.push_back(b.multiply(zz, e));
    if (Subspace::span(f, b.dim(), ze).dim() != 1) {
      throw NotSplit("center of the semisimple quotient does not split over " + f.name() +
                     "; retry over a larger extension field");
    }
  }
  return idempotents;
}

// Some nonzero non-invertible element of the corner C = gBg, if one is found.
std::optional<Vec> singular_in_corner(const Algebra& b, const Vec& g, const std::vector<Vec>& corner) {
  const Field& f = b.field();
  const std::size_t m = corner.size();
  auto singular = [&](const Vec& y) { return !vec_is_zero(y) && products_span(b, y, corner).dim() < m; };
  auto try_shifts = [&](const Vec& x) -> std::optional<Vec> {
    for (Elem c : f.elements()) {
      Vec y = combo(f, x, c, g);
      if (singular(y)) return y;
    }
    return std::nullopt;
  };
  for (const auto& x : corner) {
    if (auto y = try_shifts(x)) return y;
  }
  for (std::size_t s = 0; s < m; ++s) {
    for (std::size_t t = s + 1; t < m; ++t) {
      if (auto y = try_shifts(vec_add(f, corner[s], corner[t]))) return y;
      if (auto y = try_shifts(b.multiply(corner[s], corner[t]))) return y;
    }
  }
  std::mt19937 rng(0xC0FFEE);
  std::uniform_int_distribution<Elem> pick(0, f.order() - 1);
  for (int attempt = 0; attempt < 500; ++attempt) {
    Vec x(b.dim(), 0);
    for (const auto& u : corner) x = vec_add(f, x, vec_scale(f, pick(rng), u));
    if (auto y = try_shifts(x)) return y;
  }
  return std::nullopt;
}

// Splits g into orthogonal primitive idempotents of B.
void split_idempotent(const Algebra& b, const Vec& g, std::vector<Vec>& out) {
  const Field& f = b.field();
  const auto corner = corner_basis(b, g);
  if (corner.size() == 1) {
    out.push_back(g);
    return;
  }
  const auto y = singular_in_corner(b, g, corner);
  if (!y) throw NotSplit("no zero divisor in a simple block over " + f.name() + "; the block is not split");
  // Generalised inverse: s in C with y s y = y; then h = s y is a proper idempotent.
  std::vector<Vec> columns;
  for (const auto& u : corner) columns.push_back(b.multiply(b.multiply(*y, u), *y));
  const auto sigma = solve(Mat::from_columns(f, b.dim(), columns), *y);
  if (!sigma) throw Error("semisimple splitting: no generalised inverse in the corner algebra");
  Vec s(b.dim(), 0);
  for (std::size_t t = 0; t < corner.size(); ++t) s = vec_add(f, s, vec_scale(f, (*sigma)[t], corner[t]));
  const Vec h = b.multiply(s, *y);
  split_idempotent(b, h, out);
  split_idempotent(b, vec_sub(f, g, h), out);
}

}  // namespace

std::vector<std::vector<Vec>> semisimple_idempotents(const Algebra& b) {
  std::vector<std::vector<Vec>> blocks;
  for (const auto& e : central_idempotents(b)) {
    std::vector<Vec> block_ideal;
    for (std::size_t i = 0; i < b.dim(); ++i) block_ideal.push_back(b.multiply(b.basis_element(i), e));
    const std::size_t dim = Subspace::span(b.field(), b.dim(), block_ideal).dim();
    const auto d = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(dim))));
    if (d * d != dim) throw NotSplit("simple block of dimension " + std::to_string(dim) + " is not a full matrix algebra");
    std::vector<Vec> primitive;
    split_idempotent(b, e, primitive);
    if (primitive.size() != d) throw NotSplit("block does not split into rank-one idempotents");
    blocks.push_back(std::move(primitive));
  }
  return blocks;
}

Vec lift_idempotent(const Algebra& a, Vec e) {
  const Field& f = a.field();
  for (int iter = 0; iter < 64; ++iter) {
    const Vec e2 = a.multiply(e, e);
    if (e2 == e) return e;
    const Vec e3 = a.multiply(e2, e);
    e = vec_sub(f, vec_scale(f, f.from_int(3), e2), vec_scale(f, f.from_int(2), e3));
  }
  throw Error("idempotent lifting did not converge; the ideal is not nilpotent");
}

AlgebraStructure::AlgebraStructure(AlgebraPtr algebra) : algebra_(std::move(algebra)) {
  const Algebra& a = *algebra_;
  const Field& f = a.field();
  radical_ = loewy::radical(a);
  radical_basis_ = radical_.vectors();

  const QuotientAlgebra quot = quotient_algebra(a, radical_);
  const auto blocks = semisimple_idempotents(quot.algebra);

  // Orthogonal lifting, one idempotent at a time inside the complementary corner.
  Vec remaining = a.unit();
  std::vector<std::size_t> block_of;
  std::vector<Vec> lifted;
  std::size_t total = 0;
  for (const auto& blk : blocks) total += blk.size();
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    for (const auto& fb : blocks[bi]) {
      block_of.push_back(bi);
      if (lifted.size() + 1 == total) {
        lifted.push_back(remaining);
        break;
      }
      const Vec x = a.multiply(a.multiply(remaining, quot.lift(a.dim(), fb)), remaining);
      Vec e = lift_idempotent(a, x);
      remaining = vec_sub(f, remaining, e);
      lifted.push_back(std::move(e));
    }
  }
  if (a.multiply(lifted.back(), lifted.back()) != lifted.back()) throw Error("idempotent lifting: remainder not idempotent");

  // One PIM and simple per block.
  const Rep regular = Rep::regular(algebra_);
  struct Found {
    std::size_t block;
    Vec idempotent;
    Subspace pim;
    Rep pim_rep;
    Rep simple_rep;
  };
  std::vector<Found> found;
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    std::size_t first = 0;
    while (block_of[first] != bi) ++first;
    const Vec& e = lifted[first];
    const Mat re = a.right_mult_of(e);
    std::vector<Vec> cols;
    for (std::size_t i = 0; i < a.dim(); ++i) cols.push_back(re.column(i));
    Subspace pim = Subspace::span(f, a.dim(), cols);
    std::vector<Vec> rad_p;
    for (const auto& r : radical_basis_) {
      const Mat lr = a.left_mult_of(r);
      for (std::size_t j = 0; j < pim.dim(); ++j) rad_p.push_back(lr * pim.vector(j));
    }
    const Subspace rad_pim = Subspace::span(f, a.dim(), rad_p);
    Rep pim_rep = submodule(regular, pim);
    Rep simple_rep = subquotient(regular, pim, rad_pim);
    if (simple_rep.dim() != blocks[bi].size() || !is_absolutely_simple(simple_rep)) {
      throw NotSplit("head of a projective indecomposable is not absolutely simple over " + f.name());
    }
    found.push_back({bi, e, std::move(pim), std::move(pim_rep), std::move(simple_rep)});
  }

  // Labels from witnesses, else S0, S1, ... in discovery order.
  std::vector<std::size_t> order(found.size());
  std::vector<std::string> names(found.size());
  const auto& witnesses = a.witnesses();
  if (witnesses.empty()) {
    for (std::size_t i = 0; i < found.size(); ++i) {
      order[i] = i;
      names[i] = "S" + std::to_string(i);
    }
  } else {
    std::vector<std::pair<std::size_t, std::size_t>> keyed;  // (witness index, found index)
    for (std::size_t i = 0; i < found.size(); ++i) {
      std::size_t w = 0;
      while (w < witnesses.size() && found[i].simple_rep.act(witnesses[w].element).is_zero()) ++w;
      if (w == witnesses.size()) throw LabelError("no witness acts nonzero on a simple module");
      keyed.emplace_back(w, i);
    }
    std::sort(keyed.begin(), keyed.end());
    for (std::size_t i = 0; i + 1 < keyed.size(); ++i) {
      if (keyed[i].first == keyed[i + 1].first) {
        throw LabelError("witness '" + witnesses[keyed[i].first].name + "' labels two simple modules");
      }
    }
    for (std::size_t i = 0; i < keyed.size(); ++i) {
      order[i] = keyed[i].second;
      names[i] = witnesses[keyed[i].first].name;
    }
  }

  std::vector<std::size_t> block_to_label(blocks.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    Found& fd = found[order[i]];
    block_to_label[fd.block] = i;
    labels_.push_back(names[i]);
    idempotents_.push_back(fd.idempotent);
    pim_subspaces_.push_back(fd.pim);
    pims_.push_back(std::move(fd.pim_rep));
    simples_.push_back(std::move(fd.simple_rep));
  }
  all_idempotents_ = std::move(lifted);
  for (auto bi : block_of) idempotent_blocks_.push_back(block_to_label[bi]);
}

std::size_t AlgebraStructure::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  throw UnknownLabel(label);
}

}  // namespace loewy
