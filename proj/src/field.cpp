#include "loewy/field.hpp"

#include <sstream>

namespace loewy {

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // p is prime, so a^(p-2) is the inverse.
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of f modulo g over GF(p); g nonzero.
Poly poly_mod(Poly f, const Poly& g, std::uint32_t p) {
  trim(f);
  const std::uint32_t lead_inv = inv_mod(g.back(), p);
  while (f.size() >= g.size()) {
    const std::uint64_t factor = static_cast<std::uint64_t>(f.back()) * lead_inv % p;
    const std::size_t shift = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i) {
      f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + (p - factor) * g[i]) % p);
    }
    trim(f);
  }
  return f;
}

}  // namespace

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly) {
  Poly f = poly;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t k = f.size() - 1;
  // Try every monic divisor of degree 1..k/2.
  for (std::size_t d = 1; 2 * d <= k; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

struct Field::Tables {
  std::vector<std::uint32_t> modulus;
  std::vector<Elem> add;
  std::vector<Elem> mul;
  std::vector<Elem> inv;
};

namespace {
std::shared_ptr<const Field::Tables> empty_tables() {
  static const auto tables = std::make_shared<const Field::Tables>();
  return tables;
}
}  // namespace

Field::Field() : tables_(empty_tables()) {}

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p)) throw Error("field characteristic " + std::to_string(p) + " is not prime");
  if (p >= kMaxPrime) throw Error("characteristic too large: " + std::to_string(p));
  Field f;
  f.p_ = p;
  f.k_ = 1;
  f.q_ = p;
  return f;
}

Field Field::extension(std::uint32_t p, std::vector<std::uint32_t> modulus) {
  if (!is_prime(p)) throw Error("field characteristic " + std::to_string(p) + " is not prime");
  for (auto& c : modulus) c %= p;
  trim(modulus);
  if (modulus.size() <= 2) {
    if (modulus.size() == 2 && modulus[1] == 1) return prime(p);
    if (modulus.empty()) return prime(p);
  }
  if (modulus.back() != 1) throw Error("field modulus must be monic");
  if (!is_irreducible(p, modulus)) throw Error("field modulus is reducible over GF(" + std::to_string(p) + ")");
  const auto k = static_cast<std::uint32_t>(modulus.size() - 1);
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) q *= p;
  if (q > kMaxExtensionOrder) throw Error("extension field too large: order " + std::to_string(q));

  Field f;
  f.p_ = p;
  f.k_ = k;
  f.q_ = static_cast<std::uint32_t>(q);
  auto tables = std::make_shared<Tables>();
  tables->modulus = modulus;
  const std::uint32_t qq = f.q_;
  auto decode = [&](Elem a) {
    Poly c(k, 0);
    for (std::uint32_t i = 0; i < k; ++i) {
      c[i] = a % p;
      a /= p;
    }
    return c;
  };
  auto encode = [&](const Poly& c) {
    Elem a = 0;
    for (std::size_t i = c.size(); i-- > 0;) a = a * p + c[i];
    return a;
  };
  tables->add.resize(static_cast<std::size_t>(qq) * qq);
  tables->mul.resize(static_cast<std::size_t>(qq) * qq);
  tables->inv.assign(qq, 0);
  for (Elem a = 0; a < qq; ++a) {
    const Poly ca = decode(a);
    for (Elem b = 0; b < qq; ++b) {
      const Poly cb = decode(b);
      Poly sum(k), prod(2 * k, 0);
      for (std::uint32_t i = 0; i < k; ++i) sum[i] = (ca[i] + cb[i]) % p;
      for (std::uint32_t i = 0; i < k; ++i) {
        for (std::uint32_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
      }
      Poly r = poly_mod(prod, modulus, p);
      r.resize(k, 0);
      tables->add[a * qq + b] = encode(sum);
      tables->mul[a * qq + b] = encode(r);
    }
  }
  for (Elem a = 1; a < qq; ++a) {
    for (Elem b = 1; b < qq; ++b) {
      if (tables->mul[a * qq + b] == 1) {
        tables->inv[a] = b;
        break;
      }
    }
  }
  f.tables_ = std::move(tables);
  return f;
}

const std::vector<std::uint32_t>& Field::modulus() const { return tables_->modulus; }

Elem Field::add(Elem a, Elem b) const {
  if (k_ == 1) {
    const Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  return tables_->add[a * q_ + b];
}

Elem Field::neg(Elem a) const {
  if (k_ == 1) return a == 0 ? 0 : p_ - a;
  // Negate each coefficient.
  Elem result = 0, scale = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    const Elem c = a % p_;
    a /= p_;
    result += (c == 0 ? 0 : p_ - c) * scale;
    scale *= p_;
  }
  return result;
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const {
  if (k_ == 1) return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
  return tables_->mul[a * q_ + b];
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw ZeroInverse();
  if (k_ == 1) return inv_mod(a, p_);
  return tables_->inv[a];
}

Elem Field::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

Elem Field::from_coefficients(const std::vector<std::int64_t>& coeffs) const {
  if (coeffs.size() > k_) throw Error("too many coefficients for " + name());
  Elem a = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) a = a * p_ + from_int(coeffs[i]);
  return a;
}

std::vector<std::uint32_t> Field::coefficients(Elem a) const {
  std::vector<std::uint32_t> c(k_, 0);
  for (std::uint32_t i = 0; i < k_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

std::vector<Elem> Field::elements() const {
  std::vector<Elem> all(q_);
  for (Elem a = 0; a < q_; ++a) all[a] = a;
  return all;
}

std::string Field::name() const {
  if (k_ == 1) return "GF(" + std::to_string(p_) + ")";
  return "GF(" + std::to_string(p_) + "^" + std::to_string(k_) + ")";
}

std::string Field::to_string(Elem a) const {
  if (k_ == 1) return std::to_string(a);
  std::ostringstream out;
  const auto c = coefficients(a);
  bool first = true;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!first) out << "+";
    first = false;
    if (i == 0 || c[i] != 1) out << c[i];
    if (i >= 1) out << "x";
    if (i >= 2) out << "^" << i;
  }
  if (first) out << "0";
  return out.str();
}

bool Field::operator==(const Field& other) const {
  return p_ == other.p_ && k_ == other.k_ && modulus() == other.modulus();
}

}  // namespace loewy
