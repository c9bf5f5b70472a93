#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "loewy/error.hpp"

namespace loewy {

/// Field element. For GF(p) it is the residue itself; for GF(p^k) it encodes
/// the polynomial representative c0 + c1 x + ... as c0 + c1 p + c2 p^2 + ...
using Elem = std::uint32_t;

/// A finite field GF(p^k), either prime or given by an irreducible modulus.
///
/// Fields are cheap to copy (tables are shared) and compare by (p, modulus).
/// Extension fields keep full addition/multiplication tables, so the order is
/// limited to kMaxExtensionOrder.
class Field {
 public:
  static constexpr std::uint32_t kMaxPrime = 1u << 15;
  static constexpr std::uint32_t kMaxExtensionOrder = 1024;

  /// GF(2); a default so that containers of matrices can be default-built.
  Field();

  static Field prime(std::uint32_t p);

  /// GF(p^k) with the monic modulus given low-to-high, k+1 coefficients.
  static Field extension(std::uint32_t p, std::vector<std::uint32_t> modulus);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return k_; }
  std::uint32_t order() const { return q_; }
  /// Empty for prime fields.
  const std::vector<std::uint32_t>& modulus() const;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  /// Throws ZeroInverse for a == 0.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  /// Image of an integer in the prime subfield.
  Elem from_int(std::int64_t v) const;
  /// Element with the given polynomial coefficients (length <= k).
  Elem from_coefficients(const std::vector<std::int64_t>& coeffs) const;
  std::vector<std::uint32_t> coefficients(Elem a) const;

  /// All q elements in encoding order.
  std::vector<Elem> elements() const;

  std::string name() const;
  std::string to_string(Elem a) const;

  bool operator==(const Field& other) const;
  bool operator!=(const Field& other) const { return !(*this == other); }

 struct Tables;

 private:

  std::uint32_t p_ = 2;
  std::uint32_t k_ = 1;
  std::uint32_t q_ = 2;
  std::shared_ptr<const Tables> tables_;
};

bool is_prime(std::uint32_t n);

/// Irreducibility of a monic polynomial over GF(p), coefficients low-to-high.
bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly);

}  // namespace loewy
