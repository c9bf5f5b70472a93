#include "loewy/algebra.hpp"

#include <sstream>

namespace loewy {

Algebra::Algebra(Field field, std::vector<std::string> labels, std::vector<Vec> mult, Vec unit,
                 std::optional<Mat> involution, std::vector<SimpleWitness> witnesses)
    : field_(std::move(field)),
      dim_(labels.size()),
      labels_(std::move(labels)),
      mult_(std::move(mult)),
      unit_(std::move(unit)),
      involution_(std::move(involution)),
      witnesses_(std::move(witnesses)) {
  if (mult_.size() != dim_ * dim_) throw DimensionMismatch("structure constants must have dim^2 entries");
  for (const auto& v : mult_) {
    if (v.size() != dim_) throw DimensionMismatch("structure constant vector has wrong length");
  }
  if (unit_.size() != dim_) throw DimensionMismatch("unit vector has wrong length");
  if (involution_ && (involution_->rows() != dim_ || involution_->cols() != dim_)) {
    throw DimensionMismatch("involution must be dim x dim");
  }
  for (const auto& w : witnesses_) {
    if (w.element.size() != dim_) throw DimensionMismatch("witness '" + w.name + "' has wrong length");
  }
  left_.reserve(dim_);
  right_.reserve(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    Mat l(field_, dim_, dim_), r(field_, dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
      const Vec& bij = this->mult(i, j);
      const Vec& bji = this->mult(j, i);
      for (std::size_t k = 0; k < dim_; ++k) {
        l(k, j) = bij[k];
        r(k, j) = bji[k];
      }
    }
    left_.push_back(std::move(l));
    right_.push_back(std::move(r));
  }
  // Greedy generating set: add basis elements until the subalgebra they
  // generate with the unit is everything.
  std::vector<Mat> acting;
  Subspace generated = spin(field_, dim_, {unit_}, acting);
  for (std::size_t i = 0; i < dim_ && generated.dim() < dim_; ++i) {
    if (generated.contains(basis_element(i))) continue;
    generators_.push_back(i);
    acting.push_back(left_[i]);
    generated = spin(field_, dim_, {unit_}, acting);
  }
}

const Mat& Algebra::involution() const {
  if (!involution_) throw NoInvolution();
  return *involution_;
}

Vec Algebra::multiply(const Vec& a, const Vec& b) const {
  if (a.size() != dim_ || b.size() != dim_) throw DimensionMismatch("multiply: wrong vector length");
  Vec out(dim_, 0);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (b[j] == 0) continue;
      const Elem s = field_.mul(a[i], b[j]);
      const Vec& c = mult(i, j);
      for (std::size_t k = 0; k < dim_; ++k) {
        if (c[k] != 0) out[k] = field_.add(out[k], field_.mul(s, c[k]));
      }
    }
  }
  return out;
}

Vec Algebra::apply_involution(const Vec& a) const { return involution() * a; }

Mat Algebra::left_mult_of(const Vec& a) const {
  Mat out(field_, dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) out.axpy(a[i], left_[i]);
  return out;
}

Mat Algebra::right_mult_of(const Vec& a) const {
  Mat out(field_, dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) out.axpy(a[i], right_[i]);
  return out;
}

Algebra Algebra::with_involution(std::optional<Mat> involution) const {
  return Algebra(field_, labels_, mult_, unit_, std::move(involution), witnesses_);
}

Algebra Algebra::with_witnesses(std::vector<SimpleWitness> witnesses) const {
  return Algebra(field_, labels_, mult_, unit_, involution_, std::move(witnesses));
}

Algebra Algebra::change_basis(const Mat& basis, std::vector<std::string> new_labels) const {
  if (basis.rows() != dim_ || basis.cols() != dim_) throw DimensionMismatch("change_basis: wrong shape");
  Mat inverse;
  if (!invert(basis, inverse)) throw Error("change_basis: matrix is singular");
  std::vector<Vec> columns;
  for (std::size_t j = 0; j < dim_; ++j) columns.push_back(basis.column(j));
  std::vector<Vec> mult;
  mult.reserve(dim_ * dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) mult.push_back(inverse * multiply(columns[i], columns[j]));
  }
  std::optional<Mat> inv;
  if (involution_) inv = inverse * (*involution_) * basis;
  std::vector<SimpleWitness> witnesses;
  for (const auto& w : witnesses_) witnesses.push_back({w.name, inverse * w.element});
  return Algebra(field_, std::move(new_labels), std::move(mult), inverse * unit_, std::move(inv),
                 std::move(witnesses));
}

bool Algebra::operator==(const Algebra& other) const {
  if (!(field_ == other.field_ && labels_ == other.labels_ && mult_ == other.mult_ && unit_ == other.unit_)) {
    return false;
  }
  if (involution_.has_value() != other.involution_.has_value()) return false;
  if (involution_ && *involution_ != *other.involution_) return false;
  if (witnesses_.size() != other.witnesses_.size()) return false;
  for (std::size_t i = 0; i < witnesses_.size(); ++i) {
    if (witnesses_[i].name != other.witnesses_[i].name || witnesses_[i].element != other.witnesses_[i].element) {
      return false;
    }
  }
  return true;
}

AlgebraReport validate_algebra(const Algebra& a) {
  AlgebraReport report;
  const std::size_t n = a.dim();
  const Field& f = a.field();
  auto fail = [&](std::string msg) {
    report.valid = false;
    report.violations.push_back(std::move(msg));
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // (b_i b_j) b_l = b_i (b_j b_l) for all l, compared via right multiplication matrices:
      // R_l applied to b_i b_j versus b_i times the column b_j b_l.
      const Vec& bij = a.mult(i, j);
      for (std::size_t l = 0; l < n; ++l) {
        const Vec lhs = a.right_mult(l) * bij;
        const Vec rhs = a.left_mult(i) * a.mult(j, l);
        if (lhs != rhs) {
          std::ostringstream msg;
          msg << "associativity fails at (" << a.labels()[i] << ", " << a.labels()[j] << ", " << a.labels()[l] << ")";
          fail(msg.str());
        }
      }
    }
  }
  const Mat lu = a.left_mult_of(a.unit());
  const Mat ru = a.right_mult_of(a.unit());
  const Mat id = Mat::identity(f, n);
  if (lu != id || ru != id) fail("unit does not act as a two-sided identity");
  if (a.has_involution()) {
    const Mat& inv = a.involution();
    if (inv * inv != id) fail("involution does not square to the identity");
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Vec lhs = inv * a.mult(i, j);
        const Vec rhs = a.multiply(inv.column(j), inv.column(i));
        if (lhs != rhs) {
          fail("involution is not an anti-automorphism at (" + a.labels()[i] + ", " + a.labels()[j] + ")");
        }
      }
    }
  }
  return report;
}

Algebra extend_scalars(const Algebra& a, const Field& to) {
  const Field& from = a.field();
  if (from.degree() != 1 || from.characteristic() != to.characteristic()) {
    throw Error("scalars can only be extended from the prime field GF(" + std::to_string(to.characteristic()) + ")");
  }
  auto map = [&](const Vec& v) {
    Vec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = to.from_int(v[i]);
    return out;
  };
  std::vector<Vec> mult;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) mult.push_back(map(a.mult(i, j)));
  }
  std::optional<Mat> inv;
  if (a.has_involution()) {
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < a.dim(); ++j) cols.push_back(map(a.involution().column(j)));
    inv = Mat::from_columns(to, a.dim(), cols);
  }
  std::vector<SimpleWitness> witnesses;
  for (const auto& w : a.witnesses()) witnesses.push_back({w.name, map(w.element)});
  return Algebra(to, a.labels(), mult, map(a.unit()), inv, witnesses);
}

bool same_structure(const Algebra& a, const Algebra& b) {
  if (!(a.field() == b.field()) || a.dim() != b.dim() || a.unit() != b.unit()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (a.mult(i, j) != b.mult(i, j)) return false;
    }
  }
  if (a.has_involution() != b.has_involution()) return false;
  return !a.has_involution() || a.involution() == b.involution();
}

}  // namespace loewy
