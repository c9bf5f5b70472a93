#include "loewy/linalg.hpp"

#include <map>

namespace loewy {

namespace {

void check_same_field(const Field& a, const Field& b) {
  if (a != b) throw DimensionMismatch("operands over different fields: " + a.name() + " vs " + b.name());
}

// row_dst -= factor * row_src, restricted to columns [from, cols).
void row_sub(const Field& f, std::span<Elem> dst, std::span<const Elem> src, Elem factor, std::size_t from) {
  if (factor == 0) return;
  if (f.degree() == 1) {
    const std::uint64_t p = f.characteristic();
    const std::uint64_t nf = p - factor;
    for (std::size_t c = from; c < dst.size(); ++c) {
      if (src[c] != 0) dst[c] = static_cast<Elem>((dst[c] + nf * src[c]) % p);
    }
    return;
  }
  for (std::size_t c = from; c < dst.size(); ++c) {
    if (src[c] != 0) dst[c] = f.sub(dst[c], f.mul(factor, src[c]));
  }
}

void row_scale(const Field& f, std::span<Elem> r, Elem s, std::size_t from) {
  for (std::size_t c = from; c < r.size(); ++c) r[c] = f.mul(r[c], s);
}

// Echelon basis kept as pivot -> row (leading 1, zeros before the pivot).
class EchelonBuilder {
 public:
  explicit EchelonBuilder(Field f) : field_(std::move(f)) {}

  // Returns true if v was independent of the rows so far.
  bool insert(Vec v) {
    for (const auto& [piv, row] : rows_) {
      if (v[piv] != 0) row_sub(field_, v, row, v[piv], piv);
    }
    std::size_t lead = 0;
    while (lead < v.size() && v[lead] == 0) ++lead;
    if (lead == v.size()) return false;
    row_scale(field_, v, field_.inv(v[lead]), lead);
    rows_.emplace(lead, std::move(v));
    return true;
  }

  std::vector<Vec> rows() const {
    std::vector<Vec> out;
    out.reserve(rows_.size());
    for (const auto& [piv, row] : rows_) out.push_back(row);
    return out;
  }

  std::size_t size() const { return rows_.size(); }

 private:
  Field field_;
  std::map<std::size_t, Vec> rows_;
};

}  // namespace

Mat::Mat(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Mat Mat::identity(Field field, std::size_t n) {
  Mat m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(Field field, std::size_t cols, const std::vector<Vec>& rows) {
  Mat m(std::move(field), rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("row length mismatch");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

Mat Mat::from_columns(Field field, std::size_t rows, const std::vector<Vec>& cols) {
  Mat m(std::move(field), rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw DimensionMismatch("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vec Mat::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Mat Mat::operator*(const Mat& rhs) const {
  check_same_field(field_, rhs.field_);
  if (cols_ != rhs.rows_) throw DimensionMismatch("matrix product shape mismatch");
  Mat out(field_, rows_, rhs.cols_);
  if (field_.degree() == 1) {
    const std::uint64_t p = field_.characteristic();
    std::vector<std::uint64_t> acc(rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t k = 0; k < cols_; ++k) {
        const std::uint64_t a = (*this)(i, k);
        if (a == 0) continue;
        const auto r = rhs.row(k);
        for (std::size_t j = 0; j < rhs.cols_; ++j) acc[j] = (acc[j] + a * r[j]) % p;
      }
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) = static_cast<Elem>(acc[j]);
    }
    return out;
  }
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Elem a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        out(i, j) = field_.add(out(i, j), field_.mul(a, rhs(k, j)));
      }
    }
  }
  return out;
}

Vec Mat::operator*(const Vec& v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix-vector shape mismatch");
  Vec out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    Elem acc = 0;
    for (std::size_t k = 0; k < cols_; ++k) {
      const Elem a = (*this)(i, k);
      if (a != 0 && v[k] != 0) acc = field_.add(acc, field_.mul(a, v[k]));
    }
    out[i] = acc;
  }
  return out;
}

Mat Mat::operator+(const Mat& rhs) const {
  Mat out = *this;
  out.axpy(1, rhs);
  return out;
}

Mat Mat::operator-(const Mat& rhs) const {
  Mat out = *this;
  out.axpy(field_.neg(1), rhs);
  return out;
}

void Mat::axpy(Elem s, const Mat& other) {
  check_same_field(field_, other.field_);
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  if (s == 0) return;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (other.data_[i] != 0) data_[i] = field_.add(data_[i], field_.mul(s, other.data_[i]));
  }
}

Mat Mat::scaled(Elem s) const {
  Mat out = *this;
  for (auto& x : out.data_) x = field_.mul(x, s);
  return out;
}

Mat Mat::transpose() const {
  Mat out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

bool Mat::is_zero() const {
  for (Elem x : data_) {
    if (x != 0) return false;
  }
  return true;
}

bool Mat::operator==(const Mat& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && field_ == other.field_ && data_ == other.data_;
}

Rref rref(Mat m) {
  const Field& f = m.field();
  Rref out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row) {
      for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    }
    row_scale(f, m.row(row), f.inv(m(row, col)), col);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r != row && m(r, col) != 0) row_sub(f, m.row(r), m.row(row), m(r, col), col);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rank = row;
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Mat& m) { return rref(m).rank; }

bool invert(const Mat& m, Mat& inverse) {
  if (m.rows() != m.cols()) return false;
  const std::size_t n = m.rows();
  Mat aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  Rref r = rref(std::move(aug));
  if (r.rank < n || r.pivots[n - 1] != n - 1) return false;
  inverse = Mat(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inverse(i, j) = r.reduced(i, n + j);
  }
  return true;
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("solve: right-hand side length mismatch");
  const std::size_t n = m.cols();
  Mat aug(m.field(), m.rows(), n + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n) = b[i];
  }
  Rref r = rref(std::move(aug));
  Vec x(n, 0);
  for (std::size_t i = 0; i < r.rank; ++i) {
    if (r.pivots[i] == n) return std::nullopt;
    x[r.pivots[i]] = r.reduced(i, n);
  }
  return x;
}

Subspace::Subspace(Field field, std::size_t ambient) : ambient_(ambient), basis_(std::move(field), 0, ambient) {}

Subspace Subspace::span(Field field, std::size_t ambient, const std::vector<Vec>& vectors) {
  return row_space(Mat::from_rows(std::move(field), ambient, vectors));
}

Subspace Subspace::full(Field field, std::size_t ambient) { return row_space(Mat::identity(std::move(field), ambient)); }

Subspace Subspace::row_space(const Mat& m) {
  Rref r = rref(m);
  Subspace s(m.field(), m.cols());
  s.basis_ = Mat(m.field(), r.rank, m.cols());
  for (std::size_t i = 0; i < r.rank; ++i) {
    std::copy(r.reduced.row(i).begin(), r.reduced.row(i).end(), s.basis_.row(i).begin());
  }
  s.pivots_ = std::move(r.pivots);
  return s;
}

std::vector<Vec> Subspace::vectors() const {
  std::vector<Vec> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(vector(i));
  return out;
}

Vec Subspace::reduce(Vec v) const {
  if (v.size() != ambient_) throw DimensionMismatch("vector length does not match ambient dimension");
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Elem c = v[pivots_[i]];
    if (c != 0) row_sub(field(), v, basis_.row(i), c, 0);
  }
  return v;
}

bool Subspace::contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("ambient mismatch");
  for (std::size_t i = 0; i < other.dim(); ++i) {
    if (!contains(other.vector(i))) return false;
  }
  return true;
}

Vec Subspace::coordinates(const Vec& v) const {
  Vec c(dim());
  for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Mat Subspace::reduction_matrix() const {
  std::vector<Vec> cols;
  cols.reserve(ambient_);
  for (std::size_t j = 0; j < ambient_; ++j) cols.push_back(reduce(unit_vector(ambient_, j)));
  return Mat::from_columns(field(), ambient_, cols);
}

bool Subspace::operator==(const Subspace& other) const {
  return ambient_ == other.ambient_ && basis_ == other.basis_;
}

Subspace nullspace(const Mat& m) {
  Rref r = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = m.field().neg(r.reduced(i, free));
    basis.push_back(std::move(v));
  }
  return Subspace::span(m.field(), n, basis);
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient()) throw DimensionMismatch("subspace_sum: ambient mismatch");
  auto rows = u.vectors();
  for (auto& w : v.vectors()) rows.push_back(std::move(w));
  return Subspace::span(u.field(), u.ambient(), rows);
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient()) throw DimensionMismatch("subspace_intersect: ambient mismatch");
  if (u.is_zero() || v.is_zero()) return Subspace(u.field(), u.ambient());
  // Zassenhaus: rows [u u; v 0]; the rows with zero left half give u ∩ v.
  const std::size_t n = u.ambient();
  Mat z(u.field(), u.dim() + v.dim(), 2 * n);
  for (std::size_t i = 0; i < u.dim(); ++i) {
    for (std::size_t j = 0; j < n; ++j) z(i, j) = z(i, n + j) = u.basis()(i, j);
  }
  for (std::size_t i = 0; i < v.dim(); ++i) {
    for (std::size_t j = 0; j < n; ++j) z(u.dim() + i, j) = v.basis()(i, j);
  }
  Rref r = rref(std::move(z));
  std::vector<Vec> out;
  for (std::size_t i = 0; i < r.rank; ++i) {
    if (r.pivots[i] < n) continue;
    Vec w(n);
    for (std::size_t j = 0; j < n; ++j) w[j] = r.reduced(i, n + j);
    out.push_back(std::move(w));
  }
  return Subspace::span(u.field(), n, out);
}

Subspace spin(Field field, std::size_t dim, const std::vector<Vec>& vectors, std::span<const Mat> actions) {
  for (const auto& a : actions) {
    if (a.rows() != dim || a.cols() != dim) throw DimensionMismatch("spin: action size mismatch");
  }
  EchelonBuilder builder(field);
  std::vector<Vec> queue;
  for (const auto& v : vectors) {
    if (v.size() != dim) throw DimensionMismatch("spin: vector length mismatch");
    if (builder.insert(v)) queue.push_back(v);
  }
  for (std::size_t head = 0; head < queue.size() && builder.size() < dim; ++head) {
    for (const auto& a : actions) {
      Vec w = a * queue[head];
      if (builder.insert(w)) queue.push_back(std::move(w));
    }
  }
  return Subspace::span(std::move(field), dim, builder.rows());
}

Subspace commutant(std::span<const Mat> generators) {
  if (generators.empty()) throw DimensionMismatch("commutant: no generators");
  const std::size_t d = generators.front().rows();
  const Field& f = generators.front().field();
  Mat system(f, generators.size() * d * d, d * d);
  std::size_t row = 0;
  for (const auto& g : generators) {
    if (g.rows() != d || g.cols() != d) throw DimensionMismatch("commutant: generator size mismatch");
    // (Xg - gX)_{ij} = sum_b X_{ib} g_{bj} - sum_a g_{ia} X_{aj}
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j, ++row) {
        for (std::size_t b = 0; b < d; ++b) system(row, i * d + b) = f.add(system(row, i * d + b), g(b, j));
        for (std::size_t a = 0; a < d; ++a) system(row, a * d + j) = f.sub(system(row, a * d + j), g(i, a));
      }
    }
  }
  return nullspace(system);
}

Vec flatten(const Mat& m) { return m.data(); }

Mat unflatten(Field field, std::size_t rows, std::size_t cols, const Vec& v) {
  if (v.size() != rows * cols) throw DimensionMismatch("unflatten: size mismatch");
  Mat m(std::move(field), rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = v[i * cols + j];
  }
  return m;
}

Vec vec_add(const Field& f, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector length mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
  return out;
}

Vec vec_sub(const Field& f, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector length mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.sub(a[i], b[i]);
  return out;
}

Vec vec_scale(const Field& f, Elem s, const Vec& a) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(s, a[i]);
  return out;
}

bool vec_is_zero(const Vec& v) {
  for (Elem x : v) {
    if (x != 0) return false;
  }
  return true;
}

Vec unit_vector(std::size_t n, std::size_t i) {
  Vec v(n, 0);
  v[i] = 1;
  return v;
}

}  // namespace loewy
