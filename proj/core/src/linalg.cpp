#include "shlin/linalg.hpp"

#include <algorithm>

#include "shlin/error.hpp"

namespace shlin {

namespace {

void require_same_field(const Field& a, const Field& b) {
  if (&a != &b && !a.same_as(b)) throw Error(ErrorCode::FieldMismatch, "operands over different fields");
}

// Stacks vs as rows; all must share field and dimension.
FqMatrix stack(std::span<const FqVector> vs) {
  const FqVector& first = vs.front();
  for (const auto& v : vs) {
    require_same_field(first.field(), v.field());
    if (v.dim() != first.dim()) throw Error(ErrorCode::DimensionMismatch, "vectors of different dimension");
  }
  return FqMatrix::from_rows(first.field_ptr(), first.dim(), vs);
}

}  // namespace

FqVector::FqVector(FieldPtr field, std::size_t dim) : field_(std::move(field)), coords_(dim, 0) {}

FqVector::FqVector(FieldPtr field, std::vector<Elem> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
  for (Elem c : coords_) {
    if (!field_->contains(c)) throw Error(ErrorCode::InvalidArgument, "coordinate outside the field");
  }
}

FqVector FqVector::unit(FieldPtr field, std::size_t dim, std::size_t i) {
  FqVector v(std::move(field), dim);
  v.coords_.at(i) = 1;
  return v;
}

FqVector FqVector::decode(FieldPtr field, std::size_t dim, std::uint64_t code) {
  FqVector v(std::move(field), dim);
  const auto q = static_cast<std::uint64_t>(v.field_->q());
  for (std::size_t i = dim; i-- > 0;) {
    v.coords_[i] = static_cast<Elem>(code % q);
    code /= q;
  }
  return v;
}

void FqVector::set(std::size_t i, Elem value) {
  if (!field_->contains(value)) throw Error(ErrorCode::InvalidArgument, "coordinate outside the field");
  coords_.at(i) = value;
}

bool FqVector::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](Elem c) { return c == 0; });
}

std::size_t FqVector::weight() const noexcept {
  return static_cast<std::size_t>(std::count_if(coords_.begin(), coords_.end(), [](Elem c) { return c != 0; }));
}

std::uint64_t FqVector::encode() const {
  const auto q = static_cast<std::uint64_t>(field_->q());
  std::uint64_t code = 0;
  constexpr std::uint64_t limit = std::uint64_t{1} << 63;
  for (Elem c : coords_) {
    if (code > (limit - c) / q) throw Error(ErrorCode::SpaceTooLarge, "vector encoding exceeds 63 bits");
    code = code * q + c;
  }
  return code;
}

void FqVector::check_compatible(const FqVector& other) const {
  require_same_field(*field_, *other.field_);
  if (dim() != other.dim()) throw Error(ErrorCode::DimensionMismatch, "vectors of different dimension");
}

FqVector& FqVector::operator+=(const FqVector& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = field_->add(coords_[i], other.coords_[i]);
  return *this;
}

FqVector& FqVector::operator-=(const FqVector& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = field_->sub(coords_[i], other.coords_[i]);
  return *this;
}

FqVector& FqVector::scale(Elem alpha) noexcept {
  for (auto& c : coords_) c = field_->mul(alpha, c);
  return *this;
}

FqVector& FqVector::add_scaled(Elem alpha, const FqVector& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    coords_[i] = field_->add(coords_[i], field_->mul(alpha, other.coords_[i]));
  }
  return *this;
}

FqMatrix::FqMatrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FqMatrix::FqMatrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) throw Error(ErrorCode::DimensionMismatch, "entry count does not match shape");
  for (Elem c : data_) {
    if (!field_->contains(c)) throw Error(ErrorCode::InvalidArgument, "entry outside the field");
  }
}

FqMatrix FqMatrix::identity(FieldPtr field, std::size_t n) {
  FqMatrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

FqMatrix FqMatrix::from_rows(FieldPtr field, std::size_t cols, std::span<const FqVector> rows) {
  FqMatrix m(std::move(field), rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require_same_field(*m.field_, rows[i].field());
    if (rows[i].dim() != cols) throw Error(ErrorCode::DimensionMismatch, "row length mismatch");
    std::copy(rows[i].coords().begin(), rows[i].coords().end(), m.data_.begin() + static_cast<std::ptrdiff_t>(i * cols));
  }
  return m;
}

FqMatrix FqMatrix::from_cols(FieldPtr field, std::size_t rows, std::span<const FqVector> cols) {
  FqMatrix m(std::move(field), rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    require_same_field(*m.field_, cols[j].field());
    if (cols[j].dim() != rows) throw Error(ErrorCode::DimensionMismatch, "column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

FqVector FqMatrix::row(std::size_t i) const {
  auto r = row_span(i);
  return FqVector(field_, std::vector<Elem>(r.begin(), r.end()));
}

FqVector FqMatrix::col(std::size_t j) const {
  FqVector v(field_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.set(i, at(i, j));
  return v;
}

std::vector<FqVector> FqMatrix::row_vectors() const {
  std::vector<FqVector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

std::vector<FqVector> FqMatrix::col_vectors() const {
  std::vector<FqVector> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(col(j));
  return out;
}

FqMatrix FqMatrix::transpose() const {
  FqMatrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  }
  return t;
}

FqMatrix FqMatrix::operator*(const FqMatrix& rhs) const {
  require_same_field(*field_, *rhs.field_);
  if (cols_ != rhs.rows_) throw Error(ErrorCode::DimensionMismatch, "inner dimensions differ");
  FqMatrix out(field_, rows_, rhs.cols_);
  const Field& f = *field_;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Elem a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) = f.add(out.at(i, j), f.mul(a, rhs.at(k, j)));
    }
  }
  return out;
}

bool FqMatrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](Elem c) { return c == 0; });
}

Rref rref(const FqMatrix& m) {
  FqMatrix a = m;
  const Field& f = a.field();
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a.at(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a.at(piv, j), a.at(r, j));
    }
    const Elem scale = f.inv(a.at(r, c));
    for (std::size_t j = c; j < cols; ++j) a.at(r, j) = f.mul(scale, a.at(r, j));
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const Elem factor = a.at(i, c);
      if (factor == 0) continue;
      for (std::size_t j = c; j < cols; ++j) a.at(i, j) = f.sub(a.at(i, j), f.mul(factor, a.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return Rref{std::move(a), r, std::move(pivots)};
}

std::size_t rank(const FqMatrix& m) {
  if (m.field().q() == 2) {
    std::vector<PackedF2Vector> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(PackedF2Vector::pack(m.row(i)));
    return rank_packed(std::move(rows));
  }
  return rref(m).rank;
}

std::vector<FqVector> kernel_basis(const FqMatrix& m) {
  const Rref red = rref(m);
  const Field& f = m.field();
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : red.pivot_cols) is_pivot[c] = true;

  std::vector<FqVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    FqVector v(m.field_ptr(), cols);
    v.set(free, 1);
    for (std::size_t i = 0; i < red.rank; ++i) {
      v.set(red.pivot_cols[i], f.neg(red.reduced.at(i, free)));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

bool is_linearly_independent(std::span<const FqVector> vs) {
  if (vs.empty()) return true;
  return rank(stack(vs)) == vs.size();
}

bool in_span(const FqVector& v, std::span<const FqVector> vs) {
  if (vs.empty()) return v.is_zero();
  std::vector<FqVector> all(vs.begin(), vs.end());
  const std::size_t before = rank(stack(all));
  all.push_back(v);
  return rank(stack(all)) == before;
}

std::vector<std::size_t> extract_basis_indices(std::span<const FqVector> vs) {
  std::vector<std::size_t> kept;
  if (vs.empty()) return kept;
  (void)stack(vs);  // validates field and dimension

  // Incremental elimination: keep reduced copies of accepted vectors with
  // their pivot positions.
  const Field& f = vs.front().field();
  std::vector<FqVector> reduced;
  std::vector<std::size_t> pivots;
  for (std::size_t idx = 0; idx < vs.size(); ++idx) {
    FqVector w = vs[idx];
    for (std::size_t b = 0; b < reduced.size(); ++b) {
      const Elem c = w[pivots[b]];
      if (c != 0) w.add_scaled(f.neg(c), reduced[b]);
    }
    std::size_t piv = 0;
    while (piv < w.dim() && w[piv] == 0) ++piv;
    if (piv == w.dim()) continue;
    w.scale(f.inv(w[piv]));
    for (std::size_t b = 0; b < reduced.size(); ++b) {
      const Elem c = reduced[b][piv];
      if (c != 0) reduced[b].add_scaled(f.neg(c), w);
    }
    reduced.push_back(std::move(w));
    pivots.push_back(piv);
    kept.push_back(idx);
  }
  return kept;
}

std::vector<FqVector> extract_basis(std::span<const FqVector> vs) {
  std::vector<FqVector> out;
  for (std::size_t i : extract_basis_indices(vs)) out.push_back(vs[i]);
  return out;
}

}  // namespace shlin
