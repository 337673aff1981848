#include "zkpcp/linalg.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace zkpcp {

Matrix Matrix::from_rows(const std::vector<std::vector<Fe>>& rows,
                         std::size_t cols) {
  Matrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Fe(1);
  return m;
}

void Matrix::append_row(std::span<const Fe> v) {
  if (v.size() != cols_) {
    throw std::invalid_argument("append_row: width mismatch");
  }
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

void Matrix::append_rows(const Matrix& other) {
  if (other.rows_ == 0) return;
  if (other.cols_ != cols_) {
    throw std::invalid_argument("append_rows: width mismatch");
  }
  data_.insert(data_.end(), other.data_.begin(), other.data_.end());
  rows_ += other.rows_;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Matrix Matrix::select_columns(std::span<const std::size_t> cols) const {
  Matrix out(rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < cols.size(); ++j)
      out.at(r, j) = at(r, cols[j]);
  return out;
}

namespace {

// In-place Gauss-Jordan. Row operations are mirrored onto `track`.
std::vector<std::size_t> reduce(const PrimeField& f, Matrix& m,
                                Matrix* track) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t sel = r;
    while (sel < m.rows() && m.at(sel, c).value() == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != r) {
      for (std::size_t k = 0; k < m.cols(); ++k)
        std::swap(m.at(sel, k), m.at(r, k));
      if (track)
        for (std::size_t k = 0; k < track->cols(); ++k)
          std::swap(track->at(sel, k), track->at(r, k));
    }
    const Fe s = f.inv(m.at(r, c));
    for (std::size_t k = 0; k < m.cols(); ++k) m.at(r, k) = f.mul(m.at(r, k), s);
    if (track)
      for (std::size_t k = 0; k < track->cols(); ++k)
        track->at(r, k) = f.mul(track->at(r, k), s);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      const Fe g = m.at(i, c);
      if (g.value() == 0) continue;
      for (std::size_t k = c; k < m.cols(); ++k)
        m.at(i, k) = f.sub(m.at(i, k), f.mul(g, m.at(r, k)));
      if (track)
        for (std::size_t k = 0; k < track->cols(); ++k)
          track->at(i, k) = f.sub(track->at(i, k), f.mul(g, track->at(r, k)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

RrefResult rref(const PrimeField& f, const Matrix& m) {
  RrefResult out{m, {}};
  out.pivots = reduce(f, out.reduced, nullptr);
  return out;
}

std::size_t rank(const PrimeField& f, const Matrix& m) {
  Matrix copy = m;
  return reduce(f, copy, nullptr).size();
}

Matrix multiply(const PrimeField& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("multiply: inner dimension mismatch");
  }
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Fe x = a.at(i, k);
      if (x.value() == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out.at(i, j) = f.add(out.at(i, j), f.mul(x, b.at(k, j)));
    }
  return out;
}

std::vector<Fe> apply(const PrimeField& f, const Matrix& a,
                      std::span<const Fe> x) {
  if (a.cols() != x.size()) {
    throw std::invalid_argument("apply: dimension mismatch");
  }
  std::vector<Fe> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      out[i] = f.add(out[i], f.mul(a.at(i, k), x[k]));
  return out;
}

Matrix row_space_basis(const PrimeField& f, const Matrix& m) {
  RrefResult r = rref(f, m);
  Matrix out(0, m.cols());
  for (std::size_t i = 0; i < r.rank(); ++i) out.append_row(r.reduced.row(i));
  return out;
}

Matrix kernel_basis(const PrimeField& f, const Matrix& m) {
  RrefResult r = rref(f, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  Matrix basis(0, m.cols());
  std::vector<Fe> v(m.cols());
  for (std::size_t fc = 0; fc < m.cols(); ++fc) {
    if (is_pivot[fc]) continue;
    std::fill(v.begin(), v.end(), Fe(0));
    v[fc] = Fe(1);
    for (std::size_t i = 0; i < r.rank(); ++i)
      v[r.pivots[i]] = f.neg(r.reduced.at(i, fc));
    basis.append_row(v);
  }
  return row_space_basis(f, basis);
}

bool in_row_space(const PrimeField& f, const Matrix& m,
                  std::span<const Fe> v) {
  Matrix ext = m;
  ext.append_row(v);
  return rank(f, ext) == rank(f, m);
}

bool same_row_space(const PrimeField& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) return false;
  const std::size_t ra = rank(f, a);
  if (ra != rank(f, b)) return false;
  Matrix both = a;
  both.append_rows(b);
  return rank(f, both) == ra;
}

Matrix image_dual_basis(const PrimeField& f, const Matrix& m,
                        const Matrix& bperp) {
  if (bperp.cols() != m.cols()) {
    throw std::invalid_argument(
        "image_dual_basis: constraint width does not match map domain");
  }
  // Columns of m * u_basis^T span m U; its dual is the left kernel.
  const Matrix u = kernel_basis(f, bperp);
  const Matrix image = multiply(f, m, u.transpose());
  return kernel_basis(f, image.transpose());
}

Matrix eliminate_columns(const PrimeField& f, const Matrix& m,
                         std::span<const std::size_t> keep) {
  std::vector<bool> kept(m.cols(), false);
  for (std::size_t c : keep) {
    if (c >= m.cols() || kept[c]) {
      throw std::invalid_argument("eliminate_columns: bad column list");
    }
    kept[c] = true;
  }
  std::vector<std::size_t> order;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!kept[c]) order.push_back(c);
  const std::size_t n_elim = order.size();
  order.insert(order.end(), keep.begin(), keep.end());
  RrefResult r = rref(f, m.select_columns(order));
  Matrix out(0, keep.size());
  for (std::size_t i = 0; i < r.rank(); ++i) {
    if (r.pivots[i] < n_elim) continue;
    auto row = r.reduced.row(i);
    out.append_row(row.subspan(n_elim));
  }
  return out;
}

AffineSolver::AffineSolver(const PrimeField& f, const Matrix& a)
    : field_(&f), reduced_(a), transform_(Matrix::identity(a.rows())) {
  pivots_ = reduce(f, reduced_, &transform_);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t p : pivots_) is_pivot[p] = true;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) free_.push_back(c);
}

std::optional<std::vector<Fe>> AffineSolver::solve_with(
    std::span<const Fe> b, std::span<const Fe> free) const {
  if (b.size() != equations()) {
    throw std::invalid_argument("AffineSolver: right-hand side size mismatch");
  }
  const PrimeField& f = *field_;
  const std::vector<Fe> eb = apply(f, transform_, b);
  for (std::size_t i = rank(); i < eb.size(); ++i)
    if (eb[i].value() != 0) return std::nullopt;
  std::vector<Fe> x(unknowns());
  for (std::size_t j = 0; j < free_.size(); ++j) x[free_[j]] = free[j];
  for (std::size_t i = 0; i < rank(); ++i) {
    Fe v = eb[i];
    for (std::size_t c : free_)
      v = f.sub(v, f.mul(reduced_.at(i, c), x[c]));
    x[pivots_[i]] = v;
  }
  return x;
}

std::optional<std::vector<Fe>> AffineSolver::sample(std::span<const Fe> b,
                                                    Rng& rng) const {
  std::vector<Fe> free(free_.size());
  for (auto& v : free) v = field_->sample(rng);
  return solve_with(b, free);
}

std::optional<std::vector<Fe>> AffineSolver::particular(
    std::span<const Fe> b) const {
  std::vector<Fe> free(free_.size());
  return solve_with(b, free);
}

std::vector<std::vector<Fe>> AffineSolver::enumerate(
    std::span<const Fe> b) const {
  std::vector<std::vector<Fe>> out;
  std::vector<Fe> free(free_.size());
  const std::uint64_t p = field_->modulus();
  for (;;) {
    auto x = solve_with(b, free);
    if (!x) return out;
    out.push_back(std::move(*x));
    std::size_t k = 0;
    while (k < free.size() && free[k].value() + 1 == p) free[k++] = Fe(0);
    if (k == free.size()) return out;
    free[k] = Fe(free[k].value() + 1);
  }
}

std::optional<std::vector<Fe>> sample_affine(const PrimeField& f,
                                             const Matrix& a,
                                             std::span<const Fe> b, Rng& rng) {
  return AffineSolver(f, a).sample(b, rng);
}

}  // namespace zkpcp
