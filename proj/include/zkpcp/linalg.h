#ifndef ZKPCP_LINALG_H_
#define ZKPCP_LINALG_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "zkpcp/field.h"

namespace zkpcp {

// Dense row-major matrix over a prime field. Row and column labels, when
// needed, are carried by the owning structure.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix from_rows(const std::vector<std::vector<Fe>>& rows,
                          std::size_t cols);
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  Fe& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Fe at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<Fe> row(std::size_t r) {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<const Fe> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::vector<Fe> row_vector(std::size_t r) const {
    auto s = row(r);
    return {s.begin(), s.end()};
  }

  void append_row(std::span<const Fe> v);
  // Rows of `other` appended below; column counts must agree.
  void append_rows(const Matrix& other);
  Matrix transpose() const;
  Matrix select_columns(std::span<const std::size_t> cols) const;

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Fe> data_;
};

struct RrefResult {
  Matrix reduced;                  // same shape as the input
  std::vector<std::size_t> pivots;  // pivot column of reduced row i
  std::size_t rank() const { return pivots.size(); }
};

// Reduced row echelon form. Zero rows sink to the bottom.
RrefResult rref(const PrimeField& f, const Matrix& m);
std::size_t rank(const PrimeField& f, const Matrix& m);

Matrix multiply(const PrimeField& f, const Matrix& a, const Matrix& b);
std::vector<Fe> apply(const PrimeField& f, const Matrix& a,
                      std::span<const Fe> x);

// Nonzero rows of the RREF.
Matrix row_space_basis(const PrimeField& f, const Matrix& m);
// Rows spanning {x : m x = 0}, in reduced echelon form.
Matrix kernel_basis(const PrimeField& f, const Matrix& m);
bool in_row_space(const PrimeField& f, const Matrix& m,
                  std::span<const Fe> v);
bool same_row_space(const PrimeField& f, const Matrix& a, const Matrix& b);

// With U = ker(bperp), returns rows spanning (m U)^perp.
// Throws std::invalid_argument on a column mismatch.
Matrix image_dual_basis(const PrimeField& f, const Matrix& m,
                        const Matrix& bperp);

// Rows spanning {y on kept columns : (y, 0) in rowspace(m)}, which is the
// dual of the projection of ker(m) onto the kept columns. Columns of the
// result follow the order of `keep`.
Matrix eliminate_columns(const PrimeField& f, const Matrix& m,
                         std::span<const std::size_t> keep);

// Reusable solver for A x = b with A fixed. Tracks the row operations so
// the same elimination can be replayed on any right-hand side.
class AffineSolver {
 public:
  AffineSolver(const PrimeField& f, const Matrix& a);

  std::size_t unknowns() const { return reduced_.cols(); }
  std::size_t equations() const { return reduced_.rows(); }
  std::size_t rank() const { return pivots_.size(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const std::vector<std::size_t>& free_columns() const { return free_; }
  const Matrix& reduced() const { return reduced_; }
  // E with E A = reduced().
  const Matrix& transform() const { return transform_; }

  // Uniform solution, or nullopt if the system is inconsistent.
  std::optional<std::vector<Fe>> sample(std::span<const Fe> b,
                                        Rng& rng) const;
  // Every solution; intended for small systems only.
  std::vector<std::vector<Fe>> enumerate(std::span<const Fe> b) const;
  // Solution with all free variables set to zero.
  std::optional<std::vector<Fe>> particular(std::span<const Fe> b) const;

 private:
  std::optional<std::vector<Fe>> solve_with(std::span<const Fe> b,
                                            std::span<const Fe> free) const;

  const PrimeField* field_;
  Matrix reduced_;
  Matrix transform_;
  std::vector<std::size_t> pivots_;
  std::vector<std::size_t> free_;
};

std::optional<std::vector<Fe>> sample_affine(const PrimeField& f,
                                             const Matrix& a,
                                             std::span<const Fe> b, Rng& rng);

}  // namespace zkpcp

#endif  // ZKPCP_LINALG_H_
