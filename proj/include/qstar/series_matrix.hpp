#pragma once

// Dense matrices over R[[hbar]], stored as one real matrix per power of hbar.

#include <Eigen/Dense>

#include <vector>

#include "qstar/hseries.hpp"

namespace qstar {

class SeriesMatrix {
 public:
  SeriesMatrix() = default;
  /// Zero matrix.
  SeriesMatrix(Eigen::Index rows, Eigen::Index cols, int order);
  /// Constant (hbar^0 only) matrix.
  SeriesMatrix(const Eigen::MatrixXd& constant, int order);

  static SeriesMatrix identity(Eigen::Index n, int order);

  Eigen::Index rows() const noexcept { return rows_; }
  Eigen::Index cols() const noexcept { return cols_; }
  int order() const noexcept { return static_cast<int>(slices_.size()) - 1; }

  const Eigen::MatrixXd& slice(int k) const { return slices_.at(static_cast<std::size_t>(k)); }
  Eigen::MatrixXd& slice(int k) { return slices_.at(static_cast<std::size_t>(k)); }
  const Eigen::MatrixXd& constant_term() const { return slices_.front(); }

  HSeries entry(Eigen::Index i, Eigen::Index j) const;
  void set_entry(Eigen::Index i, Eigen::Index j, const HSeries& value);
  void add_to_entry(Eigen::Index i, Eigen::Index j, const HSeries& value);

  SeriesMatrix truncated(int order) const;
  SeriesMatrix transpose() const;
  /// Order-by-order inverse; the constant term must be invertible.
  SeriesMatrix inverse() const;

  /// Max-norm over entries and coefficients.
  double max_abs() const noexcept;

  SeriesMatrix& operator+=(const SeriesMatrix& rhs);
  SeriesMatrix& operator-=(const SeriesMatrix& rhs);
  friend SeriesMatrix operator+(SeriesMatrix a, const SeriesMatrix& b) { return a += b; }
  friend SeriesMatrix operator-(SeriesMatrix a, const SeriesMatrix& b) { return a -= b; }
  friend SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b);
  friend SeriesMatrix operator*(const HSeries& s, const SeriesMatrix& m);
  friend SeriesMatrix operator*(double s, SeriesMatrix m);

 private:
  Eigen::Index rows_ = 0;
  Eigen::Index cols_ = 0;
  std::vector<Eigen::MatrixXd> slices_;
};

SeriesMatrix kron(const SeriesMatrix& a, const SeriesMatrix& b);
/// Block-diagonal sum in the given order.
SeriesMatrix direct_sum(const std::vector<SeriesMatrix>& blocks);
/// Diagonal matrix from series entries.
SeriesMatrix diagonal(const std::vector<HSeries>& entries);

double max_abs_diff(const SeriesMatrix& a, const SeriesMatrix& b);

/// Places `op`, acting on the tensor factors listed in `legs` (in that order),
/// into the product space of `dims` (row-major, first factor most significant).
SeriesMatrix embed_legs(const SeriesMatrix& op, const std::vector<int>& legs,
                        const std::vector<int>& dims);

/// Same action as embed_legs(op, legs, dims) * v for a column vector `v`,
/// without forming the full operator.
SeriesMatrix apply_legs(const SeriesMatrix& op, const std::vector<int>& legs,
                        const std::vector<int>& dims, const SeriesMatrix& v);

}  // namespace qstar
