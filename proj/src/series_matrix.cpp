#include "qstar/series_matrix.hpp"

#include <algorithm>
#include <numeric>

namespace qstar {

SeriesMatrix::SeriesMatrix(Eigen::Index rows, Eigen::Index cols, int order)
    : rows_(rows), cols_(cols),
      slices_(static_cast<std::size_t>(order) + 1, Eigen::MatrixXd::Zero(rows, cols)) {
  if (order < 0) throw Error(ErrorKind::InvalidArgument, "negative truncation order");
}

SeriesMatrix::SeriesMatrix(const Eigen::MatrixXd& constant, int order)
    : SeriesMatrix(constant.rows(), constant.cols(), order) {
  slices_.front() = constant;
}

SeriesMatrix SeriesMatrix::identity(Eigen::Index n, int order) {
  return SeriesMatrix(Eigen::MatrixXd::Identity(n, n), order);
}

HSeries SeriesMatrix::entry(Eigen::Index i, Eigen::Index j) const {
  HSeries s(order());
  for (int k = 0; k <= order(); ++k) s[k] = slices_[k](i, j);
  return s;
}

void SeriesMatrix::set_entry(Eigen::Index i, Eigen::Index j, const HSeries& value) {
  for (int k = 0; k <= order(); ++k) slices_[k](i, j) = k <= value.order() ? value[k] : 0.0;
}

void SeriesMatrix::add_to_entry(Eigen::Index i, Eigen::Index j, const HSeries& value) {
  for (int k = 0; k <= std::min(order(), value.order()); ++k) slices_[k](i, j) += value[k];
}

SeriesMatrix SeriesMatrix::truncated(int order) const {
  SeriesMatrix out(rows_, cols_, std::min(order, this->order()));
  for (int k = 0; k <= out.order(); ++k) out.slices_[k] = slices_[k];
  return out;
}

SeriesMatrix SeriesMatrix::transpose() const {
  SeriesMatrix out(cols_, rows_, order());
  for (int k = 0; k <= order(); ++k) out.slices_[k] = slices_[k].transpose();
  return out;
}

SeriesMatrix SeriesMatrix::inverse() const {
  if (rows_ != cols_) throw Error(ErrorKind::InvalidArgument, "inverse of a non-square matrix");
  Eigen::FullPivLU<Eigen::MatrixXd> lu(slices_.front());
  if (!lu.isInvertible())
    throw Error(ErrorKind::NonUnitSeries, "constant term of the matrix is singular");
  const Eigen::MatrixXd inv0 = lu.inverse();
  SeriesMatrix out(rows_, cols_, order());
  out.slices_[0] = inv0;
  for (int k = 1; k <= order(); ++k) {
    Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(rows_, cols_);
    for (int i = 1; i <= k; ++i) acc.noalias() += slices_[i] * out.slices_[k - i];
    out.slices_[k] = -inv0 * acc;
  }
  return out;
}

double SeriesMatrix::max_abs() const noexcept {
  double m = 0.0;
  for (const auto& s : slices_)
    if (s.size() > 0) m = std::max(m, s.cwiseAbs().maxCoeff());
  return m;
}

SeriesMatrix& SeriesMatrix::operator+=(const SeriesMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw Error(ErrorKind::InvalidArgument, "shape mismatch in matrix sum");
  slices_.resize(std::min(slices_.size(), rhs.slices_.size()));
  for (std::size_t k = 0; k < slices_.size(); ++k) slices_[k] += rhs.slices_[k];
  return *this;
}

SeriesMatrix& SeriesMatrix::operator-=(const SeriesMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw Error(ErrorKind::InvalidArgument, "shape mismatch in matrix difference");
  slices_.resize(std::min(slices_.size(), rhs.slices_.size()));
  for (std::size_t k = 0; k < slices_.size(); ++k) slices_[k] -= rhs.slices_[k];
  return *this;
}

SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::InvalidArgument, "shape mismatch in matrix product");
  const int order = std::min(a.order(), b.order());
  SeriesMatrix out(a.rows_, b.cols_, order);
  for (int i = 0; i <= order; ++i) {
    if (a.slices_[i].isZero(0.0)) continue;
    for (int j = 0; i + j <= order; ++j) out.slices_[i + j].noalias() += a.slices_[i] * b.slices_[j];
  }
  return out;
}

SeriesMatrix operator*(const HSeries& s, const SeriesMatrix& m) {
  const int order = std::min(s.order(), m.order());
  SeriesMatrix out(m.rows_, m.cols_, order);
  for (int i = 0; i <= order; ++i) {
    if (s[i] == 0.0) continue;
    for (int j = 0; i + j <= order; ++j) out.slices_[i + j] += s[i] * m.slices_[j];
  }
  return out;
}

SeriesMatrix operator*(double s, SeriesMatrix m) {
  for (auto& sl : m.slices_) sl *= s;
  return m;
}

SeriesMatrix kron(const SeriesMatrix& a, const SeriesMatrix& b) {
  const int order = std::min(a.order(), b.order());
  SeriesMatrix out(a.rows() * b.rows(), a.cols() * b.cols(), order);
  for (int i = 0; i <= order; ++i) {
    const auto& ai = a.slice(i);
    if (ai.isZero(0.0)) continue;
    for (int j = 0; i + j <= order; ++j) {
      const auto& bj = b.slice(j);
      auto& dst = out.slice(i + j);
      for (Eigen::Index r = 0; r < ai.rows(); ++r)
        for (Eigen::Index c = 0; c < ai.cols(); ++c)
          if (ai(r, c) != 0.0)
            dst.block(r * bj.rows(), c * bj.cols(), bj.rows(), bj.cols()) += ai(r, c) * bj;
    }
  }
  return out;
}

SeriesMatrix direct_sum(const std::vector<SeriesMatrix>& blocks) {
  Eigen::Index rows = 0, cols = 0;
  int order = blocks.empty() ? 0 : blocks.front().order();
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
    order = std::min(order, b.order());
  }
  SeriesMatrix out(rows, cols, order);
  Eigen::Index r = 0, c = 0;
  for (const auto& b : blocks) {
    for (int k = 0; k <= order; ++k) out.slice(k).block(r, c, b.rows(), b.cols()) = b.slice(k);
    r += b.rows();
    c += b.cols();
  }
  return out;
}

SeriesMatrix diagonal(const std::vector<HSeries>& entries) {
  int order = entries.empty() ? 0 : entries.front().order();
  for (const auto& e : entries) order = std::min(order, e.order());
  const auto n = static_cast<Eigen::Index>(entries.size());
  SeriesMatrix out(n, n, order);
  for (Eigen::Index i = 0; i < n; ++i) out.set_entry(i, i, entries[static_cast<std::size_t>(i)]);
  return out;
}

double max_abs_diff(const SeriesMatrix& a, const SeriesMatrix& b) { return (a - b).max_abs(); }

SeriesMatrix embed_legs(const SeriesMatrix& op, const std::vector<int>& legs,
                        const std::vector<int>& dims) {
  const int n = static_cast<int>(dims.size());
  std::vector<Eigen::Index> stride(static_cast<std::size_t>(n), 1);
  for (int i = n - 2; i >= 0; --i) stride[i] = stride[i + 1] * dims[i + 1];
  const Eigen::Index total = stride.front() * dims.front();

  Eigen::Index sub = 1;
  for (int leg : legs) sub *= dims.at(static_cast<std::size_t>(leg));
  if (op.rows() != sub || op.cols() != sub)
    throw Error(ErrorKind::InvalidArgument, "embed_legs: operator does not match leg dimensions");

  std::vector<bool> is_leg(static_cast<std::size_t>(n), false);
  for (int leg : legs) is_leg[static_cast<std::size_t>(leg)] = true;

  // Split a full index into (sub-index over `legs`, offset over the remaining legs).
  auto split = [&](Eigen::Index idx) {
    Eigen::Index sub_index = 0, rest = 0;
    for (int leg : legs) sub_index = sub_index * dims[leg] + (idx / stride[leg]) % dims[leg];
    for (int i = 0; i < n; ++i)
      if (!is_leg[i]) rest += ((idx / stride[i]) % dims[i]) * stride[i];
    return std::pair{sub_index, rest};
  };
  std::vector<std::pair<Eigen::Index, Eigen::Index>> parts(static_cast<std::size_t>(total));
  for (Eigen::Index i = 0; i < total; ++i) parts[static_cast<std::size_t>(i)] = split(i);

  SeriesMatrix out(total, total, op.order());
  for (Eigen::Index r = 0; r < total; ++r)
    for (Eigen::Index c = 0; c < total; ++c) {
      const auto [rs, rr] = parts[static_cast<std::size_t>(r)];
      const auto [cs, cr] = parts[static_cast<std::size_t>(c)];
      if (rr != cr) continue;
      for (int k = 0; k <= op.order(); ++k) out.slice(k)(r, c) = op.slice(k)(rs, cs);
    }
  return out;
}

SeriesMatrix apply_legs(const SeriesMatrix& op, const std::vector<int>& legs,
                        const std::vector<int>& dims, const SeriesMatrix& v) {
  const int n = static_cast<int>(dims.size());
  std::vector<Eigen::Index> stride(static_cast<std::size_t>(n), 1);
  for (int i = n - 2; i >= 0; --i) stride[i] = stride[i + 1] * dims[i + 1];
  const Eigen::Index total = stride.front() * dims.front();
  if (v.rows() != total || v.cols() != 1)
    throw Error(ErrorKind::InvalidArgument, "apply_legs: vector does not match dimensions");

  Eigen::Index sub = 1;
  for (int leg : legs) sub *= dims.at(static_cast<std::size_t>(leg));
  if (op.rows() != sub || op.cols() != sub)
    throw Error(ErrorKind::InvalidArgument, "apply_legs: operator does not match leg dimensions");

  // Offsets of the sub-index within a full index, and the base offsets of the other legs.
  std::vector<Eigen::Index> sub_offset(static_cast<std::size_t>(sub), 0);
  for (Eigen::Index s = 0; s < sub; ++s) {
    Eigen::Index rem = s, off = 0;
    for (auto it = legs.rbegin(); it != legs.rend(); ++it) {
      off += (rem % dims[*it]) * stride[*it];
      rem /= dims[*it];
    }
    sub_offset[static_cast<std::size_t>(s)] = off;
  }
  std::vector<bool> is_leg(static_cast<std::size_t>(n), false);
  for (int leg : legs) is_leg[static_cast<std::size_t>(leg)] = true;
  std::vector<Eigen::Index> bases;
  for (Eigen::Index idx = 0; idx < total; ++idx) {
    bool zero_on_legs = true;
    for (int leg : legs) zero_on_legs = zero_on_legs && (idx / stride[leg]) % dims[leg] == 0;
    if (zero_on_legs) bases.push_back(idx);
  }

  const int order = std::min(op.order(), v.order());
  SeriesMatrix out(total, 1, order);
  Eigen::MatrixXd gathered(sub, order + 1);
  for (Eigen::Index base : bases) {
    for (Eigen::Index s = 0; s < sub; ++s)
      for (int k = 0; k <= order; ++k) gathered(s, k) = v.slice(k)(base + sub_offset[s], 0);
    if (gathered.isZero(0.0)) continue;
    for (int i = 0; i <= order; ++i) {
      const auto& oi = op.slice(i);
      for (int j = 0; i + j <= order; ++j) {
        const Eigen::VectorXd prod = oi * gathered.col(j);
        for (Eigen::Index s = 0; s < sub; ++s) out.slice(i + j)(base + sub_offset[s], 0) += prod(s);
      }
    }
  }
  return out;
}

}  // namespace qstar
