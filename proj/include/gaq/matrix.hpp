#pragma once

// Dense exact linear algebra: reduced row echelon form, kernels, images,
// cokernel presentations, group invariants/coinvariants, and streaming rank
// accumulators used by the resolution engine.

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gaq/field.hpp"

namespace gaq {

struct LabeledSpace {
  std::vector<std::string> labels;

  LabeledSpace() = default;
  explicit LabeledSpace(std::vector<std::string> ls) : labels(std::move(ls)) {}
  static LabeledSpace unlabeled(long dim, const std::string& prefix = "e") {
    std::vector<std::string> ls;
    ls.reserve(dim);
    for (long i = 0; i < dim; ++i) ls.push_back(prefix + std::to_string(i));
    return LabeledSpace(std::move(ls));
  }
  long dim() const { return static_cast<long>(labels.size()); }
};

template <class F>
using Vec = std::vector<typename F::Elem>;

// Sparse vector: (index, coefficient) pairs, indices strictly increasing.
template <class F>
using SparseVec = std::vector<std::pair<long, typename F::Elem>>;

template <class F>
SparseVec<F> to_sparse(const F& f, const Vec<F>& v) {
  SparseVec<F> s;
  for (long i = 0; i < static_cast<long>(v.size()); ++i)
    if (!f.is_zero(v[i])) s.emplace_back(i, v[i]);
  return s;
}

template <class F>
Vec<F> to_dense(const F& f, const SparseVec<F>& s, long dim) {
  Vec<F> v(dim, f.zero());
  for (auto& [i, c] : s) v[i] = c;
  return v;
}

// Dense column-major-free matrix; entries row-major.
template <class F>
class Matrix {
 public:
  using Elem = typename F::Elem;

  Matrix() : rows_(0), cols_(0) {}
  Matrix(F f, long rows, long cols)
      : field_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols, field_.zero()) {}

  static Matrix identity(F f, long n) {
    Matrix m(f, n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = m.field_.one();
    return m;
  }
  static Matrix from_columns(F f, long rows, const std::vector<Vec<F>>& cols) {
    Matrix m(f, rows, static_cast<long>(cols.size()));
    for (long j = 0; j < m.cols_; ++j) {
      assert(static_cast<long>(cols[j].size()) == rows);
      for (long i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
  }
  static Matrix from_rows(F f, long cols, const std::vector<Vec<F>>& rows) {
    Matrix m(f, static_cast<long>(rows.size()), cols);
    for (long i = 0; i < m.rows_; ++i)
      for (long j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    return m;
  }

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  const F& field() const { return field_; }

  Elem& at(long r, long c) { return a_[r * cols_ + c]; }
  const Elem& at(long r, long c) const { return a_[r * cols_ + c]; }

  Vec<F> column(long c) const {
    Vec<F> v(rows_, field_.zero());
    for (long r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
  }
  Vec<F> row(long r) const {
    Vec<F> v(cols_, field_.zero());
    for (long c = 0; c < cols_; ++c) v[c] = at(r, c);
    return v;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (long r = 0; r < rows_; ++r)
      for (long c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
  }

  Vec<F> apply(const Vec<F>& v) const {
    assert(static_cast<long>(v.size()) == cols_);
    Vec<F> out(rows_, field_.zero());
    for (long r = 0; r < rows_; ++r) {
      Elem acc = field_.zero();
      for (long c = 0; c < cols_; ++c)
        if (!field_.is_zero(at(r, c)) && !field_.is_zero(v[c]))
          field_.add_assign(acc, field_.mul(at(r, c), v[c]));
      out[r] = acc;
    }
    return out;
  }

  Vec<F> apply_sparse(const SparseVec<F>& v) const {
    Vec<F> out(rows_, field_.zero());
    for (auto& [c, coef] : v)
      for (long r = 0; r < rows_; ++r)
        if (!field_.is_zero(at(r, c))) field_.add_assign(out[r], field_.mul(at(r, c), coef));
    return out;
  }

  bool operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < a_.size(); ++i)
      if (!field_.eq(a_[i], o.a_[i])) return false;
    return true;
  }

 private:
  F field_;
  long rows_, cols_;
  std::vector<Elem> a_;
};

template <class F>
Matrix<F> mat_mul(const Matrix<F>& a, const Matrix<F>& b) {
  assert(a.cols() == b.rows());
  const F& f = a.field();
  Matrix<F> c(f, a.rows(), b.cols());
  for (long i = 0; i < a.rows(); ++i)
    for (long k = 0; k < a.cols(); ++k) {
      const auto& aik = a.at(i, k);
      if (f.is_zero(aik)) continue;
      for (long j = 0; j < b.cols(); ++j)
        if (!f.is_zero(b.at(k, j))) f.add_assign(c.at(i, j), f.mul(aik, b.at(k, j)));
    }
  return c;
}

template <class F>
Matrix<F> mat_add(const Matrix<F>& a, const Matrix<F>& b, const typename F::Elem& scale_b) {
  assert(a.rows() == b.rows() && a.cols() == b.cols());
  const F& f = a.field();
  Matrix<F> c = a;
  for (long i = 0; i < a.rows(); ++i)
    for (long j = 0; j < a.cols(); ++j) f.add_assign(c.at(i, j), f.mul(scale_b, b.at(i, j)));
  return c;
}

// --- reduced row echelon form -----------------------------------------------

template <class F>
struct RrefResult {
  Matrix<F> reduced;
  std::vector<long> pivots;  // pivot column of each nonzero row, in row order
  long rank = 0;
};

// Row reduction scanning columns in the given order. Pivot row selection: for
// prime fields the first nonzero candidate; for rationals the entry with the
// smallest numerator-times-denominator bit size (entry growth control).
template <class F>
RrefResult<F> rref_ordered(Matrix<F> m, const std::vector<long>& col_order) {
  const F f = m.field();
  const long rows = m.rows();
  long rank = 0;
  std::vector<long> pivots;
  for (long oc : col_order) {
    if (rank == rows) break;
    long best = -1;
    std::size_t best_w = 0;
    for (long r = rank; r < rows; ++r) {
      if (f.is_zero(m.at(r, oc))) continue;
      std::size_t w = f.pivot_weight(m.at(r, oc));
      if (best < 0 || w < best_w) {
        best = r;
        best_w = w;
        if (w <= 1) break;
      }
    }
    if (best < 0) continue;
    if (best != rank)
      for (long c = 0; c < m.cols(); ++c) std::swap(m.at(rank, c), m.at(best, c));
    const auto piv_inv = f.inv(m.at(rank, oc));
    for (long c = 0; c < m.cols(); ++c)
      if (!f.is_zero(m.at(rank, c))) m.at(rank, c) = f.mul(m.at(rank, c), piv_inv);
    for (long r = 0; r < rows; ++r) {
      if (r == rank) continue;
      const auto factor = m.at(r, oc);
      if (f.is_zero(factor)) continue;
      for (long c = 0; c < m.cols(); ++c)
        if (!f.is_zero(m.at(rank, c))) f.submul_assign(m.at(r, c), factor, m.at(rank, c));
    }
    pivots.push_back(oc);
    ++rank;
  }
  return {std::move(m), std::move(pivots), rank};
}

template <class F>
RrefResult<F> rref(const Matrix<F>& m) {
  std::vector<long> order(m.cols());
  std::iota(order.begin(), order.end(), 0);
  return rref_ordered(m, order);
}

template <class F>
long rank_of(const Matrix<F>& m) {
  return rref(m).rank;
}

// Kernel basis from the RREF: one vector per free column, unit coefficient on
// the free coordinate. These vectors are independent and coordinates of any
// kernel element can be read off its free coordinates.
template <class F>
std::vector<Vec<F>> kernel_basis(const Matrix<F>& m) {
  const F& f = m.field();
  auto rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (long p : rr.pivots) is_pivot[p] = true;
  std::vector<Vec<F>> out;
  for (long c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    Vec<F> v(m.cols(), f.zero());
    v[c] = f.one();
    for (long r = 0; r < rr.rank; ++r)
      if (!f.is_zero(rr.reduced.at(r, c))) v[rr.pivots[r]] = f.neg(rr.reduced.at(r, c));
    out.push_back(std::move(v));
  }
  return out;
}

// Kernel basis in sparse form (one vector per free column, at most rank+1
// entries each), plus the free column indices.
template <class F>
struct SparseKernel {
  std::vector<SparseVec<F>> basis;
  std::vector<long> free_columns;
};

template <class F>
SparseKernel<F> sparse_kernel_basis(const Matrix<F>& m) {
  const F& f = m.field();
  auto rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (long p : rr.pivots) is_pivot[p] = true;
  SparseKernel<F> out;
  for (long c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    SparseVec<F> v;
    for (long r = 0; r < rr.rank; ++r)
      if (!f.is_zero(rr.reduced.at(r, c))) v.emplace_back(rr.pivots[r], f.neg(rr.reduced.at(r, c)));
    v.emplace_back(c, f.one());
    std::sort(v.begin(), v.end(), [](auto& a, auto& b) { return a.first < b.first; });
    out.basis.push_back(std::move(v));
    out.free_columns.push_back(c);
  }
  return out;
}

// Basis of the column space: the original columns at pivot positions.
template <class F>
std::vector<Vec<F>> image_basis(const Matrix<F>& m) {
  auto rr = rref(m);
  std::vector<Vec<F>> out;
  out.reserve(rr.rank);
  for (long p : rr.pivots) out.push_back(m.column(p));
  return out;
}

// Solve m x = target; std::nullopt when target is outside the image.
template <class F>
std::optional<Vec<F>> solve(const Matrix<F>& m, const Vec<F>& target) {
  const F& f = m.field();
  assert(static_cast<long>(target.size()) == m.rows());
  Matrix<F> aug(f, m.rows(), m.cols() + 1);
  for (long r = 0; r < m.rows(); ++r) {
    for (long c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols()) = target[r];
  }
  std::vector<long> order(m.cols());
  std::iota(order.begin(), order.end(), 0);
  auto rr = rref_ordered(aug, order);  // never pivots on the augmented column
  Vec<F> x(m.cols(), f.zero());
  for (long r = 0; r < rr.rank; ++r) x[rr.pivots[r]] = rr.reduced.at(r, m.cols());
  // residual check detects inconsistent systems
  for (long r = rr.rank; r < m.rows(); ++r)
    if (!f.is_zero(rr.reduced.at(r, m.cols()))) return std::nullopt;
  auto img = m.apply(x);
  for (long r = 0; r < m.rows(); ++r)
    if (!f.eq(img[r], target[r])) return std::nullopt;
  return x;
}

// --- quotient presentations --------------------------------------------------

// V / span(relations), with the quotient basis given by surviving ambient
// coordinates. Relations are row-reduced scanning columns from the highest
// index down, so the surviving label of each relation orbit is the least one.
template <class F>
struct QuotientPresentation {
  long ambient_dim = 0;
  std::vector<long> surviving;  // ambient indices, increasing
  Matrix<F> projection;         // dim() x ambient_dim
  Matrix<F> section;            // ambient_dim x dim()

  long dim() const { return static_cast<long>(surviving.size()); }

  Vec<F> project(const Vec<F>& v) const { return projection.apply(v); }
  Vec<F> project_sparse(const SparseVec<F>& v) const { return projection.apply_sparse(v); }
};

template <class F>
QuotientPresentation<F> quotient_by(const F& f, long ambient_dim, const std::vector<Vec<F>>& relations) {
  Matrix<F> rel = Matrix<F>::from_rows(f, ambient_dim, relations);
  std::vector<long> order(ambient_dim);
  for (long c = 0; c < ambient_dim; ++c) order[c] = ambient_dim - 1 - c;
  auto rr = rref_ordered(rel, order);

  std::vector<bool> is_pivot(ambient_dim, false);
  for (long p : rr.pivots) is_pivot[p] = true;
  QuotientPresentation<F> q;
  q.ambient_dim = ambient_dim;
  for (long c = 0; c < ambient_dim; ++c)
    if (!is_pivot[c]) q.surviving.push_back(c);

  const long qd = q.dim();
  q.projection = Matrix<F>(f, qd, ambient_dim);
  for (long s = 0; s < qd; ++s) q.projection.at(s, q.surviving[s]) = f.one();
  // pivot coordinate j maps to minus the survivor part of its rref row
  for (long r = 0; r < rr.rank; ++r) {
    long pcol = rr.pivots[r];
    for (long s = 0; s < qd; ++s) {
      const auto& c = rr.reduced.at(r, q.surviving[s]);
      if (!f.is_zero(c)) q.projection.at(s, pcol) = f.neg(c);
    }
  }
  q.section = Matrix<F>(f, ambient_dim, qd);
  for (long s = 0; s < qd; ++s) q.section.at(q.surviving[s], s) = f.one();
  return q;
}

// Cokernel of m: codomain modulo the column span.
template <class F>
QuotientPresentation<F> cokernel(const Matrix<F>& m) {
  std::vector<Vec<F>> cols;
  cols.reserve(m.cols());
  for (long c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  return quotient_by(m.field(), m.rows(), cols);
}

// --- group fixed points and coinvariants -------------------------------------

// Basis of the common fixed space of the generators: ker of stacked (g - id).
template <class F>
std::vector<Vec<F>> invariants(const F& f, long dim, const std::vector<Matrix<F>>& generators) {
  if (generators.empty()) {
    std::vector<Vec<F>> basis;
    for (long i = 0; i < dim; ++i) {
      Vec<F> v(dim, f.zero());
      v[i] = f.one();
      basis.push_back(std::move(v));
    }
    return basis;
  }
  Matrix<F> stacked(f, dim * static_cast<long>(generators.size()), dim);
  for (std::size_t g = 0; g < generators.size(); ++g) {
    const auto& m = generators[g];
    if (m.rows() != dim || m.cols() != dim) throw std::invalid_argument("malformed action: generator is not an endomorphism");
    for (long r = 0; r < dim; ++r)
      for (long c = 0; c < dim; ++c) {
        auto e = m.at(r, c);
        if (r == c) e = f.sub(e, f.one());
        stacked.at(static_cast<long>(g) * dim + r, c) = e;
      }
  }
  return kernel_basis(stacked);
}

// Quotient by the span of g(v) - v over all generators g and basis vectors v.
template <class F>
QuotientPresentation<F> coinvariants(const F& f, long dim, const std::vector<Matrix<F>>& generators) {
  std::vector<Vec<F>> rels;
  for (const auto& m : generators) {
    if (m.rows() != dim || m.cols() != dim) throw std::invalid_argument("malformed action: generator is not an endomorphism");
    for (long c = 0; c < dim; ++c) {
      Vec<F> v = m.column(c);
      v[c] = f.sub(v[c], f.one());
      rels.push_back(std::move(v));
    }
  }
  return quotient_by(f, dim, rels);
}

// --- streaming rank ----------------------------------------------------------

// Incremental row-space rank: rows are kept pivot-normalized and incoming
// vectors are forward-reduced. Deterministic for identical input order.
template <class F>
class DenseRankAccumulator {
 public:
  DenseRankAccumulator(F f, long width) : field_(std::move(f)), width_(width), pivot_row_(width, -1) {}

  bool add(Vec<F> v) {
    const F& f = field_;
    for (long c = 0; c < width_; ++c) {
      if (f.is_zero(v[c])) continue;
      long pr = pivot_row_[c];
      if (pr < 0) {
        const auto inv = f.inv(v[c]);
        for (long j = c; j < width_; ++j)
          if (!f.is_zero(v[j])) v[j] = f.mul(v[j], inv);
        pivot_row_[c] = static_cast<long>(rows_.size());
        rows_.push_back(std::move(v));
        return true;
      }
      const auto factor = v[c];
      const auto& row = rows_[pr];
      for (long j = c; j < width_; ++j)
        if (!f.is_zero(row[j])) f.submul_assign(v[j], factor, row[j]);
    }
    return false;
  }
  bool add_sparse(const SparseVec<F>& s) { return add(to_dense(field_, s, width_)); }
  long rank() const { return static_cast<long>(rows_.size()); }

 private:
  F field_;
  long width_;
  std::vector<long> pivot_row_;
  std::vector<Vec<F>> rows_;
};

// Packed GF(2) variant; rows are bitsets.
class Gf2RankAccumulator {
 public:
  explicit Gf2RankAccumulator(long width) : width_(width), words_((width + 63) / 64), pivot_row_(width, -1) {}

  bool add_bits(std::vector<std::uint64_t> v) {
    for (long w = 0; w < words_; ++w) {
      while (v[w]) {
        long c = w * 64 + __builtin_ctzll(v[w]);
        long pr = pivot_row_[c];
        if (pr < 0) {
          pivot_row_[c] = static_cast<long>(rows_.size());
          rows_.push_back(std::move(v));
          return true;
        }
        const auto& row = rows_[pr];
        for (long j = w; j < words_; ++j) v[j] ^= row[j];
      }
    }
    return false;
  }
  template <class It>
  bool add_indices(It begin, It end) {
    std::vector<std::uint64_t> v(words_, 0);
    for (It it = begin; it != end; ++it) v[*it / 64] ^= (1ull << (*it % 64));
    return add_bits(std::move(v));
  }
  long rank() const { return static_cast<long>(rows_.size()); }

 private:
  long width_, words_;
  std::vector<long> pivot_row_;
  std::vector<std::vector<std::uint64_t>> rows_;
};

// Sparse variant for wide rational streams.
template <class F>
class SparseRankAccumulator {
 public:
  explicit SparseRankAccumulator(F f) : field_(std::move(f)) {}

  bool add(SparseVec<F> v) {
    const F& f = field_;
    while (!v.empty()) {
      long lead = v.front().first;
      auto it = rows_.find(lead);
      if (it == rows_.end()) {
        const auto inv = f.inv(v.front().second);
        for (auto& [i, c] : v) c = f.mul(c, inv);
        rows_.emplace(lead, std::move(v));
        return true;
      }
      v = axpy(v, f.neg(v.front().second), it->second);
    }
    return false;
  }
  long rank() const { return static_cast<long>(rows_.size()); }

 private:
  SparseVec<F> axpy(const SparseVec<F>& a, const typename F::Elem& c, const SparseVec<F>& b) const {
    const F& f = field_;
    SparseVec<F> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        out.emplace_back(b[j].first, f.mul(c, b[j].second));
        ++j;
      } else {
        auto s = f.add(a[i].second, f.mul(c, b[j].second));
        if (!f.is_zero(s)) out.emplace_back(a[i].first, std::move(s));
        ++i;
        ++j;
      }
    }
    return out;
  }

  F field_;
  std::map<long, SparseVec<F>> rows_;
};

// Width- and field-adaptive rank sink.
template <class F>
class RankSink {
 public:
  RankSink(F f, long width) : field_(std::move(f)), width_(width) {
    if constexpr (std::is_same_v<F, PrimeField>) {
      if (field_.characteristic() == 2) {
        gf2_.emplace(width);
        return;
      }
    }
    if (width > kSparseThreshold) {
      sparse_.emplace(field_);
      return;
    }
    dense_.emplace(field_, width);
  }

  bool add_sparse(const SparseVec<F>& v) {
    if (gf2_) {
      std::vector<long> idx;
      idx.reserve(v.size());
      for (auto& [i, c] : v)
        if (!field_.is_zero(c)) idx.push_back(i);
      return gf2_->add_indices(idx.begin(), idx.end());
    }
    if (sparse_) return sparse_->add(v);
    return dense_->add_sparse(v);
  }
  bool add(const Vec<F>& v) { return add_sparse(to_sparse(field_, v)); }
  long rank() const {
    if (gf2_) return gf2_->rank();
    if (sparse_) return sparse_->rank();
    return dense_->rank();
  }

 private:
  static constexpr long kSparseThreshold = 1024;
  F field_;
  long width_;
  std::optional<Gf2RankAccumulator> gf2_;
  std::optional<SparseRankAccumulator<F>> sparse_;
  std::optional<DenseRankAccumulator<F>> dense_;
};

}  // namespace gaq
