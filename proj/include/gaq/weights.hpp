#pragma once

// Contravariant weight functors and relative Tor: the weight t of
// basepoint-vanishing maps, its exterior powers, the coend T (x)_Gamma F and
// the relative derived functors Tor^Y_*(T, -) computed over the same
// resolutions as pi^Y_*.

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "gaq/resolution.hpp"

namespace gaq {

// Contravariant functor on levels <= N: action(f) maps T([m]) -> T([n]) for
// f: [n] -> [m].
template <class F>
class Weight {
 public:
  using Rule = std::function<Matrix<F>(const PointedMap&)>;

  Weight(F f, int N, std::string name, std::vector<long> dims, Rule rule)
      : field_(std::move(f)), N_(N), name_(std::move(name)), dims_(std::move(dims)), rule_(std::move(rule)) {}

  const F& field() const { return field_; }
  int truncation() const { return N_; }
  const std::string& name() const { return name_; }
  long dim(int n) const { return dims_.at(n); }

  const Matrix<F>& action(const PointedMap& f) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(f);
    if (it != cache_.end()) return it->second;
    Matrix<F> m = rule_(f);
    if (m.rows() != dim(f.source()) || m.cols() != dim(f.target))
      throw std::logic_error("weight rule produced wrong shape");
    return cache_.emplace(f, std::move(m)).first->second;
  }

 private:
  F field_;
  int N_;
  std::string name_;
  std::vector<long> dims_;
  Rule rule_;
  mutable std::mutex mutex_;
  mutable std::map<PointedMap, Matrix<F>> cache_;
};

// t([n]): maps [n] -> K vanishing at the basepoint, with the coordinate basis
// phi_1..phi_n; t(f) precomposes, phi_i -> sum_{j: f(j)=i} phi_j.
template <class F>
Weight<F> weight_t(const F& f, int N) {
  std::vector<long> dims;
  for (int n = 0; n <= N; ++n) dims.push_back(n);
  auto rule = [f](const PointedMap& g) {
    const int n = g.source();
    const int m = g.target;
    Matrix<F> t(f, n, m);
    for (int j = 1; j <= n; ++j)
      if (g(j) >= 1) t.at(j - 1, g(j) - 1) = f.one();
    return t;
  };
  return Weight<F>(f, N, "t", std::move(dims), rule);
}

namespace detail {

template <class F>
typename F::Elem small_det(const F& f, const Matrix<F>& m) {
  const long n = m.rows();
  if (n == 0) return f.one();
  if (n == 1) return m.at(0, 0);
  typename F::Elem acc = f.zero();
  for (long r = 0; r < n; ++r) {
    if (f.is_zero(m.at(r, 0))) continue;
    Matrix<F> minor(f, n - 1, n - 1);
    long rr = 0;
    for (long i = 0; i < n; ++i) {
      if (i == r) continue;
      for (long j = 1; j < n; ++j) minor.at(rr, j - 1) = m.at(i, j);
      ++rr;
    }
    auto term = f.mul(m.at(r, 0), small_det(f, minor));
    acc = (r % 2 == 0) ? f.add(acc, term) : f.sub(acc, term);
  }
  return acc;
}

inline std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v <= n; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

}  // namespace detail

// Lambda^k of t: level m carries the k-th exterior power with the lexicographic
// wedge basis; actions are the k x k minors of t(f).
template <class F>
Weight<F> weight_lambda_t(const F& f, int k, int N) {
  if (k < 1) throw std::invalid_argument("exterior power degree must be >= 1");
  if (k == 1) return weight_t(f, N);
  std::vector<long> dims;
  for (int n = 0; n <= N; ++n) dims.push_back(binomial(n, k));
  auto rule = [f, k](const PointedMap& g) {
    const int n = g.source();
    const int m = g.target;
    auto t = weight_t(f, std::max(n, m)).action(g);
    auto rows = detail::subsets_of_size(n, k);
    auto cols = detail::subsets_of_size(m, k);
    Matrix<F> out(f, static_cast<long>(rows.size()), static_cast<long>(cols.size()));
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < cols.size(); ++c) {
        Matrix<F> minor(f, k, k);
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) minor.at(i, j) = t.at(rows[r][i] - 1, cols[c][j] - 1);
        out.at(r, c) = detail::small_det(f, minor);
      }
    return out;
  };
  return Weight<F>(f, N, "lambda^" + std::to_string(k), std::move(dims), rule);
}

// --- coend views ------------------------------------------------------------------

// What the coend needs from the covariant side: level dimensions and the
// action on basis vectors.
template <class F>
class ContractView {
 public:
  virtual ~ContractView() = default;
  virtual int truncation() const = 0;
  virtual long dim(int n) const = 0;
  virtual SparseVec<F> act_basis(const PointedMap& f, long idx) const = 0;
};

template <class F>
class DenseContractView : public ContractView<F> {
 public:
  explicit DenseContractView(ModulePtr<F> m) : mod_(std::move(m)) {}
  int truncation() const override { return mod_->truncation(); }
  long dim(int n) const override { return mod_->dim(n); }
  SparseVec<F> act_basis(const PointedMap& f, long idx) const override {
    return to_sparse(mod_->field(), mod_->action(f).column(idx));
  }

 private:
  ModulePtr<F> mod_;
};

// One Gamma(lambda) block as a coend view.
template <class F>
class BlockContractView : public ContractView<F> {
 public:
  BlockContractView(const F& f, const LambdaBlock<F>& blk) : field_(f), blk_(blk) {}
  int truncation() const override { return blk_.truncation(); }
  long dim(int n) const override { return blk_.dim(n); }
  SparseVec<F> act_basis(const PointedMap& f, long idx) const override {
    return {{blk_.act(f, f.source(), idx), field_.one()}};
  }

 private:
  F field_;
  const LambdaBlock<F>& blk_;
};

// The kernel of a resolution stage map, with cover-ambient coordinates
// compressed to the free positions of its sparse kernel bases.
template <class F>
class KernelContractView : public ContractView<F> {
 public:
  KernelContractView(Resolver<F>& res, int stage) : res_(res), stage_(stage), field_(res.target()->field()) {
    const int N = res.truncation();
    kernels_.resize(N + 1);
    free_pos_.resize(N + 1);
    for (int n = 0; n <= N; ++n) {
      auto m = res_.boundary_matrix(stage_, n);
      kernels_[n] = sparse_kernel_basis(m);
      for (std::size_t i = 0; i < kernels_[n].free_columns.size(); ++i)
        free_pos_[n][kernels_[n].free_columns[i]] = static_cast<long>(i);
    }
  }

  int truncation() const override { return res_.truncation(); }
  long dim(int n) const override { return static_cast<long>(kernels_[n].basis.size()); }
  SparseVec<F> act_basis(const PointedMap& f, long idx) const override {
    auto img = res_.cover_act(stage_, f, kernels_[f.source()].basis[idx]);
    SparseVec<F> out;
    const auto& pos = free_pos_[f.target];
    for (const auto& [g, c] : img) {
      auto it = pos.find(g);
      if (it != pos.end()) out.emplace_back(it->second, c);
    }
    return out;
  }

  // kernel basis vector in cover-ambient coordinates
  const SparseVec<F>& basis_vector(int n, long idx) const { return kernels_[n].basis[idx]; }

 private:
  Resolver<F>& res_;
  int stage_;
  F field_;
  std::vector<SparseKernel<F>> kernels_;
  std::vector<std::map<long, long>> free_pos_;
};

// --- the coend T (x)_Gamma F -------------------------------------------------------

template <class F>
struct CoendLayout {
  std::vector<long> offsets;  // per level
  long ambient = 0;

  long index(int n, long t_idx, long f_dim_n, long f_idx) const {
    return offsets[n] + t_idx * f_dim_n + f_idx;
  }
};

// Levels are laid out from the top down so that streaming eliminations pivot
// on high-level generators first (the drop and fold relations rewrite them in
// terms of lower levels, keeping fill-in near the bottom block).
template <class F>
CoendLayout<F> coend_layout(const Weight<F>& t, const ContractView<F>& v) {
  CoendLayout<F> lay;
  lay.offsets.assign(v.truncation() + 1, 0);
  for (int n = v.truncation(); n >= 0; --n) {
    lay.offsets[n] = lay.ambient;
    lay.ambient += t.dim(n) * v.dim(n);
  }
  return lay;
}

// Emit the coend relations (T(f) t') (x) y - t' (x) (F(f) y) over a generating
// family of maps; relations for composites follow by functoriality.
template <class F>
void coend_relations(const Weight<F>& t, const ContractView<F>& v, const CoendLayout<F>& lay,
                     const std::function<void(SparseVec<F>&&)>& emit) {
  const F& f = t.field();
  const int N = v.truncation();
  for (const auto& g : generating_maps(N)) {
    const int a = g.source(), b = g.target;
    if (t.dim(b) == 0 || v.dim(a) == 0) continue;
    const auto& tmat = t.action(g);  // T([b]) -> T([a])
    for (long tp = 0; tp < t.dim(b); ++tp) {
      auto tcol = tmat.column(tp);
      for (long y = 0; y < v.dim(a); ++y) {
        std::map<long, typename F::Elem> acc;
        for (long ti = 0; ti < t.dim(a); ++ti)
          if (!f.is_zero(tcol[ti])) acc[lay.index(a, ti, v.dim(a), y)] = tcol[ti];
        for (const auto& [fy, c] : v.act_basis(g, y)) {
          long idx = lay.index(b, tp, v.dim(b), fy);
          auto [it, fresh] = acc.emplace(idx, f.neg(c));
          if (!fresh) it->second = f.sub(it->second, c);
        }
        SparseVec<F> rel;
        for (auto& [idx, c] : acc)
          if (!f.is_zero(c)) rel.emplace_back(idx, c);
        if (!rel.empty()) emit(std::move(rel));
      }
    }
  }
}

// Full presentation of the coend (for small modules: the public operation).
template <class F>
struct CoendPresentation {
  CoendLayout<F> layout;
  QuotientPresentation<F> pres;
  long dim() const { return pres.dim(); }
};

template <class F>
CoendPresentation<F> weighted_contract(const Weight<F>& t, const ContractView<F>& v) {
  const F& f = t.field();
  auto lay = coend_layout(t, v);
  std::vector<Vec<F>> rels;
  coend_relations<F>(t, v, lay, [&](SparseVec<F>&& r) { rels.push_back(to_dense(f, r, lay.ambient)); });
  CoendPresentation<F> out;
  out.layout = lay;
  out.pres = quotient_by(f, lay.ambient, rels);
  return out;
}

template <class F>
CoendPresentation<F> weighted_contract(const Weight<F>& t, const ModulePtr<F>& m) {
  DenseContractView<F> v(m);
  return weighted_contract(t, v);
}

// Dimension of the coend without materializing the presentation.
template <class F>
long weighted_dim(const Weight<F>& t, const ContractView<F>& v) {
  auto lay = coend_layout(t, v);
  RankSink<F> sink(t.field(), lay.ambient);
  long rank = 0;
  coend_relations<F>(t, v, lay, [&](SparseVec<F>&& r) {
    if (sink.add_sparse(r)) ++rank;
  });
  return lay.ambient - rank;
}

// --- relative Tor ------------------------------------------------------------------

// Tor^Y_i(T, F) for i <= d over the resolution held by the resolver. Degree 0
// is the coend itself; in positive degrees H_{i+1} = ker(W(K_i) -> W(C_i)),
// by right-exactness of the coend, computed against the blockwise
// presentations of W(Gamma(lambda)).
template <class F>
PiReport weighted_tor(const Weight<F>& t, Resolver<F>& res, int d) {
  const F& f = t.field();
  PiReport rep;
  rep.functor = "tor";
  rep.weight = t.name();
  rep.field = f.spec().name();
  rep.N = res.truncation();
  rep.B = res.bound();
  rep.d = d;

  {
    DenseContractView<F> fv(res.target());
    rep.dims.push_back(weighted_dim(t, fv));
  }
  if (d == 0) return rep;
  res.ensure_stages(d);

  for (int i = 0; i < d; ++i) {
    const auto& st = res.stages()[i];
    // per-partition presentations of W(Gamma(lambda))
    std::map<Partition, CoendPresentation<F>> wblocks;
    for (const auto& [lam, mult] : st.shape) {
      if (mult == 0 || wblocks.count(lam)) continue;
      BlockContractView<F> bv(f, res.blocks().get(lam));
      wblocks.emplace(lam, weighted_contract(t, bv));
    }
    // quotient coordinates of W(C_i): per summand block
    std::vector<long> woffsets;
    long wtotal = 0;
    for (const auto& sm : st.summands) {
      woffsets.push_back(wtotal);
      wtotal += wblocks.at(st.shape[sm.shape_idx].first).dim();
    }

    KernelContractView<F> kv(res, i);
    auto klay = coend_layout(t, kv);

    // dim W(K_i)
    long wk_dim;
    {
      RankSink<F> sink(f, klay.ambient);
      long rank = 0;
      coend_relations<F>(t, kv, klay, [&](SparseVec<F>&& r) {
        if (sink.add_sparse(r)) ++rank;
      });
      wk_dim = klay.ambient - rank;
    }

    // rank of the induced map W(K_i) -> W(C_i) on ambient generators
    long rank_map = 0;
    {
      RankSink<F> sink(f, wtotal);
      for (int n = 0; n <= res.truncation(); ++n) {
        if (t.dim(n) == 0 || kv.dim(n) == 0) continue;
        for (long tp = 0; tp < t.dim(n); ++tp)
          for (long kidx = 0; kidx < kv.dim(n); ++kidx) {
            // expand t' (x) k through the summand blocks and project
            std::map<long, std::map<long, typename F::Elem>> per_summand;
            for (const auto& [g, c] : kv.basis_vector(n, kidx)) {
              auto [sj, local] = locate_in_cover(st, n, g);
              const auto& lam = st.shape[st.summands[sj].shape_idx].first;
              const auto& wp = wblocks.at(lam);
              long amb = wp.layout.index(n, tp, res.blocks().get(lam).dim(n), local);
              per_summand[sj][amb] = c;
            }
            SparseVec<F> col;
            for (auto& [sj, entries] : per_summand) {
              const auto& wp = wblocks.at(st.shape[st.summands[sj].shape_idx].first);
              SparseVec<F> amb;
              for (auto& [a, c] : entries) amb.emplace_back(a, c);
              auto proj = wp.pres.project_sparse(amb);
              for (long r = 0; r < static_cast<long>(proj.size()); ++r)
                if (!f.is_zero(proj[r])) col.emplace_back(woffsets[sj] + r, proj[r]);
            }
            std::sort(col.begin(), col.end(), [](auto& a, auto& b) { return a.first < b.first; });
            if (sink.add_sparse(col)) ++rank_map;
          }
      }
    }
    long h = wk_dim - rank_map;
    if (h < 0) throw std::logic_error("negative weighted homology dimension");
    rep.dims.push_back(h);
  }
  return rep;
}

// --- Kuenneth ---------------------------------------------------------------------

struct KunnethRow {
  int degree;
  long lhs;  // dim pi_i(F (x) T)
  long rhs;  // dims_F[i] * dim T([0]) + dim F([0]) * dims_T[i]
  bool ok() const { return lhs == rhs; }
};

struct KunnethReport {
  bool ok = true;
  std::vector<KunnethRow> rows;
  std::vector<long> dims_f, dims_t, dims_ft;
};

template <class F>
KunnethReport kunneth_check(const F& f, const ModulePtr<F>& a, const ModulePtr<F>& b, int d, int B,
                            ResolverOptions opt = {}) {
  KunnethReport rep;
  rep.dims_f = relative_pi(f, a, d, B, opt).dims;
  rep.dims_t = relative_pi(f, b, d, B, opt).dims;
  rep.dims_ft = relative_pi(f, pointwise_tensor(a, b), d, B, opt).dims;
  for (int i = 0; i <= d; ++i) {
    KunnethRow row{i, rep.dims_ft[i], rep.dims_f[i] * b->dim(0) + a->dim(0) * rep.dims_t[i]};
    rep.ok = rep.ok && row.ok();
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace gaq
