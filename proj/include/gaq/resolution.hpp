#pragma once

// Y-projective covers and resolutions, and the relative derived functors
// pi_i^Y computed by rank arithmetic on the pi_0 presentations.
//
// A cover is a formal direct sum of Gamma(lambda) blocks, one summand per
// invariant basis vector of the covered module; the stage map sends the basis
// class [f] of a summand with vector x to action(f)(x). Stage maps are
// level-wise surjective onto their targets at every level covered by the
// partition bound (certified), which grounds the dimension bookkeeping:
//
//   dim H_0 = dim F([1]) - rank delta_F
//   dim H_{i+1} = rank(bd_i at [2]) - t_i - s_{i-1}
//
// with t_i the rank of the stage map on the blockwise pi_0-boundary kernel
// and s_i = r_i + t_i - rank(bd_i at [2]) the rank of the boundary restricted
// to the stage kernel. These are the ranks of the literal resolution built
// from the covers; no stage beyond degree d is materialized.

#include <optional>
#include <string>
#include <vector>

#include "gaq/blocks.hpp"

namespace gaq {

struct StageCertRecord {
  std::string lambda;
  long rank = 0;
  long expected = 0;
  bool ok() const { return rank == expected; }
};

struct StageRecord {
  std::vector<std::pair<std::string, long>> shape;  // (lambda, multiplicity)
  std::vector<long> level_dims;
  long rank_delta = 0;
  long t_rank = 0;
  long s_rank = 0;
  long rank_bd2 = 0;
  std::vector<StageCertRecord> certs;
};

struct PiReport {
  std::string functor = "pi";  // pi | tor
  std::string weight;          // weight name for tor reports
  std::string field;
  bool absolute = false;
  bool include_empty = true;
  int N = 0, B = 0, d = 0;
  std::vector<long> dims;
  std::vector<StageRecord> stages;
  bool certificates_ok = true;
  bool approximate = true;  // computed at truncation (N, B)
  std::string stability = "unknown";
  std::vector<long> previous_dims;  // dims of the (N-1, B-1) run when cached
  std::vector<std::string> notes;
};

// --- resolution stages -------------------------------------------------------------

template <class F>
struct CoverStage {
  struct Summand {
    long shape_idx;   // into shape
    SparseVec<F> x;   // invariant vector in the coordinates of the level below
  };
  std::vector<std::pair<Partition, long>> shape;
  std::vector<Summand> summands;
  std::vector<long> level_dim;             // 0..N
  std::vector<std::vector<long>> offsets;  // [level][summand]
  long rank_delta = 0;
  long rank_bd2 = 0;
  long t_rank = 0;
  long s_rank = 0;
  std::vector<StageCertRecord> certs;
};

struct ResolverOptions {
  bool absolute = false;
  bool include_empty = true;
  long cover_cap = 200000;  // max cover dimension per level
};

// (summand, local index) of a global cover coordinate at a level
template <class F>
std::pair<long, long> locate_in_cover(const CoverStage<F>& st, int level, long gidx) {
  const auto& off = st.offsets[level];
  auto it = std::upper_bound(off.begin(), off.end(), gidx);
  long sj = static_cast<long>(it - off.begin()) - 1;
  return {sj, gidx - off[sj]};
}

template <class F>
class Resolver {
 public:
  Resolver(F f, ModulePtr<F> target, int B, ResolverOptions opt = {})
      : field_(std::move(f)), target_(std::move(target)), B_(B), opt_(opt), store_(field_, target_->truncation()) {
    if (B_ > target_->truncation()) throw TruncationError("resolver: bound exceeds truncation");
    family_ = opt_.absolute ? column_family(B_) : partitions_up_to(B_);
    if (!opt_.include_empty)
      family_.erase(std::remove_if(family_.begin(), family_.end(),
                                   [](const Partition& p) { return p.parts.empty(); }),
                    family_.end());
  }

  int truncation() const { return target_->truncation(); }
  int bound() const { return B_; }
  const std::vector<Partition>& family() const { return family_; }
  const ModulePtr<F>& target() const { return target_; }
  BlockStore<F>& blocks() { return store_; }
  const std::vector<CoverStage<F>>& stages() const { return stages_; }

  // pi_i^{Y,(N,B)}(F) for i <= d
  PiReport run(int d) {
    if (d < 0) throw std::invalid_argument("negative degree");
    if (d >= 1 && B_ < 2) throw TruncationError("degree >= 1 needs partition bound >= 2");
    PiReport rep;
    rep.functor = "pi";
    rep.field = field_.spec().name();
    rep.absolute = opt_.absolute;
    rep.include_empty = opt_.include_empty;
    rep.N = truncation();
    rep.B = B_;
    rep.d = d;

    const long rank_delta_f = rank_of(pi0_delta(*target_));
    rep.dims.push_back(target_->dim(1) - rank_delta_f);

    ensure_stages(d == 0 ? 1 : d);
    long s_prev = rank_delta_f;
    for (int i = 0; i < d; ++i) {
      const auto& st = stages_[i];
      long h = st.rank_bd2 - st.t_rank - s_prev;
      if (h < 0) throw std::logic_error("negative homology dimension: certificates violated");
      rep.dims.push_back(h);
      s_prev = st.s_rank;
    }
    for (const auto& st : stages_) {
      StageRecord r;
      for (const auto& [lam, mult] : st.shape) r.shape.emplace_back(lam.str(), mult);
      r.level_dims = st.level_dim;
      r.rank_delta = st.rank_delta;
      r.t_rank = st.t_rank;
      r.s_rank = st.s_rank;
      r.rank_bd2 = st.rank_bd2;
      r.certs = st.certs;
      for (const auto& c : st.certs) rep.certificates_ok = rep.certificates_ok && c.ok();
      rep.stages.push_back(std::move(r));
    }
    return rep;
  }

  // Ensure covers C_0..C_{k-1} exist with their ranks and certificates.
  void ensure_stages(int k) {
    while (static_cast<int>(stages_.size()) < k) {
      int i = static_cast<int>(stages_.size());
      build_cover(i);
      stage_ranks(i);
    }
    for (int i = 0; i < k; ++i)
      if (stages_[i].certs.empty()) certify(i, /*need_kernel=*/false, nullptr);
  }

  // dimension of the stage-i kernel K_i at a level (valid for levels <= B)
  long kernel_dim(int i, int n) const {
    long rank_bd = (i == 0) ? target_->dim(n) : kernel_dim(i - 1, n);
    return stages_[i].level_dim[n] - rank_bd;
  }

  // Apply the stage-i map to a local vector of one summand at a level:
  // basis [f] of the summand goes to action(f)(x) in the ambient below.
  Vec<F> bd_apply_local(int i, int n, long summand, const SparseVec<F>& local) {
    const auto& st = stages_[i];
    const auto& blk = store_.get(st.shape[st.summands[summand].shape_idx].first);
    Vec<F> out(ambient_dim(i, n), field_.zero());
    for (const auto& [idx, c] : local) {
      PointedMap p{n, blk.rep(n, idx)};
      accumulate_ambient(i, p, st.summands[summand].x, c, out);
    }
    return out;
  }

  // Dense matrix of the stage-i map restricted to one summand at one level:
  // column per basis label of the block.
  Matrix<F> summand_image_matrix(int i, int n, long summand) {
    const auto& st = stages_[i];
    const auto& blk = store_.get(st.shape[st.summands[summand].shape_idx].first);
    Matrix<F> w(field_, ambient_dim(i, n), blk.dim(n));
    for (long idx = 0; idx < blk.dim(n); ++idx) {
      PointedMap p{n, blk.rep(n, idx)};
      Vec<F> col(ambient_dim(i, n), field_.zero());
      accumulate_ambient(i, p, st.summands[summand].x, field_.one(), col);
      for (long r = 0; r < w.rows(); ++r) w.at(r, idx) = col[r];
    }
    return w;
  }

  long ambient_dim(int i, int n) const {
    return i == 0 ? target_->dim(n) : stages_[i - 1].level_dim[n];
  }

  // Blockwise action of the stage-i cover itself on a sparse vector.
  SparseVec<F> cover_act(int i, const PointedMap& p, const SparseVec<F>& v) {
    const F& f = field_;
    const auto& st = stages_[i];
    std::map<long, typename F::Elem> acc;
    for (const auto& [gidx, c] : v) {
      auto [sj, local] = locate_in_cover(st, p.source(), gidx);
      const auto& blk = store_.get(st.shape[st.summands[sj].shape_idx].first);
      long tgt = st.offsets[p.target][sj] + blk.act(p, p.source(), local);
      auto [it, fresh] = acc.emplace(tgt, c);
      if (!fresh) it->second = f.add(it->second, c);
    }
    SparseVec<F> out;
    for (auto& [idx, c] : acc)
      if (!f.is_zero(c)) out.emplace_back(idx, c);
    return out;
  }

  // Full matrix of the stage-i map at one level (columns = cover basis).
  Matrix<F> boundary_matrix(int i, int n) {
    const auto& st = stages_[i];
    Matrix<F> m(field_, ambient_dim(i, n), st.level_dim[n]);
    for (long j = 0; j < static_cast<long>(st.summands.size()); ++j) {
      auto w = summand_image_matrix(i, n, j);
      long off = st.offsets[n][j];
      for (long r = 0; r < w.rows(); ++r)
        for (long c = 0; c < w.cols(); ++c)
          if (!field_.is_zero(w.at(r, c))) m.at(r, off + c) = w.at(r, c);
    }
    return m;
  }

 private:
  static std::vector<Partition> column_family(int B) {
    std::vector<Partition> fam;
    for (int n = 0; n <= B; ++n) fam.emplace_back(std::vector<int>(n, 1));
    return fam;
  }

  // out += c * (ambient action of p applied to x), where the ambient of stage
  // i is the target module (i = 0) or the cover below (i >= 1)
  void accumulate_ambient(int i, const PointedMap& p, const SparseVec<F>& x, const typename F::Elem& c,
                          Vec<F>& out) {
    const F& f = field_;
    if (i == 0) {
      for (const auto& [col, xc] : x) {
        const auto cc = f.mul(c, xc);
        for (const auto& [r, v] : target_->action_column(p, col)) f.add_assign(out[r], f.mul(cc, v));
      }
      return;
    }
    const auto& below = stages_[i - 1];
    for (const auto& [gidx, xc] : x) {
      auto [sj, local] = locate_in_cover(below, p.source(), gidx);
      const auto& blk = store_.get(below.shape[below.summands[sj].shape_idx].first);
      long tgt = below.offsets[p.target][sj] + blk.act(p, p.source(), local);
      f.add_assign(out[tgt], f.mul(c, xc));
    }
  }

  void build_cover(int i) {
    CoverStage<F> st;
    std::vector<std::vector<SparseVec<F>>> xs_by_mu(family_.size());
    if (i == 0) {
      for (std::size_t mi = 0; mi < family_.size(); ++mi) {
        auto basis = module_invariants(*target_, family_[mi].sum(), family_[mi]);
        for (auto& v : basis) xs_by_mu[mi].push_back(to_sparse(field_, v));
      }
    } else {
      certify(i - 1, /*need_kernel=*/true, &xs_by_mu);
    }
    for (std::size_t mi = 0; mi < family_.size(); ++mi) {
      st.shape.emplace_back(family_[mi], static_cast<long>(xs_by_mu[mi].size()));
      for (auto& x : xs_by_mu[mi]) st.summands.push_back({static_cast<long>(mi), std::move(x)});
    }
    const int N = truncation();
    st.level_dim.assign(N + 1, 0);
    st.offsets.assign(N + 1, {});
    for (int n = 0; n <= N; ++n) {
      st.offsets[n].reserve(st.summands.size());
      for (const auto& sm : st.summands) {
        st.offsets[n].push_back(st.level_dim[n]);
        st.level_dim[n] += store_.get(st.shape[sm.shape_idx].first).dim(n);
      }
      if (st.level_dim[n] > opt_.cover_cap) {
        // name the largest contributor
        Partition worst;
        long worst_dim = -1;
        for (const auto& [lam, mult] : st.shape) {
          long dcontrib = mult * store_.get(lam).dim(n);
          if (dcontrib > worst_dim) {
            worst_dim = dcontrib;
            worst = lam;
          }
        }
        throw ResourceError("cover at stage " + std::to_string(i) + " exceeds the cap at level " +
                            std::to_string(n) + " (dimension " + std::to_string(st.level_dim[n]) +
                            " > " + std::to_string(opt_.cover_cap) + "); largest summand " + worst.str());
      }
    }
    stages_.push_back(std::move(st));
  }

  void stage_ranks(int i) {
    auto& st = stages_[i];
    const F& f = field_;
    st.rank_delta = 0;
    for (const auto& sm : st.summands) st.rank_delta += store_.get(st.shape[sm.shape_idx].first).rank_delta();
    st.rank_bd2 = (i == 0) ? target_->dim(2) : kernel_dim(i - 1, 2);
    // t_i: rank of the stage map at level [2] restricted to the blockwise
    // kernel of the pi_0 boundary
    RankSink<F> sink(f, ambient_dim(i, 2));
    long t = 0;
    for (long j = 0; j < static_cast<long>(st.summands.size()); ++j) {
      const auto& blk = store_.get(st.shape[st.summands[j].shape_idx].first);
      if (blk.delta_kernel().empty()) continue;
      auto w = summand_image_matrix(i, 2, j);
      for (const auto& kv : blk.delta_kernel()) {
        if (sink.add(w.apply_sparse(kv))) ++t;
      }
    }
    st.t_rank = t;
    st.s_rank = st.rank_delta + st.t_rank - st.rank_bd2;
  }

  // Ranks of the stage-i map on Sigma(mu)-invariants for every mu in the
  // family. With need_kernel the kernels are returned as the invariant bases
  // of K_i (they become the next cover's summands).
  void certify(int i, bool need_kernel, std::vector<std::vector<SparseVec<F>>>* kernels_out) {
    auto& st = stages_[i];
    const F& f = field_;
    std::vector<StageCertRecord> certs;
    for (std::size_t mi = 0; mi < family_.size(); ++mi) {
      const Partition& mu = family_[mi];
      const int s = mu.sum();
      const long expected = st.shape[mi].second;  // dim Inv_mu of the covered module
      // invariant columns: per summand, per orbit; summands of shape mu first,
      // whose identity classes reproduce their x vectors and so certify fast
      std::vector<std::pair<long, long>> col_src;  // (summand, orbit)
      auto push_summand = [&](long j) {
        const auto& blk = store_.get(st.shape[st.summands[j].shape_idx].first);
        long norb = static_cast<long>(blk.orbits(mu).size());
        for (long o = 0; o < norb; ++o) col_src.emplace_back(j, o);
      };
      for (long j = 0; j < static_cast<long>(st.summands.size()); ++j)
        if (st.summands[j].shape_idx == static_cast<long>(mi)) push_summand(j);
      for (long j = 0; j < static_cast<long>(st.summands.size()); ++j)
        if (st.summands[j].shape_idx != static_cast<long>(mi)) push_summand(j);

      StageCertRecord cert{mu.str(), 0, expected};
      auto column_of = [&](long j, long o) {
        const auto& blk = store_.get(st.shape[st.summands[j].shape_idx].first);
        SparseVec<F> orbit_sum;
        for (long idx : blk.orbits(mu)[o]) orbit_sum.emplace_back(idx, f.one());
        return bd_apply_local(i, s, j, orbit_sum);
      };
      if (!need_kernel) {
        // the image lies inside Inv_mu of the covered module, so the rank can
        // never exceed `expected`; stop as soon as it is reached
        RankSink<F> sink(f, ambient_dim(i, s));
        for (const auto& [j, o] : col_src) {
          if (cert.rank == expected) break;
          if (sink.add(column_of(j, o))) ++cert.rank;
        }
      } else {
        Matrix<F> m(f, ambient_dim(i, s), static_cast<long>(col_src.size()));
        for (long c = 0; c < static_cast<long>(col_src.size()); ++c) {
          auto [j, o] = col_src[c];
          auto col = column_of(j, o);
          for (long r = 0; r < m.rows(); ++r) m.at(r, c) = col[r];
        }
        auto kb = kernel_basis(m);
        cert.rank = static_cast<long>(col_src.size() - kb.size());
        std::vector<SparseVec<F>> xs;
        xs.reserve(kb.size());
        for (const auto& kv : kb) {
          // expand invariant coordinates to cover coordinates through orbit sums
          std::map<long, typename F::Elem> acc;
          for (long c = 0; c < static_cast<long>(col_src.size()); ++c) {
            if (f.is_zero(kv[c])) continue;
            auto [j, o] = col_src[c];
            const auto& blk = store_.get(st.shape[st.summands[j].shape_idx].first);
            for (long idx : blk.orbits(mu)[o]) {
              long g = st.offsets[s][j] + idx;
              auto [it, fresh] = acc.emplace(g, kv[c]);
              if (!fresh) it->second = f.add(it->second, kv[c]);
            }
          }
          SparseVec<F> x;
          for (auto& [g, c] : acc)
            if (!f.is_zero(c)) x.emplace_back(g, c);
          xs.push_back(std::move(x));
        }
        (*kernels_out)[mi] = std::move(xs);
      }
      certs.push_back(cert);
    }
    st.certs = std::move(certs);
  }

  F field_;
  ModulePtr<F> target_;
  int B_;
  ResolverOptions opt_;
  BlockStore<F> store_;
  std::vector<Partition> family_;
  std::vector<CoverStage<F>> stages_;
};

template <class F>
PiReport relative_pi(const F& f, const ModulePtr<F>& target, int d, int B, ResolverOptions opt = {}) {
  Resolver<F> r(f, target, B, opt);
  return r.run(d);
}

template <class F>
PiReport absolute_pi(const F& f, const ModulePtr<F>& target, int d, int B, ResolverOptions opt = {}) {
  opt.absolute = true;
  Resolver<F> r(f, target, B, opt);
  return r.run(d);
}

// --- dense covers for small modules ---------------------------------------------

template <class F>
struct CoverDescription {
  std::vector<std::pair<Partition, long>> summands;
  ModulePtr<F> cover;  // (+) Gamma(lambda)^mult
  NatTransform<F> epi;
};

// The basis-indexed cover: one Gamma(lambda) summand per basis vector of
// F([s(lambda)])^{Sigma(lambda)}, mapping by the realized transformation.
template <class F>
CoverDescription<F> y_cover(const ModulePtr<F>& target, int B, bool include_empty = true) {
  const F& f = target->field();
  const int N = target->truncation();
  CoverDescription<F> out;
  std::vector<ModulePtr<F>> mods;
  std::vector<NatTransform<F>> maps;
  for (const auto& lambda : partitions_up_to(B)) {
    if (!include_empty && lambda.parts.empty()) continue;
    auto hs = hom_space(lambda, target);
    out.summands.emplace_back(lambda, static_cast<long>(hs.basis.size()));
    for (const auto& x : hs.basis) {
      maps.push_back(hs.realize(x));
      mods.push_back(hs.gamma);
    }
  }
  out.cover = direct_sum(f, mods, N);
  NatTransform<F> epi{out.cover, target, {}};
  for (int n = 0; n <= N; ++n) {
    Matrix<F> comp(f, target->dim(n), out.cover->dim(n));
    long off = 0;
    for (const auto& eta : maps) {
      const auto& blockc = eta.at(n);
      for (long r = 0; r < blockc.rows(); ++r)
        for (long c = 0; c < blockc.cols(); ++c)
          if (!f.is_zero(blockc.at(r, c))) comp.at(r, off + c) = blockc.at(r, c);
      off += blockc.cols();
    }
    epi.components.push_back(std::move(comp));
  }
  out.epi = std::move(epi);
  return out;
}

// --- dense chain complexes and pi_0 ------------------------------------------------

template <class F>
struct DenseComplex {
  std::vector<ModulePtr<F>> modules;            // Z_0..Z_L
  std::vector<NatTransform<F>> differentials;   // differentials[k]: Z_{k+1} -> Z_k
  std::optional<NatTransform<F>> augmentation;  // Z_0 -> F

  void validate() const {
    const F& f = modules.front()->field();
    for (std::size_t k = 0; k + 1 < differentials.size(); ++k) {
      auto dd = compose(differentials[k], differentials[k + 1]);
      for (int n = 0; n <= modules[0]->truncation(); ++n)
        if (!(dd.at(n) == Matrix<F>(f, dd.target->dim(n), dd.source->dim(n))))
          throw std::logic_error("boundary squared is nonzero");
    }
    if (augmentation && !differentials.empty()) {
      auto ad = compose(*augmentation, differentials[0]);
      for (int n = 0; n <= modules[0]->truncation(); ++n)
        if (!(ad.at(n) == Matrix<F>(f, ad.target->dim(n), ad.source->dim(n))))
          throw std::logic_error("augmentation does not kill the first boundary");
    }
  }
};

template <class F>
struct Pi0Complex {
  std::vector<QuotientPresentation<F>> spaces;
  std::vector<Matrix<F>> differentials;  // induced, differentials[k]: space k+1 -> space k

  std::vector<long> homology() const {
    std::vector<long> h;
    for (std::size_t k = 0; k < spaces.size(); ++k) {
      long dim = spaces[k].dim();
      long rin = k < differentials.size() ? rank_of(differentials[k]) : 0;
      long rout = k > 0 ? rank_of(differentials[k - 1]) : 0;
      h.push_back(dim - rin - rout);
    }
    return h;
  }
};

template <class F>
Pi0Complex<F> apply_pi0(const DenseComplex<F>& c) {
  const F& f = c.modules.front()->field();
  Pi0Complex<F> out;
  for (const auto& m : c.modules) out.spaces.push_back(pi0(*m));
  for (std::size_t k = 0; k < c.differentials.size(); ++k) {
    const auto& d = c.differentials[k];
    out.differentials.push_back(
        mat_mul(out.spaces[k].projection, mat_mul(d.at(1), out.spaces[k + 1].section)));
  }
  // boundary squared stays zero after pi_0
  for (std::size_t k = 0; k + 1 < out.differentials.size(); ++k) {
    auto z = mat_mul(out.differentials[k], out.differentials[k + 1]);
    if (!(z == Matrix<F>(f, z.rows(), z.cols()))) throw std::logic_error("pi0 complex: boundary squared nonzero");
  }
  return out;
}

}  // namespace gaq
