#pragma once

// Structured per-partition data for the Y-projective blocks Gamma(lambda):
// canonical bases, label-level actions, the pi_0 boundary and Young-orbit
// invariants. The resolution engine composes covers out of these blocks
// without materializing dense level spaces.

#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "gaq/module.hpp"

namespace gaq {

// Basis labels of Gamma(lambda)([m]) are canonical orbit representatives of
// Hom([s],[m]) under Sigma(lambda)-precomposition: image tuples sorted within
// blocks, listed in lexicographic order.
template <class F>
class LambdaBlock {
 public:
  LambdaBlock(F f, Partition lambda, int N) : field_(std::move(f)), lambda_(std::move(lambda)), N_(N) {
    const int s = lambda_.sum();
    basis_.resize(N + 1);
    keys_.resize(N + 1);
    for (int m = 0; m <= N; ++m) {
      for (const auto& h : enumerate_maps(s, m))
        if (canonical_rep(lambda_, h.images) == h.images) {
          basis_[m].push_back(h.images);
          keys_[m].push_back(pack(h.images, m));
        }
    }
    build_delta();
  }

  const Partition& lambda() const { return lambda_; }
  int sum() const { return lambda_.sum(); }
  int truncation() const { return N_; }
  long dim(int m) const { return static_cast<long>(basis_[m].size()); }
  const std::vector<int>& rep(int m, long idx) const { return basis_[m][idx]; }

  long index_of(int m, const std::vector<int>& images) const {
    auto key = pack(images, m);
    auto it = std::lower_bound(keys_[m].begin(), keys_[m].end(), key);
    return static_cast<long>(it - keys_[m].begin());
  }

  // action on a basis label: postcompose and canonicalize
  long act(const PointedMap& g, int m_from, long idx) const {
    const auto& images = basis_[m_from][idx];
    std::vector<int> out(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) out[i] = g(images[i]);
    return index_of(g.target, canonical_rep(lambda_, out));
  }

  // pi_0 boundary d0 - d1 + d2 : level 2 -> level 1, sparse columns
  const std::vector<SparseVec<F>>& delta_columns() const { return delta_cols_; }
  long rank_delta() const { return rank_delta_; }
  long pi0_dim() const { return dim(1) - rank_delta_; }
  const std::vector<SparseVec<F>>& delta_kernel() const { return delta_kernel_; }

  // Sigma(mu)-orbits of the basis at level s(mu) under postcomposition; the
  // orbit sums are an invariant basis over any field.
  const std::vector<std::vector<long>>& orbits(const Partition& mu) const {
    auto it = orbit_cache_.find(mu);
    if (it != orbit_cache_.end()) return it->second;
    const int m = mu.sum();
    const long d = dim(m);
    auto gens = young_generators(mu);
    std::vector<long> orbit_id(d, -1);
    std::vector<std::vector<long>> orbits;
    for (long i = 0; i < d; ++i) {
      if (orbit_id[i] >= 0) continue;
      std::vector<long> orbit{i};
      orbit_id[i] = static_cast<long>(orbits.size());
      for (std::size_t q = 0; q < orbit.size(); ++q)
        for (const auto& g : gens) {
          long j = act(g, m, orbit[q]);
          if (orbit_id[j] < 0) {
            orbit_id[j] = orbit_id[i];
            orbit.push_back(j);
          }
        }
      std::sort(orbit.begin(), orbit.end());
      orbits.push_back(std::move(orbit));
    }
    return orbit_cache_.emplace(mu, std::move(orbits)).first->second;
  }

  long invariant_dim(const Partition& mu) const { return static_cast<long>(orbits(mu).size()); }

 private:
  static std::uint64_t pack(const std::vector<int>& images, int) {
    std::uint64_t k = 0;
    for (int v : images) k = (k << 8) | static_cast<std::uint64_t>(v + 1);
    return k;
  }

  void build_delta() {
    const F& f = field_;
    if (N_ < 2) {
      rank_delta_ = 0;
      return;
    }
    const PointedMap d0 = face_d0(), d1 = face_d1(), d2 = face_d2();
    delta_cols_.resize(dim(2));
    for (long c = 0; c < dim(2); ++c) {
      std::map<long, typename F::Elem> acc;
      auto bump = [&](long row, const typename F::Elem& v) {
        auto [it, fresh] = acc.emplace(row, v);
        if (!fresh) it->second = f.add(it->second, v);
      };
      bump(act(d0, 2, c), f.one());
      bump(act(d1, 2, c), f.neg(f.one()));
      bump(act(d2, 2, c), f.one());
      for (auto& [row, v] : acc)
        if (!f.is_zero(v)) delta_cols_[c].emplace_back(row, v);
    }
    Matrix<F> delta(f, dim(1), dim(2));
    for (long c = 0; c < dim(2); ++c)
      for (auto& [r, v] : delta_cols_[c]) delta.at(r, c) = v;
    rank_delta_ = rank_of(delta);
    for (auto& kv : kernel_basis(delta)) delta_kernel_.push_back(to_sparse(f, kv));
  }

  F field_;
  Partition lambda_;
  int N_;
  std::vector<std::vector<std::vector<int>>> basis_;  // per level
  std::vector<std::vector<std::uint64_t>> keys_;
  std::vector<SparseVec<F>> delta_cols_;
  std::vector<SparseVec<F>> delta_kernel_;
  long rank_delta_ = 0;
  mutable std::map<Partition, std::vector<std::vector<long>>> orbit_cache_;
};

template <class F>
class BlockStore {
 public:
  BlockStore(F f, int N) : field_(std::move(f)), N_(N) {}

  const LambdaBlock<F>& get(const Partition& lambda) {
    auto it = blocks_.find(lambda);
    if (it != blocks_.end()) return *it->second;
    auto blk = std::make_unique<LambdaBlock<F>>(field_, lambda, N_);
    return *blocks_.emplace(lambda, std::move(blk)).first->second;
  }
  int truncation() const { return N_; }
  const F& field() const { return field_; }

 private:
  F field_;
  int N_;
  std::map<Partition, std::unique_ptr<LambdaBlock<F>>> blocks_;
};

}  // namespace gaq
