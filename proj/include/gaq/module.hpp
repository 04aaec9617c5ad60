#pragma once

// Truncated Gamma-modules with dense level spaces and lazily cached actions,
// natural transformations, the representables Gamma^n, the coinvariant
// quotients Gamma(lambda), pi_0 and the Y-class predicates.

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gaq/matrix.hpp"
#include "gaq/pointed.hpp"

namespace gaq {

struct TruncationError : std::runtime_error {
  explicit TruncationError(const std::string& what) : std::runtime_error(what) {}
};

// A covariant functor Gamma -> Vect known on levels 0..N. The action rule is
// fixed at construction; computed actions are memoized (write-once table,
// concurrent readers safe).
template <class F>
class GammaModule {
 public:
  using ActionRule = std::function<Matrix<F>(const PointedMap&)>;
  // optional column evaluation: image of a single basis vector, bypassing the
  // matrix cache (the resolution engine applies many distinct maps once each)
  using ColumnRule = std::function<SparseVec<F>(const PointedMap&, long)>;

  GammaModule(F f, int truncation, std::vector<LabeledSpace> levels, ActionRule rule, std::string name,
              ColumnRule column_rule = nullptr)
      : field_(std::move(f)),
        truncation_(truncation),
        levels_(std::move(levels)),
        rule_(std::move(rule)),
        column_rule_(std::move(column_rule)),
        name_(std::move(name)) {
    if (static_cast<int>(levels_.size()) != truncation_ + 1)
      throw std::invalid_argument("level count does not match truncation");
  }

  const F& field() const { return field_; }
  int truncation() const { return truncation_; }
  const std::string& name() const { return name_; }

  const LabeledSpace& space(int n) const {
    check_level(n);
    return levels_[n];
  }
  long dim(int n) const { return space(n).dim(); }

  const Matrix<F>& action(const PointedMap& f) const {
    check_level(f.source());
    check_level(f.target);
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(f);
    if (it != cache_.end()) return it->second;
    Matrix<F> m = rule_(f);
    if (m.rows() != dim(f.target) || m.cols() != dim(f.source()))
      throw std::logic_error("action rule produced wrong shape for " + f.str());
    return cache_.emplace(f, std::move(m)).first->second;
  }

  Vec<F> apply(const PointedMap& f, const Vec<F>& v) const { return action(f).apply(v); }

  SparseVec<F> action_column(const PointedMap& f, long col) const {
    if (column_rule_) {
      check_level(f.source());
      check_level(f.target);
      return column_rule_(f, col);
    }
    return to_sparse(field_, action(f).column(col));
  }

 private:
  void check_level(int n) const {
    if (n < 0 || n > truncation_)
      throw TruncationError(name_ + ": level " + std::to_string(n) + " outside truncation " + std::to_string(truncation_));
  }

  F field_;
  int truncation_;
  std::vector<LabeledSpace> levels_;
  ActionRule rule_;
  ColumnRule column_rule_;
  std::string name_;
  mutable std::mutex mutex_;
  mutable std::map<PointedMap, Matrix<F>> cache_;
};

template <class F>
using ModulePtr = std::shared_ptr<const GammaModule<F>>;

// --- representables and friends ------------------------------------------------

inline long pointed_map_index(const PointedMap& f) {
  long idx = 0;
  for (int v : f.images) idx = idx * (f.target + 1) + v;
  return idx;
}

inline PointedMap pointed_map_from_index(int n, int m, long idx) {
  std::vector<int> im(n);
  for (int i = n - 1; i >= 0; --i) {
    im[i] = static_cast<int>(idx % (m + 1));
    idx /= (m + 1);
  }
  return {m, std::move(im)};
}

inline std::string images_label(const std::vector<int>& images) {
  std::string s = "[";
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(images[i]);
  }
  return s + "]";
}

// Gamma^n = K[Hom([n], -)], the projective generators. Basis of level m is
// Hom([n],[m]) in lexicographic order; maps act by postcomposition.
template <class F>
ModulePtr<F> representable(const F& f, int n, int N) {
  if (n > N) throw TruncationError("representable: n exceeds truncation");
  std::vector<LabeledSpace> levels;
  for (int m = 0; m <= N; ++m) {
    std::vector<std::string> labels;
    for (const auto& h : enumerate_maps(n, m)) labels.push_back(images_label(h.images));
    levels.emplace_back(std::move(labels));
  }
  auto rule = [f, n](const PointedMap& g) {
    auto dom = enumerate_maps(n, g.source());
    long rows = 1;
    for (int i = 0; i < n; ++i) rows *= (g.target + 1);
    Matrix<F> m(f, rows, static_cast<long>(dom.size()));
    for (long j = 0; j < static_cast<long>(dom.size()); ++j)
      m.at(pointed_map_index(compose(g, dom[j])), j) = f.one();
    return m;
  };
  auto column = [f, n](const PointedMap& g, long j) {
    auto h = pointed_map_from_index(n, g.source(), j);
    return SparseVec<F>{{pointed_map_index(compose(g, h)), f.one()}};
  };
  return std::make_shared<GammaModule<F>>(f, N, std::move(levels), rule, "Gamma^" + std::to_string(n),
                                          column);
}

// --- natural transformations ----------------------------------------------------

template <class F>
struct NatTransform {
  ModulePtr<F> source;
  ModulePtr<F> target;
  std::vector<Matrix<F>> components;  // one per level 0..N

  const Matrix<F>& at(int n) const { return components.at(n); }
  int truncation() const { return source->truncation(); }

  // exhaustive check of every naturality square with levels <= depth
  bool natural(int depth) const {
    const F& f = source->field();
    for (int a = 0; a <= depth; ++a)
      for (int b = 0; b <= depth; ++b)
        for (const auto& g : enumerate_maps(a, b)) {
          auto lhs = mat_mul(components[b], source->action(g));
          auto rhs = mat_mul(target->action(g), components[a]);
          if (!(lhs == rhs)) return false;
        }
    return true;
  }
};

template <class F>
NatTransform<F> identity_transform(const ModulePtr<F>& m) {
  NatTransform<F> t{m, m, {}};
  for (int n = 0; n <= m->truncation(); ++n)
    t.components.push_back(Matrix<F>::identity(m->field(), m->dim(n)));
  return t;
}

template <class F>
NatTransform<F> zero_transform(const ModulePtr<F>& src, const ModulePtr<F>& dst) {
  NatTransform<F> t{src, dst, {}};
  for (int n = 0; n <= src->truncation(); ++n)
    t.components.push_back(Matrix<F>(src->field(), dst->dim(n), src->dim(n)));
  return t;
}

template <class F>
NatTransform<F> compose(const NatTransform<F>& outer, const NatTransform<F>& inner) {
  NatTransform<F> t{inner.source, outer.target, {}};
  for (int n = 0; n <= inner.truncation(); ++n)
    t.components.push_back(mat_mul(outer.components[n], inner.components[n]));
  return t;
}

// --- coinvariant quotients Gamma(lambda) ----------------------------------------

template <class F>
struct QuotientLevels {
  std::vector<QuotientPresentation<F>> pres;  // per level
};

inline std::string gamma_lambda_label(const Partition& lambda, const std::vector<int>& images) {
  std::string s = "[";
  int pos = 0;
  for (int b = 0; b < lambda.count(); ++b) {
    if (b) s += "|";
    for (int i = 0; i < lambda.parts[b]; ++i) {
      if (i) s += ",";
      s += std::to_string(images[pos++]);
    }
  }
  return s + "]";
}

// Gamma(lambda): coinvariants of Gamma^{s(lambda)} under Sigma(lambda) acting
// by precomposition. Surviving basis labels are the lexicographically least
// orbit representatives (images sorted within blocks).
template <class F>
ModulePtr<F> gamma_lambda(const F& f, const Partition& lambda, int N) {
  const int s = lambda.sum();
  if (s > N) throw TruncationError("gamma_lambda: s(lambda) exceeds truncation");
  auto rep = representable(f, s, N);
  auto gens = young_generators(lambda);
  auto shared = std::make_shared<QuotientLevels<F>>();
  std::vector<LabeledSpace> levels;
  for (int m = 0; m <= N; ++m) {
    std::vector<Matrix<F>> pre;
    pre.reserve(gens.size());
    for (const auto& sigma : gens) {
      // precomposition by sigma permutes Hom([s],[m])
      auto maps = enumerate_maps(s, m);
      Matrix<F> p(f, static_cast<long>(maps.size()), static_cast<long>(maps.size()));
      for (long j = 0; j < static_cast<long>(maps.size()); ++j)
        p.at(pointed_map_index(compose(maps[j], sigma)), j) = f.one();
      pre.push_back(std::move(p));
    }
    auto q = coinvariants(f, rep->dim(m), pre);
    std::vector<std::string> labels;
    auto maps = enumerate_maps(s, m);
    for (long idx : q.surviving) labels.push_back(gamma_lambda_label(lambda, maps[idx].images));
    shared->pres.push_back(std::move(q));
    levels.emplace_back(std::move(labels));
  }
  auto rule = [rep, shared](const PointedMap& g) {
    const auto& pn = shared->pres[g.source()];
    const auto& pm = shared->pres[g.target];
    return mat_mul(pm.projection, mat_mul(rep->action(g), pn.section));
  };
  return std::make_shared<GammaModule<F>>(f, N, std::move(levels), rule, "Gamma" + lambda.str());
}

// Pointwise tensor product (F (x) T)([n]) = F([n]) (x) T([n]).
template <class F>
ModulePtr<F> pointwise_tensor(const ModulePtr<F>& a, const ModulePtr<F>& b) {
  if (a->truncation() != b->truncation()) throw TruncationError("pointwise_tensor: truncation mismatch");
  const F& f = a->field();
  const int N = a->truncation();
  std::vector<LabeledSpace> levels;
  for (int n = 0; n <= N; ++n) {
    std::vector<std::string> labels;
    for (const auto& la : a->space(n).labels)
      for (const auto& lb : b->space(n).labels) labels.push_back("(" + la + "|" + lb + ")");
    levels.emplace_back(std::move(labels));
  }
  auto rule = [a, b, f](const PointedMap& g) {
    const auto& ma = a->action(g);
    const auto& mb = b->action(g);
    Matrix<F> m(f, ma.rows() * mb.rows(), ma.cols() * mb.cols());
    for (long ra = 0; ra < ma.rows(); ++ra)
      for (long ca = 0; ca < ma.cols(); ++ca) {
        if (f.is_zero(ma.at(ra, ca))) continue;
        for (long rb = 0; rb < mb.rows(); ++rb)
          for (long cb = 0; cb < mb.cols(); ++cb)
            if (!f.is_zero(mb.at(rb, cb)))
              m.at(ra * mb.rows() + rb, ca * mb.cols() + cb) = f.mul(ma.at(ra, ca), mb.at(rb, cb));
      }
    return m;
  };
  return std::make_shared<GammaModule<F>>(f, N, std::move(levels), rule,
                                          a->name() + "(x)" + b->name());
}

// Direct sum with block coordinates in summand order.
template <class F>
ModulePtr<F> direct_sum(const F& f, std::vector<ModulePtr<F>> summands, int N) {
  std::vector<LabeledSpace> levels;
  for (int n = 0; n <= N; ++n) {
    std::vector<std::string> labels;
    for (std::size_t s = 0; s < summands.size(); ++s)
      for (const auto& l : summands[s]->space(n).labels)
        labels.push_back("s" + std::to_string(s) + ":" + l);
    levels.emplace_back(std::move(labels));
  }
  auto shared = std::make_shared<std::vector<ModulePtr<F>>>(std::move(summands));
  auto rule = [shared, f](const PointedMap& g) {
    long rows = 0, cols = 0;
    for (const auto& s : *shared) {
      rows += s->dim(g.target);
      cols += s->dim(g.source());
    }
    Matrix<F> m(f, rows, cols);
    long ro = 0, co = 0;
    for (const auto& s : *shared) {
      const auto& blk = s->action(g);
      for (long r = 0; r < blk.rows(); ++r)
        for (long c = 0; c < blk.cols(); ++c)
          if (!f.is_zero(blk.at(r, c))) m.at(ro + r, co + c) = blk.at(r, c);
      ro += blk.rows();
      co += blk.cols();
    }
    return m;
  };
  return std::make_shared<GammaModule<F>>(f, N, std::move(levels), rule, "direct-sum");
}

// --- invariants, hom spaces, pi_0 ----------------------------------------------

// Basis of F([n])^{Sigma(lambda)}; requires s(lambda) = n.
template <class F>
std::vector<Vec<F>> module_invariants(const GammaModule<F>& mod, int n, const Partition& lambda) {
  if (lambda.sum() != n) throw std::invalid_argument("module_invariants: s(lambda) != level");
  std::vector<Matrix<F>> gens;
  for (const auto& g : young_generators(lambda)) gens.push_back(mod.action(g));
  return invariants(mod.field(), mod.dim(n), gens);
}

// Hom(Gamma(lambda), F) realized through F([s])^{Sigma(lambda)}: an invariant
// vector x defines the transformation [f] -> F(f)(x).
template <class F>
struct HomSpace {
  Partition lambda;
  ModulePtr<F> gamma;  // Gamma(lambda)
  ModulePtr<F> target;
  std::vector<Vec<F>> basis;  // invariant vectors in F([s(lambda)])

  NatTransform<F> realize(const Vec<F>& x) const {
    const F& f = target->field();
    const int s = lambda.sum();
    // reject non-fixed elements
    for (const auto& g : young_generators(lambda)) {
      auto gx = target->apply(g, x);
      for (long i = 0; i < static_cast<long>(x.size()); ++i)
        if (!f.eq(gx[i], x[i])) throw std::invalid_argument("hom_space: element is not Sigma(lambda)-fixed");
    }
    NatTransform<F> t{gamma, target, {}};
    for (int m = 0; m <= target->truncation(); ++m) {
      Matrix<F> comp(f, target->dim(m), gamma->dim(m));
      long col = 0;
      // surviving labels of Gamma(lambda) are canonical orbit representatives,
      // listed in the same order as the level basis
      for (const auto& rep_images : gamma_level_reps(m)) {
        PointedMap pm{m, rep_images};
        auto v = target->apply(pm, x);
        for (long r = 0; r < comp.rows(); ++r) comp.at(r, col) = v[r];
        ++col;
      }
      t.components.push_back(std::move(comp));
    }
    return t;
  }

  // canonical representatives backing the Gamma(lambda) basis at level m
  std::vector<std::vector<int>> gamma_level_reps(int m) const {
    std::vector<std::vector<int>> reps;
    for (const auto& h : enumerate_maps(lambda.sum(), m)) {
      if (canonical_rep(lambda, h.images) == h.images) reps.push_back(h.images);
    }
    return reps;
  }
};

template <class F>
HomSpace<F> hom_space(const Partition& lambda, const ModulePtr<F>& target) {
  const int s = lambda.sum();
  if (s > target->truncation()) throw TruncationError("hom_space: s(lambda) exceeds truncation");
  HomSpace<F> h;
  h.lambda = lambda;
  h.gamma = gamma_lambda(target->field(), lambda, target->truncation());
  h.target = target;
  h.basis = module_invariants(*target, s, lambda);
  return h;
}

// pi_0(F) = Coker(d0 - d1 + d2 : F([2]) -> F([1])).
template <class F>
Matrix<F> pi0_delta(const GammaModule<F>& mod) {
  if (mod.truncation() < 2) throw TruncationError("pi0: truncation below 2");
  const F& f = mod.field();
  auto d = mod.action(face_d0());
  d = mat_add(d, mod.action(face_d1()), f.neg(f.one()));
  d = mat_add(d, mod.action(face_d2()), f.one());
  return d;
}

template <class F>
QuotientPresentation<F> pi0(const GammaModule<F>& mod) {
  return cokernel(pi0_delta(mod));
}

// --- Y-epimorphisms --------------------------------------------------------------

template <class F>
struct YEpiResult {
  bool ok = true;
  std::optional<Partition> offending;
  std::optional<Vec<F>> unhit;  // target invariant vector outside the image
};

// eta is a Y-epimorphism up to bound B iff for every partition lambda with
// s(lambda) <= B the induced map on Sigma(lambda)-invariants is surjective.
template <class F>
YEpiResult<F> is_y_epi(const NatTransform<F>& eta, int B, bool include_empty = true) {
  const F& f = eta.source->field();
  if (B > eta.truncation()) throw TruncationError("is_y_epi: bound exceeds truncation");
  for (const auto& lambda : partitions_up_to(B)) {
    if (!include_empty && lambda.parts.empty()) continue;
    const int n = lambda.sum();
    auto src_inv = module_invariants(*eta.source, n, lambda);
    auto tgt_inv = module_invariants(*eta.target, n, lambda);
    if (tgt_inv.empty()) continue;
    DenseRankAccumulator<F> acc(f, eta.target->dim(n));
    for (const auto& s : src_inv) acc.add(eta.components[n].apply(s));
    for (const auto& t : tgt_inv) {
      if (acc.add(t)) return {false, lambda, t};
    }
  }
  return {};
}

// Lift a morphism g: Gamma(lambda) -> T through a Y-epimorphism f: F -> T.
// Morphisms out of Gamma(lambda) are invariant vectors; the lift exists iff
// the defining vector of g has an invariant preimage. Absence is a
// Y-projectivity counterexample for f.
template <class F>
std::optional<Vec<F>> lift_through(const NatTransform<F>& f_epi, const Partition& lambda,
                                   const Vec<F>& g_vector) {
  const F& f = f_epi.source->field();
  const int s = lambda.sum();
  auto src_inv = module_invariants(*f_epi.source, s, lambda);
  Matrix<F> m(f, f_epi.target->dim(s), static_cast<long>(src_inv.size()));
  for (long c = 0; c < static_cast<long>(src_inv.size()); ++c) {
    auto img = f_epi.components[s].apply(src_inv[c]);
    for (long r = 0; r < m.rows(); ++r) m.at(r, c) = img[r];
  }
  auto coeffs = solve(m, g_vector);
  if (!coeffs) return std::nullopt;
  Vec<F> lift(f_epi.source->dim(s), f.zero());
  for (long c = 0; c < static_cast<long>(src_inv.size()); ++c)
    for (long r = 0; r < f_epi.source->dim(s); ++r)
      f.add_assign(lift[r], f.mul((*coeffs)[c], src_inv[c][r]));
  return lift;
}

// --- kernel and quotient modules --------------------------------------------------

template <class F>
struct SubquotientModule {
  ModulePtr<F> module;
  NatTransform<F> map;  // inclusion (kernel) or projection (quotient)
};

// Level-wise kernels with the restricted action. Kernel bases come from the
// rref so coordinates of a kernel vector are its entries at free coordinates.
template <class F>
SubquotientModule<F> kernel_module(const NatTransform<F>& eta) {
  const F& f = eta.source->field();
  const int N = eta.truncation();
  auto bases = std::make_shared<std::vector<std::vector<Vec<F>>>>();
  auto free_idx = std::make_shared<std::vector<std::vector<long>>>();
  std::vector<LabeledSpace> levels;
  std::vector<Matrix<F>> incl;
  for (int n = 0; n <= N; ++n) {
    auto kb = kernel_basis(eta.components[n]);
    // free coordinates are the non-pivot columns, in increasing order; kernel
    // coordinates of any v in the kernel are its entries at these positions
    auto rr = rref(eta.components[n]);
    std::vector<bool> is_pivot(eta.source->dim(n), false);
    for (long p : rr.pivots) is_pivot[p] = true;
    std::vector<long> free;
    for (long c = 0; c < eta.source->dim(n); ++c)
      if (!is_pivot[c]) free.push_back(c);
    Matrix<F> inc = Matrix<F>::from_columns(f, eta.source->dim(n), kb);
    incl.push_back(inc);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < kb.size(); ++i)
      labels.push_back("k(" + eta.source->space(n).labels[free[i]] + ")");
    levels.emplace_back(std::move(labels));
    bases->push_back(std::move(kb));
    free_idx->push_back(std::move(free));
  }
  auto src = eta.source;
  auto rule = [src, bases, free_idx, f](const PointedMap& g) {
    const auto& bn = (*bases)[g.source()];
    const auto& fm = (*free_idx)[g.target];
    Matrix<F> m(f, static_cast<long>(fm.size()), static_cast<long>(bn.size()));
    for (long j = 0; j < static_cast<long>(bn.size()); ++j) {
      auto img = src->apply(g, bn[j]);
      for (long i = 0; i < static_cast<long>(fm.size()); ++i) m.at(i, j) = img[fm[i]];
    }
    return m;
  };
  auto ker = std::make_shared<GammaModule<F>>(f, N, std::move(levels), rule, "Ker(" + src->name() + ")");
  NatTransform<F> inclusion{ker, src, std::move(incl)};
  return {ker, std::move(inclusion)};
}

// Level-wise cokernels with the induced action.
template <class F>
SubquotientModule<F> quotient_module(const NatTransform<F>& eta) {
  const F& f = eta.source->field();
  const int N = eta.truncation();
  auto pres = std::make_shared<std::vector<QuotientPresentation<F>>>();
  std::vector<LabeledSpace> levels;
  std::vector<Matrix<F>> proj;
  for (int n = 0; n <= N; ++n) {
    auto q = cokernel(eta.components[n]);
    std::vector<std::string> labels;
    for (long s : q.surviving) labels.push_back("q(" + eta.target->space(n).labels[s] + ")");
    proj.push_back(q.projection);
    pres->push_back(std::move(q));
    levels.emplace_back(std::move(labels));
  }
  auto tgt = eta.target;
  auto rule = [tgt, pres](const PointedMap& g) {
    const auto& qn = (*pres)[g.source()];
    const auto& qm = (*pres)[g.target];
    return mat_mul(qm.projection, mat_mul(tgt->action(g), qn.section));
  };
  auto quo = std::make_shared<GammaModule<F>>(f, N, std::move(levels), rule, "Coker(" + tgt->name() + ")");
  NatTransform<F> projection{tgt, quo, std::move(proj)};
  return {quo, std::move(projection)};
}

// eta is a Y-monomorphism iff it is level-wise injective and the projection
// onto its cokernel is a Y-epimorphism.
template <class F>
YEpiResult<F> is_y_mono(const NatTransform<F>& eta, int B) {
  for (int n = 0; n <= eta.truncation(); ++n)
    if (rank_of(eta.components[n]) != eta.source->dim(n))
      return {false, std::nullopt, std::nullopt};
  auto quo = quotient_module(eta);
  return is_y_epi(quo.map, B);
}

// --- functoriality check -----------------------------------------------------------

template <class F>
struct FunctorialityResult {
  bool ok = true;
  std::optional<std::pair<PointedMap, PointedMap>> counterexample;
};

template <class F>
FunctorialityResult<F> check_functoriality_exhaustive(const GammaModule<F>& mod, int depth) {
  for (int n = 0; n <= depth; ++n) {
    auto id = PointedMap::identity(n);
    if (!(mod.action(id) == Matrix<F>::identity(mod.field(), mod.dim(n))))
      return {false, std::make_pair(id, id)};
  }
  for (int a = 0; a <= depth; ++a)
    for (int b = 0; b <= depth; ++b)
      for (int c = 0; c <= depth; ++c)
        for (const auto& f1 : enumerate_maps(a, b))
          for (const auto& g1 : enumerate_maps(b, c)) {
            auto lhs = mod.action(compose(g1, f1));
            auto rhs = mat_mul(mod.action(g1), mod.action(f1));
            if (!(lhs == rhs)) return {false, std::make_pair(f1, g1)};
          }
  return {};
}

template <class F>
FunctorialityResult<F> check_functoriality(const GammaModule<F>& mod, int trials, unsigned seed = 12345) {
  if (trials < 1) throw std::invalid_argument("check_functoriality: trials must be >= 1");
  const int N = mod.truncation();
  std::mt19937 rng(seed);
  auto rnd_level = [&](int lo) { return lo + static_cast<int>(rng() % (N - lo + 1)); };
  for (int n = 0; n <= N; ++n) {
    auto id = PointedMap::identity(n);
    if (!(mod.action(id) == Matrix<F>::identity(mod.field(), mod.dim(n))))
      return {false, std::make_pair(id, id)};
  }
  for (int t = 0; t < trials; ++t) {
    int a = rnd_level(0), b = rnd_level(0), c = rnd_level(0);
    auto rnd_map = [&](int s, int tg) {
      std::vector<int> im(s);
      for (int i = 0; i < s; ++i) im[i] = static_cast<int>(rng() % (tg + 1));
      return PointedMap{tg, std::move(im)};
    };
    auto f1 = rnd_map(a, b);
    auto g1 = rnd_map(b, c);
    auto lhs = mod.action(compose(g1, f1));
    auto rhs = mat_mul(mod.action(g1), mod.action(f1));
    if (!(lhs == rhs)) return {false, std::make_pair(f1, g1)};
  }
  return {};
}

}  // namespace gaq
