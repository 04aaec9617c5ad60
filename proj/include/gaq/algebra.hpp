#pragma once

// Finite-dimensional commutative algebras with explicit structure constants,
// modules over them, the Gamma-module L(A,M), Kaehler differentials and the
// low-degree classical Andre-Quillen oracle (conormal sequence).

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gaq/module.hpp"

namespace gaq {

struct ResourceError : std::runtime_error {
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

template <class F>
struct FiniteAlgebra {
  F field;
  std::string name;
  std::vector<std::string> basis;
  std::vector<std::vector<Vec<F>>> structure;  // structure[i][j] = a_i * a_j
  Vec<F> unit;

  long dim() const { return static_cast<long>(basis.size()); }

  Vec<F> mul_basis(long i, long j) const { return structure[i][j]; }

  Vec<F> mul_vec(const Vec<F>& a, const Vec<F>& b) const {
    const F& f = field;
    Vec<F> out(dim(), f.zero());
    for (long i = 0; i < dim(); ++i) {
      if (f.is_zero(a[i])) continue;
      for (long j = 0; j < dim(); ++j) {
        if (f.is_zero(b[j])) continue;
        const auto c = f.mul(a[i], b[j]);
        for (long k = 0; k < dim(); ++k)
          if (!f.is_zero(structure[i][j][k])) f.add_assign(out[k], f.mul(c, structure[i][j][k]));
      }
    }
    return out;
  }

  long basis_index(const std::string& label) const {
    for (long i = 0; i < dim(); ++i)
      if (basis[i] == label) return i;
    return -1;
  }
};

template <class F>
using AlgebraPtr = std::shared_ptr<const FiniteAlgebra<F>>;

// Returns an empty optional when valid, otherwise a description of the
// violated axiom.
template <class F>
std::optional<std::string> validate_algebra(const FiniteAlgebra<F>& a) {
  const F& f = a.field;
  const long d = a.dim();
  if (static_cast<long>(a.unit.size()) != d) return "unit vector has wrong dimension";
  if (static_cast<long>(a.structure.size()) != d) return "structure table has wrong shape";
  for (long i = 0; i < d; ++i) {
    if (static_cast<long>(a.structure[i].size()) != d) return "structure table has wrong shape";
    for (long j = 0; j < d; ++j)
      if (static_cast<long>(a.structure[i][j].size()) != d) return "structure table has wrong shape";
  }
  for (long i = 0; i < d; ++i)
    for (long j = i + 1; j < d; ++j)
      for (long k = 0; k < d; ++k)
        if (!f.eq(a.structure[i][j][k], a.structure[j][i][k]))
          return "commutativity fails at (" + std::to_string(i) + "," + std::to_string(j) + ")";
  for (long i = 0; i < d; ++i) {
    Vec<F> ei(d, f.zero());
    ei[i] = f.one();
    auto ui = a.mul_vec(a.unit, ei);
    for (long k = 0; k < d; ++k)
      if (!f.eq(ui[k], ei[k])) return "unit axiom fails at basis element " + std::to_string(i);
  }
  for (long i = 0; i < d; ++i)
    for (long j = 0; j < d; ++j)
      for (long k = 0; k < d; ++k) {
        Vec<F> ek(d, f.zero());
        ek[k] = f.one();
        auto lhs = a.mul_vec(a.structure[i][j], ek);
        Vec<F> ei(d, f.zero());
        ei[i] = f.one();
        auto rhs = a.mul_vec(ei, a.structure[j][k]);
        for (long t = 0; t < d; ++t)
          if (!f.eq(lhs[t], rhs[t]))
            return "associativity fails at (" + std::to_string(i) + "," + std::to_string(j) + "," +
                   std::to_string(k) + ")";
      }
  return std::nullopt;
}

template <class F>
struct FiniteModule {
  AlgebraPtr<F> over;
  std::string name;
  std::vector<std::string> basis;
  std::vector<Matrix<F>> action;  // one matrix per algebra basis element

  long dim() const { return static_cast<long>(basis.size()); }

  Matrix<F> act_of(const Vec<F>& alg_elem) const {
    const F& f = over->field;
    Matrix<F> m(f, dim(), dim());
    for (long i = 0; i < over->dim(); ++i) {
      if (f.is_zero(alg_elem[i])) continue;
      for (long r = 0; r < dim(); ++r)
        for (long c = 0; c < dim(); ++c)
          if (!f.is_zero(action[i].at(r, c))) f.add_assign(m.at(r, c), f.mul(alg_elem[i], action[i].at(r, c)));
    }
    return m;
  }
};

template <class F>
std::optional<std::string> validate_module(const FiniteModule<F>& m) {
  const F& f = m.over->field;
  const long d = m.dim();
  if (static_cast<long>(m.action.size()) != m.over->dim()) return "module action table has wrong shape";
  for (const auto& a : m.action)
    if (a.rows() != d || a.cols() != d) return "module action matrix has wrong shape";
  if (!(m.act_of(m.over->unit) == Matrix<F>::identity(f, d))) return "unit does not act as the identity";
  for (long i = 0; i < m.over->dim(); ++i)
    for (long j = 0; j < m.over->dim(); ++j) {
      auto lhs = mat_mul(m.action[i], m.action[j]);
      auto rhs = m.act_of(m.over->structure[i][j]);
      if (!(lhs == rhs))
        return "action is not multiplicative at (" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
  return std::nullopt;
}

// --- the functor L(A, M) ---------------------------------------------------------

// L(A,M)([n]) = M (x) A^{(x) n}. A pointed map f multiplies into slot j all
// tensor factors i with f(i) = j; slot 0 is the M-slot and empty products give
// the unit.
template <class F>
ModulePtr<F> build_lam(const AlgebraPtr<F>& alg, const std::shared_ptr<const FiniteModule<F>>& mod,
                       int N, long dim_cap = 50000000) {
  const F f = alg->field;
  const long da = alg->dim();
  const long dm = mod->dim();
  std::vector<LabeledSpace> levels;
  {
    long dim = dm;
    for (int n = 0; n <= N; ++n) {
      if (dim > dim_cap)
        throw ResourceError("L(A,M) level " + std::to_string(n) + " dimension " + std::to_string(dim) +
                            " exceeds cap " + std::to_string(dim_cap));
      std::vector<std::string> labels(dim);
      for (long idx = 0; idx < dim; ++idx) {
        long rest = idx;
        std::vector<long> digits(n);
        for (int s = n - 1; s >= 0; --s) {
          digits[s] = rest % da;
          rest /= da;
        }
        std::string l = mod->basis[rest];
        for (int s = 0; s < n; ++s) l += "|" + alg->basis[digits[s]];
        labels[idx] = std::move(l);
      }
      levels.emplace_back(std::move(labels));
      if (n < N) dim *= da;
    }
  }
  auto column = [alg, mod, f](const PointedMap& g, long col) {
    const long da = alg->dim();
    const long dm = mod->dim();
    const int n = g.source();
    const int m = g.target;
    std::vector<long> digits(n);
    long rest = col;
    for (int s = n - 1; s >= 0; --s) {
      digits[s] = rest % da;
      rest /= da;
    }
    const long m_idx = rest;
    // slot contents: slot 0 collects into M, slots 1..m collect algebra factors
    Vec<F> mvec(dm, f.zero());
    mvec[m_idx] = f.one();
    std::vector<Vec<F>> slot(m, alg->unit);
    for (int s = 1; s <= n; ++s) {
      int j = g(s);
      Vec<F> e(da, f.zero());
      e[digits[s - 1]] = f.one();
      if (j == 0) {
        mvec = mod->action[digits[s - 1]].apply(mvec);
      } else {
        slot[j - 1] = alg->mul_vec(slot[j - 1], e);
      }
    }
    // expand the pure tensor mvec (x) slot_1 (x) ... (x) slot_m
    SparseVec<F> out;
    std::vector<std::pair<long, typename F::Elem>> mterms;
    for (long r = 0; r < dm; ++r)
      if (!f.is_zero(mvec[r])) mterms.emplace_back(r, mvec[r]);
    if (mterms.empty()) return out;
    std::vector<long> idxs(m, 0);
    while (true) {
      auto coeff = f.one();
      bool zero = false;
      for (int s = 0; s < m; ++s) {
        if (f.is_zero(slot[s][idxs[s]])) {
          zero = true;
          break;
        }
        coeff = f.mul(coeff, slot[s][idxs[s]]);
      }
      if (!zero) {
        for (auto& [r, c] : mterms) {
          long row = r;
          for (int s = 0; s < m; ++s) row = row * da + idxs[s];
          out.emplace_back(row, f.mul(coeff, c));
        }
      }
      int s = m - 1;
      while (s >= 0 && idxs[s] == da - 1) idxs[s--] = 0;
      if (s < 0) break;
      ++idxs[s];
    }
    std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return a.first < b.first; });
    // merge duplicate rows (nontrivial structure constants can collide)
    SparseVec<F> merged;
    for (auto& [idx, c] : out) {
      if (!merged.empty() && merged.back().first == idx)
        merged.back().second = f.add(merged.back().second, c);
      else
        merged.emplace_back(idx, c);
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [&](const auto& e) { return f.is_zero(e.second); }),
                 merged.end());
    return merged;
  };
  auto rule = [alg, mod, f, column](const PointedMap& g) {
    const long da = alg->dim();
    const long dm = mod->dim();
    long cols = dm, rows = dm;
    for (int i = 0; i < g.source(); ++i) cols *= da;
    for (int i = 0; i < g.target; ++i) rows *= da;
    Matrix<F> out(f, rows, cols);
    for (long col = 0; col < cols; ++col)
      for (const auto& [r, c] : column(g, col)) out.at(r, col) = c;
    return out;
  };
  return std::make_shared<GammaModule<F>>(f, N, std::move(levels), rule,
                                          "L(" + alg->name + "," + mod->name + ")", column);
}

// --- Kaehler differentials --------------------------------------------------------

// Omega^1_A (x)_A M presented on m (x) d(a_i) modulo the Leibniz relations of
// all basis pairs and d(unit) = 0.
template <class F>
QuotientPresentation<F> kaehler_tensor(const FiniteAlgebra<F>& alg, const FiniteModule<F>& mod) {
  const F& f = alg.field;
  const long da = alg.dim();
  const long dm = mod.dim();
  const long ambient = dm * da;  // coordinate (kappa, i) = kappa*da + i
  std::vector<Vec<F>> rels;
  for (long kappa = 0; kappa < dm; ++kappa) {
    Vec<F> unit_rel(ambient, f.zero());
    for (long i = 0; i < da; ++i)
      if (!f.is_zero(alg.unit[i])) unit_rel[kappa * da + i] = alg.unit[i];
    rels.push_back(std::move(unit_rel));
  }
  for (long i = 0; i < da; ++i)
    for (long j = i; j < da; ++j)
      for (long kappa = 0; kappa < dm; ++kappa) {
        Vec<F> r(ambient, f.zero());
        // d(a_i a_j) expanded over the basis
        for (long k = 0; k < da; ++k)
          if (!f.is_zero(alg.structure[i][j][k])) f.add_assign(r[kappa * da + k], alg.structure[i][j][k]);
        // - a_i m (x) d a_j  - a_j m (x) d a_i
        auto im = mod.action[i].column(kappa);
        auto jm = mod.action[j].column(kappa);
        for (long t = 0; t < dm; ++t) {
          if (!f.is_zero(im[t])) f.add_assign(r[t * da + j], f.neg(im[t]));
          if (!f.is_zero(jm[t])) f.add_assign(r[t * da + i], f.neg(jm[t]));
        }
        rels.push_back(std::move(r));
      }
  return quotient_by(f, ambient, rels);
}

template <class F>
long classical_d0(const FiniteAlgebra<F>& alg, const FiniteModule<F>& mod) {
  return kaehler_tensor(alg, mod).dim();
}

// --- presented algebras and the conormal D_1 oracle -------------------------------

using Monomial = std::vector<int>;  // exponent vector

template <class F>
using Polynomial = std::map<Monomial, typename F::Elem>;

inline std::string monomial_string(const std::vector<std::string>& vars, const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars[i];
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

struct OracleUnavailable : std::runtime_error {
  explicit OracleUnavailable(const std::string& what) : std::runtime_error(what) {}
};

// Quotient of a polynomial ring by monomial relators, with the built-in
// confluent normal form (reduce any monomial divisible by a relator to zero).
template <class F>
struct PresentedAlgebra {
  F field;
  std::vector<std::string> vars;
  std::vector<Polynomial<F>> relators;
  bool complete_intersection = false;

  std::vector<Monomial> monomial_relators() const {
    std::vector<Monomial> out;
    for (const auto& g : relators) {
      if (g.size() != 1 || !field.eq(g.begin()->second, field.one()))
        throw OracleUnavailable("normal form is only confluent for monic monomial relators");
      out.push_back(g.begin()->first);
    }
    return out;
  }

  static bool divides(const Monomial& d, const Monomial& m) {
    for (std::size_t i = 0; i < d.size(); ++i)
      if (d[i] > m[i]) return false;
    return true;
  }

  bool reduces_to_zero(const Monomial& m) const {
    for (const auto& r : monomial_relators())
      if (divides(r, m)) return true;
    return false;
  }

  // all monomials surviving the normal form; throws when A is not finite
  // dimensional
  std::vector<Monomial> monomial_basis() const {
    auto rels = monomial_relators();
    const int nv = static_cast<int>(vars.size());
    // finiteness: every variable must have a pure power among the relators
    for (int v = 0; v < nv; ++v) {
      bool bounded = false;
      for (const auto& r : rels) {
        bool pure = r[v] > 0;
        for (int w = 0; w < nv && pure; ++w)
          if (w != v && r[w] > 0) pure = false;
        if (pure) bounded = true;
      }
      if (!bounded) throw OracleUnavailable("presented algebra is not finite dimensional");
    }
    std::vector<Monomial> basis;
    Monomial cur(nv, 0);
    // bounded box enumeration: per-variable degree below its pure-power bound
    std::vector<int> bound(nv, 0);
    for (int v = 0; v < nv; ++v)
      for (const auto& r : rels) {
        bool pure = r[v] > 0;
        for (int w = 0; w < nv && pure; ++w)
          if (w != v && r[w] > 0) pure = false;
        if (pure && (bound[v] == 0 || r[v] < bound[v])) bound[v] = r[v];
      }
    while (true) {
      if (!reduces_to_zero(cur)) basis.push_back(cur);
      int v = nv - 1;
      while (v >= 0 && cur[v] == bound[v] - 1) cur[v--] = 0;
      if (v < 0) break;
      ++cur[v];
    }
    // sort by total degree then lexicographically
    std::sort(basis.begin(), basis.end(), [](const Monomial& a, const Monomial& b) {
      int da = 0, db = 0;
      for (int x : a) da += x;
      for (int x : b) db += x;
      if (da != db) return da < db;
      return a < b;
    });
    return basis;
  }

  Polynomial<F> partial(const Polynomial<F>& g, int var) const {
    Polynomial<F> out;
    for (const auto& [m, c] : g) {
      if (m[var] == 0) continue;
      Monomial d = m;
      d[var] -= 1;
      auto coeff = field.mul(c, field.from_long(m[var]));
      if (!field.is_zero(coeff)) out[d] = coeff;
    }
    return out;
  }
};

// D_1(A,M) via the conormal sequence for a declared complete intersection:
// the kernel of (+)_j M [g_j] -> (+)_i M dx_i, [g_j] (x) m -> sum_i
// nf(dg_j/dx_i) . m (x) dx_i.
template <class F>
long classical_d1(const PresentedAlgebra<F>& pres, const FiniteAlgebra<F>& alg, const FiniteModule<F>& mod) {
  const F& f = pres.field;
  if (!pres.complete_intersection)
    throw OracleUnavailable("classical_d1 requires the complete-intersection flag");
  auto basis = pres.monomial_basis();
  if (static_cast<long>(basis.size()) != alg.dim())
    throw OracleUnavailable("presentation basis does not match the algebra dimension");
  // map monomials to algebra basis indices through the label strings
  std::vector<long> mono_to_basis(basis.size());
  for (std::size_t b = 0; b < basis.size(); ++b) {
    long idx = alg.basis_index(monomial_string(pres.vars, basis[b]));
    if (idx < 0) throw OracleUnavailable("algebra basis labels do not name the presentation monomials");
    mono_to_basis[b] = idx;
  }
  const int nv = static_cast<int>(pres.vars.size());
  const long s = static_cast<long>(pres.relators.size());
  const long dm = mod.dim();

  // module action of a normal-formed polynomial
  auto act_of_poly = [&](const Polynomial<F>& p) {
    Matrix<F> m(f, dm, dm);
    for (const auto& [mono, coeff] : p) {
      if (pres.reduces_to_zero(mono)) continue;
      long bidx = -1;
      for (std::size_t b = 0; b < basis.size(); ++b)
        if (basis[b] == mono) bidx = mono_to_basis[b];
      if (bidx < 0) throw OracleUnavailable("monomial missing from the normal-form basis");
      const auto& act = mod.action[bidx];
      for (long r = 0; r < dm; ++r)
        for (long c = 0; c < dm; ++c)
          if (!f.is_zero(act.at(r, c))) f.add_assign(m.at(r, c), f.mul(coeff, act.at(r, c)));
    }
    return m;
  };

  Matrix<F> jac(f, nv * dm, s * dm);
  for (long j = 0; j < s; ++j)
    for (int i = 0; i < nv; ++i) {
      auto block = act_of_poly(pres.partial(pres.relators[j], i));
      for (long r = 0; r < dm; ++r)
        for (long c = 0; c < dm; ++c)
          if (!f.is_zero(block.at(r, c))) jac.at(i * dm + r, j * dm + c) = block.at(r, c);
    }
  return static_cast<long>(kernel_basis(jac).size());
}

// --- induced transformations of L ------------------------------------------------

template <class F>
struct LamSes {
  NatTransform<F> inclusion;   // L(A,M1) -> L(A,M)
  NatTransform<F> projection;  // L(A,M) -> L(A,M2)
};

namespace detail {

// component id_{slot0 map} (x) phi^{(x) n} between L-style level spaces
template <class F>
Matrix<F> tensor_power_component(const F& f, const Matrix<F>& slot0, const Matrix<F>& phi, int n) {
  Matrix<F> m = slot0;
  for (int s = 0; s < n; ++s) {
    Matrix<F> next(f, m.rows() * phi.rows(), m.cols() * phi.cols());
    for (long r = 0; r < m.rows(); ++r)
      for (long c = 0; c < m.cols(); ++c) {
        if (f.is_zero(m.at(r, c))) continue;
        for (long pr = 0; pr < phi.rows(); ++pr)
          for (long pc = 0; pc < phi.cols(); ++pc)
            if (!f.is_zero(phi.at(pr, pc)))
              next.at(r * phi.rows() + pr, c * phi.cols() + pc) = f.mul(m.at(r, c), phi.at(pr, pc));
      }
    m = std::move(next);
  }
  return m;
}

}  // namespace detail

// 0 -> M1 -> M -> M2 -> 0 induces transformations of the L-modules
// (Y-exactness of the result is a theorem; callers certify it with is_y_epi).
template <class F>
LamSes<F> lam_of_module_ses(const AlgebraPtr<F>& alg, const std::shared_ptr<const FiniteModule<F>>& m1,
                            const std::shared_ptr<const FiniteModule<F>>& m, const std::shared_ptr<const FiniteModule<F>>& m2,
                            const Matrix<F>& iota, const Matrix<F>& pi, int N) {
  const F& f = alg->field;
  if (iota.rows() != m->dim() || iota.cols() != m1->dim() || pi.rows() != m2->dim() || pi.cols() != m->dim())
    throw std::invalid_argument("ses maps have wrong shapes");
  for (long i = 0; i < alg->dim(); ++i) {
    if (!(mat_mul(iota, m1->action[i]) == mat_mul(m->action[i], iota)))
      throw std::invalid_argument("inclusion is not A-linear");
    if (!(mat_mul(pi, m->action[i]) == mat_mul(m2->action[i], pi)))
      throw std::invalid_argument("projection is not A-linear");
  }
  if (rank_of(iota) != m1->dim()) throw std::invalid_argument("sequence is not exact: inclusion not injective");
  if (rank_of(pi) != m2->dim()) throw std::invalid_argument("sequence is not exact: projection not surjective");
  if (!(mat_mul(pi, iota) == Matrix<F>(f, m2->dim(), m1->dim())))
    throw std::invalid_argument("sequence is not exact: pi . iota != 0");
  if (rank_of(iota) + rank_of(pi) != m->dim())
    throw std::invalid_argument("sequence is not exact: ranks do not add up");

  auto la = build_lam(alg, m1, N);
  auto lb = build_lam(alg, m, N);
  auto lc = build_lam(alg, m2, N);
  auto ida = Matrix<F>::identity(f, alg->dim());
  LamSes<F> out{{la, lb, {}}, {lb, lc, {}}};
  for (int n = 0; n <= N; ++n) {
    out.inclusion.components.push_back(detail::tensor_power_component(f, iota, ida, n));
    out.projection.components.push_back(detail::tensor_power_component(f, pi, ida, n));
  }
  return out;
}

// A surjective algebra map phi: B ->> A induces L(B,M) -> L(A,M) with
// components id_M (x) phi^{(x) n}; M is a B-module through phi.
template <class F>
NatTransform<F> lam_of_algebra_surjection(const AlgebraPtr<F>& b, const AlgebraPtr<F>& a,
                                          const Matrix<F>& phi, const std::shared_ptr<const FiniteModule<F>>& m,
                                          int N) {
  const F& f = a->field;
  if (m->over.get() != a.get()) throw std::invalid_argument("module is not over the target algebra");
  if (phi.rows() != a->dim() || phi.cols() != b->dim()) throw std::invalid_argument("phi has wrong shape");
  // unital and multiplicative
  {
    auto u = phi.apply(b->unit);
    for (long k = 0; k < a->dim(); ++k)
      if (!f.eq(u[k], a->unit[k])) throw std::invalid_argument("phi does not preserve the unit");
    for (long i = 0; i < b->dim(); ++i)
      for (long j = 0; j < b->dim(); ++j) {
        auto lhs = phi.apply(b->structure[i][j]);
        auto rhs = a->mul_vec(phi.column(i), phi.column(j));
        for (long k = 0; k < a->dim(); ++k)
          if (!f.eq(lhs[k], rhs[k])) throw std::invalid_argument("phi is not multiplicative");
      }
  }
  if (rank_of(phi) != a->dim()) throw std::invalid_argument("phi is not surjective");

  // restriction of scalars along phi
  auto restricted = std::make_shared<FiniteModule<F>>();
  restricted->over = b;
  restricted->name = m->name;
  restricted->basis = m->basis;
  for (long i = 0; i < b->dim(); ++i) restricted->action.push_back(m->act_of(phi.column(i)));

  auto lb = build_lam(b, std::shared_ptr<const FiniteModule<F>>(restricted), N);
  auto la = build_lam(a, m, N);
  auto idm = Matrix<F>::identity(f, m->dim());
  NatTransform<F> t{lb, la, {}};
  for (int n = 0; n <= N; ++n) t.components.push_back(detail::tensor_power_component(f, idm, phi, n));
  return t;
}

// --- built-in corpus ---------------------------------------------------------------

template <class F>
AlgebraPtr<F> make_base_field_algebra(const F& f) {
  auto a = std::make_shared<FiniteAlgebra<F>>();
  a->field = f;
  a->name = "K";
  a->basis = {"1"};
  a->structure = {{Vec<F>{f.one()}}};
  a->unit = {f.one()};
  return a;
}

// K[x]/(x^e), basis 1, x, ..., x^{e-1} with monomial labels
template <class F>
AlgebraPtr<F> make_truncated_polynomial(const F& f, int e) {
  auto a = std::make_shared<FiniteAlgebra<F>>();
  a->field = f;
  a->name = "K[x]/(x^" + std::to_string(e) + ")";
  for (int i = 0; i < e; ++i)
    a->basis.push_back(i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i)));
  a->structure.assign(e, std::vector<Vec<F>>(e, Vec<F>(e, f.zero())));
  for (int i = 0; i < e; ++i)
    for (int j = 0; j < e; ++j)
      if (i + j < e) a->structure[i][j][i + j] = f.one();
  a->unit = Vec<F>(e, f.zero());
  a->unit[0] = f.one();
  return a;
}

// K[x,y]/(x^2, xy, y^2)
template <class F>
AlgebraPtr<F> make_fat_point(const F& f) {
  auto a = std::make_shared<FiniteAlgebra<F>>();
  a->field = f;
  a->name = "K[x,y]/(x^2,x*y,y^2)";
  a->basis = {"1", "x", "y"};
  a->structure.assign(3, std::vector<Vec<F>>(3, Vec<F>(3, f.zero())));
  a->structure[0][0][0] = f.one();
  a->structure[0][1][1] = f.one();
  a->structure[1][0][1] = f.one();
  a->structure[0][2][2] = f.one();
  a->structure[2][0][2] = f.one();
  a->unit = {f.one(), f.zero(), f.zero()};
  return a;
}

// M = A as a module over itself
template <class F>
std::shared_ptr<const FiniteModule<F>> regular_module(const AlgebraPtr<F>& a) {
  auto m = std::make_shared<FiniteModule<F>>();
  m->over = a;
  m->name = "A";
  m->basis = a->basis;
  for (long i = 0; i < a->dim(); ++i) {
    Matrix<F> act(a->field, a->dim(), a->dim());
    for (long j = 0; j < a->dim(); ++j)
      for (long k = 0; k < a->dim(); ++k) act.at(k, j) = a->structure[i][j][k];
    m->action.push_back(std::move(act));
  }
  return m;
}

// M = K, the residue field: the unit acts as 1, every other basis element by 0.
// Sound for the corpus algebras, whose non-unit basis elements are nilpotent.
template <class F>
std::shared_ptr<const FiniteModule<F>> residue_module(const AlgebraPtr<F>& a) {
  auto m = std::make_shared<FiniteModule<F>>();
  m->over = a;
  m->name = "K";
  m->basis = {"1"};
  const F& f = a->field;
  for (long i = 0; i < a->dim(); ++i) {
    Matrix<F> act(f, 1, 1);
    act.at(0, 0) = a->basis[i] == "1" ? f.one() : f.zero();
    m->action.push_back(std::move(act));
  }
  return m;
}

template <class F>
PresentedAlgebra<F> presented_truncated_polynomial(const F& f, int e) {
  PresentedAlgebra<F> p;
  p.field = f;
  p.vars = {"x"};
  Polynomial<F> g;
  g[Monomial{e}] = f.one();
  p.relators.push_back(std::move(g));
  p.complete_intersection = true;
  return p;
}

template <class F>
PresentedAlgebra<F> presented_fat_point(const F& f) {
  PresentedAlgebra<F> p;
  p.field = f;
  p.vars = {"x", "y"};
  for (Monomial mono : {Monomial{2, 0}, Monomial{1, 1}, Monomial{0, 2}}) {
    Polynomial<F> g;
    g[mono] = f.one();
    p.relators.push_back(std::move(g));
  }
  p.complete_intersection = false;  // three relators in two variables
  return p;
}

// the quotient K[x]/(x^e) ->> K[x]/(x^d), d <= e
template <class F>
Matrix<F> truncation_surjection(const F& f, const AlgebraPtr<F>& from, const AlgebraPtr<F>& to) {
  Matrix<F> phi(f, to->dim(), from->dim());
  for (long j = 0; j < from->dim(); ++j) {
    long i = to->basis_index(from->basis[j]);
    if (i >= 0) phi.at(i, j) = f.one();
  }
  return phi;
}

}  // namespace gaq
