#include <catch2/catch_amalgamated.hpp>

#include "gaq/algebra.hpp"
#include "gaq/resolution.hpp"

using namespace gaq;

TEST_CASE("y_cover of Gamma(2) contains the identity among realized maps") {
  PrimeField f2(2);
  auto g2 = gamma_lambda(f2, Partition({2}), 2);
  auto cover = y_cover(ModulePtr<PrimeField>(g2), 2);

  // multiplicities are the invariant dimensions: 1, 3, 4, 6
  REQUIRE(cover.summands.size() == 4);
  CHECK(cover.summands[0] == std::make_pair(Partition{}, 1l));
  CHECK(cover.summands[1] == std::make_pair(Partition({1}), 3l));
  CHECK(cover.summands[2] == std::make_pair(Partition({2}), 4l));
  CHECK(cover.summands[3] == std::make_pair(Partition({1, 1}), 6l));

  CHECK(is_y_epi(cover.epi, 2).ok);

  // the class of the identity is an invariant vector and realizes to the identity
  auto hs = hom_space(Partition({2}), ModulePtr<PrimeField>(g2));
  Vec<PrimeField> x(g2->dim(2), f2.zero());
  long idx = -1;
  const auto& labels = g2->space(2).labels;
  for (long i = 0; i < static_cast<long>(labels.size()); ++i)
    if (labels[i] == "[1,2]") idx = i;
  REQUIRE(idx >= 0);
  x[idx] = f2.one();
  auto eta = hs.realize(x);
  for (int n = 0; n <= 2; ++n) CHECK(eta.at(n) == Matrix<PrimeField>::identity(f2, g2->dim(n)));
}

TEST_CASE("y_cover multiplicities for L(K[x]/(x^2), K) at bound 3") {
  PrimeField f2(2);
  auto a = make_truncated_polynomial(f2, 2);
  auto lam = build_lam(a, residue_module(a), 3);
  auto cover = y_cover(ModulePtr<PrimeField>(lam), 3);
  std::vector<long> mults;
  for (auto& [l, m] : cover.summands) mults.push_back(m);
  CHECK(mults == std::vector<long>{1, 2, 3, 4, 4, 6, 8});
  CHECK(is_y_epi(cover.epi, 3).ok);
}

TEST_CASE("empty module has an empty cover") {
  Rationals q;
  // kernel of the identity is the zero module
  auto g1 = representable(q, 1, 2);
  auto z = kernel_module(identity_transform(ModulePtr<Rationals>(g1)));
  auto cover = y_cover(z.module, 2);
  for (auto& [l, m] : cover.summands) CHECK(m == 0);
}

TEST_CASE("structured cover shape matches the dense cover") {
  PrimeField f2(2);
  auto a = make_truncated_polynomial(f2, 2);
  auto lam = build_lam(a, residue_module(a), 3);
  Resolver<PrimeField> res(f2, ModulePtr<PrimeField>(lam), 3);
  res.ensure_stages(1);
  std::vector<long> mults;
  for (auto& [l, m] : res.stages()[0].shape) mults.push_back(m);
  CHECK(mults == std::vector<long>{1, 2, 3, 4, 4, 6, 8});
  for (const auto& c : res.stages()[0].certs) CHECK(c.ok());
}

TEST_CASE("relative_pi vanishes in positive degrees on Y-projectives") {
  PrimeField f2(2);
  for (auto parts : std::vector<std::vector<int>>{{}, {1}, {2}, {1, 1}}) {
    auto g = gamma_lambda(f2, Partition(parts), 2);
    auto rep = relative_pi(f2, ModulePtr<PrimeField>(g), 2, 2);
    REQUIRE(rep.dims.size() == 3);
    CHECK(rep.dims[1] == 0);
    CHECK(rep.dims[2] == 0);
    CHECK(rep.certificates_ok);
  }
}

TEST_CASE("relative_pi degree zero is pi0") {
  Rationals q;
  auto g1 = representable(q, 1, 2);
  auto rep = relative_pi(q, ModulePtr<Rationals>(g1), 0, 2);
  CHECK(rep.dims == std::vector<long>{1});

  auto g0 = representable(q, 0, 2);
  CHECK(relative_pi(q, ModulePtr<Rationals>(g0), 1, 2).dims == std::vector<long>{0, 0});
}

TEST_CASE("relative_pi of L(K[x]/(x^2), K) over Q at (3,3)") {
  Rationals q;
  auto a = make_truncated_polynomial(q, 2);
  auto lam = build_lam(a, residue_module(a), 3);
  auto rep = relative_pi(q, ModulePtr<Rationals>(lam), 1, 3);
  REQUIRE(rep.dims.size() == 2);
  CHECK(rep.dims[0] == 1);  // dim Omega^1 (x) K
  CHECK(rep.dims[1] == 1);  // dim D_1(K[x]/(x^2), K)
  CHECK(rep.certificates_ok);
}

TEST_CASE("absolute and relative derived functors agree in characteristic zero") {
  Rationals q;
  auto a = make_truncated_polynomial(q, 2);
  auto lam = build_lam(a, residue_module(a), 3);
  auto rel = relative_pi(q, ModulePtr<Rationals>(lam), 1, 3);
  auto abs = absolute_pi(q, ModulePtr<Rationals>(lam), 1, 3);
  CHECK(rel.dims == abs.dims);
}

TEST_CASE("resource cap produces a structured error naming a partition") {
  PrimeField f2(2);
  auto a = make_truncated_polynomial(f2, 2);
  auto lam = build_lam(a, residue_module(a), 3);
  ResolverOptions opt;
  opt.cover_cap = 10;
  try {
    relative_pi(f2, ModulePtr<PrimeField>(lam), 1, 3, opt);
    FAIL("expected a resource error");
  } catch (const ResourceError& e) {
    CHECK(std::string(e.what()).find("largest summand") != std::string::npos);
  }
}

TEST_CASE("apply_pi0 on small dense complexes") {
  Rationals q;
  auto g1 = representable(q, 1, 2);
  DenseComplex<Rationals> conc;
  conc.modules = {ModulePtr<Rationals>(g1)};
  auto p = apply_pi0(conc);
  REQUIRE(p.spaces.size() == 1);
  CHECK(p.spaces[0].dim() == 1);
  CHECK(p.homology() == std::vector<long>{1});

  // zero complex
  auto z = kernel_module(identity_transform(ModulePtr<Rationals>(g1)));
  DenseComplex<Rationals> zero;
  zero.modules = {z.module, z.module};
  zero.differentials = {identity_transform(z.module)};
  auto pz = apply_pi0(zero);
  CHECK(pz.homology() == std::vector<long>{0, 0});
}

TEST_CASE("apply_pi0 rejects complexes with nonzero boundary square") {
  Rationals q;
  auto g1 = representable(q, 1, 2);
  DenseComplex<Rationals> badc;
  badc.modules = {ModulePtr<Rationals>(g1), ModulePtr<Rationals>(g1), ModulePtr<Rationals>(g1)};
  badc.differentials = {identity_transform(ModulePtr<Rationals>(g1)),
                        identity_transform(ModulePtr<Rationals>(g1))};
  CHECK_THROWS_AS(badc.validate(), std::logic_error);
}

TEST_CASE("identical runs produce identical reports") {
  PrimeField f3(3);
  auto a = make_truncated_polynomial(f3, 2);
  auto lam = build_lam(a, regular_module(a), 3);
  auto r1 = relative_pi(f3, ModulePtr<PrimeField>(lam), 1, 3);
  auto r2 = relative_pi(f3, ModulePtr<PrimeField>(lam), 1, 3);
  CHECK(r1.dims == r2.dims);
  REQUIRE(r1.stages.size() == r2.stages.size());
  for (std::size_t i = 0; i < r1.stages.size(); ++i) {
    CHECK(r1.stages[i].shape == r2.stages[i].shape);
    CHECK(r1.stages[i].level_dims == r2.stages[i].level_dims);
    CHECK(r1.stages[i].rank_delta == r2.stages[i].rank_delta);
    CHECK(r1.stages[i].t_rank == r2.stages[i].t_rank);
    CHECK(r1.stages[i].s_rank == r2.stages[i].s_rank);
  }
}
