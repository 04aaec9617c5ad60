#include <catch2/catch_amalgamated.hpp>

#include "gaq/module.hpp"

using namespace gaq;

namespace {

// Natural "sum of coefficients" map Gamma^1 -> Gamma^0; its kernel vanishes
// at level 0, which makes witnesses land at lambda = (1).
template <class F>
NatTransform<F> augmentation_to_constant(const F& f, const ModulePtr<F>& g1, const ModulePtr<F>& g0) {
  NatTransform<F> t{g1, g0, {}};
  for (int n = 0; n <= g1->truncation(); ++n) {
    Matrix<F> m(f, 1, g1->dim(n));
    for (long c = 0; c < g1->dim(n); ++c) m.at(0, c) = f.one();
    t.components.push_back(std::move(m));
  }
  return t;
}

}  // namespace

TEST_CASE("representable dimensions") {
  Rationals q;
  auto g0 = representable(q, 0, 3);
  for (int m = 0; m <= 3; ++m) CHECK(g0->dim(m) == 1);

  auto g1 = representable(q, 1, 3);
  for (int m = 0; m <= 3; ++m) CHECK(g1->dim(m) == m + 1);

  auto g2 = representable(q, 2, 2);
  CHECK(g2->dim(1) == 4);

  CHECK_THROWS_AS(representable(q, 3, 2), TruncationError);
  CHECK_THROWS_AS(g1->space(4), TruncationError);
}

TEST_CASE("representable functoriality") {
  PrimeField f2(2);
  auto g2 = representable(f2, 2, 3);
  CHECK(check_functoriality_exhaustive(*g2, 2).ok);
  CHECK(check_functoriality(*g2, 50).ok);
}

TEST_CASE("gamma_lambda dimensions follow the binomial product formula") {
  PrimeField f2(2);
  for (const auto& lambda : partitions_up_to(4)) {
    auto mod = gamma_lambda(f2, lambda, 4);
    for (int m = 0; m <= 4; ++m) CHECK(mod->dim(m) == gamma_lambda_dim(lambda, m));
  }
}

TEST_CASE("gamma_lambda of the column partition matches the representable") {
  Rationals q;
  auto g = gamma_lambda(q, Partition({1, 1}), 2);
  auto rep = representable(q, 2, 2);
  for (int m = 0; m <= 2; ++m) CHECK(g->dim(m) == rep->dim(m));
  CHECK(check_functoriality_exhaustive(*g, 2).ok);
}

TEST_CASE("gamma_lambda basis labels are canonical orbit representatives") {
  Rationals q;
  auto g = gamma_lambda(q, Partition({2}), 2);
  CHECK(g->space(1).labels == std::vector<std::string>{"[0,0]", "[0,1]", "[1,1]"});
  CHECK(g->space(2).labels ==
        std::vector<std::string>{"[0,0]", "[0,1]", "[0,2]", "[1,1]", "[1,2]", "[2,2]"});
  CHECK(check_functoriality_exhaustive(*g, 2).ok);
}

TEST_CASE("pointwise tensor") {
  Rationals q;
  auto g1 = representable(q, 1, 2);
  auto g0 = representable(q, 0, 2);
  auto t = pointwise_tensor(g1, g0);
  for (int m = 0; m <= 2; ++m) CHECK(t->dim(m) == g1->dim(m));

  auto t2 = pointwise_tensor(g1, g1);
  auto g2 = representable(q, 2, 2);
  CHECK(t2->dim(1) == 4);
  CHECK(t2->dim(1) == g2->dim(1));
  CHECK(check_functoriality_exhaustive(*t2, 2).ok);
}

TEST_CASE("module invariants") {
  Rationals q;
  auto g1 = representable(q, 1, 2);
  // trivial Young subgroup fixes everything
  CHECK(module_invariants(*g1, 2, Partition({1, 1})).size() == 3);
  // swap on Gamma^1([2]) = K{0,1,2} fixes [0] and [1]+[2]
  CHECK(module_invariants(*g1, 2, Partition({2})).size() == 2);
  CHECK_THROWS_AS(module_invariants(*g1, 1, Partition({2})), std::invalid_argument);
}

TEST_CASE("hom_space dimensions and naturality") {
  Rationals q;
  auto g1 = representable(q, 1, 2);

  auto h1 = hom_space(Partition({1}), ModulePtr<Rationals>(g1));
  CHECK(static_cast<long>(h1.basis.size()) == g1->dim(1));

  auto h0 = hom_space(Partition{}, ModulePtr<Rationals>(g1));
  CHECK(static_cast<long>(h0.basis.size()) == g1->dim(0));

  auto h2 = hom_space(Partition({2}), ModulePtr<Rationals>(g1));
  REQUIRE(h2.basis.size() == 2);
  for (const auto& x : h2.basis) {
    auto eta = h2.realize(x);
    CHECK(eta.natural(2));
  }

  // a vector that is not Sigma(lambda)-fixed is rejected
  Vec<Rationals> bad(g1->dim(2), q.zero());
  bad[1] = q.one();  // [1] is moved by the swap
  CHECK_THROWS_AS(h2.realize(bad), std::invalid_argument);
}

TEST_CASE("pi0 of small projectives") {
  Rationals q;
  auto g0 = representable(q, 0, 2);
  CHECK(pi0(*g0).dim() == 0);

  auto g1 = representable(q, 1, 2);
  auto p = pi0(*g1);
  CHECK(p.dim() == 1);

  auto g2 = representable(q, 2, 2);
  CHECK(pi0(*g2).dim() == 2);

  PrimeField f2(2);
  auto g1p = representable(f2, 1, 2);
  CHECK(pi0(*g1p).dim() == 1);

  auto short_mod = representable(q, 0, 1);
  CHECK_THROWS_AS(pi0(*short_mod), TruncationError);
}

TEST_CASE("pi0 projection kills the alternating-sum image") {
  Rationals q;
  auto g2 = representable(q, 2, 2);
  auto delta = pi0_delta(*g2);
  auto pres = cokernel(delta);
  auto z = mat_mul(pres.projection, delta);
  CHECK(z == Matrix<Rationals>(q, pres.dim(), delta.cols()));
}

TEST_CASE("is_y_epi basics") {
  Rationals q;
  auto g1 = representable(q, 1, 2);
  CHECK(is_y_epi(identity_transform(ModulePtr<Rationals>(g1)), 2).ok);

  auto g0 = representable(q, 0, 2);
  auto aug = augmentation_to_constant(q, g1, g0);
  auto ker = kernel_module(aug);
  CHECK(ker.module->dim(0) == 0);
  CHECK(ker.module->dim(1) == 1);

  auto zero = zero_transform(ModulePtr<Rationals>(g0), ker.module);
  auto res = is_y_epi(zero, 2);
  CHECK_FALSE(res.ok);
  REQUIRE(res.offending.has_value());
  CHECK(*res.offending == Partition({1}));
  CHECK(res.unhit.has_value());
}

TEST_CASE("kernel module extremes") {
  Rationals q;
  auto g1 = representable(q, 1, 2);
  auto id = identity_transform(ModulePtr<Rationals>(g1));
  auto kid = kernel_module(id);
  for (int n = 0; n <= 2; ++n) CHECK(kid.module->dim(n) == 0);

  auto zero = zero_transform(ModulePtr<Rationals>(g1), ModulePtr<Rationals>(g1));
  auto kz = kernel_module(zero);
  for (int n = 0; n <= 2; ++n) CHECK(kz.module->dim(n) == g1->dim(n));
  CHECK(check_functoriality_exhaustive(*kz.module, 2).ok);
}

TEST_CASE("kernel module of a natural surjection is functorial") {
  Rationals q;
  auto g1 = representable(q, 1, 2);
  auto g0 = representable(q, 0, 2);
  auto aug = augmentation_to_constant(q, g1, g0);
  auto ker = kernel_module(aug);
  CHECK(check_functoriality_exhaustive(*ker.module, 2).ok);
  // inclusion is natural
  CHECK(ker.map.natural(2));
}

TEST_CASE("quotient module") {
  Rationals q;
  auto g1 = representable(q, 1, 2);
  auto g0 = representable(q, 0, 2);
  auto aug = augmentation_to_constant(q, g1, g0);
  // image of zero map is zero: quotient is the target itself
  auto qz = quotient_module(zero_transform(ModulePtr<Rationals>(g0), ModulePtr<Rationals>(g1)));
  for (int n = 0; n <= 2; ++n) CHECK(qz.module->dim(n) == g1->dim(n));
  // quotient by the kernel inclusion has the dims of the image
  auto ker = kernel_module(aug);
  auto quo = quotient_module(ker.map);
  for (int n = 0; n <= 2; ++n) CHECK(quo.module->dim(n) == 1);
  CHECK(check_functoriality_exhaustive(*quo.module, 2).ok);
  CHECK(quo.map.natural(2));
}

TEST_CASE("corrupted action tables are caught") {
  Rationals q;
  std::vector<LabeledSpace> levels;
  for (int n = 0; n <= 2; ++n) levels.push_back(LabeledSpace::unlabeled(1));
  // action rule that is not functorial: every nonidentity map acts by 2
  auto rule = [q](const PointedMap& g) {
    Matrix<Rationals> m(q, 1, 1);
    m.at(0, 0) = g.is_identity() ? q.one() : q.from_long(2);
    return m;
  };
  GammaModule<Rationals> bad(q, 2, levels, rule, "bad");
  auto res = check_functoriality(bad, 64);
  CHECK_FALSE(res.ok);
  CHECK(res.counterexample.has_value());
}
