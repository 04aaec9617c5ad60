#include <catch2/catch_amalgamated.hpp>

#include "gaq/algebra.hpp"
#include "gaq/weights.hpp"

using namespace gaq;

TEST_CASE("weight t dimensions and actions") {
  Rationals q;
  auto t = weight_t(q, 3);
  CHECK(t.dim(0) == 0);
  for (int n = 1; n <= 3; ++n) CHECK(t.dim(n) == n);

  // folding [2] -> [1]: phi_1 -> phi_1 + phi_2
  auto m = t.action(face_d1());
  REQUIRE(m.rows() == 2);
  REQUIRE(m.cols() == 1);
  CHECK(q.eq(m.at(0, 0), q.one()));
  CHECK(q.eq(m.at(1, 0), q.one()));

  // d0: 1 -> 1, 2 -> 0: phi_1 -> phi_1
  auto m0 = t.action(face_d0());
  CHECK(q.eq(m0.at(0, 0), q.one()));
  CHECK(q.is_zero(m0.at(1, 0)));
}

TEST_CASE("exterior powers of t") {
  Rationals q;
  auto l2 = weight_lambda_t(q, 2, 3);
  CHECK(l2.dim(1) == 0);
  CHECK(l2.dim(2) == 1);
  CHECK(l2.dim(3) == 3);

  // Lambda^1 is t
  auto l1 = weight_lambda_t(q, 1, 3);
  CHECK(l1.dim(2) == 2);

  // the swap acts by the determinant -1 on Lambda^2(t([2]))
  PointedMap swap12{2, {2, 1}};
  auto a = l2.action(swap12);
  CHECK(q.eq(a.at(0, 0), q.from_long(-1)));
}

TEST_CASE("weighted_contract recovers pi0 on small modules") {
  Rationals q;
  auto t = weight_t(q, 2);
  CHECK(weighted_contract(t, representable(q, 0, 2)).dim() == 0);
  CHECK(weighted_contract(t, representable(q, 1, 2)).dim() == 1);
  CHECK(weighted_contract(t, representable(q, 2, 2)).dim() == 2);

  PrimeField f2(2);
  auto t2 = weight_t(f2, 2);
  auto a = make_truncated_polynomial(f2, 2);
  auto lam = build_lam(a, regular_module(a), 2);
  CHECK(weighted_contract(t2, ModulePtr<PrimeField>(lam)).dim() == 2);
  CHECK(weighted_contract(t2, ModulePtr<PrimeField>(lam)).dim() == pi0(*lam).dim());
}

TEST_CASE("co-Yoneda: t contracted against representables") {
  Rationals q;
  auto t = weight_t(q, 3);
  for (int n = 0; n <= 3; ++n)
    CHECK(weighted_contract(t, representable(q, n, 3)).dim() == n);
}

TEST_CASE("weighted_dim agrees with the materialized presentation") {
  PrimeField f3(3);
  auto t = weight_t(f3, 2);
  auto g2 = representable(f3, 2, 2);
  DenseContractView<PrimeField> v{ModulePtr<PrimeField>(g2)};
  CHECK(weighted_dim(t, v) == weighted_contract(t, ModulePtr<PrimeField>(g2)).dim());
}

TEST_CASE("weighted tor with weight t matches relative pi") {
  PrimeField f2(2);
  auto a = make_truncated_polynomial(f2, 2);
  auto lam = build_lam(a, regular_module(a), 3);
  Resolver<PrimeField> res(f2, ModulePtr<PrimeField>(lam), 3);
  auto pi_rep = res.run(1);
  auto t = weight_t(f2, 3);
  auto tor_rep = weighted_tor(t, res, 1);
  CHECK(tor_rep.dims == pi_rep.dims);
  CHECK(pi_rep.dims == std::vector<long>{2, 2});
}

TEST_CASE("weighted tor with weight t matches relative pi over Q") {
  Rationals q;
  auto a = make_truncated_polynomial(q, 2);
  auto lam = build_lam(a, residue_module(a), 3);
  Resolver<Rationals> res(q, ModulePtr<Rationals>(lam), 3);
  auto pi_rep = res.run(1);
  auto t = weight_t(q, 3);
  auto tor_rep = weighted_tor(t, res, 1);
  CHECK(tor_rep.dims == pi_rep.dims);
  CHECK(pi_rep.dims == std::vector<long>{1, 1});
}

TEST_CASE("exterior weights vanish in positive degrees on Y-projectives") {
  PrimeField f2(2);
  auto g2 = gamma_lambda(f2, Partition({2}), 2);
  Resolver<PrimeField> res(f2, ModulePtr<PrimeField>(g2), 2);
  auto l2 = weight_lambda_t(f2, 2, 2);
  auto rep = weighted_tor(l2, res, 2);
  REQUIRE(rep.dims.size() == 3);
  CHECK(rep.dims[1] == 0);
  CHECK(rep.dims[2] == 0);
}

TEST_CASE("Kuenneth splitting for two copies of Gamma^1") {
  Rationals q;
  auto g1 = representable(q, 1, 2);
  auto rep = kunneth_check(q, ModulePtr<Rationals>(g1), ModulePtr<Rationals>(g1), 1, 2);
  CHECK(rep.ok);
  REQUIRE(rep.rows.size() == 2);
  CHECK(rep.rows[0].lhs == 2);  // pi_0(Gamma^2)
  CHECK(rep.rows[0].rhs == 2);
  CHECK(rep.rows[1].lhs == 0);
}
