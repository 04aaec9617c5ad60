#include <catch2/catch_amalgamated.hpp>

#include "gaq/algebra.hpp"

using namespace gaq;

namespace {

template <class F>
long lam_level_index(const GammaModule<F>& lam, const std::string& label, int n) {
  const auto& labels = lam.space(n).labels;
  for (long i = 0; i < static_cast<long>(labels.size()); ++i)
    if (labels[i] == label) return i;
  return -1;
}

long monomial_count(int nvars, int degree) {
  // monomials of the given total degree in nvars variables
  return binomial(nvars + degree - 1, degree);
}

}  // namespace

TEST_CASE("validate_algebra on the corpus and a negative control") {
  Rationals q;
  CHECK(!validate_algebra(*make_base_field_algebra(q)).has_value());
  CHECK(!validate_algebra(*make_truncated_polynomial(q, 2)).has_value());
  CHECK(!validate_algebra(*make_truncated_polynomial(q, 3)).has_value());
  CHECK(!validate_algebra(*make_fat_point(q)).has_value());

  auto bad = std::make_shared<FiniteAlgebra<Rationals>>(*make_truncated_polynomial(q, 2));
  bad->structure[1][1][0] = q.one();  // x*x = 1 but 1*... stays symmetric
  bad->structure[1][1][1] = q.one();  // x*x = 1 + x
  // break symmetry explicitly
  auto bad2 = std::make_shared<FiniteAlgebra<Rationals>>(*bad);
  bad2->structure[0][1][0] = q.one();
  auto viol = validate_algebra(*bad2);
  REQUIRE(viol.has_value());
  CHECK(viol->find("(0,1)") != std::string::npos);
}

TEST_CASE("module validation") {
  Rationals q;
  auto a = make_truncated_polynomial(q, 2);
  CHECK(!validate_module(*regular_module(a)).has_value());
  CHECK(!validate_module(*residue_module(a)).has_value());

  auto broken = std::make_shared<FiniteModule<Rationals>>(*regular_module(a));
  broken->action[1].at(0, 1) = q.one();  // x now acts with x.x = 1 component
  CHECK(validate_module(*broken).has_value());
}

TEST_CASE("build_lam dimensions and action formula") {
  Rationals q;
  auto a = make_truncated_polynomial(q, 2);
  auto m = regular_module(a);
  auto lam = build_lam(a, m, 3);
  for (int n = 0; n <= 3; ++n) {
    long expect = 2;
    for (int i = 0; i < n; ++i) expect *= 2;
    CHECK(lam->dim(n) == expect);
  }

  // fold [2] -> [1] sends 1|x|x to 1|(x.x) = 0
  PointedMap fold{1, {1, 1}};
  long col = lam_level_index(*lam, "1|x|x", 2);
  REQUIRE(col >= 0);
  auto img = lam->action(fold).column(col);
  for (const auto& e : img) CHECK(q.is_zero(e));

  // [1] -> [0], 1 -> 0 sends m|a to (a.m)
  PointedMap drop{0, {0}};
  long c2 = lam_level_index(*lam, "x|x", 1);  // x (x) x -> x.x = 0
  REQUIRE(c2 >= 0);
  auto img2 = lam->action(drop).column(c2);
  for (const auto& e : img2) CHECK(q.is_zero(e));
  long c3 = lam_level_index(*lam, "1|x", 1);  // 1 (x) x -> x
  auto img3 = lam->action(drop).column(c3);
  CHECK(q.is_zero(img3[0]));
  CHECK(q.eq(img3[1], q.one()));

  CHECK(check_functoriality_exhaustive(*lam, 2).ok);
  CHECK(check_functoriality(*lam, 100).ok);
}

TEST_CASE("build_lam respects the dimension cap") {
  Rationals q;
  auto a = make_truncated_polynomial(q, 3);
  CHECK_THROWS_AS(build_lam(a, regular_module(a), 5, 100), ResourceError);
}

TEST_CASE("Kaehler presentations") {
  Rationals q;
  PrimeField f2(2), f3(3);

  CHECK(kaehler_tensor(*make_base_field_algebra(q), *regular_module(make_base_field_algebra(q))).dim() == 0);

  auto a_q = make_truncated_polynomial(q, 2);
  auto a_2 = make_truncated_polynomial(f2, 2);
  auto a_3 = make_truncated_polynomial(f3, 2);
  CHECK(kaehler_tensor(*a_q, *regular_module(a_q)).dim() == 1);
  CHECK(kaehler_tensor(*a_2, *regular_module(a_2)).dim() == 2);
  CHECK(kaehler_tensor(*a_q, *residue_module(a_q)).dim() == 1);
  CHECK(kaehler_tensor(*a_2, *residue_module(a_2)).dim() == 1);
  CHECK(kaehler_tensor(*a_3, *residue_module(a_3)).dim() == 1);

  // K[x]/(x^3): dim 2 away from characteristic 3, dim 3 at characteristic 3
  auto b_q = make_truncated_polynomial(q, 3);
  auto b_3 = make_truncated_polynomial(f3, 3);
  CHECK(kaehler_tensor(*b_q, *regular_module(b_q)).dim() == 2);
  CHECK(kaehler_tensor(*b_3, *regular_module(b_3)).dim() == 3);

  // fat point: Omega^1 (x) K has rank 2 in every characteristic
  auto c_q = make_fat_point(q);
  auto c_2 = make_fat_point(f2);
  CHECK(kaehler_tensor(*c_q, *residue_module(c_q)).dim() == 2);
  CHECK(kaehler_tensor(*c_2, *residue_module(c_2)).dim() == 2);
  CHECK(kaehler_tensor(*c_q, *regular_module(c_q)).dim() == 3);
  CHECK(kaehler_tensor(*c_2, *regular_module(c_2)).dim() == 5);
}

TEST_CASE("classical_d1 conormal oracle") {
  Rationals q;
  PrimeField f2(2), f3(3);

  auto p_q = presented_truncated_polynomial(q, 2);
  auto a_q = make_truncated_polynomial(q, 2);
  CHECK(classical_d1(p_q, *a_q, *residue_module(a_q)) == 1);
  CHECK(classical_d1(p_q, *a_q, *regular_module(a_q)) == 1);

  auto p_2 = presented_truncated_polynomial(f2, 2);
  auto a_2 = make_truncated_polynomial(f2, 2);
  CHECK(classical_d1(p_2, *a_2, *residue_module(a_2)) == 1);
  CHECK(classical_d1(p_2, *a_2, *regular_module(a_2)) == 2);

  auto p_3 = presented_truncated_polynomial(f3, 2);
  auto a_3 = make_truncated_polynomial(f3, 2);
  CHECK(classical_d1(p_3, *a_3, *regular_module(a_3)) == 1);

  // x^3: derivative 3x^2
  auto q3 = presented_truncated_polynomial(q, 3);
  auto b_q = make_truncated_polynomial(q, 3);
  CHECK(classical_d1(q3, *b_q, *residue_module(b_q)) == 1);
  CHECK(classical_d1(q3, *b_q, *regular_module(b_q)) == 2);
  auto t3 = presented_truncated_polynomial(f3, 3);
  auto b_3 = make_truncated_polynomial(f3, 3);
  CHECK(classical_d1(t3, *b_3, *residue_module(b_3)) == 1);
  CHECK(classical_d1(t3, *b_3, *regular_module(b_3)) == 3);

  // declared complete intersections only
  auto fat = presented_fat_point(q);
  auto c_q = make_fat_point(q);
  CHECK_THROWS_AS(classical_d1(fat, *c_q, *residue_module(c_q)), OracleUnavailable);
}

TEST_CASE("pi0 of L agrees with the Kaehler presentation") {
  Rationals q;
  PrimeField f2(2);
  auto a_q = make_truncated_polynomial(q, 2);
  auto a_2 = make_truncated_polynomial(f2, 2);
  auto lam_q = build_lam(a_q, regular_module(a_q), 2);
  auto lam_2 = build_lam(a_2, regular_module(a_2), 2);
  CHECK(pi0(*lam_q).dim() == 1);
  CHECK(pi0(*lam_2).dim() == 2);
  CHECK(pi0(*lam_q).dim() == kaehler_tensor(*a_q, *regular_module(a_q)).dim());
  CHECK(pi0(*lam_2).dim() == kaehler_tensor(*a_2, *regular_module(a_2)).dim());
}

TEST_CASE("invariants of L follow the divided-power dimension law") {
  Rationals q;
  auto a = make_truncated_polynomial(q, 2);
  for (auto mptr : {regular_module(a), residue_module(a)}) {
    auto lam = build_lam(a, mptr, 4);
    for (const auto& lambda : partitions_up_to(4)) {
      int n = lambda.sum();
      if (n == 0) continue;
      long expect = mptr->dim();
      for (int part : lambda.parts) expect *= binomial(2 - 1 + part, part);  // dim D^part(K^2)
      CHECK(static_cast<long>(module_invariants(*lam, n, lambda).size()) == expect);
    }
  }
}

TEST_CASE("module invariants and hom space of L at lambda=(2)") {
  Rationals q;
  auto a = make_truncated_polynomial(q, 2);
  auto lam = build_lam(a, regular_module(a), 2);
  CHECK(module_invariants(*lam, 2, Partition({2})).size() == 6);
  auto h = hom_space(Partition({2}), ModulePtr<Rationals>(lam));
  CHECK(h.basis.size() == 6);
  auto eta = h.realize(h.basis[0]);
  CHECK(eta.natural(2));
}

TEST_CASE("lam_of_module_ses") {
  Rationals q;
  auto a = make_truncated_polynomial(q, 2);
  auto m = regular_module(a);
  auto k = residue_module(a);

  // (x) as a submodule of A
  auto xmod = std::make_shared<FiniteModule<Rationals>>();
  xmod->over = a;
  xmod->name = "(x)";
  xmod->basis = {"x"};
  {
    Matrix<Rationals> act1(q, 1, 1), actx(q, 1, 1);
    act1.at(0, 0) = q.one();
    xmod->action = {act1, actx};
  }
  Matrix<Rationals> iota(q, 2, 1);
  iota.at(1, 0) = q.one();
  Matrix<Rationals> pi(q, 1, 2);
  pi.at(0, 0) = q.one();

  auto ses = lam_of_module_ses<Rationals>(a, xmod, m, k, iota, pi, 3);
  CHECK(ses.inclusion.natural(2));
  CHECK(ses.projection.natural(2));
  // pi . iota = 0 level-wise
  auto comp = compose(ses.projection, ses.inclusion);
  for (int n = 0; n <= 3; ++n)
    CHECK(comp.at(n) == Matrix<Rationals>(q, comp.target->dim(n), comp.source->dim(n)));
  CHECK(is_y_epi(ses.projection, 3).ok);

  // level-wise exactness
  for (int n = 0; n <= 3; ++n)
    CHECK(rank_of(ses.inclusion.at(n)) + rank_of(ses.projection.at(n)) == ses.inclusion.target->dim(n));

  // inexact input is rejected
  Matrix<Rationals> bad_pi(q, 1, 2);
  CHECK_THROWS_AS(lam_of_module_ses<Rationals>(a, xmod, m, k, iota, bad_pi, 2), std::invalid_argument);
}

TEST_CASE("lam_of_algebra_surjection") {
  Rationals q;
  auto b = make_truncated_polynomial(q, 3);
  auto a = make_truncated_polynomial(q, 2);
  auto phi = truncation_surjection(q, b, a);

  auto eta_k = lam_of_algebra_surjection(b, a, phi, residue_module(a), 3);
  CHECK(eta_k.natural(2));
  CHECK(is_y_epi(eta_k, 3).ok);

  auto eta_a = lam_of_algebra_surjection(b, a, phi, regular_module(a), 3);
  CHECK(is_y_epi(eta_a, 3).ok);

  // kernel at level [1] has dimension dim M * (dim B - dim A) = 1
  auto ker = kernel_module(eta_k);
  CHECK(ker.module->dim(1) == 1);

  // identity surjection gives the identity transformation
  auto psi = truncation_surjection(q, a, a);
  auto eta_id = lam_of_algebra_surjection(a, a, psi, residue_module(a), 2);
  for (int n = 0; n <= 2; ++n)
    CHECK(eta_id.at(n) == Matrix<Rationals>::identity(q, eta_id.source->dim(n)));

  // non-surjective map rejected
  Matrix<Rationals> notsurj(q, 2, 3);
  CHECK_THROWS_AS(lam_of_algebra_surjection(b, a, notsurj, residue_module(a), 2), std::invalid_argument);
}

TEST_CASE("polynomial slice dimensions match symmetric powers") {
  // degree-e slice of K[t_0..t_m] against C(m+e, e)
  for (int m = 0; m <= 3; ++m)
    for (int e = 0; e <= 3; ++e) CHECK(monomial_count(m + 1, e) == binomial(m + e, e));
}

TEST_CASE("presented algebra normal form") {
  Rationals q;
  auto p = presented_truncated_polynomial(q, 3);
  auto basis = p.monomial_basis();
  REQUIRE(basis.size() == 3);
  CHECK(monomial_string(p.vars, basis[0]) == "1");
  CHECK(monomial_string(p.vars, basis[1]) == "x");
  CHECK(monomial_string(p.vars, basis[2]) == "x^2");

  auto fat = presented_fat_point(q);
  CHECK(fat.monomial_basis().size() == 3);

  // a non-monomial relator defeats the built-in normal form
  PresentedAlgebra<Rationals> bad;
  bad.field = q;
  bad.vars = {"x"};
  Polynomial<Rationals> g;
  g[Monomial{2}] = q.one();
  g[Monomial{1}] = q.one();
  bad.relators.push_back(g);
  bad.complete_intersection = true;
  CHECK_THROWS_AS(bad.monomial_basis(), OracleUnavailable);
}
