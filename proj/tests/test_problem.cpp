#include <catch2/catch_amalgamated.hpp>

#include <filesystem>

#include "gaq/commands.hpp"

using namespace gaq;

namespace {
const std::string kProblems = GAQ_PROBLEMS_DIR;
}

TEST_CASE("shipped corpus files parse and validate") {
  long count = 0;
  for (const auto& e : std::filesystem::directory_iterator(kProblems)) {
    if (e.path().extension() != ".prob") continue;
    ++count;
    auto p = parse_problem(e.path().string());
    with_field(p.field, [&](auto f) {
      auto inst = instantiate(f, p);
      CHECK(!validate_algebra(*inst.algebra).has_value());
      CHECK(!validate_module(*inst.module).has_value());
      return 0;
    });
  }
  CHECK(count == 24);
}

TEST_CASE("the K[x]/(x^2) over F2 fixture") {
  auto p = parse_problem(kProblems + std::string("/kx2_a_f2.prob"));
  CHECK(p.field == FieldSpec::prime(2));
  CHECK(p.algebra_basis.size() == 2);
  CHECK(p.has_presentation);
  CHECK(p.complete_intersection);
  PrimeField f2(2);
  auto inst = instantiate(f2, p);
  CHECK(inst.algebra->dim() == 2);
  REQUIRE(inst.presented.has_value());
  CHECK(inst.presented->monomial_basis().size() == 2);
}

TEST_CASE("parse errors name line and token") {
  try {
    Rationals q;
    instantiate(q, parse_problem_text(
        "field Q\nalgebra\n  basis 1\n  unit 1\n  1*1 = bogus\nend\nmodule\n  basis m\n  1*m = m\nend\n"));
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 5);
    CHECK(e.token == "bogus");
  }
  CHECK_THROWS_AS(parse_problem_text("algebra\nend\n"), ParseError);  // missing field
  CHECK_THROWS_AS(parse_problem_text("field F7\n"), ParseError);      // bad field syntax
  CHECK_THROWS_AS(parse_problem_text("field Fp 6\n"), ParseError);    // composite modulus
}

TEST_CASE("conflicting products are a commutativity violation") {
  std::string text =
      "field Q\nalgebra\n  basis 1 x\n  unit 1\n  1*1 = 1\n  1*x = x\n  x*1 = 0\n  x*x = 0\nend\n"
      "module\n  basis m\n  1*m = m\n  x*m = 0\nend\n";
  try {
    Rationals q;
    instantiate(q, parse_problem_text(text));
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("commutativity fails at (") != std::string::npos);
  }
}

TEST_CASE("missing products and actions are rejected") {
  std::string no_prod =
      "field Q\nalgebra\n  basis 1 x\n  unit 1\n  1*1 = 1\n  1*x = x\nend\n"
      "module\n  basis m\n  1*m = m\n  x*m = 0\nend\n";
  CHECK_THROWS_AS(instantiate(Rationals{}, parse_problem_text(no_prod)), ValidationError);

  std::string no_act =
      "field Q\nalgebra\n  basis 1\n  unit 1\n  1*1 = 1\nend\nmodule\n  basis m\nend\n";
  CHECK_THROWS_AS(instantiate(Rationals{}, parse_problem_text(no_act)), ValidationError);
}

TEST_CASE("presentation dimension mismatch is rejected") {
  std::string text =
      "field Q\nalgebra\n  basis 1 x\n  unit 1\n  1*1 = 1\n  1*x = x\n  x*x = 0\nend\n"
      "module\n  basis m\n  1*m = m\n  x*m = 0\nend\n"
      "presentation\n  vars x\n  relator x^3\n  ci\nend\n";
  CHECK_THROWS_AS(instantiate(Rationals{}, parse_problem_text(text)), ValidationError);
}

TEST_CASE("cmd_pi0 reports MATCH on corpus spot values") {
  auto r1 = cmd_pi0(parse_problem(kProblems + std::string("/kx2_a_q.prob")));
  CHECK(r1.exit_code == 0);
  CHECK(r1.doc["results"]["pi0_dim"] == 1);
  CHECK(r1.doc["results"]["kaehler_dim"] == 1);
  CHECK(r1.doc["results"]["verdict"] == "MATCH");
  // numbers in the human text appear in the machine document
  CHECK(r1.human.find("dim 1") != std::string::npos);
  CHECK(r1.human.find("MATCH") != std::string::npos);

  auto r2 = cmd_pi0(parse_problem(kProblems + std::string("/kx2_a_f2.prob")));
  CHECK(r2.doc["results"]["pi0_dim"] == 2);

  auto r3 = cmd_pi0(parse_problem(kProblems + std::string("/k_k_q.prob")));
  CHECK(r3.doc["results"]["pi0_dim"] == 0);
  CHECK(r3.doc["results"]["kaehler_dim"] == 0);
}

TEST_CASE("cmd_classical") {
  auto p = parse_problem(kProblems + std::string("/kx2_a_f2.prob"));
  auto r0 = cmd_classical(p, 0);
  CHECK(r0.doc["results"]["dim"] == 2);
  auto r1 = cmd_classical(p, 1);
  CHECK(r1.doc["results"]["dim"] == 2);

  // the fat point is not a declared complete intersection: no oracle
  auto fat = parse_problem(kProblems + std::string("/kxy_a_q.prob"));
  auto r2 = cmd_classical(fat, 1);
  CHECK(r2.doc["results"]["status"] == "no oracle");
}

TEST_CASE("cmd_piy on a Gamma(lambda) input") {
  PiyOptions o;
  o.d = 2;
  o.N = 2;
  o.B = 2;
  o.use_cache = false;
  auto r = cmd_piy_gamma(FieldSpec::prime(2), Partition({2}), o);
  CHECK(r.doc["results"]["dims"] == Json::array({1, 0, 0}));
  CHECK(r.exit_code == 0);
}

TEST_CASE("schema version is declared") {
  auto r = cmd_pi0(parse_problem(kProblems + std::string("/k_a_q.prob")));
  CHECK(r.doc["schema_version"] == kSchemaVersion);
  CHECK(r.doc["command"] == "pi0");
}
