#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "gaq/commands.hpp"

using namespace gaq;

namespace {

struct CacheDirGuard {
  std::filesystem::path dir;
  CacheDirGuard() {
    dir = std::filesystem::temp_directory_path() /
          ("gaq-cache-test-" + std::to_string(::getpid()) + "-" + std::to_string(rand()));
    std::filesystem::create_directories(dir);
    ::setenv("GAMMA_AQ_CACHE_DIR", dir.c_str(), 1);
  }
  ~CacheDirGuard() {
    ::unsetenv("GAMMA_AQ_CACHE_DIR");
    std::error_code ec;
    std::filesystem::remove_all(dir, ec);
  }
};

}  // namespace

TEST_CASE("serialization is identical across recomputations") {
  PrimeField f2(2);
  auto a = make_truncated_polynomial(f2, 2);
  auto m = residue_module(a);
  CacheKey key{algebra_fingerprint(*a), module_fingerprint(*m), "F2", 3, 3, 1, "rel", true};

  auto run = [&]() {
    auto lam = build_lam(a, m, 3);
    Resolver<PrimeField> res(f2, ModulePtr<PrimeField>(lam), 3);
    auto rep = res.run(1);
    return serialize_resolution(key, rep, res.stages(), f2);
  };
  auto s1 = run();
  auto s2 = run();
  CHECK(s1 == s2);
  CHECK(s1.find("dims 1 1") != std::string::npos);
}

TEST_CASE("store and load round-trip") {
  CacheDirGuard guard;
  PrimeField f2(2);
  auto a = make_truncated_polynomial(f2, 2);
  auto m = residue_module(a);
  CacheKey key{algebra_fingerprint(*a), module_fingerprint(*m), "F2", 3, 3, 1, "rel", true};
  auto lam = build_lam(a, m, 3);
  Resolver<PrimeField> res(f2, ModulePtr<PrimeField>(lam), 3);
  auto rep = res.run(1);
  auto payload = serialize_resolution(key, rep, res.stages(), f2);
  cache_store(key, payload);

  auto hit = cache_load(key);
  REQUIRE(hit.has_value());
  CHECK(hit->dims == rep.dims);
  CHECK(hit->text == payload);

  CHECK(cache_ls().size() == 1);
  CHECK(cache_clear() == 1);
  CHECK(cache_ls().empty());
}

TEST_CASE("corrupted and mismatched cache files are ignored") {
  CacheDirGuard guard;
  PrimeField f2(2);
  auto a = make_truncated_polynomial(f2, 2);
  auto m = residue_module(a);
  CacheKey key{algebra_fingerprint(*a), module_fingerprint(*m), "F2", 3, 3, 1, "rel", true};

  {
    std::ofstream out(cache_dir() / key.filename());
    out << "garbage\n";
  }
  std::string warning;
  CHECK(!cache_load(key, &warning).has_value());
  CHECK(warning.find("ignoring") != std::string::npos);

  {
    std::ofstream out(cache_dir() / key.filename());
    out << kCacheMagic << " 99\nkey " << key.str() << "\ndims 1 1\nend\n";
  }
  warning.clear();
  CHECK(!cache_load(key, &warning).has_value());
  CHECK(warning.find("unknown version") != std::string::npos);
}

TEST_CASE("distinct fields give distinct cache keys") {
  PrimeField f2(2);
  Rationals q;
  auto a2 = make_truncated_polynomial(f2, 2);
  auto aq = make_truncated_polynomial(q, 2);
  CacheKey k2{algebra_fingerprint(*a2), module_fingerprint(*residue_module(a2)), "F2", 3, 3, 1, "rel", true};
  CacheKey kq{algebra_fingerprint(*aq), module_fingerprint(*residue_module(aq)), "Q", 3, 3, 1, "rel", true};
  CHECK(k2.str() != kq.str());
  CHECK(k2.filename() != kq.filename());
}

TEST_CASE("cached piy runs reproduce the computed report") {
  CacheDirGuard guard;
  PrimeField f2(2);
  auto a = make_truncated_polynomial(f2, 2);
  auto m = residue_module(a);
  PiyOptions o;
  o.d = 1;
  o.N = 3;
  o.B = 3;
  auto first = run_piy(f2, "t", a, m, o);
  CHECK(first.doc["results"]["cache"] == "computed");
  auto second = run_piy(f2, "t", a, m, o);
  CHECK(second.doc["results"]["cache"] == "cache");
  CHECK(strip_timings(first.doc["results"]) == strip_timings(second.doc["results"]));
}

TEST_CASE("stability is recorded against the smaller run") {
  CacheDirGuard guard;
  PrimeField f2(2);
  auto a = make_truncated_polynomial(f2, 2);
  auto m = residue_module(a);
  PiyOptions o;
  o.d = 1;
  o.N = 3;
  o.B = 3;
  run_piy(f2, "t", a, m, o);
  PiyOptions o4 = o;
  o4.N = 4;
  o4.B = 4;
  o4.cap = 1000000;
  auto rep = run_piy(f2, "t", a, m, o4);
  CHECK(rep.doc["results"]["stability"] == "stable");
  CHECK(rep.doc["results"]["previous_dims"] == Json::array({1, 1}));
}
