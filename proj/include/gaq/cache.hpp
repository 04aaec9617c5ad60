#pragma once

// Resolution cache: versioned textual serialization of the computed stages
// keyed by algebra/module fingerprints and run parameters. Cache hits must be
// byte-identical to recomputation, so every serialized field is emitted in a
// fixed deterministic order.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gaq/algebra.hpp"
#include "gaq/resolution.hpp"

namespace gaq {

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[i] = digits[v & 0xf];
    v >>= 4;
  }
  return s;
}

template <class F>
std::string algebra_fingerprint(const FiniteAlgebra<F>& a) {
  std::ostringstream os;
  os << a.field.spec().name() << ";";
  for (const auto& b : a.basis) os << b << ",";
  os << ";";
  for (const auto& row : a.structure)
    for (const auto& v : row)
      for (const auto& e : v) os << a.field.to_string(e) << ",";
  os << ";";
  for (const auto& e : a.unit) os << a.field.to_string(e) << ",";
  return hex64(fnv1a(os.str()));
}

template <class F>
std::string module_fingerprint(const FiniteModule<F>& m) {
  std::ostringstream os;
  const F& f = m.over->field;
  for (const auto& b : m.basis) os << b << ",";
  os << ";";
  for (const auto& act : m.action)
    for (long r = 0; r < act.rows(); ++r)
      for (long c = 0; c < act.cols(); ++c) os << f.to_string(act.at(r, c)) << ",";
  return hex64(fnv1a(os.str()));
}

struct CacheKey {
  std::string algebra;
  std::string module;
  std::string field;
  int N = 0, B = 0, d = 0;
  std::string mode = "rel";  // rel | abs | tor:<weight>
  bool include_empty = true;

  std::string str() const {
    std::ostringstream os;
    os << "alg=" << algebra << " mod=" << module << " field=" << field << " N=" << N << " B=" << B
       << " d=" << d << " mode=" << mode << " empty=" << (include_empty ? 1 : 0);
    return os.str();
  }
  std::string filename() const { return hex64(fnv1a(str())) + ".gaqc"; }
};

inline constexpr const char* kCacheMagic = "gamma-aq-cache";
inline constexpr int kCacheVersion = 1;

// Serialize report dims plus the full stage data (shapes, ranks,
// certificates and the realize vectors of every summand).
template <class F>
std::string serialize_resolution(const CacheKey& key, const PiReport& rep,
                                 const std::vector<CoverStage<F>>& stages, const F& f) {
  std::ostringstream os;
  os << kCacheMagic << " " << kCacheVersion << "\n";
  os << "key " << key.str() << "\n";
  os << "dims";
  for (long d : rep.dims) os << " " << d;
  os << "\n";
  os << "stages " << stages.size() << "\n";
  for (const auto& st : stages) {
    os << "stage\n";
    for (const auto& [lam, mult] : st.shape) os << "shape " << lam.str() << " " << mult << "\n";
    os << "leveldims";
    for (long d : st.level_dim) os << " " << d;
    os << "\n";
    os << "ranks " << st.rank_delta << " " << st.t_rank << " " << st.s_rank << " " << st.rank_bd2 << "\n";
    for (const auto& c : st.certs) os << "cert " << c.lambda << " " << c.rank << " " << c.expected << "\n";
    for (const auto& sm : st.summands) {
      os << "summand " << sm.shape_idx << " " << sm.x.size();
      for (const auto& [idx, v] : sm.x) os << " " << idx << ":" << f.to_string(v);
      os << "\n";
    }
  }
  os << "end\n";
  return os.str();
}

struct CachedResolution {
  CacheKey key;
  std::vector<long> dims;
  std::string text;  // full serialized payload
};

inline std::filesystem::path cache_dir() {
  if (const char* env = std::getenv("GAMMA_AQ_CACHE_DIR")) return std::filesystem::path(env);
  return std::filesystem::path(".gamma-aq-cache");
}

inline void cache_store(const CacheKey& key, const std::string& payload) {
  auto dir = cache_dir();
  std::filesystem::create_directories(dir);
  std::ofstream out(dir / key.filename(), std::ios::binary);
  out << payload;
}

inline std::optional<CachedResolution> cache_load(const CacheKey& key, std::string* warning = nullptr) {
  auto path = cache_dir() / key.filename();
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::stringstream ss;
  ss << in.rdbuf();
  CachedResolution res;
  res.key = key;
  res.text = ss.str();
  std::istringstream lines(res.text);
  std::string magic;
  int version = 0;
  lines >> magic >> version;
  if (magic != kCacheMagic || version != kCacheVersion) {
    if (warning) *warning = "cache file " + path.string() + " has an unknown version; ignoring";
    return std::nullopt;
  }
  std::string line;
  std::getline(lines, line);  // rest of header line
  bool key_ok = false, have_dims = false, ended = false;
  while (std::getline(lines, line)) {
    if (line.rfind("key ", 0) == 0) key_ok = line.substr(4) == key.str();
    if (line.rfind("dims", 0) == 0) {
      std::istringstream ds(line.substr(4));
      long v;
      while (ds >> v) res.dims.push_back(v);
      have_dims = true;
    }
    if (line == "end") ended = true;
  }
  if (!key_ok || !have_dims || !ended) {
    if (warning) *warning = "cache file " + path.string() + " is corrupted; ignoring";
    return std::nullopt;
  }
  return res;
}

inline std::vector<std::pair<std::string, std::uintmax_t>> cache_ls() {
  std::vector<std::pair<std::string, std::uintmax_t>> out;
  auto dir = cache_dir();
  if (!std::filesystem::exists(dir)) return out;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".gaqc")
      out.emplace_back(e.path().filename().string(), e.file_size());
  std::sort(out.begin(), out.end());
  return out;
}

inline long cache_clear() {
  long n = 0;
  auto dir = cache_dir();
  if (!std::filesystem::exists(dir)) return 0;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".gaqc") {
      std::filesystem::remove(e.path());
      ++n;
    }
  return n;
}

}  // namespace gaq
