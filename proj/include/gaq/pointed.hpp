#pragma once

// The category of finite pointed sets [n] = {0,1,...,n} with basepoint 0,
// partitions and Young subgroups.

#include <algorithm>
#include <cassert>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gaq/matrix.hpp"

namespace gaq {

// Basepoint-preserving map [n] -> [m]; images[i-1] is the image of i,
// 0 -> 0 is implicit.
struct PointedMap {
  int target = 0;
  std::vector<int> images;

  PointedMap() = default;
  PointedMap(int target_, std::vector<int> images_) : target(target_), images(std::move(images_)) {
    for (int v : images)
      if (v < 0 || v > target) throw std::invalid_argument("pointed map image out of range");
  }

  int source() const { return static_cast<int>(images.size()); }
  int operator()(int i) const {
    if (i == 0) return 0;
    return images[i - 1];
  }
  static PointedMap identity(int n) {
    std::vector<int> im(n);
    for (int i = 0; i < n; ++i) im[i] = i + 1;
    return {n, std::move(im)};
  }
  bool is_identity() const {
    if (target != source()) return false;
    for (int i = 1; i <= source(); ++i)
      if (images[i - 1] != i) return false;
    return true;
  }

  auto operator<=>(const PointedMap&) const = default;

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(images[i]);
    }
    return s + "]->" + std::to_string(target);
  }
};

inline PointedMap compose(const PointedMap& g, const PointedMap& f) {
  if (f.target != g.source())
    throw std::invalid_argument("compose: level mismatch " + std::to_string(f.target) + " vs " + std::to_string(g.source()));
  std::vector<int> im(f.images.size());
  for (std::size_t i = 0; i < f.images.size(); ++i) im[i] = g(f.images[i]);
  return {g.target, std::move(im)};
}

// All (m+1)^n pointed maps [n] -> [m] in lexicographic order of images.
inline std::vector<PointedMap> enumerate_maps(int n, int m) {
  if (n < 0 || m < 0) throw std::invalid_argument("negative level");
  std::vector<PointedMap> out;
  std::vector<int> im(n, 0);
  while (true) {
    out.push_back(PointedMap{m, im});
    int i = n - 1;
    while (i >= 0 && im[i] == m) im[i--] = 0;
    if (i < 0) break;
    ++im[i];
  }
  return out;
}

// The three maps [2] -> [1] whose alternating sum presents pi_0.
inline PointedMap face_d0() { return {1, {1, 0}}; }
inline PointedMap face_d1() { return {1, {1, 1}}; }  // folding map
inline PointedMap face_d2() { return {1, {0, 1}}; }

// --- partitions ---------------------------------------------------------------

// Weakly decreasing positive parts; the empty partition is allowed and denotes
// the trivial Young subgroup at level 0.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p) : parts(std::move(p)) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i] < 1) throw std::invalid_argument("partition parts must be >= 1");
      if (i && parts[i] > parts[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
  int sum() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
  }
  int count() const { return static_cast<int>(parts.size()); }
  auto operator<=>(const Partition&) const = default;

  std::string str() const {
    if (parts.empty()) return "()";
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts[i]);
    }
    return s + ")";
  }
};

inline void enumerate_partitions_of(int n, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.parts.push_back(p);
    enumerate_partitions_of(n - p, p, cur, out);
    cur.parts.pop_back();
  }
}

// All partitions with 0 <= s(lambda) <= bound, ordered by sum then by parts in
// lexicographically decreasing order; includes the empty partition.
inline std::vector<Partition> partitions_up_to(int bound) {
  if (bound < 0) throw std::invalid_argument("negative partition bound");
  std::vector<Partition> out;
  Partition cur;
  for (int s = 0; s <= bound; ++s) enumerate_partitions_of(s, s, cur, out);
  return out;
}

// Adjacent transpositions within each block, as automorphisms of [s(lambda)].
// They generate the Young subgroup Sigma(lambda).
inline std::vector<PointedMap> young_generators(const Partition& lambda) {
  std::vector<PointedMap> gens;
  int offset = 0;
  for (int part : lambda.parts) {
    for (int i = 1; i < part; ++i) {
      PointedMap t = PointedMap::identity(lambda.sum());
      std::swap(t.images[offset + i - 1], t.images[offset + i]);
      gens.push_back(std::move(t));
    }
    offset += part;
  }
  return gens;
}

// Generators of Sigma(a) x Sigma(b) inside Sigma_{s(a)+s(b)} (the b-strands
// shifted past the a-strands); used for tensor-projectivity tests.
inline std::vector<PointedMap> product_young_generators(const Partition& a, const Partition& b) {
  const int sa = a.sum(), sb = b.sum();
  std::vector<PointedMap> gens;
  for (const auto& g : young_generators(a)) {
    PointedMap t = PointedMap::identity(sa + sb);
    for (int i = 1; i <= sa; ++i) t.images[i - 1] = g(i);
    gens.push_back(std::move(t));
  }
  for (const auto& g : young_generators(b)) {
    PointedMap t = PointedMap::identity(sa + sb);
    for (int i = 1; i <= sb; ++i) t.images[sa + i - 1] = sa + g(i);
    gens.push_back(std::move(t));
  }
  return gens;
}

// Block id of each point 1..s(lambda).
inline std::vector<int> block_of_point(const Partition& lambda) {
  std::vector<int> block;
  for (int b = 0; b < lambda.count(); ++b)
    for (int i = 0; i < lambda.parts[b]; ++i) block.push_back(b);
  return block;
}

// Canonical representative of the Sigma(lambda)-precomposition orbit of f:
// images sorted increasingly within each block.
inline std::vector<int> canonical_rep(const Partition& lambda, std::vector<int> images) {
  int offset = 0;
  for (int part : lambda.parts) {
    std::sort(images.begin() + offset, images.begin() + offset + part);
    offset += part;
  }
  return images;
}

// --- category generators ------------------------------------------------------

// Every pointed map is a composite of adjacent transpositions, the fold
// (n-1,n -> n-1), the drop (n -> 0) and the inclusion [n] -> [n+1]; the
// factorization never leaves levels <= max(source, target). Used to cut the
// relation set of coend presentations down to a generating family.
inline std::vector<PointedMap> generating_maps(int level_bound) {
  std::vector<PointedMap> out;
  for (int n = 1; n <= level_bound; ++n) {
    for (int i = 1; i < n; ++i) {
      PointedMap t = PointedMap::identity(n);
      std::swap(t.images[i - 1], t.images[i]);
      out.push_back(std::move(t));
    }
    if (n >= 2) {
      std::vector<int> im(n);
      for (int i = 1; i <= n; ++i) im[i - 1] = std::min(i, n - 1);
      out.emplace_back(n - 1, std::move(im));  // fold
    }
    {
      std::vector<int> im(n);
      for (int i = 1; i < n; ++i) im[i - 1] = i;
      im[n - 1] = 0;
      out.emplace_back(n - 1, std::move(im));  // drop
    }
  }
  for (int n = 0; n < level_bound; ++n) {
    std::vector<int> im(n);
    for (int i = 1; i <= n; ++i) im[i - 1] = i;
    out.emplace_back(n + 1, std::move(im));  // inclusion
  }
  return out;
}

inline long binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

// dim Gamma(lambda)([m]) = prod_i C(m + lambda_i, lambda_i)
inline long gamma_lambda_dim(const Partition& lambda, int m) {
  long d = 1;
  for (int p : lambda.parts) d *= binomial(m + p, p);
  return d;
}

// Permutation matrix of a pointed automorphism acting on basis {e_1..e_n} of
// K^n by value permutation (used for Young actions on tensor factors).
template <class F>
Matrix<F> permutation_matrix(const F& f, const PointedMap& sigma) {
  int n = sigma.source();
  if (sigma.target != n) throw std::invalid_argument("not an automorphism");
  Matrix<F> m(f, n, n);
  for (int i = 1; i <= n; ++i) m.at(sigma(i) - 1, i - 1) = f.one();
  return m;
}

}  // namespace gaq
