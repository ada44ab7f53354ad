#pragma once

// Brute-force reference computations used only by tests. Everything here
// works on small int64 matrices and never calls into the library's
// elimination code, so agreement with the library is meaningful.

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

namespace toric::oracle {

using Matrix64 = std::vector<std::vector<std::int64_t>>;

/// Determinant by Laplace expansion, row by row, memoized over the set of
/// columns already used (O(2^n n), fine up to n ~ 16).
inline std::int64_t determinant(const Matrix64& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  std::vector<std::int64_t> ways(std::size_t{1} << n, 0);
  ways[0] = 1;
  for (std::size_t mask = 0; mask + 1 < ways.size(); ++mask) {
    if (ways[mask] == 0) continue;
    const std::size_t row = static_cast<std::size_t>(__builtin_popcountll(mask));
    for (std::size_t c = 0; c < n; ++c) {
      if (mask >> c & 1 || a[row][c] == 0) continue;
      // Sign of placing column c after the columns already used above it.
      const int above = __builtin_popcountll(mask >> c);
      ways[mask | std::size_t{1} << c] += (above % 2 ? -1 : 1) * a[row][c] * ways[mask];
    }
  }
  return ways.back();
}

/// Calls f on every k-subset of {0..n-1} in lexicographic order until f
/// returns false.
inline void for_each_subset(std::size_t n, std::size_t k,
                            const std::function<bool(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  for (;;) {
    if (!f(idx)) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// gcd of all j x j minors (the j-th determinantal divisor). D_0 = 1.
inline std::int64_t determinantal_divisor(const Matrix64& a, std::size_t j) {
  if (j == 0) return 1;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::int64_t g = 0;
  for_each_subset(rows, j, [&](const std::vector<std::size_t>& rs) {
    for_each_subset(cols, j, [&](const std::vector<std::size_t>& cs) {
      Matrix64 sub(j, std::vector<std::int64_t>(j));
      for (std::size_t r = 0; r < j; ++r)
        for (std::size_t c = 0; c < j; ++c) sub[r][c] = a[rs[r]][cs[c]];
      g = std::gcd(g, std::llabs(determinant(sub)));
      return g != 1;
    });
    return g != 1;
  });
  return g;
}

/// Rank as the size of the largest nonvanishing minor.
inline std::size_t rank_by_minors(const Matrix64& a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t j = std::min(rows, cols); j > 0; --j)
    if (determinantal_divisor(a, j) != 0) return j;
  return 0;
}

/// Elementary divisors d_1 | d_2 | ... of the nonzero part, via
/// d_j = D_j / D_{j-1}. Only the top minors are enumerated: once some
/// D_j == 1 every smaller divisor is 1.
inline std::vector<std::int64_t> elementary_divisors(const Matrix64& a) {
  const std::size_t r = rank_by_minors(a);
  std::vector<std::int64_t> d(r, 1);
  std::int64_t upper = r ? determinantal_divisor(a, r) : 1;
  for (std::size_t j = r; j > 0; --j) {
    if (upper == 1) break;
    const std::int64_t lower = determinantal_divisor(a, j - 1);
    d[j - 1] = upper / lower;
    upper = lower;
  }
  return d;
}

/// Integer cohomology H^d from the boundary maps, by universal coefficients:
/// free rank = betti_d and torsion = torsion of H_{d-1} = divisors of the
/// boundary map into degree d-1 that exceed 1.
struct CohomologyOracle {
  std::size_t free_rank = 0;
  std::vector<std::int64_t> torsion;
  std::size_t real_dim = 0;
};

/// simplices[k] lists the k-simplices as sorted vertex vectors.
inline Matrix64 boundary_matrix(const std::vector<std::vector<std::vector<std::size_t>>>& simplices,
                                std::size_t k) {
  // rows: (k-1)-simplices, cols: k-simplices
  if (k == 0 || k >= simplices.size()) return {};
  const auto& lower = simplices[k - 1];
  const auto& upper = simplices[k];
  Matrix64 m(lower.size(), std::vector<std::int64_t>(upper.size(), 0));
  for (std::size_t c = 0; c < upper.size(); ++c) {
    for (std::size_t omit = 0; omit < upper[c].size(); ++omit) {
      std::vector<std::size_t> face;
      for (std::size_t t = 0; t < upper[c].size(); ++t)
        if (t != omit) face.push_back(upper[c][t]);
      for (std::size_t r = 0; r < lower.size(); ++r)
        if (lower[r] == face) m[r][c] = (omit % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

inline CohomologyOracle cohomology(const std::vector<std::vector<std::vector<std::size_t>>>& simplices,
                                   std::size_t d) {
  CohomologyOracle out;
  const std::size_t cd = d < simplices.size() ? simplices[d].size() : 0;
  const Matrix64 bd = boundary_matrix(simplices, d);
  const Matrix64 bd1 = boundary_matrix(simplices, d + 1);
  const std::size_t rank_d = bd.empty() || bd[0].empty() ? 0 : rank_by_minors(bd);
  const std::size_t rank_d1 = bd1.empty() || bd1[0].empty() ? 0 : rank_by_minors(bd1);
  out.free_rank = cd - rank_d - rank_d1;
  out.real_dim = out.free_rank;
  if (!bd.empty() && !bd[0].empty())
    for (auto e : elementary_divisors(bd))
      if (e > 1) out.torsion.push_back(e);
  return out;
}

}  // namespace toric::oracle
