#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace critspace {

/// Exact binomial coefficient in 64-bit arithmetic. Throws on overflow,
/// which for the shapes handled here (degrees <= 20, dims <= 64) never fires.
inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    const std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
    if (r > UINT64_MAX / num) throw std::overflow_error("binomial overflow");
    r = r * num / static_cast<std::uint64_t>(i);
  }
  return r;
}

/// multinomial(|a|; a_0,...,a_m) = (sum a_i)! / prod a_i!, exact.
/// Computed as a product of binomials of partial sums so every intermediate
/// value is itself a (bounded) multinomial.
inline std::uint64_t multinomial(std::span<const int> a) {
  std::uint64_t r = 1;
  int s = 0;
  for (int ai : a) {
    if (ai < 0) throw std::invalid_argument("multinomial: negative exponent");
    s += ai;
    const std::uint64_t b = binomial(s, ai);
    if (b != 0 && r > UINT64_MAX / b) throw std::overflow_error("multinomial overflow");
    r *= b;
  }
  return r;
}

/// Number of monomials of total degree `degree` in `dim` variables.
inline std::uint64_t monomial_count(int dim, int degree) {
  return binomial(dim - 1 + degree, degree);
}

/// Rank of a homogeneous exponent vector among all exponents of the same
/// total degree in descending-lex order (x_0 > x_1 > ...), zero-based.
/// Example, dim 2 degree 2: (2,0) -> 0, (1,1) -> 1, (0,2) -> 2.
inline std::uint64_t monomial_rank(std::span<const int> exp, int degree) {
  const int dim = static_cast<int>(exp.size());
  std::uint64_t rank = 0;
  int remaining = degree;
  for (int p = 0; p + 1 < dim; ++p) {
    // exponents with a larger leading entry come first
    for (int a = remaining; a > exp[p]; --a)
      rank += monomial_count(dim - 1 - p, remaining - a);
    remaining -= exp[p];
  }
  return rank;
}

/// Inverse of monomial_rank.
inline std::vector<int> monomial_unrank(std::uint64_t rank, int dim, int degree) {
  std::vector<int> exp(dim, 0);
  int remaining = degree;
  for (int p = 0; p + 1 < dim; ++p) {
    for (int a = remaining; a >= 0; --a) {
      const std::uint64_t block = monomial_count(dim - 1 - p, remaining - a);
      if (rank < block) {
        exp[p] = a;
        remaining -= a;
        break;
      }
      rank -= block;
    }
  }
  exp[dim - 1] = remaining;
  return exp;
}

/// All exponent vectors of total degree `degree` in `dim` variables,
/// descending-lex order.
inline std::vector<std::vector<int>> monomial_exponents(int dim, int degree) {
  const std::uint64_t n = monomial_count(dim, degree);
  std::vector<std::vector<int>> out;
  out.reserve(n);
  for (std::uint64_t r = 0; r < n; ++r) out.push_back(monomial_unrank(r, dim, degree));
  return out;
}

/// Rank of a strictly increasing k-subset of {0..n-1} in lex order, zero-based.
/// Example, n=3 k=2: {0,1} -> 0, {0,2} -> 1, {1,2} -> 2.
inline std::uint64_t subset_rank(std::span<const int> subset, int n) {
  const int k = static_cast<int>(subset.size());
  std::uint64_t rank = 0;
  int prev = -1;
  for (int t = 0; t < k; ++t) {
    for (int v = prev + 1; v < subset[t]; ++v)
      rank += binomial(n - 1 - v, k - 1 - t);
    prev = subset[t];
  }
  return rank;
}

/// All k-subsets of {0..n-1} in lex order.
inline std::vector<std::vector<int>> subsets_lex(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  out.reserve(binomial(n, k));
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int t = k - 1;
    while (t >= 0 && cur[t] == n - k + t) --t;
    if (t < 0) break;
    ++cur[t];
    for (int s = t + 1; s < k; ++s) cur[s] = cur[s - 1] + 1;
  }
  return out;
}

}  // namespace critspace
