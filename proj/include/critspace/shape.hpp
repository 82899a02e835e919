#pragma once

#include <Eigen/Core>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace critspace {

/// One tensor factor Sym^degree(C^dim). dim counts variables (n_p + 1).
struct Factor {
  int dim = 0;
  int degree = 0;
  friend bool operator==(const Factor&, const Factor&) = default;
};

/// Multi-homogeneous exponent: one exponent vector per factor, |alpha_p| = d_p.
struct MultiExponent {
  std::vector<std::vector<int>> exponents;
  friend bool operator==(const MultiExponent&, const MultiExponent&) = default;
};

/// The shape Sym^{d_1}C^{m_1} x ... x Sym^{d_k}C^{m_k} together with its
/// monomial basis tables. Immutable and cheap to copy (shared tables).
///
/// Basis order convention, fixed for every dense coefficient vector in this
/// project: within a factor, exponent vectors of total degree d_p are listed
/// in descending lex order (all of x_0^d first); across factors the index is
/// row-major with factor 1 slowest and factor k fastest.
class Shape {
 public:
  Shape() = default;
  explicit Shape(std::vector<Factor> factors);

  static Shape symmetric(int dim, int degree) { return Shape({Factor{dim, degree}}); }
  static Shape segre(const std::vector<int>& dims);
  /// Binary partially symmetric: Sym^{d_1}C^2 x ... x Sym^{d_k}C^2.
  static Shape binary(const std::vector<int>& degrees);

  bool valid() const { return d_ != nullptr; }
  int factor_count() const { return static_cast<int>(d_->factors.size()); }
  const std::vector<Factor>& factors() const { return d_->factors; }
  const Factor& factor(int p) const { return d_->factors.at(p); }
  Eigen::Index basis_size() const { return d_->total; }

  int factor_basis_size(int p) const { return static_cast<int>(d_->exps[p].size()); }
  Eigen::Index stride(int p) const { return d_->strides[p]; }
  /// Exponent vector of the r-th monomial of factor p.
  const std::vector<int>& factor_exponent(int p, int r) const { return d_->exps[p][r]; }
  /// Rank of an exponent vector within factor p. Throws if it is not
  /// multi-homogeneous of the right degree.
  int factor_rank(int p, std::span<const int> exp) const;

  void decode(Eigen::Index flat, std::vector<int>& factor_ranks) const;
  Eigen::Index encode(std::span<const int> factor_ranks) const;
  MultiExponent exponent_at(Eigen::Index flat) const;
  Eigen::Index flat_index(const MultiExponent& me) const;

  /// True when every factor has degree 1 (ordinary Segre tensor).
  bool is_segre() const;
  std::vector<int> dims() const;
  std::vector<int> degrees() const;

  std::string label() const;

  friend bool operator==(const Shape& a, const Shape& b) {
    if (a.d_ == b.d_) return true;
    if (!a.d_ || !b.d_) return false;
    return a.d_->factors == b.d_->factors;
  }

 private:
  struct Data {
    std::vector<Factor> factors;
    std::vector<std::vector<std::vector<int>>> exps;  // [factor][rank] -> exponent
    std::vector<Eigen::Index> strides;
    Eigen::Index total = 1;
  };
  std::shared_ptr<const Data> d_;
};

/// All multi-homogeneous exponents of `shape` in the documented order.
std::vector<MultiExponent> monomial_basis(const Shape& shape);

}  // namespace critspace
