#include "critspace/shape.hpp"

#include <sstream>
#include <stdexcept>

#include "critspace/combinatorics.hpp"

namespace critspace {

Shape::Shape(std::vector<Factor> factors) {
  if (factors.empty()) throw std::invalid_argument("Shape: need at least one factor");
  auto d = std::make_shared<Data>();
  d->factors = std::move(factors);
  d->exps.reserve(d->factors.size());
  for (const Factor& f : d->factors) {
    if (f.dim < 1) throw std::invalid_argument("Shape: factor dim must be >= 1");
    if (f.degree < 0) throw std::invalid_argument("Shape: factor degree must be >= 0");
    d->exps.push_back(monomial_exponents(f.dim, f.degree));
    d->total *= static_cast<Eigen::Index>(d->exps.back().size());
  }
  d->strides.assign(d->factors.size(), 1);
  for (int p = static_cast<int>(d->factors.size()) - 2; p >= 0; --p)
    d->strides[p] = d->strides[p + 1] * static_cast<Eigen::Index>(d->exps[p + 1].size());
  d_ = std::move(d);
}

Shape Shape::segre(const std::vector<int>& dims) {
  std::vector<Factor> fs;
  fs.reserve(dims.size());
  for (int m : dims) fs.push_back({m, 1});
  return Shape(std::move(fs));
}

Shape Shape::binary(const std::vector<int>& degrees) {
  std::vector<Factor> fs;
  fs.reserve(degrees.size());
  for (int deg : degrees) fs.push_back({2, deg});
  return Shape(std::move(fs));
}

int Shape::factor_rank(int p, std::span<const int> exp) const {
  const Factor& f = d_->factors.at(p);
  if (static_cast<int>(exp.size()) != f.dim)
    throw std::invalid_argument("Shape::factor_rank: exponent length mismatch");
  int total = 0;
  for (int e : exp) {
    if (e < 0) throw std::invalid_argument("Shape::factor_rank: negative exponent");
    total += e;
  }
  if (total != f.degree)
    throw std::invalid_argument("Shape::factor_rank: exponent degree mismatch");
  return static_cast<int>(monomial_rank(exp, f.degree));
}

void Shape::decode(Eigen::Index flat, std::vector<int>& factor_ranks) const {
  const int k = factor_count();
  factor_ranks.resize(k);
  for (int p = 0; p < k; ++p) {
    factor_ranks[p] = static_cast<int>(flat / d_->strides[p]);
    flat %= d_->strides[p];
  }
}

Eigen::Index Shape::encode(std::span<const int> factor_ranks) const {
  Eigen::Index flat = 0;
  for (int p = 0; p < factor_count(); ++p) flat += factor_ranks[p] * d_->strides[p];
  return flat;
}

MultiExponent Shape::exponent_at(Eigen::Index flat) const {
  std::vector<int> ranks;
  decode(flat, ranks);
  MultiExponent me;
  me.exponents.reserve(factor_count());
  for (int p = 0; p < factor_count(); ++p) me.exponents.push_back(d_->exps[p][ranks[p]]);
  return me;
}

Eigen::Index Shape::flat_index(const MultiExponent& me) const {
  if (static_cast<int>(me.exponents.size()) != factor_count())
    throw std::invalid_argument("Shape::flat_index: factor count mismatch");
  Eigen::Index flat = 0;
  for (int p = 0; p < factor_count(); ++p)
    flat += static_cast<Eigen::Index>(factor_rank(p, me.exponents[p])) * d_->strides[p];
  return flat;
}

bool Shape::is_segre() const {
  for (const Factor& f : d_->factors)
    if (f.degree != 1) return false;
  return true;
}

std::vector<int> Shape::dims() const {
  std::vector<int> v;
  v.reserve(factor_count());
  for (const Factor& f : d_->factors) v.push_back(f.dim);
  return v;
}

std::vector<int> Shape::degrees() const {
  std::vector<int> v;
  v.reserve(factor_count());
  for (const Factor& f : d_->factors) v.push_back(f.degree);
  return v;
}

std::string Shape::label() const {
  std::ostringstream os;
  os << "ps(";
  for (int p = 0; p < factor_count(); ++p) {
    if (p) os << ",";
    os << "S^" << factor(p).degree << "C^" << factor(p).dim;
  }
  os << ")";
  return os.str();
}

std::vector<MultiExponent> monomial_basis(const Shape& shape) {
  std::vector<MultiExponent> out;
  out.reserve(shape.basis_size());
  for (Eigen::Index i = 0; i < shape.basis_size(); ++i) out.push_back(shape.exponent_at(i));
  return out;
}

}  // namespace critspace
