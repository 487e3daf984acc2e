#include "polyadp/stochastic.hpp"

#include <cmath>
#include <stdexcept>

namespace polyadp {

double gaussian_moment(int k, double mean, double stddev) {
  if (k < 0) throw std::invalid_argument("gaussian_moment: k must be >= 0");
  double m_prev = 0.0, m = 1.0;  // M_{-1} unused, M_0 = 1
  for (int i = 1; i <= k; ++i) {
    const double next = mean * m + (i - 1) * stddev * stddev * m_prev;
    m_prev = m;
    m = next;
  }
  return m;
}

NoiseSpec NoiseSpec::unit_gaussian(int dim) {
  NoiseSpec s;
  s.dim = dim;
  s.mean.assign(dim, 0.0);
  s.stddev.assign(dim, 1.0);
  return s;
}

double NoiseSpec::moment(int component, int k) const {
  return gaussian_moment(k, mean.at(component), stddev.at(component));
}

void NoiseSpec::validate() const {
  if (static_cast<int>(mean.size()) != dim ||
      static_cast<int>(stddev.size()) != dim)
    throw std::invalid_argument("NoiseSpec: mean/stddev length must equal dim");
  for (double s : stddev)
    if (s < 0) throw std::invalid_argument("NoiseSpec: stddev entries must be >= 0");
}

Polynomial expect_noise(const Polynomial& p, const NoiseSpec& noise) {
  const BlockDims& d = p.dims();
  if (d[Block::noise] > noise.dim)
    throw DimensionError("expect_noise: polynomial has more noise variables than the spec");
  BlockDims rd = d;
  rd[Block::noise] = 0;
  Polynomial r(rd);
  const int off = d.offset(Block::noise);
  for (const auto& [e, c] : p.terms()) {
    double coeff = c;
    for (int i = 0; i < d[Block::noise]; ++i) {
      const int k = e[off + i];
      if (k > 0) coeff *= noise.moment(i, k);
    }
    Exponents ne(rd.total(), 0);
    for (Block b : kAllBlocks) {
      if (b == Block::noise) continue;
      const int so = d.offset(b), to = rd.offset(b);
      for (int i = 0; i < d[b]; ++i) ne[to + i] = e[so + i];
    }
    r.add_term(ne, coeff);
  }
  return r;
}

WeightSpec WeightSpec::uniform(std::vector<std::array<double, 2>> box) {
  WeightSpec w;
  w.box = std::move(box);
  return w;
}

void WeightSpec::validate() const {
  for (const auto& [lo, hi] : box)
    if (!(lo < hi)) throw std::invalid_argument("WeightSpec: box needs lo < hi");
  if (!density.is_zero()) {
    if (density.degree_in(Block::input) > 0 ||
        density.degree_in(Block::noise) > 0 || density.degree_in(Block::aux) > 0)
      throw std::invalid_argument("WeightSpec: density must be a polynomial in x only");
  }
}

double box_monomial_integral(const Exponents& state_exps,
                             const std::vector<std::array<double, 2>>& box) {
  double v = 1.0;
  for (std::size_t i = 0; i < box.size(); ++i) {
    const int k = i < state_exps.size() ? state_exps[i] : 0;
    const double lo = box[i][0], hi = box[i][1];
    v *= (std::pow(hi, k + 1) - std::pow(lo, k + 1)) / (k + 1);
  }
  return v;
}

namespace {

double raw_box_integral(const Polynomial& p,
                        const std::vector<std::array<double, 2>>& box) {
  const BlockDims& d = p.dims();
  const int off = d.offset(Block::state);
  double sum = 0.0;
  for (const auto& [e, c] : p.terms()) {
    Exponents se(e.begin() + off, e.begin() + off + d[Block::state]);
    sum += c * box_monomial_integral(se, box);
  }
  return sum;
}

}  // namespace

double box_integral(const Polynomial& p, const WeightSpec& weight) {
  const BlockDims& d = p.dims();
  if (d[Block::input] > 0 && p.degree_in(Block::input) > 0)
    throw DimensionError("box_integral: polynomial must be over the state block");
  if (p.degree_in(Block::noise) > 0 || p.degree_in(Block::aux) > 0)
    throw DimensionError("box_integral: polynomial must be over the state block");
  if (d[Block::state] > weight.dim())
    throw DimensionError("box_integral: weight box does not match state dimension");
  if (weight.is_uniform()) {
    double volume = 1.0;
    for (const auto& [lo, hi] : weight.box) volume *= (hi - lo);
    return raw_box_integral(p, weight.box) / volume;
  }
  const double z = raw_box_integral(weight.density, weight.box);
  if (z <= 0.0)
    throw std::invalid_argument("box_integral: density integrates to a non-positive value");
  return raw_box_integral(p * weight.density, weight.box) / z;
}

}  // namespace polyadp
