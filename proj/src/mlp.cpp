#include "rwm/mlp.hpp"

#include <cmath>

namespace rwm {

double* MlpParams::flat(std::size_t i) {
  std::size_t n1 = static_cast<std::size_t>(w1.size());
  if (i < n1) return w1.data() + i;
  i -= n1;
  std::size_t n2 = static_cast<std::size_t>(b1.size());
  if (i < n2) return b1.data() + i;
  i -= n2;
  std::size_t n3 = static_cast<std::size_t>(w2.size());
  if (i < n3) return w2.data() + i;
  i -= n3;
  std::size_t n4 = static_cast<std::size_t>(b2.size());
  if (i < n4) return b2.data() + i;
  i -= n4;
  std::size_t n5 = static_cast<std::size_t>(w3.size());
  if (i < n5) return w3.data() + i;
  return &b3;
}

Mlp::Mlp(int in_dim, int hidden, std::uint64_t seed) : in_dim_(in_dim), hidden_(hidden) {
  std::mt19937_64 rng(seed);
  auto uniform = [&](double scale) { return (2.0 * next_double(rng) - 1.0) * scale; };
  p_.w1.resize(hidden, in_dim);
  p_.b1.resize(hidden);
  p_.w2.resize(hidden, hidden);
  p_.b2.resize(hidden);
  p_.w3.resize(hidden);
  double s1 = 1.0 / std::sqrt(std::max(1, in_dim));
  double s2 = 1.0 / std::sqrt(hidden);
  for (int i = 0; i < p_.w1.size(); ++i) p_.w1.data()[i] = uniform(s1);
  for (int i = 0; i < hidden; ++i) p_.b1[i] = uniform(s1);
  for (int i = 0; i < p_.w2.size(); ++i) p_.w2.data()[i] = uniform(s2);
  for (int i = 0; i < hidden; ++i) p_.b2[i] = uniform(s2);
  for (int i = 0; i < hidden; ++i) p_.w3[i] = uniform(s2);
  p_.b3 = uniform(s2);
}

Vec Mlp::forward(const Mat& X) const {
  Mat h1 = (X * p_.w1.transpose()).rowwise() + p_.b1.transpose();
  h1 = h1.cwiseMax(0.0);
  Mat h2 = (h1 * p_.w2.transpose()).rowwise() + p_.b2.transpose();
  h2 = h2.cwiseMax(0.0);
  Vec z = h2 * p_.w3;
  z.array() += p_.b3;
  return (1.0 / (1.0 + (-z.array()).exp())).matrix();
}

Mlp::Cache Mlp::forward_cached(const Mat& X) const {
  Cache c;
  c.X = X;
  c.Z1 = (X * p_.w1.transpose()).rowwise() + p_.b1.transpose();
  c.H1 = c.Z1.cwiseMax(0.0);
  c.Z2 = (c.H1 * p_.w2.transpose()).rowwise() + p_.b2.transpose();
  c.H2 = c.Z2.cwiseMax(0.0);
  Vec z = c.H2 * p_.w3;
  z.array() += p_.b3;
  c.v = (1.0 / (1.0 + (-z.array()).exp())).matrix();
  return c;
}

void Mlp::backward(const Cache& c, const Vec& dv, MlpParams& grad) const {
  Vec dz3 = dv.array() * c.v.array() * (1.0 - c.v.array());
  grad.w3 += c.H2.transpose() * dz3;
  grad.b3 += dz3.sum();
  Mat dh2 = dz3 * p_.w3.transpose();
  Mat dz2 = (c.Z2.array() > 0.0).cast<double>() * dh2.array();
  grad.w2 += dz2.transpose() * c.H1;
  grad.b2 += dz2.colwise().sum().transpose();
  Mat dh1 = dz2 * p_.w2;
  Mat dz1 = (c.Z1.array() > 0.0).cast<double>() * dh1.array();
  grad.w1 += dz1.transpose() * c.X;
  grad.b1 += dz1.colwise().sum().transpose();
}

AdamState::AdamState(const Mlp& net, double lr_in) {
  const MlpParams& p = net.params();
  auto zeros_like = [](const MlpParams& src, MlpParams& dst) {
    dst.w1 = Mat::Zero(src.w1.rows(), src.w1.cols());
    dst.b1 = Vec::Zero(src.b1.size());
    dst.w2 = Mat::Zero(src.w2.rows(), src.w2.cols());
    dst.b2 = Vec::Zero(src.b2.size());
    dst.w3 = Vec::Zero(src.w3.size());
    dst.b3 = 0.0;
  };
  zeros_like(p, m);
  zeros_like(p, v);
  lr = lr_in;
}

void AdamState::update(MlpParams& p, const MlpParams& g) {
  ++step;
  double bc1 = 1.0 - std::pow(beta1, step);
  double bc2 = 1.0 - std::pow(beta2, step);
  auto upd = [&](auto& pm, const auto& gm, auto& mm, auto& vm) {
    mm = beta1 * mm + (1.0 - beta1) * gm;
    vm = (beta2 * vm.array() + (1.0 - beta2) * gm.array().square()).matrix();
    pm.array() -= lr * (mm.array() / bc1) / ((vm.array() / bc2).sqrt() + eps);
  };
  upd(p.w1, g.w1, m.w1, v.w1);
  upd(p.b1, g.b1, m.b1, v.b1);
  upd(p.w2, g.w2, m.w2, v.w2);
  upd(p.b2, g.b2, m.b2, v.b2);
  upd(p.w3, g.w3, m.w3, v.w3);
  m.b3 = beta1 * m.b3 + (1.0 - beta1) * g.b3;
  v.b3 = beta2 * v.b3 + (1.0 - beta2) * g.b3 * g.b3;
  p.b3 -= lr * (m.b3 / bc1) / (std::sqrt(v.b3 / bc2) + eps);
}

}  // namespace rwm
