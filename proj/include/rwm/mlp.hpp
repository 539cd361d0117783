#ifndef RWM_MLP_HPP
#define RWM_MLP_HPP

#include <cstdint>
#include <random>

#include "rwm/types.hpp"

namespace rwm {

/// Feed-forward net: input -> 128 relu -> 128 relu -> 1 logistic.
struct MlpParams {
  Mat w1;  // h x in
  Vec b1;  // h
  Mat w2;  // h x h
  Vec b2;  // h
  Vec w3;  // h
  double b3 = 0.0;

  void setZero() {
    w1.setZero();
    b1.setZero();
    w2.setZero();
    b2.setZero();
    w3.setZero();
    b3 = 0.0;
  }
  void axpy(double a, const MlpParams& g) {
    w1 += a * g.w1;
    b1 += a * g.b1;
    w2 += a * g.w2;
    b2 += a * g.b2;
    w3 += a * g.w3;
    b3 += a * g.b3;
  }
  std::size_t count() const {
    return static_cast<std::size_t>(w1.size() + b1.size() + w2.size() + b2.size() + w3.size()) + 1;
  }
  double* flat(std::size_t i);  // linear indexing across all parameters
};

class Mlp {
 public:
  Mlp() = default;
  Mlp(int in_dim, int hidden, std::uint64_t seed);

  int in_dim() const { return in_dim_; }
  int hidden() const { return hidden_; }
  MlpParams& params() { return p_; }
  const MlpParams& params() const { return p_; }

  /// Row-wise forward: X is (n x in_dim), returns probabilities in (0,1)^n.
  Vec forward(const Mat& X) const;

  struct Cache {
    Mat X, Z1, H1, Z2, H2;
    Vec v;
  };
  Cache forward_cached(const Mat& X) const;

  /// Accumulates parameter gradients for upstream dL/dv of one cached pass.
  void backward(const Cache& c, const Vec& dv, MlpParams& grad) const;

 private:
  int in_dim_ = 0;
  int hidden_ = 0;
  MlpParams p_;
};

struct AdamState {
  MlpParams m, v;
  long step = 0;
  double lr = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;

  explicit AdamState(const Mlp& net, double lr_in);
  void update(MlpParams& p, const MlpParams& g);
};

/// Deterministic uniform double in [0,1).
inline double next_double(std::mt19937_64& rng) {
  return (rng() >> 11) * 0x1.0p-53;
}

}  // namespace rwm

#endif
