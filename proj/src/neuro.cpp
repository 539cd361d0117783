#include "rwm/neuro.hpp"

#include <algorithm>
#include <cmath>

namespace rwm {

namespace {

double clamp01(double x, double eps) { return std::min(std::max(x, eps), 1.0 - eps); }

double bernoulli_entropy(double x) { return -x * std::log(x) - (1.0 - x) * std::log(1.0 - x); }

double cross_entropy(double v, double a, double eps) {
  double vc = clamp01(v, eps);
  return -a * std::log(vc) - (1.0 - a) * std::log(1.0 - vc);
}

// d/dv of cross_entropy; zero where the clamp is active.
double cross_entropy_dv(double v, double a, double eps) {
  if (v <= eps || v >= 1.0 - eps) return 0.0;
  return -a / v + (1.0 - a) / (1.0 - v);
}

double logit(double x) { return std::log(x / (1.0 - x)); }

struct Batch {
  int schema = -1;  // index into the schema list
  Mat pre_X, post_X;
  std::vector<int> t;
};

// Loss for one transition's grounding given both probability vectors, plus
// optional gradients dL/dv and dL/dv'.
double pair_loss(const Vec& v, const Vec& vp, const std::vector<int>& t, double eps,
                 Vec* dv = nullptr, Vec* dvp = nullptr) {
  Masks mk = masks(t);
  int n0 = 0;
  for (bool b : mk.m0) n0 += b ? 1 : 0;
  const int n1 = static_cast<int>(mk.s1.size());
  if (dv) dv->setZero();
  if (dvp) dvp->setZero();
  double zero_term = 0.0, one_term = 0.0;
  for (std::size_t p = 0; p < t.size(); ++p) {
    if (mk.m0[p]) {
      double pc = clamp01(v[p], eps), qc = clamp01(vp[p], eps);
      double m = 0.5 * (pc + qc);
      zero_term += bernoulli_entropy(m) -
                   0.5 * bernoulli_entropy(pc) - 0.5 * bernoulli_entropy(qc);
      if (dv && v[p] > eps && v[p] < 1.0 - eps)
        (*dv)[p] += 0.5 * (logit(pc) - logit(m)) / n0;
      if (dvp && vp[p] > eps && vp[p] < 1.0 - eps)
        (*dvp)[p] += 0.5 * (logit(qc) - logit(m)) / n0;
    } else {
      double a_pre = (1.0 - t[p]) / 2.0;
      double a_post = (1.0 + t[p]) / 2.0;
      one_term += 0.5 * (cross_entropy(v[p], a_pre, eps) + cross_entropy(vp[p], a_post, eps));
      if (dv) (*dv)[p] += 0.5 * cross_entropy_dv(v[p], a_pre, eps) / n1;
      if (dvp) (*dvp)[p] += 0.5 * cross_entropy_dv(vp[p], a_post, eps) / n1;
    }
  }
  double loss = 0.0;
  if (n0 > 0) loss += zero_term / n0;
  if (n1 > 0) loss += one_term / n1;
  return loss;
}

std::vector<Batch> compile_batches(const std::vector<Demonstration>& demos,
                                   const EffectVector& ev, const LiftedPredicate& pred,
                                   const std::vector<ControllerSchema>& schemas) {
  std::vector<Batch> out;
  for (const auto& demo : demos) {
    auto atoms = enumerate_groundings(pred, demo.task.objects);
    if (atoms.empty()) continue;
    for (const auto& tr : demo.transitions) {
      Batch b;
      b.schema = -1;
      for (std::size_t i = 0; i < schemas.size(); ++i)
        if (schemas[i].name == tr.action.schema) b.schema = static_cast<int>(i);
      if (b.schema < 0) throw ConfigError("transition uses unknown controller " + tr.action.schema);
      b.pre_X = ground_inputs(tr.pre, pred, demo.task.objects);
      b.post_X = ground_inputs(tr.post, pred, demo.task.objects);
      b.t = ground_effect_vector(ev, pred, tr.action, demo.task.objects);
      out.push_back(std::move(b));
    }
  }
  return out;
}

}  // namespace

double js_bernoulli(double p, double q, double eps) {
  double pc = clamp01(p, eps), qc = clamp01(q, eps);
  double m = 0.5 * (pc + qc);
  return bernoulli_entropy(m) - 0.5 * bernoulli_entropy(pc) - 0.5 * bernoulli_entropy(qc);
}

Mat ground_inputs(const State& s, const LiftedPredicate& pred,
                  const std::vector<ObjectInstance>& objects) {
  auto atoms = enumerate_groundings(pred, objects);
  int in_dim = 0;
  if (!atoms.empty()) {
    for (const auto& a : atoms[0].args) in_dim += static_cast<int>(s.of(a).size());
  }
  Mat X(atoms.size(), in_dim);
  for (std::size_t p = 0; p < atoms.size(); ++p) {
    int col = 0;
    for (const auto& arg : atoms[p].args) {
      const Vec& f = s.of(arg);
      X.block(p, col, 1, f.size()) = f.transpose();
      col += static_cast<int>(f.size());
    }
  }
  return X;
}

Vec ground(const State& s, const LiftedPredicate& pred,
           const std::vector<ObjectInstance>& objects, const Mlp& mlp) {
  Mat X = ground_inputs(s, pred, objects);
  if (X.rows() == 0) return Vec(0);
  if (X.cols() != mlp.in_dim())
    throw ConfigError("feature dim mismatch grounding '" + pred.name + "': state rows give " +
                      std::to_string(X.cols()) + ", net expects " + std::to_string(mlp.in_dim()));
  return mlp.forward(X);
}

double transition_loss(const State& pre, const State& post, const std::vector<int>& t,
                       const LiftedPredicate& pred, const std::vector<ObjectInstance>& objects,
                       const Mlp& mlp, double eps) {
  Vec v = ground(pre, pred, objects, mlp);
  Vec vp = ground(post, pred, objects, mlp);
  if (v.size() == 0) return 0.0;
  return pair_loss(v, vp, t, eps);
}

double dataset_loss(const std::vector<Demonstration>& demos, const EffectVector& ev,
                    const LiftedPredicate& pred, const std::vector<ControllerSchema>& schemas,
                    const Mlp& mlp, double eps) {
  auto batches = compile_batches(demos, ev, pred, schemas);
  std::vector<double> sums(schemas.size(), 0.0);
  std::vector<int> counts(schemas.size(), 0);
  for (const auto& b : batches) {
    Vec v = mlp.forward(b.pre_X);
    Vec vp = mlp.forward(b.post_X);
    sums[b.schema] += pair_loss(v, vp, b.t, eps);
    counts[b.schema] += 1;
  }
  double total = 0.0;
  for (std::size_t i = 0; i < schemas.size(); ++i)
    if (counts[i] > 0) total += sums[i] / counts[i];
  return total;
}

MlpParams dataset_loss_grad(const std::vector<Demonstration>& demos, const EffectVector& ev,
                            const LiftedPredicate& pred,
                            const std::vector<ControllerSchema>& schemas, const Mlp& mlp,
                            double eps, double* loss_out) {
  auto batches = compile_batches(demos, ev, pred, schemas);
  std::vector<int> counts(schemas.size(), 0);
  for (const auto& b : batches) counts[b.schema] += 1;

  MlpParams grad = mlp.params();
  grad.setZero();
  double total = 0.0;
  std::vector<double> sums(schemas.size(), 0.0);
  for (const auto& b : batches) {
    auto cpre = mlp.forward_cached(b.pre_X);
    auto cpost = mlp.forward_cached(b.post_X);
    Vec dv(cpre.v.size()), dvp(cpost.v.size());
    double l = pair_loss(cpre.v, cpost.v, b.t, eps, &dv, &dvp);
    sums[b.schema] += l;
    double coeff = 1.0 / counts[b.schema];
    mlp.backward(cpre, (dv * coeff).eval(), grad);
    mlp.backward(cpost, (dvp * coeff).eval(), grad);
  }
  for (std::size_t i = 0; i < schemas.size(); ++i)
    if (counts[i] > 0) total += sums[i] / counts[i];
  if (loss_out) *loss_out = total;
  return grad;
}

TrainedCandidate train_candidate(const LiftedPredicate& pred, const EffectVector& ev,
                                 const std::vector<Demonstration>& demos,
                                 const std::vector<ControllerSchema>& schemas,
                                 const std::vector<TypeSignature>& types,
                                 const TrainConfig& cfg) {
  int in_dim = 0;
  for (const auto& at : pred.arg_types) {
    bool found = false;
    for (const auto& ts : types)
      if (ts.name == at) {
        in_dim += ts.feature_dim;
        found = true;
      }
    if (!found) throw ConfigError("predicate '" + pred.name + "' uses unknown type " + at);
  }

  // Trajectory-level split, shuffled under the candidate seed.
  std::mt19937_64 rng(cfg.seed);
  std::vector<std::size_t> order(demos.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  for (std::size_t i = order.size(); i > 1; --i)
    std::swap(order[i - 1], order[rng() % i]);
  std::size_t n_val = static_cast<std::size_t>(std::floor(cfg.val_fraction * demos.size() + 0.5));
  if (n_val >= demos.size()) n_val = demos.size() - 1;
  std::vector<Demonstration> train, val;
  for (std::size_t i = 0; i < order.size(); ++i)
    (i < order.size() - n_val ? train : val).push_back(demos[order[i]]);
  if (train.empty()) throw ConfigError("empty training split for candidate " + pred.name);
  if (val.empty()) val = train;  // degenerate tiny-B case

  TrainedCandidate tc;
  tc.predicate = pred;
  tc.ev = ev;
  tc.mlp = std::make_shared<Mlp>(in_dim, cfg.hidden, rng());

  auto batches = compile_batches(train, ev, pred, schemas);
  AdamState adam(*tc.mlp, cfg.lr);
  MlpParams grad = tc.mlp->params();
  std::vector<std::size_t> idx(batches.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;

  for (int epoch = 0; epoch < cfg.epochs && !batches.empty(); ++epoch) {
    for (std::size_t i = idx.size(); i > 1; --i)
      std::swap(idx[i - 1], idx[rng() % i]);
    double epoch_loss = 0.0;
    for (std::size_t k : idx) {
      const Batch& b = batches[k];
      auto cpre = tc.mlp->forward_cached(b.pre_X);
      auto cpost = tc.mlp->forward_cached(b.post_X);
      Vec dv(cpre.v.size()), dvp(cpost.v.size());
      epoch_loss += pair_loss(cpre.v, cpost.v, b.t, cfg.clamp_eps, &dv, &dvp);
      grad.setZero();
      tc.mlp->backward(cpre, dv, grad);
      tc.mlp->backward(cpost, dvp, grad);
      adam.update(tc.mlp->params(), grad);
    }
    tc.train_curve.push_back(epoch_loss / idx.size());
  }

  tc.val_loss = dataset_loss(val, ev, pred, schemas, *tc.mlp, cfg.clamp_eps);
  tc.consistent = tc.val_loss < cfg.consistency_threshold;
  tc.predicate.classifier = std::make_shared<MlpClassifier>(tc.mlp);
  return tc;
}

std::vector<double> score_group(const std::vector<double>& val_losses) {
  std::vector<double> scores(val_losses.size(), 100.0);
  if (val_losses.empty()) return scores;
  double lo = *std::min_element(val_losses.begin(), val_losses.end());
  double hi = *std::max_element(val_losses.begin(), val_losses.end());
  if (hi <= lo) return scores;  // no evidence to discriminate
  for (std::size_t i = 0; i < val_losses.size(); ++i)
    scores[i] = 100.0 * (hi - val_losses[i]) / (hi - lo);
  return scores;
}

bool MlpClassifier::holds(const State& s, const std::vector<std::string>& args) const {
  int in_dim = 0;
  for (const auto& a : args) in_dim += static_cast<int>(s.of(a).size());
  Mat X(1, in_dim);
  int col = 0;
  for (const auto& a : args) {
    const Vec& f = s.of(a);
    X.block(0, col, 1, f.size()) = f.transpose();
    col += static_cast<int>(f.size());
  }
  if (in_dim != net_->in_dim())
    throw ConfigError("classifier input width mismatch");
  return net_->forward(X)[0] > 0.5;
}

}  // namespace rwm
