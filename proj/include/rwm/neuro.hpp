#ifndef RWM_NEURO_HPP
#define RWM_NEURO_HPP

#include "rwm/grounding.hpp"
#include "rwm/mlp.hpp"
#include "rwm/types.hpp"

namespace rwm {

double js_bernoulli(double p, double q, double eps = 1e-7);

/// Classifier probabilities for every canonical grounding of `pred` in `s`.
Vec ground(const State& s, const LiftedPredicate& pred,
           const std::vector<ObjectInstance>& objects, const Mlp& mlp);

/// Input matrix (P x in_dim): row p concatenates the features of atom p's arguments.
Mat ground_inputs(const State& s, const LiftedPredicate& pred,
                  const std::vector<ObjectInstance>& objects);

double transition_loss(const State& pre, const State& post, const std::vector<int>& t,
                       const LiftedPredicate& pred, const std::vector<ObjectInstance>& objects,
                       const Mlp& mlp, double eps = 1e-7);

/// Sum over controller schemas of the mean per-transition loss of that schema.
double dataset_loss(const std::vector<Demonstration>& demos, const EffectVector& ev,
                    const LiftedPredicate& pred, const std::vector<ControllerSchema>& schemas,
                    const Mlp& mlp, double eps = 1e-7);

/// Analytic gradient of dataset_loss; loss value returned through `loss_out`.
MlpParams dataset_loss_grad(const std::vector<Demonstration>& demos, const EffectVector& ev,
                            const LiftedPredicate& pred,
                            const std::vector<ControllerSchema>& schemas, const Mlp& mlp,
                            double eps, double* loss_out);

struct TrainConfig {
  int epochs = 100;
  double lr = 1e-3;
  double val_fraction = 0.2;
  double clamp_eps = 1e-7;
  double consistency_threshold = 0.005;
  int hidden = 128;
  std::uint64_t seed = 0;
};

struct TrainedCandidate {
  LiftedPredicate predicate;
  EffectVector ev;
  std::shared_ptr<Mlp> mlp;
  std::vector<double> train_curve;  // mean minibatch loss per epoch
  double val_loss = 0.0;
  bool consistent = false;
};

TrainedCandidate train_candidate(const LiftedPredicate& pred, const EffectVector& ev,
                                 const std::vector<Demonstration>& demos,
                                 const std::vector<ControllerSchema>& schemas,
                                 const std::vector<TypeSignature>& types,
                                 const TrainConfig& cfg);

/// Linear rescaling of validation losses to [0,100]: min -> 100, max -> 0.
std::vector<double> score_group(const std::vector<double>& val_losses);

/// Thresholded (0.5) classifier view over a trained network.
class MlpClassifier final : public Classifier {
 public:
  explicit MlpClassifier(std::shared_ptr<const Mlp> net) : net_(std::move(net)) {}
  bool holds(const State& s, const std::vector<std::string>& args) const override;
  const Mlp& net() const { return *net_; }

 private:
  std::shared_ptr<const Mlp> net_;
};

}  // namespace rwm

#endif
