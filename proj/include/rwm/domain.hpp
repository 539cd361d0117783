#ifndef RWM_DOMAIN_HPP
#define RWM_DOMAIN_HPP

#include <functional>
#include <optional>
#include <random>

#include "rwm/types.hpp"

namespace rwm {

/// Column names per type for the line-delimited demo/feature format.
struct FeatureIngestSpec {
  std::map<std::string, std::vector<std::string>> columns;
};

struct DomainSpec {
  std::string name;
  std::vector<TypeSignature> types;
  std::vector<ControllerSchema> controllers;  // order fixes successor generation
  std::vector<LiftedPredicate> static_preds;
  std::vector<LiftedPredicate> goal_preds;
  /// Reference dynamic predicates with oracle classifiers. Used by the oracle
  /// policy, demo validation, scripted-replay generation, and tests; the
  /// pipeline itself never reads their classifiers during learning.
  std::vector<LiftedPredicate> oracle_dynamic;
  FeatureIngestSpec ingest;

  using TransitionFn = std::function<std::optional<State>(
      const State&, const GroundedController&, const std::vector<ObjectInstance>&)>;
  using SamplerFn = std::function<Task(std::mt19937_64&)>;
  using PolicyFn = std::function<std::vector<GroundedController>(const Task&, std::mt19937_64&)>;

  TransitionFn transition;
  SamplerFn train_sampler;
  SamplerFn test_sampler;
  PolicyFn oracle_policy;

  const ControllerSchema& schema(const std::string& n) const {
    for (const auto& c : controllers)
      if (c.name == n) return c;
    throw ConfigError("unknown controller schema: " + n);
  }
  const TypeSignature& type(const std::string& n) const {
    for (const auto& t : types)
      if (t.name == n) return t;
    throw ConfigError("unknown type: " + n);
  }
};

DomainSpec blocks_domain();
DomainSpec satellites_domain();
DomainSpec tableclean_domain();

/// Built-in domain by name ("blocks", "satellites", "tableclean").
DomainSpec get_domain(const std::string& name);

/// Oracle demonstrations from the train distribution, validated against
/// transition chaining and goal satisfaction. Deterministic under seed.
std::vector<Demonstration> generate_demos(const DomainSpec& spec, int count,
                                          std::uint64_t seed, int retry_cap = 20);

/// True iff every goal atom of the task holds in `s` under the domain's
/// oracle goal classifiers.
bool goal_satisfied(const DomainSpec& spec, const Task& task, const State& s);

}  // namespace rwm

#endif
