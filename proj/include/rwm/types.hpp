#ifndef RWM_TYPES_HPP
#define RWM_TYPES_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace rwm {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Object type with a fixed per-object feature width.
struct TypeSignature {
  std::string name;
  int feature_dim = 0;

  bool operator==(const TypeSignature& o) const {
    return name == o.name && feature_dim == o.feature_dim;
  }
};

struct ObjectInstance {
  std::string name;
  std::string type;

  bool operator==(const ObjectInstance& o) const {
    return name == o.name && type == o.type;
  }
  bool operator<(const ObjectInstance& o) const { return name < o.name; }
};

/// Continuous state: one feature vector per object, keyed by object name.
struct State {
  std::map<std::string, Vec> features;

  const Vec& of(const std::string& obj) const {
    auto it = features.find(obj);
    if (it == features.end())
      throw ConsistencyError("state has no features for object '" + obj + "'");
    return it->second;
  }
  bool operator==(const State& o) const {
    if (features.size() != o.features.size()) return false;
    auto a = features.begin();
    auto b = o.features.begin();
    for (; a != features.end(); ++a, ++b) {
      if (a->first != b->first) return false;
      if (a->second.size() != b->second.size()) return false;
      if (a->second != b->second) return false;
    }
    return true;
  }
};

struct ControllerSchema {
  std::string name;
  std::vector<std::string> param_types;  // type names, ordered
  int omega_dim = 0;

  std::size_t arity() const { return param_types.size(); }
};

struct GroundedController {
  std::string schema;
  std::vector<std::string> args;  // object names
  Vec omega;

  bool same_action(const GroundedController& o) const {
    return schema == o.schema && args == o.args;
  }
};

enum class PredicateKind { Static, Goal, BasicDynamic, DerivedDynamic };

enum class Quantifier { None, Forall, Exists };

/// Quantifier/negation wrapper over a basic dynamic predicate.
struct DerivedForm {
  std::string base;  // name of the basic predicate
  Quantifier quantifier = Quantifier::None;
  int quantified_arg = -1;  // index into the base predicate's arguments
  bool negated = false;
};

class Classifier;  // boolean classifier attached to a predicate

struct LiftedPredicate {
  std::string name;
  std::vector<std::string> arg_types;  // type names
  PredicateKind kind = PredicateKind::BasicDynamic;
  std::optional<DerivedForm> derivation;
  std::shared_ptr<const Classifier> classifier;  // null for derived preds

  std::size_t arity() const { return arg_types.size(); }
  bool operator==(const LiftedPredicate& o) const {
    return name == o.name && arg_types == o.arg_types;
  }
};

/// Boolean classifier over (state, argument objects).
class Classifier {
 public:
  virtual ~Classifier() = default;
  virtual bool holds(const State& s, const std::vector<std::string>& args) const = 0;
};

class FnClassifier final : public Classifier {
 public:
  using Fn = std::function<bool(const State&, const std::vector<std::string>&)>;
  explicit FnClassifier(Fn fn) : fn_(std::move(fn)) {}
  bool holds(const State& s, const std::vector<std::string>& args) const override {
    return fn_(s, args);
  }

 private:
  Fn fn_;
};

struct GroundAtom {
  std::string predicate;
  std::vector<std::string> args;

  bool operator==(const GroundAtom& o) const {
    return predicate == o.predicate && args == o.args;
  }
  bool operator<(const GroundAtom& o) const {
    if (predicate != o.predicate) return predicate < o.predicate;
    return args < o.args;
  }
  std::string str() const {
    std::string s = predicate + "(";
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (i) s += ",";
      s += args[i];
    }
    return s + ")";
  }
};

struct Transition {
  State pre;
  GroundedController action;
  State post;
};

struct Task {
  std::vector<ObjectInstance> objects;  // sorted by name
  State init;
  std::vector<GroundAtom> goal;
};

struct Demonstration {
  Task task;
  std::vector<Transition> transitions;
};

/// Per-controller symbolic effect annotation for one predicate.
struct EffectEntry {
  int delta = 0;                   // -1, 0, +1
  std::vector<int> binding;        // predicate arg index -> controller param index
};

struct EffectVector {
  std::string predicate;
  std::map<std::string, EffectEntry> entries;  // keyed by controller schema name

  const EffectEntry& entry(const std::string& schema) const {
    static const EffectEntry kZero{};
    auto it = entries.find(schema);
    return it == entries.end() ? kZero : it->second;
  }
  bool all_zero() const {
    for (const auto& [_, e] : entries)
      if (e.delta != 0) return false;
    return true;
  }
  /// Canonical text form, used for dedup keys and history digests.
  std::string signature() const {
    std::string s;
    for (const auto& [schema, e] : entries) {
      if (e.delta == 0) continue;
      s += schema + (e.delta > 0 ? "+" : "-") + "[";
      for (std::size_t i = 0; i < e.binding.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(e.binding[i]);
      }
      s += "];";
    }
    return s.empty() ? "noop" : s;
  }
};

}  // namespace rwm

#endif
