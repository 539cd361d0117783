#include "rwm/grounding.hpp"

#include <algorithm>

namespace rwm {

namespace {

void enumerate_rec(const LiftedPredicate& pred,
                   const std::vector<std::vector<const ObjectInstance*>>& by_pos,
                   std::size_t pos, std::vector<std::string>& current,
                   std::vector<GroundAtom>& out) {
  if (pos == pred.arity()) {
    out.push_back(GroundAtom{pred.name, current});
    return;
  }
  for (const ObjectInstance* obj : by_pos[pos]) {
    if (std::find(current.begin(), current.end(), obj->name) != current.end())
      continue;  // arguments pairwise distinct
    current.push_back(obj->name);
    enumerate_rec(pred, by_pos, pos + 1, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<GroundAtom> enumerate_groundings(const LiftedPredicate& predicate,
                                             const std::vector<ObjectInstance>& objects) {
  std::vector<std::vector<const ObjectInstance*>> by_pos(predicate.arity());
  for (std::size_t i = 0; i < predicate.arity(); ++i) {
    for (const auto& obj : objects)
      if (obj.type == predicate.arg_types[i]) by_pos[i].push_back(&obj);
    std::sort(by_pos[i].begin(), by_pos[i].end(),
              [](const ObjectInstance* a, const ObjectInstance* b) { return a->name < b->name; });
  }
  std::vector<GroundAtom> out;
  std::vector<std::string> current;
  enumerate_rec(predicate, by_pos, 0, current, out);
  return out;
}

std::vector<int> ground_effect_vector(const EffectVector& ev,
                                      const LiftedPredicate& predicate,
                                      const GroundedController& action,
                                      const std::vector<ObjectInstance>& objects) {
  auto atoms = enumerate_groundings(predicate, objects);
  std::vector<int> t(atoms.size(), 0);
  const EffectEntry& e = ev.entry(action.schema);
  if (e.delta == 0) return t;
  if (e.binding.size() != predicate.arity())
    throw ConfigError("effect binding arity mismatch for predicate '" + predicate.name + "'");
  std::vector<std::string> target(predicate.arity());
  for (std::size_t i = 0; i < e.binding.size(); ++i) {
    int pi = e.binding[i];
    if (pi < 0 || pi >= static_cast<int>(action.args.size()))
      throw ConfigError("effect binding for '" + predicate.name +
                        "' references controller param " + std::to_string(pi) +
                        " out of range for " + action.schema);
    target[i] = action.args[pi];
  }
  for (std::size_t p = 0; p < atoms.size(); ++p)
    if (atoms[p].args == target) t[p] = e.delta;
  return t;
}

Masks masks(const std::vector<int>& t) {
  Masks m;
  m.m0.resize(t.size());
  m.m1.resize(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    m.m0[i] = t[i] == 0;
    m.m1[i] = t[i] == 1 || t[i] == -1;
    if (m.m1[i]) m.s1.push_back(static_cast<int>(i));
  }
  return m;
}

bool evaluate_derived(const DerivedForm& form, const LiftedPredicate& base_pred,
                      const std::map<GroundAtom, bool>& basic_truth,
                      const std::vector<std::string>& args,
                      const std::vector<ObjectInstance>& objects) {
  auto lookup = [&](const std::vector<std::string>& base_args) {
    auto it = basic_truth.find(GroundAtom{base_pred.name, base_args});
    if (it == basic_truth.end())
      throw ConsistencyError("missing basic atom value for " +
                             GroundAtom{base_pred.name, base_args}.str());
    return it->second;
  };
  if (form.quantifier == Quantifier::None) {
    bool v = lookup(args);
    return form.negated ? !v : v;
  }
  const int q = form.quantified_arg;
  const std::string& qtype = base_pred.arg_types[q];
  // Substitute each candidate object at position q, keeping argument distinctness.
  bool any = false, all = true, saw = false;
  for (const auto& obj : objects) {
    if (obj.type != qtype) continue;
    bool clash = false;
    std::vector<std::string> base_args(base_pred.arity());
    std::size_t ai = 0;
    for (std::size_t i = 0; i < base_pred.arity(); ++i) {
      if (static_cast<int>(i) == q) {
        base_args[i] = obj.name;
      } else {
        base_args[i] = args[ai++];
      }
    }
    for (std::size_t i = 0; i < base_args.size(); ++i)
      for (std::size_t j = i + 1; j < base_args.size(); ++j)
        if (base_args[i] == base_args[j]) clash = true;
    if (clash) continue;
    saw = true;
    bool v = lookup(base_args);
    if (form.negated) v = !v;
    any = any || v;
    all = all && v;
  }
  if (!saw) return form.quantifier == Quantifier::Forall;  // vacuous
  return form.quantifier == Quantifier::Forall ? all : any;
}

std::string derived_name(const DerivedForm& form) {
  std::string body = (form.negated ? "not_" : "") + form.base;
  switch (form.quantifier) {
    case Quantifier::None:
      return body;
    case Quantifier::Forall:
      return "all" + std::to_string(form.quantified_arg) + "_" + body;
    case Quantifier::Exists:
      return "any" + std::to_string(form.quantified_arg) + "_" + body;
  }
  return body;
}

LiftedPredicate make_derived_predicate(const DerivedForm& form, const LiftedPredicate& base) {
  LiftedPredicate p;
  p.name = derived_name(form);
  p.kind = PredicateKind::DerivedDynamic;
  p.derivation = form;
  if (form.quantifier == Quantifier::None) {
    p.arg_types = base.arg_types;
  } else {
    for (std::size_t i = 0; i < base.arg_types.size(); ++i)
      if (static_cast<int>(i) != form.quantified_arg) p.arg_types.push_back(base.arg_types[i]);
  }
  return p;
}

}  // namespace rwm
