#ifndef RWM_GROUNDING_HPP
#define RWM_GROUNDING_HPP

#include <functional>
#include <map>

#include "rwm/types.hpp"

namespace rwm {

/// All type-consistent, pairwise-distinct argument tuples of `predicate` over
/// `objects`, lexicographic by object name per position.
std::vector<GroundAtom> enumerate_groundings(const LiftedPredicate& predicate,
                                             const std::vector<ObjectInstance>& objects);

/// Ground effect vector t over the canonical atom list for (predicate, objects):
/// entry p is +/-delta iff atom p's arguments match the controller's grounded
/// arguments under the entry's binding, else 0.
std::vector<int> ground_effect_vector(const EffectVector& ev,
                                      const LiftedPredicate& predicate,
                                      const GroundedController& action,
                                      const std::vector<ObjectInstance>& objects);

struct Masks {
  std::vector<bool> m0;
  std::vector<bool> m1;
  std::vector<int> s1;
};

Masks masks(const std::vector<int>& t);

/// Truth of a derived atom from the truth values of its base's ground atoms.
/// `basic_truth` must cover all groundings of form.base over `objects`.
bool evaluate_derived(const DerivedForm& form, const LiftedPredicate& base_pred,
                      const std::map<GroundAtom, bool>& basic_truth,
                      const std::vector<std::string>& args,
                      const std::vector<ObjectInstance>& objects);

/// Canonical name for a derived form, e.g. "all_not_ontable_0" for
/// forall over argument 0 of the negated base.
std::string derived_name(const DerivedForm& form);

/// Predicate object for a derived form (arity = base arity or base arity - 1).
LiftedPredicate make_derived_predicate(const DerivedForm& form, const LiftedPredicate& base);

}  // namespace rwm

#endif
