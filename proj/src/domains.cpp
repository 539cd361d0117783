#include "rwm/domain.hpp"

#include <algorithm>
#include <cmath>

#include "rwm/mlp.hpp"

namespace rwm {

namespace {

std::shared_ptr<Classifier> cls(FnClassifier::Fn fn) {
  return std::make_shared<FnClassifier>(std::move(fn));
}

LiftedPredicate pred(std::string name, std::vector<std::string> args, PredicateKind kind,
                     FnClassifier::Fn oracle) {
  LiftedPredicate p;
  p.name = std::move(name);
  p.arg_types = std::move(args);
  p.kind = kind;
  p.classifier = cls(std::move(oracle));
  return p;
}

double u(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * next_double(rng);
}

Vec omega2(std::mt19937_64& rng, double r = 0.3) {
  Vec w(2);
  w << u(rng, -r, r), u(rng, -r, r);
  return w;
}

// ---------------------------------------------------------------------------
// Blocks: two-level tower construction. robot = [x y z holding],
// block = [x y z held clear].
// ---------------------------------------------------------------------------

namespace blocks {

constexpr double kTol = 0.35;
constexpr double kSpacing = 0.9;

bool is_robot(const State& s, const std::string& o) { return s.of(o).size() == 4; }

std::optional<State> transition(const State& s, const GroundedController& a,
                                const std::vector<ObjectInstance>& objects) {
  State ns = s;
  if (a.schema == "pick") {
    const Vec& r = s.of(a.args[0]);
    const Vec& b = s.of(a.args[1]);
    if (r[3] > 0.5 || b[3] > 0.5 || b[4] < 0.5) return std::nullopt;
    if (std::abs(a.omega[0]) > kTol || std::abs(a.omega[1]) > kTol) return std::nullopt;
    for (const auto& o : objects) {  // block underneath becomes clear
      if (o.name == a.args[1] || is_robot(s, o.name)) continue;
      const Vec& c = s.of(o.name);
      if (c[3] < 0.5 && std::abs(c[0] - b[0]) <= 0.45 && std::abs(c[1] - b[1]) <= 0.45 &&
          b[2] - c[2] > 0.5 && b[2] - c[2] < 1.5)
        ns.features[o.name][4] = 1.0;
    }
    ns.features[a.args[1]] << 5.0, 5.0, 2.5, 1.0, 0.0;
    ns.features[a.args[0]][3] = 1.0;
    return ns;
  }
  if (a.schema == "stack") {
    const Vec& r = s.of(a.args[0]);
    const Vec& bt = s.of(a.args[1]);
    const Vec& bb = s.of(a.args[2]);
    if (r[3] < 0.5 || bt[3] < 0.5 || bb[3] > 0.5 || bb[4] < 0.5) return std::nullopt;
    if (std::abs(a.omega[0]) > kTol || std::abs(a.omega[1]) > kTol) return std::nullopt;
    ns.features[a.args[1]] << bb[0] + a.omega[0], bb[1] + a.omega[1], bb[2] + 1.0, 0.0, 1.0;
    ns.features[a.args[2]][4] = 0.0;
    ns.features[a.args[0]][3] = 0.0;
    return ns;
  }
  if (a.schema == "put_on_table") {
    const Vec& r = s.of(a.args[0]);
    const Vec& b = s.of(a.args[1]);
    if (r[3] < 0.5 || b[3] < 0.5) return std::nullopt;
    double x = a.omega[0], y = a.omega[1];
    if (x < 0.5 || x > 9.5 || y < 0.5 || y > 9.5) return std::nullopt;
    for (const auto& o : objects) {
      if (o.name == a.args[1] || is_robot(s, o.name)) continue;
      const Vec& c = s.of(o.name);
      if (c[3] < 0.5 && std::abs(c[0] - x) < kSpacing && std::abs(c[1] - y) < kSpacing)
        return std::nullopt;
    }
    ns.features[a.args[1]] << x, y, 0.0, 0.0, 1.0;
    ns.features[a.args[0]][3] = 0.0;
    return ns;
  }
  throw ConfigError("blocks: unknown controller " + a.schema);
}

Task sample(std::mt19937_64& rng, int n_blocks) {
  Task t;
  t.objects.push_back({"robby", "robot"});
  for (int i = 0; i < n_blocks; ++i) t.objects.push_back({"b" + std::to_string(i), "block"});
  std::sort(t.objects.begin(), t.objects.end());
  Vec r(4);
  r << 5.0, 5.0, 3.0, 0.0;
  t.init.features["robby"] = r;
  std::vector<std::pair<double, double>> placed;
  for (int i = 0; i < n_blocks; ++i) {
    double x = 0, y = 0;
    for (int tries = 0; tries < 200; ++tries) {
      x = u(rng, 0.5, 9.5);
      y = u(rng, 0.5, 9.5);
      bool free = true;
      for (auto& p : placed)
        if (std::abs(p.first - x) < 1.2 && std::abs(p.second - y) < 1.2) free = false;
      if (free) break;
    }
    placed.push_back({x, y});
    Vec b(5);
    b << x, y, 0.0, 0.0, 1.0;
    t.init.features["b" + std::to_string(i)] = b;
  }
  std::vector<int> idx(n_blocks);
  for (int i = 0; i < n_blocks; ++i) idx[i] = i;
  for (int i = n_blocks; i > 1; --i) std::swap(idx[i - 1], idx[rng() % i]);
  int pairs = n_blocks / 2;
  if (n_blocks % 2 == 1 && pairs > (n_blocks == 5 ? 2 : 3)) pairs -= 1;
  for (int k = 0; k + 1 < n_blocks && k / 2 < pairs; k += 2)
    t.goal.push_back(GroundAtom{"on", {"b" + std::to_string(idx[k]), "b" + std::to_string(idx[k + 1])}});
  std::sort(t.goal.begin(), t.goal.end());
  return t;
}

std::vector<GroundedController> policy(const Task& task, std::mt19937_64& rng) {
  std::vector<GroundedController> plan;
  auto goals = task.goal;
  std::sort(goals.begin(), goals.end(),
            [](const GroundAtom& a, const GroundAtom& b) { return a.args[0] < b.args[0]; });
  for (const auto& g : goals) {
    plan.push_back({"pick", {"robby", g.args[0]}, omega2(rng)});
    plan.push_back({"stack", {"robby", g.args[0], g.args[1]}, omega2(rng)});
  }
  return plan;
}

DomainSpec make() {
  DomainSpec d;
  d.name = "blocks";
  d.types = {{"robot", 4}, {"block", 5}};
  d.controllers = {{"pick", {"robot", "block"}, 2},
                   {"stack", {"robot", "block", "block"}, 2},
                   {"put_on_table", {"robot", "block"}, 2}};
  d.goal_preds = {pred("on", {"block", "block"}, PredicateKind::Goal,
                       [](const State& s, const std::vector<std::string>& a) {
                         const Vec& t = s.of(a[0]);
                         const Vec& b = s.of(a[1]);
                         return t[3] < 0.5 && b[3] < 0.5 && std::abs(t[0] - b[0]) <= 0.45 &&
                                std::abs(t[1] - b[1]) <= 0.45 && t[2] - b[2] > 0.5 &&
                                t[2] - b[2] < 1.5;
                       })};
  d.oracle_dynamic = {
      pred("holding", {"robot", "block"}, PredicateKind::BasicDynamic,
           [](const State& s, const std::vector<std::string>& a) { return s.of(a[1])[3] > 0.5; }),
      pred("handempty", {"robot"}, PredicateKind::BasicDynamic,
           [](const State& s, const std::vector<std::string>& a) { return s.of(a[0])[3] < 0.5; }),
      pred("ontable", {"block"}, PredicateKind::BasicDynamic,
           [](const State& s, const std::vector<std::string>& a) {
             const Vec& b = s.of(a[0]);
             return b[3] < 0.5 && b[2] < 0.5;
           }),
  };
  d.ingest.columns = {{"robot", {"x", "y", "z", "holding"}},
                      {"block", {"x", "y", "z", "held", "clear"}}};
  d.transition = transition;
  d.train_sampler = [](std::mt19937_64& rng) { return sample(rng, 4 + static_cast<int>(rng() % 2)); };
  d.test_sampler = [](std::mt19937_64& rng) { return sample(rng, 6 + static_cast<int>(rng() % 2)); };
  d.oracle_policy = policy;
  return d;
}

}  // namespace blocks

// ---------------------------------------------------------------------------
// Satellites: calibrate, move, take readings. satellite = [x y theta calibrated],
// target = [x y required has_reading].
// ---------------------------------------------------------------------------

namespace sats {

std::optional<State> transition(const State& s, const GroundedController& a,
                                const std::vector<ObjectInstance>&) {
  State ns = s;
  if (a.schema == "calibrate") {
    const Vec& sat = s.of(a.args[0]);
    if (sat[3] > 0.5) return std::nullopt;
    ns.features[a.args[0]][3] = 1.0;
    return ns;
  }
  if (a.schema == "move_to") {
    if (std::abs(a.omega[0]) > 1.0 || std::abs(a.omega[1]) > 1.0) return std::nullopt;
    const Vec& t = s.of(a.args[1]);
    ns.features[a.args[0]][0] = t[0] + a.omega[0];
    ns.features[a.args[0]][1] = t[1] + a.omega[1];
    return ns;
  }
  if (a.schema == "shoot") {
    const Vec& sat = s.of(a.args[0]);
    const Vec& t = s.of(a.args[1]);
    if (sat[3] < 0.5 || t[3] > 0.5) return std::nullopt;
    double dx = sat[0] - t[0], dy = sat[1] - t[1];
    if (std::sqrt(dx * dx + dy * dy) > 1.5) return std::nullopt;
    if (std::abs(a.omega[0] - t[2]) > 0.1) return std::nullopt;
    ns.features[a.args[1]][3] = 1.0;
    return ns;
  }
  throw ConfigError("satellites: unknown controller " + a.schema);
}

Task sample(std::mt19937_64& rng, int n) {
  Task t;
  for (int i = 0; i < n; ++i) {
    t.objects.push_back({"sat" + std::to_string(i), "satellite"});
    t.objects.push_back({"tgt" + std::to_string(i), "target"});
  }
  std::sort(t.objects.begin(), t.objects.end());
  for (int i = 0; i < n; ++i) {
    Vec sv(4);
    sv << u(rng, 0, 10), u(rng, 0, 10), u(rng, -3.14, 3.14), 0.0;
    t.init.features["sat" + std::to_string(i)] = sv;
    Vec tv(4);
    tv << u(rng, 0, 10), u(rng, 0, 10), u(rng, 0.1, 0.9), 0.0;
    t.init.features["tgt" + std::to_string(i)] = tv;
    t.goal.push_back(GroundAtom{"has_reading", {"tgt" + std::to_string(i)}});
  }
  std::sort(t.goal.begin(), t.goal.end());
  return t;
}

std::vector<GroundedController> policy(const Task& task, std::mt19937_64& rng) {
  std::vector<std::string> sat_names, tgt_names;
  for (const auto& o : task.objects)
    (o.type == "satellite" ? sat_names : tgt_names).push_back(o.name);
  std::vector<GroundedController> plan;
  for (std::size_t i = 0; i < tgt_names.size(); ++i) {
    const std::string& s = sat_names[i % sat_names.size()];
    plan.push_back({"calibrate", {s}, Vec(0)});
    Vec mw(2);
    mw << u(rng, -0.5, 0.5), u(rng, -0.5, 0.5);
    plan.push_back({"move_to", {s, tgt_names[i]}, mw});
    Vec sw(1);
    sw << task.init.of(tgt_names[i])[2] + u(rng, -0.05, 0.05);
    plan.push_back({"shoot", {s, tgt_names[i]}, sw});
  }
  return plan;
}

DomainSpec make() {
  DomainSpec d;
  d.name = "satellites";
  d.types = {{"satellite", 4}, {"target", 4}};
  d.controllers = {{"calibrate", {"satellite"}, 0},
                   {"move_to", {"satellite", "target"}, 2},
                   {"shoot", {"satellite", "target"}, 1}};
  d.goal_preds = {pred("has_reading", {"target"}, PredicateKind::Goal,
                       [](const State& s, const std::vector<std::string>& a) {
                         return s.of(a[0])[3] > 0.5;
                       })};
  d.oracle_dynamic = {
      pred("calibrated", {"satellite"}, PredicateKind::BasicDynamic,
           [](const State& s, const std::vector<std::string>& a) { return s.of(a[0])[3] > 0.5; }),
      pred("near", {"satellite", "target"}, PredicateKind::BasicDynamic,
           [](const State& s, const std::vector<std::string>& a) {
             const Vec& sv = s.of(a[0]);
             const Vec& tv = s.of(a[1]);
             double dx = sv[0] - tv[0], dy = sv[1] - tv[1];
             return std::sqrt(dx * dx + dy * dy) <= 1.5;
           }),
  };
  d.ingest.columns = {{"satellite", {"x", "y", "theta", "calibrated"}},
                      {"target", {"x", "y", "required", "has_reading"}}};
  d.transition = transition;
  d.train_sampler = [](std::mt19937_64& rng) { return sample(rng, 2); };
  d.test_sampler = [](std::mt19937_64& rng) { return sample(rng, 3); };
  d.oracle_policy = policy;
  return d;
}

}  // namespace sats

// ---------------------------------------------------------------------------
// Table clean: pack toys into the box, then wipe. robot = [x y holding_toy
// holding_wiper], toy/wiper = [x y held in_box on_table], box = [x y near_side],
// table = [x y dirty edge_blocked].
// ---------------------------------------------------------------------------

namespace tclean {

constexpr double kTol = 0.35;

void move_box_contents(State& ns, const std::vector<ObjectInstance>& objects, double bx,
                       double by) {
  for (const auto& o : objects) {
    if (o.type != "toy" && o.type != "wiper") continue;
    Vec& f = ns.features[o.name];
    if (f[3] > 0.5) {
      f[0] = bx;
      f[1] = by;
    }
  }
}

std::optional<State> transition(const State& s, const GroundedController& a,
                                const std::vector<ObjectInstance>& objects) {
  State ns = s;
  if (a.schema == "pick_wiper") {
    const Vec& r = s.of(a.args[0]);
    const Vec& w = s.of(a.args[1]);
    if (r[2] > 0.5 || r[3] > 0.5 || w[3] < 0.5) return std::nullopt;
    if (std::abs(a.omega[0]) > kTol || std::abs(a.omega[1]) > kTol) return std::nullopt;
    ns.features[a.args[1]] << r[0], r[1], 1.0, 0.0, 0.0;
    ns.features[a.args[0]][3] = 1.0;
    return ns;
  }
  if (a.schema == "push_box") {
    const Vec& b = s.of(a.args[1]);
    if (b[2] < 0.5) return std::nullopt;
    ns.features[a.args[1]] << 5.0, 8.5, 0.0;
    ns.features[a.args[2]][3] = 0.0;
    move_box_contents(ns, objects, 5.0, 8.5);
    return ns;
  }
  if (a.schema == "pull_box") {
    const Vec& b = s.of(a.args[1]);
    if (b[2] > 0.5) return std::nullopt;
    ns.features[a.args[1]] << 5.0, 1.5, 1.0;
    ns.features[a.args[2]][3] = 1.0;
    move_box_contents(ns, objects, 5.0, 1.5);
    return ns;
  }
  if (a.schema == "wipe_table") {
    const Vec& r = s.of(a.args[0]);
    const Vec& w = s.of(a.args[1]);
    const Vec& ta = s.of(a.args[2]);
    if (r[3] < 0.5 || w[2] < 0.5) return std::nullopt;
    if (ta[3] > 0.5) return std::nullopt;  // box blocks the near edge
    for (const auto& o : objects)
      if (o.type == "toy" && s.of(o.name)[4] > 0.5) return std::nullopt;
    ns.features[a.args[2]][2] = 0.0;
    return ns;
  }
  if (a.schema == "place_wiper_in_box") {
    const Vec& w = s.of(a.args[1]);
    const Vec& b = s.of(a.args[2]);
    if (w[2] < 0.5 || b[2] < 0.5) return std::nullopt;
    if (std::abs(a.omega[0]) > kTol || std::abs(a.omega[1]) > kTol) return std::nullopt;
    ns.features[a.args[1]] << b[0] + 0.5 * a.omega[0], b[1] + 0.5 * a.omega[1], 0.0, 1.0, 0.0;
    ns.features[a.args[0]][3] = 0.0;
    return ns;
  }
  if (a.schema == "pick_toy") {
    const Vec& r = s.of(a.args[0]);
    const Vec& t = s.of(a.args[1]);
    if (r[2] > 0.5 || r[3] > 0.5 || t[4] < 0.5) return std::nullopt;
    if (std::abs(a.omega[0]) > kTol || std::abs(a.omega[1]) > kTol) return std::nullopt;
    ns.features[a.args[1]] << r[0], r[1], 1.0, 0.0, 0.0;
    ns.features[a.args[0]][2] = 1.0;
    return ns;
  }
  if (a.schema == "place_toy_in_box") {
    const Vec& t = s.of(a.args[1]);
    const Vec& b = s.of(a.args[2]);
    if (t[2] < 0.5) return std::nullopt;
    if (std::abs(a.omega[0]) > kTol || std::abs(a.omega[1]) > kTol) return std::nullopt;
    ns.features[a.args[1]] << b[0] + 0.5 * a.omega[0], b[1] + 0.5 * a.omega[1], 0.0, 1.0, 0.0;
    ns.features[a.args[0]][2] = 0.0;
    return ns;
  }
  throw ConfigError("tableclean: unknown controller " + a.schema);
}

Task sample(std::mt19937_64& rng, int n_toys, bool test_starts) {
  Task t;
  t.objects = {{"box1", "box"}, {"robby", "robot"}, {"table1", "table"}, {"wiper1", "wiper"}};
  for (int i = 0; i < n_toys; ++i) t.objects.push_back({"toy" + std::to_string(i), "toy"});
  std::sort(t.objects.begin(), t.objects.end());

  bool near = next_double(rng) < 0.5;
  double bx = 5.0, by = near ? 1.5 : 8.5;
  Vec box(3);
  box << bx, by, near ? 1.0 : 0.0;
  t.init.features["box1"] = box;
  Vec table(4);
  table << 5.0, 5.0, 1.0, near ? 1.0 : 0.0;
  t.init.features["table1"] = table;

  int held_item = -1;  // -1 none, 0..n_toys-1 toy, n_toys wiper
  if (test_starts) {
    double r = next_double(rng);
    if (r < 0.2)
      held_item = 0;
    else if (r < 0.4)
      held_item = n_toys;
  }
  Vec robot(4);
  robot << 5.0, 0.5, (held_item >= 0 && held_item < n_toys) ? 1.0 : 0.0,
      held_item == n_toys ? 1.0 : 0.0;
  t.init.features["robby"] = robot;

  std::vector<std::pair<double, double>> placed;
  for (int i = 0; i < n_toys; ++i) {
    Vec toy(5);
    if (i == held_item) {
      toy << 5.0, 0.5, 1.0, 0.0, 0.0;
    } else if (test_starts && next_double(rng) < 0.3) {
      toy << bx, by, 0.0, 1.0, 0.0;
    } else {
      double x = 0, y = 0;
      for (int tries = 0; tries < 200; ++tries) {
        x = u(rng, 3.0, 7.0);
        y = u(rng, 3.0, 7.0);
        bool free = true;
        for (auto& p : placed)
          if (std::abs(p.first - x) < 0.8 && std::abs(p.second - y) < 0.8) free = false;
        if (free) break;
      }
      placed.push_back({x, y});
      toy << x, y, 0.0, 0.0, 1.0;
    }
    t.init.features["toy" + std::to_string(i)] = toy;
  }
  Vec wiper(5);
  if (held_item == n_toys)
    wiper << 5.0, 0.5, 1.0, 0.0, 0.0;
  else
    wiper << bx, by, 0.0, 1.0, 0.0;
  t.init.features["wiper1"] = wiper;

  for (int i = 0; i < n_toys; ++i)
    t.goal.push_back(GroundAtom{"toy_in_box", {"toy" + std::to_string(i), "box1"}});
  t.goal.push_back(GroundAtom{"clean", {"table1"}});
  std::sort(t.goal.begin(), t.goal.end());
  return t;
}

std::vector<GroundedController> policy(const Task& task, std::mt19937_64& rng) {
  std::vector<std::string> toys;
  for (const auto& o : task.objects)
    if (o.type == "toy") toys.push_back(o.name);
  std::sort(toys.begin(), toys.end());

  std::vector<GroundedController> plan;
  State s = task.init;
  auto objects = task.objects;
  auto apply = [&](GroundedController gc) {
    auto ns = transition(s, gc, objects);
    if (!ns) throw ConsistencyError("oracle policy produced infeasible " + gc.schema);
    s = *ns;
    plan.push_back(std::move(gc));
  };

  for (int guard = 0; guard < 64; ++guard) {
    const Vec& r = s.of("robby");
    std::string held_toy;
    bool any_on_table = false;
    for (const auto& t : toys) {
      if (s.of(t)[2] > 0.5) held_toy = t;
      if (s.of(t)[4] > 0.5) any_on_table = true;
    }
    if (!held_toy.empty()) {
      apply({"place_toy_in_box", {"robby", held_toy, "box1"}, omega2(rng)});
      continue;
    }
    if (r[3] > 0.5 && any_on_table) {  // holding wiper with toys still out
      if (s.of("box1")[2] < 0.5) {
        apply({"pull_box", {"robby", "box1", "table1"}, Vec(0)});
      } else {
        apply({"place_wiper_in_box", {"robby", "wiper1", "box1"}, omega2(rng)});
      }
      continue;
    }
    if (any_on_table) {
      for (const auto& t : toys)
        if (s.of(t)[4] > 0.5) {
          apply({"pick_toy", {"robby", t, "table1"}, omega2(rng)});
          break;
        }
      continue;
    }
    if (s.of("table1")[2] > 0.5) {  // dirty
      if (r[3] < 0.5) {
        apply({"pick_wiper", {"robby", "wiper1", "box1"}, omega2(rng)});
      } else if (s.of("box1")[2] > 0.5) {
        apply({"push_box", {"robby", "box1", "table1"}, Vec(0)});
      } else {
        apply({"wipe_table", {"robby", "wiper1", "table1"}, Vec(0)});
      }
      continue;
    }
    break;
  }
  return plan;
}

DomainSpec make() {
  DomainSpec d;
  d.name = "tableclean";
  d.types = {{"robot", 4}, {"toy", 5}, {"wiper", 5}, {"box", 3}, {"table", 4}};
  // Wipe-chain controllers come first: successor generation order is the
  // planner's tie-break, and demo reproduction must hinge on the learned
  // preconditions rather than a lucky enumeration order.
  d.controllers = {{"pick_wiper", {"robot", "wiper", "box"}, 2},
                   {"push_box", {"robot", "box", "table"}, 0},
                   {"pull_box", {"robot", "box", "table"}, 0},
                   {"wipe_table", {"robot", "wiper", "table"}, 0},
                   {"place_wiper_in_box", {"robot", "wiper", "box"}, 2},
                   {"pick_toy", {"robot", "toy", "table"}, 2},
                   {"place_toy_in_box", {"robot", "toy", "box"}, 2}};
  d.goal_preds = {
      pred("toy_in_box", {"toy", "box"}, PredicateKind::Goal,
           [](const State& s, const std::vector<std::string>& a) { return s.of(a[0])[3] > 0.5; }),
      pred("clean", {"table"}, PredicateKind::Goal,
           [](const State& s, const std::vector<std::string>& a) { return s.of(a[0])[2] < 0.5; }),
  };
  d.oracle_dynamic = {
      pred("holding_toy", {"robot", "toy"}, PredicateKind::BasicDynamic,
           [](const State& s, const std::vector<std::string>& a) { return s.of(a[1])[2] > 0.5; }),
      pred("holding_wiper", {"robot", "wiper"}, PredicateKind::BasicDynamic,
           [](const State& s, const std::vector<std::string>& a) { return s.of(a[1])[2] > 0.5; }),
      pred("hand_empty", {"robot"}, PredicateKind::BasicDynamic,
           [](const State& s, const std::vector<std::string>& a) {
             const Vec& r = s.of(a[0]);
             return r[2] < 0.5 && r[3] < 0.5;
           }),
      pred("toy_on_table", {"toy", "table"}, PredicateKind::BasicDynamic,
           [](const State& s, const std::vector<std::string>& a) { return s.of(a[0])[4] > 0.5; }),
      pred("wiper_in_box", {"wiper", "box"}, PredicateKind::BasicDynamic,
           [](const State& s, const std::vector<std::string>& a) { return s.of(a[0])[3] > 0.5; }),
      pred("edge_clear", {"table"}, PredicateKind::BasicDynamic,
           [](const State& s, const std::vector<std::string>& a) { return s.of(a[0])[3] < 0.5; }),
      pred("box_near", {"box"}, PredicateKind::BasicDynamic,
           [](const State& s, const std::vector<std::string>& a) { return s.of(a[0])[2] > 0.5; }),
  };
  d.ingest.columns = {{"robot", {"x", "y", "holding_toy", "holding_wiper"}},
                      {"toy", {"x", "y", "held", "in_box", "on_table"}},
                      {"wiper", {"x", "y", "held", "in_box", "on_table"}},
                      {"box", {"x", "y", "near_side"}},
                      {"table", {"x", "y", "dirty", "edge_blocked"}}};
  d.transition = transition;
  d.train_sampler = [](std::mt19937_64& rng) { return sample(rng, 2, false); };
  d.test_sampler = [](std::mt19937_64& rng) { return sample(rng, 3, true); };
  d.oracle_policy = policy;
  return d;
}

}  // namespace tclean

}  // namespace

DomainSpec blocks_domain() { return blocks::make(); }
DomainSpec satellites_domain() { return sats::make(); }
DomainSpec tableclean_domain() { return tclean::make(); }

DomainSpec get_domain(const std::string& name) {
  if (name == "blocks") return blocks_domain();
  if (name == "satellites") return satellites_domain();
  if (name == "tableclean") return tableclean_domain();
  throw ConfigError("unknown domain: " + name);
}

bool goal_satisfied(const DomainSpec& spec, const Task& task, const State& s) {
  for (const auto& g : task.goal) {
    const LiftedPredicate* p = nullptr;
    for (const auto& gp : spec.goal_preds)
      if (gp.name == g.predicate) p = &gp;
    if (!p) throw ConfigError("goal atom uses unknown predicate " + g.predicate);
    if (!p->classifier->holds(s, g.args)) return false;
  }
  return true;
}

std::vector<Demonstration> generate_demos(const DomainSpec& spec, int count, std::uint64_t seed,
                                          int retry_cap) {
  if (count < 1) throw ConfigError("demo count must be >= 1");
  std::vector<Demonstration> out;
  std::mt19937_64 rng(seed);
  for (int b = 0; b < count; ++b) {
    bool done = false;
    for (int attempt = 0; attempt < retry_cap && !done; ++attempt) {
      Task task = spec.train_sampler(rng);
      std::vector<GroundedController> actions;
      try {
        actions = spec.oracle_policy(task, rng);
      } catch (const ConsistencyError&) {
        continue;
      }
      Demonstration demo;
      demo.task = task;
      State s = task.init;
      bool ok = true;
      for (const auto& a : actions) {
        auto ns = spec.transition(s, a, task.objects);
        if (!ns) {
          ok = false;
          break;
        }
        demo.transitions.push_back({s, a, *ns});
        s = *ns;
      }
      if (ok && !demo.transitions.empty() && goal_satisfied(spec, task, s)) {
        out.push_back(std::move(demo));
        done = true;
      }
    }
    if (!done)
      throw ConsistencyError("oracle failed to produce a valid demo after retries (demo " +
                             std::to_string(b) + ")");
  }
  return out;
}

}  // namespace rwm
