#include "amenity/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "amenity/error.hpp"
#include "amenity/foelner.hpp"
#include "amenity/inner.hpp"
#include "amenity/measure.hpp"
#include "amenity/semidirect_net.hpp"

namespace amenity {

namespace {

const Json& need(const Json& j, const char* key, const char* where) {
  if (!j.is_object())
    throw ParseError(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end())
    throw ParseError(where, std::string("missing field '") + key + "'");
  return *it;
}

std::string need_str(const Json& j, const char* key, const char* where) {
  const Json& v = need(j, key, where);
  if (!v.is_string())
    throw ParseError(where, std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

long need_int(const Json& j, const char* key, const char* where) {
  const Json& v = need(j, key, where);
  if (!v.is_number_integer())
    throw ParseError(where, std::string("field '") + key + "' must be an integer");
  return v.get<long>();
}

Rat rat_from(const Json& v, const char* where) {
  if (v.is_number_integer()) return Rat(v.get<long>());
  if (v.is_string()) return Rat::parse(v.get<std::string>());
  throw ParseError(where, "expected a rational \"p/q\" or an integer");
}

ActionKind action_kind_from(const std::string& s, const char* where) {
  if (s == "trivial") return ActionKind::Trivial;
  if (s == "carrier_left") return ActionKind::CarrierLeft;
  if (s == "carrier_right") return ActionKind::CarrierRight;
  if (s == "inverse_right") return ActionKind::InverseRight;
  if (s == "boundary_left") return ActionKind::BoundaryLeft;
  throw ParseError(where, "unknown action kind '" + s + "'");
}

std::vector<Elem> moves_from(const GroupPtr& g, const Json& arr,
                             const char* where) {
  if (!arr.is_array() || arr.empty())
    throw ParseError(where, "'moves' must be a nonempty array");
  std::vector<Elem> out;
  for (const auto& v : arr) {
    if (!v.is_string())
      throw ParseError(where, "moves must be element strings");
    out.push_back(g->parse(v.get<std::string>()));
  }
  return out;
}

std::vector<Rat> epsilons_from(const Json& sc, bool required) {
  auto it = sc.find("epsilon");
  if (it == sc.end()) {
    if (required) throw ParseError("scenario", "missing field 'epsilon'");
    return {};
  }
  if (!it->is_array() || it->empty())
    throw ParseError("epsilon", "must be a nonempty array");
  std::vector<Rat> out;
  for (const auto& v : *it) out.push_back(rat_from(v, "epsilon"));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (!(Rat(0) < out[i]))
      throw ConfigError("epsilon: entries must be positive");
    if (i && out[i - 1] < out[i])
      throw ConfigError("epsilon: schedule must be nonincreasing");
  }
  return out;
}

int stages_from(const Json& sc) {
  const Json& net = need(sc, "net", "scenario");
  long n = need_int(net, "stages", "net");
  if (n < 1 || n > 64) throw ConfigError("net: stages must be in 1..64");
  return static_cast<int>(n);
}

// Space block of the evaluation window, plus the moves it pairs with.
struct WindowSpec {
  std::vector<Point> space_part;
  std::vector<Elem> moves;
};

WindowSpec window_spec(const TransformationGroup& t, const Json& sc) {
  const Json& w = need(sc, "window", "scenario");
  WindowSpec out;
  out.moves = moves_from(t.group(), need(w, "moves", "window"), "window");
  auto pts = w.find("points");
  if (pts != w.end()) {
    if (!pts->is_array() || pts->empty())
      throw ParseError("window", "'points' must be a nonempty array");
    for (const auto& p : *pts) {
      if (!p.is_string())
        throw ParseError("window", "points must be point strings");
      out.space_part.push_back(t.space()->parse(p.get<std::string>()));
    }
  } else {
    int sr = w.value("space_radius", 0);
    out.space_part = window_from_radii(t, sr, 0).space_part;
  }
  return out;
}

std::vector<FoelnerPair> staged_regions(const TransformationGroup& t,
                                        const Json& sc, int upto) {
  const Json& net = need(sc, "net", "scenario");
  int sr = net.value("space_radius", 0);
  std::vector<Point> bases;
  auto it = net.find("bases");
  if (it != net.end())
    for (const auto& b : *it)
      bases.push_back(t.space()->parse(b.get<std::string>()));
  std::vector<FoelnerPair> out;
  for (int i = 1; i <= upto; ++i)
    out.push_back(region_from_window(t, window_from_radii(t, sr, i, bases)));
  return out;
}

Json base_report(const Json& sc) {
  Json r;
  r["name"] = sc.value("name", "");
  r["suite"] = need(sc, "suite", "scenario");
  r["scenario"] = sc;
  r["rows"] = Json::array();
  r["notes"] = Json::array();
  return r;
}

void note_verdict(Json& r, const Rat& last, const Rat& allowance,
                  bool certified) {
  r["notes"].push_back("final stage max " + last.str() + " vs allowance " +
                       allowance.str() +
                       (certified ? ": within the schedule"
                                  : ": exceeds the schedule"));
  r["notes"].push_back(
      "the verdict covers the listed stages and window only");
}

// ---- aicm ----

Json run_aicm(const Json& sc, bool compute) {
  TransformationGroup t = transformation_from_json(sc);
  int stages = stages_from(sc);
  const Json& net = need(sc, "net", "scenario");
  if (need_str(net, "kind", "net") != "ball_indicator")
    throw ConfigError("aicm: net kind must be ball_indicator");
  auto eps = epsilons_from(sc, true);
  WindowSpec ws = window_spec(t, sc);
  Window k = make_window(t, ws.space_part, ws.moves);
  auto regions = staged_regions(t, sc, compute ? stages : 1);
  if (!compute) return {};

  std::vector<NetFunction> nets;
  for (int i = 0; i < stages; ++i)
    nets.push_back(indicator_net(t, regions[i], i + 1));
  DeficitReport rep = verify_aicm(t, nets, k, eps);

  Json r = base_report(sc);
  for (const auto& row : rep.rows) {
    Json jr;
    jr["stage"] = row.stage;
    jr["label"] = row.label;
    jr["norm_defect"] = row.norm_defect.str();
    jr["inv_defect"] = row.inv_defect.str();
    r["rows"].push_back(jr);
  }
  Json sm = Json::array();
  for (const auto& m : rep.stage_max) sm.push_back(m.str());
  r["stage_max"] = sm;
  r["certified"] = rep.certified;
  for (const auto& n : rep.notes) r["notes"].push_back(n);
  return r;
}

// ---- foelner ----

Json run_foelner(const Json& sc, bool compute) {
  TransformationGroup t = transformation_from_json(sc);
  int stages = stages_from(sc);
  const Json& net = need(sc, "net", "scenario");
  if (need_str(net, "kind", "net") != "ball_indicator")
    throw ConfigError("foelner: net kind must be ball_indicator");
  auto eps = epsilons_from(sc, true);
  WindowSpec ws = window_spec(t, sc);
  auto regions = staged_regions(t, sc, compute ? stages : 1);
  if (!compute) return {};

  Json r = base_report(sc);
  std::vector<Rat> stage_max;
  for (int i = 0; i < stages; ++i) {
    Rat mx(0);
    for (const auto& s : ws.moves) {
      Rat d = foelner_deficit(t, regions[i], s);
      Json jr;
      jr["stage"] = i + 1;
      jr["label"] = t.group()->format(s);
      jr["deficit"] = d.str();
      r["rows"].push_back(jr);
      mx = std::max(mx, d);
    }
    stage_max.push_back(mx);
  }
  bool certified = stage_max.back() < eps.back();
  Json sm = Json::array();
  for (const auto& m : stage_max) sm.push_back(m.str());
  r["stage_max"] = sm;
  r["certified"] = certified;
  note_verdict(r, stage_max.back(), eps.back(), certified);
  return r;
}

// ---- theorem23 ----

Json run_theorem23(const Json& sc, bool compute) {
  GroupPtr g = group_from_json(need(sc, "group", "scenario"));
  if (g->family() != Group::Family::Semidirect)
    throw ConfigError("theorem23: group must be a semidirect product");
  int stages = stages_from(sc);
  const Json& net = need(sc, "net", "scenario");
  if (need_str(net, "kind", "net") != "product_ball")
    throw ConfigError("theorem23: net kind must be product_ball");
  const Json& w = need(sc, "window", "scenario");
  auto moves = moves_from(g, need(w, "moves", "window"), "window");
  if (!compute) return {};

  // point slices; varying slices live in the library interface
  SpacePtr y = Space::point();
  TransformationGroup t_h(y, g->acting_part(), ActionKind::Trivial);
  Point pt = y->pt();

  Json r = base_report(sc);
  bool all_ok = true;
  int checks = 0;
  for (int i = 1; i <= stages; ++i) {
    NetFunction f;
    f.stage = i;
    f.sections.emplace(pt, uniform(ball(g->normal_part(), i)));
    NetFunction h;
    h.stage = i;
    h.sections.emplace(pt, uniform(ball(g->acting_part(), i)));
    ProductNetFunction e = product_net(g, f, h);
    for (const auto& m : moves) {
      const Elem& s = m.pair_n();
      const Elem& tt = m.pair_h();
      auto push = [&](const char* check, const BoundPair& b) {
        bool ok = !(b.rhs < b.lhs);
        Json jr;
        jr["stage"] = i;
        jr["label"] = g->format(m);
        jr["check"] = check;
        jr["lhs"] = b.lhs.str();
        jr["rhs"] = b.rhs.str();
        jr["ok"] = ok;
        r["rows"].push_back(jr);
        all_ok = all_ok && ok;
        ++checks;
      };
      push("three_term", three_term_bound(t_h, e, f, h, s, tt, pt, pt));
      push("marginal", marginal_defect_bound(e, s, pt, pt));
      push("twist", twist_from_full_defect(t_h, e, tt, pt, pt));
      push("two_term", two_term_twist_bound(t_h, e, f, h, tt, pt, pt));
    }
  }
  r["certified"] = all_ok;
  r["notes"].push_back(std::to_string(checks) + " bound checks, " +
                       (all_ok ? "all hold" : "some fail"));
  return r;
}

// ---- inner ----

Json run_inner_ball(const Json& sc, bool compute) {
  TransformationGroup t = transformation_from_json(sc);
  if (!t.has_right())
    throw ConfigError("inner: the scenario needs a right action");
  int stages = stages_from(sc);
  auto eps = epsilons_from(sc, true);
  WindowSpec ws = window_spec(t, sc);
  if (!compute) return {};

  std::vector<GFn> densities;
  for (int i = 1; i <= stages; ++i)
    densities.push_back(uniform(ball(t.group(), i)));
  auto lifted = lift_group_inner_mean(densities, t.space());

  Json r = base_report(sc);
  std::vector<Rat> stage_max;
  for (int i = 0; i < stages; ++i) {
    Rat mx(0);
    for (const auto& s : ws.moves) {
      Window k = make_window(t, ws.space_part, {s});
      Rat d = inner_mean_defect(t, lifted[i], k);
      Json jr;
      jr["stage"] = i + 1;
      jr["label"] = t.group()->format(s);
      jr["defect"] = d.str();
      r["rows"].push_back(jr);
      mx = std::max(mx, d);
    }
    stage_max.push_back(mx);
  }
  bool certified = stage_max.back() < eps.back();
  Json sm = Json::array();
  for (const auto& m : stage_max) sm.push_back(m.str());
  r["stage_max"] = sm;
  r["certified"] = certified;
  note_verdict(r, stage_max.back(), eps.back(), certified);
  return r;
}

Json run_inner_boundary(const Json& sc, bool compute) {
  GroupPtr g = group_from_json(need(sc, "group", "scenario"));
  if (g->family() != Group::Family::Free)
    throw ConfigError("inner: boundary_prefix needs a free group");
  SpacePtr x = space_from_json(need(sc, "space", "scenario"), g);
  if (x->kind() != Space::Kind::Boundary)
    throw ConfigError("inner: boundary_prefix needs a boundary space");
  if (x->boundary_rank() != g->rank())
    throw ConfigError("inner: boundary rank must match the group rank");
  TransformationGroup t(x, g, ActionKind::BoundaryLeft);
  int stages = stages_from(sc);
  auto eps = epsilons_from(sc, false);

  const Json& net = need(sc, "net", "scenario");
  const Json& jb = need(net, "bases", "net");
  if (!jb.is_array() || jb.empty())
    throw ParseError("net", "'bases' must be a nonempty array");
  std::vector<Point> bases;
  for (const auto& b : jb) {
    std::string word;
    if (b.is_string()) {
      word = b.get<std::string>();
    } else if (b.is_object()) {
      std::string pat = need_str(b, "repeat", "bases");
      if (pat.empty()) throw ParseError("bases", "empty repeat pattern");
      while (static_cast<int>(word.size()) < x->boundary_depth()) word += pat;
      word.resize(x->boundary_depth());
    } else {
      throw ParseError("bases", "expected a word or {\"repeat\": ...}");
    }
    bases.push_back(x->boundary_point(word));
  }
  const Json& w = need(sc, "window", "scenario");
  auto moves = moves_from(g, need(w, "moves", "window"), "window");
  if (!compute) return {};

  Json r = base_report(sc);
  bool all_ok = true;
  std::vector<Rat> stage_max;
  for (int n = 1; n <= stages; ++n) {
    Rat mx(0);
    for (const auto& s : moves) {
      long len = static_cast<long>(s.letters().size());
      Rat val(0);
      for (const auto& omega : bases) {
        GFn here = boundary_mean(g, omega, n);
        GFn there = boundary_mean(g, t.act_left(s, omega), n);
        val = std::max(val, l1_distance(translate_left(s, here), there));
      }
      Rat allowance(2 * len, n);
      bool ok = val <= allowance;
      Json jr;
      jr["stage"] = n;
      jr["label"] = g->format(s);
      jr["value"] = val.str();
      jr["allowance"] = allowance.str();
      jr["ok"] = ok;
      r["rows"].push_back(jr);
      all_ok = all_ok && ok;
      mx = std::max(mx, val);
    }
    stage_max.push_back(mx);
  }
  bool certified = all_ok;
  if (!eps.empty()) certified = certified && stage_max.back() < eps.back();
  Json sm = Json::array();
  for (const auto& m : stage_max) sm.push_back(m.str());
  r["stage_max"] = sm;
  r["certified"] = certified;
  r["notes"].push_back(
      all_ok ? "every displacement is within 2|s|/n"
             : "a displacement exceeds 2|s|/n (depth too small for the "
               "cancellation-free regime)");
  return r;
}

Json run_inner(const Json& sc, bool compute) {
  const Json& net = need(sc, "net", "scenario");
  std::string kind = need_str(net, "kind", "net");
  if (kind == "ball_mean") return run_inner_ball(sc, compute);
  if (kind == "boundary_prefix") return run_inner_boundary(sc, compute);
  throw ConfigError("inner: unknown net kind '" + kind + "'");
}

// ---- sqrt ----

Json run_sqrt(const Json& sc, bool compute) {
  TransformationGroup t = transformation_from_json(sc);
  int stages = stages_from(sc);
  const Json& net = need(sc, "net", "scenario");
  if (need_str(net, "kind", "net") != "ball_indicator")
    throw ConfigError("sqrt: net kind must be ball_indicator");
  auto eps = epsilons_from(sc, false);
  WindowSpec ws = window_spec(t, sc);
  if (!compute) return {};

  Json r = base_report(sc);
  bool all_ok = true;
  std::vector<double> stage_max;
  for (int i = 1; i <= stages; ++i) {
    GFn u = uniform(ball(t.group(), i));
    NetFunction f;
    f.stage = i;
    for (const auto& x : ws.space_part) f.sections.emplace(x, u);
    SqrtNet xi = sqrt_net(f);

    Window k = make_window(t, ws.space_part, ws.moves);
    L2Defect win = l2_inner_defect(t, xi, k);
    bool norm_ok = win.norm2 <= 1e-9;
    Json wr;
    wr["stage"] = i;
    wr["label"] = "window";
    wr["norm2"] = win.norm2;
    wr["inv2"] = win.inv2;
    wr["ok"] = norm_ok;
    r["rows"].push_back(wr);
    all_ok = all_ok && norm_ok;

    double mx = 0.0;
    for (const auto& s : ws.moves) {
      double i1 = 0.0, i2 = 0.0, cr = 0.0;
      bool ok = true;
      for (const auto& x : ws.space_part) {
        L2PairBound b = l2_pair_bound(t, xi, x, s);
        ok = ok && b.inv2 <= b.inv1 + 1e-9 &&
             b.inv1 <= std::sqrt(b.cross * b.inv2) + 1e-9;
        i1 = std::max(i1, b.inv1);
        i2 = std::max(i2, b.inv2);
        cr = std::max(cr, b.cross);
      }
      Json jr;
      jr["stage"] = i;
      jr["label"] = t.group()->format(s);
      jr["inv1"] = i1;
      jr["inv2"] = i2;
      jr["cross"] = cr;
      jr["ok"] = ok;
      r["rows"].push_back(jr);
      all_ok = all_ok && ok;
      mx = std::max(mx, i2);
    }
    stage_max.push_back(mx);
  }
  bool certified = all_ok;
  if (!eps.empty())
    certified = certified && stage_max.back() < eps.back().to_double();
  Json sm = Json::array();
  for (double m : stage_max) sm.push_back(m);
  r["stage_max"] = sm;
  r["certified"] = certified;
  r["notes"].push_back(all_ok ? "norm and comparison checks hold"
                              : "a norm or comparison check fails");
  return r;
}

// ---- kernel ----

Json run_kernel(const Json& sc, bool compute) {
  TransformationGroup t = transformation_from_json(sc);
  const Json& net = need(sc, "net", "scenario");
  if (need_str(net, "kind", "net") != "singleton")
    throw ConfigError("kernel: net kind must be singleton");
  double eps = rat_from(need(net, "eps", "net"), "net").to_double();
  long sample_radius = net.value("sample_radius", 2);
  if (sample_radius < 0) throw ConfigError("kernel: negative sample radius");
  const Json& jc = need(net, "cells", "net");
  if (!jc.is_array() || jc.empty())
    throw ParseError("net", "'cells' must be a nonempty array");

  NetFunction f;
  std::vector<std::pair<Point, Elem>> diag;
  for (const auto& c : jc) {
    Point x = t.space()->parse(need_str(c, "point", "cells"));
    Elem u = t.group()->parse(need_str(c, "elem", "cells"));
    Rat wt = rat_from(need(c, "weight", "cells"), "cells");
    GFn sec;
    sec.set(u, wt);
    if (!f.sections.emplace(x, sec).second)
      throw ConfigError("kernel: duplicate cell point " + t.space()->format(x));
    diag.emplace_back(x, u);
  }
  if (!compute) return {};

  SqrtNet xi = sqrt_net(f);
  std::vector<std::pair<Point, Elem>> sample;
  for (const auto& [x, sec] : f.sections)
    for (const auto& u : ball(t.group(), static_cast<int>(sample_radius)))
      sample.emplace_back(x, u);
  KernelVerdict v = kernel_check(xi, diag, eps, sample);

  Json r = base_report(sc);
  Json jr;
  jr["max_diag_defect"] = v.max_diag_defect;
  jr["min_eigenvalue"] = v.min_eigenvalue;
  jr["diag_ok"] = v.diag_ok;
  jr["psd_ok"] = v.psd_ok;
  jr["pass"] = v.pass;
  r["rows"].push_back(jr);
  r["certified"] = v.pass;
  r["notes"].push_back(v.pass ? "diagonal and positivity checks hold"
                              : "a diagonal or positivity check fails");
  return r;
}

Json dispatch(const Json& sc, bool compute) {
  std::string suite = need_str(sc, "suite", "scenario");
  if (suite == "aicm") return run_aicm(sc, compute);
  if (suite == "foelner") return run_foelner(sc, compute);
  if (suite == "theorem23") return run_theorem23(sc, compute);
  if (suite == "inner") return run_inner(sc, compute);
  if (suite == "sqrt") return run_sqrt(sc, compute);
  if (suite == "kernel") return run_kernel(sc, compute);
  throw ConfigError("unknown suite '" + suite + "'");
}

}  // namespace

std::vector<std::string> scenario_families() {
  return {
      "suite aicm: staged indicator nets, invariance defects, schedule verdict",
      "suite foelner: staged regions, displacement deficits, schedule verdict",
      "suite theorem23: product nets on a semidirect product, bound checks",
      "suite inner: conjugation defects of ball means or boundary prefix means",
      "suite sqrt: square-root nets, squared-defect comparisons",
      "suite kernel: singleton nets, diagonal and positivity checks",
      "group free_abelian: rank",
      "group free_group: rank",
      "group cyclic: order",
      "group trivial",
      "group finite: table, labels",
      "group lamp_sum",
      "group semidirect: normal, acting, tau (identity|sign_flip|shift), sigma",
      "space point (default)",
      "space finite: size, mu",
      "space carrier",
      "space boundary: rank, depth",
      "action trivial | carrier_left | carrier_right | inverse_right | "
      "boundary_left",
      "net ball_indicator: stages, space_radius, bases",
      "net product_ball: stages",
      "net ball_mean: stages",
      "net boundary_prefix: stages, bases",
      "net singleton: cells, eps, sample_radius",
  };
}

GroupPtr group_from_json(const Json& j) {
  std::string family = need_str(j, "family", "group");
  if (family == "free_abelian")
    return Group::free_abelian(static_cast<int>(need_int(j, "rank", "group")));
  if (family == "free_group")
    return Group::free_group(static_cast<int>(need_int(j, "rank", "group")));
  if (family == "cyclic")
    return Group::cyclic(
        static_cast<std::uint32_t>(need_int(j, "order", "group")));
  if (family == "trivial") return Group::cyclic(1);
  if (family == "lamp_sum") return Group::lamp_sum();
  if (family == "finite") {
    const Json& jt = need(j, "table", "group");
    std::vector<std::vector<std::uint32_t>> table;
    for (const auto& row : jt)
      table.push_back(row.get<std::vector<std::uint32_t>>());
    std::vector<std::string> labels;
    if (j.contains("labels"))
      labels = j.at("labels").get<std::vector<std::string>>();
    return Group::finite(std::move(table), std::move(labels));
  }
  if (family == "semidirect") {
    GroupPtr n = group_from_json(need(j, "normal", "group"));
    GroupPtr h = group_from_json(need(j, "acting", "group"));
    std::string tau = need_str(j, "tau", "group");
    TauFamily fam = TauFamily::identity();
    if (tau == "sign_flip")
      fam = TauFamily::sign_flip();
    else if (tau == "shift")
      fam = TauFamily::shift();
    else if (tau != "identity")
      throw ParseError("group", "unknown tau family '" + tau + "'");
    ModularWeight sigma = ModularWeight::one();
    if (j.contains("sigma"))
      sigma = ModularWeight::geometric(rat_from(j.at("sigma"), "group"));
    return Group::semidirect(std::move(n), std::move(h), std::move(fam),
                             std::move(sigma));
  }
  throw ParseError("group", "unknown family '" + family + "'");
}

SpacePtr space_from_json(const Json& j, const GroupPtr& g) {
  std::string kind = need_str(j, "kind", "space");
  if (kind == "point") return Space::point();
  if (kind == "finite") {
    long size = need_int(j, "size", "space");
    if (size < 1) throw ConfigError("space: size must be positive");
    std::vector<Rat> mu;
    if (j.contains("mu"))
      for (const auto& v : j.at("mu")) mu.push_back(rat_from(v, "space"));
    return Space::finite(static_cast<std::size_t>(size), std::move(mu));
  }
  if (kind == "carrier") return Space::carrier(g);
  if (kind == "boundary")
    return Space::boundary(static_cast<int>(need_int(j, "rank", "space")),
                           static_cast<int>(need_int(j, "depth", "space")));
  throw ParseError("space", "unknown kind '" + kind + "'");
}

TransformationGroup transformation_from_json(const Json& scenario) {
  GroupPtr g = group_from_json(need(scenario, "group", "scenario"));
  SpacePtr x = scenario.contains("space")
                   ? space_from_json(scenario.at("space"), g)
                   : Space::point();
  ActionKind left = ActionKind::Trivial;
  std::optional<ActionKind> right;
  switch (x->kind()) {
    case Space::Kind::Point:
    case Space::Kind::Finite:
      left = ActionKind::Trivial;
      right = ActionKind::Trivial;
      break;
    case Space::Kind::Carrier:
      left = ActionKind::CarrierLeft;
      right = ActionKind::CarrierRight;
      break;
    case Space::Kind::Boundary:
      left = ActionKind::BoundaryLeft;
      break;
    case Space::Kind::Product:
      throw ConfigError("scenario: product spaces are built by suites");
  }
  if (scenario.contains("action")) {
    const Json& a = scenario.at("action");
    left = action_kind_from(need_str(a, "left", "action"), "action");
    right.reset();
    if (a.contains("right"))
      right = action_kind_from(a.at("right").get<std::string>(), "action");
  }
  return TransformationGroup(std::move(x), std::move(g), left, right);
}

void validate_scenario(const Json& scenario) { dispatch(scenario, false); }

Json run_scenario(const Json& scenario, const RunOverrides& o) {
  Json sc = scenario;
  if (o.stages) {
    if (*o.stages < 1) throw ConfigError("stages override must be positive");
    if (!sc.contains("net") || !sc.at("net").is_object())
      throw ParseError("scenario", "missing field 'net'");
    sc["net"]["stages"] = *o.stages;
  }
  if (o.window_radius) {
    if (*o.window_radius < 1)
      throw ConfigError("window radius override must be positive");
    GroupPtr g = group_from_json(need(sc, "group", "scenario"));
    Json moves = Json::array();
    for (const auto& u : ball(g, *o.window_radius)) {
      if (u == g->identity()) continue;
      moves.push_back(g->format(u));
    }
    if (moves.empty()) throw ConfigError("window radius ball is trivial");
    sc["window"]["moves"] = moves;
  }
  return dispatch(sc, true);
}

}  // namespace amenity
