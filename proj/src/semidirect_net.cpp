#include "amenity/semidirect_net.hpp"

#include <algorithm>
#include <set>

#include "amenity/error.hpp"

namespace amenity {

namespace {

void need_semidirect(const GroupPtr& sg, const char* who) {
  if (!sg || sg->family() != Group::Family::Semidirect)
    throw ConfigError(std::string(who) + ": group must be a semidirect product");
}

const GFn& need_section(const ProductNetFunction& e, const Point& x,
                        const Point& y, const char* who) {
  const GFn* sec = e.section(x, y);
  if (!sec)
    throw ConfigError(std::string(who) + ": required slice is not stored");
  return *sec;
}

std::vector<Point> section_points(const NetFunction& f, const char* who) {
  std::vector<Point> out;
  for (const auto& [x, sec] : f.sections) out.push_back(x);
  if (out.empty())
    throw ConfigError(std::string(who) +
                      ": factor net has no explicit sections; pass slices");
  return out;
}

GFn product_section(const GroupPtr& sg, const GFn& fx, const GFn& gy) {
  const auto& sigma = sg->sigma();
  GFn out;
  for (const auto& [n, wn] : fx.entries())
    for (const auto& [h, wh] : gy.entries())
      out.set(sg->pair(n, h), wn * wh / sigma.value(h));
  return out;
}

}  // namespace

ProductNetFunction product_net(const GroupPtr& sg, const NetFunction& f,
                               const NetFunction& g, std::vector<Point> xs,
                               std::vector<Point> ys) {
  need_semidirect(sg, "product_net");
  if (xs.empty()) xs = section_points(f, "product_net");
  if (ys.empty()) ys = section_points(g, "product_net");
  static const GFn kZero;
  ProductNetFunction out;
  out.group = sg;
  for (const auto& x : xs) {
    const GFn* fx = f.section(x);
    for (const auto& y : ys) {
      const GFn* gy = g.section(y);
      out.sections.emplace(std::make_pair(x, y),
                           product_section(sg, fx ? *fx : kZero,
                                           gy ? *gy : kZero));
    }
  }
  return out;
}

GFn twist(const GroupPtr& sg, const GFn& f, const Elem& t) {
  need_semidirect(sg, "twist");
  sg->acting_part()->check_member(t, "twist");
  for (const auto& [n, w] : f.entries())
    sg->normal_part()->check_member(n, "twist");
  const auto& tau = sg->tau();
  // T_t f sits at tau_t(n) with weight f(n) sigma(t)
  GFn moved = f.mapped_keys([&](const Elem& n) { return tau.apply(t, n); });
  return moved.scaled(sg->sigma().value(t));
}

Rat twist_defect(const GroupPtr& sg, const NetFunction& f,
                 const std::vector<Point>& points,
                 const std::vector<Elem>& moves) {
  need_semidirect(sg, "twist_defect");
  if (points.empty() || moves.empty())
    throw ConfigError("twist_defect: empty window");
  const auto& n_part = sg->normal_part();
  static const GFn kZero;
  Rat worst;
  for (const auto& x : points) {
    const GFn* fx = f.section(x);
    const GFn& base = fx ? *fx : kZero;
    for (const auto& t : moves) {
      Rat d = haar_l1(twist(sg, base, t), base, n_part);
      if (worst < d) worst = d;
    }
  }
  return worst;
}

Rat full_defect(const TransformationGroup& t_h, const ProductNetFunction& e,
                const Elem& s, const Elem& t, const Point& x, const Point& y) {
  const GroupPtr& sg = e.group;
  need_semidirect(sg, "full_defect");
  sg->normal_part()->check_member(s, "full_defect");
  sg->acting_part()->check_member(t, "full_defect");
  const GFn& base = need_section(e, x, y, "full_defect");
  const GFn& moved = need_section(e, x, t_h.act_left(t, y), "full_defect");
  // (s,t)(n,h) is plain group multiplication, so precomposition with the
  // move is the left translate by its inverse.
  GFn pulled = translate_left(sg->inv(sg->pair(s, t)), moved);
  return haar_l1(pulled, base, sg);
}

BoundPair three_term_bound(const TransformationGroup& t_h,
                           const ProductNetFunction& e, const NetFunction& f,
                           const NetFunction& g, const Elem& s, const Elem& t,
                           const Point& x, const Point& y) {
  const GroupPtr& sg = e.group;
  need_semidirect(sg, "three_term_bound");
  const auto& n_part = sg->normal_part();
  const auto& h_part = sg->acting_part();
  n_part->check_member(s, "three_term_bound");
  h_part->check_member(t, "three_term_bound");

  Point ty = t_h.act_left(t, y);
  static const GFn kZero;
  const GFn* fxp = f.section(x);
  const GFn* gyp = g.section(y);
  const GFn* gtyp = g.section(ty);
  const GFn& fx = fxp ? *fxp : kZero;
  const GFn& gy = gyp ? *gyp : kZero;
  const GFn& gty = gtyp ? *gtyp : kZero;
  if (need_section(e, x, y, "three_term_bound") !=
          product_section(sg, fx, gy) ||
      need_section(e, x, ty, "three_term_bound") !=
          product_section(sg, fx, gty))
    throw ConfigError(
        "three_term_bound: net is not the product of the given factors");

  BoundPair out;
  out.lhs = full_defect(t_h, e, s, t, x, y);

  Elem tinv = h_part->inv(t);
  Rat gty_mass = haar_mass(gty, h_part);
  Rat term_twist = haar_l1(twist(sg, fx, tinv), fx, n_part) * gty_mass;
  Rat term_trans = sg->sigma().value(t).inverse() *
                   haar_l1(translate_left(n_part->inv(s), fx), fx, n_part) *
                   gty_mass;
  Rat term_drift =
      haar_mass(fx, n_part) * haar_l1(translate_left(tinv, gty), gy, h_part);
  out.rhs = term_twist + term_trans + term_drift;
  return out;
}

NetFunction marginalize(const ProductNetFunction& e, const Point& y) {
  const GroupPtr& sg = e.group;
  need_semidirect(sg, "marginalize");
  const auto& n_part = sg->normal_part();
  NetFunction out;
  out.stage = e.stage.first;
  bool any = false;
  for (const auto& [key, sec] : e.sections) {
    if (cmp(key.second, y) != 0) continue;
    any = true;
    GFn marg;
    for (const auto& [pair_elem, w] : sec.entries()) {
      const Elem& n = pair_elem.pair_n();
      // sigma(h) dlambda_H(h) = dlambda_G(n,h) / dlambda_N(n)
      marg.add(n, w * sg->haar(pair_elem) / n_part->haar(n));
    }
    out.sections.emplace(key.first, std::move(marg));
  }
  if (!any)
    throw ConfigError("marginalize: no section stored at the designated slice");
  return out;
}

BoundPair marginal_defect_bound(const ProductNetFunction& e, const Elem& s,
                                const Point& x, const Point& y) {
  const GroupPtr& sg = e.group;
  need_semidirect(sg, "marginal_defect_bound");
  const auto& n_part = sg->normal_part();
  n_part->check_member(s, "marginal_defect_bound");
  const GFn& base = need_section(e, x, y, "marginal_defect_bound");

  GFn marg;
  for (const auto& [pair_elem, w] : base.entries())
    marg.add(pair_elem.pair_n(),
             w * sg->haar(pair_elem) / n_part->haar(pair_elem.pair_n()));

  BoundPair out;
  out.lhs = haar_l1(translate_left(n_part->inv(s), marg), marg, n_part);
  Elem move = sg->pair(s, sg->acting_part()->identity());
  GFn pulled = translate_left(sg->inv(move), base);
  out.rhs = haar_l1(pulled, base, sg);
  return out;
}

BoundPair twist_from_full_defect(const TransformationGroup& t_h,
                                 const ProductNetFunction& e, const Elem& t,
                                 const Point& x, const Point& y) {
  const GroupPtr& sg = e.group;
  need_semidirect(sg, "twist_from_full_defect");
  const auto& h_part = sg->acting_part();
  h_part->check_member(t, "twist_from_full_defect");

  NetFunction marg = marginalize(e, y);
  const GFn* mx = marg.section(x);
  if (!mx)
    throw ConfigError("twist_from_full_defect: slice (x, y) is not stored");

  BoundPair out;
  out.lhs = haar_l1(twist(sg, *mx, t), *mx, sg->normal_part());
  out.rhs = full_defect(t_h, e, sg->normal_part()->identity(), h_part->inv(t),
                        x, y);
  return out;
}

BoundPair two_term_twist_bound(const TransformationGroup& t_h,
                               const ProductNetFunction& e,
                               const NetFunction& f, const NetFunction& g,
                               const Elem& t, const Point& x, const Point& y) {
  const GroupPtr& sg = e.group;
  need_semidirect(sg, "two_term_twist_bound");
  const auto& n_part = sg->normal_part();
  const auto& h_part = sg->acting_part();
  h_part->check_member(t, "two_term_twist_bound");

  static const GFn kZero;
  const GFn* fxp = f.section(x);
  const GFn& fx = fxp ? *fxp : kZero;
  const GFn* gyp = g.section(y);
  const GFn& gy = gyp ? *gyp : kZero;
  if (haar_mass(gy, h_part) != Rat(1))
    throw DomainError(
        "two_term_twist_bound: g^y must be a probability density");

  Elem tinv = h_part->inv(t);
  Point y_back = t_h.act_left(tinv, y);
  const GFn* gbp = g.section(y_back);
  const GFn& gb = gbp ? *gbp : kZero;

  GFn twisted = twist(sg, fx, t);
  BoundPair out;
  out.lhs = haar_l1(twisted, fx, n_part);
  Rat drift = haar_l1(gy, translate_left(t, gb), h_part);
  out.rhs = haar_mass(twisted, n_part) * drift +
            full_defect(t_h, e, n_part->identity(), tinv, x, y);
  return out;
}

Rat tau_compat_deficit(const GroupPtr& sg, const std::vector<Elem>& b,
                       const Elem& t) {
  need_semidirect(sg, "tau_compat_deficit");
  const auto& n_part = sg->normal_part();
  sg->acting_part()->check_member(t, "tau_compat_deficit");
  if (b.empty()) throw ConfigError("tau_compat_deficit: empty block");
  std::set<Elem, ElemLess> block;
  for (const auto& e : b) {
    n_part->check_member(e, "tau_compat_deficit");
    if (!block.insert(e).second)
      throw ConfigError("tau_compat_deficit: block elements must be distinct");
  }
  const auto& tau = sg->tau();
  Elem tinv = sg->acting_part()->inv(t);
  std::set<Elem, ElemLess> moved;
  for (const auto& e : block) moved.insert(tau.apply(tinv, e));

  Rat mass, sym;
  for (const auto& e : block) {
    mass += n_part->haar(e);
    if (!moved.count(e)) sym += n_part->haar(e);
  }
  for (const auto& e : moved)
    if (!block.count(e)) sym += n_part->haar(e);
  return sym / mass;
}

}  // namespace amenity
