#include "amenity/action.hpp"

#include <algorithm>
#include <set>

#include "amenity/error.hpp"

namespace amenity {

std::string action_kind_name(ActionKind k) {
  switch (k) {
    case ActionKind::Trivial: return "trivial";
    case ActionKind::CarrierLeft: return "carrier-left";
    case ActionKind::CarrierRight: return "carrier-right";
    case ActionKind::InverseRight: return "inverse-right";
    case ActionKind::BoundaryLeft: return "boundary-left";
    case ActionKind::ProductSecondLeft: return "product-second-left";
  }
  return "?";
}

TransformationGroup::TransformationGroup(SpacePtr space, GroupPtr group,
                                         ActionKind left,
                                         std::optional<ActionKind> right)
    : space_(std::move(space)), group_(std::move(group)), left_(left),
      right_(right) {
  if (!space_ || !group_)
    throw ConstructionError("transformation group: null space or group");
  auto need_carrier = [&](const char* who) {
    if (space_->kind() != Space::Kind::Carrier ||
        !space_->carrier_group()->same_as(*group_))
      throw ConstructionError(std::string(who) +
                              " action needs the carrier space of the group");
  };
  switch (left_) {
    case ActionKind::Trivial:
      break;
    case ActionKind::CarrierLeft:
      need_carrier("carrier-left");
      break;
    case ActionKind::BoundaryLeft:
      if (space_->kind() != Space::Kind::Boundary ||
          group_->family() != Group::Family::Free ||
          group_->rank() != space_->boundary_rank())
        throw ConstructionError(
            "boundary-left action needs a boundary space over the same free group");
      break;
    case ActionKind::ProductSecondLeft:
      throw ConstructionError(
          "product actions are built through product_action");
    default:
      throw ConstructionError("left action must be a left action kind");
  }
  if (right_) {
    switch (*right_) {
      case ActionKind::Trivial:
        break;
      case ActionKind::CarrierRight:
        need_carrier("carrier-right");
        break;
      case ActionKind::InverseRight:
        break;
      default:
        throw ConstructionError("right action must be a right action kind");
    }
  }
}

TransformationGroup TransformationGroup::product_action(
    const TransformationGroup& t_n, const TransformationGroup& t_h,
    GroupPtr semidirect) {
  if (!semidirect || semidirect->family() != Group::Family::Semidirect)
    throw ConstructionError("product_action: group must be a semidirect product");
  if (t_n.left_kind() != ActionKind::Trivial)
    throw ConstructionError(
        "product_action: the normal factor must act trivially on the space");
  if (!t_n.space()->same_as(*t_h.space()))
    throw ConstructionError("product_action: factor actions live on different spaces");
  if (!semidirect->normal_part()->same_as(*t_n.group()) ||
      !semidirect->acting_part()->same_as(*t_h.group()))
    throw ConstructionError("product_action: factor groups do not match the product");
  TransformationGroup out(Space::product(t_h.space(), t_h.space()),
                          std::move(semidirect), ActionKind::Trivial);
  out.left_ = ActionKind::ProductSecondLeft;
  out.factor_ = std::make_shared<TransformationGroup>(t_h);
  return out;
}

ActionKind TransformationGroup::right_kind() const {
  if (!right_) throw DomainError("right action not defined for this system");
  return *right_;
}

namespace {

Point boundary_act(const Space& space, const Elem& s, const Point& x) {
  Elem::Word w = s.letters();
  Elem::Word out;
  for (auto l : w) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  // A stored letter, once pushed, can never cancel again: the stored word is
  // reduced, so consecutive letters are never inverse to each other.
  int kept = 0;
  for (auto l : x.boundary_word()) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
      ++kept;
    }
  }
  int depth = space.boundary_depth();
  if (kept == 0)
    throw DomainError(
        "boundary action cancelled the whole stored prefix; increase depth");
  if (static_cast<int>(out.size()) > depth) {
    out.resize(depth);
  } else {
    // Extend by repeating the final letter; repetition never cancels.
    while (static_cast<int>(out.size()) < depth) out.push_back(out.back());
  }
  return Point(Point::Boundary{std::move(out)});
}

}  // namespace

Point TransformationGroup::act_left(const Elem& s, const Point& x) const {
  group_->check_member(s, "act_left");
  space_->check_member(x, "act_left");
  switch (left_) {
    case ActionKind::Trivial:
      return x;
    case ActionKind::CarrierLeft:
      return space_->carrier_point(group_->mul(s, x.carrier()));
    case ActionKind::BoundaryLeft:
      return boundary_act(*space_, s, x);
    case ActionKind::ProductSecondLeft:
      return space_->pair_point(
          x.first(), factor_->act_left(s.pair_h(), x.second()));
    default:
      throw DomainError("act_left: not a left action kind");
  }
}

Point TransformationGroup::act_right(const Point& x, const Elem& s) const {
  if (!right_) throw DomainError("act_right: no right action supplied");
  group_->check_member(s, "act_right");
  space_->check_member(x, "act_right");
  switch (*right_) {
    case ActionKind::Trivial:
      return x;
    case ActionKind::CarrierRight:
      return space_->carrier_point(group_->mul(x.carrier(), s));
    case ActionKind::InverseRight:
      return act_left(group_->inv(s), x);
    default:
      throw DomainError("act_right: not a right action kind");
  }
}

Window make_window(const TransformationGroup& t, std::vector<Point> space_part,
                   std::vector<Elem> group_part) {
  for (const auto& x : space_part) t.space()->check_member(x, "window");
  for (const auto& s : group_part) t.group()->check_member(s, "window");
  std::set<Point, PointLess> xs(space_part.begin(), space_part.end());
  std::set<Elem, ElemLess> ss(group_part.begin(), group_part.end());
  if (xs.empty() || ss.empty())
    throw ConfigError("window: both parts must be nonempty");
  return Window{{xs.begin(), xs.end()}, {ss.begin(), ss.end()}};
}

Window window_from_radii(const TransformationGroup& t, int space_radius,
                         int group_radius, const std::vector<Point>& bases) {
  std::vector<Elem> gpart = ball(t.group(), group_radius);
  std::vector<Point> xpart;
  const auto& sp = *t.space();
  switch (sp.kind()) {
    case Space::Kind::Point:
      xpart.push_back(sp.pt());
      break;
    case Space::Kind::Finite:
      xpart = sp.universe(sp.size());
      break;
    case Space::Kind::Carrier:
      for (const auto& g : ball(sp.carrier_group(), space_radius))
        xpart.push_back(sp.carrier_point(g));
      break;
    case Space::Kind::Boundary:
    case Space::Kind::Product: {
      if (bases.empty())
        throw ConfigError(
            "window: boundary and product spaces need explicit base points");
      std::set<Point, PointLess> orbit(bases.begin(), bases.end());
      for (const auto& x : bases)
        for (const auto& s : ball(t.group(), space_radius))
          orbit.insert(t.act_left(s, x));
      xpart.assign(orbit.begin(), orbit.end());
      break;
    }
  }
  return make_window(t, std::move(xpart), std::move(gpart));
}

}  // namespace amenity
