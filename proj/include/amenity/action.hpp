#ifndef AMENITY_ACTION_HPP_
#define AMENITY_ACTION_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "amenity/group.hpp"
#include "amenity/space.hpp"

namespace amenity {

enum class ActionKind {
  Trivial,           // s . x = x
  CarrierLeft,       // X = carrier of G, s . x = s x
  CarrierRight,      // right action x . s = x s
  InverseRight,      // right action defined through the left one: x . s = s^-1 . x
  BoundaryLeft,      // prepend the word, reduce, re-truncate or extend to depth
  ProductSecondLeft  // (n,h) . (x,y) = (x, h . y), built by product_action
};

std::string action_kind_name(ActionKind k);

// A group acting on a space: the left action always exists, a right action
// is optional and independent unless InverseRight ties it to the left one.
class TransformationGroup {
 public:
  TransformationGroup(SpacePtr space, GroupPtr group, ActionKind left,
                      std::optional<ActionKind> right = std::nullopt);

  // (X x X, N x| H) with (n,h) acting on the second coordinate through the
  // H-factor action. Requires the N-factor action on X to be trivial.
  static TransformationGroup product_action(const TransformationGroup& t_n,
                                            const TransformationGroup& t_h,
                                            GroupPtr semidirect);

  const SpacePtr& space() const { return space_; }
  const GroupPtr& group() const { return group_; }
  ActionKind left_kind() const { return left_; }
  bool has_right() const { return right_.has_value(); }
  ActionKind right_kind() const;

  Point act_left(const Elem& s, const Point& x) const;
  Point act_right(const Point& x, const Elem& s) const;

 private:
  SpacePtr space_;
  GroupPtr group_;
  ActionKind left_;
  std::optional<ActionKind> right_;
  std::shared_ptr<const TransformationGroup> factor_;  // ProductSecondLeft
};

// Finite stand-in for a compact subset of X x G: a block of points times a
// block of group elements, both nonempty, deduplicated and sorted.
struct Window {
  std::vector<Point> space_part;
  std::vector<Elem> group_part;
};

Window make_window(const TransformationGroup& t, std::vector<Point> space_part,
                   std::vector<Elem> group_part);

// Window from radii: the group part is ball(group_radius); the space part is
// the whole space for finite kinds, the point for the point space, carrier
// points of ball(space_radius) for carriers, and the orbit of `bases` under
// ball(space_radius) for boundary or product spaces.
Window window_from_radii(const TransformationGroup& t, int space_radius,
                         int group_radius,
                         const std::vector<Point>& bases = {});

}  // namespace amenity

#endif  // AMENITY_ACTION_HPP_
