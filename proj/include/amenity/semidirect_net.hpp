#ifndef AMENITY_SEMIDIRECT_NET_HPP_
#define AMENITY_SEMIDIRECT_NET_HPP_

#include <map>
#include <utility>
#include <vector>

#include "amenity/action.hpp"
#include "amenity/foelner.hpp"
#include "amenity/measure.hpp"

namespace amenity {

struct PointPairLess {
  bool operator()(const std::pair<Point, Point>& a,
                  const std::pair<Point, Point>& b) const {
    if (int c = cmp(a.first, b.first)) return c < 0;
    return cmp(a.second, b.second) < 0;
  }
};

// Two-parameter net over a semidirect product N x| H: a density on G for
// each slice (x, y).
struct ProductNetFunction {
  std::pair<int, int> stage{0, 0};
  GroupPtr group;  // the semidirect product the sections live on
  std::map<std::pair<Point, Point>, GFn, PointPairLess> sections;

  const GFn* section(const Point& x, const Point& y) const {
    auto it = sections.find({x, y});
    return it == sections.end() ? nullptr : &it->second;
  }
};

// e^{(x,y)}(n,h) = f^x(n) g^y(h) / sigma(h). The sigma-weighted G-mass of
// each section is exactly (mass of f^x) * (mass of g^y) for any sigma.
// Slices default to the explicit section points of the factors.
ProductNetFunction product_net(const GroupPtr& sg, const NetFunction& f,
                               const NetFunction& g,
                               std::vector<Point> xs = {},
                               std::vector<Point> ys = {});

// T_t f(n) = f(tau_{t^-1}(n)) sigma(t) for f in l1(N), t in H. Scales the
// l1 norm by exactly sigma(t), so it is an isometry iff sigma(t) = 1.
GFn twist(const GroupPtr& sg, const GFn& f, const Elem& t);

// max over points x and moves t of ||T_t f^x - f^x||_{L1(N)}
Rat twist_defect(const GroupPtr& sg, const NetFunction& f,
                 const std::vector<Point>& points,
                 const std::vector<Elem>& moves);

// Full displacement of one section under the move (s, t):
//   sum_{(n,h)} |e^{(x, t.y)}((s,t)(n,h)) - e^{(x,y)}(n,h)| dlambda_G(n,h)
// where the slice moves through the H-factor action t_h. Both slices must
// be stored.
Rat full_defect(const TransformationGroup& t_h, const ProductNetFunction& e,
                const Elem& s, const Elem& t, const Point& x, const Point& y);

struct BoundPair {
  Rat lhs;
  Rat rhs;
};

// Triangle split of the full defect of a product net into a twist term, an
// N-translation term, and an H-drift term:
//   full defect at ((s,t),(x,y))
//     <= ||T_{t^-1} f^x - f^x|| ||g^{t.y}||
//      + sigma(t)^-1 sum_n |f^x(sn) - f^x(n)| ||g^{t.y}||
//      + ||f^x|| sum_h |g^{t.y}(th) - g^y(h)|.
// Errors unless e is the product net of (f, g) on the slices involved.
BoundPair three_term_bound(const TransformationGroup& t_h,
                           const ProductNetFunction& e, const NetFunction& f,
                           const NetFunction& g, const Elem& s, const Elem& t,
                           const Point& x, const Point& y);

// N-marginal at a designated second slice: out^x(n) = sum_h e^{(x,y)}(n,h)
// sigma(h) dlambda_H(h), for every x with (x, y) stored. The N-mass of each
// marginal equals the G-mass of its source section.
NetFunction marginalize(const ProductNetFunction& e, const Point& y);

// Marginal displacement under s in N against the full defect of the source
// at the slice-fixing move (s, e_H): lhs <= rhs for any net.
BoundPair marginal_defect_bound(const ProductNetFunction& e, const Elem& s,
                                const Point& x, const Point& y);

// Twist defect of the marginal against the full defect at (e_N, t^-1). The
// right side reads the moved slice (x, t^-1.y), so the comparison is the
// documented inequality only when t^-1 fixes y.
BoundPair twist_from_full_defect(const TransformationGroup& t_h,
                                 const ProductNetFunction& e, const Elem& t,
                                 const Point& x, const Point& y);

// ||T_t f^x - f^x|| <= ||T_t f^x|| sum_h |g^y(h) - g^{t^-1.y}(t^-1 h)|
//                      + full defect at ((e_N, t^-1), (x, y)).
// Requires g^y to be a probability density on H.
BoundPair two_term_twist_bound(const TransformationGroup& t_h,
                               const ProductNetFunction& e,
                               const NetFunction& f, const NetFunction& g,
                               const Elem& t, const Point& x, const Point& y);

// mass(tau_{t^-1}(B) symdiff B) / mass(B) for a block B inside N. The space
// factor of a product region A x B scales both masses by mu(A) and cancels.
// Equals ||T_t 1_B/mass - 1_B/mass|| when sigma(t) = 1.
Rat tau_compat_deficit(const GroupPtr& sg, const std::vector<Elem>& b,
                       const Elem& t);

}  // namespace amenity

#endif  // AMENITY_SEMIDIRECT_NET_HPP_
