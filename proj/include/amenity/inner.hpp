#ifndef AMENITY_INNER_HPP_
#define AMENITY_INNER_HPP_

#include <map>
#include <utility>
#include <vector>

#include "amenity/action.hpp"
#include "amenity/foelner.hpp"
#include "amenity/measure.hpp"

namespace amenity {

// Conventions used throughout: (s . mu) has atoms t -> st and (mu . s) has
// atoms t -> ts, i.e. convolution with the point mass on the matching side.

// A stage of a conjugation-mean net: a probability measure for each point.
struct MeanNet {
  int stage = 0;
  std::map<Point, GFn, PointLess> means;

  const GFn* mean(const Point& x) const {
    auto it = means.find(x);
    return it == means.end() ? nullptr : &it->second;
  }
};

// max over (x,s) in the window of || m^{s.x} . s^-1  -  s^-1 . m^{x.s} ||_1.
// Needs both actions; every mean the window touches must be stored and be a
// probability measure.
Rat inner_mean_defect(const TransformationGroup& t, const MeanNet& m,
                      const Window& k);

struct InnerDefect {
  Rat norm;  // max |haar-mass(f^x) - 1|
  Rat inv;   // max sum_t |f^{s.x}(s^-1 t) - f^{x.s}(t s^-1)| dlambda(t)
  bool missing_sections = false;
};

// Function form of the same defect; absent sections read as zero.
InnerDefect inner_fn_defect(const TransformationGroup& t, const NetFunction& f,
                            const Window& k);

// x -> m^x * bump. The bump must be a probability density, so each output
// section is again a probability density.
NetFunction smooth_mean(const MeanNet& m, const GFn& bump);

// || delta_s * f - f * delta_s ||_1, the single-group shadow of the defect.
Rat group_inner_defect(const GFn& f, const Elem& s);

// Constant-in-x lift of group densities over a finite universe: stage i uses
// fs[i] at every point. The lifted defects coincide with the group ones.
std::vector<MeanNet> lift_group_inner_mean(const std::vector<GFn>& fs,
                                           const SpacePtr& x,
                                           std::size_t limit = 4096);

// Uniform measure on the first n prefixes of a boundary word, as elements of
// the free group. The stored word must have at least n letters.
GFn boundary_mean(const GroupPtr& fg, const Point& omega, int n);

// Square-root carrier of a net, kept in floating point.
using DSection = std::map<Elem, double, ElemLess>;
struct SqrtNet {
  int stage = 0;
  std::map<Point, DSection, PointLess> sections;

  const DSection* section(const Point& x) const {
    auto it = sections.find(x);
    return it == sections.end() ? nullptr : &it->second;
  }
};

// Pointwise square root of the sections of f (which must be explicit).
SqrtNet sqrt_net(const NetFunction& f);

struct L2Defect {
  double norm2;  // max |sum_t xi(x,t)^2 dlambda - 1|
  double inv2;   // max sum_t (xi(s.x, s^-1 t) - xi(x.s, t s^-1))^2 dlambda
};

L2Defect l2_inner_defect(const TransformationGroup& t, const SqrtNet& xi,
                         const Window& k);

// The three quantities tied together at one (x, s): the l1 defect of the
// squared net, the squared l2 defect, and the Cauchy-Schwarz majorant
// sum (xi_1 + xi_2)^2. Always inv2 <= inv1 <= sqrt(cross * inv2).
struct L2PairBound {
  double inv1;
  double inv2;
  double cross;
};

L2PairBound l2_pair_bound(const TransformationGroup& t, const SqrtNet& xi,
                          const Point& x, const Elem& s);

// Rank-one kernel h((x,s),(y,t)) = xi(x,s) xi(y,t): diagonal proximity over
// the listed pairs and positive semidefiniteness of the sampled Gram matrix.
struct KernelVerdict {
  double max_diag_defect = 0.0;
  bool diag_ok = false;
  double min_eigenvalue = 0.0;
  bool psd_ok = false;
  bool pass = false;
};

KernelVerdict kernel_check(const SqrtNet& xi,
                           const std::vector<std::pair<Point, Elem>>& diag,
                           double eps,
                           const std::vector<std::pair<Point, Elem>>& sample);

// mass(s.W symdiff W.s) / mass(W) with s.(x,t) = (s.x, st) and
// (x,t).s = (x.s, ts). Needs both actions.
Rat inner_foelner_deficit(const TransformationGroup& t, const FoelnerPair& w,
                          const Elem& s);

}  // namespace amenity

#endif  // AMENITY_INNER_HPP_
