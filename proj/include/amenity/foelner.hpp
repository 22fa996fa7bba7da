#ifndef AMENITY_FOELNER_HPP_
#define AMENITY_FOELNER_HPP_

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "amenity/action.hpp"
#include "amenity/measure.hpp"
#include "amenity/space.hpp"

namespace amenity {

// One cell of a region in X x G.
using Cell = std::pair<Point, Elem>;
struct CellLess {
  bool operator()(const Cell& a, const Cell& b) const {
    if (int c = cmp(a.first, b.first)) return c < 0;
    return cmp(a.second, b.second) < 0;
  }
};

// Finite region of X x G together with its mu x haar mass.
struct FoelnerPair {
  std::vector<Cell> cells;  // sorted, duplicate-free
  Rat mass;
};

FoelnerPair make_region(const TransformationGroup& t, std::vector<Cell> cells);
// Product region: every (x, g) with x in the space part, g in the group part.
FoelnerPair region_from_window(const TransformationGroup& t, const Window& w);

// mass(s.(A,B) symdiff (A,B)) / mass(A,B) under the diagonal action
// s.(x,t) = (s.x, st).
Rat foelner_deficit(const TransformationGroup& t, const FoelnerPair& w,
                    const Elem& s);

// One stage of a candidate-mean net: a section x -> f^x in l1(G). Points
// listed in `sections` use their own section; otherwise `common` applies
// when present. A null section() means identically zero.
struct NetFunction {
  int stage = 0;
  std::map<Point, GFn, PointLess> sections;
  std::optional<GFn> common;

  const GFn* section(const Point& x) const {
    auto it = sections.find(x);
    if (it != sections.end()) return &it->second;
    return common ? &*common : nullptr;
  }
};

// Density of a region: f^x(t) = (sum of mu(x') over cells (x', t)) / mass,
// the same density for every x. Integrating the cell weights over the space
// coordinate first makes every section have haar-mass exactly one, and the
// invariance defect of the result is dominated by the Foelner deficit of the
// region for any mu-preserving action.
NetFunction indicator_net(const TransformationGroup& t, const FoelnerPair& w,
                          int stage = 0);

struct AicmDefect {
  Rat norm;  // max over the window of |haar-mass(f^x) - 1|
  Rat inv;   // max over the window of sum_t |f^{s.x}(st) - f^x(t)| dlambda(t)
  bool missing_sections = false;
};

// Defects of approximate invariance over a finite window.
AicmDefect aicm_defect(const TransformationGroup& t, const NetFunction& f,
                       const Window& k);
// Same invariance defect at a single (x, s).
Rat aicm_inv_defect_at(const TransformationGroup& t, const NetFunction& f,
                       const Point& x, const Elem& s);

struct DeficitRow {
  int stage = 0;
  std::string label;  // which move / window element the row describes
  Rat norm_defect;
  Rat inv_defect;
};

struct DeficitReport {
  std::vector<DeficitRow> rows;
  std::vector<Rat> stage_max;  // per-stage max of both defects, trend summary
  bool certified = false;
  std::vector<std::string> notes;
};

// Stage-by-stage defect table; certified when the final stage's maximum
// defect is below the schedule's final entry. Never a limit claim.
DeficitReport verify_aicm(const TransformationGroup& t,
                          const std::vector<NetFunction>& nets,
                          const Window& k, const std::vector<Rat>& epsilons);

// Per-x renormalized mixture (f^x + bump/n) / (haar-mass(f^x) + 1/n),
// evaluated over the given points (defaults to f's stored section points).
// Every output section has haar-mass exactly one.
NetFunction regularize(const GroupPtr& g, const NetFunction& f, const GFn& bump,
                       long n, const std::vector<Point>& points = {});

}  // namespace amenity

#endif  // AMENITY_FOELNER_HPP_
