#include "amenity/foelner.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "amenity/error.hpp"

namespace amenity {

namespace {

Rat cell_mass(const TransformationGroup& t, const Cell& c) {
  return t.space()->mu(c.first) * t.group()->haar(c.second);
}

Rat symdiff_mass(const TransformationGroup& t,
                 const std::vector<Cell>& a_sorted,
                 const std::vector<Cell>& b_sorted) {
  CellLess less;
  Rat out;
  std::size_t i = 0, j = 0;
  while (i < a_sorted.size() || j < b_sorted.size()) {
    if (j == b_sorted.size() ||
        (i < a_sorted.size() && less(a_sorted[i], b_sorted[j]))) {
      out += cell_mass(t, a_sorted[i]);
      ++i;
    } else if (i == a_sorted.size() || less(b_sorted[j], a_sorted[i])) {
      out += cell_mass(t, b_sorted[j]);
      ++j;
    } else {
      ++i;
      ++j;
    }
  }
  return out;
}

std::vector<Cell> sorted_cells(std::vector<Cell> cells) {
  std::sort(cells.begin(), cells.end(), CellLess{});
  return cells;
}

}  // namespace

FoelnerPair make_region(const TransformationGroup& t, std::vector<Cell> cells) {
  if (cells.empty()) throw ConfigError("region needs at least one cell");
  for (auto& [x, g] : cells) {
    t.space()->check_member(x, "region cell");
    t.group()->check_member(g, "region cell");
  }
  cells = sorted_cells(std::move(cells));
  CellLess less;
  for (std::size_t i = 1; i < cells.size(); ++i)
    if (!less(cells[i - 1], cells[i]))
      throw ConfigError("region cells must be distinct");
  Rat mass;
  for (const auto& c : cells) mass += cell_mass(t, c);
  if (mass.sign() <= 0) throw ConfigError("region must have positive mass");
  return FoelnerPair{std::move(cells), mass};
}

FoelnerPair region_from_window(const TransformationGroup& t, const Window& w) {
  std::vector<Cell> cells;
  cells.reserve(w.space_part.size() * w.group_part.size());
  for (const auto& x : w.space_part)
    for (const auto& g : w.group_part) cells.emplace_back(x, g);
  return make_region(t, std::move(cells));
}

Rat foelner_deficit(const TransformationGroup& t, const FoelnerPair& w,
                    const Elem& s) {
  const auto& g = t.group();
  g->check_member(s, "deficit move");
  std::vector<Cell> moved;
  moved.reserve(w.cells.size());
  for (const auto& [x, h] : w.cells)
    moved.emplace_back(t.act_left(s, x), g->mul(s, h));
  moved = sorted_cells(std::move(moved));
  return symdiff_mass(t, moved, w.cells) / w.mass;
}

NetFunction indicator_net(const TransformationGroup& t, const FoelnerPair& w,
                          int stage) {
  GFn col;
  for (const auto& [x, g] : w.cells) col.add(g, t.space()->mu(x));
  NetFunction out;
  out.stage = stage;
  out.common = col.scaled(w.mass.inverse());
  return out;
}

Rat aicm_inv_defect_at(const TransformationGroup& t, const NetFunction& f,
                       const Point& x, const Elem& s) {
  const auto& g = t.group();
  static const GFn kZero;
  const GFn* at_sx = f.section(t.act_left(s, x));
  const GFn* at_x = f.section(x);
  // t |-> f^{s.x}(st) is the left translate of f^{s.x} by s^{-1}.
  GFn pulled = translate_left(g->inv(s), at_sx ? *at_sx : kZero);
  return haar_l1(pulled, at_x ? *at_x : kZero, g);
}

AicmDefect aicm_defect(const TransformationGroup& t, const NetFunction& f,
                       const Window& k) {
  AicmDefect out;
  const auto& g = t.group();
  const Rat one(1);
  for (const auto& x : k.space_part) {
    const GFn* sec = f.section(x);
    if (!sec) out.missing_sections = true;
    Rat nd = ((sec ? haar_mass(*sec, g) : Rat()) - one).abs();
    if (out.norm < nd) out.norm = nd;
    for (const auto& s : k.group_part) {
      if (!f.section(t.act_left(s, x))) out.missing_sections = true;
      Rat d = aicm_inv_defect_at(t, f, x, s);
      if (out.inv < d) out.inv = d;
    }
  }
  return out;
}

DeficitReport verify_aicm(const TransformationGroup& t,
                          const std::vector<NetFunction>& nets,
                          const Window& k, const std::vector<Rat>& epsilons) {
  if (nets.empty()) throw ConfigError("need at least one net stage");
  if (epsilons.empty()) throw ConfigError("epsilon schedule must be nonempty");
  for (std::size_t i = 0; i < epsilons.size(); ++i) {
    if (epsilons[i].sign() <= 0)
      throw ConfigError("epsilon schedule entries must be positive");
    if (i && epsilons[i] > epsilons[i - 1])
      throw ConfigError("epsilon schedule must be nonincreasing");
  }
  DeficitReport rep;
  bool missing = false;
  for (const auto& net : nets) {
    Rat stage_worst;
    for (const auto& s : k.group_part) {
      Window single{k.space_part, {s}};
      AicmDefect d = aicm_defect(t, net, single);
      missing = missing || d.missing_sections;
      rep.rows.push_back(
          DeficitRow{net.stage, t.group()->format(s), d.norm, d.inv});
      Rat worst = d.norm < d.inv ? d.inv : d.norm;
      if (stage_worst < worst) stage_worst = worst;
    }
    rep.stage_max.push_back(stage_worst);
  }
  if (missing)
    rep.notes.push_back("some sections absent over the window; treated as 0");
  rep.certified = rep.stage_max.back() < epsilons.back();
  std::ostringstream note;
  note << "final stage max defect " << rep.stage_max.back().str()
       << (rep.certified ? " < " : " >= ") << epsilons.back().str()
       << " (schedule tail)";
  rep.notes.push_back(note.str());
  return rep;
}

NetFunction regularize(const GroupPtr& g, const NetFunction& f, const GFn& bump,
                       long n, const std::vector<Point>& points) {
  if (n <= 0) throw DomainError("regularization index must be positive");
  if (!bump.nonnegative() || haar_mass(bump, g) != Rat(1))
    throw DomainError("bump must be a probability density");
  for (const auto& [s, w] : bump.entries()) g->check_member(s, "bump atom");
  std::vector<Point> xs = points;
  if (xs.empty())
    for (const auto& [x, sec] : f.sections) xs.push_back(x);
  if (xs.empty() && f.common) throw ConfigError(
      "regularize needs explicit points for a common-section net");
  if (xs.empty()) throw ConfigError("regularize has no points to work on");
  const Rat inv_n(1, n);
  NetFunction out;
  out.stage = f.stage;
  static const GFn kZero;
  for (const auto& x : xs) {
    const GFn* sec = f.section(x);
    const GFn& base = sec ? *sec : kZero;
    GFn mixed = base.plus(bump.scaled(inv_n));
    Rat denom = haar_mass(base, g) + inv_n;
    out.sections.emplace(x, mixed.scaled(denom.inverse()));
  }
  return out;
}

}  // namespace amenity
