#include "amenity/inner.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <set>
#include <variant>

#include "amenity/error.hpp"

namespace amenity {

namespace {

const GFn& need_mean(const MeanNet& m, const Point& x, const char* who) {
  const GFn* mu = m.mean(x);
  if (!mu) throw ConfigError(std::string(who) + ": mean absent at a window point");
  if (!is_probability(*mu))
    throw DomainError(std::string(who) + ": stored mean is not a probability");
  return *mu;
}

// double-valued pullbacks of a sqrt section: left t -> f(s^-1 t) has atoms
// u -> su, right t -> f(t s^-1) has atoms u -> us
DSection pull_left(const GroupPtr& g, const DSection& f, const Elem& s) {
  DSection out;
  for (const auto& [u, v] : f) out[g->mul(s, u)] += v;
  return out;
}

DSection pull_right(const GroupPtr& g, const DSection& f, const Elem& s) {
  DSection out;
  for (const auto& [u, v] : f) out[g->mul(u, s)] += v;
  return out;
}

double xi_value(const SqrtNet& xi, const Point& x, const Elem& t) {
  const DSection* sec = xi.section(x);
  if (!sec) return 0.0;
  auto it = sec->find(t);
  return it == sec->end() ? 0.0 : it->second;
}

}  // namespace

Rat inner_mean_defect(const TransformationGroup& t, const MeanNet& m,
                      const Window& k) {
  if (!t.has_right())
    throw ConfigError("inner_mean_defect: both actions are required");
  const auto& g = t.group();
  Rat worst;
  for (const auto& x : k.space_part) {
    for (const auto& s : k.group_part) {
      const GFn& left = need_mean(m, t.act_left(s, x), "inner_mean_defect");
      const GFn& right = need_mean(m, t.act_right(x, s), "inner_mean_defect");
      Elem sinv = g->inv(s);
      Rat d = haar_l1(push_right(left, sinv), translate_left(sinv, right), g);
      if (worst < d) worst = d;
    }
  }
  return worst;
}

InnerDefect inner_fn_defect(const TransformationGroup& t, const NetFunction& f,
                            const Window& k) {
  if (!t.has_right())
    throw ConfigError("inner_fn_defect: both actions are required");
  const auto& g = t.group();
  static const GFn kZero;
  InnerDefect out;
  const Rat one(1);
  for (const auto& x : k.space_part) {
    const GFn* sec = f.section(x);
    if (!sec) out.missing_sections = true;
    Rat nd = ((sec ? haar_mass(*sec, g) : Rat()) - one).abs();
    if (out.norm < nd) out.norm = nd;
    for (const auto& s : k.group_part) {
      const GFn* ls = f.section(t.act_left(s, x));
      const GFn* rs = f.section(t.act_right(x, s));
      if (!ls || !rs) out.missing_sections = true;
      Rat d = haar_l1(translate_left(s, ls ? *ls : kZero),
                      push_right(rs ? *rs : kZero, s), g);
      if (out.inv < d) out.inv = d;
    }
  }
  return out;
}

NetFunction smooth_mean(const MeanNet& m, const GFn& bump) {
  if (!bump.nonnegative() || bump.empty())
    throw DomainError("smooth_mean: bump must be a nonnegative density");
  NetFunction out;
  out.stage = m.stage;
  for (const auto& [x, mu] : m.means) {
    if (!is_probability(mu))
      throw DomainError("smooth_mean: stored mean is not a probability");
    out.sections.emplace(x, convolve(mu, bump));
  }
  if (out.sections.empty()) throw ConfigError("smooth_mean: empty mean net");
  return out;
}

Rat group_inner_defect(const GFn& f, const Elem& s) {
  if (f.empty()) return Rat(0);
  const auto& g = f.entries().begin()->first.group();
  g->check_member(s, "group_inner_defect");
  return haar_l1(translate_left(s, f), push_right(f, s), g);
}

std::vector<MeanNet> lift_group_inner_mean(const std::vector<GFn>& fs,
                                           const SpacePtr& x,
                                           std::size_t limit) {
  std::vector<Point> pts = x->universe(limit);
  std::vector<MeanNet> out;
  int stage = 0;
  for (const auto& f : fs) {
    if (!is_probability(f))
      throw DomainError("lift_group_inner_mean: stage is not a probability");
    MeanNet net;
    net.stage = stage++;
    for (const auto& p : pts) net.means.emplace(p, f);
    out.push_back(std::move(net));
  }
  return out;
}

GFn boundary_mean(const GroupPtr& fg, const Point& omega, int n) {
  if (n <= 0) throw DomainError("boundary_mean: need at least one prefix");
  if (!std::holds_alternative<Point::Boundary>(omega.data()))
    throw DomainError("boundary_mean: point is not a boundary word");
  const Elem::Word& w = omega.boundary_word();
  if ((int)w.size() < n)
    throw DomainError(
        "boundary_mean: stored word is shorter than the requested prefix count");
  std::vector<Elem> prefixes;
  prefixes.reserve(n);
  for (int k = 1; k <= n; ++k)
    prefixes.push_back(
        fg->word_letters(Elem::Word(w.begin(), w.begin() + k)));
  return uniform(prefixes);
}

SqrtNet sqrt_net(const NetFunction& f) {
  if (f.common && f.sections.empty())
    throw ConfigError("sqrt_net: needs explicit sections");
  SqrtNet out;
  out.stage = f.stage;
  for (const auto& [x, sec] : f.sections) {
    if (!sec.nonnegative())
      throw DomainError("sqrt_net: sections must be nonnegative");
    DSection d;
    for (const auto& [t, v] : sec.entries()) d[t] = std::sqrt(v.to_double());
    out.sections.emplace(x, std::move(d));
  }
  return out;
}

L2PairBound l2_pair_bound(const TransformationGroup& t, const SqrtNet& xi,
                          const Point& x, const Elem& s) {
  if (!t.has_right())
    throw ConfigError("l2_pair_bound: both actions are required");
  const auto& g = t.group();
  static const DSection kZero;
  const DSection* ls = xi.section(t.act_left(s, x));
  const DSection* rs = xi.section(t.act_right(x, s));
  DSection a = pull_left(g, ls ? *ls : kZero, s);
  DSection b = pull_right(g, rs ? *rs : kZero, s);
  L2PairBound out{0.0, 0.0, 0.0};
  auto ia = a.begin();
  auto ib = b.begin();
  ElemLess less;
  while (ia != a.end() || ib != b.end()) {
    double va = 0.0, vb = 0.0;
    const Elem* key = nullptr;
    if (ib == b.end() || (ia != a.end() && less(ia->first, ib->first))) {
      key = &ia->first;
      va = ia->second;
      ++ia;
    } else if (ia == a.end() || less(ib->first, ia->first)) {
      key = &ib->first;
      vb = ib->second;
      ++ib;
    } else {
      key = &ia->first;
      va = ia->second;
      vb = ib->second;
      ++ia;
      ++ib;
    }
    double haar = g->haar(*key).to_double();
    out.inv1 += std::abs(va * va - vb * vb) * haar;
    out.inv2 += (va - vb) * (va - vb) * haar;
    out.cross += (va + vb) * (va + vb) * haar;
  }
  return out;
}

L2Defect l2_inner_defect(const TransformationGroup& t, const SqrtNet& xi,
                         const Window& k) {
  const auto& g = t.group();
  L2Defect out{0.0, 0.0};
  for (const auto& x : k.space_part) {
    double mass = 0.0;
    if (const DSection* sec = xi.section(x))
      for (const auto& [u, v] : *sec) mass += v * v * g->haar(u).to_double();
    out.norm2 = std::max(out.norm2, std::abs(mass - 1.0));
    for (const auto& s : k.group_part)
      out.inv2 = std::max(out.inv2, l2_pair_bound(t, xi, x, s).inv2);
  }
  return out;
}

KernelVerdict kernel_check(const SqrtNet& xi,
                           const std::vector<std::pair<Point, Elem>>& diag,
                           double eps,
                           const std::vector<std::pair<Point, Elem>>& sample) {
  if (diag.empty() || sample.empty())
    throw ConfigError("kernel_check: diag and sample must be nonempty");
  KernelVerdict out;
  for (const auto& [x, t] : diag) {
    double v = xi_value(xi, x, t);
    out.max_diag_defect = std::max(out.max_diag_defect, std::abs(v * v - 1.0));
  }
  out.diag_ok = out.max_diag_defect <= eps;

  Eigen::VectorXd v(sample.size());
  for (std::size_t i = 0; i < sample.size(); ++i)
    v[(Eigen::Index)i] = xi_value(xi, sample[i].first, sample[i].second);
  Eigen::MatrixXd gram = v * v.transpose();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram);
  out.min_eigenvalue = solver.eigenvalues().minCoeff();
  out.psd_ok = out.min_eigenvalue >= -1e-9;
  out.pass = out.diag_ok && out.psd_ok;
  return out;
}

Rat inner_foelner_deficit(const TransformationGroup& t, const FoelnerPair& w,
                          const Elem& s) {
  if (!t.has_right())
    throw ConfigError("inner_foelner_deficit: both actions are required");
  const auto& g = t.group();
  g->check_member(s, "inner_foelner_deficit");
  std::vector<Cell> left, right;
  left.reserve(w.cells.size());
  right.reserve(w.cells.size());
  for (const auto& [x, h] : w.cells) {
    left.emplace_back(t.act_left(s, x), g->mul(s, h));
    right.emplace_back(t.act_right(x, s), g->mul(h, s));
  }
  std::sort(left.begin(), left.end(), CellLess{});
  std::sort(right.begin(), right.end(), CellLess{});
  Rat sym;
  CellLess less;
  std::size_t i = 0, j = 0;
  while (i < left.size() || j < right.size()) {
    if (j == right.size() || (i < left.size() && less(left[i], right[j]))) {
      sym += t.space()->mu(left[i].first) * g->haar(left[i].second);
      ++i;
    } else if (i == left.size() || less(right[j], left[i])) {
      sym += t.space()->mu(right[j].first) * g->haar(right[j].second);
      ++j;
    } else {
      ++i;
      ++j;
    }
  }
  return sym / w.mass;
}

}  // namespace amenity
