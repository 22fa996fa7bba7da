#ifndef AMENITY_MEASURE_HPP_
#define AMENITY_MEASURE_HPP_

#include <map>
#include <utility>
#include <vector>

#include "amenity/error.hpp"
#include "amenity/group.hpp"
#include "amenity/rational.hpp"

namespace amenity {

// Finitely supported K -> Rat map with exact arithmetic. Entries with value
// zero are never stored, so support() is always the true support and two
// equal functions compare equal entry-wise.
template <class K, class Less>
class FinMap {
 public:
  using Map = std::map<K, Rat, Less>;

  FinMap() = default;
  explicit FinMap(std::vector<std::pair<K, Rat>> items) {
    for (auto& [k, v] : items) add(k, v);
  }

  const Map& entries() const { return entries_; }
  std::size_t support_size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  Rat at(const K& k) const {
    auto it = entries_.find(k);
    return it == entries_.end() ? Rat(0) : it->second;
  }

  void add(const K& k, const Rat& v) {
    if (v.is_zero()) return;
    auto [it, inserted] = entries_.emplace(k, v);
    if (!inserted) {
      it->second += v;
      if (it->second.is_zero()) entries_.erase(it);
    }
  }

  void set(const K& k, const Rat& v) {
    if (v.is_zero())
      entries_.erase(k);
    else
      entries_[k] = v;
  }

  Rat mass() const {
    Rat m(0);
    for (const auto& [k, v] : entries_) m += v;
    return m;
  }

  bool nonnegative() const {
    for (const auto& [k, v] : entries_)
      if (v.sign() < 0) return false;
    return true;
  }

  FinMap scaled(const Rat& c) const {
    FinMap out;
    if (c.is_zero()) return out;
    for (const auto& [k, v] : entries_) out.entries_.emplace(k, v * c);
    return out;
  }

  FinMap plus(const FinMap& o) const {
    FinMap out = *this;
    for (const auto& [k, v] : o.entries_) out.add(k, v);
    return out;
  }

  FinMap minus(const FinMap& o) const {
    FinMap out = *this;
    for (const auto& [k, v] : o.entries_) out.add(k, -v);
    return out;
  }

  // Pushforward along an arbitrary key map; colliding images accumulate.
  template <class F>
  FinMap mapped_keys(F&& f) const {
    FinMap out;
    for (const auto& [k, v] : entries_) out.add(f(k), v);
    return out;
  }

  template <class F>
  Rat weighted_mass(F&& weight) const {
    Rat m(0);
    for (const auto& [k, v] : entries_) m += v * weight(k);
    return m;
  }

  bool operator==(const FinMap& o) const { return entries_ == o.entries_; }
  bool operator!=(const FinMap& o) const { return !(*this == o); }

 private:
  Map entries_;
};

template <class K, class Less>
Rat l1_distance(const FinMap<K, Less>& a, const FinMap<K, Less>& b) {
  Rat d(0);
  auto ia = a.entries().begin(), ea = a.entries().end();
  auto ib = b.entries().begin(), eb = b.entries().end();
  Less less;
  while (ia != ea || ib != eb) {
    if (ib == eb || (ia != ea && less(ia->first, ib->first))) {
      d += ia->second.abs();
      ++ia;
    } else if (ia == ea || less(ib->first, ia->first)) {
      d += ib->second.abs();
      ++ib;
    } else {
      d += (ia->second - ib->second).abs();
      ++ia;
      ++ib;
    }
  }
  return d;
}

template <class K, class Less>
FinMap<K, Less> abs_diff(const FinMap<K, Less>& a, const FinMap<K, Less>& b) {
  FinMap<K, Less> out = a.minus(b);
  FinMap<K, Less> fixed;
  for (const auto& [k, v] : out.entries()) fixed.set(k, v.abs());
  return fixed;
}

// Finitely supported functions and measures on a group. A probability
// measure is a GFn that passes is_probability; the representation is shared.
using GFn = FinMap<Elem, ElemLess>;

inline bool is_probability(const GFn& f) {
  return f.nonnegative() && f.mass() == Rat(1);
}

inline GFn delta(const Elem& g) {
  GFn f;
  f.set(g, Rat(1));
  return f;
}

inline GFn uniform(const std::vector<Elem>& support) {
  if (support.empty()) throw DomainError("uniform: empty support");
  GFn f;
  Rat w(1, static_cast<long>(support.size()));
  for (const auto& g : support) {
    if (!f.at(g).is_zero()) throw DomainError("uniform: duplicate support point");
    f.set(g, w);
  }
  return f;
}

// Left translate (l_s f)(t) = f(s^-1 t); atoms move t -> s t. The same map
// is the pushforward measure s . mu with (s . mu)(E) = mu(s^-1 E).
inline GFn translate_left(const Elem& s, const GFn& f) {
  return f.mapped_keys(
      [&](const Elem& t) { return s.group()->mul(s, t); });
}

// Right translate (r_s f)(t) = f(t s); atoms move t -> t s^-1. As a measure
// this is mu . s^-1 with (mu . s)(E) = mu(E s^-1).
inline GFn translate_right(const GFn& f, const Elem& s) {
  return f.mapped_keys(
      [&](const Elem& t) { return s.group()->mul(t, s.group()->inv(s)); });
}

// Pushforward mu . s, atoms move t -> t s.
inline GFn push_right(const GFn& f, const Elem& s) {
  return f.mapped_keys([&](const Elem& t) { return s.group()->mul(t, s); });
}

inline GFn convolve(const GFn& f, const GFn& g) {
  GFn out;
  for (const auto& [u, fu] : f.entries())
    for (const auto& [v, gv] : g.entries())
      out.add(u.group()->mul(u, v), fu * gv);
  return out;
}

inline GFn normalize(const GFn& f) {
  if (!f.nonnegative())
    throw DomainError("normalize: signed input");
  Rat m = f.mass();
  if (m.is_zero()) throw DomainError("normalize: zero total mass");
  return f.scaled(m.inverse());
}

// Integral against the counting Haar weight of the carrier group; equals
// mass() whenever the group's modular weight is constant one.
inline Rat haar_mass(const GFn& f, const GroupPtr& g) {
  return f.weighted_mass([&](const Elem& t) { return g->haar(t); });
}

inline Rat haar_l1(const GFn& a, const GFn& b, const GroupPtr& g) {
  return haar_mass(abs_diff(a, b), g);
}

}  // namespace amenity

#endif  // AMENITY_MEASURE_HPP_
