#include "amenity/group.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace amenity {

namespace {

int cmp_i64(std::int64_t a, std::int64_t b) { return a < b ? -1 : a > b ? 1 : 0; }

template <typename V>
int cmp_vec(const V& a, const V& b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return a.size() < b.size() ? -1 : a.size() > b.size() ? 1 : 0;
}

// Shortlex on words so balls enumerate by length first.
int cmp_word(const Elem::Word& a, const Elem::Word& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return cmp_vec(a, b);
}

void reduce_into(Elem::Word& out, const Elem::Word& in) {
  for (auto l : in) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
}

}  // namespace

int cmp(const Elem& a, const Elem& b) {
  const auto& da = a.data();
  const auto& db = b.data();
  if (da.index() != db.index()) return da.index() < db.index() ? -1 : 1;
  switch (da.index()) {
    case 0:
      return cmp_vec(std::get<Elem::IntVec>(da), std::get<Elem::IntVec>(db));
    case 1:
      return cmp_word(std::get<Elem::Word>(da), std::get<Elem::Word>(db));
    case 2: {
      auto x = std::get<std::uint32_t>(da), y = std::get<std::uint32_t>(db);
      return x < y ? -1 : x > y ? 1 : 0;
    }
    case 3:
      return cmp_vec(std::get<Elem::Lamps>(da), std::get<Elem::Lamps>(db));
    default: {
      const auto& pa = std::get<Elem::Pair>(da);
      const auto& pb = std::get<Elem::Pair>(db);
      if (int c = cmp(*pa.n, *pb.n)) return c;
      return cmp(*pa.h, *pb.h);
    }
  }
}

// ---- TauFamily ----

TauFamily TauFamily::identity() { return TauFamily(Kind::Identity, "id"); }
TauFamily TauFamily::sign_flip() { return TauFamily(Kind::SignFlip, "sign-flip"); }
TauFamily TauFamily::shift() { return TauFamily(Kind::Shift, "shift"); }

TauFamily TauFamily::table(std::vector<std::vector<std::uint32_t>> images) {
  TauFamily t(Kind::Table, "table");
  std::ostringstream sig;
  sig << "table[";
  for (const auto& row : images)
    for (auto v : row) sig << v << ",";
  sig << "]";
  t.tag_ = sig.str();
  t.images_ = std::move(images);
  return t;
}

namespace {

std::int64_t acting_int(const Elem& h, const char* who) {
  const auto& g = *h.group();
  if (g.family() == Group::Family::FreeAbelian && g.rank() == 1)
    return h.coords()[0];
  if (g.family() == Group::Family::Cyclic) return h.index();
  throw DomainError(std::string(who) + ": acting element is not an integer");
}

}  // namespace

Elem TauFamily::apply(const Elem& h, const Elem& n) const {
  switch (kind_) {
    case Kind::Identity:
      return n;
    case Kind::SignFlip: {
      std::int64_t k = acting_int(h, "sign-flip");
      if (k % 2 == 0) return n;
      Elem::IntVec c = n.coords();
      for (auto& v : c) v = -v;
      return Elem(n.group(), std::move(c));
    }
    case Kind::Shift: {
      std::int64_t k = acting_int(h, "shift");
      Elem::Lamps lit = n.lamps();
      for (auto& p : lit) p += k;
      return Elem(n.group(), std::move(lit));
    }
    case Kind::Table: {
      std::uint32_t hi = h.index(), ni = n.index();
      if (hi >= images_.size() || ni >= images_[hi].size())
        throw DomainError("tau table: index out of range");
      return Elem(n.group(), images_[hi][ni]);
    }
  }
  throw DomainError("tau: unknown kind");
}

// ---- ModularWeight ----

ModularWeight ModularWeight::one() {
  return ModularWeight(Kind::One, Rat(1), "one");
}

ModularWeight ModularWeight::geometric(const Rat& ratio) {
  if (ratio.sign() <= 0)
    throw ConstructionError("modular weight: ratio must be positive");
  return ModularWeight(Kind::Geometric, ratio, "geom(" + ratio.str() + ")");
}

Rat ModularWeight::value(const Elem& h) const {
  if (kind_ == Kind::One) return Rat(1);
  std::int64_t k = acting_int(h, "modular weight");
  Rat base = k >= 0 ? ratio_ : ratio_.inverse();
  std::int64_t steps = k >= 0 ? k : -k;
  Rat out(1);
  for (std::int64_t i = 0; i < steps; ++i) out *= base;
  return out;
}

// ---- Group factories ----

GroupPtr Group::free_abelian(int rank) {
  if (rank < 1 || rank > 16)
    throw ConstructionError("free-abelian: rank must be in 1..16");
  auto g = std::shared_ptr<Group>(new Group());
  g->family_ = Family::FreeAbelian;
  g->rank_ = rank;
  g->signature_ = "Z^" + std::to_string(rank);
  g->describe_ = "free-abelian(" + std::to_string(rank) + ")";
  return g;
}

GroupPtr Group::free_group(int rank) {
  if (rank < 1 || rank > 26)
    throw ConstructionError("free: rank must be in 1..26");
  auto g = std::shared_ptr<Group>(new Group());
  g->family_ = Family::Free;
  g->rank_ = rank;
  g->signature_ = "F" + std::to_string(rank);
  g->describe_ = "free(" + std::to_string(rank) + ")";
  return g;
}

GroupPtr Group::cyclic(std::uint32_t order) {
  if (order == 0) throw ConstructionError("cyclic: order must be positive");
  auto g = std::shared_ptr<Group>(new Group());
  g->family_ = Family::Cyclic;
  g->order_ = order;
  g->signature_ = "C" + std::to_string(order);
  g->describe_ = "cyclic(" + std::to_string(order) + ")";
  return g;
}

GroupPtr Group::finite(std::vector<std::vector<std::uint32_t>> table,
                       std::vector<std::string> labels) {
  std::size_t m = table.size();
  if (m == 0) throw ConstructionError("finite: empty table");
  for (const auto& row : table) {
    if (row.size() != m) throw ConstructionError("finite: table is not square");
    for (auto v : row)
      if (v >= m) throw ConstructionError("finite: entry out of range");
  }
  // Identity, then inverses, then associativity (full for desk-scale m).
  std::uint32_t id = m;
  for (std::uint32_t e = 0; e < m; ++e) {
    bool ok = true;
    for (std::uint32_t x = 0; x < m && ok; ++x)
      ok = table[e][x] == x && table[x][e] == x;
    if (ok) {
      id = e;
      break;
    }
  }
  if (id == m) throw ConstructionError("finite: no identity element");
  std::vector<std::uint32_t> inverse(m, 0);
  for (std::uint32_t a = 0; a < m; ++a) {
    bool found = false;
    for (std::uint32_t b = 0; b < m; ++b) {
      if (table[a][b] == id && table[b][a] == id) {
        inverse[a] = b;
        found = true;
        break;
      }
    }
    if (!found) throw ConstructionError("finite: element without inverse");
  }
  std::size_t limit = m <= 64 ? m : 64;
  for (std::size_t a = 0; a < limit; ++a)
    for (std::size_t b = 0; b < limit; ++b)
      for (std::size_t c = 0; c < limit; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw ConstructionError("finite: table is not associative");

  if (labels.empty()) {
    labels.reserve(m);
    for (std::size_t i = 0; i < m; ++i) labels.push_back("g" + std::to_string(i));
  }
  if (labels.size() != m)
    throw ConstructionError("finite: label count does not match table");

  auto g = std::shared_ptr<Group>(new Group());
  g->family_ = Family::Finite;
  g->order_ = static_cast<std::uint32_t>(m);
  g->table_identity_ = id;
  g->table_inverse_ = std::move(inverse);
  std::ostringstream sig;
  sig << "T" << m << "[";
  for (const auto& row : table)
    for (auto v : row) sig << v << ",";
  sig << "]";
  g->signature_ = sig.str();
  g->describe_ = "finite(" + std::to_string(m) + ")";
  g->table_ = std::move(table);
  g->labels_ = std::move(labels);
  return g;
}

GroupPtr Group::lamp_sum() {
  auto g = std::shared_ptr<Group>(new Group());
  g->family_ = Family::LampSum;
  g->signature_ = "L2Z";
  g->describe_ = "direct-sum-z2";
  return g;
}

GroupPtr Group::semidirect(GroupPtr normal, GroupPtr acting, TauFamily tau,
                           ModularWeight sigma) {
  if (!normal || !acting) throw ConstructionError("semidirect: null factor");
  switch (tau.kind()) {
    case TauFamily::Kind::Identity:
      break;
    case TauFamily::Kind::SignFlip: {
      bool n_ok = normal->family() == Family::FreeAbelian;
      bool h_ok = (acting->family() == Family::FreeAbelian && acting->rank() == 1) ||
                  (acting->family() == Family::Cyclic && acting->order() % 2 == 0);
      if (!n_ok || !h_ok)
        throw ConstructionError(
            "semidirect: sign-flip needs free-abelian N and integer-like H of even parity");
      break;
    }
    case TauFamily::Kind::Shift:
      if (normal->family() != Family::LampSum ||
          acting->family() != Family::FreeAbelian || acting->rank() != 1)
        throw ConstructionError("semidirect: shift needs direct-sum-z2 N and Z acting");
      break;
    case TauFamily::Kind::Table: {
      bool n_ok = normal->family() == Family::Finite || normal->family() == Family::Cyclic;
      bool h_ok = acting->family() == Family::Finite || acting->family() == Family::Cyclic;
      if (!n_ok || !h_ok)
        throw ConstructionError("semidirect: table tau needs finite factors");
      break;
    }
  }

  auto g = std::shared_ptr<Group>(new Group());
  g->family_ = Family::Semidirect;
  g->normal_ = normal;
  g->acting_ = acting;
  g->tau_ = tau;
  g->sigma_ = sigma;
  g->signature_ = "SD(" + normal->signature() + "," + acting->signature() + "," +
                  tau.tag() + "," + sigma.tag() + ")";
  g->describe_ = "semidirect(" + normal->describe() + ", " + acting->describe() +
                 ", " + tau.tag() + ")";

  // Spot-check that tau is a homomorphism into Aut(N) before letting the
  // product loose: tau_e = id, tau_{h1 h2} = tau_{h1} tau_{h2}, and each
  // tau_h respects multiplication.
  std::vector<Elem> hs = acting->generators();
  {
    std::vector<Elem> with_inv;
    for (const auto& h : hs) {
      with_inv.push_back(h);
      with_inv.push_back(acting->inv(h));
    }
    hs = std::move(with_inv);
    hs.push_back(acting->identity());
  }
  std::vector<Elem> ns = normal->generators();
  ns.push_back(normal->identity());
  if (ns.size() >= 2) ns.push_back(normal->mul(ns[0], ns[1]));
  for (const auto& n : ns) {
    if (tau.apply(acting->identity(), n) != n)
      throw ConstructionError("semidirect: tau at identity is not the identity map");
  }
  for (const auto& h1 : hs) {
    for (const auto& h2 : hs) {
      Elem h12 = acting->mul(h1, h2);
      for (const auto& n : ns) {
        if (tau.apply(h12, n) != tau.apply(h1, tau.apply(h2, n)))
          throw ConstructionError("semidirect: tau fails the homomorphism check");
      }
    }
  }
  for (const auto& h : hs) {
    for (const auto& n1 : ns) {
      for (const auto& n2 : ns) {
        if (tau.apply(h, normal->mul(n1, n2)) !=
            normal->mul(tau.apply(h, n1), tau.apply(h, n2)))
          throw ConstructionError("semidirect: tau_h is not multiplicative");
      }
    }
  }
  // sigma must be multiplicative and positive on the sampled window.
  for (const auto& h1 : hs) {
    if (sigma.value(h1).sign() <= 0)
      throw ConstructionError("semidirect: sigma must be strictly positive");
    for (const auto& h2 : hs) {
      if (sigma.value(acting->mul(h1, h2)) != sigma.value(h1) * sigma.value(h2))
        throw ConstructionError("semidirect: sigma fails the multiplicativity check");
    }
  }
  return g;
}

// ---- membership and builders ----

void Group::check_member(const Elem& a, const char* op) const {
  if (!a.group() || !same_as(*a.group()))
    throw DomainError(std::string(op) + ": element belongs to a different group (" +
                      (a.group() ? a.group()->signature() : "null") + " vs " +
                      signature_ + ")");
  static constexpr std::size_t expected[] = {0, 1, 2, 2, 3, 4};
  if (a.data().index() != expected[static_cast<int>(family_)])
    throw DomainError(std::string(op) + ": element payload does not match family");
}

Elem Group::vec(std::vector<std::int64_t> coords) const {
  if (family_ != Family::FreeAbelian || static_cast<int>(coords.size()) != rank_)
    throw DomainError("vec: wrong family or arity");
  return Elem(shared_from_this(), std::move(coords));
}

Elem Group::word_letters(Elem::Word letters) const {
  if (family_ != Family::Free) throw DomainError("word: wrong family");
  Elem::Word red;
  for (auto l : letters) {
    if (l == 0 || l > rank_ || l < -rank_)
      throw DomainError("word: letter out of range");
  }
  reduce_into(red, letters);
  return Elem(shared_from_this(), std::move(red));
}

Elem Group::word(const std::string& s) const {
  Elem::Word w;
  if (s != "e") {
    for (char c : s) {
      if (c >= 'a' && c <= 'z') {
        w.push_back(static_cast<std::int32_t>(c - 'a') + 1);
      } else if (c >= 'A' && c <= 'Z') {
        w.push_back(-(static_cast<std::int32_t>(c - 'A') + 1));
      } else {
        throw DomainError("word: bad character in '" + s + "'");
      }
    }
  }
  return word_letters(std::move(w));
}

Elem Group::residue(std::int64_t r) const {
  if (family_ != Family::Cyclic) throw DomainError("residue: wrong family");
  std::int64_t m = order_;
  std::int64_t v = ((r % m) + m) % m;
  return Elem(shared_from_this(), static_cast<std::uint32_t>(v));
}

Elem Group::table_elem(std::uint32_t idx) const {
  if (family_ != Family::Finite || idx >= order_)
    throw DomainError("table_elem: wrong family or index");
  return Elem(shared_from_this(), idx);
}

Elem Group::lamps(std::vector<std::int64_t> lit) const {
  if (family_ != Family::LampSum) throw DomainError("lamps: wrong family");
  std::sort(lit.begin(), lit.end());
  for (std::size_t i = 1; i < lit.size(); ++i)
    if (lit[i] == lit[i - 1]) throw DomainError("lamps: duplicate position");
  return Elem(shared_from_this(), Elem::Lamps(std::move(lit)));
}

Elem Group::pair(const Elem& n, const Elem& h) const {
  if (family_ != Family::Semidirect) throw DomainError("pair: wrong family");
  normal_->check_member(n, "pair");
  acting_->check_member(h, "pair");
  return Elem(shared_from_this(),
              Elem::Pair{std::make_shared<Elem>(n), std::make_shared<Elem>(h)});
}

// ---- operations ----

Elem Group::identity() const {
  switch (family_) {
    case Family::FreeAbelian:
      return Elem(shared_from_this(), Elem::IntVec(rank_, 0));
    case Family::Free:
      return Elem(shared_from_this(), Elem::Word{});
    case Family::Cyclic:
      return Elem(shared_from_this(), std::uint32_t{0});
    case Family::Finite:
      return Elem(shared_from_this(), table_identity_);
    case Family::LampSum:
      return Elem(shared_from_this(), Elem::Lamps{});
    case Family::Semidirect:
      return pair(normal_->identity(), acting_->identity());
  }
  throw DomainError("identity: unknown family");
}

Elem Group::mul(const Elem& a, const Elem& b) const {
  check_member(a, "mul");
  check_member(b, "mul");
  switch (family_) {
    case Family::FreeAbelian: {
      Elem::IntVec c = a.coords();
      const auto& d = b.coords();
      for (std::size_t i = 0; i < c.size(); ++i) c[i] += d[i];
      return Elem(shared_from_this(), std::move(c));
    }
    case Family::Free: {
      Elem::Word out;
      reduce_into(out, a.letters());
      reduce_into(out, b.letters());
      return Elem(shared_from_this(), std::move(out));
    }
    case Family::Cyclic: {
      std::uint64_t v = (std::uint64_t(a.index()) + b.index()) % order_;
      return Elem(shared_from_this(), static_cast<std::uint32_t>(v));
    }
    case Family::Finite:
      return Elem(shared_from_this(), table_[a.index()][b.index()]);
    case Family::LampSum: {
      // Symmetric difference of the two supports.
      const auto& x = a.lamps();
      const auto& y = b.lamps();
      Elem::Lamps out;
      std::set_symmetric_difference(x.begin(), x.end(), y.begin(), y.end(),
                                    std::back_inserter(out));
      return Elem(shared_from_this(), std::move(out));
    }
    case Family::Semidirect: {
      Elem n = normal_->mul(a.pair_n(), tau_.apply(a.pair_h(), b.pair_n()));
      Elem h = acting_->mul(a.pair_h(), b.pair_h());
      return pair(n, h);
    }
  }
  throw DomainError("mul: unknown family");
}

Elem Group::inv(const Elem& a) const {
  check_member(a, "inv");
  switch (family_) {
    case Family::FreeAbelian: {
      Elem::IntVec c = a.coords();
      for (auto& v : c) v = -v;
      return Elem(shared_from_this(), std::move(c));
    }
    case Family::Free: {
      const auto& w = a.letters();
      Elem::Word out(w.rbegin(), w.rend());
      for (auto& l : out) l = -l;
      return Elem(shared_from_this(), std::move(out));
    }
    case Family::Cyclic: {
      std::uint32_t r = a.index();
      return Elem(shared_from_this(), r == 0 ? 0 : order_ - r);
    }
    case Family::Finite:
      return Elem(shared_from_this(), table_inverse_[a.index()]);
    case Family::LampSum:
      return a;  // every element has order two
    case Family::Semidirect: {
      Elem hi = acting_->inv(a.pair_h());
      Elem ni = tau_.apply(hi, normal_->inv(a.pair_n()));
      return pair(ni, hi);
    }
  }
  throw DomainError("inv: unknown family");
}

Elem Group::conj(const Elem& s, const Elem& a) const {
  return mul(mul(s, a), inv(s));
}

Rat Group::haar(const Elem& a) const {
  check_member(a, "haar");
  if (family_ != Family::Semidirect) return Rat(1);
  return sigma_.value(a.pair_h()) * normal_->haar(a.pair_n()) *
         acting_->haar(a.pair_h());
}

std::vector<Elem> Group::generators() const {
  std::vector<Elem> out;
  switch (family_) {
    case Family::FreeAbelian:
      for (int i = 0; i < rank_; ++i) {
        Elem::IntVec c(rank_, 0);
        c[i] = 1;
        out.emplace_back(shared_from_this(), std::move(c));
      }
      break;
    case Family::Free:
      for (int i = 1; i <= rank_; ++i)
        out.emplace_back(shared_from_this(), Elem::Word{i});
      break;
    case Family::Cyclic:
      if (order_ > 1) out.push_back(residue(1));
      break;
    case Family::Finite:
      for (std::uint32_t i = 0; i < order_; ++i)
        if (i != table_identity_) out.push_back(table_elem(i));
      break;
    case Family::LampSum:
      out.push_back(lamps({0}));
      break;
    case Family::Semidirect: {
      for (const auto& n : normal_->generators())
        out.push_back(pair(n, acting_->identity()));
      for (const auto& h : acting_->generators())
        out.push_back(pair(normal_->identity(), h));
      break;
    }
  }
  return out;
}

// ---- text forms ----

std::string Group::format(const Elem& a) const {
  check_member(a, "format");
  switch (family_) {
    case Family::FreeAbelian: {
      const auto& c = a.coords();
      if (rank_ == 1) return std::to_string(c[0]);
      std::string s = "(";
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c[i]);
      }
      return s + ")";
    }
    case Family::Free: {
      const auto& w = a.letters();
      if (w.empty()) return "e";
      std::string s;
      for (auto l : w)
        s += l > 0 ? static_cast<char>('a' + l - 1) : static_cast<char>('A' - l - 1);
      return s;
    }
    case Family::Cyclic:
      return std::to_string(a.index());
    case Family::Finite:
      return labels_[a.index()];
    case Family::LampSum: {
      const auto& lit = a.lamps();
      std::string s = "{";
      for (std::size_t i = 0; i < lit.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(lit[i]);
      }
      return s + "}";
    }
    case Family::Semidirect:
      return "(" + normal_->format(a.pair_n()) + "|" + acting_->format(a.pair_h()) +
             ")";
  }
  throw DomainError("format: unknown family");
}

namespace {

std::int64_t parse_int(const std::string& s, const char* ctx) {
  try {
    std::size_t pos = 0;
    std::int64_t v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(ctx, "bad integer '" + s + "'");
  }
}

std::vector<std::string> split_top_level(const std::string& s, char sep) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(' || c == '{') ++depth;
    if (c == ')' || c == '}') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

Elem Group::parse(const std::string& s) const {
  switch (family_) {
    case Family::FreeAbelian: {
      if (rank_ == 1 && (s.empty() || s[0] != '('))
        return vec({parse_int(s, "element")});
      if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw ParseError("element", "expected (c1,...,c" + std::to_string(rank_) +
                                        ") got '" + s + "'");
      auto parts = split_top_level(s.substr(1, s.size() - 2), ',');
      if (static_cast<int>(parts.size()) != rank_)
        throw ParseError("element", "arity mismatch in '" + s + "'");
      std::vector<std::int64_t> c;
      for (const auto& p : parts) c.push_back(parse_int(p, "element"));
      return vec(std::move(c));
    }
    case Family::Free:
      try {
        return word(s);
      } catch (const DomainError& e) {
        throw ParseError("element", e.what());
      }
    case Family::Cyclic:
      return residue(parse_int(s, "element"));
    case Family::Finite: {
      for (std::uint32_t i = 0; i < order_; ++i)
        if (labels_[i] == s) return table_elem(i);
      throw ParseError("element", "unknown label '" + s + "'");
    }
    case Family::LampSum: {
      if (s.size() < 2 || s.front() != '{' || s.back() != '}')
        throw ParseError("element", "expected {p1,...} got '" + s + "'");
      std::string body = s.substr(1, s.size() - 2);
      std::vector<std::int64_t> lit;
      if (!body.empty())
        for (const auto& p : split_top_level(body, ','))
          lit.push_back(parse_int(p, "element"));
      try {
        return lamps(std::move(lit));
      } catch (const DomainError& e) {
        throw ParseError("element", e.what());
      }
    }
    case Family::Semidirect: {
      if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw ParseError("element", "expected (n|h) got '" + s + "'");
      auto parts = split_top_level(s.substr(1, s.size() - 2), '|');
      if (parts.size() != 2)
        throw ParseError("element", "expected one top-level | in '" + s + "'");
      return pair(normal_->parse(parts[0]), acting_->parse(parts[1]));
    }
  }
  throw ParseError("element", "unknown family");
}

// ---- balls ----

std::vector<Elem> ball(const GroupPtr& g, const std::vector<Elem>& gens,
                       int radius) {
  if (radius < 0) throw DomainError("ball: negative radius");
  std::set<Elem, ElemLess> seen;
  std::vector<Elem> frontier{g->identity()};
  seen.insert(g->identity());
  std::vector<Elem> sym;
  for (const auto& s : gens) {
    g->check_member(s, "ball");
    sym.push_back(s);
    sym.push_back(g->inv(s));
  }
  for (int r = 0; r < radius; ++r) {
    std::vector<Elem> next;
    for (const auto& x : frontier) {
      for (const auto& s : sym) {
        Elem y = g->mul(s, x);
        if (seen.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  return std::vector<Elem>(seen.begin(), seen.end());
}

std::vector<Elem> ball(const GroupPtr& g, int radius) {
  return ball(g, g->generators(), radius);
}

}  // namespace amenity
