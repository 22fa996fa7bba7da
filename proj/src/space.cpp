#include "amenity/space.hpp"

#include <algorithm>

#include "amenity/error.hpp"

namespace amenity {

int cmp(const Point& a, const Point& b) {
  const auto& da = a.data();
  const auto& db = b.data();
  if (da.index() != db.index()) return da.index() < db.index() ? -1 : 1;
  switch (da.index()) {
    case 0:
      return 0;
    case 1: {
      auto x = std::get<std::int64_t>(da), y = std::get<std::int64_t>(db);
      return x < y ? -1 : x > y ? 1 : 0;
    }
    case 2:
      return cmp(std::get<Elem>(da), std::get<Elem>(db));
    case 3: {
      const auto& x = std::get<Point::Boundary>(da).word;
      const auto& y = std::get<Point::Boundary>(db).word;
      if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
      for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != y[i]) return x[i] < y[i] ? -1 : 1;
      return 0;
    }
    default: {
      const auto& pa = std::get<Point::Prod>(da);
      const auto& pb = std::get<Point::Prod>(db);
      if (int c = cmp(*pa.first, *pb.first)) return c;
      return cmp(*pa.second, *pb.second);
    }
  }
}

SpacePtr Space::point() {
  auto s = std::shared_ptr<Space>(new Space());
  s->kind_ = Kind::Point;
  s->signature_ = "pt";
  return s;
}

SpacePtr Space::finite(std::size_t size, std::vector<Rat> mu) {
  if (size == 0) throw ConstructionError("finite space: size must be positive");
  if (!mu.empty() && mu.size() != size)
    throw ConstructionError("finite space: weight count does not match size");
  for (const auto& w : mu)
    if (w.sign() <= 0)
      throw ConstructionError("finite space: weights must be positive");
  auto s = std::shared_ptr<Space>(new Space());
  s->kind_ = Kind::Finite;
  s->size_ = size;
  std::string sig = "fin" + std::to_string(size);
  if (!mu.empty()) {
    sig += "[";
    for (const auto& w : mu) sig += w.str() + ",";
    sig += "]";
  }
  s->mu_ = std::move(mu);
  s->signature_ = sig;
  return s;
}

SpacePtr Space::carrier(GroupPtr g) {
  if (!g) throw ConstructionError("carrier space: null group");
  auto s = std::shared_ptr<Space>(new Space());
  s->kind_ = Kind::Carrier;
  s->signature_ = "car(" + g->signature() + ")";
  s->group_ = std::move(g);
  return s;
}

SpacePtr Space::boundary(int rank, int depth) {
  if (rank < 1 || rank > 26)
    throw ConstructionError("boundary space: rank must be in 1..26");
  if (depth < 1) throw ConstructionError("boundary space: depth must be positive");
  auto s = std::shared_ptr<Space>(new Space());
  s->kind_ = Kind::Boundary;
  s->rank_ = rank;
  s->depth_ = depth;
  s->signature_ =
      "bd(" + std::to_string(rank) + "," + std::to_string(depth) + ")";
  return s;
}

SpacePtr Space::product(SpacePtr a, SpacePtr b) {
  if (!a || !b) throw ConstructionError("product space: null factor");
  auto s = std::shared_ptr<Space>(new Space());
  s->kind_ = Kind::Product;
  s->signature_ = "prod(" + a->signature() + "," + b->signature() + ")";
  s->first_ = std::move(a);
  s->second_ = std::move(b);
  return s;
}

Rat Space::mu(const Point& x) const {
  check_member(x, "mu");
  switch (kind_) {
    case Kind::Finite:
      return mu_.empty() ? Rat(1) : mu_[static_cast<std::size_t>(x.finite_index())];
    case Kind::Product:
      return first_->mu(x.first()) * second_->mu(x.second());
    default:
      return Rat(1);
  }
}

void Space::check_member(const Point& x, const char* op) const {
  static constexpr std::size_t expected[] = {0, 1, 2, 3, 4};
  if (x.data().index() != expected[static_cast<int>(kind_)])
    throw DomainError(std::string(op) + ": point does not belong to space " +
                      signature_);
  switch (kind_) {
    case Kind::Finite:
      if (x.finite_index() < 0 ||
          static_cast<std::size_t>(x.finite_index()) >= size_)
        throw DomainError(std::string(op) + ": finite point index out of range");
      break;
    case Kind::Carrier:
      group_->check_member(x.carrier(), op);
      break;
    case Kind::Boundary:
      if (static_cast<int>(x.boundary_word().size()) != depth_)
        throw DomainError(std::string(op) + ": boundary word has wrong depth");
      break;
    case Kind::Product:
      first_->check_member(x.first(), op);
      second_->check_member(x.second(), op);
      break;
    default:
      break;
  }
}

Point Space::pt() const {
  if (kind_ != Kind::Point) throw DomainError("pt: wrong space kind");
  return Point(Point::Unit{});
}

Point Space::at(std::int64_t i) const {
  if (kind_ != Kind::Finite) throw DomainError("at: wrong space kind");
  Point x{Point::Data(i)};
  check_member(x, "at");
  return x;
}

Point Space::carrier_point(const Elem& g) const {
  if (kind_ != Kind::Carrier) throw DomainError("carrier_point: wrong space kind");
  Point x{Point::Data(g)};
  check_member(x, "carrier_point");
  return x;
}

Point Space::boundary_point(Elem::Word word) const {
  if (kind_ != Kind::Boundary)
    throw DomainError("boundary_point: wrong space kind");
  for (std::size_t i = 0; i < word.size(); ++i) {
    auto l = word[i];
    if (l == 0 || l > rank_ || l < -rank_)
      throw DomainError("boundary_point: letter out of range");
    if (i > 0 && word[i - 1] == -l)
      throw DomainError("boundary_point: word is not reduced");
  }
  if (static_cast<int>(word.size()) != depth_)
    throw DomainError("boundary_point: word must have exactly depth letters");
  return Point(Point::Boundary{std::move(word)});
}

Point Space::boundary_point(const std::string& word) const {
  Elem::Word w;
  for (char c : word) {
    if (c >= 'a' && c <= 'z')
      w.push_back(static_cast<std::int32_t>(c - 'a') + 1);
    else if (c >= 'A' && c <= 'Z')
      w.push_back(-(static_cast<std::int32_t>(c - 'A') + 1));
    else
      throw DomainError("boundary_point: bad character");
  }
  return boundary_point(std::move(w));
}

Point Space::pair_point(const Point& a, const Point& b) const {
  if (kind_ != Kind::Product) throw DomainError("pair_point: wrong space kind");
  first_->check_member(a, "pair_point");
  second_->check_member(b, "pair_point");
  return Point(Point::Prod{std::make_shared<Point>(a), std::make_shared<Point>(b)});
}

std::string Space::format(const Point& x) const {
  check_member(x, "format");
  switch (kind_) {
    case Kind::Point:
      return "pt";
    case Kind::Finite:
      return "x" + std::to_string(x.finite_index());
    case Kind::Carrier:
      return group_->format(x.carrier());
    case Kind::Boundary: {
      std::string s;
      for (auto l : x.boundary_word())
        s += l > 0 ? static_cast<char>('a' + l - 1)
                   : static_cast<char>('A' - l - 1);
      return s;
    }
    case Kind::Product:
      return "(" + first_->format(x.first()) + ";" +
             second_->format(x.second()) + ")";
  }
  throw DomainError("format: unknown space kind");
}

namespace {

std::vector<std::string> split_semi(const std::string& s) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(' || c == '{') ++depth;
    if (c == ')' || c == '}') --depth;
    if (c == ';' && depth == 0) {
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

Point Space::parse(const std::string& s) const {
  switch (kind_) {
    case Kind::Point:
      if (s != "pt") throw ParseError("point", "expected 'pt' got '" + s + "'");
      return pt();
    case Kind::Finite: {
      if (s.size() < 2 || s[0] != 'x')
        throw ParseError("point", "expected xN got '" + s + "'");
      try {
        return at(std::stoll(s.substr(1)));
      } catch (const std::exception&) {
        throw ParseError("point", "bad finite point '" + s + "'");
      }
    }
    case Kind::Carrier:
      return carrier_point(group_->parse(s));
    case Kind::Boundary:
      try {
        return boundary_point(s);
      } catch (const DomainError& e) {
        throw ParseError("point", e.what());
      }
    case Kind::Product: {
      if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw ParseError("point", "expected (a;b) got '" + s + "'");
      auto parts = split_semi(s.substr(1, s.size() - 2));
      if (parts.size() != 2)
        throw ParseError("point", "expected one top-level ; in '" + s + "'");
      return pair_point(first_->parse(parts[0]), second_->parse(parts[1]));
    }
  }
  throw ParseError("point", "unknown space kind");
}

std::vector<Point> Space::universe(std::size_t limit) const {
  switch (kind_) {
    case Kind::Point:
      return {pt()};
    case Kind::Finite: {
      if (size_ > limit) throw ConfigError("universe: finite space too large");
      std::vector<Point> out;
      for (std::size_t i = 0; i < size_; ++i)
        out.push_back(at(static_cast<std::int64_t>(i)));
      return out;
    }
    case Kind::Boundary: {
      // All reduced words of the exact depth, in lexicographic order.
      std::vector<Elem::Word> words{{}};
      for (int d = 0; d < depth_; ++d) {
        std::vector<Elem::Word> next;
        for (const auto& w : words) {
          for (int l = -rank_; l <= rank_; ++l) {
            if (l == 0) continue;
            if (!w.empty() && w.back() == -l) continue;
            auto w2 = w;
            w2.push_back(l);
            next.push_back(std::move(w2));
          }
        }
        words = std::move(next);
        if (words.size() > limit)
          throw ConfigError("universe: boundary space too large");
      }
      std::vector<Point> out;
      for (auto& w : words) out.push_back(Point(Point::Boundary{std::move(w)}));
      std::sort(out.begin(), out.end(),
                [](const Point& a, const Point& b) { return cmp(a, b) < 0; });
      return out;
    }
    case Kind::Product: {
      auto ua = first_->universe(limit);
      auto ub = second_->universe(limit);
      if (ua.size() * ub.size() > limit)
        throw ConfigError("universe: product space too large");
      std::vector<Point> out;
      for (const auto& a : ua)
        for (const auto& b : ub) out.push_back(pair_point(a, b));
      return out;
    }
    case Kind::Carrier:
      throw ConfigError("universe: carrier space has no finite universe");
  }
  throw ConfigError("universe: unknown space kind");
}

}  // namespace amenity
