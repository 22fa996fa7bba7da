#ifndef AMENITY_SPACE_HPP_
#define AMENITY_SPACE_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "amenity/group.hpp"
#include "amenity/rational.hpp"

namespace amenity {

class Space;
using SpacePtr = std::shared_ptr<const Space>;

// A point of a phase space: the single point, a finite-set index, a group
// element (carrier), a depth-truncated boundary word, or a pair.
class Point {
 public:
  struct Unit {};
  struct Boundary {
    Elem::Word word;  // freely reduced, exactly the space's depth
  };
  struct Prod {
    std::shared_ptr<const Point> first, second;
  };
  using Data = std::variant<Unit, std::int64_t, Elem, Boundary, Prod>;

  explicit Point(Data d) : data_(std::move(d)) {}

  const Data& data() const { return data_; }
  std::int64_t finite_index() const { return std::get<std::int64_t>(data_); }
  const Elem& carrier() const { return std::get<Elem>(data_); }
  const Elem::Word& boundary_word() const { return std::get<Boundary>(data_).word; }
  const Point& first() const { return *std::get<Prod>(data_).first; }
  const Point& second() const { return *std::get<Prod>(data_).second; }

 private:
  Data data_;
};

int cmp(const Point& a, const Point& b);
inline bool operator==(const Point& a, const Point& b) { return cmp(a, b) == 0; }
inline bool operator!=(const Point& a, const Point& b) { return cmp(a, b) != 0; }
struct PointLess {
  bool operator()(const Point& a, const Point& b) const { return cmp(a, b) < 0; }
};

class Space : public std::enable_shared_from_this<Space> {
 public:
  enum class Kind { Point, Finite, Carrier, Boundary, Product };

  static SpacePtr point();
  // size labeled points x0..x{size-1}; mu defaults to counting weight one.
  static SpacePtr finite(std::size_t size, std::vector<Rat> mu = {});
  static SpacePtr carrier(GroupPtr g);
  // Freely reduced words of exactly `depth` letters over `rank` generators,
  // stand-ins for boundary points of the free group.
  static SpacePtr boundary(int rank, int depth);
  static SpacePtr product(SpacePtr a, SpacePtr b);

  Kind kind() const { return kind_; }
  std::size_t size() const { return size_; }
  const GroupPtr& carrier_group() const { return group_; }
  int boundary_rank() const { return rank_; }
  int boundary_depth() const { return depth_; }
  const SpacePtr& first_factor() const { return first_; }
  const SpacePtr& second_factor() const { return second_; }

  Rat mu(const Point& x) const;
  void check_member(const Point& x, const char* op) const;

  Point pt() const;
  Point at(std::int64_t i) const;
  Point carrier_point(const Elem& g) const;
  Point boundary_point(const std::string& word) const;
  Point boundary_point(Elem::Word word) const;
  Point pair_point(const Point& a, const Point& b) const;

  std::string format(const Point& x) const;
  Point parse(const std::string& s) const;

  // Full point list for finite universes; throws ConfigError when the
  // universe is absent or larger than `limit`.
  std::vector<Point> universe(std::size_t limit) const;

  const std::string& signature() const { return signature_; }
  bool same_as(const Space& o) const {
    return this == &o || signature_ == o.signature_;
  }

 private:
  Space() = default;
  Kind kind_ = Kind::Point;
  std::size_t size_ = 0;
  std::vector<Rat> mu_;
  GroupPtr group_;
  int rank_ = 0, depth_ = 0;
  SpacePtr first_, second_;
  std::string signature_;
};

}  // namespace amenity

#endif  // AMENITY_SPACE_HPP_
