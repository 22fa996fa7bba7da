#ifndef AMENITY_GROUP_HPP_
#define AMENITY_GROUP_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "amenity/error.hpp"
#include "amenity/rational.hpp"

namespace amenity {

class Group;
using GroupPtr = std::shared_ptr<const Group>;

// Immutable group element. The payload depends on the family:
// integer coordinates (free abelian), a freely reduced word (free group),
// an index or residue (finite table / cyclic), a sorted support list
// (direct sum of Z/2 over Z), or a boxed (normal, acting) pair.
class Elem {
 public:
  using IntVec = std::vector<std::int64_t>;
  using Word = std::vector<std::int32_t>;  // letters +-1..+-rank, freely reduced
  // Strictly increasing lit positions. Distinct type so the variant can tell
  // a lamp configuration from integer coordinates.
  struct Lamps : std::vector<std::int64_t> {
    Lamps() = default;
    explicit Lamps(std::vector<std::int64_t> v)
        : std::vector<std::int64_t>(std::move(v)) {}
    Lamps(std::initializer_list<std::int64_t> il)
        : std::vector<std::int64_t>(il) {}
  };
  struct Pair {
    std::shared_ptr<const Elem> n, h;
  };
  using Data = std::variant<IntVec, Word, std::uint32_t, Lamps, Pair>;

  Elem(GroupPtr g, Data d) : group_(std::move(g)), data_(std::move(d)) {}

  const GroupPtr& group() const { return group_; }
  const Data& data() const { return data_; }

  const IntVec& coords() const { return std::get<IntVec>(data_); }
  const Word& letters() const { return std::get<Word>(data_); }
  std::uint32_t index() const { return std::get<std::uint32_t>(data_); }
  const Lamps& lamps() const { return std::get<Lamps>(data_); }
  const Elem& pair_n() const { return *std::get<Pair>(data_).n; }
  const Elem& pair_h() const { return *std::get<Pair>(data_).h; }

 private:
  GroupPtr group_;
  Data data_;
};

// Deterministic total order on element payloads (family tag, then data).
// Used for map keys and canonical enumeration; not a group-theoretic order.
int cmp(const Elem& a, const Elem& b);
inline bool operator==(const Elem& a, const Elem& b) { return cmp(a, b) == 0; }
inline bool operator!=(const Elem& a, const Elem& b) { return cmp(a, b) != 0; }
struct ElemLess {
  bool operator()(const Elem& a, const Elem& b) const { return cmp(a, b) < 0; }
};

// H-indexed automorphism family of a normal subgroup N.
class TauFamily {
 public:
  enum class Kind { Identity, SignFlip, Shift, Table };

  static TauFamily identity();
  // H = Z (or cyclic of even order) acting on N = Z^d by n -> (-1)^h n.
  static TauFamily sign_flip();
  // H = Z acting on the lamp sum by shifting indices: position i -> i + h.
  static TauFamily shift();
  // Finite H on finite N, images[h][n] = index of tau_h(n).
  static TauFamily table(std::vector<std::vector<std::uint32_t>> images);

  Kind kind() const { return kind_; }
  const std::string& tag() const { return tag_; }

  // tau_h(n); h from the acting group, n from the normal group.
  Elem apply(const Elem& h, const Elem& n) const;

 private:
  TauFamily(Kind k, std::string tag) : kind_(k), tag_(std::move(tag)) {}
  Kind kind_;
  std::string tag_;
  std::vector<std::vector<std::uint32_t>> images_;
};

// Multiplicative positive weight on the acting group. Constant one for all
// the discrete families shipped here; the semidirect formulas still carry
// it so a genuinely non-unimodular weight can be threaded through.
class ModularWeight {
 public:
  static ModularWeight one();
  // H = Z, sigma(h) = ratio^h with ratio a positive rational.
  static ModularWeight geometric(const Rat& ratio);

  bool is_one() const { return kind_ == Kind::One; }
  const std::string& tag() const { return tag_; }
  Rat value(const Elem& h) const;

 private:
  enum class Kind { One, Geometric };
  ModularWeight(Kind k, Rat r, std::string tag)
      : kind_(k), ratio_(std::move(r)), tag_(std::move(tag)) {}
  Kind kind_;
  Rat ratio_;
  std::string tag_;
};

class Group : public std::enable_shared_from_this<Group> {
 public:
  enum class Family { FreeAbelian, Free, Cyclic, Finite, LampSum, Semidirect };

  static GroupPtr free_abelian(int rank);
  static GroupPtr free_group(int rank);
  static GroupPtr cyclic(std::uint32_t order);
  // Multiplication table over indices 0..m-1; must contain an identity and
  // satisfy the group laws (checked on construction).
  static GroupPtr finite(std::vector<std::vector<std::uint32_t>> table,
                         std::vector<std::string> labels = {});
  // Direct sum over Z of Z/2, finite support.
  static GroupPtr lamp_sum();
  static GroupPtr semidirect(GroupPtr normal, GroupPtr acting, TauFamily tau,
                             ModularWeight sigma = ModularWeight::one());

  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::uint32_t order() const { return order_; }
  const GroupPtr& normal_part() const { return normal_; }
  const GroupPtr& acting_part() const { return acting_; }
  const TauFamily& tau() const { return tau_; }
  const ModularWeight& sigma() const { return sigma_; }

  Elem identity() const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;
  Elem conj(const Elem& s, const Elem& a) const;  // s a s^-1

  // Counting Haar weight of a point. One for the plain families; for a
  // semidirect product (n,h) it is sigma(h) * haar_N(n) * haar_H(h).
  Rat haar(const Elem& a) const;

  // Standard symmetric generating set of the family.
  std::vector<Elem> generators() const;

  Elem vec(std::vector<std::int64_t> coords) const;
  Elem word(const std::string& letters) const;  // "abA": a..z, inverses A..Z
  Elem word_letters(Elem::Word letters) const;  // reduces if needed
  Elem residue(std::int64_t r) const;
  Elem table_elem(std::uint32_t idx) const;
  Elem lamps(std::vector<std::int64_t> lit) const;
  Elem pair(const Elem& n, const Elem& h) const;

  std::string format(const Elem& a) const;
  Elem parse(const std::string& s) const;

  // Structural identity; groups built the same way interoperate.
  const std::string& signature() const { return signature_; }
  const std::string& describe() const { return describe_; }

  bool same_as(const Group& other) const {
    return this == &other || signature_ == other.signature_;
  }
  void check_member(const Elem& a, const char* op) const;

 private:
  Group() : tau_(TauFamily::identity()), sigma_(ModularWeight::one()) {}

  Family family_ = Family::FreeAbelian;
  int rank_ = 0;
  std::uint32_t order_ = 0;
  std::vector<std::vector<std::uint32_t>> table_;
  std::vector<std::string> labels_;
  std::uint32_t table_identity_ = 0;
  std::vector<std::uint32_t> table_inverse_;
  GroupPtr normal_, acting_;
  TauFamily tau_;
  ModularWeight sigma_;
  std::string signature_, describe_;
};

// Word-metric ball of the given radius for the generating set (the family's
// standard one by default). Sorted, deterministic, identity included.
std::vector<Elem> ball(const GroupPtr& g, int radius);
std::vector<Elem> ball(const GroupPtr& g, const std::vector<Elem>& gens,
                       int radius);

}  // namespace amenity

#endif  // AMENITY_GROUP_HPP_
