#ifndef AMENITY_RATIONAL_HPP_
#define AMENITY_RATIONAL_HPP_

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace amenity {

// Arbitrary-precision rational, always kept canonical (lowest terms,
// positive denominator). Thin value wrapper around GMP's mpq_class so the
// rest of the code never touches expression templates or canonicalize().
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}        // NOLINT: implicit on purpose
  Rat(int n) : v_(n) {}         // NOLINT
  Rat(long n, long d) {
    if (d == 0) throw std::domain_error("Rat: zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }
  explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  // Accepts "p/q" or "p" with optional sign, base 10.
  static Rat parse(const std::string& s);

  Rat operator+(const Rat& o) const { return Rat(mpq_class(v_ + o.v_), raw_tag{}); }
  Rat operator-(const Rat& o) const { return Rat(mpq_class(v_ - o.v_), raw_tag{}); }
  Rat operator*(const Rat& o) const { return Rat(mpq_class(v_ * o.v_), raw_tag{}); }
  Rat operator/(const Rat& o) const {
    if (o.is_zero()) throw std::domain_error("Rat: division by zero");
    return Rat(mpq_class(v_ / o.v_), raw_tag{});
  }
  Rat operator-() const { return Rat(mpq_class(-v_), raw_tag{}); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

  bool operator==(const Rat& o) const { return v_ == o.v_; }
  bool operator!=(const Rat& o) const { return v_ != o.v_; }
  bool operator<(const Rat& o) const { return v_ < o.v_; }
  bool operator<=(const Rat& o) const { return v_ <= o.v_; }
  bool operator>(const Rat& o) const { return v_ > o.v_; }
  bool operator>=(const Rat& o) const { return v_ >= o.v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  Rat abs() const { return sign() < 0 ? -*this : *this; }
  Rat inverse() const {
    if (is_zero()) throw std::domain_error("Rat: inverse of zero");
    return Rat(mpq_class(1 / v_), raw_tag{});
  }

  double to_double() const { return v_.get_d(); }

  // Lowest terms, denominator omitted when it is one: "2/41", "0", "-3".
  std::string str() const {
    std::string s = v_.get_num().get_str();
    if (v_.get_den() != 1) s += "/" + v_.get_den().get_str();
    return s;
  }

 private:
  struct raw_tag {};
  Rat(mpq_class q, raw_tag) : v_(std::move(q)) {}  // results of mpq ops are canonical
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& q);

}  // namespace amenity

#endif  // AMENITY_RATIONAL_HPP_
