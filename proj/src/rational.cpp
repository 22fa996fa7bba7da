#include "amenity/rational.hpp"

#include <cctype>
#include <ostream>

namespace amenity {

Rat Rat::parse(const std::string& s) {
  if (s.empty()) throw std::domain_error("Rat: empty string");
  auto digits_ok = [](const std::string& part) {
    if (part.empty()) return false;
    std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    return true;
  };
  // GMP rejects an explicit leading plus.
  auto strip_plus = [](const std::string& part) {
    return part.size() > 1 && part[0] == '+' ? part.substr(1) : part;
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!digits_ok(s)) throw std::domain_error("Rat: bad integer '" + s + "'");
    Rat r;
    r.v_ = mpq_class(mpz_class(strip_plus(s)));
    return r;
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!digits_ok(num) || !digits_ok(den))
    throw std::domain_error("Rat: bad rational '" + s + "'");
  num = strip_plus(num);
  mpz_class d(strip_plus(den));
  if (d == 0) throw std::domain_error("Rat: zero denominator in '" + s + "'");
  Rat r;
  r.v_ = mpq_class(mpz_class(num), d);
  r.v_.canonicalize();
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rat& q) { return os << q.str(); }

}  // namespace amenity
