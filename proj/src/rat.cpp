#include "airycm/rat.hpp"

namespace airycm {

Rat Rat::from_string(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("Rat: empty string");
  auto slash = s.find('/');
  mpq_class v;
  if (slash == std::string_view::npos) {
    if (v.get_num().set_str(std::string(s), 10) != 0)
      throw std::invalid_argument("Rat: bad integer '" + std::string(s) + "'");
    v.get_den() = 1;
  } else {
    std::string num(s.substr(0, slash)), den(s.substr(slash + 1));
    if (num.empty() || den.empty() ||
        v.get_num().set_str(num, 10) != 0 || v.get_den().set_str(den, 10) != 0)
      throw std::invalid_argument("Rat: bad rational '" + std::string(s) + "'");
    if (sgn(v.get_den()) == 0) throw std::domain_error("Rat: zero denominator");
  }
  v.canonicalize();
  return Rat(std::move(v));
}

std::string Rat::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

}  // namespace airycm
