#include "canrep/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string_view>

namespace canrep {

namespace {

bool all_digits(std::string_view v) {
  return !v.empty() && std::all_of(v.begin(), v.end(), [](unsigned char c) {
           return std::isdigit(c) != 0;
         });
}

}  // namespace

std::string rat_to_string(const Rat& q) { return q.get_str(); }

std::optional<Rat> rat_from_string(const std::string& s) {
  std::string_view v(s);
  bool negative = false;
  if (!v.empty() && (v.front() == '-' || v.front() == '+')) {
    negative = v.front() == '-';
    v.remove_prefix(1);
  }
  const auto slash = v.find('/');
  const std::string_view num =
      slash == std::string_view::npos ? v : v.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : v.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) return std::nullopt;
  Int n(std::string(num), 10);
  Int d(std::string(den), 10);
  if (d == 0) return std::nullopt;
  Rat q(n, d);
  q.canonicalize();
  if (negative) q = -q;
  return q;
}

std::string rat_to_latex(const Rat& q) {
  if (rat_is_integer(q)) return q.get_num().get_str();
  const std::string sign = sgn(q) < 0 ? "-" : "";
  const Int num = abs(q.get_num());
  return sign + "\\tfrac{" + num.get_str() + "}{" + q.get_den().get_str() + "}";
}

Rat rat_frac(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rat q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return q;
}

bool rat_is_integer(const Rat& q) { return q.get_den() == 1; }

int abs_cmp(const Rat& a, const Rat& b) {
  const Rat aa = abs(a);
  const Rat bb = abs(b);
  return cmp(aa, bb);
}

}  // namespace canrep
