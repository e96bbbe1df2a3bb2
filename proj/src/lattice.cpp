#include "canrep/lattice.hpp"

#include <charconv>
#include <stdexcept>

namespace canrep {

namespace {

long long floor_div(long long x, long long p) {
  long long q = x / p;
  if (x % p != 0 && (x < 0) != (p < 0)) --q;
  return q;
}

void require_same_star(const LatticeElement& a, const LatticeElement& b) {
  if (!(a.w == b.w))
    throw std::invalid_argument("lattice elements over different stars");
}

std::optional<long long> parse_int(std::string_view v) {
  long long out = 0;
  const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (res.ec != std::errc() || res.ptr != v.data() + v.size())
    return std::nullopt;
  return out;
}

}  // namespace

Weights make_weights(std::vector<long long> p) {
  if (p.size() < 2) throw std::invalid_argument("fewer than two arms");
  for (long long pi : p)
    if (pi < 2) throw std::invalid_argument("arm weight below 2");
  return Weights{std::move(p)};
}

Rat euler_characteristic(const Weights& w) {
  Rat chi(2 - w.arms());
  for (long long pi : w.p) chi += rat_frac(1, pi);
  return chi;
}

bool is_wild(const Weights& w) { return euler_characteristic(w) < 0; }

LatticeElement normal_form(const Weights& w, long long a,
                           std::vector<long long> raw) {
  if (static_cast<int>(raw.size()) != w.arms())
    throw std::invalid_argument("coefficient count does not match arm count");
  for (int i = 0; i < w.arms(); ++i) {
    const long long q = floor_div(raw[i], w.p[i]);
    raw[i] -= q * w.p[i];
    a += q;
  }
  return LatticeElement{w, a, std::move(raw)};
}

LatticeElement lattice_zero(const Weights& w) {
  return LatticeElement{w, 0, std::vector<long long>(w.arms(), 0)};
}

LatticeElement lattice_c(const Weights& w) {
  return LatticeElement{w, 1, std::vector<long long>(w.arms(), 0)};
}

LatticeElement lattice_x(const Weights& w, int arm) {
  if (arm < 1 || arm > w.arms()) throw std::invalid_argument("bad arm index");
  LatticeElement e = lattice_zero(w);
  e.x[arm - 1] = 1;
  return e;
}

LatticeElement add(const LatticeElement& a, const LatticeElement& b) {
  require_same_star(a, b);
  std::vector<long long> x(a.x);
  for (size_t i = 0; i < x.size(); ++i) x[i] += b.x[i];
  return normal_form(a.w, a.a + b.a, std::move(x));
}

LatticeElement sub(const LatticeElement& a, const LatticeElement& b) {
  return add(a, neg(b));
}

LatticeElement neg(const LatticeElement& a) { return scale(-1, a); }

LatticeElement scale(long long k, const LatticeElement& a) {
  std::vector<long long> x(a.x);
  for (auto& xi : x) xi *= k;
  return normal_form(a.w, k * a.a, std::move(x));
}

LatticeElement dualizing_element(const Weights& w) {
  return normal_form(w, w.arms() - 2,
                     std::vector<long long>(w.arms(), -1));
}

bool is_nonnegative(const LatticeElement& e) { return e.a >= 0; }

LatticeElement tau_shift(const LatticeElement& e, long long n) {
  if (n < 0) throw std::invalid_argument("negative translation count");
  return add(e, scale(n, dualizing_element(e.w)));
}

long long translation_bound(const std::vector<LatticeElement>& dets) {
  if (dets.empty()) throw std::invalid_argument("empty determinant sample");
  const Weights& w = dets.front().w;
  long long best = 0;
  bool first = true;
  for (const auto& d : dets) {
    if (!(d.w == w))
      throw std::invalid_argument("determinant sample over different stars");
    const long long n = (1 - d.a) * (w.arms() - 2) + 1;
    if (first || n > best) best = n;
    first = false;
  }
  return best;
}

std::string lattice_to_string(const LatticeElement& e) {
  std::string s = std::to_string(e.a) + ";";
  for (size_t i = 0; i < e.x.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(e.x[i]);
  }
  return s;
}

std::optional<LatticeElement> lattice_from_string(const Weights& w,
                                                  const std::string& s) {
  const auto semi = s.find(';');
  if (semi == std::string::npos) return std::nullopt;
  const auto a = parse_int(std::string_view(s).substr(0, semi));
  if (!a) return std::nullopt;
  std::vector<long long> x;
  std::string_view rest = std::string_view(s).substr(semi + 1);
  while (true) {
    const auto comma = rest.find(',');
    const auto piece = rest.substr(0, comma);
    const auto xi = parse_int(piece);
    if (!xi) return std::nullopt;
    x.push_back(*xi);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  if (static_cast<int>(x.size()) != w.arms()) return std::nullopt;
  return normal_form(w, *a, std::move(x));
}

}  // namespace canrep
