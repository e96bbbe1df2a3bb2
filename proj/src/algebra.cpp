#include "canrep/algebra.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace canrep {

namespace {

std::optional<int> parse_small_int(std::string_view v) {
  int out = 0;
  const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (res.ec != std::errc() || res.ptr != v.data() + v.size())
    return std::nullopt;
  return out;
}

}  // namespace

CanonicalAlgebra::CanonicalAlgebra(Weights w, std::vector<Rat> lambda)
    : w_(make_weights(std::move(w.p))), lambda_(std::move(lambda)) {
  if (static_cast<int>(lambda_.size()) != arms() - 1)
    throw std::invalid_argument("expected one lambda per arm beyond the first");
  for (size_t i = 0; i < lambda_.size(); ++i)
    for (size_t j = i + 1; j < lambda_.size(); ++j)
      if (lambda_[i] == lambda_[j])
        throw std::invalid_argument("lambda values must be pairwise distinct");
  normalized_ =
      lambda_[0] == 0 && (arms() < 3 || lambda_[1] == 1);

  vertex_count_ = 2;
  for (long long pi : w_.p) vertex_count_ += static_cast<int>(pi) - 1;

  int next_vertex = 1;
  for (int i = 1; i <= arms(); ++i) {
    arm_vertex_base_.push_back(next_vertex);
    next_vertex += static_cast<int>(arm_length(i)) - 1;
  }
  for (int i = 1; i <= arms(); ++i) {
    arm_arrow_base_.push_back(static_cast<int>(arrows_.size()));
    for (int j = 1; j <= arm_length(i); ++j)
      arrows_.push_back(Arrow{i, j, arm_vertex(i, j - 1), arm_vertex(i, j)});
  }
}

long long CanonicalAlgebra::arm_length(int arm) const {
  if (arm < 1 || arm > arms()) throw std::invalid_argument("bad arm index");
  return w_.p[arm - 1];
}

Rat CanonicalAlgebra::lambda_for_arm(int arm) const {
  if (arm < 2 || arm > arms())
    throw std::invalid_argument("no lambda for this arm");
  return lambda_[arm - 2];
}

VertexId CanonicalAlgebra::arm_vertex(int arm, long long j) const {
  if (j < 0 || j > arm_length(arm))
    throw std::invalid_argument("arm position out of range");
  if (j == 0) return vertex_zero();
  if (j == arm_length(arm)) return vertex_c();
  return arm_vertex_base_[arm - 1] + static_cast<int>(j) - 1;
}

int CanonicalAlgebra::arrow_id(int arm, int idx) const {
  if (idx < 1 || idx > arm_length(arm))
    throw std::invalid_argument("arrow index out of range");
  return arm_arrow_base_[arm - 1] + idx - 1;
}

std::string CanonicalAlgebra::vertex_label(VertexId v) const {
  if (v == vertex_zero()) return "v0";
  if (v == vertex_c()) return "vc";
  if (v < 0 || v >= vertex_count_) throw std::invalid_argument("bad vertex");
  for (int i = 1; i <= arms(); ++i) {
    const int base = arm_vertex_base_[i - 1];
    const int len = static_cast<int>(arm_length(i)) - 1;
    if (v >= base && v < base + len)
      return "x_" + std::to_string(i) + "_" + std::to_string(v - base + 1);
  }
  throw std::logic_error("unreachable vertex classification");
}

std::string CanonicalAlgebra::arrow_label(int id) const {
  if (id < 0 || id >= arrow_count()) throw std::invalid_argument("bad arrow");
  const Arrow& a = arrows_[id];
  return "alpha_" + std::to_string(a.arm) + "_" + std::to_string(a.idx);
}

std::optional<VertexId> CanonicalAlgebra::vertex_by_label(
    const std::string& s) const {
  if (s == "v0") return vertex_zero();
  if (s == "vc") return vertex_c();
  if (s.size() < 2 || s.compare(0, 2, "x_") != 0) return std::nullopt;
  const auto second = s.find('_', 2);
  if (second == std::string::npos) return std::nullopt;
  const auto arm = parse_small_int(std::string_view(s).substr(2, second - 2));
  const auto j = parse_small_int(std::string_view(s).substr(second + 1));
  if (!arm || !j || *arm < 1 || *arm > arms()) return std::nullopt;
  if (*j < 1 || *j > arm_length(*arm) - 1) return std::nullopt;
  return arm_vertex(*arm, *j);
}

std::optional<int> CanonicalAlgebra::arrow_by_label(const std::string& s) const {
  if (s.size() < 6 || s.compare(0, 6, "alpha_") != 0) return std::nullopt;
  const auto second = s.find('_', 6);
  if (second == std::string::npos) return std::nullopt;
  const auto arm = parse_small_int(std::string_view(s).substr(6, second - 6));
  const auto j = parse_small_int(std::string_view(s).substr(second + 1));
  if (!arm || !j || *arm < 1 || *arm > arms()) return std::nullopt;
  if (*j < 1 || *j > arm_length(*arm)) return std::nullopt;
  return arrow_id(*arm, *j);
}

std::vector<Rat> CanonicalAlgebra::coefficient_differences() const {
  std::vector<Rat> out;
  for (const Rat& a : lambda_)
    for (const Rat& b : lambda_) out.push_back(a - b);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ArmPath path(const CanonicalAlgebra& alg, int arm, int from, int to) {
  if (arm < 1 || arm > alg.arms()) throw std::invalid_argument("bad arm index");
  if (from < 1 || from > to || to > alg.arm_length(arm))
    throw std::invalid_argument("bad path segment");
  return ArmPath{arm, from, to};
}

std::vector<RelationDescriptor> relations(const CanonicalAlgebra& alg) {
  std::vector<RelationDescriptor> out;
  for (int i = 3; i <= alg.arms(); ++i) {
    RelationDescriptor r;
    r.arm = i;
    r.arm_i = path(alg, i, 1, static_cast<int>(alg.arm_length(i)));
    r.arm_1 = path(alg, 1, 1, static_cast<int>(alg.arm_length(1)));
    r.arm_2 = path(alg, 2, 1, static_cast<int>(alg.arm_length(2)));
    r.lambda = alg.lambda_for_arm(i);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace canrep
