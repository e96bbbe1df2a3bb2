#include "canrep/small_rank.hpp"

#include <stdexcept>

#include "canrep/hom_ext.hpp"

namespace canrep {

namespace {

void certify(const Rep& m, const char* who) {
  validate_shapes(m);
  if (!check_relations(m).ok())
    throw std::logic_error(std::string(who) + ": relations broken");
  if (!is_exceptional(m))
    throw std::logic_error(std::string(who) + ": module is not exceptional");
}

// Scalars for the first arrows of the arms away from the window, forced by
// the relations once the windowed arm's full path is zero. The kernel of the
// relation system is one-dimensional; normalization picks the arm 2 scalar
// to be 1 (arm 1 when the window sits on arm 2), which is what keeps all
// other path entries inside the admissible difference set.
std::vector<Rat> solved_first_arrows(const CanonicalAlgebra& alg, int arm) {
  const int t = alg.arms();
  std::vector<int> vars;
  for (int m = 1; m <= t; ++m)
    if (m != arm) vars.push_back(m);
  auto var_index = [&](int m) {
    for (size_t k = 0; k < vars.size(); ++k)
      if (vars[k] == m) return static_cast<int>(k);
    throw std::logic_error("first-arrow variable lookup failed");
  };

  Mat sys(t - 2, t - 1);
  int row = 0;
  for (const RelationDescriptor& rel : relations(alg)) {
    if (rel.arm != arm) sys.at(row, var_index(rel.arm)) += 1;
    if (arm != 1) sys.at(row, var_index(1)) -= 1;
    if (arm != 2) sys.at(row, var_index(2)) -= rel.lambda;
    ++row;
  }

  const Mat kernel = nullspace(sys);
  if (kernel.cols() != 1)
    throw std::logic_error("first-arrow system is not one-dimensional");
  const int anchor = var_index(arm == 2 ? 1 : 2);
  const Rat pivot = kernel.at(anchor, 0);
  if (pivot == 0)
    throw std::logic_error("first-arrow normalization vanishes");

  std::vector<Rat> mu(t + 1, Rat(0));
  for (size_t k = 0; k < vars.size(); ++k)
    mu[vars[k]] = kernel.at(static_cast<int>(k), 0) / pivot;
  return mu;
}

}  // namespace

Mat identity_over_zeros(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("negative block size");
  Mat m(n + k, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat zeros_over_identity(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("negative block size");
  Mat m(n + k, n);
  for (int i = 0; i < n; ++i) m.at(k + i, i) = 1;
  return m;
}

RegularCase regular_case(const Weights& w, const RegularSpec& s) {
  if (s.arm < 1 || s.arm > w.arms())
    throw std::invalid_argument("bad arm index");
  const int p = static_cast<int>(w.p[s.arm - 1]);
  if (s.a < 1 || s.a > p)
    throw std::invalid_argument("quasi-top outside the arm");
  if (s.l < 1 || s.l >= p)
    throw std::invalid_argument(
        "quasi-length must be between 1 and the arm weight minus 1");
  if (s.a + s.l <= p) return RegularCase::interior;
  return s.a == p ? RegularCase::top : RegularCase::wrapped;
}

int wrap_start(const Weights& w, const RegularSpec& s) {
  if (regular_case(w, s) == RegularCase::interior)
    throw std::invalid_argument("interior window has no wrap");
  const int p = static_cast<int>(w.p[s.arm - 1]);
  return s.l - (p - s.a);
}

Rep regular_exceptional(const CanonicalAlgebra& alg, const RegularSpec& s) {
  const RegularCase kind = regular_case(alg.weights(), s);
  Rep m = zero_rep(alg);

  if (kind == RegularCase::interior) {
    for (int j = s.a; j < s.a + s.l; ++j)
      m.dims[alg.arm_vertex(s.arm, j)] = 1;
    for (int id = 0; id < alg.arrow_count(); ++id) {
      const Arrow& ar = alg.arrow(id);
      m.mats[id] = Mat(m.dims[ar.src], m.dims[ar.tgt]);
      if (ar.arm == s.arm && ar.idx > s.a && ar.idx < s.a + s.l)
        m.mats[id].at(0, 0) = 1;
    }
    certify(m, "regular window");
    return m;
  }

  const int gap_from = wrap_start(alg.weights(), s);
  const int gap_to = s.a - 1;
  m.dims.assign(alg.vertex_count(), 1);
  for (int j = gap_from; j <= gap_to; ++j)
    m.dims[alg.arm_vertex(s.arm, j)] = 0;

  const std::vector<Rat> mu = solved_first_arrows(alg, s.arm);
  for (int id = 0; id < alg.arrow_count(); ++id) {
    const Arrow& ar = alg.arrow(id);
    m.mats[id] = Mat(m.dims[ar.src], m.dims[ar.tgt]);
    if (m.mats[id].empty_shape()) continue;
    m.mats[id].at(0, 0) = ar.arm != s.arm && ar.idx == 1 ? mu[ar.arm] : Rat(1);
  }
  certify(m, "wrapped regular window");
  return m;
}

Rep rank_one(const CanonicalAlgebra& alg, const RankOneSpec& s) {
  if (static_cast<int>(s.r.size()) != alg.arms())
    throw std::invalid_argument("one window per arm required");
  for (int i = 1; i <= alg.arms(); ++i)
    if (s.r[i - 1] < 0 || s.r[i - 1] >= alg.arm_length(i))
      throw std::invalid_argument("window must satisfy 0 <= r < p");
  if (s.n < 0) throw std::invalid_argument("negative base dimension");

  const int n = s.n;
  Rep m = zero_rep(alg);
  m.dims[alg.vertex_zero()] = n + 1;
  m.dims[alg.vertex_c()] = n;
  for (int i = 1; i <= alg.arms(); ++i)
    for (int j = 1; j < alg.arm_length(i); ++j)
      m.dims[alg.arm_vertex(i, j)] = j <= s.r[i - 1] ? n + 1 : n;

  for (int id = 0; id < alg.arrow_count(); ++id) {
    const Arrow& ar = alg.arrow(id);
    const int r = s.r[ar.arm - 1];
    const bool bends = ar.arm >= 3 && ar.idx == 1;
    if (bends) {
      // Lower bidiagonal: the arm path becomes X + lambda Y.
      Mat b(m.dims[ar.src], m.dims[ar.tgt]);
      const Rat lambda = alg.lambda_for_arm(ar.arm);
      for (int c = 0; c < b.cols(); ++c) {
        b.at(c, c) = 1;
        if (c + 1 < b.rows()) b.at(c + 1, c) = lambda;
      }
      m.mats[id] = b;
    } else if (ar.idx == r + 1) {
      m.mats[id] =
          ar.arm == 2 ? zeros_over_identity(n, 1) : identity_over_zeros(n, 1);
    } else {
      m.mats[id] = Mat::identity(m.dims[ar.src]);
    }
  }
  certify(m, "rank one module");
  return m;
}

}  // namespace canrep
