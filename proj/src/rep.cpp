#include "canrep/rep.hpp"

#include <algorithm>
#include <stdexcept>

namespace canrep {

namespace {

Mat block_diag(const Mat& a, const Mat& b) {
  Mat c(a.rows() + b.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j)
      c.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return c;
}

bool in_set(const Rat& v, const std::vector<Rat>& sorted_set) {
  return std::binary_search(sorted_set.begin(), sorted_set.end(), v);
}

bool is_zero_one(const Mat& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0 && m.at(i, j) != 1) return false;
  return true;
}

}  // namespace

Rep zero_rep(const CanonicalAlgebra& alg) {
  Rep m{alg, std::vector<int>(alg.vertex_count(), 0), {}};
  m.mats.assign(alg.arrow_count(), Mat(0, 0));
  return m;
}

Rep simple_rep(const CanonicalAlgebra& alg, VertexId v) {
  Rep m = zero_rep(alg);
  m.dims[v] = 1;
  for (int id = 0; id < alg.arrow_count(); ++id) {
    const Arrow& a = alg.arrow(id);
    m.mats[id] = Mat(m.dims[a.src], m.dims[a.tgt]);
  }
  return m;
}

Rep projective_rep(const CanonicalAlgebra& alg, VertexId v) {
  if (v == alg.vertex_zero()) return simple_rep(alg, v);

  Rep m = zero_rep(alg);
  if (v == alg.vertex_c()) {
    // Spanned by the arm-1 and arm-2 path classes at the center, one class
    // everywhere else. Arm i enters the center as (arm 1) + lambda_i (arm 2).
    m.dims.assign(alg.vertex_count(), 1);
    m.dims[alg.vertex_zero()] = 2;
    for (int id = 0; id < alg.arrow_count(); ++id) {
      const Arrow& a = alg.arrow(id);
      if (a.idx != 1) {
        m.mats[id] = Mat::identity(1);
        continue;
      }
      Mat first(2, 1);
      if (a.arm == 1) {
        first.at(0, 0) = 1;
      } else if (a.arm == 2) {
        first.at(1, 0) = 1;
      } else {
        first.at(0, 0) = 1;
        first.at(1, 0) = alg.lambda_for_arm(a.arm);
      }
      m.mats[id] = first;
    }
    return m;
  }

  // Interior vertex j x_i: one class at the center and at every arm-i vertex
  // up to j, connected by identities.
  int arm = 0;
  long long pos = 0;
  for (int i = 1; i <= alg.arms() && arm == 0; ++i)
    for (long long j = 1; j < alg.arm_length(i); ++j)
      if (alg.arm_vertex(i, j) == v) {
        arm = i;
        pos = j;
        break;
      }
  if (arm == 0) throw std::invalid_argument("bad vertex");
  m.dims[alg.vertex_zero()] = 1;
  for (long long j = 1; j <= pos; ++j) m.dims[alg.arm_vertex(arm, j)] = 1;
  for (int id = 0; id < alg.arrow_count(); ++id) {
    const Arrow& a = alg.arrow(id);
    if (a.arm == arm && a.idx <= pos) {
      m.mats[id] = Mat::identity(1);
    } else {
      m.mats[id] = Mat(m.dims[a.src], m.dims[a.tgt]);
    }
  }
  return m;
}

void validate_shapes(const Rep& m) {
  if (static_cast<int>(m.dims.size()) != m.alg.vertex_count())
    throw std::invalid_argument("dimension vector has wrong length");
  if (static_cast<int>(m.mats.size()) != m.alg.arrow_count())
    throw std::invalid_argument("matrix list has wrong length");
  for (int v = 0; v < m.alg.vertex_count(); ++v)
    if (m.dims[v] < 0) throw std::invalid_argument("negative dimension");
  for (int id = 0; id < m.alg.arrow_count(); ++id) {
    const Arrow& a = m.alg.arrow(id);
    if (m.mats[id].rows() != m.dims[a.src] ||
        m.mats[id].cols() != m.dims[a.tgt])
      throw std::invalid_argument("matrix for " + m.alg.arrow_label(id) +
                                  " has the wrong shape");
  }
}

std::vector<int> dimension_vector(const Rep& m) { return m.dims; }

long long total_dimension(const Rep& m) {
  long long n = 0;
  for (int d : m.dims) n += d;
  return n;
}

long long rep_rank(const Rep& m) {
  return m.dims[m.alg.vertex_zero()] - m.dims[m.alg.vertex_c()];
}

Mat path_matrix(const Rep& m, const ArmPath& p) {
  return arm_path_matrix(m, p.arm, p.from, p.to);
}

Mat arm_path_matrix(const Rep& m, int arm, int from, int to) {
  if (from == to + 1)
    return Mat::identity(m.dims[m.alg.arm_vertex(arm, to)]);
  const ArmPath p = path(m.alg, arm, from, to);
  Mat acc = m.mats[m.alg.arrow_id(p.arm, p.from)];
  for (int j = p.from + 1; j <= p.to; ++j)
    acc = acc * m.mats[m.alg.arrow_id(p.arm, j)];
  return acc;
}

RelationReport check_relations(const Rep& m) {
  validate_shapes(m);
  RelationReport report;
  for (const RelationDescriptor& r : relations(m.alg)) {
    const Mat residual = path_matrix(m, r.arm_i) - path_matrix(m, r.arm_1) -
                         r.lambda * path_matrix(m, r.arm_2);
    if (!residual.is_zero())
      report.failures.push_back(RelationFailure{r.arm, residual});
  }
  return report;
}

Rep direct_sum(const Rep& a, const Rep& b) {
  if (!(a.alg == b.alg))
    throw std::invalid_argument("direct sum over different algebras");
  Rep c = a;
  for (size_t v = 0; v < c.dims.size(); ++v) c.dims[v] += b.dims[v];
  for (size_t id = 0; id < c.mats.size(); ++id)
    c.mats[id] = block_diag(a.mats[id], b.mats[id]);
  return c;
}

Rep tensor_power(const Rep& m, int u) {
  if (u < 0) throw std::invalid_argument("negative tensor multiplicity");
  Rep c = m;
  for (auto& d : c.dims) d *= u;
  const Mat iu = Mat::identity(u);
  for (auto& mat : c.mats) mat = kron(mat, iu);
  return c;
}

Rep base_change(const Rep& m, const std::vector<Mat>& g) {
  if (static_cast<int>(g.size()) != m.alg.vertex_count())
    throw std::invalid_argument("one change of basis per vertex required");
  std::vector<Mat> ginv(g.size());
  for (size_t v = 0; v < g.size(); ++v) {
    if (g[v].rows() != m.dims[v] || g[v].cols() != m.dims[v])
      throw std::invalid_argument("change of basis has the wrong shape");
    auto inv = inverse(g[v]);
    if (!inv) throw std::invalid_argument("change of basis is singular");
    ginv[v] = std::move(*inv);
  }
  Rep c = m;
  for (int id = 0; id < m.alg.arrow_count(); ++id) {
    const Arrow& a = m.alg.arrow(id);
    c.mats[id] = g[a.src] * m.mats[id] * ginv[a.tgt];
  }
  return c;
}

CoefficientReport coefficient_audit(const Rep& m) {
  const std::vector<Rat> admissible = m.alg.coefficient_differences();
  CoefficientReport report;
  for (int id = 0; id < m.alg.arrow_count(); ++id) {
    const Mat& mat = m.mats[id];
    for (int i = 0; i < mat.rows(); ++i)
      for (int j = 0; j < mat.cols(); ++j)
        if (!in_set(mat.at(i, j), admissible))
          report.offenders.push_back(
              CoefficientOffender{id, i, j, mat.at(i, j)});
  }
  return report;
}

AcceptabilityReport acceptability_audit(const Rep& m) {
  const std::vector<Rat> admissible = m.alg.coefficient_differences();
  AcceptabilityReport report;
  report.applied_to_rank_zero = rep_rank(m) <= 0;

  auto admissible_mat = [&](const Mat& mat) {
    for (int i = 0; i < mat.rows(); ++i)
      for (int j = 0; j < mat.cols(); ++j)
        if (!in_set(mat.at(i, j), admissible)) return false;
    return true;
  };
  auto note = [&](const std::string& s) { report.notes.push_back(s); };

  for (int id = 0; id < m.alg.arrow_count(); ++id) {
    const Arrow& a = m.alg.arrow(id);
    const bool solved_first = a.idx == 1 && a.arm != 2;
    if (solved_first) {
      if (!admissible_mat(m.mats[id])) {
        report.c1 = false;
        note("inadmissible entry in " + m.alg.arrow_label(id));
      }
    } else if (!is_zero_one(m.mats[id])) {
      report.c2 = false;
      note(m.alg.arrow_label(id) + " is not a 0-1 matrix");
    }
  }

  for (int arm = 1; arm <= m.alg.arms(); ++arm) {
    const int len = static_cast<int>(m.alg.arm_length(arm));
    for (int from = 1; from <= len; ++from)
      for (int to = from; to <= len; ++to) {
        const Mat p = arm_path_matrix(m, arm, from, to);
        if (arm == 2) {
          if (!is_zero_one(p)) {
            report.c3 = false;
            note("arm 2 path " + std::to_string(from) + ".." +
                 std::to_string(to) + " is not a 0-1 matrix");
          }
          continue;
        }
        if (from == 1) {
          if (!admissible_mat(p)) {
            report.c4 = false;
            note("arm " + std::to_string(arm) + " path from the center 1.." +
                 std::to_string(to) + " has an inadmissible entry");
          }
        } else if (!is_zero_one(p)) {
          report.c5 = false;
          note("arm " + std::to_string(arm) + " interior path " +
               std::to_string(from) + ".." + std::to_string(to) +
               " is not a 0-1 matrix");
        }
      }
  }
  return report;
}

}  // namespace canrep
