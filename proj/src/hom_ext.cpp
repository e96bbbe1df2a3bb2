#include "canrep/hom_ext.hpp"

#include <stdexcept>

namespace canrep {

namespace {

constexpr long long kDenseCellLimit = 4'000'000;

void require_same_algebra(const Rep& x, const Rep& y) {
  if (!(x.alg == y.alg))
    throw std::invalid_argument("pair over different algebras");
}

void require_relations(const Rep& m, const char* who) {
  if (!check_relations(m).ok())
    throw std::invalid_argument(std::string(who) +
                                " does not satisfy the defining relations");
}

// Streams the nonzero entries of the difference map into a sink so the same
// code fills dense and sparse forms.
template <typename Sink>
void emit_delta(const Rep& x, const Rep& y, const PairLayout& layout,
                Sink&& add) {
  const CanonicalAlgebra& alg = x.alg;
  for (int id = 0; id < alg.arrow_count(); ++id) {
    const Arrow& ar = alg.arrow(id);
    const Mat& xa = x.mats[id];
    const Mat& ya = y.mats[id];
    const int dys = y.dims[ar.src];
    const int dyt = y.dims[ar.tgt];
    const int dxs = x.dims[ar.src];
    const int dxt = x.dims[ar.tgt];
    const long long row0 = layout.c1_off[id];
    for (int i = 0; i < dys; ++i)
      for (int j = 0; j < dxt; ++j) {
        const long long row = row0 + static_cast<long long>(i) * dxt + j;
        for (int k = 0; k < dxs; ++k)
          if (xa.at(k, j) != 0)
            add(row, layout.c0_off[ar.src] + static_cast<long long>(i) * dxs + k,
                xa.at(k, j));
        for (int r = 0; r < dyt; ++r)
          if (ya.at(i, r) != 0)
            add(row, layout.c0_off[ar.tgt] + static_cast<long long>(r) * dxt + j,
                -ya.at(i, r));
      }
  }
}

// Streams the relation constraints. Each term A f B with A an initial path
// of Y and B a tail path of X contributes A[u,r] * B[c,w] to the coefficient
// of f[r,c] in the output entry (u,w).
template <typename Sink>
void emit_u_constraints(const Rep& x, const Rep& y, const PairLayout& layout,
                        Sink&& add) {
  const CanonicalAlgebra& alg = x.alg;
  const int dxc = x.dims[alg.vertex_c()];
  const int dy0 = y.dims[alg.vertex_zero()];
  long long block = 0;
  for (const RelationDescriptor& rel : relations(alg)) {
    auto arm_terms = [&](int m, const Rat& scale) {
      const int p = static_cast<int>(alg.arm_length(m));
      for (int j = 1; j <= p; ++j) {
        const Mat a = arm_path_matrix(y, m, 1, j - 1);
        const Mat b = arm_path_matrix(x, m, j + 1, p);
        const long long col0 = layout.c1_off[alg.arrow_id(m, j)];
        const int fcols = x.dims[alg.arm_vertex(m, j)];
        for (int u = 0; u < a.rows(); ++u)
          for (int r = 0; r < a.cols(); ++r) {
            if (a.at(u, r) == 0) continue;
            for (int c = 0; c < b.rows(); ++c)
              for (int w = 0; w < b.cols(); ++w) {
                if (b.at(c, w) == 0) continue;
                add(block + static_cast<long long>(u) * dxc + w,
                    col0 + static_cast<long long>(r) * fcols + c,
                    scale * a.at(u, r) * b.at(c, w));
              }
          }
      }
    };
    arm_terms(rel.arm, Rat(1));
    arm_terms(1, Rat(-1));
    arm_terms(2, -rel.lambda);
    block += static_cast<long long>(dy0) * dxc;
  }
}

Mat dense_from_emitter(long long rows, long long cols, const auto& emit) {
  if (rows * cols > kDenseCellLimit)
    throw std::length_error("dense pair model too large; use the sparse form");
  Mat m(static_cast<int>(rows), static_cast<int>(cols));
  emit([&](long long r, long long c, const Rat& v) {
    m.at(static_cast<int>(r), static_cast<int>(c)) += v;
  });
  return m;
}

long long u_row_count(const Rep& x, const Rep& y) {
  return static_cast<long long>(x.alg.relation_count()) *
         y.dims[x.alg.vertex_zero()] * x.dims[x.alg.vertex_c()];
}

}  // namespace

PairLayout pair_layout(const Rep& x, const Rep& y) {
  require_same_algebra(x, y);
  validate_shapes(x);
  validate_shapes(y);
  const CanonicalAlgebra& alg = x.alg;
  PairLayout layout;
  layout.c0_off.reserve(alg.vertex_count());
  for (int v = 0; v < alg.vertex_count(); ++v) {
    layout.c0_off.push_back(layout.c0_dim);
    layout.c0_dim += static_cast<long long>(y.dims[v]) * x.dims[v];
  }
  layout.c1_off.reserve(alg.arrow_count());
  for (int id = 0; id < alg.arrow_count(); ++id) {
    const Arrow& ar = alg.arrow(id);
    layout.c1_off.push_back(layout.c1_dim);
    layout.c1_dim += static_cast<long long>(y.dims[ar.src]) * x.dims[ar.tgt];
  }
  return layout;
}

Mat delta_matrix(const Rep& x, const Rep& y) {
  const PairLayout layout = pair_layout(x, y);
  return dense_from_emitter(layout.c1_dim, layout.c0_dim, [&](auto&& sink) {
    emit_delta(x, y, layout, sink);
  });
}

SparseMat delta_sparse(const Rep& x, const Rep& y) {
  const PairLayout layout = pair_layout(x, y);
  SparseMat m(layout.c1_dim, layout.c0_dim);
  emit_delta(x, y, layout,
             [&](long long r, long long c, const Rat& v) { m.add(r, c, v); });
  return m;
}

Mat u_constraint_matrix(const Rep& x, const Rep& y) {
  const PairLayout layout = pair_layout(x, y);
  return dense_from_emitter(u_row_count(x, y), layout.c1_dim, [&](auto&& sink) {
    emit_u_constraints(x, y, layout, sink);
  });
}

SparseMat u_constraint_sparse(const Rep& x, const Rep& y) {
  const PairLayout layout = pair_layout(x, y);
  SparseMat m(u_row_count(x, y), layout.c1_dim);
  emit_u_constraints(
      x, y, layout,
      [&](long long r, long long c, const Rat& v) { m.add(r, c, v); });
  return m;
}

long long hom_dim(const Rep& x, const Rep& y) {
  const PairLayout layout = pair_layout(x, y);
  return layout.c0_dim - sparse_rank(delta_sparse(x, y));
}

long long ext_dim(const Rep& x, const Rep& y) { return hom_ext(x, y).second; }

std::pair<long long, long long> hom_ext(const Rep& x, const Rep& y) {
  require_same_algebra(x, y);
  require_relations(x, "first module");
  require_relations(y, "second module");
  const PairLayout layout = pair_layout(x, y);
  const long long rank_delta = sparse_rank(delta_sparse(x, y));
  const long long dim_u =
      layout.c1_dim - sparse_rank(u_constraint_sparse(x, y));
  return {layout.c0_dim - rank_delta, dim_u - rank_delta};
}

std::vector<std::vector<Mat>> hom_basis(const Rep& x, const Rep& y) {
  const PairLayout layout = pair_layout(x, y);
  const Mat kernel = nullspace(delta_matrix(x, y));
  std::vector<std::vector<Mat>> basis;
  for (int col = 0; col < kernel.cols(); ++col) {
    std::vector<Mat> f;
    for (int v = 0; v < x.alg.vertex_count(); ++v) {
      Mat fv(y.dims[v], x.dims[v]);
      for (int r = 0; r < fv.rows(); ++r)
        for (int c = 0; c < fv.cols(); ++c)
          fv.at(r, c) = kernel.at(
              static_cast<int>(layout.c0_off[v] +
                               static_cast<long long>(r) * x.dims[v] + c),
              col);
      f.push_back(std::move(fv));
    }
    basis.push_back(std::move(f));
  }
  return basis;
}

Mat u_subspace_basis(const Rep& x, const Rep& y) {
  return nullspace(u_constraint_matrix(x, y));
}

Mat ext_cocycles_from(const Rep& x, const Rep& y, const Mat& u_cols) {
  const Mat delta = delta_matrix(x, y);
  if (u_cols.rows() != delta.rows())
    throw std::invalid_argument("u columns have the wrong height");
  const Echelon e = reduced_echelon(hstack(delta, u_cols));
  Mat out(u_cols.rows(), 0);
  for (int pc : e.pivot_cols) {
    if (pc < delta.cols()) continue;
    Mat col(u_cols.rows(), 1);
    for (int r = 0; r < u_cols.rows(); ++r)
      col.at(r, 0) = u_cols.at(r, pc - delta.cols());
    out = hstack(out, col);
  }
  return out;
}

Mat ext_cocycles(const Rep& x, const Rep& y) {
  require_relations(x, "first module");
  require_relations(y, "second module");
  return ext_cocycles_from(x, y, u_subspace_basis(x, y));
}

bool image_delta_inside_u(const Rep& x, const Rep& y) {
  const Mat product = u_constraint_matrix(x, y) * delta_matrix(x, y);
  return product.is_zero();
}

Rep extension_middle_term(const Rep& x, const Rep& y,
                          const std::vector<Rat>& cocycle) {
  require_same_algebra(x, y);
  require_relations(x, "first module");
  require_relations(y, "second module");
  const PairLayout layout = pair_layout(x, y);
  if (static_cast<long long>(cocycle.size()) != layout.c1_dim)
    throw std::invalid_argument("cocycle has the wrong length");

  std::vector<Rat> residual(static_cast<size_t>(u_row_count(x, y)), Rat(0));
  emit_u_constraints(x, y, layout,
                     [&](long long r, long long c, const Rat& v) {
                       residual[static_cast<size_t>(r)] +=
                           v * cocycle[static_cast<size_t>(c)];
                     });
  for (const Rat& r : residual)
    if (r != 0)
      throw std::invalid_argument(
          "cocycle lies outside the admissible subspace");

  Rep m{x.alg, {}, {}};
  m.dims.resize(x.alg.vertex_count());
  for (int v = 0; v < x.alg.vertex_count(); ++v)
    m.dims[v] = y.dims[v] + x.dims[v];
  m.mats.resize(x.alg.arrow_count());
  for (int id = 0; id < x.alg.arrow_count(); ++id) {
    const Arrow& ar = x.alg.arrow(id);
    const int dxt = x.dims[ar.tgt];
    Mat phi(y.dims[ar.src], dxt);
    for (int i = 0; i < phi.rows(); ++i)
      for (int j = 0; j < phi.cols(); ++j)
        phi.at(i, j) = cocycle[static_cast<size_t>(
            layout.c1_off[id] + static_cast<long long>(i) * dxt + j)];
    m.mats[id] = vstack(hstack(y.mats[id], phi),
                        hstack(Mat(x.dims[ar.src], y.dims[ar.tgt]),
                               x.mats[id]));
  }
  validate_shapes(m);
  return m;
}

long long euler_form(const CanonicalAlgebra& alg, const std::vector<int>& dx,
                     const std::vector<int>& dy) {
  if (static_cast<int>(dx.size()) != alg.vertex_count() ||
      static_cast<int>(dy.size()) != alg.vertex_count())
    throw std::invalid_argument("dimension vector has the wrong length");
  long long s = 0;
  for (int v = 0; v < alg.vertex_count(); ++v)
    s += static_cast<long long>(dx[v]) * dy[v];
  for (const Arrow& ar : alg.arrows())
    s -= static_cast<long long>(dx[ar.tgt]) * dy[ar.src];
  s += static_cast<long long>(alg.relation_count()) *
       dx[alg.vertex_c()] * dy[alg.vertex_zero()];
  return s;
}

bool is_exceptional(const Rep& m) {
  return hom_ext(m, m) == std::pair<long long, long long>{1, 0};
}

OrthogonalityReport orthogonal_pair_check(const Rep& x, const Rep& y) {
  OrthogonalityReport report;
  report.x_exceptional = is_exceptional(x);
  report.y_exceptional = is_exceptional(y);
  report.hom_xy_zero = hom_dim(x, y) == 0;
  const auto [hom_yx, ext_yx] = hom_ext(y, x);
  report.hom_yx_zero = hom_yx == 0;
  report.ext_yx_zero = ext_yx == 0;
  report.n = ext_dim(x, y);
  return report;
}

}  // namespace canrep
