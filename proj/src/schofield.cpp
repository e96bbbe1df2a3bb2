#include "canrep/schofield.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace canrep {

namespace {

void require_relations(const Rep& m, const char* who) {
  if (!check_relations(m).ok())
    throw std::invalid_argument(std::string(who) +
                                " does not satisfy the defining relations");
}

std::vector<Mat> zero_family(const Rep& x, const Rep& y) {
  std::vector<Mat> fam;
  fam.reserve(static_cast<size_t>(x.alg.arrow_count()));
  for (const Arrow& ar : x.alg.arrows())
    fam.emplace_back(y.dims[ar.src], x.dims[ar.tgt]);
  return fam;
}

// Entries a basis vector may carry: the coefficient differences of the
// algebra times entries of arm path matrices of Y, together with 0 and 1.
std::set<Rat> allowed_entries(const Rep& y) {
  const CanonicalAlgebra& alg = y.alg;
  std::set<Rat> path_entries{Rat(0), Rat(1)};
  for (int arm = 1; arm <= alg.arms(); ++arm) {
    const int p = static_cast<int>(alg.arm_length(arm));
    for (int from = 1; from <= p + 1; ++from)
      for (int to = from - 1; to <= p; ++to) {
        const Mat seg = arm_path_matrix(y, arm, from, to);
        for (int r = 0; r < seg.rows(); ++r)
          for (int c = 0; c < seg.cols(); ++c)
            path_entries.insert(seg.at(r, c));
      }
  }
  std::set<Rat> out{Rat(0), Rat(1)};
  for (const Rat& d : y.alg.coefficient_differences())
    for (const Rat& e : path_entries) out.insert(d * e);
  return out;
}

UBasisEntryReport entry_audit(const Rep& y,
                              const std::vector<std::vector<Mat>>& vectors) {
  const std::set<Rat> allowed = allowed_entries(y);
  UBasisEntryReport report;
  for (size_t k = 0; k < vectors.size(); ++k)
    for (int id = 0; id < y.alg.arrow_count(); ++id) {
      const Mat& f = vectors[k][static_cast<size_t>(id)];
      for (int r = 0; r < f.rows(); ++r)
        for (int c = 0; c < f.cols(); ++c)
          if (!allowed.contains(f.at(r, c))) {
            std::ostringstream os;
            os << "vector " << k << ", arrow " << y.alg.arrow_label(id)
               << ", entry (" << r << "," << c
               << ") = " << rat_to_string(f.at(r, c));
            report.offenders.push_back(os.str());
          }
    }
  return report;
}

}  // namespace

Mat u_basis_columns(const UBasis& b) {
  const PairLayout layout = pair_layout(b.x, b.y);
  Mat cols(static_cast<int>(layout.c1_dim),
           static_cast<int>(b.vectors.size()));
  for (size_t k = 0; k < b.vectors.size(); ++k) {
    if (b.vectors[k].size() != static_cast<size_t>(b.x.alg.arrow_count()))
      throw std::invalid_argument("basis vector misses arrow components");
    for (int id = 0; id < b.x.alg.arrow_count(); ++id) {
      const Arrow& ar = b.x.alg.arrow(id);
      const Mat& f = b.vectors[k][static_cast<size_t>(id)];
      if (f.rows() != b.y.dims[ar.src] || f.cols() != b.x.dims[ar.tgt])
        throw std::invalid_argument("basis vector component has wrong shape");
      for (int r = 0; r < f.rows(); ++r)
        for (int c = 0; c < f.cols(); ++c)
          cols.at(static_cast<int>(layout.c1_off[id] +
                                   static_cast<long long>(r) * f.cols() + c),
                  static_cast<int>(k)) = f.at(r, c);
    }
  }
  return cols;
}

UBasis structured_u_basis(const Rep& x, const RegularSpec& window,
                          const Rep& y) {
  require_relations(x, "first module");
  require_relations(y, "second module");
  const CanonicalAlgebra& alg = x.alg;
  {
    const Rep built = regular_exceptional(alg, window);
    if (x.dims != built.dims || x.mats != built.mats)
      throw std::invalid_argument(
          "module is not the window module it is declared to be");
  }

  const int i = window.arm;
  const int t = alg.arms();
  std::vector<int> comp_arms;
  if (i >= 3) {
    comp_arms.push_back(1);
    for (int m = 3; m <= t; ++m)
      if (m != i) comp_arms.push_back(m);
  } else {
    for (int m = 3; m <= t; ++m) comp_arms.push_back(m);
  }

  // Solving the relation constraints for the first-arrow coordinates of the
  // compensating arms gives, for a window on arm i >= 3,
  //   c_1 = P_i - P_1 - lambda_i P_2
  //   c_m = P_i + (lambda_m - lambda_i) P_2 - P_m        (m >= 3, m != i)
  // and for a window on arm 1 or 2
  //   c_m = P_1 + lambda_m P_2 - P_m                     (m >= 3),
  // where P_w is the contribution of the placed unit to the arm-w path sum.
  // A placement on arm w contributes only to P_w, so each compensator is the
  // coefficient below times that single contribution.
  auto coefficient = [&](int comp_arm, int placement_arm) -> Rat {
    if (i >= 3) {
      if (comp_arm == 1) {
        if (placement_arm == i) return Rat(1);
        if (placement_arm == 1) return Rat(-1);
        if (placement_arm == 2) return -alg.lambda_for_arm(i);
        return Rat(0);
      }
      if (placement_arm == i) return Rat(1);
      if (placement_arm == 2)
        return alg.lambda_for_arm(comp_arm) - alg.lambda_for_arm(i);
      if (placement_arm == comp_arm) return Rat(-1);
      return Rat(0);
    }
    if (placement_arm == 1) return Rat(1);
    if (placement_arm == 2) return alg.lambda_for_arm(comp_arm);
    if (placement_arm == comp_arm) return Rat(-1);
    return Rat(0);
  };

  const bool has_sink = x.dims[alg.vertex_c()] > 0;
  std::vector<std::vector<Mat>> vectors;
  for (int w = 1; w <= t; ++w) {
    const int p = static_cast<int>(alg.arm_length(w));
    for (int j = 1; j <= p; ++j) {
      if (j == 1 && std::find(comp_arms.begin(), comp_arms.end(), w) !=
                        comp_arms.end())
        continue;
      if (x.dims[alg.arm_vertex(w, j)] == 0) continue;
      const int dy = y.dims[alg.arm_vertex(w, j - 1)];
      if (dy == 0) continue;
      // Window modules are thin, so the placement space is one column wide
      // and the tail of the arm contributes a single scalar.
      const Mat head = arm_path_matrix(y, w, 1, j - 1);
      Rat tail(0);
      if (has_sink) tail = arm_path_matrix(x, w, j + 1, p).at(0, 0);
      for (int r = 0; r < dy; ++r) {
        std::vector<Mat> fam = zero_family(x, y);
        fam[static_cast<size_t>(alg.arrow_id(w, j))].at(r, 0) = Rat(1);
        if (tail != 0) {
          for (int m : comp_arms) {
            const Rat coef = coefficient(m, w) * tail;
            if (coef == 0) continue;
            Mat& slot = fam[static_cast<size_t>(alg.arrow_id(m, 1))];
            for (int u = 0; u < slot.rows(); ++u)
              slot.at(u, 0) += coef * head.at(u, r);
          }
        }
        vectors.push_back(std::move(fam));
      }
    }
  }

  UBasis b{UBasisKind::structured, x, y, std::move(vectors), {}};

  const Mat constraints = u_constraint_matrix(x, y);
  const long long expected = pair_layout(x, y).c1_dim - rank(constraints);
  if (static_cast<long long>(b.vectors.size()) != expected)
    throw std::logic_error(
        "closed-form basis count disagrees with the constraint rank");
  if (!(constraints * u_basis_columns(b)).is_zero())
    throw std::logic_error(
        "closed-form basis vector violates the relation constraints");

  b.entries = entry_audit(y, b.vectors);
  return b;
}

UBasis generic_u_basis(const Rep& x, const Rep& y) {
  require_relations(x, "first module");
  require_relations(y, "second module");
  UBasis b{UBasisKind::generic, x, y, {}, {}};
  const PairLayout layout = pair_layout(x, y);
  const Mat cols = u_subspace_basis(x, y);
  for (int k = 0; k < cols.cols(); ++k) {
    std::vector<Mat> fam = zero_family(x, y);
    for (int id = 0; id < x.alg.arrow_count(); ++id) {
      Mat& f = fam[static_cast<size_t>(id)];
      for (int r = 0; r < f.rows(); ++r)
        for (int c = 0; c < f.cols(); ++c)
          f.at(r, c) =
              cols.at(static_cast<int>(layout.c1_off[id] +
                                       static_cast<long long>(r) * f.cols() +
                                       c),
                      k);
    }
    b.vectors.push_back(std::move(fam));
  }
  b.entries = entry_audit(y, b.vectors);
  return b;
}

UBasis ext_basis_from_u(const UBasis& b) {
  const Mat delta = delta_matrix(b.x, b.y);
  const Mat cols = u_basis_columns(b);
  const Echelon e = reduced_echelon(hstack(delta, cols));
  UBasis out{b.kind, b.x, b.y, {}, {}};
  for (int pc : e.pivot_cols) {
    if (pc < delta.cols()) continue;
    out.vectors.push_back(b.vectors[static_cast<size_t>(pc - delta.cols())]);
  }
  out.entries = entry_audit(out.y, out.vectors);
  return out;
}

Rep assemble(const UBasis& ext_classes, const KroneckerRep& theta) {
  validate_kronecker(theta);
  const Rep& x = ext_classes.x;
  const Rep& y = ext_classes.y;
  if (!(x.alg == y.alg))
    throw std::invalid_argument("basis pair lives over different algebras");
  if (ext_classes.vectors.size() != static_cast<size_t>(theta.n))
    throw std::invalid_argument(
        "need exactly one ext class per kronecker arrow");
  const CanonicalAlgebra& alg = x.alg;

  Rep m{alg, std::vector<int>(static_cast<size_t>(alg.vertex_count())), {}};
  for (int v = 0; v < alg.vertex_count(); ++v)
    m.dims[static_cast<size_t>(v)] =
        theta.v * y.dims[static_cast<size_t>(v)] +
        theta.u * x.dims[static_cast<size_t>(v)];

  const Mat iv = Mat::identity(theta.v);
  const Mat iu = Mat::identity(theta.u);
  m.mats.reserve(static_cast<size_t>(alg.arrow_count()));
  for (int id = 0; id < alg.arrow_count(); ++id) {
    const Arrow& ar = alg.arrow(id);
    Mat phi(y.dims[ar.src] * theta.v, x.dims[ar.tgt] * theta.u);
    for (int a = 0; a < theta.n; ++a) {
      const Mat& f = ext_classes.vectors[static_cast<size_t>(a)]
                                        [static_cast<size_t>(id)];
      if (f.rows() != y.dims[ar.src] || f.cols() != x.dims[ar.tgt])
        throw std::invalid_argument("ext class component has wrong shape");
      phi = phi + kron(f, theta.mats[static_cast<size_t>(a)]);
    }
    m.mats.push_back(
        vstack(hstack(kron(y.mats[static_cast<size_t>(id)], iv), phi),
               hstack(Mat(x.dims[ar.src] * theta.u, y.dims[ar.tgt] * theta.v),
                      kron(x.mats[static_cast<size_t>(id)], iu))));
  }
  validate_shapes(m);
  if (!check_relations(m).ok())
    throw std::logic_error(
        "assembled module violates the relations; a supplied class lies "
        "outside the admissible subspace");
  return m;
}

std::vector<OrthogonalPair> find_orthogonal_pairs(
    const std::vector<Rep>& pool) {
  std::vector<char> exceptional(pool.size(), 0);
  for (size_t k = 0; k < pool.size(); ++k) {
    require_relations(pool[k], "pool member");
    exceptional[k] = is_exceptional(pool[k]) ? 1 : 0;
  }
  std::vector<OrthogonalPair> hits;
  for (size_t xi = 0; xi < pool.size(); ++xi) {
    if (!exceptional[xi]) continue;
    for (size_t yi = 0; yi < pool.size(); ++yi) {
      if (xi == yi || !exceptional[yi]) continue;
      const auto [hom_xy, ext_xy] = hom_ext(pool[xi], pool[yi]);
      if (hom_xy != 0 || ext_xy < 1) continue;
      if (hom_ext(pool[yi], pool[xi]) !=
          std::pair<long long, long long>{0, 0})
        continue;
      hits.push_back(
          {static_cast<int>(xi), static_cast<int>(yi), ext_xy});
    }
  }
  return hits;
}

InductionRecord induction_step(const Rep& x, const Rep& y,
                               const KroneckerRep& theta,
                               const std::optional<RegularSpec>& x_window) {
  const OrthogonalityReport pair = orthogonal_pair_check(x, y);
  if (!pair.ok())
    throw std::invalid_argument("not an orthogonal exceptional pair");
  if (static_cast<long long>(theta.n) != pair.n)
    throw std::invalid_argument(
        "kronecker arrow count differs from the extension dimension");
  const UBasis basis =
      x_window ? structured_u_basis(x, *x_window, y) : generic_u_basis(x, y);
  const UBasis classes = ext_basis_from_u(basis);

  InductionRecord rec{x, y, pair.n, theta, basis.kind,
                      assemble(classes, theta), {}};
  rec.report = verify_induction_step(rec);
  return rec;
}

InductionReport verify_induction_step(const InductionRecord& rec) {
  InductionReport report;
  report.relations = check_relations(rec.m).ok();
  report.exceptional = report.relations && is_exceptional(rec.m);
  report.dims_additive = true;
  const CanonicalAlgebra& alg = rec.m.alg;
  for (int v = 0; v < alg.vertex_count(); ++v)
    if (rec.m.dims[static_cast<size_t>(v)] !=
        rec.kron.v * rec.y.dims[static_cast<size_t>(v)] +
            rec.kron.u * rec.x.dims[static_cast<size_t>(v)])
      report.dims_additive = false;
  report.rank_additive =
      rep_rank(rec.m) ==
      rec.kron.v * rep_rank(rec.y) + rec.kron.u * rep_rank(rec.x);
  report.coefficients = coefficient_audit(rec.m);
  if (rec.basis_kind == UBasisKind::structured)
    report.acceptability = acceptability_audit(rec.m);
  return report;
}

}  // namespace canrep
