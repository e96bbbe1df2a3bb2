#pragma once

#include "canrep/algebra.hpp"
#include "canrep/matrix.hpp"

#include <string>
#include <vector>

namespace canrep {

// Matrix representation of the star quiver. For an arrow alpha: i -> j the
// matrix acts against the arrow, mapping the space at j into the space at i,
// so mats[id] has shape dims[src] x dims[tgt] and the composite of a path
// segment alpha_u ... alpha_v is the product in that order.
struct Rep {
  CanonicalAlgebra alg;
  std::vector<int> dims;  // per vertex
  std::vector<Mat> mats;  // per arrow id
};

Rep zero_rep(const CanonicalAlgebra& alg);
Rep simple_rep(const CanonicalAlgebra& alg, VertexId v);

// Indecomposable projective attached to a vertex. Satisfies
// hom(projective_rep(v), N) = dim N_v for every relation-satisfying N, which
// is the calibration used by the Euler form tests.
Rep projective_rep(const CanonicalAlgebra& alg, VertexId v);

void validate_shapes(const Rep& m);

std::vector<int> dimension_vector(const Rep& m);
long long total_dimension(const Rep& m);

// dims at the center minus dims at the sink.
long long rep_rank(const Rep& m);

Mat path_matrix(const Rep& m, const ArmPath& p);
// Allows from == to + 1, which denotes the identity on the space at
// to * x_arm (the empty segment).
Mat arm_path_matrix(const Rep& m, int arm, int from, int to);

struct RelationFailure {
  int arm = 0;
  Mat residual;
};
struct RelationReport {
  std::vector<RelationFailure> failures;
  bool ok() const { return failures.empty(); }
};
RelationReport check_relations(const Rep& m);

Rep direct_sum(const Rep& a, const Rep& b);

// M tensor k^u: every space repeats u times, coordinates grouped so the
// original index is major and the copy index minor.
Rep tensor_power(const Rep& m, int u);

// Conjugates by an invertible change of basis g_v at every vertex.
Rep base_change(const Rep& m, const std::vector<Mat>& g);

struct CoefficientOffender {
  int arrow = 0;
  int row = 0;
  int col = 0;
  Rat value;
};
struct CoefficientReport {
  std::vector<CoefficientOffender> offenders;
  bool ok() const { return offenders.empty(); }
};
// Checks every matrix entry against the admissible differences
// lambda_a - lambda_b of the algebra.
CoefficientReport coefficient_audit(const Rep& m);

// The five acceptability conditions on arrow and path matrices. They are
// stated for modules of positive rank; applied_to_rank_zero records when the
// audit was stretched beyond that.
struct AcceptabilityReport {
  bool c1 = true;  // first arrows of arms 1, 3..t have admissible entries
  bool c2 = true;  // every other arrow is a 0-1 matrix
  bool c3 = true;  // all arm-2 path matrices are 0-1
  bool c4 = true;  // paths from the center on arms other than 2 admissible
  bool c5 = true;  // interior paths on arms other than 2 are 0-1
  bool applied_to_rank_zero = false;
  std::vector<std::string> notes;
  bool ok() const { return c1 && c2 && c3 && c4 && c5; }
};
AcceptabilityReport acceptability_audit(const Rep& m);

}  // namespace canrep
