#pragma once

#include "canrep/lattice.hpp"
#include "canrep/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace canrep {

using VertexId = int;

// Arrow alpha_j of arm i, pointing (j-1)x_i -> j x_i in the quiver; j runs
// from 1 (source is the star center 0) to p_i (target is the sink c).
struct Arrow {
  int arm = 0;
  int idx = 0;
  VertexId src = 0;
  VertexId tgt = 0;
};

// Segment of one arm: the composite of the arrows alpha_from, ..., alpha_to.
// from == to is a single arrow; validation rejects from > to.
struct ArmPath {
  int arm = 0;
  int from = 0;
  int to = 0;
};

// Star quiver with one relation per arm beyond the second: the full path of
// arm i equals (arm 1 path) + lambda_i (arm 2 path). Parameters lambda are
// indexed by arms 2..t and must be pairwise distinct; the usual normalization
// lambda_2 = 0, lambda_3 = 1 is tracked but not enforced.
class CanonicalAlgebra {
 public:
  CanonicalAlgebra(Weights w, std::vector<Rat> lambda);

  const Weights& weights() const { return w_; }
  int arms() const { return w_.arms(); }
  long long arm_length(int arm) const;

  // Entry m-2 belongs to arm m.
  const std::vector<Rat>& lambdas() const { return lambda_; }
  Rat lambda_for_arm(int arm) const;
  bool normalized() const { return normalized_; }

  int vertex_count() const { return vertex_count_; }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  int relation_count() const { return arms() - 2; }

  VertexId vertex_zero() const { return 0; }
  VertexId vertex_c() const { return vertex_count_ - 1; }
  // j = 0 gives the center, j = p_i the sink.
  VertexId arm_vertex(int arm, long long j) const;

  const std::vector<Arrow>& arrows() const { return arrows_; }
  int arrow_id(int arm, int idx) const;
  const Arrow& arrow(int id) const { return arrows_[id]; }

  std::string vertex_label(VertexId v) const;
  std::string arrow_label(int id) const;
  std::optional<VertexId> vertex_by_label(const std::string& s) const;
  std::optional<int> arrow_by_label(const std::string& s) const;

  // All differences lambda_a - lambda_b over arms 2..t, sorted and deduped.
  // The admissible coefficient set for module entries.
  std::vector<Rat> coefficient_differences() const;

  bool operator==(const CanonicalAlgebra& o) const {
    return w_ == o.w_ && lambda_ == o.lambda_;
  }

 private:
  Weights w_;
  std::vector<Rat> lambda_;
  bool normalized_ = false;
  int vertex_count_ = 0;
  std::vector<Arrow> arrows_;
  std::vector<int> arm_vertex_base_;  // index of x_i_1 per arm
  std::vector<int> arm_arrow_base_;   // arrow id of alpha_i_1 per arm
};

ArmPath path(const CanonicalAlgebra& alg, int arm, int from, int to);

struct RelationDescriptor {
  int arm = 0;  // the arm i >= 3 whose full path the relation rewrites
  ArmPath arm_i, arm_1, arm_2;
  Rat lambda;
};
std::vector<RelationDescriptor> relations(const CanonicalAlgebra& alg);

}  // namespace canrep
