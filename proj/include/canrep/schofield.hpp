#pragma once

#include "canrep/hom_ext.hpp"
#include "canrep/kronecker.hpp"
#include "canrep/small_rank.hpp"

#include <optional>
#include <string>
#include <vector>

namespace canrep {

enum class UBasisKind { structured, generic };

// Advisory audit of the entry pattern: every entry should be 0, 1, or an
// admissible coefficient difference of the algebra times an entry of a path
// matrix of Y. Structured bases satisfy this by construction; solver bases
// often do not, which is why the outcome is reported instead of enforced.
struct UBasisEntryReport {
  std::vector<std::string> offenders;
  bool ok() const { return offenders.empty(); }
};

// Vectors spanning the admissible subspace U(X, Y) of the level-one space,
// one matrix per arrow for each vector: either a full basis of U, or the
// subfamily of ext class representatives picked from one.
struct UBasis {
  UBasisKind kind = UBasisKind::generic;
  Rep x, y;
  std::vector<std::vector<Mat>> vectors;
  UBasisEntryReport entries;
};

// The vectors flattened into columns in level-one coordinates.
Mat u_basis_columns(const UBasis& b);

// Explicit basis of U(X, Y) for a window module X = S_a^[l]: a lone unit
// column at every free coordinate, plus corrections at the first arrows of
// the other arms solved in closed form from the relation constraints. The
// module passed as x must be exactly the constructor output for the window.
// Throws when the closed-form count disagrees with the constraint rank.
UBasis structured_u_basis(const Rep& x, const RegularSpec& window,
                          const Rep& y);

// Echelonized nullspace of the constraint matrix. Works for any
// relation-satisfying pair; the entry pattern is reported, not guaranteed.
UBasis generic_u_basis(const Rep& x, const Rep& y);

// Subfamily whose classes form a basis of U / im(delta), picked by echelon
// elimination against the image columns. Its size equals ext(X, Y).
UBasis ext_basis_from_u(const UBasis& b);

// Middle term of the induction step: vertex spaces Y_v ^ theta.v + X_v ^
// theta.u and arrow blocks
//   [ Y_alpha (x) I_v   sum_m f_alpha^(m) (x) A_m ]
//   [ 0                 X_alpha (x) I_u           ]
// built from one ext class per Kronecker arrow. Rechecks the relations of
// the result and throws when a supplied vector was not admissible.
Rep assemble(const UBasis& ext_classes, const KroneckerRep& theta);

// Ordered pairs of pool indices forming orthogonal exceptional pairs that
// carry at least one extension from the first member to the second.
struct OrthogonalPair {
  int x_index = 0;
  int y_index = 0;
  long long n = 0;
};
std::vector<OrthogonalPair> find_orthogonal_pairs(const std::vector<Rep>& pool);

struct InductionReport {
  bool relations = false;
  bool exceptional = false;
  bool dims_additive = false;
  bool rank_additive = false;
  CoefficientReport coefficients;
  // Filled for structured records only; the audit conditions are stated for
  // the explicit bases.
  std::optional<AcceptabilityReport> acceptability;
  bool ok() const {
    return relations && exceptional && dims_additive && rank_additive;
  }
};

// One induction step with its inputs and verification outcome.
struct InductionRecord {
  Rep x, y;
  long long n = 0;
  KroneckerRep kron;
  UBasisKind basis_kind = UBasisKind::generic;
  Rep m;
  InductionReport report;
};

// Runs a full step: orthogonality gate, U basis (structured when a window
// for X is supplied), ext representatives, assembly, verification. A failing
// verification is returned in the record, not thrown.
InductionRecord induction_step(const Rep& x, const Rep& y,
                               const KroneckerRep& theta,
                               const std::optional<RegularSpec>& x_window = {});

// Recomputes the report of a record from scratch.
InductionReport verify_induction_step(const InductionRecord& rec);

}  // namespace canrep
