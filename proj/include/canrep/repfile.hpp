#pragma once

#include "canrep/rep.hpp"

#include <stdexcept>
#include <string>

namespace canrep {

// Parse failure with enough context to locate the offending part: byte
// positions for malformed JSON, dotted key paths for semantic problems.
struct RepFileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// {"p": [...], "lambda": ["p/q", ...]} with lambdas for arms 2..t.
std::string emit_algebra(const CanonicalAlgebra& alg);
CanonicalAlgebra parse_algebra(const std::string& text);

// Representation file: the algebra descriptor plus a "dims" map keyed by
// vertex labels (v0, x_i_j, vc) and a "mats" map keyed by arrow labels
// (alpha_i_j) holding nested arrays of rational strings. Every vertex and
// every arrow must be present; matrix shapes are validated against dims.
// parse_rep(emit_rep(m)) reproduces m exactly, and emission is byte
// deterministic.
std::string emit_rep(const Rep& m);
Rep parse_rep(const std::string& text);

// Every arrow matrix as a labeled pmatrix block.
std::string latex_matrices(const Rep& m);

}  // namespace canrep
