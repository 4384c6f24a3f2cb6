#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pq/magma.hpp"

namespace pq {

  // Multiplication table written with 1-based subscripts: entry (i, j) is the
  // subscript of x_i * x_j.
  struct PQMatrix {
    std::size_t                   n = 0;
    std::vector<std::vector<int>> entries;
  };

  struct MatrixReport {
    bool symmetric      = false;
    long trace          = 0;
    long expected_trace = 0;  // n(n+1)/2
    bool trace_ok       = false;
    bool simple_form    = false;  // exactly [[1,2],[2,2]]
  };

  PQMatrix matrix_of(FiniteMagma const& m);

  // Symmetry is the exact, integer form of diagonalizability used here: a
  // real symmetric matrix is orthogonally diagonalizable. When source_is_pg
  // is set an asymmetric matrix is a defect and throws TheoremViolation.
  MatrixReport matrix_report(PQMatrix const& m, bool source_is_pg);

  // Rows of space-separated subscripts, one row per line.
  std::string    render_text(PQMatrix const& m);
  nlohmann::json render_json(PQMatrix const& m, MatrixReport const& r);

}  // namespace pq
