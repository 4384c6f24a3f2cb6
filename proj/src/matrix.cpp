#include "pq/matrix.hpp"

namespace pq {

  PQMatrix matrix_of(FiniteMagma const& m) {
    PQMatrix out;
    out.n = m.size();
    out.entries.assign(out.n, std::vector<int>(out.n));
    for (Index i = 0; i < out.n; ++i) {
      for (Index j = 0; j < out.n; ++j) {
        out.entries[i][j] = static_cast<int>(m.op(i, j)) + 1;
      }
    }
    return out;
  }

  MatrixReport matrix_report(PQMatrix const& m, bool source_is_pg) {
    MatrixReport r;
    r.symmetric = true;
    for (std::size_t i = 0; i < m.n; ++i) {
      r.trace += m.entries[i][i];
      for (std::size_t j = i + 1; j < m.n; ++j) {
        if (m.entries[i][j] != m.entries[j][i]) {
          r.symmetric = false;
        }
      }
    }
    auto const n     = static_cast<long>(m.n);
    r.expected_trace = n * (n + 1) / 2;
    r.trace_ok       = r.trace == r.expected_trace;
    r.simple_form    = m.entries == std::vector<std::vector<int>>{{1, 2}, {2, 2}};
    if (source_is_pg && !r.symmetric) {
      throw TheoremViolation("matrix of a normal-subgroup pseudoquandle is not symmetric");
    }
    return r;
  }

  std::string render_text(PQMatrix const& m) {
    std::string out;
    for (auto const& row : m.entries) {
      for (std::size_t j = 0; j < row.size(); ++j) {
        out += (j ? " " : "") + std::to_string(row[j]);
      }
      out += "\n";
    }
    return out;
  }

  nlohmann::json render_json(PQMatrix const& m, MatrixReport const& r) {
    return {{"n", m.n},
            {"entries", m.entries},
            {"symmetric", r.symmetric},
            {"trace", r.trace},
            {"expected_trace", r.expected_trace},
            {"trace_ok", r.trace_ok},
            {"simple_form", r.simple_form}};
  }

}  // namespace pq
