#include "pq/axioms.hpp"

namespace pq {

  std::string_view to_string(Classification c) {
    switch (c) {
      case Classification::quandle:
        return "quandle";
      case Classification::rack:
        return "rack";
      case Classification::pseudoquandle:
        return "pseudoquandle";
      default:
        return "magma-only";
    }
  }

  std::vector<Index> right_division_solutions(FiniteMagma const& m,
                                              Index              p,
                                              Index              q) {
    std::vector<Index> out;
    for (Index r = 0; r < m.size(); ++r) {
      if (m.op(r, q) == p) {
        out.push_back(r);
      }
    }
    return out;
  }

  AxiomReport check_axioms(FiniteMagma const& m) {
    auto const  n = static_cast<Index>(m.size());
    AxiomReport report;

    for (Index a = 0; a < n && report.idempotent; ++a) {
      if (m.op(a, a) != a) {
        report.idempotent                 = false;
        report.idempotence_counterexample = a;
      }
    }

    for (Index a = 0; a < n && report.commutative; ++a) {
      for (Index b = 0; b < n; ++b) {
        if (m.op(a, b) != m.op(b, a)) {
          report.commutative                  = false;
          report.commutativity_counterexample = std::pair{a, b};
          break;
        }
      }
    }

    for (Index p = 0; p < n && report.right_self_distributive; ++p) {
      for (Index q = 0; q < n && report.right_self_distributive; ++q) {
        Index const pq = m.op(p, q);
        for (Index r = 0; r < n; ++r) {
          if (m.op(pq, r) != m.op(m.op(p, r), m.op(q, r))) {
            report.right_self_distributive              = false;
            report.right_distributivity_counterexample = {p, q, r};
            break;
          }
        }
      }
    }

    for (Index r = 0; r < n && report.left_self_distributive; ++r) {
      for (Index p = 0; p < n && report.left_self_distributive; ++p) {
        Index const rp = m.op(r, p);
        for (Index q = 0; q < n; ++q) {
          if (m.op(r, m.op(p, q)) != m.op(rp, m.op(r, q))) {
            report.left_self_distributive              = false;
            report.left_distributivity_counterexample = {r, p, q};
            break;
          }
        }
      }
    }

    // solutions[p * n + q] = #{r : r * q = p}
    std::vector<std::size_t> solutions(std::size_t(n) * n, 0);
    for (Index r = 0; r < n; ++r) {
      for (Index q = 0; q < n; ++q) {
        ++solutions[std::size_t(m.op(r, q)) * n + q];
      }
    }
    std::optional<DivisionWitness> first;
    for (Index p = 0; p < n && !report.bijectivity_witness; ++p) {
      for (Index q = 0; q < n; ++q) {
        std::size_t const s = solutions[std::size_t(p) * n + q];
        if (s == 1) {
          continue;
        }
        if (!first) {
          first = DivisionWitness{p, q, s};
        }
        if (s == 0 && solutions[std::size_t(q) * n + p] == 0) {
          report.bijectivity_witness = DivisionWitness{p, q, 0};
          break;
        }
      }
    }
    if (!report.bijectivity_witness) {
      report.bijectivity_witness = first;
    }
    report.right_translations_bijective = !report.bijectivity_witness.has_value();

    bool const rsd = report.right_self_distributive;
    bool const bij = report.right_translations_bijective;
    if (rsd && bij) {
      report.classification
          = report.idempotent ? Classification::quandle : Classification::rack;
    } else if (rsd && report.idempotent) {
      report.classification = Classification::pseudoquandle;
    } else {
      report.classification = Classification::magma_only;
    }
    return report;
  }

}  // namespace pq
