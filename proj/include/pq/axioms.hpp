#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "pq/magma.hpp"

namespace pq {

  enum class Classification { quandle, rack, pseudoquandle, magma_only };

  std::string_view to_string(Classification c);

  // A pair (p, q) for which p = r * q does not have exactly one solution r.
  struct DivisionWitness {
    Index       p;
    Index       q;
    std::size_t solutions;  // 0 or >= 2
  };

  struct AxiomReport {
    bool                               idempotent = true;
    std::optional<Index>               idempotence_counterexample;
    bool                               right_self_distributive = true;
    std::optional<std::array<Index, 3>> right_distributivity_counterexample;
    bool                               left_self_distributive = true;
    std::optional<std::array<Index, 3>> left_distributivity_counterexample;
    bool                               commutative = true;
    std::optional<std::pair<Index, Index>> commutativity_counterexample;
    bool                               right_translations_bijective = true;
    std::optional<DivisionWitness>     bijectivity_witness;
    Classification                     classification = Classification::quandle;
  };

  // Exhaustive check of idempotence, both self-distributivities,
  // commutativity and bijectivity of every right translation x -> x * q.
  //
  // Counterexamples are the first violations in lexicographic order, with one
  // refinement for bijectivity: if some pair (p, q) admits no r with
  // p = r * q and also no r with q = r * p, the first such mutually unsolvable
  // pair is reported; otherwise the first pair whose equation p = r * q does
  // not have exactly one solution. Right distributivity triples (p, q, r)
  // violate (p*q)*r = (p*r)*(q*r); left triples (r, p, q) violate
  // r*(p*q) = (r*p)*(r*q).
  AxiomReport check_axioms(FiniteMagma const& m);

  // All r with p = r * q.
  std::vector<Index> right_division_solutions(FiniteMagma const& m,
                                              Index              p,
                                              Index              q);

}  // namespace pq
