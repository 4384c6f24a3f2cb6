#pragma once

#include <string_view>

#include "pq/group.hpp"
#include "pq/magma.hpp"

namespace pq {

  // Normal subgroups of g in canonical order under setwise product. Element
  // labels are the member lists of the subgroups.
  FiniteMagma build_pg(GroupTable const& g, Limits const& limits = {});

  // a * b = a
  FiniteMagma trivial_quandle(std::size_t n);
  // i * j = 2j - i mod n
  FiniteMagma dihedral_quandle(std::size_t n);
  // a * b = t a + (1 - t) b mod n; t must be a unit mod n.
  FiniteMagma alexander_quandle(std::size_t n, long long t);
  // x * y = x + <x, y> y on (Z/n)^2 with <x, y> = x1 y2 - x2 y1; n odd.
  FiniteMagma symplectic_quandle(std::size_t n, Limits const& limits = {});
  // g * h = h^-e g h^e
  FiniteMagma conjugation_quandle(GroupTable const& g, long long exponent = 1);

  // Family spec strings: trivial:<n>, dihedral:<n>, alexander:<n>:<t>,
  // symplectic:<n>, conj:<group-spec>[:<exponent>], pg:<group-spec>.
  FiniteMagma build_example(std::string_view spec, Limits const& limits = {});

}  // namespace pq
