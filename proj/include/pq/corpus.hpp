#pragma once

#include <string>
#include <vector>

#include "pq/magma.hpp"

namespace pq {

  // Every abelian group of order <= max_order, one spec per isomorphism
  // class, written as primary factors ascending by (p, m): "Z2xZ4xZ3".
  std::vector<std::string> abelian_group_specs(std::size_t max_order);

  // The built-in verification corpus: all abelian groups of order <= 32,
  // D6..D16, Q8, S3, S4, A4, A5. Sorted by spec string.
  std::vector<std::string> corpus_group_specs();

  struct NamedMagma {
    std::string name;
    FiniteMagma magma;
  };

  // P_G for every corpus group plus the quandle families, chains, gcd
  // structures and L structures used by the verification suites.
  std::vector<NamedMagma> corpus_magmas(Limits const& limits = {});

}  // namespace pq
