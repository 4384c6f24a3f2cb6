#pragma once

#include <string_view>

#include "pq/magma.hpp"

namespace pq {

  // Resolves any magma source accepted on the command line: the family specs
  // of build_example, file:<path> (a magma document), and the fixtures
  // max:<k>, min:<k>, gcd:<N>, L:<abelian-spec> (free factors truncated to
  // `bound`).
  FiniteMagma load_source(std::string_view spec,
                          Limits const&    limits = {},
                          std::size_t      bound  = 30);

  bool is_pg_source(std::string_view spec);

}  // namespace pq
