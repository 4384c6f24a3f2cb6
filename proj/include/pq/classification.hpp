#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "pq/isomorphism.hpp"
#include "pq/magma.hpp"

namespace pq {

  struct PrimePower {
    std::uint64_t prime;
    unsigned      exponent;

    friend bool operator==(PrimePower const&, PrimePower const&) = default;
    friend auto operator<=>(PrimePower const&, PrimePower const&) = default;
  };

  // Z^free_rank ⊕ Z/p1^m1 ⊕ ... with prime powers ascending by (p, m).
  struct AbelianSpec {
    unsigned                free_rank = 0;
    std::vector<PrimePower> prime_powers;

    friend bool operator==(AbelianSpec const&, AbelianSpec const&) = default;
  };

  struct LFactor {
    enum class Kind { max_chain, gcd_segment };
    Kind        kind;
    std::size_t size;  // k for a chain [k], the bound N for a gcd segment

    friend bool operator==(LFactor const&, LFactor const&) = default;
  };

  struct LStructure {
    std::vector<LFactor> factors;
    FiniteMagma          realized;
  };

  // {1..k} under max, element i standing for i + 1.
  FiniteMagma max_chain(std::size_t k);
  // {1..k} under min.
  FiniteMagma min_chain(std::size_t k);
  // {1..N} under gcd.
  FiniteMagma gcd_segment(std::size_t bound);
  // The divisors of n under gcd, ascending.
  FiniteMagma divisor_gcd(std::size_t n);

  // Accepts Z<n> factors separated by x; a bare Z is a free factor. Any other
  // factor family throws NotAbelian.
  AbelianSpec primary_decomposition(std::string_view spec);

  // Free factors become gcd segments truncated to {1..bound}, placed first;
  // each p^m becomes the chain [m + 1].
  LStructure build_L(AbelianSpec const& spec,
                     std::size_t        bound,
                     Limits const&      limits = {});

  // "[3]⊕[2]", "Z+[1..30]⊕[2]", "[1]" for the trivial group.
  std::string describe(LStructure const& l);
  nlohmann::json l_structure_json(LStructure const& l);

  // The subgroups nZ for n in 1..bound, with nZ + mZ computed as the least
  // positive value of a*n + b*m. The group side of the comparison for free
  // factors.
  FiniteMagma truncated_integer_subgroups(std::size_t bound);

  // Compares P_G with L. For finite specs P_G is computed from the group
  // table; free factors use truncated_integer_subgroups. Throws
  // TheoremViolation when no isomorphism exists.
  IsomorphismWitness verify_theorem1(std::string_view g_spec,
                                     std::size_t      bound,
                                     Limits const&    limits = {});

}  // namespace pq
