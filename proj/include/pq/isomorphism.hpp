#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pq/magma.hpp"

namespace pq {

  struct IsomorphismWitness {
    std::vector<Index> mapping;  // mapping[a] = image of a
    bool               verified = false;
  };

  // True iff mapping is a bijection with mapping(x * y) = mapping(x) * mapping(y).
  bool is_isomorphism(FiniteMagma const&    a,
                      FiniteMagma const&    b,
                      std::span<Index const> mapping);

  IsomorphismWitness inverse(IsomorphismWitness const& w);

  // Exact backtracking search. Candidates are restricted by iterated
  // isomorphism-invariant element colours (kernel size, idempotence, row and
  // column statistics, then the multiset of colours seen along each row and
  // column), and every assignment forces the images of all products of
  // already-mapped elements. Throws SizeLimit above limits.max_iso.
  std::optional<IsomorphismWitness> find_isomorphism(FiniteMagma const& a,
                                                     FiniteMagma const& b,
                                                     Limits const& limits = {});

  // Tries every permutation. Reference search for small sizes (at most 9).
  std::optional<IsomorphismWitness>
  find_isomorphism_unpruned(FiniteMagma const& a, FiniteMagma const& b);

  // Element colours after refinement, comparable across a and b. Exposed for
  // testing the invariance of the pruning keys.
  std::pair<std::vector<std::size_t>, std::vector<std::size_t>>
  refined_colours(FiniteMagma const& a, FiniteMagma const& b);

  struct HomomorphismCheck {
    bool                                   holds = true;
    std::optional<std::pair<Index, Index>> counterexample;
  };

  // Throws BadMap if f has the wrong length or an image is out of range.
  HomomorphismCheck check_homomorphism(FiniteMagma const&    a,
                                       FiniteMagma const&    b,
                                       std::span<Index const> f);

}  // namespace pq
