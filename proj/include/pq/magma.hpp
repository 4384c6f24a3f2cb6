#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pq/group.hpp"

namespace pq {

  // An n x n operation table. Quandles, racks and pseudoquandles are all
  // carried by this one type; which axioms hold is decided by check_axioms.
  class FiniteMagma {
   public:
    // Throws ParseError if the table is not closed or the shape is wrong.
    FiniteMagma(std::size_t              size,
                std::vector<Index>       op,
                std::vector<std::string> labels,
                std::string              provenance);

    std::size_t size() const noexcept {
      return _size;
    }
    Index op(Index a, Index b) const noexcept {
      return _op[a * _size + b];
    }
    std::vector<Index> const& table() const noexcept {
      return _op;
    }
    std::string const& label(Index a) const {
      return _labels[a];
    }
    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }
    std::string const& provenance() const noexcept {
      return _provenance;
    }

    friend bool operator==(FiniteMagma const& a, FiniteMagma const& b) {
      return a._size == b._size && a._op == b._op;
    }

   private:
    std::size_t              _size;
    std::vector<Index>       _op;
    std::vector<std::string> _labels;
    std::string              _provenance;
  };

  // Builds a magma from a function evaluated on every pair.
  template <typename Fn>
  FiniteMagma tabulate(std::size_t              size,
                       Fn&&                     fn,
                       std::vector<std::string> labels,
                       std::string              provenance) {
    std::vector<Index> op(size * size);
    for (std::size_t a = 0; a < size; ++a) {
      for (std::size_t b = 0; b < size; ++b) {
        op[a * size + b] = static_cast<Index>(fn(a, b));
      }
    }
    return FiniteMagma(size, std::move(op), std::move(labels),
                       std::move(provenance));
  }

  // Carrier a x b with componentwise operation; pair (i, j) has index
  // i * |b| + j.
  FiniteMagma direct_sum(FiniteMagma const& a,
                         FiniteMagma const& b,
                         Limits const&      limits = {});

  // {"size": n, "labels": [...], "op": [[...]]}, 0-based.
  nlohmann::json magma_to_json(FiniteMagma const& m);
  FiniteMagma    magma_from_json(nlohmann::json const& doc,
                                 Limits const&         limits = {});

  bool is_commutative(FiniteMagma const& m);
  bool is_idempotent(FiniteMagma const& m);

}  // namespace pq
