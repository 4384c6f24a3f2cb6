#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/dynamic_bitset.hpp>
#include <nlohmann/json.hpp>

#include "pq/error.hpp"

namespace pq {

  using Index      = std::uint32_t;
  using ElementSet = boost::dynamic_bitset<>;

  // Size caps shared by every construction. Each one can be overridden from
  // the command line; PQ_MAX_ORDER overrides max_order.
  struct Limits {
    std::size_t max_order     = 256;
    std::size_t max_subgroups = 4096;
    std::size_t max_magma     = 4096;
    std::size_t max_iso       = 64;

    static Limits from_env();
  };

  std::vector<Index> members_of(ElementSet const& set);

  // A finite group given by its Cayley table. The constructor checks
  // closure, identity, inverses and associativity exhaustively and throws
  // NotAGroup naming the first violation, so a GroupTable is always valid.
  class GroupTable {
   public:
    GroupTable(std::size_t               order,
               std::vector<Index>        cayley,
               std::vector<std::string>  labels,
               std::string               spec,
               Limits const&             limits = {});

    std::size_t order() const noexcept {
      return _order;
    }
    Index mul(Index a, Index b) const noexcept {
      return _cayley[a * _order + b];
    }
    Index identity() const noexcept {
      return _identity;
    }
    Index inverse(Index a) const noexcept {
      return _inverse[a];
    }
    std::string const& label(Index a) const {
      return _labels[a];
    }
    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }
    std::string const& spec() const noexcept {
      return _spec;
    }
    bool is_abelian() const;

   private:
    std::size_t              _order;
    std::vector<Index>       _cayley;
    std::vector<std::string> _labels;
    std::string              _spec;
    Index                    _identity = 0;
    std::vector<Index>       _inverse;
  };

  struct Subgroup {
    ElementSet         bits;
    std::vector<Index> members;  // sorted
    bool               is_normal = false;

    std::size_t size() const noexcept {
      return members.size();
    }
    bool contains(Index a) const {
      return bits.test(a);
    }
    friend bool operator==(Subgroup const& a, Subgroup const& b) {
      return a.bits == b.bits;
    }
  };

  struct ConjugacyPartition {
    std::vector<std::vector<Index>> blocks;
  };

  // Parses the group mini-language: Z<n>, D<2n>, Q8, S<n>, A<n> (n <= 5),
  // x-separated direct products of those, or file:<path> for a Cayley-table
  // document.
  GroupTable build_group(std::string_view spec, Limits const& limits = {});

  GroupTable group_from_json(nlohmann::json const& doc,
                             std::string           spec,
                             Limits const&         limits = {});
  nlohmann::json group_to_json(GroupTable const& g);

  bool is_subgroup(GroupTable const& g, ElementSet const& set);
  bool is_normal(GroupTable const& g, ElementSet const& set);

  // Smallest subgroup containing `generators`.
  ElementSet subgroup_closure(GroupTable const& g, ElementSet const& generators);

  // Throws NotAGroup when `set` is not a subgroup of g.
  Subgroup make_subgroup(GroupTable const& g, ElementSet set);

  ConjugacyPartition conjugacy_classes(GroupTable const& g);

  // Ascending by size, ties broken lexicographically on the sorted member
  // list.
  bool canonical_less(Subgroup const& a, Subgroup const& b);

  std::vector<Subgroup> enumerate_normal_subgroups(GroupTable const& g,
                                                   Limits const& limits = {});

  Subgroup subgroup_product(GroupTable const& g,
                            Subgroup const&   h,
                            Subgroup const&   k);

  // "{1,-1,i,-i}"
  std::string subgroup_label(GroupTable const& g, Subgroup const& h);

}  // namespace pq
