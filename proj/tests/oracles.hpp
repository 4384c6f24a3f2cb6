#pragma once

// Brute-force reference computations. None of these call into the library
// algorithms they are used to check; they only read the Cayley / operation
// tables.

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "pq/group.hpp"
#include "pq/magma.hpp"

namespace pq::oracle {

  using Set = std::set<Index>;

  inline Index find_inverse(GroupTable const& g, Index a) {
    for (Index b = 0; b < g.order(); ++b) {
      if (g.mul(a, b) == g.identity()) {
        return b;
      }
    }
    return static_cast<Index>(g.order());
  }

  // a ~ b iff x a = b x for some x.
  inline std::vector<Set> conjugacy_classes(GroupTable const& g) {
    std::vector<Set>  classes;
    std::vector<bool> seen(g.order(), false);
    for (Index a = 0; a < g.order(); ++a) {
      if (seen[a]) {
        continue;
      }
      Set cls;
      for (Index b = 0; b < g.order(); ++b) {
        for (Index x = 0; x < g.order(); ++x) {
          if (g.mul(x, a) == g.mul(b, x)) {
            cls.insert(b);
            break;
          }
        }
      }
      for (Index b : cls) {
        seen[b] = true;
      }
      classes.push_back(cls);
    }
    return classes;
  }

  // Repeatedly adds all pairwise products until nothing changes.
  inline Set close(GroupTable const& g, Set s) {
    s.insert(g.identity());
    while (true) {
      Set next = s;
      for (Index a : s) {
        for (Index b : s) {
          next.insert(g.mul(a, b));
        }
      }
      if (next.size() == s.size()) {
        return s;
      }
      s = std::move(next);
    }
  }

  // Every subgroup is a join of cyclic subgroups, so joining cyclic
  // subgroups into the known list until it stops growing finds all of them.
  inline std::set<Set> all_subgroups(GroupTable const& g) {
    std::vector<Set> cyclic;
    for (Index a = 0; a < g.order(); ++a) {
      cyclic.push_back(close(g, {a}));
    }
    std::set<Set> found(cyclic.begin(), cyclic.end());
    found.insert(Set{g.identity()});
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<Set> current(found.begin(), found.end());
      for (auto const& h : current) {
        for (auto const& c : cyclic) {
          Set u = h;
          u.insert(c.begin(), c.end());
          if (found.insert(close(g, u)).second) {
            grew = true;
          }
        }
      }
    }
    return found;
  }

  inline bool is_normal(GroupTable const& g, Set const& h) {
    for (Index x = 0; x < g.order(); ++x) {
      Index const xi = find_inverse(g, x);
      for (Index a : h) {
        if (!h.count(g.mul(g.mul(x, a), xi))) {
          return false;
        }
      }
    }
    return true;
  }

  inline std::set<Set> normal_subgroups(GroupTable const& g) {
    std::set<Set> out;
    for (auto const& h : all_subgroups(g)) {
      if (is_normal(g, h)) {
        out.insert(h);
      }
    }
    return out;
  }

  inline Set product(GroupTable const& g, Set const& h, Set const& k) {
    Set out;
    for (Index a : h) {
      for (Index b : k) {
        out.insert(g.mul(a, b));
      }
    }
    return out;
  }

  inline bool is_simple(GroupTable const& g) {
    return g.order() > 1 && normal_subgroups(g).size() == 2;
  }

  inline Set kernel(FiniteMagma const& m, Index p) {
    Set out;
    for (Index q = 0; q < m.size(); ++q) {
      if (m.op(p, q) == p && m.op(q, p) == p) {
        out.insert(q);
      }
    }
    return out;
  }

}  // namespace pq::oracle
