#include "pq/kernels.hpp"

#include <algorithm>

#include "pq/axioms.hpp"
#include "pq/isomorphism.hpp"

namespace pq {

  ElementSet kernel(FiniteMagma const& m, Index p) {
    ElementSet out(m.size());
    for (Index q = 0; q < m.size(); ++q) {
      if (m.op(p, q) == p && m.op(q, p) == p) {
        out.set(q);
      }
    }
    return out;
  }

  ElementSet cokernel(FiniteMagma const& m, Index p) {
    return ~kernel(m, p);
  }

  ElementSet relative_cokernel(FiniteMagma const& m, Index q, Index p) {
    ElementSet const kp = kernel(m, p);
    if (!kp.test(q)) {
      return ElementSet(m.size());
    }
    return kp - kernel(m, q);
  }

  KernelTable kernel_table(FiniteMagma const& m) {
    KernelTable kt;
    for (Index p = 0; p < m.size(); ++p) {
      kt.ker.push_back(kernel(m, p));
      kt.coker.push_back(~kt.ker.back());
    }
    kt.commutative = is_commutative(m);
    return kt;
  }

  ChainReport detect_chain(KernelTable const& kt) {
    ChainReport r;
    r.ordering.resize(kt.size());
    for (Index i = 0; i < kt.size(); ++i) {
      r.ordering[i] = i;
    }
    std::stable_sort(r.ordering.begin(), r.ordering.end(), [&](Index a, Index b) {
      return kt.ker[a].count() < kt.ker[b].count();
    });
    for (std::size_t k = 0; k + 1 < r.ordering.size(); ++k) {
      if (!kt.ker[r.ordering[k]].is_subset_of(kt.ker[r.ordering[k + 1]])) {
        r.ordering.clear();
        return r;
      }
    }
    // The chain forces the last kernel to be everything; without idempotence
    // the inclusions alone do not.
    if (kt.ker[r.ordering.back()].count() != kt.size()) {
      r.ordering.clear();
      return r;
    }
    r.chain_found = true;
    return r;
  }

  ClassEquationReport class_equation(FiniteMagma const& m) {
    auto const kt    = kernel_table(m);
    auto const chain = detect_chain(kt);
    if (!chain.chain_found) {
      throw NoChain(m.provenance() + " does not satisfy the ascending chain criterion");
    }
    ClassEquationReport r;
    r.ordering = chain.ordering;
    r.base     = kt.ker[r.ordering.front()].count();
    r.total    = r.base;
    for (std::size_t k = 0; k + 1 < r.ordering.size(); ++k) {
      auto const inc = relative_cokernel(m, r.ordering[k], r.ordering[k + 1]).count();
      r.increments.push_back(inc);
      r.total += inc;
    }
    return r;
  }

  std::string_view to_string(ClaimStatus s) {
    switch (s) {
      case ClaimStatus::pass:
        return "pass";
      case ClaimStatus::fail:
        return "fail";
      default:
        return "skipped";
    }
  }

  std::string_view to_string(ClaimTier t) {
    return t == ClaimTier::asserted ? "asserted" : "empirical";
  }

  ClaimResult const& PropertyReport::claim(std::string_view name) const {
    for (auto const& c : claims) {
      if (c.name == name) {
        return c;
      }
    }
    throw std::out_of_range("no claim named " + std::string(name));
  }

  bool PropertyReport::asserted_all_pass() const {
    return std::none_of(claims.begin(), claims.end(), [](auto const& c) {
      return c.tier == ClaimTier::asserted && c.status == ClaimStatus::fail;
    });
  }

  bool PropertyReport::all_checked_pass() const {
    return std::none_of(claims.begin(), claims.end(),
                        [](auto const& c) { return c.status == ClaimStatus::fail; });
  }

  namespace {

    // First (x, y) in s with x * y outside s.
    std::optional<std::pair<Index, Index>> closure_violation(FiniteMagma const& m,
                                                             ElementSet const&  s) {
      auto const members = members_of(s);
      for (Index x : members) {
        for (Index y : members) {
          if (!s.test(m.op(x, y))) {
            return std::pair{x, y};
          }
        }
      }
      return std::nullopt;
    }

    void fail(ClaimResult& c, std::vector<Index> cx) {
      if (c.status != ClaimStatus::fail) {
        c.status         = ClaimStatus::fail;
        c.counterexample = std::move(cx);
      }
    }

  }  // namespace

  PropertyReport verify_properties(FiniteMagma const& m) {
    auto const     kt = kernel_table(m);
    auto const     n  = static_cast<Index>(m.size());
    auto const     ax = check_axioms(m);
    PropertyReport r;
    r.commutative    = kt.commutative;
    r.hypothesis_met = ax.commutative && ax.idempotent && ax.right_self_distributive;
    ClaimTier const tier = r.hypothesis_met ? ClaimTier::asserted : ClaimTier::empirical;
    for (auto name : kClaimNames) {
      r.claims.push_back({std::string(name), ClaimStatus::pass, tier, {}});
    }
    auto& closure      = r.claims[0];
    auto& intersection = r.claims[1];
    auto& membership   = r.claims[2];
    auto& idempotence  = r.claims[3];
    auto& translate    = r.claims[4];
    auto& disjoint     = r.claims[5];
    auto& bound        = r.claims[6];
    auto& phi          = r.claims[7];
    auto& lagrange     = r.claims[8];
    auto& coker_chain  = r.claims[9];

    for (Index p = 0; p < n; ++p) {
      auto const& kp = kt.ker[p];

      if (auto v = closure_violation(m, kp)) {
        fail(closure, {p, v->first, v->second});
      }

      ElementSet square(n);
      for (Index x : members_of(kp)) {
        for (Index y : members_of(kp)) {
          square.set(m.op(x, y));
        }
      }
      if (square != kp) {
        fail(idempotence, {p});
      }

      for (Index q = 0; q < n; ++q) {
        auto const& kq = kt.ker[q];

        ElementSet const meet = kp & kq;
        if (!meet.is_subset_of(kt.ker[m.op(p, q)])) {
          auto const x = (meet - kt.ker[m.op(p, q)]).find_first();
          fail(intersection, {p, q, static_cast<Index>(x)});
        }

        if (kq.test(p) && !kp.is_subset_of(kq)) {
          auto const x = (kp - kq).find_first();
          fail(membership, {p, q, static_cast<Index>(x)});
        }

        ElementSet translate_set(n);
        for (Index x : members_of(kp)) {
          translate_set.set(m.op(q, x));
        }
        if (closure_violation(m, translate_set)) {
          fail(translate, {p, q});
        }

        if (meet.none()) {
          if (!kq.is_subset_of(kt.coker[p]) || !kp.is_subset_of(kt.coker[q])) {
            fail(disjoint, {p, q});
          }
          if (kp.count() == kq.count() && n < 2 * kp.count()) {
            fail(bound, {p, q});
          }
        }

        if (p != q && kp == kq) {
          fail(phi, {p, q});
        }

        if (kp.test(q)) {
          std::size_t const rhs = kq.count() + kt.coker[p].count()
                                  + relative_cokernel(m, q, p).count();
          if (rhs != n) {
            fail(lagrange, {p, q});
          }
        }
      }
    }

    auto const chain = detect_chain(kt);
    if (!chain.chain_found) {
      coker_chain.status = ClaimStatus::skipped;
      coker_chain.tier   = ClaimTier::empirical;
    } else {
      for (Index p : chain.ordering) {
        if (auto v = closure_violation(m, kt.coker[p])) {
          fail(coker_chain, {p, v->first, v->second});
        }
      }
    }
    return r;
  }

  bool verify_hom_kernel_inclusion(FiniteMagma const&     a,
                                   FiniteMagma const&     b,
                                   std::span<Index const> f) {
    if (!check_homomorphism(a, b, f).holds) {
      throw NotAHomomorphism("map from " + a.provenance() + " to " + b.provenance()
                             + " is not a homomorphism");
    }
    bool const bijective = is_isomorphism(a, b, f);
    for (Index p = 0; p < a.size(); ++p) {
      ElementSet image(b.size());
      for (Index x : members_of(kernel(a, p))) {
        image.set(f[x]);
      }
      ElementSet const target = kernel(b, f[p]);
      if (!image.is_subset_of(target)) {
        return false;
      }
      if (bijective && image != target) {
        return false;
      }
    }
    return true;
  }

  std::vector<Index> one_based(ElementSet const& s) {
    auto out = members_of(s);
    for (auto& x : out) {
      ++x;
    }
    return out;
  }

  nlohmann::json kernels_json(FiniteMagma const& m) {
    auto const     kt = kernel_table(m);
    nlohmann::json kernels = nlohmann::json::array();
    for (Index p = 0; p < kt.size(); ++p) {
      kernels.push_back({{"element", p + 1},
                         {"ker", one_based(kt.ker[p])},
                         {"coker", one_based(kt.coker[p])}});
    }
    nlohmann::json out{{"size", m.size()},
                       {"commutative", kt.commutative},
                       {"kernels", kernels}};
    auto const chain = detect_chain(kt);
    out["chain_found"] = chain.chain_found;
    if (chain.chain_found) {
      auto const ce = class_equation(m);
      std::vector<Index> ordering;
      for (auto x : ce.ordering) {
        ordering.push_back(x + 1);
      }
      out["chain"]          = ordering;
      out["class_equation"] = {{"base", ce.base},
                               {"increments", ce.increments},
                               {"total", ce.total}};
    }
    return out;
  }

  nlohmann::json properties_json(PropertyReport const& r) {
    nlohmann::json claims = nlohmann::json::object();
    for (auto const& c : r.claims) {
      nlohmann::json entry{{"status", to_string(c.status)}, {"tier", to_string(c.tier)}};
      if (c.status == ClaimStatus::fail) {
        std::vector<Index> cx;
        for (auto x : c.counterexample) {
          cx.push_back(x + 1);
        }
        entry["counterexample"] = cx;
      }
      claims[c.name] = entry;
    }
    return {{"commutative", r.commutative},
            {"hypothesis_met", r.hypothesis_met},
            {"asserted_all_pass", r.asserted_all_pass()},
            {"claims", claims}};
  }

}  // namespace pq
