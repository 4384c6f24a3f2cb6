#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "pq/magma.hpp"

namespace pq {

  // ker(p) = {q : p * q = p and q * p = p}. Both conditions are required;
  // with the one-sided version the trivial quandle would give every element
  // the same kernel.
  ElementSet kernel(FiniteMagma const& m, Index p);
  ElementSet cokernel(FiniteMagma const& m, Index p);
  // ker(p) - ker(q) when q is in ker(p), otherwise empty.
  ElementSet relative_cokernel(FiniteMagma const& m, Index q, Index p);

  struct KernelTable {
    std::vector<ElementSet> ker;
    std::vector<ElementSet> coker;
    bool                    commutative = false;

    std::size_t size() const noexcept {
      return ker.size();
    }
  };

  KernelTable kernel_table(FiniteMagma const& m);

  struct ChainReport {
    bool               chain_found = false;
    std::vector<Index> ordering;  // ker(ordering[0]) ⊆ ker(ordering[1]) ⊆ ...
  };

  // Sorting by kernel size and checking consecutive inclusions is complete:
  // distinct kernels of equal size cannot nest.
  ChainReport detect_chain(KernelTable const& kt);

  struct ClassEquationReport {
    std::vector<Index>       ordering;
    std::size_t              base = 0;
    std::vector<std::size_t> increments;
    std::size_t              total = 0;
  };

  // Throws NoChain when the ascending chain criterion fails.
  ClassEquationReport class_equation(FiniteMagma const& m);

  enum class ClaimStatus { pass, fail, skipped };
  // asserted: the structure is a commutative pseudoquandle (and, for the
  // cokernel claim, admits an ascending chain), so a failure is a defect.
  // empirical: checked anyway; failures are recorded as data.
  enum class ClaimTier { asserted, empirical };

  std::string_view to_string(ClaimStatus s);
  std::string_view to_string(ClaimTier t);

  struct ClaimResult {
    std::string        name;
    ClaimStatus        status = ClaimStatus::pass;
    ClaimTier          tier   = ClaimTier::asserted;
    std::vector<Index> counterexample;  // 0-based element indices
  };

  struct PropertyReport {
    bool                     commutative = false;
    bool                     hypothesis_met = false;
    std::vector<ClaimResult> claims;

    ClaimResult const& claim(std::string_view name) const;
    bool               asserted_all_pass() const;
    bool               all_checked_pass() const;
  };

  // Claim names, in report order.
  inline constexpr std::string_view kClaimNames[] = {
      "kernel_closure",      "intersection_inclusion", "membership_inclusion",
      "kernel_idempotence",  "translate_closure",      "disjointness_lemma",
      "cardinality_bound",   "phi_bijective",          "lagrange_identity",
      "coker_chain_closure"};

  PropertyReport verify_properties(FiniteMagma const& m);

  // For every p, f(ker p) ⊆ ker(f(p)); when f is a bijection the two sets
  // must be equal. Throws NotAHomomorphism if f is not one.
  bool verify_hom_kernel_inclusion(FiniteMagma const&     a,
                                   FiniteMagma const&     b,
                                   std::span<Index const> f);

  // Sorted 1-based index list.
  std::vector<Index> one_based(ElementSet const& s);

  nlohmann::json kernels_json(FiniteMagma const& m);
  nlohmann::json properties_json(PropertyReport const& r);

}  // namespace pq
