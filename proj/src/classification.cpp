#include "pq/classification.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "pq/families.hpp"
#include "pq/group.hpp"

namespace pq {

  namespace {

    std::vector<std::string> one_to(std::size_t k) {
      std::vector<std::string> labels;
      for (std::size_t i = 1; i <= k; ++i) {
        labels.push_back(std::to_string(i));
      }
      return labels;
    }

    std::vector<std::string_view> factors_of(std::string_view spec) {
      std::vector<std::string_view> parts;
      std::size_t                   start = 0;
      while (true) {
        auto pos = spec.find('x', start);
        parts.push_back(spec.substr(start, pos - start));
        if (pos == std::string_view::npos) {
          return parts;
        }
        start = pos + 1;
      }
    }

    std::string torsion_spec(std::string_view spec) {
      std::string out;
      for (auto token : factors_of(spec)) {
        if (token == "Z") {
          continue;
        }
        out += (out.empty() ? "" : "x") + std::string(token);
      }
      return out.empty() ? "Z1" : out;
    }

  }  // namespace

  FiniteMagma max_chain(std::size_t k) {
    return tabulate(
        k, [](std::size_t i, std::size_t j) { return std::max(i, j); }, one_to(k),
        "[" + std::to_string(k) + "]max");
  }

  FiniteMagma min_chain(std::size_t k) {
    return tabulate(
        k, [](std::size_t i, std::size_t j) { return std::min(i, j); }, one_to(k),
        "[" + std::to_string(k) + "]min");
  }

  FiniteMagma gcd_segment(std::size_t bound) {
    return tabulate(
        bound,
        [](std::size_t i, std::size_t j) { return std::gcd(i + 1, j + 1) - 1; },
        one_to(bound), "gcd[1.." + std::to_string(bound) + "]");
  }

  FiniteMagma divisor_gcd(std::size_t n) {
    std::vector<std::size_t> divisors;
    for (std::size_t d = 1; d <= n; ++d) {
      if (n % d == 0) {
        divisors.push_back(d);
      }
    }
    std::vector<std::string> labels;
    for (auto d : divisors) {
      labels.push_back(std::to_string(d));
    }
    return tabulate(
        divisors.size(),
        [&](std::size_t i, std::size_t j) {
          auto const g = std::gcd(divisors[i], divisors[j]);
          return std::find(divisors.begin(), divisors.end(), g) - divisors.begin();
        },
        std::move(labels), "divisors(" + std::to_string(n) + ")");
  }

  AbelianSpec primary_decomposition(std::string_view spec) {
    AbelianSpec out;
    for (auto token : factors_of(spec)) {
      if (token == "Z") {
        ++out.free_rank;
        continue;
      }
      if (token.empty() || token[0] != 'Z') {
        if (!token.empty()
            && (token[0] == 'D' || token[0] == 'Q' || token[0] == 'S'
                || token[0] == 'A')) {
          throw NotAbelian("'" + std::string(token)
                           + "' is not a cyclic factor; only Z<n> products are abelian specs");
        }
        throw ParseError("malformed abelian factor '" + std::string(token) + "'");
      }
      std::uint64_t n = 0;
      auto          digits = token.substr(1);
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
      if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()
          || n == 0) {
        throw ParseError("malformed abelian factor '" + std::string(token) + "'");
      }
      for (std::uint64_t p = 2; p * p <= n; ++p) {
        unsigned m = 0;
        while (n % p == 0) {
          n /= p;
          ++m;
        }
        if (m > 0) {
          out.prime_powers.push_back({p, m});
        }
      }
      if (n > 1) {
        out.prime_powers.push_back({n, 1});
      }
    }
    std::sort(out.prime_powers.begin(), out.prime_powers.end());
    return out;
  }

  LStructure build_L(AbelianSpec const& spec, std::size_t bound, Limits const& limits) {
    if (bound == 0) {
      throw BadParameter("gcd segment bound must be positive");
    }
    std::vector<LFactor> factors;
    std::size_t          size = 1;
    for (unsigned i = 0; i < spec.free_rank; ++i) {
      factors.push_back({LFactor::Kind::gcd_segment, bound});
      size *= bound;
      if (size > limits.max_magma) {
        throw SizeLimit("L structure exceeds the magma cap "
                        + std::to_string(limits.max_magma));
      }
    }
    for (auto const& pp : spec.prime_powers) {
      factors.push_back({LFactor::Kind::max_chain, pp.exponent + std::size_t(1)});
      size *= pp.exponent + 1;
      if (size > limits.max_magma) {
        throw SizeLimit("L structure exceeds the magma cap "
                        + std::to_string(limits.max_magma));
      }
    }

    std::optional<FiniteMagma> realized;
    for (auto const& f : factors) {
      FiniteMagma part = f.kind == LFactor::Kind::max_chain ? max_chain(f.size)
                                                            : gcd_segment(f.size);
      realized = realized ? direct_sum(*realized, part, limits) : std::move(part);
    }
    if (!realized) {
      realized = max_chain(1);
    }
    LStructure l{std::move(factors), std::move(*realized)};
    l.realized = FiniteMagma(l.realized.size(), l.realized.table(),
                             l.realized.labels(), "L" + describe(l));
    return l;
  }

  std::string describe(LStructure const& l) {
    if (l.factors.empty()) {
      return "[1]";
    }
    std::string out;
    for (std::size_t i = 0; i < l.factors.size(); ++i) {
      auto const& f = l.factors[i];
      out += i ? "⊕" : "";
      out += f.kind == LFactor::Kind::max_chain
                 ? "[" + std::to_string(f.size) + "]"
                 : "Z+[1.." + std::to_string(f.size) + "]";
    }
    return out;
  }

  nlohmann::json l_structure_json(LStructure const& l) {
    nlohmann::json factors = nlohmann::json::array();
    for (auto const& f : l.factors) {
      if (f.kind == LFactor::Kind::max_chain) {
        factors.push_back({{"kind", "max"}, {"size", f.size}});
      } else {
        factors.push_back({{"kind", "gcd"}, {"bound", f.size}});
      }
    }
    return {{"description", describe(l)}, {"factors", factors}, {"realized", magma_to_json(l.realized)}};
  }

  FiniteMagma truncated_integer_subgroups(std::size_t bound) {
    auto const limit = static_cast<long long>(bound);
    return tabulate(
        bound,
        [limit](std::size_t i, std::size_t j) {
          auto const n = static_cast<long long>(i + 1), m = static_cast<long long>(j + 1);
          long long  least = n;
          for (long long a = -limit; a <= limit; ++a) {
            for (long long b = -limit; b <= limit; ++b) {
              long long const v = a * n + b * m;
              if (v > 0 && v < least) {
                least = v;
              }
            }
          }
          return static_cast<std::size_t>(least - 1);
        },
        one_to(bound), "subgroups of Z up to " + std::to_string(bound) + "Z");
  }

  IsomorphismWitness verify_theorem1(std::string_view g_spec,
                                     std::size_t      bound,
                                     Limits const&    limits) {
    AbelianSpec const spec = primary_decomposition(g_spec);
    LStructure const  l    = build_L(spec, bound, limits);

    std::optional<FiniteMagma> computed;
    for (unsigned i = 0; i < spec.free_rank; ++i) {
      auto part = truncated_integer_subgroups(bound);
      computed  = computed ? direct_sum(*computed, part, limits) : std::move(part);
    }
    auto torsion = build_pg(build_group(torsion_spec(g_spec), limits), limits);
    computed     = computed ? direct_sum(*computed, torsion, limits) : std::move(torsion);

    if (computed->size() != l.realized.size()) {
      throw TheoremViolation("P_G(" + std::string(g_spec) + ") has "
                             + std::to_string(computed->size()) + " elements but L"
                             + describe(l) + " has "
                             + std::to_string(l.realized.size()));
    }
    auto witness = find_isomorphism(*computed, l.realized, limits);
    if (!witness) {
      throw TheoremViolation("P_G(" + std::string(g_spec) + ") is not isomorphic to L"
                             + describe(l));
    }
    return *witness;
  }

}  // namespace pq
