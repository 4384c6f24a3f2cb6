#include "pq/corpus.hpp"

#include <algorithm>
#include <functional>

#include "pq/classification.hpp"
#include "pq/families.hpp"
#include "pq/group.hpp"

namespace pq {

  namespace {

    // Partitions of e into parts, each list ascending.
    void partitions(unsigned                              remaining,
                    unsigned                              min_part,
                    std::vector<unsigned>&                current,
                    std::vector<std::vector<unsigned>>&   out) {
      if (remaining == 0) {
        out.push_back(current);
        return;
      }
      for (unsigned part = min_part; part <= remaining; ++part) {
        current.push_back(part);
        partitions(remaining - part, part, current, out);
        current.pop_back();
      }
    }

  }  // namespace

  std::vector<std::string> abelian_group_specs(std::size_t max_order) {
    std::vector<std::string> out;
    for (std::size_t order = 1; order <= max_order; ++order) {
      // prime factorisation of the order
      std::vector<std::pair<std::size_t, unsigned>> primes;
      std::size_t n = order;
      for (std::size_t p = 2; p * p <= n; ++p) {
        unsigned e = 0;
        while (n % p == 0) {
          n /= p;
          ++e;
        }
        if (e > 0) {
          primes.emplace_back(p, e);
        }
      }
      if (n > 1) {
        primes.emplace_back(n, 1);
      }
      if (primes.empty()) {
        out.push_back("Z1");
        continue;
      }
      // one partition choice per prime
      std::vector<std::vector<std::vector<unsigned>>> choices;
      for (auto [p, e] : primes) {
        std::vector<unsigned>              current;
        std::vector<std::vector<unsigned>> parts;
        partitions(e, 1, current, parts);
        choices.push_back(std::move(parts));
      }
      std::vector<std::size_t> pick(choices.size(), 0);
      while (true) {
        std::string spec;
        for (std::size_t i = 0; i < primes.size(); ++i) {
          for (unsigned m : choices[i][pick[i]]) {
            std::size_t q = 1;
            for (unsigned k = 0; k < m; ++k) {
              q *= primes[i].first;
            }
            spec += (spec.empty() ? "Z" : "xZ") + std::to_string(q);
          }
        }
        out.push_back(spec);
        std::size_t i = 0;
        while (i < pick.size() && ++pick[i] == choices[i].size()) {
          pick[i++] = 0;
        }
        if (i == pick.size()) {
          break;
        }
      }
    }
    return out;
  }

  std::vector<std::string> corpus_group_specs() {
    auto specs = abelian_group_specs(32);
    for (auto s : {"D6", "D8", "D10", "D12", "D14", "D16", "Q8", "S3", "S4", "A4", "A5"}) {
      specs.emplace_back(s);
    }
    std::sort(specs.begin(), specs.end());
    return specs;
  }

  std::vector<NamedMagma> corpus_magmas(Limits const& limits) {
    std::vector<NamedMagma> out;
    auto add = [&](FiniteMagma m) {
      auto name = m.provenance();
      out.push_back({std::move(name), std::move(m)});
    };
    for (auto const& spec : corpus_group_specs()) {
      add(build_pg(build_group(spec, limits), limits));
    }
    for (std::size_t n = 1; n <= 8; ++n) {
      add(trivial_quandle(n));
      add(max_chain(n));
      add(min_chain(n));
    }
    for (std::size_t n = 1; n <= 7; ++n) {
      add(dihedral_quandle(n));
    }
    add(alexander_quandle(5, 2));
    add(alexander_quandle(7, 3));
    add(alexander_quandle(4, 3));
    add(symplectic_quandle(3, limits));
    for (auto spec : {"S3", "Q8", "D8", "A4"}) {
      add(conjugation_quandle(build_group(spec, limits), 1));
    }
    add(conjugation_quandle(build_group("S3", limits), 2));
    for (std::size_t bound : {1, 6, 12, 30}) {
      add(gcd_segment(bound));
    }
    for (std::size_t n : {6, 12, 30}) {
      add(divisor_gcd(n));
    }
    for (auto const& spec : abelian_group_specs(32)) {
      add(build_L(primary_decomposition(spec), 1, limits).realized);
    }
    add(build_L(primary_decomposition("ZxZ4"), 6, limits).realized);
    return out;
  }

}  // namespace pq
