#include "pq/families.hpp"

#include <charconv>
#include <map>
#include <numeric>
#include <string>

namespace pq {

  namespace {

    long long parse_integer(std::string_view text, std::string_view spec) {
      long long value = 0;
      auto [ptr, ec]
          = std::from_chars(text.data(), text.data() + text.size(), value);
      if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
        throw ParseError("malformed parameter '" + std::string(text) + "' in '"
                         + std::string(spec) + "'");
      }
      return value;
    }

    std::size_t parse_modulus(std::string_view text, std::string_view spec) {
      long long const n = parse_integer(text, spec);
      if (n < 1) {
        throw BadParameter("modulus must be positive in '" + std::string(spec)
                           + "'");
      }
      return static_cast<std::size_t>(n);
    }

    std::size_t mod(long long a, std::size_t n) {
      auto const m = static_cast<long long>(n);
      return static_cast<std::size_t>(((a % m) + m) % m);
    }

    std::vector<std::string> numeric_labels(std::size_t n) {
      std::vector<std::string> labels;
      for (std::size_t i = 0; i < n; ++i) {
        labels.push_back(std::to_string(i));
      }
      return labels;
    }

    Index power(GroupTable const& g, Index x, long long e) {
      if (e < 0) {
        x = g.inverse(x);
        e = -e;
      }
      Index result = g.identity();
      for (long long i = 0; i < e; ++i) {
        result = g.mul(result, x);
      }
      return result;
    }

  }  // namespace

  FiniteMagma build_pg(GroupTable const& g, Limits const& limits) {
    auto const subgroups = enumerate_normal_subgroups(g, limits);
    std::size_t const n  = subgroups.size();
    if (n > limits.max_magma) {
      throw SizeLimit("P_G has " + std::to_string(n)
                      + " elements, above the magma cap "
                      + std::to_string(limits.max_magma));
    }
    std::map<ElementSet, Index> index;
    std::vector<std::string>    labels;
    for (Index i = 0; i < n; ++i) {
      index.emplace(subgroups[i].bits, i);
      labels.push_back(subgroup_label(g, subgroups[i]));
    }
    std::vector<Index> op(n * n);
    for (Index a = 0; a < n; ++a) {
      for (Index b = a; b < n; ++b) {
        auto const product = subgroup_product(g, subgroups[a], subgroups[b]);
        auto const it      = index.find(product.bits);
        if (it == index.end()) {
          throw TheoremViolation("product of normal subgroups is missing from "
                                 "the enumeration of " + g.spec());
        }
        op[a * n + b] = it->second;
        op[b * n + a] = it->second;
      }
    }
    return FiniteMagma(n, std::move(op), std::move(labels), "P_G of " + g.spec());
  }

  FiniteMagma trivial_quandle(std::size_t n) {
    if (n < 1) {
      throw BadParameter("trivial quandle needs n >= 1");
    }
    return tabulate(
        n, [](std::size_t a, std::size_t) { return a; }, numeric_labels(n),
        "trivial:" + std::to_string(n));
  }

  FiniteMagma dihedral_quandle(std::size_t n) {
    if (n < 1) {
      throw BadParameter("dihedral quandle needs modulus n >= 1");
    }
    return tabulate(
        n,
        [n](std::size_t i, std::size_t j) {
          return mod(2 * static_cast<long long>(j) - static_cast<long long>(i), n);
        },
        numeric_labels(n), "dihedral:" + std::to_string(n));
  }

  FiniteMagma alexander_quandle(std::size_t n, long long t) {
    if (n < 1) {
      throw BadParameter("Alexander quandle needs modulus n >= 1");
    }
    std::size_t const tm = mod(t, n);
    if (std::gcd(tm, n) != 1 && n != 1) {
      throw BadParameter("t = " + std::to_string(t) + " is not a unit mod "
                         + std::to_string(n));
    }
    auto const tt = static_cast<long long>(tm);
    return tabulate(
        n,
        [n, tt](std::size_t a, std::size_t b) {
          return mod(tt * static_cast<long long>(a)
                         + (1 - tt) * static_cast<long long>(b),
                     n);
        },
        numeric_labels(n),
        "alexander:" + std::to_string(n) + ":" + std::to_string(t));
  }

  FiniteMagma symplectic_quandle(std::size_t n, Limits const& limits) {
    if (n < 1 || n % 2 == 0) {
      throw BadParameter("symplectic quandle needs an odd modulus, got "
                         + std::to_string(n));
    }
    std::size_t const size = n * n;
    if (size > limits.max_magma) {
      throw SizeLimit("symplectic:" + std::to_string(n) + " has " + std::to_string(size)
                      + " elements, above the magma cap");
    }
    std::vector<std::string> labels;
    for (std::size_t x = 0; x < size; ++x) {
      labels.push_back("(" + std::to_string(x / n) + "," + std::to_string(x % n) + ")");
    }
    auto const nn = static_cast<long long>(n);
    return tabulate(
        size,
        [n, nn](std::size_t x, std::size_t y) {
          long long const x1 = static_cast<long long>(x / n), x2 = static_cast<long long>(x % n);
          long long const y1 = static_cast<long long>(y / n), y2 = static_cast<long long>(y % n);
          long long const form = ((x1 * y2 - x2 * y1) % nn + nn) % nn;
          return mod(x1 + form * y1, n) * n + mod(x2 + form * y2, n);
        },
        std::move(labels), "symplectic:" + std::to_string(n));
  }

  FiniteMagma conjugation_quandle(GroupTable const& g, long long exponent) {
    std::size_t const n = g.order();
    std::vector<Index> forward(n), backward(n);
    for (Index h = 0; h < n; ++h) {
      forward[h]  = power(g, h, exponent);
      backward[h] = power(g, h, -exponent);
    }
    return tabulate(
        n,
        [&](std::size_t a, std::size_t b) {
          auto const x = static_cast<Index>(a), h = static_cast<Index>(b);
          return g.mul(g.mul(backward[h], x), forward[h]);
        },
        g.labels(),
        "conj:" + g.spec() + ":" + std::to_string(exponent));
  }

  FiniteMagma build_example(std::string_view spec, Limits const& limits) {
    auto const colon = spec.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError("family spec '" + std::string(spec)
                       + "' must have the form <family>:<params>");
    }
    std::string_view const kind = spec.substr(0, colon);
    std::string_view const rest = spec.substr(colon + 1);

    if (kind == "trivial") {
      return trivial_quandle(parse_modulus(rest, spec));
    }
    if (kind == "dihedral") {
      return dihedral_quandle(parse_modulus(rest, spec));
    }
    if (kind == "alexander") {
      auto const sep = rest.find(':');
      if (sep == std::string_view::npos) {
        throw ParseError("alexander needs alexander:<n>:<t>, got '"
                         + std::string(spec) + "'");
      }
      return alexander_quandle(parse_modulus(rest.substr(0, sep), spec),
                               parse_integer(rest.substr(sep + 1), spec));
    }
    if (kind == "symplectic") {
      return symplectic_quandle(parse_modulus(rest, spec), limits);
    }
    if (kind == "pg") {
      return build_pg(build_group(rest, limits), limits);
    }
    if (kind == "conj") {
      // The exponent is an optional trailing integer; the group spec itself
      // may contain colons (file:<path>).
      long long  exponent   = 1;
      auto const sep        = rest.rfind(':');
      auto       group_spec = rest;
      if (sep != std::string_view::npos) {
        auto const tail = rest.substr(sep + 1);
        long long  value = 0;
        auto [ptr, ec]
            = std::from_chars(tail.data(), tail.data() + tail.size(), value);
        if (!tail.empty() && ec == std::errc() && ptr == tail.data() + tail.size()) {
          exponent   = value;
          group_spec = rest.substr(0, sep);
        }
      }
      return conjugation_quandle(build_group(group_spec, limits), exponent);
    }
    throw ParseError("unknown family '" + std::string(kind) + "'");
  }

}  // namespace pq
