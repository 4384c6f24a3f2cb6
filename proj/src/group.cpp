#include "pq/group.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace pq {

  Limits Limits::from_env() {
    Limits limits;
    if (char const* env = std::getenv("PQ_MAX_ORDER")) {
      std::size_t value = 0;
      auto        end   = env + std::char_traits<char>::length(env);
      auto [ptr, ec]    = std::from_chars(env, end, value);
      if (ec != std::errc() || ptr != end || value == 0) {
        throw ParseError("PQ_MAX_ORDER must be a positive integer, got '"
                         + std::string(env) + "'");
      }
      limits.max_order = value;
    }
    return limits;
  }

  std::vector<Index> members_of(ElementSet const& set) {
    std::vector<Index> out;
    out.reserve(set.count());
    for (auto i = set.find_first(); i != ElementSet::npos;
         i      = set.find_next(i)) {
      out.push_back(static_cast<Index>(i));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // GroupTable
  ////////////////////////////////////////////////////////////////////////

  GroupTable::GroupTable(std::size_t              order,
                         std::vector<Index>       cayley,
                         std::vector<std::string> labels,
                         std::string              spec,
                         Limits const&            limits)
      : _order(order),
        _cayley(std::move(cayley)),
        _labels(std::move(labels)),
        _spec(std::move(spec)) {
    if (_order == 0) {
      throw NotAGroup("a group must have at least one element");
    }
    if (_order > limits.max_order) {
      throw SizeLimit("group order " + std::to_string(_order)
                      + " exceeds the cap " + std::to_string(limits.max_order));
    }
    if (_cayley.size() != _order * _order) {
      throw NotAGroup("Cayley table must have " + std::to_string(_order)
                      + "x" + std::to_string(_order) + " entries");
    }
    if (_labels.empty()) {
      for (std::size_t i = 0; i < _order; ++i) {
        _labels.push_back(std::to_string(i));
      }
    } else if (_labels.size() != _order) {
      throw NotAGroup("expected " + std::to_string(_order) + " labels, got "
                      + std::to_string(_labels.size()));
    }
    auto const n = static_cast<Index>(_order);
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) {
        if (mul(a, b) >= n) {
          throw NotAGroup("closure fails: " + std::to_string(a) + "*"
                          + std::to_string(b) + " = "
                          + std::to_string(mul(a, b)) + " is out of range");
        }
      }
    }

    bool found = false;
    for (Index e = 0; e < n && !found; ++e) {
      found = true;
      for (Index x = 0; x < n; ++x) {
        if (mul(e, x) != x || mul(x, e) != x) {
          found = false;
          break;
        }
      }
      if (found) {
        _identity = e;
      }
    }
    if (!found) {
      throw NotAGroup("no two-sided identity element");
    }

    _inverse.assign(_order, n);
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) {
        if (mul(a, b) == _identity && mul(b, a) == _identity) {
          _inverse[a] = b;
          break;
        }
      }
      if (_inverse[a] == n) {
        throw NotAGroup("element " + std::to_string(a)
                        + " has no two-sided inverse");
      }
    }

    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) {
        Index const ab = mul(a, b);
        for (Index c = 0; c < n; ++c) {
          if (mul(ab, c) != mul(a, mul(b, c))) {
            throw NotAGroup("associativity fails on (" + std::to_string(a)
                            + ", " + std::to_string(b) + ", "
                            + std::to_string(c) + ")");
          }
        }
      }
    }
  }

  bool GroupTable::is_abelian() const {
    auto const n = static_cast<Index>(_order);
    for (Index a = 0; a < n; ++a) {
      for (Index b = a + 1; b < n; ++b) {
        if (mul(a, b) != mul(b, a)) {
          return false;
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Spec parsing
  ////////////////////////////////////////////////////////////////////////

  namespace {

    // Table data of one factor; identity is always index 0.
    struct Factor {
      std::size_t              order;
      std::vector<Index>       cayley;
      std::vector<std::string> labels;
    };

    Factor cyclic(std::size_t n) {
      Factor f{n, std::vector<Index>(n * n), {}};
      for (std::size_t a = 0; a < n; ++a) {
        f.labels.push_back(std::to_string(a));
        for (std::size_t b = 0; b < n; ++b) {
          f.cayley[a * n + b] = static_cast<Index>((a + b) % n);
        }
      }
      return f;
    }

    // Elements s^e r^k, indexed e*n + k.
    Factor dihedral(std::size_t n) {
      std::size_t const order = 2 * n;
      Factor            f{order, std::vector<Index>(order * order), {}};
      for (std::size_t e = 0; e < 2; ++e) {
        for (std::size_t k = 0; k < n; ++k) {
          std::string label = e == 0 ? "" : "s";
          if (k == 1) {
            label += "r";
          } else if (k > 1) {
            label += "r^" + std::to_string(k);
          }
          f.labels.push_back(label.empty() ? "e" : label);
        }
      }
      for (std::size_t x = 0; x < order; ++x) {
        for (std::size_t y = 0; y < order; ++y) {
          std::size_t const e = x / n, k = x % n, g = y / n, l = y % n;
          // s^e r^k s^g r^l = s^(e+g) r^((-1)^g k + l)
          std::size_t const rot = g == 0 ? (k + l) % n : (n - k + l) % n;
          f.cayley[x * order + y] = static_cast<Index>(((e + g) % 2) * n + rot);
        }
      }
      return f;
    }

    Factor quaternion() {
      // units 1, i, j, k; unit_mul[a][b] = (sign, unit)
      constexpr int unit_mul[4][4][2] = {{{1, 0}, {1, 1}, {1, 2}, {1, 3}},
                                         {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}},
                                         {{1, 2}, {-1, 3}, {-1, 0}, {1, 1}},
                                         {{1, 3}, {1, 2}, {-1, 1}, {-1, 0}}};
      Factor f{8, std::vector<Index>(64), {"1", "-1", "i", "-i", "j", "-j", "k", "-k"}};
      for (int x = 0; x < 8; ++x) {
        for (int y = 0; y < 8; ++y) {
          int const  sx = x % 2 == 0 ? 1 : -1, ux = x / 2;
          int const  sy = y % 2 == 0 ? 1 : -1, uy = y / 2;
          auto const m  = unit_mul[ux][uy];
          int const  s  = sx * sy * m[0];
          f.cayley[x * 8 + y] = static_cast<Index>(2 * m[1] + (s == 1 ? 0 : 1));
        }
      }
      return f;
    }

    std::string cycle_notation(std::vector<Index> const& perm) {
      std::string      out;
      std::vector<bool> seen(perm.size(), false);
      for (Index i = 0; i < perm.size(); ++i) {
        if (seen[i] || perm[i] == i) {
          continue;
        }
        out += "(";
        for (Index j = i; !seen[j]; j = perm[j]) {
          seen[j] = true;
          if (j != i) {
            out += " ";
          }
          out += std::to_string(j + 1);
        }
        out += ")";
      }
      return out.empty() ? "()" : out;
    }

    bool is_even(std::vector<Index> const& perm) {
      std::size_t inversions = 0;
      for (std::size_t i = 0; i < perm.size(); ++i) {
        for (std::size_t j = i + 1; j < perm.size(); ++j) {
          inversions += perm[i] > perm[j];
        }
      }
      return inversions % 2 == 0;
    }

    // Permutations in lexicographic order, identity first. Product is
    // composition (ab)(x) = a(b(x)).
    Factor permutations(std::size_t n, bool even_only) {
      std::vector<std::vector<Index>> perms;
      std::vector<Index>              p(n);
      std::iota(p.begin(), p.end(), 0);
      do {
        if (!even_only || is_even(p)) {
          perms.push_back(p);
        }
      } while (std::next_permutation(p.begin(), p.end()));

      std::map<std::vector<Index>, Index> index;
      for (Index i = 0; i < perms.size(); ++i) {
        index.emplace(perms[i], i);
      }
      std::size_t const order = perms.size();
      Factor            f{order, std::vector<Index>(order * order), {}};
      std::vector<Index> comp(n);
      for (std::size_t a = 0; a < order; ++a) {
        f.labels.push_back(cycle_notation(perms[a]));
        for (std::size_t b = 0; b < order; ++b) {
          for (std::size_t x = 0; x < n; ++x) {
            comp[x] = perms[a][perms[b][x]];
          }
          f.cayley[a * order + b] = index.at(comp);
        }
      }
      return f;
    }

    std::size_t parse_number(std::string_view text, std::string_view token) {
      std::size_t value = 0;
      auto [ptr, ec]
          = std::from_chars(text.data(), text.data() + text.size(), value);
      if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
        throw ParseError("malformed group factor '" + std::string(token) + "'");
      }
      return value;
    }

    // Order of a factor without building it, so the size cap is enforced
    // before any table is allocated.
    std::size_t factor_order(std::string_view token) {
      if (token == "Q8") {
        return 8;
      }
      if (token.empty()) {
        throw ParseError("empty group factor");
      }
      char const  kind = token[0];
      std::string_view rest = token.substr(1);
      if (kind == 'Z') {
        std::size_t n = parse_number(rest, token);
        if (n == 0) {
          throw ParseError("Z0 is not a finite group");
        }
        return n;
      }
      if (kind == 'D') {
        std::size_t m = parse_number(rest, token);
        if (m == 0 || m % 2 != 0) {
          throw ParseError("dihedral group order must be even and positive, got '"
                           + std::string(token) + "'");
        }
        return m;
      }
      if (kind == 'S' || kind == 'A') {
        std::size_t n = parse_number(rest, token);
        if (n == 0 || n > 5) {
          throw ParseError("symmetric/alternating degree must be in 1..5, got '"
                           + std::string(token) + "'");
        }
        std::size_t fact = 1;
        for (std::size_t i = 2; i <= n; ++i) {
          fact *= i;
        }
        return kind == 'S' || n < 2 ? fact : fact / 2;
      }
      throw ParseError("unknown group factor '" + std::string(token) + "'");
    }

    Factor build_factor(std::string_view token) {
      if (token == "Q8") {
        return quaternion();
      }
      std::size_t const n = parse_number(token.substr(1), token);
      switch (token[0]) {
        case 'Z':
          return cyclic(n);
        case 'D':
          return dihedral(n / 2);
        case 'S':
          return permutations(n, false);
        default:
          return permutations(n, true);
      }
    }

    std::vector<std::string_view> split(std::string_view text, char sep) {
      std::vector<std::string_view> parts;
      std::size_t                   start = 0;
      while (true) {
        auto pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos - start));
        if (pos == std::string_view::npos) {
          break;
        }
        start = pos + 1;
      }
      return parts;
    }

  }  // namespace

  GroupTable build_group(std::string_view spec, Limits const& limits) {
    if (spec.substr(0, 5) == "file:") {
      std::string   path(spec.substr(5));
      std::ifstream in(path);
      if (!in) {
        throw ParseError("cannot open group table document '" + path + "'");
      }
      nlohmann::json doc;
      try {
        in >> doc;
      } catch (nlohmann::json::exception const& e) {
        throw ParseError("malformed JSON in '" + path + "': " + e.what());
      }
      return group_from_json(doc, std::string(spec), limits);
    }

    auto tokens = split(spec, 'x');
    std::size_t order = 1;
    for (auto token : tokens) {
      order *= factor_order(token);
      if (order > limits.max_order) {
        throw SizeLimit("group '" + std::string(spec) + "' exceeds the order cap "
                        + std::to_string(limits.max_order));
      }
    }

    if (tokens.size() == 1) {
      Factor f = build_factor(tokens[0]);
      return GroupTable(f.order, std::move(f.cayley), std::move(f.labels),
                        std::string(spec), limits);
    }

    std::vector<Factor> factors;
    for (auto token : tokens) {
      factors.push_back(build_factor(token));
    }
    // Mixed radix, first factor most significant.
    std::vector<std::vector<std::size_t>> digits(order);
    for (std::size_t x = 0; x < order; ++x) {
      std::size_t rem = x;
      digits[x].resize(factors.size());
      for (std::size_t i = factors.size(); i-- > 0;) {
        digits[x][i] = rem % factors[i].order;
        rem /= factors[i].order;
      }
    }
    std::vector<std::string> labels;
    for (std::size_t x = 0; x < order; ++x) {
      std::string label = "(";
      for (std::size_t i = 0; i < factors.size(); ++i) {
        label += (i ? "," : "") + factors[i].labels[digits[x][i]];
      }
      labels.push_back(label + ")");
    }
    std::vector<Index> cayley(order * order);
    for (std::size_t x = 0; x < order; ++x) {
      for (std::size_t y = 0; y < order; ++y) {
        std::size_t z = 0;
        for (std::size_t i = 0; i < factors.size(); ++i) {
          auto const& f = factors[i];
          z             = z * f.order + f.cayley[digits[x][i] * f.order + digits[y][i]];
        }
        cayley[x * order + y] = static_cast<Index>(z);
      }
    }
    return GroupTable(order, std::move(cayley), std::move(labels),
                      std::string(spec), limits);
  }

  GroupTable group_from_json(nlohmann::json const& doc,
                             std::string           spec,
                             Limits const&         limits) {
    try {
      std::size_t const n = doc.at("order").get<std::size_t>();
      if (n > limits.max_order) {
        throw SizeLimit("group order " + std::to_string(n) + " exceeds the cap "
                        + std::to_string(limits.max_order));
      }
      auto const& rows = doc.at("table");
      if (!rows.is_array() || rows.size() != n) {
        throw ParseError("table must have " + std::to_string(n) + " rows");
      }
      std::vector<Index> cayley;
      cayley.reserve(n * n);
      for (auto const& row : rows) {
        if (!row.is_array() || row.size() != n) {
          throw ParseError("every table row must have " + std::to_string(n)
                           + " entries");
        }
        for (auto const& v : row) {
          auto const x = v.get<long long>();
          if (x < 0 || static_cast<std::size_t>(x) >= n) {
            throw NotAGroup("closure fails: table entry " + std::to_string(x)
                            + " is out of range");
          }
          cayley.push_back(static_cast<Index>(x));
        }
      }
      std::vector<std::string> labels;
      if (doc.contains("labels")) {
        labels = doc.at("labels").get<std::vector<std::string>>();
      }
      return GroupTable(n, std::move(cayley), std::move(labels),
                        std::move(spec), limits);
    } catch (nlohmann::json::exception const& e) {
      throw ParseError(std::string("malformed group table document: ")
                       + e.what());
    }
  }

  nlohmann::json group_to_json(GroupTable const& g) {
    auto const     n = static_cast<Index>(g.order());
    nlohmann::json table = nlohmann::json::array();
    for (Index a = 0; a < n; ++a) {
      nlohmann::json row = nlohmann::json::array();
      for (Index b = 0; b < n; ++b) {
        row.push_back(g.mul(a, b));
      }
      table.push_back(std::move(row));
    }
    return {{"order", g.order()}, {"labels", g.labels()}, {"table", table}};
  }

  ////////////////////////////////////////////////////////////////////////
  // Subgroups
  ////////////////////////////////////////////////////////////////////////

  bool is_subgroup(GroupTable const& g, ElementSet const& set) {
    if (set.size() != g.order() || !set.test(g.identity())) {
      return false;
    }
    auto const members = members_of(set);
    for (Index a : members) {
      if (!set.test(g.inverse(a))) {
        return false;
      }
      for (Index b : members) {
        if (!set.test(g.mul(a, b))) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_normal(GroupTable const& g, ElementSet const& set) {
    if (!is_subgroup(g, set)) {
      return false;
    }
    auto const n = static_cast<Index>(g.order());
    for (Index x = 0; x < n; ++x) {
      for (Index h : members_of(set)) {
        if (!set.test(g.mul(g.mul(x, h), g.inverse(x)))) {
          return false;
        }
      }
    }
    return true;
  }

  ElementSet subgroup_closure(GroupTable const& g, ElementSet const& generators) {
    ElementSet result(g.order());
    result.set(g.identity());
    auto const         gens = members_of(generators);
    std::vector<Index> queue{g.identity()};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (Index s : gens) {
        Index const y = g.mul(queue[i], s);
        if (!result.test(y)) {
          result.set(y);
          queue.push_back(y);
        }
      }
    }
    return result;
  }

  Subgroup make_subgroup(GroupTable const& g, ElementSet set) {
    if (!is_subgroup(g, set)) {
      throw NotAGroup("element set is not a subgroup of " + g.spec());
    }
    Subgroup h;
    h.members   = members_of(set);
    h.is_normal = is_normal(g, set);
    h.bits      = std::move(set);
    return h;
  }

  ConjugacyPartition conjugacy_classes(GroupTable const& g) {
    auto const         n = static_cast<Index>(g.order());
    ConjugacyPartition result;
    std::vector<bool>  seen(n, false);
    // identity first so its block is {identity}
    std::vector<Index> order{g.identity()};
    for (Index a = 0; a < n; ++a) {
      if (a != g.identity()) {
        order.push_back(a);
      }
    }
    for (Index a : order) {
      if (seen[a]) {
        continue;
      }
      std::set<Index> block;
      for (Index x = 0; x < n; ++x) {
        block.insert(g.mul(g.mul(x, a), g.inverse(x)));
      }
      for (Index b : block) {
        seen[b] = true;
      }
      result.blocks.emplace_back(block.begin(), block.end());
    }
    return result;
  }

  bool canonical_less(Subgroup const& a, Subgroup const& b) {
    if (a.size() != b.size()) {
      return a.size() < b.size();
    }
    return a.members < b.members;
  }

  std::vector<Subgroup> enumerate_normal_subgroups(GroupTable const& g,
                                                   Limits const&     limits) {
    auto const classes = conjugacy_classes(g);

    // Normal closure of each non-identity class. Every normal subgroup is
    // the join of the closures of the classes it contains, so starting from
    // the trivial subgroup and joining one class at a time reaches them all.
    std::vector<ElementSet> class_sets;
    for (auto const& block : classes.blocks) {
      if (block.size() == 1 && block[0] == g.identity()) {
        continue;
      }
      ElementSet s(g.order());
      for (Index a : block) {
        s.set(a);
      }
      class_sets.push_back(std::move(s));
    }

    ElementSet trivial(g.order());
    trivial.set(g.identity());
    std::set<ElementSet>    found{trivial};
    std::vector<ElementSet> queue{trivial};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (auto const& c : class_sets) {
        if (c.is_subset_of(queue[i])) {
          continue;
        }
        ElementSet next = subgroup_closure(g, queue[i] | c);
        if (found.insert(next).second) {
          if (found.size() > limits.max_subgroups) {
            throw SizeLimit("normal subgroup count exceeds the cap "
                            + std::to_string(limits.max_subgroups));
          }
          queue.push_back(std::move(next));
        }
      }
    }

    std::vector<Subgroup> result;
    result.reserve(found.size());
    for (auto const& s : found) {
      Subgroup h;
      h.bits      = s;
      h.members   = members_of(s);
      h.is_normal = true;
      result.push_back(std::move(h));
    }
    std::sort(result.begin(), result.end(), canonical_less);
    return result;
  }

  Subgroup subgroup_product(GroupTable const& g,
                            Subgroup const&   h,
                            Subgroup const&   k) {
    if (!is_normal(g, h.bits)) {
      throw NotNormal("left factor " + subgroup_label(g, h)
                      + " is not a normal subgroup of " + g.spec());
    }
    if (!is_normal(g, k.bits)) {
      throw NotNormal("right factor " + subgroup_label(g, k)
                      + " is not a normal subgroup of " + g.spec());
    }
    ElementSet product(g.order());
    for (Index a : h.members) {
      for (Index b : k.members) {
        product.set(g.mul(a, b));
      }
    }
    Subgroup result;
    result.members   = members_of(product);
    result.bits      = std::move(product);
    result.is_normal = true;
    return result;
  }

  std::string subgroup_label(GroupTable const& g, Subgroup const& h) {
    std::string out = "{";
    for (std::size_t i = 0; i < h.members.size(); ++i) {
      out += (i ? "," : "") + g.label(h.members[i]);
    }
    return out + "}";
  }

}  // namespace pq
