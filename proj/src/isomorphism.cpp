#include "pq/isomorphism.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace pq {

  bool is_isomorphism(FiniteMagma const&     a,
                      FiniteMagma const&     b,
                      std::span<Index const> mapping) {
    if (a.size() != b.size() || mapping.size() != a.size()) {
      return false;
    }
    std::vector<bool> hit(b.size(), false);
    for (Index v : mapping) {
      if (v >= b.size() || hit[v]) {
        return false;
      }
      hit[v] = true;
    }
    auto const n = static_cast<Index>(a.size());
    for (Index x = 0; x < n; ++x) {
      for (Index y = 0; y < n; ++y) {
        if (mapping[a.op(x, y)] != b.op(mapping[x], mapping[y])) {
          return false;
        }
      }
    }
    return true;
  }

  IsomorphismWitness inverse(IsomorphismWitness const& w) {
    IsomorphismWitness out;
    out.mapping.resize(w.mapping.size());
    for (Index x = 0; x < w.mapping.size(); ++x) {
      out.mapping[w.mapping[x]] = x;
    }
    out.verified = w.verified;
    return out;
  }

  namespace {

    using Signature = std::vector<std::size_t>;

    Signature initial_signature(FiniteMagma const& m, Index x) {
      auto const  n = static_cast<Index>(m.size());
      std::size_t kernel = 0, left_fix = 0, right_fix = 0, left_id = 0,
                  right_id = 0, commuting = 0;
      std::set<Index> row, column;
      for (Index y = 0; y < n; ++y) {
        Index const xy = m.op(x, y), yx = m.op(y, x);
        kernel += xy == x && yx == x;
        left_fix += xy == x;
        right_fix += yx == x;
        left_id += xy == y;
        right_id += yx == y;
        commuting += xy == yx;
        row.insert(xy);
        column.insert(yx);
      }
      return {m.op(x, x) == x, kernel,   left_fix,   right_fix, left_id,
              right_id,        commuting, row.size(), column.size()};
    }

    std::size_t count_classes(std::vector<std::size_t> const& ca,
                              std::vector<std::size_t> const& cb) {
      std::set<std::size_t> s(ca.begin(), ca.end());
      s.insert(cb.begin(), cb.end());
      return s.size();
    }

    class Search {
     public:
      Search(FiniteMagma const&              a,
             FiniteMagma const&              b,
             std::vector<std::size_t> const& ca,
             std::vector<std::size_t> const& cb)
          : _a(a),
            _b(b),
            _ca(ca),
            _cb(cb),
            _n(static_cast<Index>(a.size())),
            _fwd(a.size(), kNone),
            _bwd(a.size(), kNone) {
        std::map<std::size_t, std::size_t> class_size;
        for (auto c : ca) {
          ++class_size[c];
        }
        _order.resize(_n);
        std::iota(_order.begin(), _order.end(), 0);
        std::stable_sort(_order.begin(), _order.end(), [&](Index x, Index y) {
          return class_size[ca[x]] < class_size[ca[y]];
        });
      }

      std::optional<std::vector<Index>> run() {
        if (search(0)) {
          return _fwd;
        }
        return std::nullopt;
      }

     private:
      static constexpr Index kNone = std::numeric_limits<Index>::max();

      // Maps x to y and every product forced by it. Returns false on a
      // conflict; the caller undoes the trail.
      bool assign(Index x, Index y) {
        std::vector<std::pair<Index, Index>> queue{{x, y}};
        for (std::size_t i = 0; i < queue.size(); ++i) {
          auto const [u, v] = queue[i];
          if (_fwd[u] == v) {
            continue;
          }
          if (_fwd[u] != kNone || _bwd[v] != kNone || _ca[u] != _cb[v]) {
            return false;
          }
          _fwd[u] = v;
          _bwd[v] = u;
          _trail.push_back(u);
          std::size_t const assigned = _trail.size();
          for (std::size_t k = 0; k < assigned; ++k) {
            Index const w = _trail[k];
            for (auto [s, t] : {std::pair{u, w}, std::pair{w, u}}) {
              Index const product = _a.op(s, t);
              Index const image   = _b.op(_fwd[s], _fwd[t]);
              if (_fwd[product] != kNone) {
                if (_fwd[product] != image) {
                  return false;
                }
              } else if (_bwd[image] != kNone) {
                return false;
              } else {
                queue.emplace_back(product, image);
              }
            }
          }
        }
        return true;
      }

      void undo(std::size_t mark) {
        while (_trail.size() > mark) {
          Index const u = _trail.back();
          _trail.pop_back();
          _bwd[_fwd[u]] = kNone;
          _fwd[u]       = kNone;
        }
      }

      bool search(std::size_t pos) {
        while (pos < _order.size() && _fwd[_order[pos]] != kNone) {
          ++pos;
        }
        if (pos == _order.size()) {
          return true;
        }
        Index const x = _order[pos];
        for (Index y = 0; y < _n; ++y) {
          if (_bwd[y] != kNone || _cb[y] != _ca[x]) {
            continue;
          }
          std::size_t const mark = _trail.size();
          if (assign(x, y) && search(pos + 1)) {
            return true;
          }
          undo(mark);
        }
        return false;
      }

      FiniteMagma const&              _a;
      FiniteMagma const&              _b;
      std::vector<std::size_t> const& _ca;
      std::vector<std::size_t> const& _cb;
      Index                           _n;
      std::vector<Index>              _fwd;
      std::vector<Index>              _bwd;
      std::vector<Index>              _trail;
      std::vector<Index>              _order;
    };

  }  // namespace

  std::pair<std::vector<std::size_t>, std::vector<std::size_t>>
  refined_colours(FiniteMagma const& a, FiniteMagma const& b) {
    std::vector<std::size_t> ca(a.size()), cb(b.size());
    {
      std::map<Signature, std::size_t> ids;
      auto id = [&](Signature s) {
        return ids.try_emplace(std::move(s), ids.size()).first->second;
      };
      for (Index x = 0; x < a.size(); ++x) {
        ca[x] = id(initial_signature(a, x));
      }
      for (Index x = 0; x < b.size(); ++x) {
        cb[x] = id(initial_signature(b, x));
      }
    }

    std::size_t classes = count_classes(ca, cb);
    while (true) {
      std::map<Signature, std::size_t> ids;
      auto refine = [&](FiniteMagma const& m, std::vector<std::size_t> const& c) {
        std::vector<std::size_t> next(m.size());
        auto const               n = static_cast<Index>(m.size());
        for (Index x = 0; x < n; ++x) {
          std::vector<std::array<std::size_t, 3>> seen;
          seen.reserve(n);
          for (Index y = 0; y < n; ++y) {
            seen.push_back({c[y], c[m.op(x, y)], c[m.op(y, x)]});
          }
          std::sort(seen.begin(), seen.end());
          Signature s{c[x], c[m.op(x, x)]};
          for (auto const& t : seen) {
            s.insert(s.end(), t.begin(), t.end());
          }
          next[x] = ids.try_emplace(std::move(s), ids.size()).first->second;
        }
        return next;
      };
      auto next_a = refine(a, ca);
      auto next_b = refine(b, cb);
      std::size_t const next_classes = count_classes(next_a, next_b);
      ca = std::move(next_a);
      cb = std::move(next_b);
      if (next_classes == classes) {
        break;
      }
      classes = next_classes;
    }
    return {ca, cb};
  }

  std::optional<IsomorphismWitness> find_isomorphism(FiniteMagma const& a,
                                                     FiniteMagma const& b,
                                                     Limits const&      limits) {
    if (std::max(a.size(), b.size()) > limits.max_iso) {
      throw SizeLimit("isomorphism search on " + std::to_string(std::max(a.size(), b.size()))
                      + " elements exceeds the cap " + std::to_string(limits.max_iso));
    }
    if (a.size() != b.size()) {
      return std::nullopt;
    }
    auto const [ca, cb] = refined_colours(a, b);
    auto       ha = ca, hb = cb;
    std::sort(ha.begin(), ha.end());
    std::sort(hb.begin(), hb.end());
    if (ha != hb) {
      return std::nullopt;
    }
    auto mapping = Search(a, b, ca, cb).run();
    if (!mapping) {
      return std::nullopt;
    }
    IsomorphismWitness w{std::move(*mapping), false};
    w.verified = is_isomorphism(a, b, w.mapping);
    if (!w.verified) {
      throw TheoremViolation("isomorphism search returned an unverified mapping");
    }
    return w;
  }

  std::optional<IsomorphismWitness>
  find_isomorphism_unpruned(FiniteMagma const& a, FiniteMagma const& b) {
    if (a.size() > 9 || b.size() > 9) {
      throw SizeLimit("unpruned isomorphism search is limited to 9 elements");
    }
    if (a.size() != b.size()) {
      return std::nullopt;
    }
    std::vector<Index> perm(a.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
      if (is_isomorphism(a, b, perm)) {
        return IsomorphismWitness{perm, true};
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
  }

  HomomorphismCheck check_homomorphism(FiniteMagma const&     a,
                                       FiniteMagma const&     b,
                                       std::span<Index const> f) {
    if (f.size() != a.size()) {
      throw BadMap("map has " + std::to_string(f.size()) + " entries, expected "
                   + std::to_string(a.size()));
    }
    for (Index x = 0; x < f.size(); ++x) {
      if (f[x] >= b.size()) {
        throw BadMap("image of " + std::to_string(x) + " is "
                     + std::to_string(f[x]) + ", outside the codomain");
      }
    }
    auto const n = static_cast<Index>(a.size());
    for (Index x = 0; x < n; ++x) {
      for (Index y = 0; y < n; ++y) {
        if (f[a.op(x, y)] != b.op(f[x], f[y])) {
          return {false, std::pair{x, y}};
        }
      }
    }
    return {};
  }

}  // namespace pq
