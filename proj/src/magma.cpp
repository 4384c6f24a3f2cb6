#include "pq/magma.hpp"

namespace pq {

  FiniteMagma::FiniteMagma(std::size_t              size,
                           std::vector<Index>       op,
                           std::vector<std::string> labels,
                           std::string              provenance)
      : _size(size),
        _op(std::move(op)),
        _labels(std::move(labels)),
        _provenance(std::move(provenance)) {
    if (_size == 0) {
      throw ParseError("a magma must have at least one element");
    }
    if (_op.size() != _size * _size) {
      throw ParseError("operation table must have " + std::to_string(_size)
                       + "x" + std::to_string(_size) + " entries");
    }
    for (std::size_t i = 0; i < _op.size(); ++i) {
      if (_op[i] >= _size) {
        throw ParseError("closure fails: " + std::to_string(i / _size) + "*"
                         + std::to_string(i % _size) + " = "
                         + std::to_string(_op[i]) + " is out of range");
      }
    }
    if (_labels.empty()) {
      for (std::size_t i = 0; i < _size; ++i) {
        _labels.push_back(std::to_string(i + 1));
      }
    } else if (_labels.size() != _size) {
      throw ParseError("expected " + std::to_string(_size) + " labels, got "
                       + std::to_string(_labels.size()));
    }
  }

  FiniteMagma direct_sum(FiniteMagma const& a,
                         FiniteMagma const& b,
                         Limits const&      limits) {
    std::size_t const n = a.size() * b.size();
    if (n > limits.max_magma) {
      throw SizeLimit("direct sum of size " + std::to_string(n)
                      + " exceeds the magma cap "
                      + std::to_string(limits.max_magma));
    }
    std::size_t const        nb = b.size();
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      labels.push_back("(" + a.label(static_cast<Index>(i / nb)) + ","
                       + b.label(static_cast<Index>(i % nb)) + ")");
    }
    return tabulate(
        n,
        [&](std::size_t x, std::size_t y) {
          auto const i = a.op(static_cast<Index>(x / nb), static_cast<Index>(y / nb));
          auto const j = b.op(static_cast<Index>(x % nb), static_cast<Index>(y % nb));
          return i * nb + j;
        },
        std::move(labels),
        a.provenance() + " ⊕ " + b.provenance());
  }

  nlohmann::json magma_to_json(FiniteMagma const& m) {
    auto const     n  = static_cast<Index>(m.size());
    nlohmann::json op = nlohmann::json::array();
    for (Index a = 0; a < n; ++a) {
      nlohmann::json row = nlohmann::json::array();
      for (Index b = 0; b < n; ++b) {
        row.push_back(m.op(a, b));
      }
      op.push_back(std::move(row));
    }
    return {{"size", m.size()}, {"labels", m.labels()}, {"op", op}};
  }

  FiniteMagma magma_from_json(nlohmann::json const& doc, Limits const& limits) {
    try {
      std::size_t const n = doc.at("size").get<std::size_t>();
      if (n > limits.max_magma) {
        throw SizeLimit("magma size " + std::to_string(n)
                        + " exceeds the cap " + std::to_string(limits.max_magma));
      }
      auto const& rows = doc.at("op");
      if (!rows.is_array() || rows.size() != n) {
        throw ParseError("op must have " + std::to_string(n) + " rows");
      }
      std::vector<Index> op;
      op.reserve(n * n);
      for (auto const& row : rows) {
        if (!row.is_array() || row.size() != n) {
          throw ParseError("every op row must have " + std::to_string(n)
                           + " entries");
        }
        for (auto const& v : row) {
          auto const x = v.get<long long>();
          if (x < 0 || static_cast<std::size_t>(x) >= n) {
            throw ParseError("closure fails: op entry " + std::to_string(x)
                             + " is out of range");
          }
          op.push_back(static_cast<Index>(x));
        }
      }
      std::vector<std::string> labels;
      if (doc.contains("labels")) {
        labels = doc.at("labels").get<std::vector<std::string>>();
      }
      std::string provenance = doc.value("provenance", std::string("document"));
      return FiniteMagma(n, std::move(op), std::move(labels),
                         std::move(provenance));
    } catch (nlohmann::json::exception const& e) {
      throw ParseError(std::string("malformed magma document: ") + e.what());
    }
  }

  bool is_commutative(FiniteMagma const& m) {
    auto const n = static_cast<Index>(m.size());
    for (Index a = 0; a < n; ++a) {
      for (Index b = a + 1; b < n; ++b) {
        if (m.op(a, b) != m.op(b, a)) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_idempotent(FiniteMagma const& m) {
    auto const n = static_cast<Index>(m.size());
    for (Index a = 0; a < n; ++a) {
      if (m.op(a, a) != a) {
        return false;
      }
    }
    return true;
  }

}  // namespace pq
