#include "pq/source.hpp"

#include <charconv>
#include <fstream>
#include <string>

#include "pq/classification.hpp"
#include "pq/families.hpp"

namespace pq {

  namespace {

    std::size_t parse_size(std::string_view text, std::string_view spec) {
      std::size_t value = 0;
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
      if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()
          || value == 0) {
        throw ParseError("malformed size in '" + std::string(spec) + "'");
      }
      return value;
    }

  }  // namespace

  bool is_pg_source(std::string_view spec) {
    return spec.substr(0, 3) == "pg:";
  }

  FiniteMagma load_source(std::string_view spec, Limits const& limits, std::size_t bound) {
    auto const colon = spec.find(':');
    auto const kind  = spec.substr(0, colon);
    auto const rest  = colon == std::string_view::npos ? std::string_view{}
                                                       : spec.substr(colon + 1);
    if (kind == "file") {
      std::string   path(rest);
      std::ifstream in(path);
      if (!in) {
        throw ParseError("cannot open magma document '" + path + "'");
      }
      nlohmann::json doc;
      try {
        in >> doc;
      } catch (nlohmann::json::exception const& e) {
        throw ParseError("malformed JSON in '" + path + "': " + e.what());
      }
      return magma_from_json(doc, limits);
    }
    if (kind == "max") {
      return max_chain(parse_size(rest, spec));
    }
    if (kind == "min") {
      return min_chain(parse_size(rest, spec));
    }
    if (kind == "gcd") {
      return gcd_segment(parse_size(rest, spec));
    }
    if (kind == "L") {
      return build_L(primary_decomposition(rest), bound, limits).realized;
    }
    return build_example(spec, limits);
  }

}  // namespace pq
