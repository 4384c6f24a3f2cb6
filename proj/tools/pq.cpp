// pq: command line front end for the pseudoquandle library.
//
// Exit codes: 0 success, 1 an asserted claim failed, 2 input error.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "pq/axioms.hpp"
#include "pq/classification.hpp"
#include "pq/corpus.hpp"
#include "pq/families.hpp"
#include "pq/group.hpp"
#include "pq/isomorphism.hpp"
#include "pq/kernels.hpp"
#include "pq/matrix.hpp"
#include "pq/source.hpp"

namespace {

  using nlohmann::json;
  using namespace pq;

  struct CliConfig {
    std::string format = "text";
    std::size_t bound  = 30;
    Limits      limits;

    bool json() const {
      return format == "json";
    }
  };

  std::string subscript(Index i) {
    return "x" + std::to_string(i + 1);
  }

  std::string set_text(ElementSet const& s) {
    std::string out = "{";
    bool        first = true;
    for (Index x : members_of(s)) {
      out += (first ? "" : ",") + subscript(x);
      first = false;
    }
    return out + "}";
  }

  std::string yes_no(bool b) {
    return b ? "yes" : "no";
  }

  int cmd_group(CliConfig const& cfg, std::string const& spec) {
    auto const g       = build_group(spec, cfg.limits);
    auto const classes = conjugacy_classes(g);
    auto const normals = enumerate_normal_subgroups(g, cfg.limits);
    if (cfg.json()) {
      json cls = json::array();
      for (auto const& block : classes.blocks) {
        json labels = json::array();
        for (Index x : block) {
          labels.push_back(g.label(x));
        }
        cls.push_back(labels);
      }
      json subs = json::array();
      for (Index i = 0; i < normals.size(); ++i) {
        json labels = json::array();
        for (Index x : normals[i].members) {
          labels.push_back(g.label(x));
        }
        subs.push_back({{"index", i + 1}, {"size", normals[i].size()}, {"members", labels}});
      }
      std::cout << json{{"spec", g.spec()},
                        {"order", g.order()},
                        {"abelian", g.is_abelian()},
                        {"conjugacy_classes", cls},
                        {"normal_subgroups", subs}}
                       .dump(2)
                << "\n";
      return 0;
    }
    std::cout << "group " << g.spec() << " (order " << g.order() << ")\n";
    std::cout << "conjugacy classes (" << classes.blocks.size() << "):\n";
    for (auto const& block : classes.blocks) {
      std::cout << "  {";
      for (std::size_t i = 0; i < block.size(); ++i) {
        std::cout << (i ? "," : "") << g.label(block[i]);
      }
      std::cout << "}\n";
    }
    std::cout << "normal subgroups (" << normals.size() << "):\n";
    for (Index i = 0; i < normals.size(); ++i) {
      std::cout << "  " << subscript(i) << " = " << subgroup_label(g, normals[i])
                << "  (size " << normals[i].size() << ")\n";
    }
    return 0;
  }

  json axioms_json(FiniteMagma const& m, AxiomReport const& r) {
    json out{{"source", m.provenance()},
             {"size", m.size()},
             {"idempotent", r.idempotent},
             {"right_self_distributive", r.right_self_distributive},
             {"left_self_distributive", r.left_self_distributive},
             {"commutative", r.commutative},
             {"right_translations_bijective", r.right_translations_bijective},
             {"classification", to_string(r.classification)}};
    if (r.idempotence_counterexample) {
      out["idempotence_counterexample"] = *r.idempotence_counterexample + 1;
    }
    auto triple = [](std::array<Index, 3> t) {
      return json::array({t[0] + 1, t[1] + 1, t[2] + 1});
    };
    if (r.right_distributivity_counterexample) {
      out["right_distributivity_counterexample"] = triple(*r.right_distributivity_counterexample);
    }
    if (r.left_distributivity_counterexample) {
      out["left_distributivity_counterexample"] = triple(*r.left_distributivity_counterexample);
    }
    if (r.commutativity_counterexample) {
      out["commutativity_counterexample"] = {r.commutativity_counterexample->first + 1,
                                             r.commutativity_counterexample->second + 1};
    }
    if (r.bijectivity_witness) {
      auto const& w = *r.bijectivity_witness;
      out["bijectivity_witness"] = {{"p", w.p + 1},
                                    {"q", w.q + 1},
                                    {"p_label", m.label(w.p)},
                                    {"q_label", m.label(w.q)},
                                    {"solutions", w.solutions}};
    }
    return out;
  }

  int cmd_axioms(CliConfig const& cfg, std::string const& source) {
    auto const m = load_source(source, cfg.limits, cfg.bound);
    auto const r = check_axioms(m);
    if (cfg.json()) {
      std::cout << axioms_json(m, r).dump(2) << "\n";
      return 0;
    }
    std::cout << "source: " << m.provenance() << " (" << m.size() << (m.size() == 1 ? " element)\n" : " elements)\n");
    std::cout << "idempotent: " << yes_no(r.idempotent);
    if (r.idempotence_counterexample) {
      std::cout << "  (" << subscript(*r.idempotence_counterexample) << ")";
    }
    std::cout << "\nright self-distributive: " << yes_no(r.right_self_distributive);
    if (auto const& t = r.right_distributivity_counterexample) {
      std::cout << "  ((" << subscript((*t)[0]) << "*" << subscript((*t)[1]) << ")*"
                << subscript((*t)[2]) << ")";
    }
    std::cout << "\nleft self-distributive: " << yes_no(r.left_self_distributive);
    if (auto const& t = r.left_distributivity_counterexample) {
      std::cout << "  (" << subscript((*t)[0]) << "*(" << subscript((*t)[1]) << "*"
                << subscript((*t)[2]) << "))";
    }
    std::cout << "\ncommutative: " << yes_no(r.commutative);
    if (auto const& c = r.commutativity_counterexample) {
      std::cout << "  (" << subscript(c->first) << ", " << subscript(c->second) << ")";
    }
    std::cout << "\nright translations bijective: " << yes_no(r.right_translations_bijective);
    if (auto const& w = r.bijectivity_witness) {
      std::cout << "\n  p = " << subscript(w->p) << " " << m.label(w->p)
                << "\n  q = " << subscript(w->q) << " " << m.label(w->q) << "\n  "
                << (w->solutions == 0 ? "no r with p = r*q"
                                      : std::to_string(w->solutions) + " solutions r of p = r*q");
    }
    std::cout << "\nclassification: " << to_string(r.classification) << "\n";
    return 0;
  }

  int cmd_matrix(CliConfig const& cfg, std::string const& source) {
    auto const m      = load_source(source, cfg.limits, cfg.bound);
    auto const matrix = matrix_of(m);
    auto const report = matrix_report(matrix, is_pg_source(source));
    if (cfg.json()) {
      std::cout << render_json(matrix, report).dump(2) << "\n";
      return 0;
    }
    std::cout << render_text(matrix);
    std::cout << "symmetric: " << yes_no(report.symmetric) << "\n"
              << "trace: " << report.trace << " (expected " << report.expected_trace
              << ")\n"
              << "simple_form: " << (report.simple_form ? "true" : "false") << "\n";
    return 0;
  }

  int cmd_kernels(CliConfig const& cfg, std::string const& source) {
    auto const m = load_source(source, cfg.limits, cfg.bound);
    if (cfg.json()) {
      std::cout << kernels_json(m).dump(2) << "\n";
      return 0;
    }
    auto const kt = kernel_table(m);
    for (Index p = 0; p < kt.size(); ++p) {
      std::cout << "ker(" << subscript(p) << ") = " << set_text(kt.ker[p])
                << "   coker(" << subscript(p) << ") = " << set_text(kt.coker[p]) << "\n";
    }
    auto const chain = detect_chain(kt);
    if (!chain.chain_found) {
      std::cout << "no ascending chain\n";
      return 0;
    }
    auto const ce = class_equation(m);
    std::cout << "ascending chain: ";
    for (std::size_t i = 0; i < ce.ordering.size(); ++i) {
      std::cout << (i ? " ⊆ " : "") << "ker(" << subscript(ce.ordering[i]) << ")";
    }
    std::cout << "\nclass equation: " << ce.total << " = " << ce.base;
    for (auto inc : ce.increments) {
      std::cout << " + " << inc;
    }
    std::cout << "\n";
    return 0;
  }

  void print_claims(PropertyReport const& r) {
    std::cout << "commutative: " << yes_no(r.commutative)
              << ", hypothesis met: " << yes_no(r.hypothesis_met) << "\n";
    for (auto const& c : r.claims) {
      std::cout << "  " << c.name << ": " << to_string(c.status) << " ("
                << to_string(c.tier) << ")";
      if (c.status == ClaimStatus::fail) {
        std::cout << "  counterexample";
        for (auto x : c.counterexample) {
          std::cout << " " << subscript(x);
        }
      }
      std::cout << "\n";
    }
  }

  struct CorpusRow {
    std::string spec;
    std::size_t pg_size = 0;
    bool        prop2   = false;
    bool        matrix  = false;
    bool        simple  = false;
    bool        claims  = false;
  };

  CorpusRow verify_group(std::string const& spec, Limits const& limits) {
    CorpusRow  row{spec};
    auto const pg = build_pg(build_group(spec, limits), limits);
    row.pg_size   = pg.size();
    auto const ax = check_axioms(pg);
    row.prop2     = ax.idempotent && ax.commutative && ax.right_self_distributive
                && ax.left_self_distributive;
    auto const mr = matrix_report(matrix_of(pg), true);
    row.simple    = mr.simple_form;
    row.matrix    = mr.symmetric && mr.trace_ok && (mr.simple_form == (pg.size() == 2));
    row.claims    = verify_properties(pg).asserted_all_pass();
    return row;
  }

  int cmd_verify(CliConfig const& cfg, std::string const& source) {
    if (source == "corpus") {
      std::vector<CorpusRow> rows;
      for (auto const& spec : corpus_group_specs()) {
        rows.push_back(verify_group(spec, cfg.limits));
      }
      bool ok = true;
      for (auto const& r : rows) {
        ok = ok && r.prop2 && r.matrix && r.claims;
      }
      if (cfg.json()) {
        json out = json::array();
        for (auto const& r : rows) {
          out.push_back({{"spec", r.spec},
                         {"pg_size", r.pg_size},
                         {"pseudoquandle_axioms", r.prop2},
                         {"matrix_laws", r.matrix},
                         {"simple", r.simple},
                         {"asserted_claims", r.claims}});
        }
        std::cout << json{{"groups", out}, {"all_pass", ok}}.dump(2) << "\n";
      } else {
        std::cout << "spec          |P_G|  axioms  matrix  simple  claims\n";
        for (auto const& r : rows) {
          std::string spec = r.spec;
          spec.resize(std::max<std::size_t>(spec.size(), 13), ' ');
          std::string size = std::to_string(r.pg_size);
          size.insert(0, size.size() < 5 ? 5 - size.size() : 0, ' ');
          std::cout << spec << " " << size << "  " << (r.prop2 ? "pass  " : "FAIL  ")
                    << "  " << (r.matrix ? "pass  " : "FAIL  ") << "  "
                    << (r.simple ? "yes   " : "no    ") << "  "
                    << (r.claims ? "pass" : "FAIL") << "\n";
        }
        std::cout << (ok ? "all asserted claims pass" : "asserted claims FAILED") << "\n";
      }
      return ok ? 0 : 1;
    }
    auto const m = load_source(source, cfg.limits, cfg.bound);
    auto const r = verify_properties(m);
    if (cfg.json()) {
      auto out      = properties_json(r);
      out["source"] = m.provenance();
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "source: " << m.provenance() << " (" << m.size() << (m.size() == 1 ? " element)\n" : " elements)\n");
      print_claims(r);
    }
    return r.asserted_all_pass() ? 0 : 1;
  }

  int cmd_classify(CliConfig const& cfg, std::string const& spec) {
    auto const decomposition = primary_decomposition(spec);
    auto const l             = build_L(decomposition, cfg.bound, cfg.limits);
    std::optional<IsomorphismWitness> witness;
    std::string                       failure;
    try {
      witness = verify_theorem1(spec, cfg.bound, cfg.limits);
    } catch (TheoremViolation const& e) {
      failure = e.what();
    }
    if (cfg.json()) {
      json out{{"spec", spec},
               {"free_rank", decomposition.free_rank},
               {"L", describe(l)},
               {"structure", l_structure_json(l)},
               {"isomorphic", witness.has_value()}};
      json pp = json::array();
      for (auto const& p : decomposition.prime_powers) {
        pp.push_back({p.prime, p.exponent});
      }
      out["prime_powers"] = pp;
      if (witness) {
        std::vector<Index> mapping;
        for (auto x : witness->mapping) {
          mapping.push_back(x + 1);
        }
        out["witness"] = mapping;
      } else {
        out["error"] = failure;
      }
      std::cout << out.dump(2) << "\n";
      return witness ? 0 : 1;
    }
    if (!witness) {
      std::cout << "P_G(" << spec << ") is not isomorphic to L = " << describe(l) << "\n"
                << failure << "\n";
      return 1;
    }
    std::cout << "P_G ≅ " << describe(l) << "\n";
    std::cout << "witness:\n";
    for (Index x = 0; x < witness->mapping.size(); ++x) {
      std::cout << "  " << subscript(x) << " -> " << l.realized.label(witness->mapping[x])
                << "\n";
    }
    return 0;
  }

  int cmd_iso(CliConfig const& cfg, std::string const& first, std::string const& second) {
    auto const a = load_source(first, cfg.limits, cfg.bound);
    auto const b = load_source(second, cfg.limits, cfg.bound);
    auto const w = find_isomorphism(a, b, cfg.limits);
    if (cfg.json()) {
      json out{{"first", a.provenance()}, {"second", b.provenance()}, {"isomorphic", w.has_value()}};
      if (w) {
        std::vector<Index> mapping;
        for (auto x : w->mapping) {
          mapping.push_back(x + 1);
        }
        out["mapping"] = mapping;
      }
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    if (!w) {
      std::cout << "not isomorphic\n";
      return 0;
    }
    std::cout << "isomorphic\n";
    for (Index x = 0; x < w->mapping.size(); ++x) {
      std::cout << "  " << subscript(x) << " -> " << subscript(w->mapping[x]) << "\n";
    }
    return 0;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pq: pseudoquandles from finite groups"};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig cfg;
  try {
    cfg.limits = Limits::from_env();
  } catch (pq::InputError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--bound", cfg.bound, "Truncation bound N for free factors")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-order", cfg.limits.max_order, "Group order cap")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-subgroups", cfg.limits.max_subgroups, "Normal subgroup count cap")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-magma", cfg.limits.max_magma, "Magma size cap")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-iso", cfg.limits.max_iso, "Isomorphism search size cap")
      ->check(CLI::PositiveNumber);

  std::string arg1, arg2;
  std::function<int()> run;

  auto group = app.add_subcommand("group", "Order, conjugacy classes and normal subgroups");
  group->add_option("spec", arg1, "Group spec")->required();
  group->callback([&] { run = [&] { return cmd_group(cfg, arg1); }; });

  auto axioms = app.add_subcommand("axioms", "Check the quandle axioms");
  axioms->add_option("source", arg1, "Magma source")->required();
  axioms->callback([&] { run = [&] { return cmd_axioms(cfg, arg1); }; });

  auto matrix = app.add_subcommand("matrix", "Print the subscript matrix and its laws");
  matrix->add_option("source", arg1, "Magma source")->required();
  matrix->callback([&] { run = [&] { return cmd_matrix(cfg, arg1); }; });

  auto kernels = app.add_subcommand("kernels", "Kernels, ascending chain and class equation");
  kernels->add_option("source", arg1, "Magma source")->required();
  kernels->callback([&] { run = [&] { return cmd_kernels(cfg, arg1); }; });

  auto verify = app.add_subcommand("verify", "Check the kernel properties");
  verify->add_option("source", arg1, "Magma source or 'corpus'")->required();
  verify->callback([&] { run = [&] { return cmd_verify(cfg, arg1); }; });

  auto classify = app.add_subcommand("classify", "Match P_G of an abelian group with L");
  classify->add_option("spec", arg1, "Abelian spec")->required();
  classify->callback([&] { run = [&] { return cmd_classify(cfg, arg1); }; });

  auto iso = app.add_subcommand("iso", "Search for an isomorphism");
  iso->add_option("first", arg1, "Magma source")->required();
  iso->add_option("second", arg2, "Magma source")->required();
  iso->callback([&] { run = [&] { return cmd_iso(cfg, arg1, arg2); }; });

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    return run();
  } catch (pq::InputError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (pq::Error const& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  }
}
