#include "badcycle/cli.hpp"

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "badcycle/balanced.hpp"
#include "badcycle/corpus.hpp"
#include "badcycle/generators.hpp"
#include "badcycle/goodness.hpp"
#include "badcycle/io.hpp"
#include "badcycle/order_theory.hpp"
#include "badcycle/reductions.hpp"
#include "badcycle/relations.hpp"

namespace badcycle {

namespace {

struct Options {
  std::string format = "text";
  std::uint64_t seed = 1;
  int jobs = 1;
  std::optional<std::uint64_t> budget;

  SearchBudget make_budget() const { return budget ? SearchBudget(*budget) : SearchBudget(); }
  bool json() const { return format == "json"; }
};

// Collects a machine-readable payload and a text rendering; only one of them
// is printed.
struct Report {
  Json payload = Json::object();
  std::ostringstream text;

  void print(const Options& opt, std::ostream& out) const {
    if (opt.json()) {
      out << dump(payload);
    } else {
      out << text.str();
    }
  }
};

std::string element_text(const Machine& m, StatePosition sp) {
  return "(" + m.state_name(sp.state) + "," + std::to_string(sp.position) + ")";
}

std::string order_text(const Machine& m, const CompatibleOrder& order) {
  std::string out;
  for (std::size_t r = 0; r < order.size(); ++r) {
    if (r) out += " < ";
    out += element_text(m, order[r]);
  }
  return out;
}

std::string order_system_text(const Machine& m, const OrderSystem& os) {
  std::ostringstream out;
  out << "  classes:";
  for (std::size_t r = 0; r < os.linear.size(); ++r) {
    out << (r ? " < " : " ") << "[" << os.linear[r] << "] {";
    const auto& cls = os.classes[os.linear[r]];
    for (std::size_t n = 0; n < cls.size(); ++n) {
      out << (n ? "," : "") << element_text(m, carrier_element(cls[n], m.k()));
    }
    out << "}";
  }
  out << "\n  partial:";
  if (os.partial.empty()) out << " none";
  for (const auto& [a, b] : os.partial) out << " " << a << "<" << b;
  out << "\n";
  return out.str();
}

std::string cycle_text(const DirectedHypergraph& h, const HyperCycle& c) {
  std::string out = h.vertex_name(c.vertices.front());
  for (std::size_t n = 0; n < c.edges.size(); ++n) {
    out += " -[e" + std::to_string(c.edges[n]) + "]- " + h.vertex_name(c.vertices[n + 1]);
  }
  return out;
}

Semantics parse_semantics(const std::string& s, const Machine& m) {
  if (s.empty()) return natural_semantics(m);
  if (s == "cycling") return Semantics::cycling;
  if (s == "general") return Semantics::general;
  throw InputError("unknown semantics '" + s + "'");
}

void write_or_print(const std::string& path, const Json& j, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << dump(j);
  } else {
    write_text_file(path, dump(j));
  }
}

Machine load_machine(const std::string& path) { return machine_from_json(read_json_file(path)); }
DirectedHypergraph load_graph(const std::string& path) {
  return hypergraph_from_json(read_json_file(path));
}

// Runs task(i) for i in [0, count) on `jobs` threads; results keep index
// order.
template <typename Result>
std::vector<Result> parallel_map(std::size_t count, int jobs,
                                 const std::function<Result(std::size_t)>& task) {
  std::vector<Result> results(count);
  const std::size_t workers = static_cast<std::size_t>(std::max(1, jobs));
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) results[i] = task(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

struct CorpusOutcome {
  bool agree = true;
  std::string description;
};

bool truth_table_satisfiable(const CnfInstance& phi) {
  const std::size_t n = phi.variables.size();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    Assignment a(n);
    for (std::size_t v = 0; v < n; ++v) a[v] = (bits >> v) & 1U;
    if (satisfies(phi, a)) return true;
  }
  return false;
}

CorpusOutcome corpus_case(const std::string& kind, std::uint64_t seed) {
  Rng rng(seed);
  CorpusOutcome out;
  if (kind == "goodness") {
    int k = 2 + static_cast<int>(uniform(rng, 2));
    std::size_t vertices = static_cast<std::size_t>(k) + uniform(rng, 6 - static_cast<std::uint64_t>(k));
    std::size_t states = 1 + uniform(rng, 3);
    bool cycling = uniform(rng, 2) == 0;
    auto h = random_hypergraph(rng, k, vertices, uniform(rng, 2 * vertices + 1));
    auto m = random_machine(rng, k, states, cycling, 25, 1);
    auto sem = cycling ? Semantics::cycling : Semantics::general;
    bool fast = is_good(h, m, sem).good;
    auto slow = brute_force_is_good(h, m, vertices * states, sem, SearchBudget::unlimited());
    out.agree = fast == (slow.outcome == BruteForceVerdict::Outcome::good);
    out.description = "product " + std::string(fast ? "good" : "bad") + ", brute force " +
                      (slow.outcome == BruteForceVerdict::Outcome::good ? "good" : "bad");
  } else if (kind == "decide2") {
    auto m = random_machine(rng, 2, 3, true, 30, 2);
    bool fast = decide_cycling_2machine(m);
    bool slow = find_compatible_order(m, SearchBudget::unlimited()).has_value();
    out.agree = fast == slow;
    out.description = "decide2 " + std::string(fast ? "true" : "false") + ", search " +
                      (slow ? "found" : "none");
  } else if (kind == "sat") {
    auto phi = random_cnf(rng, 1 + uniform(rng, 6), 1 + uniform(rng, 8));
    bool sat = truth_table_satisfiable(phi);
    bool order = find_compatible_order(sat_to_machine(phi), SearchBudget::unlimited()).has_value();
    out.agree = sat == order;
    out.description = "truth table " + std::string(sat ? "sat" : "unsat") + ", order " +
                      (order ? "found" : "none");
  } else if (kind == "balance") {
    auto g = random_digraph(rng, 2 + uniform(rng, 5), static_cast<int>(15 + uniform(rng, 30)));
    auto cmp = check_two_balanced_equivalence(g);
    out.agree = cmp.agree();
    out.description = "2-balanced " + std::string(cmp.balanced ? "yes" : "no") +
                      ", counter-good " + (cmp.good_for_all ? "yes" : "no");
  } else {
    throw InputError("unknown corpus kind '" + kind + "'");
  }
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Bad-cycle machines on directed hypergraphs", "badcycle"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", opt.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", opt.seed, "Seed for randomized corpora");
  app.add_option("--jobs", opt.jobs, "Worker threads for corpus checks")->check(CLI::PositiveNumber);
  app.add_option("--budget", opt.budget, "Node expansion cap for exact searches (0 = none)");

  std::function<int()> action;
  std::string machine_path, graph_path, order_path, output_path, semantics, witness_path;
  std::string alpha_text, input_path, gen_name, kind;
  bool all = false, exact = false, decide = false, show_coloring = false, compare = false,
       corollary = false;
  int n_max = 0, param_n = -1, param_k = -1, param_m = -1, k_max = 12, count = 100;
  std::size_t max_len = 0;
  std::string rel_a, rel_b;
  std::vector<std::string> rel_inputs;

  auto* check_good = app.add_subcommand("check-good", "Decide whether a hypergraph is good");
  check_good->add_option("-m,--machine", machine_path)->required();
  check_good->add_option("-g,--graph", graph_path)->required();
  check_good->add_option("--semantics", semantics, "cycling or general (default: from B)");
  check_good->add_option("--witness-out", witness_path);
  check_good->callback([&] {
    action = [&] {
      auto m = load_machine(machine_path);
      auto h = load_graph(graph_path);
      auto sem = parse_semantics(semantics, m);
      auto v = is_good(h, m, sem);
      Report r;
      r.payload["good"] = v.good;
      r.payload["semantics"] = std::string(to_string(sem));
      r.text << (v.good ? "good" : "not good") << "\n";
      if (v.witness) {
        r.payload["witness"] = witness_to_json(*v.witness, h, m);
        r.text << "bad cycle: " << cycle_text(h, v.witness->cycle) << "\nstates:";
        for (StateId s : v.witness->states) r.text << " " << m.state_name(s);
        r.text << "\n";
        if (!witness_path.empty()) write_text_file(witness_path, dump(r.payload["witness"]));
      }
      r.print(opt, out);
      return v.good ? kExitYes : kExitNo;
    };
  });

  auto* find_order = app.add_subcommand("find-order", "Search for a compatible order");
  find_order->add_option("-m,--machine", machine_path)->required();
  find_order->add_option("-o,--output", output_path);
  find_order->callback([&] {
    action = [&] {
      auto m = load_machine(machine_path);
      auto order = find_compatible_order(m, opt.make_budget());
      Report r;
      r.payload["found"] = order.has_value();
      if (order) {
        r.payload["order"] = order_to_json(*order, m);
        r.text << order_text(m, *order) << "\n";
        if (!output_path.empty()) write_text_file(output_path, dump(r.payload["order"]));
      } else {
        r.text << "no compatible order\n";
      }
      r.print(opt, out);
      return order ? kExitYes : kExitNo;
    };
  });

  auto* find_system = app.add_subcommand("find-order-system", "Search for compatible order systems");
  find_system->add_option("-m,--machine", machine_path)->required();
  find_system->add_flag("--all", all, "List every compatible order system");
  find_system->add_option("-o,--output", output_path);
  find_system->callback([&] {
    action = [&] {
      auto m = load_machine(machine_path);
      auto search = find_order_system(m, all, opt.make_budget());
      Report r;
      Json systems = Json::array();
      r.text << "order systems: " << search.systems.size() << "\n";
      for (std::size_t n = 0; n < search.systems.size(); ++n) {
        systems.push_back(order_system_to_json(search.systems[n], m));
        r.text << "system " << n << ":\n" << order_system_text(m, search.systems[n]);
      }
      r.payload["count"] = search.systems.size();
      r.payload["systems"] = systems;
      r.payload["nodes"] = search.nodes;
      if (!output_path.empty() && !search.systems.empty()) {
        write_text_file(output_path, dump(all ? systems : systems[0]));
      }
      r.print(opt, out);
      return search.systems.empty() ? kExitNo : kExitYes;
    };
  });

  auto report_verdict = [&](const Verdict& v) {
    Report r;
    r.payload["compatible"] = v.ok;
    r.payload["violations"] = v.violations;
    r.text << (v.ok ? "compatible" : "not compatible") << "\n";
    for (const auto& line : v.violations) r.text << "  " << line << "\n";
    r.print(opt, out);
    return v.ok ? kExitYes : kExitNo;
  };

  auto* verify_order = app.add_subcommand("verify-order", "Check a compatible order");
  verify_order->add_option("-m,--machine", machine_path)->required();
  verify_order->add_option("-r,--order", order_path)->required();
  verify_order->callback([&] {
    action = [&] {
      auto m = load_machine(machine_path);
      return report_verdict(verify_compatible_order(m, order_from_json(read_json_file(order_path), m)));
    };
  });

  auto* verify_system = app.add_subcommand("verify-order-system", "Check a compatible order system");
  verify_system->add_option("-m,--machine", machine_path)->required();
  verify_system->add_option("-r,--system", order_path)->required();
  verify_system->callback([&] {
    action = [&] {
      auto m = load_machine(machine_path);
      return report_verdict(
          verify_order_system(m, order_system_from_json(read_json_file(order_path), m)));
    };
  });

  auto* decide2 = app.add_subcommand("decide2", "Polynomial decision for cycling 2-machines");
  decide2->add_option("-m,--machine", machine_path)->required();
  decide2->callback([&] {
    action = [&] {
      auto m = load_machine(machine_path);
      bool ok = decide_cycling_2machine(m);
      Report r;
      r.payload["compatible_order_exists"] = ok;
      r.text << (ok ? "true" : "false") << "\n";
      r.print(opt, out);
      return ok ? kExitYes : kExitNo;
    };
  });

  auto* paths = app.add_subcommand("paths-good", "Check P_1..P_n for a cycling 2-machine");
  paths->add_option("-m,--machine", machine_path)->required();
  paths->add_option("--n-max", n_max, "Longest path to test")->default_val(16);
  paths->callback([&] {
    action = [&] {
      auto m = load_machine(machine_path);
      auto result = check_paths_good(m, static_cast<std::size_t>(n_max));
      Report r;
      r.payload["n_max"] = n_max;
      if (result.first_bad) {
        r.payload["first_bad"] = *result.first_bad;
        r.text << "P_" << *result.first_bad << " is not good\n";
      } else {
        r.payload["first_bad"] = nullptr;
        r.text << "P_1..P_" << n_max << " are good\n";
      }
      r.print(opt, out);
      return result.first_bad ? kExitNo : kExitYes;
    };
  });

  auto* chromatic = app.add_subcommand("chromatic", "Chromatic number (greedy bound or exact)");
  chromatic->add_option("-g,--graph", graph_path)->required();
  chromatic->add_flag("--exact", exact, "Run the exact solver");
  chromatic->add_flag("--show-coloring", show_coloring, "Print the coloring");
  chromatic->add_option("--coloring-out", output_path);
  chromatic->callback([&] {
    action = [&] {
      auto h = load_graph(graph_path);
      Report r;
      Coloring coloring;
      int value = 0;
      if (exact) {
        try {
          auto result = chromatic_number_exact(h, opt.make_budget());
          value = result.chromatic_number;
          coloring = result.coloring;
          r.payload["nodes"] = result.nodes;
        } catch (const BudgetExceeded& e) {
          Report b;
          b.payload["budget_exhausted"] = true;
          b.payload["lower_bound"] = e.lower_bound ? Json(*e.lower_bound) : Json(nullptr);
          b.payload["upper_bound"] = e.upper_bound ? Json(*e.upper_bound) : Json(nullptr);
          b.text << "budget exhausted";
          if (e.lower_bound) b.text << "; lower bound " << *e.lower_bound;
          if (e.upper_bound) b.text << "; upper bound " << *e.upper_bound;
          b.text << "\n";
          b.print(opt, out);
          return kExitBudget;
        }
      } else {
        coloring = greedy_coloring(h);
        value = color_count(coloring);
      }
      r.payload["chromatic_number"] = value;
      r.payload["exact"] = exact;
      Json colors = Json::object();
      for (VertexId v = 0; v < h.num_vertices(); ++v) colors[h.vertex_name(v)] = coloring[v];
      r.payload["coloring"] = colors;
      r.text << value << "\n";
      if (show_coloring) {
        for (VertexId v = 0; v < h.num_vertices(); ++v) {
          r.text << h.vertex_name(v) << " " << coloring[v] << "\n";
        }
      }
      if (!output_path.empty()) write_text_file(output_path, dump(colors));
      r.print(opt, out);
      return kExitYes;
    };
  });

  auto unbalanced_report = [&](const DirectedHypergraph& g, const OrientedCycle& c, Report& r) {
    Json steps = Json::array();
    r.text << "violating cycle: " << g.vertex_name(c.vertices.front());
    for (std::size_t n = 0; n < c.edges.size(); ++n) {
      steps.push_back(Json{{"edge", c.edges[n]}, {"forward", static_cast<bool>(c.forward[n])}});
      r.text << (c.forward[n] ? " -> " : " <- ") << g.vertex_name(c.vertices[n + 1]);
    }
    r.text << " (" << c.forward_count() << " forward, " << c.backward_count() << " backward)\n";
    Json names = Json::array();
    for (VertexId v : c.vertices) names.push_back(g.vertex_name(v));
    r.payload["witness"] = Json{{"vertices", names}, {"steps", steps}};
  };

  auto* color_balanced = app.add_subcommand("color-balanced", "Color an alpha-balanced digraph");
  color_balanced->add_option("-g,--graph", graph_path)->required();
  color_balanced->add_option("--alpha", alpha_text)->required();
  color_balanced->callback([&] {
    action = [&] {
      auto g = load_graph(graph_path);
      Rational alpha = parse_rational(alpha_text);
      Report r;
      try {
        auto result = balanced_coloring(g, alpha);
        r.payload["alpha"] = to_string(alpha);
        r.payload["colors_allowed"] = result.alpha_ceiling + 1;
        Json rows = Json::array();
        r.text << "vertex potential color\n";
        for (VertexId v = 0; v < g.num_vertices(); ++v) {
          rows.push_back(Json{{"vertex", g.vertex_name(v)},
                              {"potential", result.potential[v]},
                              {"color", result.coloring[v]}});
          r.text << g.vertex_name(v) << " " << result.potential[v] << " " << result.coloring[v]
                 << "\n";
        }
        r.payload["vertices"] = rows;
        r.print(opt, out);
        return kExitYes;
      } catch (const UnbalancedError& e) {
        r.text << "not " << to_string(alpha) << "-balanced\n";
        unbalanced_report(g, e.witness, r);
        r.print(opt, out);
        return kExitNo;
      }
    };
  });

  auto* balance = app.add_subcommand("balance-check", "Decide alpha-balance");
  balance->add_option("-g,--graph", graph_path)->required();
  balance->add_option("--alpha", alpha_text)->required();
  balance->add_flag("--compare-counter", compare,
                    "Also compare 2-balance with goodness for counter machines");
  balance->add_option("--n-max", n_max, "Largest counter machine (default 2|E|+2)");
  balance->callback([&] {
    action = [&] {
      auto g = load_graph(graph_path);
      Rational alpha = parse_rational(alpha_text);
      auto v = is_alpha_balanced(g, alpha);
      Report r;
      r.payload["alpha"] = to_string(alpha);
      r.payload["balanced"] = v.balanced;
      r.text << (v.balanced ? "balanced" : "not balanced") << "\n";
      if (v.witness) unbalanced_report(g, *v.witness, r);
      int code = v.balanced ? kExitYes : kExitNo;
      if (compare) {
        auto cmp = check_two_balanced_equivalence(g, n_max);
        r.payload["two_balanced"] = cmp.balanced;
        r.payload["counter_good"] = cmp.good_for_all;
        r.payload["agree"] = cmp.agree();
        r.text << "2-balanced: " << (cmp.balanced ? "yes" : "no")
               << ", good for counter machines: " << (cmp.good_for_all ? "yes" : "no");
        if (cmp.first_bad_n) r.text << " (first failure at n = " << *cmp.first_bad_n << ")";
        r.text << "\n";
        if (!cmp.agree()) code = kExitNo;
      }
      r.print(opt, out);
      return code;
    };
  });

  auto* gen = app.add_subcommand("gen", "Emit a generated machine, hypergraph, order or system");
  gen->add_option("name", gen_name,
                  "hasse-machine, counter-machine, counter-order, example3-machine, "
                  "example3-order-system, unbalanced-machine, unbalanced-order-system, "
                  "explicit-hasse, cycling-construction, incomparable-pairs, shift, "
                  "corollary-machine")
      ->required();
  gen->add_option("--n", param_n);
  gen->add_option("--k", param_k);
  gen->add_option("--m", param_m);
  gen->add_option("--machine", machine_path);
  gen->add_option("--order", order_path);
  gen->add_option("-o,--output", output_path);
  gen->callback([&] {
    action = [&] {
      auto need = [&](int value, const char* flag) {
        if (value < 0) throw InputError("gen " + gen_name + " needs " + flag);
        return value;
      };
      Json j;
      if (gen_name == "hasse-machine") {
        j = machine_to_json(gen_hasse_machine());
      } else if (gen_name == "counter-machine") {
        j = machine_to_json(gen_counter_machine(need(param_n, "--n")));
      } else if (gen_name == "counter-order") {
        int n = need(param_n, "--n");
        j = order_to_json(counter_machine_order(n), gen_counter_machine(n));
      } else if (gen_name == "example3-machine") {
        j = machine_to_json(gen_example3_machine());
      } else if (gen_name == "example3-order-system") {
        j = order_system_to_json(example3_order_system(), gen_example3_machine());
      } else if (gen_name == "unbalanced-machine") {
        j = machine_to_json(gen_unbalanced_machine(need(param_k, "--k")));
      } else if (gen_name == "unbalanced-order-system") {
        int k = need(param_k, "--k");
        j = order_system_to_json(unbalanced_order_system(k), gen_unbalanced_machine(k));
      } else if (gen_name == "explicit-hasse") {
        int n = need(param_n, "--n");
        if (n > 4) err << "warning: n > 4 is beyond the exact chromatic checks\n";
        j = hypergraph_to_json(gen_explicit_hasse_digraph(n));
      } else if (gen_name == "cycling-construction") {
        int ground = need(param_m, "--m");
        Machine m;
        CompatibleOrder order;
        if (!machine_path.empty()) {
          if (order_path.empty()) throw InputError("--machine needs --order");
          m = load_machine(machine_path);
          order = order_from_json(read_json_file(order_path), m);
        } else {
          int n = need(param_n, "--n (counter machine) or --machine/--order");
          m = gen_counter_machine(n);
          order = counter_machine_order(n);
        }
        j = hypergraph_to_json(gen_cycling_construction(m, order, ground));
      } else if (gen_name == "incomparable-pairs") {
        j = hypergraph_to_json(gen_incomparable_pairs_digraph(need(param_m, "--m")));
      } else if (gen_name == "shift") {
        j = hypergraph_to_json(gen_shift_digraph(need(param_m, "--m")));
      } else if (gen_name == "corollary-machine") {
        j = machine_to_json(corollary_machine().machine);
      } else {
        throw InputError("unknown generator '" + gen_name + "'");
      }
      write_or_print(output_path, j, out);
      return kExitYes;
    };
  });

  auto* reduce = app.add_subcommand("reduce-3sat", "Reduce 3-SAT to a cycling k-machine");
  reduce->add_option("-i,--input", input_path)->required();
  reduce->add_option("-o,--output", output_path);
  reduce->add_flag("--decide", decide, "Search for a compatible order (exit 0 found, 1 none)");
  reduce->callback([&] {
    action = [&] {
      auto phi = parse_cnf(read_text_file(input_path));
      auto m = sat_to_machine(phi);
      if (!decide) {
        write_or_print(output_path, machine_to_json(m), out);
        return kExitYes;
      }
      if (!output_path.empty()) write_text_file(output_path, dump(machine_to_json(m)));
      auto order = find_compatible_order(m, opt.make_budget());
      Report r;
      r.payload["satisfiable"] = order.has_value();
      r.text << (order ? "satisfiable" : "unsatisfiable") << "\n";
      if (order) {
        auto a = order_to_assignment(*order, phi);
        Json assignment = Json::object();
        for (std::size_t v = 0; v < a.size(); ++v) {
          assignment[phi.variables[v]] = static_cast<bool>(a[v]);
          r.text << phi.variables[v] << "=" << (a[v] ? "true" : "false") << "\n";
        }
        r.payload["assignment"] = assignment;
      }
      r.print(opt, out);
      return order ? kExitYes : kExitNo;
    };
  });

  auto* rel = app.add_subcommand("rel", "Relation algebra");
  rel->require_subcommand(1);
  rel->fallthrough();
  auto load_relation = [](const std::string& path) {
    return relation_from_json(read_json_file(path));
  };
  auto relation_report = [&](const Relation& result) {
    Report r;
    r.payload = relation_to_json(result);
    r.text << to_string(result) << "\n";
    r.print(opt, out);
    return kExitYes;
  };
  auto* rel_compose = rel->add_subcommand("compose", "A o B");
  rel_compose->add_option("-a", rel_a)->required();
  rel_compose->add_option("-b", rel_b)->required();
  rel_compose->callback([&] {
    action = [&] { return relation_report(compose(load_relation(rel_a), load_relation(rel_b))); };
  });
  auto* rel_reverse = rel->add_subcommand("reverse", "Reverse of R");
  rel_reverse->add_option("-r", rel_a)->required();
  rel_reverse->callback([&] {
    action = [&] { return relation_report(reverse(load_relation(rel_a))); };
  });
  auto gather = [&]() {
    std::vector<Relation> out_set;
    if (corollary) out_set.push_back(corollary_relation());
    for (const auto& path : rel_inputs) out_set.push_back(load_relation(path));
    if (out_set.empty()) throw InputError("give -r files or --corollary");
    return out_set;
  };
  auto* rel_closure = rel->add_subcommand("closure", "Closure under composition and reversal");
  rel_closure->add_option("-r", rel_inputs, "Generator files");
  rel_closure->add_flag("--corollary", corollary, "Use the corollary relation as generator");
  rel_closure->callback([&] {
    action = [&] {
      auto closure = semigroup_closure(gather());
      Report r;
      Json list = Json::array();
      r.text << "closure size: " << closure.size() << "\n";
      for (const auto& x : closure) {
        list.push_back(relation_to_json(x));
        r.text << to_string(x) << "\n";
      }
      r.payload["size"] = closure.size();
      r.payload["relations"] = list;
      r.print(opt, out);
      return kExitYes;
    };
  });
  auto* rel_pq = rel->add_subcommand("pq-check", "pq-compatibility of a relation set");
  rel_pq->add_option("-r", rel_inputs, "Relation files forming the set");
  rel_pq->add_flag("--corollary", corollary, "Check the corollary's word-defined set");
  rel_pq->callback([&] {
    action = [&] {
      std::vector<Relation> set;
      if (corollary) {
        set = corollary_s_set();
      }
      for (const auto& path : rel_inputs) set.push_back(load_relation(path));
      if (set.empty()) throw InputError("give -r files or --corollary");
      auto v = is_pq_compatible(set);
      Report r;
      r.payload["pq_compatible"] = v.compatible;
      r.payload["set_size"] = set.size();
      r.payload["violations"] = v.violations;
      Json witnesses = Json::array();
      for (const auto& w : v.witnesses) witnesses.push_back(Json{{"p", w.p}, {"q", w.q}, {"j", w.j}});
      r.payload["witnesses"] = witnesses;
      r.text << (v.compatible ? "pq-compatible" : "not pq-compatible") << " (" << set.size()
             << " relations)\n";
      for (const auto& line : v.violations) r.text << "  " << line << "\n";
      r.print(opt, out);
      return v.compatible ? kExitYes : kExitNo;
    };
  });
  auto* rel_loop = rel->add_subcommand("loop-k", "Exponent in the loop identity");
  rel_loop->add_option("-r", rel_a)->required();
  rel_loop->add_option("--k-max", k_max)->default_val(12);
  rel_loop->callback([&] {
    action = [&] {
      auto result = loop_lemma_exponent(load_relation(rel_a), k_max);
      Report r;
      r.payload["k"] = result.k ? Json(*result.k) : Json(nullptr);
      r.payload["preperiod"] = result.preperiod;
      r.payload["period"] = result.period;
      r.payload["window_conclusive"] = result.window_conclusive;
      if (result.k) {
        r.text << "k = " << *result.k << "\n";
      } else {
        r.text << "no k <= " << k_max << "\n";
      }
      r.text << "powers: preperiod " << result.preperiod << ", period " << result.period
             << (result.window_conclusive ? ", window conclusive" : ", window too short")
             << "\n";
      r.print(opt, out);
      return result.k ? kExitYes : kExitNo;
    };
  });
  auto* rel_alt = rel->add_subcommand("odd-alternating", "Find an odd alternating cycle");
  rel_alt->add_option("-g,--graph", graph_path)->required();
  rel_alt->callback([&] {
    action = [&] {
      auto g = load_graph(graph_path);
      auto c = detect_odd_alternating_cycle(g);
      Report r;
      r.payload["found"] = c.has_value();
      if (c) {
        Json names = Json::array();
        for (VertexId v : c->vertices) names.push_back(g.vertex_name(v));
        r.payload["cycle"] = Json{{"vertices", names}, {"edges", c->edges}};
        r.text << "odd alternating cycle: " << cycle_text(g, *c) << "\n";
      } else {
        r.text << "none\n";
      }
      r.print(opt, out);
      return c ? kExitYes : kExitNo;
    };
  });

  auto* oracle = app.add_subcommand("oracle", "Brute-force reference checks");
  oracle->require_subcommand(1);
  oracle->fallthrough();
  auto* oracle_good = oracle->add_subcommand("good", "Goodness straight from the definition");
  oracle_good->add_option("-m,--machine", machine_path)->required();
  oracle_good->add_option("-g,--graph", graph_path)->required();
  oracle_good->add_option("--semantics", semantics);
  oracle_good->add_option("--max-len", max_len, "Longest cycle (default |V||S|)");
  oracle_good->callback([&] {
    action = [&] {
      auto m = load_machine(machine_path);
      auto h = load_graph(graph_path);
      auto sem = parse_semantics(semantics, m);
      std::size_t len = max_len ? max_len : h.num_vertices() * m.num_states();
      auto v = brute_force_is_good(h, m, len, sem, opt.make_budget());
      Report r;
      if (v.outcome == BruteForceVerdict::Outcome::budget_exhausted) {
        r.payload["budget_exhausted"] = true;
        r.text << "budget exhausted\n";
        r.print(opt, out);
        return kExitBudget;
      }
      bool good = v.outcome == BruteForceVerdict::Outcome::good;
      r.payload["good"] = good;
      r.payload["max_len"] = len;
      r.text << (good ? "good" : "not good") << " (cycles up to length " << len << ")\n";
      if (v.witness) {
        r.payload["witness"] = witness_to_json(*v.witness, h, m);
        r.text << "bad cycle: " << cycle_text(h, v.witness->cycle) << "\n";
      }
      r.print(opt, out);
      return good ? kExitYes : kExitNo;
    };
  });
  auto* oracle_sat = oracle->add_subcommand("sat", "Truth-table satisfiability");
  oracle_sat->add_option("-i,--input", input_path)->required();
  oracle_sat->callback([&] {
    action = [&] {
      auto phi = parse_cnf(read_text_file(input_path));
      if (phi.variables.size() > 24) throw InputError("truth table limited to 24 variables");
      bool sat = truth_table_satisfiable(phi);
      Report r;
      r.payload["satisfiable"] = sat;
      r.text << (sat ? "satisfiable" : "unsatisfiable") << "\n";
      r.print(opt, out);
      return sat ? kExitYes : kExitNo;
    };
  });
  auto* oracle_corpus = oracle->add_subcommand("corpus", "Seeded agreement check against oracles");
  oracle_corpus->add_option("--kind", kind, "goodness, decide2, sat or balance")->required();
  oracle_corpus->add_option("--count", count)->default_val(100);
  oracle_corpus->callback([&] {
    action = [&] {
      if (count < 0) throw InputError("--count must be non-negative");
      (void)corpus_case(kind, 0);  // rejects unknown kinds before spawning threads
      auto results = parallel_map<CorpusOutcome>(
          static_cast<std::size_t>(count), opt.jobs,
          [&](std::size_t i) { return corpus_case(kind, opt.seed + i); });
      std::size_t agree = 0;
      Json disagreements = Json::array();
      Report r;
      for (std::size_t i = 0; i < results.size(); ++i) {
        if (results[i].agree) {
          ++agree;
        } else {
          disagreements.push_back(Json{{"seed", opt.seed + i}, {"detail", results[i].description}});
        }
      }
      r.payload["kind"] = kind;
      r.payload["instances"] = results.size();
      r.payload["agree"] = agree;
      r.payload["disagreements"] = disagreements;
      r.text << kind << ": " << agree << "/" << results.size() << " agree\n";
      for (const auto& d : disagreements) {
        r.text << "  seed " << d["seed"].get<std::uint64_t>() << ": "
               << d["detail"].get<std::string>() << "\n";
      }
      r.print(opt, out);
      return agree == results.size() ? kExitYes : kExitNo;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitYes;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitYes;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  if (!action) {
    err << "error: no command given\n";
    return kExitInputError;
  }
  try {
    return action();
  } catch (const BudgetExceeded& e) {
    err << "budget exhausted: " << e.what() << "\n";
    if (opt.json()) {
      out << dump(Json{{"budget_exhausted", true}, {"message", e.what()}});
    }
    return kExitBudget;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace badcycle
