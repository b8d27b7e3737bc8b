// Command-line surface over the stabcover library: exact JSON in, exact
// JSON out. Exit codes: 0 ok, 1 invalid input, 2 non-generic path, 3
// internal invariant violation.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>

#include "stabcover/errors.hpp"
#include "stabcover/json_io.hpp"

namespace sc = stabcover;
using sc::json;

namespace {

struct Options {
  std::string diagram;
  std::string charge_file;
  std::string path_file;
  std::string word;
  std::string theta;
  std::string format = "json";
  std::int64_t turns = 1;
  int depth = 3;
  bool fix_special = false;
};

sc::BraidWord parse_word_arg(const std::string& text, const sc::Diagram& d) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw sc::InvalidInput(std::string("malformed word literal: ") + e.what());
  }
  return sc::word_from_json(j, d);
}

sc::Weight parse_theta_arg(const std::string& text, const sc::Diagram& d) {
  sc::Weight w;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    auto q = sc::parse_rational(tok);
    if (!q) throw sc::InvalidInput("malformed rational '" + tok + "' in theta");
    w.theta.push_back(*q);
  }
  if (w.theta.size() != d.size())
    throw sc::InvalidInput("theta needs one entry per vertex");
  return w;
}

void emit(const json& payload, const Options& opt) {
  if (opt.format == "json") {
    std::cout << payload.dump(2) << "\n";
    return;
  }
  // Text mode: compact single-level rendering.
  for (auto it = payload.begin(); it != payload.end(); ++it)
    std::cout << it.key() << ": " << it.value().dump() << "\n";
}

sc::CentralCharge charge_or_basepoint(const Options& opt, const sc::Diagram& d) {
  if (opt.charge_file.empty()) return sc::standard_basepoint(d);
  return sc::load_charge_file(opt.charge_file, d);
}

int run_diagram(const Options& opt) {
  emit(sc::diagram_to_json(sc::Diagram::parse(opt.diagram)), opt);
  return 0;
}

int run_roots(const Options& opt) {
  sc::Diagram d = sc::Diagram::parse(opt.diagram);
  json out = json::array();
  for (const auto& r : sc::enumerate_roots(d)) out.push_back(sc::vector_to_json(r));
  emit(json{{"count", out.size()}, {"roots", out}}, opt);
  return 0;
}

int run_regular(const Options& opt) {
  sc::Diagram d = sc::Diagram::parse(opt.diagram);
  if (opt.charge_file.empty()) throw sc::InvalidInput("regular requires --charge");
  auto Z = sc::load_charge_file(opt.charge_file, d);
  auto rep = sc::is_regular(d, Z);
  json out{{"regular", rep.regular}};
  if (rep.witness) out["witness"] = sc::vector_to_json(*rep.witness);
  emit(out, opt);
  return 0;
}

int run_lift(const Options& opt) {
  sc::Diagram d = sc::Diagram::parse(opt.diagram);
  if (opt.path_file.empty()) throw sc::InvalidInput("lift requires --path");
  auto path = sc::load_path_file(opt.path_file, d);
  auto state = sc::initial_state(d, path.vertices.front());
  auto lifted = sc::lift_path(state, path);
  emit(json{{"state", sc::state_to_json(lifted.state)},
            {"events", sc::events_to_json(lifted.events)}},
       opt);
  return 0;
}

int run_monodromy(const Options& opt) {
  sc::Diagram d = sc::Diagram::parse(opt.diagram);
  if (opt.word.empty()) throw sc::InvalidInput("monodromy requires --word");
  auto deck = sc::monodromy(d, parse_word_arg(opt.word, d));
  emit(sc::deck_to_json(deck), opt);
  return 0;
}

int run_normalize(const Options& opt) {
  sc::Diagram d = sc::Diagram::parse(opt.diagram);
  if (opt.charge_file.empty()) throw sc::InvalidInput("normalize requires --charge");
  auto Z = sc::load_charge_file(opt.charge_file, d);
  auto res = sc::normalize(d, Z);
  emit(json{{"mu", json{{"re", sc::format_rational(res.mu.re)},
                        {"im", sc::format_rational(res.mu.im)}}},
            {"word", sc::word_to_json(res.word)},
            {"replay_charge", sc::charge_to_json(res.replay)},
            {"state", sc::state_to_json(res.state)}},
       opt);
  return 0;
}

int run_rotate(const Options& opt) {
  sc::Diagram d = sc::Diagram::parse(opt.diagram);
  auto state = sc::initial_state(d, charge_or_basepoint(opt, d));
  auto lifted = sc::rotate_loop(state, opt.turns);
  emit(json{{"state", sc::state_to_json(lifted.state)},
            {"events", sc::events_to_json(lifted.events)}},
       opt);
  return 0;
}

int run_coxeter_check(const Options& opt) {
  sc::Diagram d = sc::Diagram::parse(opt.diagram);
  if (d.affine()) throw sc::InvalidInput("coxeter-check applies to finite diagrams");
  int h = sc::coxeter_number(d);
  sc::BraidWord w;
  for (int rep = 0; rep < h; ++rep)
    for (std::size_t t = 0; t < d.size(); ++t) w.push_back({t, 1});
  auto deck = sc::monodromy(d, w);
  json out{{"coxeter_number", h}, {"pure_shift", deck.pure_shift}};
  bool uniform = true;
  for (auto k : deck.ledger_delta) uniform = uniform && k == deck.ledger_delta[0];
  if (uniform) out["ledger"] = deck.ledger_delta[0];
  else {
    json ls = json::array();
    for (auto k : deck.ledger_delta) ls.push_back(k);
    out["ledger"] = ls;
  }
  emit(out, opt);
  return 0;
}

int run_exchange(const Options& opt) {
  sc::Diagram d = sc::Diagram::parse(opt.diagram);
  auto graph = sc::exchange_bfs(d, opt.depth);
  if (opt.format == "dot") {
    std::cout << sc::exchange_to_dot(graph);
    return 0;
  }
  emit(sc::exchange_to_json(graph), opt);
  return 0;
}

int run_constellation(const Options& opt) {
  sc::Diagram d = sc::Diagram::parse(opt.diagram);
  if (opt.theta.empty()) throw sc::InvalidInput("constellation requires --theta");
  auto theta = parse_theta_arg(opt.theta, d);
  auto rep = sc::find_semistable(d, theta);
  auto check = sc::is_semistable(rep, theta);
  emit(json{{"representation", sc::rep_to_json(rep)},
            {"certificate", sc::semistability_to_json(check)}},
       opt);
  return 0;
}

int run_verify_relations(const Options& opt) {
  sc::Diagram d = sc::Diagram::parse(opt.diagram);
  auto report = sc::verify_relations(d);
  json checks = json::array();
  for (const auto& c : report.checks) {
    std::string kind;
    switch (c.kind) {
      case sc::RelationKind::Involution: kind = "involution"; break;
      case sc::RelationKind::Commutation: kind = "commutation"; break;
      case sc::RelationKind::Braid: kind = "braid"; break;
      case sc::RelationKind::InfiniteOrder: kind = "infinite-order"; break;
    }
    checks.push_back(json{{"kind", kind},
                          {"i", d.vertex_label(c.i)},
                          {"j", d.vertex_label(c.j)},
                          {"ok", c.ok}});
  }
  emit(json{{"all_ok", report.all_ok}, {"checks", checks}}, opt);
  return 0;
}

int run_automorphisms(const Options& opt) {
  sc::Diagram d = sc::Diagram::parse(opt.diagram);
  auto gens = sc::automorphism_generators(d, opt.fix_special);
  auto all = sc::all_automorphisms(d, opt.fix_special);
  json gj = json::array();
  for (const auto& g : gens) {
    json p = json::array();
    for (auto v : g.perm) p.push_back(d.vertex_label(v));
    gj.push_back(p);
  }
  emit(json{{"group_order", all.size()}, {"generators", gj}}, opt);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact chamber geometry for ADE stability covers"};
  app.require_subcommand(1);

  Options opt;
  int (*handler)(const Options&) = nullptr;

  auto add = [&](const std::string& name, const std::string& help,
                 int (*fn)(const Options&), bool needs_diagram = true) {
    CLI::App* sub = app.add_subcommand(name, help);
    if (needs_diagram)
      sub->add_option("--diagram", opt.diagram, "diagram name, e.g. A2, D4, E8, A1~")
          ->required();
    sub->add_option("--format", opt.format, "json | text | dot");
    sub->callback([&, fn] { handler = fn; });
    return sub;
  };

  add("diagram", "print a diagram with its Euler matrix and marks", run_diagram);
  add("roots", "enumerate the roots of a finite diagram", run_roots);
  auto* reg = add("regular", "test a charge for regularity", run_regular);
  reg->add_option("--charge", opt.charge_file, "charge JSON file")->required();
  auto* lift = add("lift", "lift a charge path from the base state", run_lift);
  lift->add_option("--path", opt.path_file, "path JSON file")->required();
  auto* mono = add("monodromy", "deck transformation of a braid word", run_monodromy);
  mono->add_option("--word", opt.word, "word literal, e.g. [1,2,-1]")->required();
  auto* norm = add("normalize", "map a regular charge into the fundamental chamber",
                   run_normalize);
  norm->add_option("--charge", opt.charge_file, "charge JSON file")->required();
  auto* rot = add("rotate", "lift scalar loops from a base state", run_rotate);
  rot->add_option("--turns", opt.turns, "signed number of turns (clockwise positive)");
  rot->add_option("--charge", opt.charge_file, "base charge (default: standard basepoint)");
  add("coxeter-check", "monodromy of the Coxeter word power", run_coxeter_check);
  auto* exch = add("exchange", "breadth-first exchange-graph exploration", run_exchange);
  exch->add_option("--depth", opt.depth, "BFS depth bound");
  auto* cons = add("constellation", "theta-semistable cycle representation of class delta",
                   run_constellation);
  cons->add_option("--theta", opt.theta, "comma list of rationals, e.g. 1,-1");
  add("verify-relations", "matrix-level braid/commutation relation checks",
      run_verify_relations);
  auto* autos = add("automorphisms", "diagram automorphism generators", run_automorphisms);
  autos->add_flag("--fix-zero", opt.fix_special, "restrict to automorphisms fixing vertex 0");

  try {
    app.parse(argc, argv);
    return handler ? handler(opt) : 1;
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const sc::InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 1;
  } catch (const sc::NonGenericPath& e) {
    std::cerr << "non-generic path: " << e.what() << "\n";
    return 2;
  } catch (const sc::InvariantViolation& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return 3;
  }
}
