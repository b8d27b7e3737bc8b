#include "stabcover/json_io.hpp"

#include <fstream>
#include <sstream>

#include "stabcover/errors.hpp"

namespace stabcover {

namespace {

Rational rational_from_json(const json& j, const std::string& where) {
  if (!j.is_string())
    throw InvalidInput("expected an exact \"p/q\" string at " + where +
                       " (floating point literals are rejected)");
  auto q = parse_rational(j.get<std::string>());
  if (!q) throw InvalidInput("malformed rational '" + j.get<std::string>() + "' at " + where);
  return *q;
}

json gaussian_to_json(const Gaussian& z) {
  return json{{"re", format_rational(z.re)}, {"im", format_rational(z.im)}};
}

Gaussian gaussian_from_json(const json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im"))
    throw InvalidInput("expected {\"re\", \"im\"} at " + where);
  return {rational_from_json(j.at("re"), where + ".re"),
          rational_from_json(j.at("im"), where + ".im")};
}

}  // namespace

json diagram_to_json(const Diagram& d) {
  json euler = json::array();
  for (std::size_t i = 0; i < d.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < d.size(); ++j) row.push_back(d.euler_matrix().at(i, j));
    euler.push_back(row);
  }
  json out{{"name", d.name()},
           {"family", family_name(d.family())},
           {"rank", d.rank()},
           {"affine", d.affine()},
           {"euler_matrix", euler}};
  if (d.affine()) out["marks"] = vector_to_json(d.delta());
  return out;
}

json charge_to_json(const CentralCharge& Z) {
  json out = json::array();
  for (const auto& z : Z) out.push_back(gaussian_to_json(z));
  return out;
}

CentralCharge charge_from_json(const json& j, const Diagram& d) {
  if (!j.is_array())
    throw InvalidInput("charge must be a JSON array of {re, im} objects");
  if (j.size() != d.size())
    throw InvalidInput("charge has " + std::to_string(j.size()) + " entries, diagram needs " +
                       std::to_string(d.size()));
  CentralCharge Z(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    Z[i] = gaussian_from_json(j[i], "charge[" + std::to_string(i) + "]");
  return Z;
}

namespace {

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open file '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidInput("JSON parse error in '" + path + "': " + e.what());
  }
  return j;
}

}  // namespace

CentralCharge load_charge_file(const std::string& path, const Diagram& d) {
  return charge_from_json(parse_file(path), d);
}

json path_to_json(const ChargePath& p) {
  json out = json::array();
  for (const auto& v : p.vertices) out.push_back(charge_to_json(v));
  return out;
}

ChargePath path_from_json(const json& j, const Diagram& d) {
  if (!j.is_array() || j.size() < 2)
    throw InvalidInput("path must be a JSON array of at least two charges");
  ChargePath p;
  for (const auto& v : j) p.vertices.push_back(charge_from_json(v, d));
  return p;
}

ChargePath load_path_file(const std::string& path, const Diagram& d) {
  return path_from_json(parse_file(path), d);
}

json word_to_json(const BraidWord& w) {
  json out = json::array();
  for (const auto& letter : w)
    out.push_back(static_cast<long>(letter.slot + 1) * letter.sign);
  return out;
}

BraidWord word_from_json(const json& j, const Diagram& d) {
  if (!j.is_array()) throw InvalidInput("word must be a JSON array of signed integers");
  BraidWord w;
  for (const auto& entry : j) {
    if (!entry.is_number_integer())
      throw InvalidInput("word letters must be signed integers");
    long v = entry.get<long>();
    if (v == 0) throw InvalidInput("word letter 0 is not a slot");
    std::size_t slot = std::size_t(v > 0 ? v : -v) - 1;
    if (slot >= d.size())
      throw InvalidInput("word letter " + std::to_string(v) + " exceeds the slot count");
    w.push_back({slot, v > 0 ? 1 : -1});
  }
  return w;
}

json state_to_json(const CoverState& s) {
  json slots = json::array();
  for (std::size_t t = 0; t < s.slots(); ++t)
    slots.push_back(json{{"class", vector_to_json(s.classes[t])}, {"ledger", s.ledgers[t]}});
  return json{{"diagram", s.diagram.name()},
              {"charge", charge_to_json(s.charge)},
              {"slots", slots},
              {"log", word_to_json(s.log)},
              {"global_shifts", s.shift_count}};
}

CoverState state_from_json(const json& j) {
  if (!j.is_object()) throw InvalidInput("state must be a JSON object");
  Diagram d = Diagram::parse(j.at("diagram").get<std::string>());
  CoverState s(d);
  s.diagram = d;
  s.charge = charge_from_json(j.at("charge"), d);
  const json& slots = j.at("slots");
  if (!slots.is_array() || slots.size() != d.size())
    throw InvalidInput("state slot count disagrees with the diagram");
  for (const auto& slot : slots) {
    const json& cls = slot.at("class");
    IntVector v;
    for (const auto& x : cls) v.push_back(x.get<std::int64_t>());
    if (v.size() != d.size()) throw InvalidInput("slot class has the wrong dimension");
    s.classes.push_back(std::move(v));
    s.ledgers.push_back(slot.at("ledger").get<std::int64_t>());
  }
  s.log = word_from_json(j.at("log"), d);
  s.shift_count = j.value("global_shifts", std::int64_t(0));
  validate_state(s);
  return s;
}

json events_to_json(const std::vector<LiftEvent>& events) {
  json out = json::array();
  for (const auto& ev : events) {
    json rec{{"segment", ev.segment},
             {"time", format_rational(ev.time)},
             {"direction", direction_name(ev.dir)}};
    if (ev.global_shift)
      rec["kind"] = "shift";
    else {
      rec["kind"] = "wall";
      rec["slot"] = ev.slot + 1;
    }
    out.push_back(rec);
  }
  return out;
}

json deck_to_json(const DeckTransform& deck) {
  json ledgers = json::array();
  for (auto k : deck.ledger_delta) ledgers.push_back(k);
  return json{{"word", word_to_json(deck.word)},
              {"k_matrix", matrix_to_json(deck.k_matrix)},
              {"ledger_delta", ledgers},
              {"pure_shift", deck.pure_shift}};
}

json exchange_to_json(const ExchangeGraph& g) {
  json nodes = json::array();
  for (const auto& node : g.nodes) {
    json classes = json::array();
    for (const auto& c : node.classes) classes.push_back(vector_to_json(c));
    json ledgers = json::array();
    for (auto k : node.ledgers) ledgers.push_back(k);
    nodes.push_back(json{{"classes", classes}, {"ledgers", ledgers}});
  }
  json edges = json::array();
  for (const auto& e : g.edges)
    edges.push_back(json{{"from", e.from},
                         {"to", e.to},
                         {"slot", e.slot + 1},
                         {"direction", direction_name(e.dir)}});
  return json{{"nodes", nodes}, {"edges", edges}, {"closed", g.closed}};
}

std::string exchange_to_dot(const ExchangeGraph& g) {
  std::ostringstream out;
  out << "digraph exchange {\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    out << "  n" << i << " [label=\"";
    const auto& node = g.nodes[i];
    for (std::size_t t = 0; t < node.classes.size(); ++t) {
      if (t) out << " ";
      out << "(";
      for (std::size_t j = 0; j < node.classes[t].size(); ++j) {
        if (j) out << ",";
        out << node.classes[t][j];
      }
      out << ")k" << node.ledgers[t];
    }
    out << "\"];\n";
  }
  for (const auto& e : g.edges) {
    out << "  n" << e.from << " -> n" << e.to << " [label=\"" << (e.slot + 1)
        << (e.dir == Direction::Ascending ? "+" : "-") << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

json rep_to_json(const CycleRep& rep) {
  json x = json::array(), y = json::array();
  for (const auto& v : rep.x) x.push_back(format_rational(v));
  for (const auto& v : rep.y) y.push_back(format_rational(v));
  json dim = json::array();
  for (std::size_t i = 0; i < rep.size(); ++i) dim.push_back(1);
  return json{{"x", x}, {"y", y}, {"dimension", dim}};
}

json semistability_to_json(const SemistabilityReport& report) {
  json out{{"semistable", report.semistable}};
  if (report.certificate) {
    json cert = json::array();
    for (auto v : *report.certificate) cert.push_back(v);
    out["violating_subset"] = cert;
  }
  return out;
}

json matrix_to_json(const IntMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m.at(i, j));
    out.push_back(row);
  }
  return out;
}

json vector_to_json(const IntVector& v) {
  json out = json::array();
  for (auto x : v) out.push_back(x);
  return out;
}

}  // namespace stabcover
