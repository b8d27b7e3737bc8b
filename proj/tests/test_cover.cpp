#include <doctest.h>

#include "stabcover/errors.hpp"
#include "test_support.hpp"

using namespace stabcover;
using namespace testsup;

namespace {

CoverState base_state(const std::string& name) {
  Diagram d = Diagram::parse(name);
  return initial_state(d, standard_basepoint(d));
}

ChargePath straight(const CentralCharge& a, const CentralCharge& b) {
  ChargePath p;
  p.vertices = {a, b};
  return p;
}

}  // namespace

TEST_CASE("initial states") {
  Diagram a2 = Diagram::parse("A2");
  CoverState s = initial_state(a2, make_charge({{0, 1}, {0, 1}}));
  CHECK(s.classes[0] == unit(2, 0));
  CHECK(s.classes[1] == unit(2, 1));
  CHECK(s.ledgers == std::vector<std::int64_t>{0, 0});
  CHECK(s.log.empty());

  Diagram a1a = Diagram::parse("A1~");
  CoverState t = initial_state(
      a1a, CentralCharge{Gaussian(Rational(0), Rational(1)), Gaussian(Rational(0), Rational(1, 2))});
  CHECK(t.classes[0] == unit(2, 0));
  CHECK(t.ledgers == std::vector<std::int64_t>{0, 0});

  CHECK_THROWS_AS(initial_state(a2, make_charge({{1, 0}, {0, 1}})), InvalidInput);
}

TEST_CASE("single crossings") {
  // Descending on A1: S becomes S[1].
  CoverState a1 = base_state("A1");
  CoverState down = cross(a1, 0, Direction::Descending);
  CHECK(down.classes[0] == IntVector{-1});
  CHECK(down.ledgers[0] == 1);
  CHECK(down.log == BraidWord{{0, -1}});

  // Ascending at slot 1 on A2 from the base.
  CoverState a2 = base_state("A2");
  CoverState up = cross(a2, 0, Direction::Ascending);
  CHECK(up.classes[0] == IntVector{-1, 0});
  CHECK(up.classes[1] == IntVector{1, 1});
  CHECK(up.ledgers == std::vector<std::int64_t>{-1, 0});
  CHECK(up.log == BraidWord{{0, 1}});
}

TEST_CASE("cross in one direction then the other restores the state") {
  Rng rng(41);
  for (auto name : {"A2", "A3", "A2~", "D4~"}) {
    CoverState s = base_state(name);
    // Wander a few crossings in, then check the involution at every slot.
    for (int k = 0; k < 3; ++k)
      s = cross(s, std::size_t(rng.integer(0, long(s.slots()) - 1)),
                rng.integer(0, 1) ? Direction::Ascending : Direction::Descending);
    for (std::size_t slot = 0; slot < s.slots(); ++slot) {
      CoverState there = cross(s, slot, Direction::Ascending);
      CoverState back = cross(there, slot, Direction::Descending);
      CHECK(same_state(back, s));
      CoverState mirror = cross(cross(s, slot, Direction::Descending), slot,
                                Direction::Ascending);
      CHECK(same_state(mirror, s));
    }
  }
}

TEST_CASE("worked lift on A2") {
  Diagram d = Diagram::parse("A2");
  CoverState s = initial_state(d, make_charge({{0, 1}, {0, 1}}));
  ChargePath p = straight(s.charge, CentralCharge{Gaussian(Rational(0), Rational(1)),
                                                  Gaussian(Rational(-1), Rational(-1, 2))});
  auto lifted = lift_path(s, p);
  REQUIRE(lifted.events.size() == 1);
  CHECK(lifted.events[0].time == Rational(2, 3));
  CHECK(lifted.events[0].slot == 1);
  CHECK(lifted.events[0].dir == Direction::Ascending);
  CHECK(lifted.state.classes[0] == IntVector{1, 1});
  CHECK(lifted.state.classes[1] == IntVector{0, -1});
  CHECK(lifted.state.ledgers == std::vector<std::int64_t>{0, -1});

  // Float step oracle agrees on the crossing structure.
  auto walk = float_walk(d, p);
  REQUIRE(walk.events.size() == 1);
  CHECK(walk.events[0].first == 1);
  CHECK(walk.events[0].second == Direction::Ascending);
  CHECK(walk.classes == lifted.state.classes);
  CHECK(walk.ledgers == std::vector<long>{0, -1});
}

TEST_CASE("constant path does nothing") {
  CoverState s = base_state("A3");
  auto lifted = lift_path(s, straight(s.charge, s.charge));
  CHECK(lifted.events.empty());
  CHECK(same_state(lifted.state, s));
}

TEST_CASE("paths through vanishing charges are rejected") {
  Diagram d = Diagram::parse("A2");
  CoverState s = initial_state(d, make_charge({{0, 1}, {0, 1}}));
  CHECK_THROWS_AS(lift_path(s, straight(s.charge, make_charge({{0, -1}, {0, 1}}))),
                  NonGenericPath);
}

TEST_CASE("lift must start at the state charge") {
  CoverState s = base_state("A2");
  CHECK_THROWS_AS(lift_path(s, straight(make_charge({{0, 2}, {0, 1}}), s.charge)),
                  InvalidInput);
}

TEST_CASE("rotation ledgers") {
  for (auto name : {"A1", "A2", "A1~", "A2~"}) {
    CAPTURE(name);
    CoverState s = base_state(name);
    auto turned = rotate_loop(s, 1);
    for (std::size_t t = 0; t < s.slots(); ++t) {
      CHECK(turned.state.classes[t] == unit(s.slots(), t));
      CHECK(turned.state.ledgers[t] == 2);
    }
    CHECK(turned.state.charge == s.charge);

    auto back = rotate_loop(turned.state, -1);
    CHECK(same_state(back.state, s));
  }
}

TEST_CASE("rotation from a generic finite basepoint") {
  Diagram d = Diagram::parse("A2");
  CoverState s = initial_state(d, make_charge({{0, 1}, {1, 1}}));
  auto turned = rotate_loop(s, 1);
  CHECK(turned.events.size() == 6);
  CHECK(turned.state.ledgers == std::vector<std::int64_t>{2, 2});
  CHECK(turned.state.classes[0] == unit(2, 0));
  CHECK(turned.state.classes[1] == unit(2, 1));

  auto two = rotate_loop(s, 2);
  CHECK(two.state.ledgers == std::vector<std::int64_t>{4, 4});
}

TEST_CASE("generic affine rotation fails honestly at the imaginary wall") {
  Diagram d = Diagram::parse("A1~");
  CoverState s = initial_state(
      d, CentralCharge{Gaussian(Rational(0), Rational(1)), Gaussian(Rational(1), Rational(1))});
  CHECK_THROWS_AS(rotate_loop(s, 1), NonGenericPath);
}

TEST_CASE("loops from words") {
  Diagram d = Diagram::parse("A2");
  CoverState base = initial_state(d, standard_basepoint(d));

  // Empty word: the constant path.
  ChargePath trivial = loop_from_word(d, {});
  CHECK(trivial.vertices.size() == 1);
  auto nothing = lift_path(base, trivial);
  CHECK(nothing.events.empty());

  // A single positive letter crosses exactly its own wall, ascending.
  ChargePath dip = loop_from_word(d, BraidWord{{0, 1}});
  auto lifted = lift_path(base, dip);
  REQUIRE(lifted.events.size() == 1);
  CHECK(lifted.events[0].slot == 0);
  CHECK(lifted.events[0].dir == Direction::Ascending);

  // Inverse letters mirror to descending crossings and invert the lift.
  ChargePath dip_inv = loop_from_word(d, BraidWord{{0, -1}});
  auto inv = lift_path(base, dip_inv);
  REQUIRE(inv.events.size() == 1);
  CHECK(inv.events[0].dir == Direction::Descending);
}

TEST_CASE("braid-relation loops end in identical states") {
  for (auto name : {"A2", "A3", "A2~"}) {
    Diagram d = Diagram::parse(name);
    CoverState base = initial_state(d, standard_basepoint(d));
    auto lhs = lift_path(base, loop_from_word(d, BraidWord{{0, 1}, {1, 1}, {0, 1}}));
    auto rhs = lift_path(base, loop_from_word(d, BraidWord{{1, 1}, {0, 1}, {1, 1}}));
    CHECK(same_state(lhs.state, rhs.state));
  }
  // Commuting pair on A3.
  Diagram a3 = Diagram::parse("A3");
  CoverState base = initial_state(a3, standard_basepoint(a3));
  auto lhs = lift_path(base, loop_from_word(a3, BraidWord{{0, 1}, {2, 1}}));
  auto rhs = lift_path(base, loop_from_word(a3, BraidWord{{2, 1}, {0, 1}}));
  CHECK(same_state(lhs.state, rhs.state));
}

TEST_CASE("monodromy") {
  Diagram a1 = Diagram::parse("A1");
  auto twice = monodromy(a1, BraidWord{{0, 1}, {0, 1}});
  CHECK(twice.pure_shift);
  CHECK(twice.ledger_delta == std::vector<std::int64_t>{-2});

  auto nothing = monodromy(a1, {});
  CHECK(nothing.pure_shift);
  CHECK(nothing.ledger_delta == std::vector<std::int64_t>{0});
  CHECK(nothing.k_matrix == IntMatrix::identity(1));

  Diagram a2 = Diagram::parse("A2");
  BraidWord cox;
  for (int rep = 0; rep < 3; ++rep) {
    cox.push_back({0, 1});
    cox.push_back({1, 1});
  }
  auto full = monodromy(a2, cox);
  CHECK(full.pure_shift);
  CHECK(full.ledger_delta == std::vector<std::int64_t>{-2, -2});
}

TEST_CASE("monodromy K-matrix is the word matrix") {
  Rng rng(43);
  for (auto name : {"A2", "A3", "A1~", "A2~"}) {
    Diagram d = Diagram::parse(name);
    for (int trial = 0; trial < 8; ++trial) {
      BraidWord w = rng.word(d, std::size_t(rng.integer(0, 5)));
      auto deck = monodromy(d, w);
      CHECK(deck.k_matrix == word_to_matrix(d, w));
      CHECK(deck.word.size() == w.size());
    }
  }
}

TEST_CASE("normalize already-fundamental charges trivially") {
  Diagram d = Diagram::parse("A2");
  auto res = normalize(d, make_charge({{0, 1}, {0, 1}}));
  CHECK(res.word.empty());
  CHECK(res.mu == Gaussian(Rational(1), Rational(0)));
  CHECK(in_fundamental(d, res.replay));
}

TEST_CASE("normalize the s1-image of the A2 basepoint") {
  Diagram d = Diagram::parse("A2");
  auto res = normalize(d, make_charge({{0, -1}, {0, 2}}));
  REQUIRE(res.word.size() == 1);
  CHECK(res.word[0].slot == 0);
  CHECK(in_fundamental(d, res.replay));
  for (std::size_t t = 0; t < d.size(); ++t) {
    CHECK(res.state.classes[t] == unit(d.size(), t));
    CHECK(res.state.ledgers[t] == res.state.ledgers[0]);
  }
}

TEST_CASE("normalize an affine charge and replay it") {
  Diagram d = Diagram::parse("A1~");
  CentralCharge Z = make_charge({{0, 2}, {-1, 1}});
  auto res = normalize(d, Z);
  CHECK(evaluate(scale_charge(Z, res.mu), d.delta()) == Gaussian::imaginary_unit());
  CHECK(in_fundamental(d, res.replay));
  CentralCharge replayed = act_weyl(word_to_matrix(d, res.word), scale_charge(Z, res.mu));
  CHECK(replayed == res.replay);
}

TEST_CASE("normalize rejects irregular charges") {
  Diagram d = Diagram::parse("A1~");
  CHECK_THROWS_AS(normalize(d, make_charge({{1, 1}, {-1, -1}})), InvalidInput);
}

TEST_CASE("exchange graphs") {
  auto a1 = exchange_bfs(Diagram::parse("A1"), 3);
  CHECK(a1.nodes.size() == 1);
  CHECK(a1.closed);

  auto shallow = exchange_bfs(Diagram::parse("A2"), 0);
  CHECK(shallow.nodes.size() == 1);
  CHECK(!shallow.closed);

  Diagram a2 = Diagram::parse("A2");
  auto graph = exchange_bfs(a2, 3);
  CHECK(!graph.closed);
  // Every expanded node fires 2r crossings, and each edge reverses.
  std::map<ExchangeNode, std::size_t> index;
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) index[graph.nodes[i]] = i;
  std::map<std::size_t, int> outdegree;
  for (const auto& e : graph.edges) {
    outdegree[e.from]++;
    const ExchangeNode& target = graph.nodes[e.to];
    Direction back_dir =
        e.dir == Direction::Ascending ? Direction::Descending : Direction::Ascending;
    auto moved = cross(
        [&] {
          CoverState carrier(a2);
          carrier.charge = standard_basepoint(a2);
          carrier.classes = target.classes;
          carrier.ledgers = target.ledgers;
          return carrier;
        }(),
        e.slot, back_dir);
    // Normalize the mutated node the same way the graph does.
    std::int64_t m = moved.ledgers[0];
    std::int64_t sign = shift_scalar(m);
    ExchangeNode back;
    for (auto& c : moved.classes) back.classes.push_back(scale(c, sign));
    for (auto& k : moved.ledgers) back.ledgers.push_back(k - m);
    CHECK(index.at(back) == e.from);
  }
  for (const auto& [node, deg] : outdegree) CHECK(deg == 4);
}

TEST_CASE("automorphism action relabels everything consistently") {
  Diagram a2 = Diagram::parse("A2");
  CoverState s = initial_state(a2, make_charge({{0, 1}, {0, 2}}));
  GraphAutomorphism swap{{1, 0}};
  CoverState moved = act_automorphism(swap, s);
  CHECK(moved.charge[0] == Gaussian(Rational(0), Rational(2)));
  CHECK(moved.charge[1] == Gaussian(Rational(0), Rational(1)));
  CHECK(same_state(act_automorphism(swap, moved), s));

  GraphAutomorphism id{{0, 1}};
  CHECK(same_state(act_automorphism(id, s), s));

  GraphAutomorphism bogus{{0, 0}};
  CHECK_THROWS_AS(act_automorphism(bogus, s), InvalidInput);
}

TEST_CASE("automorphisms commute with lifting") {
  Rng rng(47);
  for (auto name : {"A3", "D4~"}) {
    Diagram d = Diagram::parse(name);
    auto autos = all_automorphisms(d);
    CoverState base = initial_state(d, standard_basepoint(d));
    int done = 0;
    while (done < 10) {
      ChargePath p;
      p.vertices = {base.charge, rng.regular_charge(d, true), rng.regular_charge(d, true)};
      const GraphAutomorphism& g = autos[std::size_t(rng.integer(0, long(autos.size()) - 1))];
      try {
        auto direct = lift_path(base, p);
        auto relabeled =
            lift_path(act_automorphism(g, base), act_automorphism(g, p));
        CHECK(same_state(act_automorphism(g, direct.state), relabeled.state));
        ++done;
      } catch (const NonGenericPath&) {
        continue;  // redraw
      }
    }
  }
}

TEST_CASE("path reversal undoes a lift") {
  Rng rng(53);
  for (auto name : {"A2", "A3", "A2~"}) {
    Diagram d = Diagram::parse(name);
    CoverState base = initial_state(d, standard_basepoint(d));
    int done = 0;
    while (done < 12) {
      ChargePath p;
      p.vertices = {base.charge, rng.regular_charge(d, true), rng.regular_charge(d, true)};
      try {
        auto out = lift_path(base, p);
        auto back = lift_path(out.state, reverse_path(p));
        CHECK(same_state(back.state, base));
        ++done;
      } catch (const NonGenericPath&) {
        continue;
      }
    }
  }
}
