#include <doctest.h>

#include "stabcover/errors.hpp"
#include "test_support.hpp"

using namespace stabcover;
using namespace testsup;

TEST_CASE("empty word gives the identity") {
  Diagram d = Diagram::parse("A3");
  CHECK(word_to_matrix(d, {}) == IntMatrix::identity(3));
}

TEST_CASE("braid relation at the matrix level") {
  Diagram d = Diagram::parse("A2");
  BraidWord lhs{{0, 1}, {1, 1}, {0, 1}};
  BraidWord rhs{{1, 1}, {0, 1}, {1, 1}};
  CHECK(word_to_matrix(d, lhs) == word_to_matrix(d, rhs));
}

TEST_CASE("Coxeter element orders") {
  BraidWord cox;
  Diagram a2 = Diagram::parse("A2");
  for (int rep = 0; rep < 3; ++rep) {
    cox.push_back({0, 1});
    cox.push_back({1, 1});
  }
  CHECK(word_to_matrix(a2, cox) == IntMatrix::identity(2));

  CHECK(coxeter_number(Diagram::parse("A1")) == 2);
  CHECK(coxeter_number(Diagram::parse("A4")) == 5);
  CHECK(coxeter_number(Diagram::parse("D4")) == 6);
  CHECK(coxeter_number(Diagram::parse("D6")) == 10);
  CHECK(coxeter_number(Diagram::parse("E6")) == 12);
  CHECK(coxeter_number(Diagram::parse("E7")) == 18);
  CHECK(coxeter_number(Diagram::parse("E8")) == 30);
}

TEST_CASE("signs do not change matrices, inverse words invert them") {
  Rng rng(5);
  Diagram d = Diagram::parse("D4");
  for (int trial = 0; trial < 25; ++trial) {
    BraidWord w = rng.word(d, std::size_t(rng.integer(0, 9)));
    BraidWord unsigned_w = w;
    for (auto& letter : unsigned_w) letter.sign = 1;
    CHECK(word_to_matrix(d, w) == word_to_matrix(d, unsigned_w));
    CHECK(word_to_matrix(d, w) * word_to_matrix(d, inverse_word(w)) ==
          IntMatrix::identity(d.size()));
  }
}

TEST_CASE("concatenation maps to matrix product") {
  Rng rng(7);
  for (auto name : {"A3", "E6", "A2~"}) {
    Diagram d = Diagram::parse(name);
    for (int trial = 0; trial < 30; ++trial) {
      BraidWord u = rng.word(d, std::size_t(rng.integer(0, 6)));
      BraidWord v = rng.word(d, std::size_t(rng.integer(0, 6)));
      BraidWord uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      CHECK(word_to_matrix(d, uv) == word_to_matrix(d, u) * word_to_matrix(d, v));
    }
  }
}

TEST_CASE("words preserve the Euler form and have unit determinant") {
  Rng rng(9);
  for (auto name : {"A4", "D5", "A1~", "E6~"}) {
    Diagram d = Diagram::parse(name);
    for (int trial = 0; trial < 20; ++trial) {
      IntMatrix m = word_to_matrix(d, rng.word(d, std::size_t(rng.integer(1, 10))));
      CHECK(m.transpose() * d.euler_matrix() * m == d.euler_matrix());
      Rational det = m.determinant();
      CHECK((det == 1 || det == -1));
    }
  }
}

TEST_CASE("shift scalar") {
  CHECK(shift_scalar(0) == 1);
  CHECK(shift_scalar(1) == -1);
  CHECK(shift_scalar(2) == 1);
  CHECK(shift_scalar(-3) == -1);
}

TEST_CASE("relation reports") {
  auto a3 = verify_relations(Diagram::parse("A3"));
  CHECK(a3.all_ok);

  auto e8 = verify_relations(Diagram::parse("E8"));
  CHECK(e8.all_ok);

  auto a1a = verify_relations(Diagram::parse("A1~"));
  CHECK(a1a.all_ok);
  bool saw_infinite = false;
  for (const auto& c : a1a.checks)
    if (c.kind == RelationKind::InfiniteOrder) {
      saw_infinite = true;
      CHECK(c.ok);
    }
  CHECK(saw_infinite);
}
