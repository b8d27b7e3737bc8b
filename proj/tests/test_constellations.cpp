#include <doctest.h>

#include "stabcover/constellations.hpp"
#include "stabcover/errors.hpp"
#include "test_support.hpp"

using namespace stabcover;
using namespace testsup;

namespace {

Weight make_weight(std::vector<long> entries) {
  Weight w;
  for (long e : entries) w.theta.emplace_back(e);
  return w;
}

CycleRep one_arrow_rep(std::size_t r, std::size_t kept) {
  CycleRep rep;
  rep.x.assign(r, Rational(0));
  rep.y.assign(r, Rational(0));
  rep.x[kept] = 1;
  return rep;
}

}  // namespace

TEST_CASE("representation invariants") {
  CycleRep ok = one_arrow_rep(2, 0);
  CHECK_NOTHROW(validate_rep(ok));

  CycleRep loops = ok;
  loops.y[0] = 1;  // x0 y0 != 0
  CHECK_THROWS_AS(validate_rep(loops), InvalidInput);

  CycleRep invertible;
  invertible.x.assign(2, Rational(1));
  invertible.y.assign(2, Rational(0));
  CHECK_THROWS_AS(validate_rep(invertible), InvalidInput);
}

TEST_CASE("semistability on the two-vertex cycle") {
  CycleRep rep = one_arrow_rep(2, 0);  // arrow 0 -> 1 only

  auto good = is_semistable(rep, make_weight({1, -1}));
  CHECK(good.semistable);

  auto bad = is_semistable(rep, make_weight({-1, 1}));
  CHECK(!bad.semistable);
  REQUIRE(bad.certificate.has_value());
  CHECK(*bad.certificate == std::vector<std::size_t>{1});

  // The zero representation has every subset closed; a generic weight has
  // a positive one.
  CycleRep zero;
  zero.x.assign(2, Rational(0));
  zero.y.assign(2, Rational(0));
  CHECK(!is_semistable(zero, make_weight({1, -1})).semistable);
}

TEST_CASE("weights must pair to zero with delta") {
  CycleRep rep = one_arrow_rep(2, 0);
  CHECK_THROWS_AS(is_semistable(rep, make_weight({1, 1})), InvalidInput);
  CHECK_THROWS_AS(find_semistable(Diagram::parse("A1~"), make_weight({2, -1})),
                  InvalidInput);
}

TEST_CASE("cycle-lemma construction on the worked examples") {
  Diagram a1a = Diagram::parse("A1~");
  CycleRep rep = find_semistable(a1a, make_weight({1, -1}));
  CHECK(rep.x[0] == 1);
  CHECK(rep.x[1] == 0);
  CHECK(rep.y == std::vector<Rational>(2, Rational(0)));
  CHECK(is_semistable(rep, make_weight({1, -1})).semistable);

  Diagram a2a = Diagram::parse("A2~");
  Weight theta = make_weight({2, -1, -1});
  CycleRep rep2 = find_semistable(a2a, theta);
  CHECK(is_semistable(rep2, theta).semistable);

  // Zero weight: everything is nonpositive.
  CycleRep rep0 = find_semistable(a1a, make_weight({0, 0}));
  CHECK(is_semistable(rep0, make_weight({0, 0})).semistable);
}

TEST_CASE("random weights: construction, certification, oracle agreement") {
  Rng rng(61);
  for (int n = 1; n <= 3; ++n) {
    Diagram d(Family::A, n, true);
    const std::size_t r = d.size();
    for (int trial = 0; trial < 100; ++trial) {
      Weight theta;
      Rational sum = 0;
      for (std::size_t v = 0; v + 1 < r; ++v) {
        theta.theta.push_back(rng.rational(5, 3));
        sum += theta.theta.back();
      }
      theta.theta.push_back(-sum);

      CycleRep rep = find_semistable(d, theta);
      CHECK_NOTHROW(validate_rep(rep));
      CHECK(rep.size() == r);
      auto report = is_semistable(rep, theta);
      CHECK(report.semistable);
      CHECK(semistable_oracle(rep, theta));

      // The oracle agrees on arbitrary single-arrow representations too.
      CycleRep probe = one_arrow_rep(r, std::size_t(rng.integer(0, long(r) - 1)));
      CHECK(is_semistable(probe, theta).semistable == semistable_oracle(probe, theta));
    }
  }
}
