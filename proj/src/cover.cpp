#include "stabcover/cover.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "stabcover/errors.hpp"

namespace stabcover {

std::string direction_name(Direction dir) {
  return dir == Direction::Ascending ? "ascending" : "descending";
}

bool same_state(const CoverState& a, const CoverState& b) {
  return a.diagram == b.diagram && a.charge == b.charge && a.classes == b.classes &&
         a.ledgers == b.ledgers;
}

void validate_state(const CoverState& s, bool check_positivity) {
  const Diagram& d = s.diagram;
  const std::size_t n = d.size();
  if (s.classes.size() != n || s.ledgers.size() != n || s.charge.size() != n)
    throw InvariantViolation("state field sizes disagree with the diagram");

  // The adjacency pattern of the slot classes is the Euler matrix itself.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (d.euler_form(s.classes[a], s.classes[b]) != d.euler_matrix().at(a, b))
        throw InvariantViolation("slot classes violate the Euler pattern");

  IntMatrix cols(n);
  for (std::size_t t = 0; t < n; ++t)
    for (std::size_t i = 0; i < n; ++i) cols.at(i, t) = s.classes[t][i];
  Rational det = cols.determinant();
  if (det != 1 && det != -1) throw InvariantViolation("slot classes are not unimodular");

  IntMatrix m = word_to_matrix(d, s.log);
  std::int64_t sign = shift_scalar(s.shift_count);
  for (std::size_t t = 0; t < n; ++t) {
    IntVector e(n, 0);
    e[t] = 1;
    if (s.classes[t] != scale(m * e, sign))
      throw InvariantViolation("audit log does not reproduce the slot classes");
  }

  // Ledger parity must match the root sign of the class.
  for (std::size_t t = 0; t < n; ++t) {
    int parity_sign = (s.ledgers[t] % 2 == 0) ? 1 : -1;
    if (root_sign(s.classes[t]) != parity_sign)
      throw InvariantViolation("ledger parity disagrees with class sign");
  }

  if (check_positivity) {
    for (std::size_t t = 0; t < n; ++t)
      if (!(evaluate(s.charge, s.classes[t]).im > 0))
        throw InvariantViolation("slot charge left the upper half plane");
    if (d.affine() && evaluate(s.charge, d.delta()).is_zero())
      throw InvariantViolation("charge vanishes on the imaginary root");
  }
}

CentralCharge standard_basepoint(const Diagram& d) {
  const std::size_t n = d.size();
  CentralCharge Z(n);
  if (!d.affine()) {
    for (auto& z : Z) z = Gaussian::imaginary_unit();
    return Z;
  }
  // Interior alcove point with Z(delta) = i.
  const IntVector& marks = d.delta();
  for (std::size_t t = 0; t < n; ++t)
    Z[t] = Gaussian(Rational(0), Rational(1) / (Rational(static_cast<long>(marks[t])) *
                                                Rational(static_cast<long>(n))));
  return Z;
}

CoverState initial_state(const Diagram& d, const CentralCharge& Z) {
  if (!in_fundamental(d, Z))
    throw InvalidInput("charge is outside the fundamental chamber R");
  auto reg = is_regular(d, Z);
  if (!reg.regular) throw InvalidInput("charge is not regular");
  CoverState s(d);
  s.diagram = d;
  s.charge = Z;
  s.classes.resize(d.size());
  s.ledgers.assign(d.size(), 0);
  for (std::size_t t = 0; t < d.size(); ++t) {
    s.classes[t].assign(d.size(), 0);
    s.classes[t][t] = 1;
  }
  return s;
}

namespace {

struct CrossingDelta {
  std::vector<ClassVector> classes;
  std::vector<std::int64_t> ledgers;
};

// Shared class/ledger rule for cross(), the lifter and the exchange BFS.
CrossingDelta crossing_core(const Diagram& d, const std::vector<ClassVector>& classes,
                            const std::vector<std::int64_t>& ledgers, std::size_t slot,
                            Direction dir) {
  const std::size_t n = classes.size();
  if (slot >= n) throw InvalidInput("crossing slot out of range");
  CrossingDelta out{classes, ledgers};
  const ClassVector pivot = classes[slot];
  const int drift = dir == Direction::Ascending ? 1 : -1;
  for (std::size_t t = 0; t < n; ++t) {
    if (t == slot) continue;
    ClassVector moved = reflect(d, pivot, classes[t]);
    if (root_sign(moved) != root_sign(classes[t])) out.ledgers[t] += drift;
    out.classes[t] = std::move(moved);
  }
  out.classes[slot] = negate(pivot);
  out.ledgers[slot] -= drift;
  return out;
}

}  // namespace

CoverState cross(const CoverState& s, std::size_t slot, Direction dir) {
  CoverState out = s;
  auto delta = crossing_core(s.diagram, s.classes, s.ledgers, slot, dir);
  out.classes = std::move(delta.classes);
  out.ledgers = std::move(delta.ledgers);
  out.log.push_back({slot, dir == Direction::Ascending ? 1 : -1});
  return out;
}

ChargePath reverse_path(const ChargePath& p) {
  ChargePath out;
  out.vertices.assign(p.vertices.rbegin(), p.vertices.rend());
  return out;
}

namespace {

Gaussian charge_at(const CentralCharge& P, const CentralCharge& Q, const Rational& t,
                   const IntVector& v) {
  Gaussian zp = evaluate(P, v);
  Gaussian zq = evaluate(Q, v);
  Rational s = 1 - t;
  return Gaussian(zp.re * s + zq.re * t, zp.im * s + zq.im * t);
}

CentralCharge interpolate(const CentralCharge& P, const CentralCharge& Q, const Rational& t) {
  CentralCharge out(P.size());
  Rational s = 1 - t;
  for (std::size_t i = 0; i < P.size(); ++i)
    out[i] = Gaussian(P[i].re * s + Q[i].re * t, P[i].im * s + Q[i].im * t);
  return out;
}

// Zero of the (linear) imaginary part of the slot charge along a segment,
// restricted to (after, 1]. Constant-zero segments are wall rides.
std::optional<Rational> im_zero(const CentralCharge& P, const CentralCharge& Q,
                                const IntVector& v, const Rational& after) {
  Rational a = evaluate(P, v).im;
  Rational b = evaluate(Q, v).im - a;
  if (b == 0) {
    if (a == 0) throw NonGenericPath("path segment rides a wall");
    return std::nullopt;
  }
  Rational t0 = -a / b;
  if (t0 <= after || t0 > 1) return std::nullopt;
  return t0;
}

struct SegmentContext {
  const CentralCharge& from;
  const CentralCharge& to;
  const CentralCharge* peek;  // first vertex after `to`, if any
  std::size_t index;
};

// Events of one segment, applied to the running state. The classes change
// at each crossing, so candidate times are recomputed from scratch after
// every event.
void lift_segment(CoverState& state, const SegmentContext& seg,
                  std::vector<LiftEvent>& events) {
  const Diagram& d = state.diagram;
  const std::size_t n = d.size();

  // Affine guard: a sign change of Im Z(delta) inside the segment is only
  // liftable at the fully degenerate configuration where the whole charge
  // is real; anywhere else the tilting walk would not terminate (the walls
  // accumulate at the imaginary-root locus).
  if (d.affine()) {
    Rational a = evaluate(seg.from, d.delta()).im;
    Rational b = evaluate(seg.to, d.delta()).im - a;
    if (b != 0) {
      Rational td = -a / b;
      if (td > 0 && td <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
          IntVector e(n, 0);
          e[i] = 1;
          if (charge_at(seg.from, seg.to, td, e).im != 0)
            throw NonGenericPath(
                "segment crosses the imaginary-root wall away from the degenerate ray");
        }
      }
    }
  }

  Rational t_cur = 0;
  int safety = 0;
  while (true) {
    if (++safety > 100000) throw InvariantViolation("runaway lift (wall walk did not end)");

    // Earliest pending crossing over all slots.
    std::optional<Rational> best;
    std::vector<std::size_t> hits;
    for (std::size_t s = 0; s < n; ++s) {
      auto t0 = im_zero(seg.from, seg.to, state.classes[s], t_cur);
      if (!t0) continue;
      if (!best || *t0 < *best) {
        best = t0;
        hits.assign(1, s);
      } else if (*t0 == *best) {
        hits.push_back(s);
      }
    }
    if (!best) return;

    const Rational t0 = *best;
    if (t0 == 1) {
      // Vertex-exact zeros are crossings only if the imaginary part keeps
      // falling into the next segment; otherwise the path touches a wall.
      for (std::size_t s : hits) {
        if (!seg.peek)
          throw NonGenericPath("path endpoint lies on a wall of a current slot");
        Rational slope = evaluate(*seg.peek, state.classes[s]).im -
                         evaluate(seg.to, state.classes[s]).im;
        if (slope == 0) throw NonGenericPath("wall tangency at a path vertex");
        if (slope > 0) throw NonGenericPath("wall touch at a path vertex");
      }
    }
    if (hits.size() == 1) {
      std::size_t s = hits.front();
      Gaussian z = charge_at(seg.from, seg.to, t0, state.classes[s]);
      if (z.re == 0)
        throw NonGenericPath("path passes through a vanishing slot charge");
      Direction dir = z.re < 0 ? Direction::Ascending : Direction::Descending;
      auto delta = crossing_core(d, state.classes, state.ledgers, s, dir);
      state.classes = std::move(delta.classes);
      state.ledgers = std::move(delta.ledgers);
      state.log.push_back({s, dir == Direction::Ascending ? 1 : -1});
      events.push_back({seg.index, t0, false, s, dir});
      if (d.affine() && charge_at(seg.from, seg.to, t0, d.delta()).is_zero())
        throw InvariantViolation("charge vanished on the imaginary root at an event");
    } else {
      // Coincident crossings lift only in the fully degenerate case: the
      // whole charge real and every slot leaving through the same half
      // axis. The heart is then translated by one shift as a block.
      bool fully_real = true;
      for (std::size_t i = 0; i < n && fully_real; ++i) {
        IntVector e(n, 0);
        e[i] = 1;
        fully_real = charge_at(seg.from, seg.to, t0, e).im == 0;
      }
      if (!fully_real || hits.size() != n)
        throw NonGenericPath("coincident crossing times");
      int sign = 0;
      for (std::size_t s = 0; s < n; ++s) {
        Gaussian z = charge_at(seg.from, seg.to, t0, state.classes[s]);
        if (z.re == 0) throw NonGenericPath("degenerate crossing hits a vanishing charge");
        int this_sign = z.re > 0 ? 1 : -1;
        if (sign == 0) sign = this_sign;
        if (sign != this_sign)
          throw NonGenericPath("mixed-phase degenerate crossing");
      }
      Direction dir = sign > 0 ? Direction::Descending : Direction::Ascending;
      std::int64_t step = dir == Direction::Descending ? 1 : -1;
      for (std::size_t t = 0; t < n; ++t) {
        state.classes[t] = negate(state.classes[t]);
        state.ledgers[t] += step;
      }
      state.shift_count += step;
      events.push_back({seg.index, t0, true, 0, dir});
    }

    // Positivity snapshot strictly past the event.
    Rational t_next = 1;
    for (std::size_t s = 0; s < n; ++s) {
      auto tn = im_zero(seg.from, seg.to, state.classes[s], t0);
      if (tn && *tn < t_next) t_next = *tn;
    }
    if (t0 < 1) {
      Rational t_probe = (t0 + t_next) / 2;
      for (std::size_t s = 0; s < n; ++s)
        if (!(charge_at(seg.from, seg.to, t_probe, state.classes[s]).im > 0))
          throw InvariantViolation("positivity lost between events");
    }
    t_cur = t0;
    if (t_cur == 1) return;
  }
}

}  // namespace

LiftResult lift_path(const CoverState& start, const ChargePath& path) {
  if (path.vertices.size() < 1) throw InvalidInput("empty charge path");
  if (start.charge != path.vertices.front())
    throw InvalidInput("path does not start at the state charge");
  validate_state(start);

  LiftResult result{start, {}};
  for (std::size_t seg = 0; seg + 1 < path.vertices.size(); ++seg) {
    const CentralCharge* peek =
        seg + 2 < path.vertices.size() ? &path.vertices[seg + 2] : nullptr;
    SegmentContext ctx{path.vertices[seg], path.vertices[seg + 1], peek, seg};
    lift_segment(result.state, ctx, result.events);
  }
  result.state.charge = path.vertices.back();
  validate_state(result.state);
  return result;
}

namespace {

// Fixed quarter-turn scalars of the clockwise unit loop.
std::vector<Gaussian> loop_scalars(bool clockwise) {
  using G = Gaussian;
  if (clockwise)
    return {G(Rational(1), Rational(0)), G(Rational(0), Rational(-1)),
            G(Rational(-1), Rational(0)), G(Rational(0), Rational(1))};
  return {G(Rational(1), Rational(0)), G(Rational(0), Rational(1)),
          G(Rational(-1), Rational(0)), G(Rational(0), Rational(-1))};
}

ChargePath scalar_loop_path(const CentralCharge& Z, std::int64_t turns,
                            const Rational& jitter) {
  ChargePath path;
  auto quarters = loop_scalars(turns > 0);
  std::int64_t count = turns > 0 ? turns : -turns;
  path.vertices.push_back(Z);
  for (std::int64_t k = 0; k < count; ++k) {
    for (std::size_t q = 1; q < quarters.size(); ++q) {
      Gaussian mu = quarters[q];
      if (jitter != 0) {
        // Rotate the interior polygon vertices slightly off the axes.
        mu = mu * Gaussian(Rational(1), jitter);
      }
      path.vertices.push_back(scale_charge(Z, mu));
    }
    path.vertices.push_back(Z);
  }
  return path;
}

}  // namespace

LiftResult rotate_loop(const CoverState& state, std::int64_t turns) {
  if (turns == 0) throw InvalidInput("turns must be nonzero");
  Rational jitter = 0;
  for (int attempt = 0; attempt <= 8; ++attempt) {
    try {
      return lift_path(state, scalar_loop_path(state.charge, turns, jitter));
    } catch (const NonGenericPath&) {
      if (attempt == 8) throw;
      jitter = Rational(attempt % 2 == 0 ? 1 : -1) * make_ratio(1, 64L << attempt);
    }
  }
  throw NonGenericPath("scalar loop retries exhausted");
}

namespace {

CentralCharge dip_vertex(const CentralCharge& base, std::size_t slot, int sign,
                         const Gaussian& jitter) {
  CentralCharge out = base;
  Rational re = sign > 0 ? Rational(-1) : Rational(1);
  out[slot] = Gaussian(re + jitter.re, base[slot].im / 2 + jitter.im);
  return out;
}

}  // namespace

ChargePath loop_from_word(const Diagram& d, const BraidWord& w) {
  const CentralCharge base = standard_basepoint(d);
  CoverState probe = initial_state(d, base);

  ChargePath path;
  path.vertices.push_back(base);
  IntMatrix accum = IntMatrix::identity(d.size());

  for (std::size_t k = 0; k < w.size(); ++k) {
    const Letter& letter = w[k];
    if (letter.slot >= d.size()) throw InvalidInput("word letter out of range");
    const Direction expected =
        letter.sign > 0 ? Direction::Ascending : Direction::Descending;

    IntMatrix next = accum * simple_reflection(d, letter.slot);
    bool placed = false;
    Gaussian jitter;
    for (int attempt = 0; attempt <= 8 && !placed; ++attempt) {
      CentralCharge mid = act_weyl(accum, dip_vertex(base, letter.slot, letter.sign, jitter));
      CentralCharge end = act_weyl(next, base);

      // Validate the dip: exactly one crossing, at this letter's slot.
      ChargePath dip;
      dip.vertices = {probe.charge, mid, end};
      try {
        LiftResult trial = lift_path(probe, dip);
        if (trial.events.size() == 1 && !trial.events[0].global_shift &&
            trial.events[0].slot == letter.slot && trial.events[0].dir == expected) {
          probe = trial.state;
          path.vertices.push_back(mid);
          path.vertices.push_back(end);
          placed = true;
        }
      } catch (const NonGenericPath&) {
        // fall through to a perturbed retry
      }
      if (!placed)
        jitter = Gaussian(make_ratio((attempt % 3) - 1, 128L << attempt),
                          make_ratio(1, 256L << attempt));
    }
    if (!placed)
      throw NonGenericPath("generator dip validation failed after retries");
    accum = next;
  }
  return path;
}

DeckTransform monodromy(const Diagram& d, const BraidWord& w) {
  ChargePath loop = loop_from_word(d, w);
  CoverState base = initial_state(d, standard_basepoint(d));
  LiftResult lifted = lift_path(base, loop);

  DeckTransform deck;
  deck.word = lifted.state.log;
  deck.k_matrix = word_to_matrix(d, deck.word);
  deck.ledger_delta = lifted.state.ledgers;
  if (deck.k_matrix != word_to_matrix(d, w))
    throw InvariantViolation("monodromy K-matrix disagrees with the input word");

  bool pure = true;
  for (std::size_t t = 0; t < d.size() && pure; ++t) {
    IntVector e(d.size(), 0);
    e[t] = 1;
    pure = lifted.state.classes[t] == e;
    if (t > 0 && lifted.state.ledgers[t] != lifted.state.ledgers[0]) pure = false;
  }
  deck.pure_shift = pure;
  return deck;
}

namespace {

const std::vector<Gaussian>& scalar_fan() {
  // Sixteen spread directions in the upper half turn, unit direction first.
  static const std::vector<Gaussian> fan = [] {
    std::vector<std::pair<long, long>> dirs = {
        {1, 0},  {8, 1},  {4, 1},  {8, 3}, {2, 1},  {8, 5},  {4, 3},  {8, 7},
        {1, 1},  {7, 8},  {3, 4},  {5, 8}, {1, 2},  {3, 8},  {1, 4},  {1, 8}};
    std::vector<Gaussian> out;
    for (auto [re, im] : dirs) out.emplace_back(Rational(re), Rational(im));
    return out;
  }();
  return fan;
}

bool real_regular(const Diagram& d, const CentralCharge& Z) {
  if (!d.affine()) {
    for (const auto& beta : positive_roots(d))
      if (evaluate(Z, beta).im == 0) return false;
    return true;
  }
  // Walls of the affine arrangement on the Im-projection: Im Z(alpha) + d
  // with Im Z(delta) = 1, so integrality of Im Z(alpha) is the obstruction.
  for (const auto& alpha_fin : positive_roots(d.finite_part())) {
    ClassVector alpha(d.size(), 0);
    std::copy(alpha_fin.begin(), alpha_fin.end(), alpha.begin() + 1);
    if (is_integer(evaluate(Z, alpha).im)) return false;
  }
  return true;
}

ChargePath straight_path(const CentralCharge& from, const CentralCharge& to,
                         int attempt) {
  ChargePath path;
  path.vertices.push_back(from);
  if (attempt > 0) {
    // Jittered midpoint to dodge non-generic incidences.
    CentralCharge mid = interpolate(from, to, Rational(1, 2));
    Rational eps = make_ratio((attempt % 3) - 1, 64L << attempt);
    Rational eps2 = make_ratio(1, 128L << attempt);
    for (std::size_t i = 0; i < mid.size(); ++i) {
      mid[i].re += eps * Rational(static_cast<long>(i) + 1);
      mid[i].im += eps2 * Rational(static_cast<long>(i) + 1);
    }
    path.vertices.push_back(mid);
  }
  path.vertices.push_back(to);
  return path;
}

}  // namespace

NormalizeResult normalize(const Diagram& d, const CentralCharge& Z) {
  auto reg = is_regular(d, Z);
  if (!reg.regular) throw InvalidInput("normalize requires a regular charge");

  Gaussian mu;
  if (d.affine()) {
    mu = Gaussian::imaginary_unit() / evaluate(Z, d.delta());
    if (!real_regular(d, scale_charge(Z, mu)))
      throw NonGenericPath(
          "affine charge lies over a wall of the Im-projection; no interior "
          "normalization exists");
  } else {
    bool found = false;
    for (const auto& dir : scalar_fan()) {
      if (real_regular(d, scale_charge(Z, dir))) {
        mu = dir;
        found = true;
        break;
      }
    }
    if (!found) throw NonGenericPath("normalization scalar fan exhausted");
  }

  const CentralCharge scaled = scale_charge(Z, mu);
  const CentralCharge target = standard_basepoint(d);
  CoverState base = initial_state(d, target);

  for (int attempt = 0; attempt <= 8; ++attempt) {
    ChargePath out_path = straight_path(target, scaled, attempt);
    LiftResult outward{base, {}};
    try {
      outward = lift_path(base, out_path);
    } catch (const NonGenericPath&) {
      if (attempt == 8) throw;
      continue;
    }
    bool has_shift = false;
    for (const auto& ev : outward.events) has_shift = has_shift || ev.global_shift;
    if (has_shift) {
      if (attempt == 8) throw NonGenericPath("normalization path hit a degenerate ray");
      continue;
    }

    BraidWord word = inverse_word(outward.state.log);
    CentralCharge replay = act_weyl(word_to_matrix(d, word), scaled);
    if (!in_fundamental(d, replay))
      throw InvariantViolation("normalization replay left the fundamental chamber");

    // Walking home along the reversed path restores the base slots exactly
    // and leaves the deck word in the audit log.
    LiftResult inward = lift_path(outward.state, reverse_path(out_path));
    for (std::size_t t = 0; t < d.size(); ++t) {
      IntVector e(d.size(), 0);
      e[t] = 1;
      if (inward.state.classes[t] != e)
        throw InvariantViolation("normalization did not reach the standard base");
      if (inward.state.ledgers[t] != inward.state.ledgers[0])
        throw InvariantViolation("normalization ledgers are not uniform");
    }
    return {mu, word, inward.state, replay};
  }
  throw NonGenericPath("normalization retries exhausted");
}

namespace {

struct LightState {
  std::vector<ClassVector> classes;
  std::vector<std::int64_t> ledgers;
};

ExchangeNode normalize_node(LightState s) {
  std::int64_t m = s.ledgers[0];
  std::int64_t sign = shift_scalar(m);
  for (auto& c : s.classes) c = scale(c, sign);
  for (auto& k : s.ledgers) k -= m;
  return {std::move(s.classes), std::move(s.ledgers)};
}

}  // namespace

ExchangeGraph exchange_bfs(const Diagram& d, int depth) {
  if (depth < 0) throw InvalidInput("depth must be nonnegative");
  const std::size_t n = d.size();

  LightState start;
  start.ledgers.assign(n, 0);
  start.classes.resize(n);
  for (std::size_t t = 0; t < n; ++t) {
    start.classes[t].assign(n, 0);
    start.classes[t][t] = 1;
  }

  ExchangeGraph graph;
  std::map<ExchangeNode, std::size_t> index;
  ExchangeNode root = normalize_node(start);
  index[root] = 0;
  graph.nodes.push_back(root);

  std::vector<std::size_t> frontier{0};
  graph.closed = frontier.empty();
  for (int layer = 0; layer < depth && !frontier.empty(); ++layer) {
    std::vector<std::size_t> next;
    for (std::size_t from : frontier) {
      const ExchangeNode node = graph.nodes[from];  // push_back below reallocates
      for (std::size_t slot = 0; slot < n; ++slot)
        for (Direction dir : {Direction::Ascending, Direction::Descending}) {
          auto moved = crossing_core(d, node.classes, node.ledgers, slot, dir);
          ExchangeNode target = normalize_node({moved.classes, moved.ledgers});
          auto [it, fresh] = index.emplace(target, graph.nodes.size());
          if (fresh) {
            graph.nodes.push_back(target);
            next.push_back(it->second);
          }
          graph.edges.push_back({from, it->second, slot, dir});
        }
    }
    frontier = std::move(next);
  }
  graph.closed = frontier.empty();
  return graph;
}

CentralCharge act_automorphism(const GraphAutomorphism& g, const CentralCharge& Z) {
  CentralCharge out(Z.size());
  for (std::size_t i = 0; i < Z.size(); ++i) out[g.perm[i]] = Z[i];
  return out;
}

ChargePath act_automorphism(const GraphAutomorphism& g, const ChargePath& p) {
  ChargePath out;
  out.vertices.reserve(p.vertices.size());
  for (const auto& v : p.vertices) out.vertices.push_back(act_automorphism(g, v));
  return out;
}

CoverState act_automorphism(const GraphAutomorphism& g, const CoverState& s) {
  if (!preserves_diagram(s.diagram, g))
    throw InvalidInput("permutation is not a diagram automorphism");
  CoverState out(s.diagram);
  out.diagram = s.diagram;
  out.charge = act_automorphism(g, s.charge);
  out.classes.resize(s.slots());
  out.ledgers.resize(s.slots());
  for (std::size_t t = 0; t < s.slots(); ++t) {
    IntVector moved(s.classes[t].size());
    for (std::size_t i = 0; i < moved.size(); ++i) moved[g.perm[i]] = s.classes[t][i];
    out.classes[g.perm[t]] = std::move(moved);
    out.ledgers[g.perm[t]] = s.ledgers[t];
  }
  out.log.reserve(s.log.size());
  for (const auto& letter : s.log) out.log.push_back({g.perm[letter.slot], letter.sign});
  out.shift_count = s.shift_count;
  return out;
}

}  // namespace stabcover
