#include "stabcover/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "stabcover/errors.hpp"

namespace stabcover {

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::D: return "D";
    case Family::E: return "E";
  }
  return "?";
}

namespace {

void check_bounds(Family family, int rank) {
  switch (family) {
    case Family::A:
      if (rank < 1) throw InvalidInput("A_n requires n >= 1");
      break;
    case Family::D:
      if (rank < 4) throw InvalidInput("D_n requires n >= 4");
      break;
    case Family::E:
      if (rank < 6 || rank > 8) throw InvalidInput("E_n requires n in {6,7,8}");
      break;
  }
}

// Finite edges in Bourbaki labels 1..n.
std::vector<std::pair<int, int>> finite_edges(Family family, int n) {
  std::vector<std::pair<int, int>> edges;
  switch (family) {
    case Family::A:
      for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case Family::D:
      for (int i = 1; i + 1 <= n - 1; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(n - 2, n);
      break;
    case Family::E:
      edges.emplace_back(1, 3);
      for (int i = 3; i < n; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(2, 4);
      break;
  }
  return edges;
}

// Attachment vertex of the affine node (open dot in the diagram catalog).
int affine_attachment(Family family, int n) {
  switch (family) {
    case Family::A: return -1;  // cycle, handled separately
    case Family::D: return 2;
    case Family::E: return n == 6 ? 2 : (n == 7 ? 1 : 8);
  }
  return -1;
}

}  // namespace

Diagram::Diagram(Family family, int rank, bool affine)
    : family_(family), rank_(rank), affine_(affine) {
  check_bounds(family, rank);
  size_ = std::size_t(rank) + (affine ? 1 : 0);
  build_edges();
  if (affine_) {
    auto kernel = integer_kernel(euler_);
    if (kernel.size() != 1) throw InvariantViolation("affine Euler kernel not 1-dimensional");
    IntVector delta = kernel.front();
    if (delta[0] < 0) delta = negate(delta);
    for (auto x : delta)
      if (x <= 0) throw InvariantViolation("marks vector not strictly positive");
    if (delta[0] != 1) throw InvariantViolation("special-vertex mark is not 1");
    delta_ = delta;
  }
}

void Diagram::build_edges() {
  euler_ = IntMatrix(size_);
  for (std::size_t i = 0; i < size_; ++i) euler_.at(i, i) = 2;

  auto join = [&](std::size_t a, std::size_t b, int mult) {
    euler_.at(a, b) = -mult;
    euler_.at(b, a) = -mult;
  };

  if (!affine_) {
    for (auto [a, b] : finite_edges(family_, rank_)) join(std::size_t(a) - 1, std::size_t(b) - 1, 1);
    return;
  }

  // Affine: slots are vertex labels 0..n directly.
  if (family_ == Family::A) {
    if (rank_ == 1) {
      join(0, 1, 2);  // the degenerate two-vertex cycle carries a double edge
    } else {
      for (int i = 0; i < rank_; ++i) join(std::size_t(i), std::size_t(i) + 1, 1);
      join(std::size_t(rank_), 0, 1);
    }
    return;
  }
  for (auto [a, b] : finite_edges(family_, rank_)) join(std::size_t(a), std::size_t(b), 1);
  join(0, std::size_t(affine_attachment(family_, rank_)), 1);
}

int Diagram::multiplicity(std::size_t i, std::size_t j) const {
  if (i == j) return 0;
  return int(-euler_.at(i, j));
}

std::int64_t Diagram::euler_form(const IntVector& x, const IntVector& y) const {
  if (x.size() != size_ || y.size() != size_)
    throw InvalidInput("class vector dimension mismatch");
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < size_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < size_; ++j) acc += x[i] * euler_.at(i, j) * y[j];
  }
  return acc;
}

const IntVector& Diagram::delta() const {
  if (!affine_) throw InvalidInput("marks vector only exists for affine diagrams");
  return delta_;
}

std::string Diagram::name() const {
  return family_name(family_) + std::to_string(rank_) + (affine_ ? "~" : "");
}

Diagram Diagram::parse(const std::string& name) {
  if (name.empty()) throw InvalidInput("empty diagram name");
  Family family;
  switch (name[0]) {
    case 'A': family = Family::A; break;
    case 'D': family = Family::D; break;
    case 'E': family = Family::E; break;
    default: throw InvalidInput("unknown diagram family in '" + name + "'");
  }
  std::string rest = name.substr(1);
  bool affine = false;
  if (!rest.empty() && rest.back() == '~') {
    affine = true;
    rest.pop_back();
  }
  if (rest.empty() || !std::all_of(rest.begin(), rest.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
      }))
    throw InvalidInput("malformed diagram rank in '" + name + "'");
  if (rest.size() > 2) throw InvalidInput("diagram rank out of range in '" + name + "'");
  return Diagram(family, std::stoi(rest), affine);
}

Diagram Diagram::finite_part() const {
  if (!affine_) return *this;
  return Diagram(family_, rank_, false);
}

bool GraphAutomorphism::is_identity() const {
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (perm[i] != i) return false;
  return true;
}

GraphAutomorphism GraphAutomorphism::compose(const GraphAutomorphism& inner) const {
  GraphAutomorphism out;
  out.perm.resize(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) out.perm[i] = perm[inner.perm[i]];
  return out;
}

GraphAutomorphism GraphAutomorphism::inverse() const {
  GraphAutomorphism out;
  out.perm.resize(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) out.perm[perm[i]] = i;
  return out;
}

bool preserves_diagram(const Diagram& d, const GraphAutomorphism& g) {
  const std::size_t n = d.size();
  if (g.perm.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (auto p : g.perm) {
    if (p >= n || seen[p]) return false;
    seen[p] = true;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (d.multiplicity(g.perm[i], g.perm[j]) != d.multiplicity(i, j)) return false;
  return true;
}

std::vector<GraphAutomorphism> all_automorphisms(const Diagram& d, bool fix_special) {
  const std::size_t n = d.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<GraphAutomorphism> out;
  // Degree sequences prune nothing at these sizes; plain iteration is fine.
  do {
    if (fix_special && d.affine() && perm[0] != 0) continue;
    GraphAutomorphism g{perm};
    if (preserves_diagram(d, g)) out.push_back(std::move(g));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<GraphAutomorphism> automorphism_generators(const Diagram& d, bool fix_special) {
  auto all = all_automorphisms(d, fix_special);
  std::set<GraphAutomorphism> full(all.begin(), all.end());

  std::vector<GraphAutomorphism> gens;
  std::set<GraphAutomorphism> span;
  GraphAutomorphism id;
  id.perm.resize(d.size());
  std::iota(id.perm.begin(), id.perm.end(), 0);
  span.insert(id);

  for (const auto& g : all) {
    if (span.count(g)) continue;
    gens.push_back(g);
    // Recompute the subgroup generated so far (BFS from the identity).
    span.clear();
    std::vector<GraphAutomorphism> frontier{id};
    span.insert(id);
    while (!frontier.empty()) {
      std::vector<GraphAutomorphism> next;
      for (const auto& a : frontier)
        for (const auto& b : gens) {
          auto c = b.compose(a);
          if (span.insert(c).second) next.push_back(c);
        }
      frontier = std::move(next);
    }
    if (span.size() == full.size()) break;
  }
  return gens;
}

}  // namespace stabcover
