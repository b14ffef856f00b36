#include "oraclegram/tif.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace oraclegram {

Axis other_axis(Axis a) { return a == Axis::X ? Axis::Y : Axis::X; }

char axis_letter(Axis a) { return a == Axis::X ? 'X' : 'Y'; }

TifGraph build_graph(const FunctionSet& s) {
  if (s.domain_size() != 2)
    throw std::invalid_argument("grid graph requires a two-point domain");
  TifGraph g;
  g.k = s.size();
  g.coords.reserve(g.k);
  for (int j = 0; j < g.k; ++j) g.coords.emplace_back(s[j](0), s[j](1));
  g.adjacency = MatrixXz::Zero(g.k, g.k);
  for (int j = 0; j < g.k; ++j) {
    for (int jp = j + 1; jp < g.k; ++jp) {
      const bool same_x = g.coords[j].first == g.coords[jp].first;
      const bool same_y = g.coords[j].second == g.coords[jp].second;
      if (same_x == same_y) continue;  // equal vertices are excluded upstream
      g.edges.push_back({j, jp, same_y ? Axis::X : Axis::Y});
      g.adjacency(j, jp) = g.adjacency(jp, j) = 1;
    }
  }
  return g;
}

bool check_gamma_adjacency(const FunctionSet& s, int max_subset_size) {
  const int k = s.size();
  const auto matches = [&](const FunctionSet& sub) {
    const TifGraph g = build_graph(sub);
    const MatrixXz expected =
        g.adjacency + 2 * MatrixXz::Identity(sub.size(), sub.size());
    return coincidence_matrix(sub).entries == expected;
  };
  if (!matches(s)) return false;

  std::vector<int> pick;
  for (int size = 1; size <= std::min(k, max_subset_size); ++size) {
    pick.assign(size, 0);
    for (int i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      std::vector<FunctionTable> members;
      members.reserve(size);
      for (int idx : pick) members.push_back(s[idx]);
      if (!matches(FunctionSet(members))) return false;

      int i = size - 1;
      while (i >= 0 && pick[i] == k - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int t = i + 1; t < size; ++t) pick[t] = pick[t - 1] + 1;
    }
  }
  return true;
}

namespace {

bool adjacent_on(const TifGraph& g, int a, int b, Axis axis) {
  const auto& [ax, ay] = g.coords[a];
  const auto& [bx, by] = g.coords[b];
  if (axis == Axis::X) return ay == by && ax != bx;
  return ax == bx && ay != by;
}

int smallest_neighbor_on(const TifGraph& g, int v, Axis axis) {
  for (int u = 0; u < g.k; ++u)
    if (u != v && adjacent_on(g, v, u, axis)) return u;
  return -1;
}

}  // namespace

CycleResult find_even_induced_cycle(const TifGraph& g, int start) {
  if (start < 0 || start >= g.k)
    throw std::invalid_argument("start vertex out of range");
  for (int v = 0; v < g.k; ++v)
    for (Axis axis : {Axis::X, Axis::Y})
      if (smallest_neighbor_on(g, v, axis) < 0)
        throw std::invalid_argument(
            "vertex " + std::to_string(v) + " has no " +
            std::string(1, axis_letter(axis)) +
            " neighbor; the set is not totally indistinguishable");

  std::vector<int> walk{start};
  std::vector<Axis> walk_axes;  // walk_axes[i] joins walk[i], walk[i+1]
  Axis next_axis = Axis::X;
  int trim_at = -1;
  while (trim_at < 0) {
    if (static_cast<int>(walk.size()) > g.k)
      throw std::logic_error("walk exceeded the vertex count");
    const int next = smallest_neighbor_on(g, walk.back(), next_axis);
    walk.push_back(next);
    walk_axes.push_back(next_axis);
    next_axis = other_axis(next_axis);
    for (int q = static_cast<int>(walk.size()) - 3; q >= 0; --q) {
      if (g.adjacency(walk[q], next) != 0) {
        trim_at = q;
        break;
      }
    }
  }

  CycleResult cycle;
  cycle.vertices.assign(walk.begin() + trim_at, walk.end());
  cycle.axes.assign(walk_axes.begin() + trim_at, walk_axes.end());
  const int len = static_cast<int>(cycle.vertices.size());
  const int back = cycle.vertices.back();
  const int front = cycle.vertices.front();
  cycle.axes.push_back(adjacent_on(g, back, front, Axis::X) ? Axis::X : Axis::Y);

  // The trimmed walk must close into an induced even cycle with strictly
  // alternating axes; anything else indicates a broken invariant.
  if (len < 4 || len % 2 != 0)
    throw std::logic_error("cycle length is not an even number >= 4");
  std::vector<int> sorted = cycle.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::logic_error("cycle repeats a vertex");
  for (int i = 0; i < len; ++i) {
    const int a = cycle.vertices[i];
    const int b = cycle.vertices[(i + 1) % len];
    if (!adjacent_on(g, a, b, cycle.axes[i]))
      throw std::logic_error("cycle edge missing from the graph");
    if (cycle.axes[i] == cycle.axes[(i + 1) % len])
      throw std::logic_error("cycle axes fail to alternate");
  }
  for (int i = 0; i < len; ++i)
    for (int j = i + 2; j < len; ++j) {
      if (i == 0 && j == len - 1) continue;
      if (g.adjacency(cycle.vertices[i], cycle.vertices[j]) != 0)
        throw std::logic_error("cycle has a chord");
    }
  return cycle;
}

std::vector<double> cycle_spectrum(int k) {
  if (k < 3) throw std::invalid_argument("a cycle needs at least three vertices");
  std::vector<double> values(k);
  for (int r = 0; r < k; ++r)
    values[r] = 2.0 * std::cos(2.0 * std::numbers::pi * r / k);
  return values;
}

M2TifVerdict m2_tif_verdict(const FunctionSet& s) {
  if (s.domain_size() != 2)
    throw std::invalid_argument("verdict requires a two-point domain");
  if (!is_totally_indistinguishable(s))
    throw std::invalid_argument("verdict requires a totally indistinguishable set");

  const TifGraph g = build_graph(s);
  M2TifVerdict v;
  v.witness = find_even_induced_cycle(g);

  const int len = static_cast<int>(v.witness.vertices.size());
  const CoincidenceMatrix gamma = coincidence_matrix(s);
  MatrixXz sub(len, len);
  for (int i = 0; i < len; ++i)
    for (int j = 0; j < len; ++j)
      sub(i, j) = gamma.entries(v.witness.vertices[i], v.witness.vertices[j]);
  v.witness_det = exact_determinant(sub);
  v.full_det = exact_determinant(gamma.entries);
  v.distinguishable = v.full_det > 0;
  return v;
}

ColumnProfile column_profile(const FunctionSet& s) {
  if (s.size() != 4)
    throw std::invalid_argument("column classification requires four functions");
  ColumnProfile p;
  for (int x = 0; x < s.domain_size(); ++x) {
    const int v0 = s[0](x), v1 = s[1](x), v2 = s[2](x), v3 = s[3](x);
    if (v0 == v1 && v1 == v2 && v2 == v3)
      ++p.n1;
    else if (v0 == v1 && v2 == v3)
      ++p.n2;
    else if (v0 == v2 && v1 == v3)
      ++p.n3;
    else if (v0 == v3 && v1 == v2)
      ++p.n4;
    else
      throw std::invalid_argument(
          "column " + std::to_string(x) +
          " does not split into equal-valued pairs; the set is not totally "
          "indistinguishable");
  }
  return p;
}

mpz_class tif4_det(const ColumnProfile& p, int m) {
  if (p.n1 < 0 || p.n2 < 0 || p.n3 < 0 || p.n4 < 0)
    throw std::invalid_argument("column counts must be nonnegative");
  if (p.n1 + p.n2 + p.n3 + p.n4 != m)
    throw std::invalid_argument("column counts must sum to the domain size");
  return mpz_class(16) * (m + p.n1) * p.n2 * p.n3 * p.n4;
}

bool tif4_verdict(const ColumnProfile& p) {
  return p.n2 > 0 && p.n3 > 0 && p.n4 > 0;
}

Characterize4Record characterize4(const FunctionSet& s) {
  Characterize4Record r;
  r.profile = column_profile(s);
  r.formula_det = tif4_det(r.profile, s.domain_size());
  r.direct_det = exact_determinant(coincidence_matrix(s).entries);
  r.distinguishable = tif4_verdict(r.profile);
  return r;
}

FunctionSet generate_tif4(int m, int n, const FunctionTable& f0,
                          const std::vector<int>& column_types,
                          const std::vector<int>& alt_values) {
  if (m < 3) throw std::invalid_argument("need at least three points");
  if (f0.domain_size() != m || f0.range_size() != n)
    throw std::invalid_argument("base row shape mismatch");
  if (static_cast<int>(column_types.size()) != m ||
      static_cast<int>(alt_values.size()) != m)
    throw std::invalid_argument("need one column type and alternate per point");

  bool seen[5] = {};
  for (int x = 0; x < m; ++x) {
    const int t = column_types[x];
    if (t < 1 || t > 4)
      throw std::invalid_argument("column type must be 1, 2, 3 or 4");
    seen[t] = true;
    if (t == 1) continue;
    if (alt_values[x] < 0 || alt_values[x] >= n)
      throw std::invalid_argument("alternate value out of range at point " +
                                  std::to_string(x));
    if (alt_values[x] == f0(x))
      throw std::invalid_argument(
          "alternate value must differ from the base row at point " +
          std::to_string(x));
  }
  if (!seen[2] || !seen[3] || !seen[4])
    throw std::invalid_argument("need at least one column of each type 2, 3 and 4");

  std::vector<int> r1(m), r2(m), r3(m);
  for (int x = 0; x < m; ++x) {
    const int a = f0(x);
    const int b = column_types[x] == 1 ? a : alt_values[x];
    switch (column_types[x]) {
      case 1: r1[x] = a; r2[x] = a; r3[x] = a; break;
      case 2: r1[x] = a; r2[x] = b; r3[x] = b; break;
      case 3: r1[x] = b; r2[x] = a; r3[x] = b; break;
      default: r1[x] = b; r2[x] = b; r3[x] = a; break;
    }
  }
  return FunctionSet({f0, make_function(m, n, r1), make_function(m, n, r2),
                      make_function(m, n, r3)});
}

}  // namespace oraclegram
