#pragma once

#include <utility>
#include <vector>

#include "oraclegram/functions.hpp"
#include "oraclegram/gram.hpp"
#include "oraclegram/linalg.hpp"

namespace oraclegram {

/// Axis of a grid adjacency for two-point domains. Vertices are the points
/// (f(0), f(1)); an X edge moves along the first coordinate (equal f(1)),
/// a Y edge along the second (equal f(0)).
enum class Axis { X, Y };

Axis other_axis(Axis a);
char axis_letter(Axis a);

struct TifEdge {
  int j;
  int jp;
  Axis axis;
};

struct TifGraph {
  int k = 0;
  std::vector<std::pair<int, int>> coords;  // (f(0), f(1)) per vertex
  std::vector<TifEdge> edges;               // j < jp, each adjacent pair once
  MatrixXz adjacency;
};

/// Grid graph of a set over a two-point domain: vertex j at (f_j(0), f_j(1)),
/// edges between vertices sharing exactly one coordinate.
TifGraph build_graph(const FunctionSet& s);

/// Checks Gamma = A + 2I for the set and for every subset of size at most
/// max_subset_size, with each subset's graph rebuilt from scratch.
bool check_gamma_adjacency(const FunctionSet& s, int max_subset_size = 6);

struct CycleResult {
  std::vector<int> vertices;
  std::vector<Axis> axes;  // axes[i] joins vertices[i] and vertices[i + 1 mod L]
};

/// Walks the grid graph from `start`, first along X, alternating axes and
/// taking the smallest-index neighbor, until the new endpoint is adjacent to
/// a non-predecessor; trimming to the latest such vertex leaves an induced
/// axis-alternating cycle of even length >= 4. Every vertex must have a
/// neighbor on each axis (the totally indistinguishable case), else
/// invalid_argument.
CycleResult find_even_induced_cycle(const TifGraph& g, int start = 0);

/// Adjacency eigenvalues 2 cos(2 pi r / k) of the k-cycle, r = 0..k-1.
std::vector<double> cycle_spectrum(int k);

struct M2TifVerdict {
  bool distinguishable = false;
  CycleResult witness;
  mpz_class witness_det;  // det of Gamma restricted to the cycle vertices
  mpz_class full_det;
};

/// Full verdict for a totally indistinguishable set over a two-point domain:
/// locates the cycle witness and evaluates both determinants (always zero).
M2TifVerdict m2_tif_verdict(const FunctionSet& s);

/// Column classification for four-member totally indistinguishable sets.
/// Seen as a 4 x m value table, every column is constant (type 1) or splits
/// the rows into two equal-valued pairs: {0,1}/{2,3} is type 2, {0,2}/{1,3}
/// type 3, {0,3}/{1,2} type 4.
struct ColumnProfile {
  int n1 = 0;
  int n2 = 0;
  int n3 = 0;
  int n4 = 0;

  bool operator==(const ColumnProfile&) const = default;
};

ColumnProfile column_profile(const FunctionSet& s);

/// det(Gamma) = 16 (m + n1) n2 n3 n4 for a profile summing to m.
mpz_class tif4_det(const ColumnProfile& p, int m);

/// Distinguishable iff every non-constant column type occurs.
bool tif4_verdict(const ColumnProfile& p);

struct Characterize4Record {
  ColumnProfile profile;
  mpz_class formula_det;  // 16 (m + n1) n2 n3 n4
  mpz_class direct_det;   // Bareiss elimination on Gamma
  bool distinguishable = false;

  bool operator==(const Characterize4Record&) const = default;
};

/// Profile, closed-form determinant and direct determinant of a four-member
/// totally indistinguishable set; the two determinants always agree.
Characterize4Record characterize4(const FunctionSet& s);

/// Builds the four-member set over m >= 3 points determined by a base row,
/// a column type per point, and the alternate value used by non-constant
/// columns. Types 2, 3 and 4 must each occur; alternate values must differ
/// from the base row on non-constant columns.
FunctionSet generate_tif4(int m, int n, const FunctionTable& f0,
                          const std::vector<int>& column_types,
                          const std::vector<int>& alt_values);

}  // namespace oraclegram
