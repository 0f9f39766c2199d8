#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "canvas_forge/canvas.hpp"
#include "canvas_forge/coloring.hpp"
#include "canvas_forge/plane_graph.hpp"
#include "canvas_forge/steiner.hpp"

namespace canvas_forge {

struct ApexGraph {
  PlaneGraph graph;            // vertices 0..n-1 as in G, then one apex per face
  std::vector<FaceId> faces;   // faces of G, distinct, in input order
  std::vector<Vertex> apex;    // apex[i] sits inside faces[i]
};

/// Adds a vertex inside each face, joined once to every distinct boundary
/// vertex at that vertex's first corner along the boundary walk.
ApexGraph build_apex(const PlaneGraph& g, std::span<const FaceId> faces);

struct SeamCopies {
  std::vector<Vertex> left;   // G0 vertices along the left copy; -1 where the copy was deleted (apex)
  std::vector<Vertex> right;
};

struct SurgeryResult {
  PlaneGraph g0;
  std::vector<Vertex> rho;     // G0 vertex -> G vertex
  ListAssignment l0;
  SubgraphRef s0;
  FaceId f0 = -1;              // outer face of g0
  SubgraphRef s;               // S = P ∪ (H - Y) as a subgraph of G
  std::vector<int> copies;     // per G vertex: number of G0 preimages
  std::vector<int> tree_degree;  // per G vertex: degree in H (0 outside H)
  std::vector<SeamCopies> seam_copies;  // parallel to the tree's seams
  bool path_avoids_tree = true;          // E(P) ∩ E(H) = ∅
};

/// Cuts G' along the tree, deletes the apexes and re-embeds with the opened
/// face as the outer face. `path` is the union of special paths (a subgraph of G).
/// Throws ArgumentError if the tree does not span the apexes.
SurgeryResult cut_along_seams(const PlaneGraph& g, const ListAssignment& lists, const SubgraphRef& path,
                              const ApexGraph& apex, const SteinerTree& h);

/// Apex graph over the distinct special faces, optimal tree with the apex
/// tie-break, then the cut.
struct SurgeryRun {
  ApexGraph apex;
  SteinerTree tree;
  SurgeryResult result;
};
SurgeryRun run_surgery(const MainInstance& instance);

/// phi ∘ rho.
Coloring pull_back(const SurgeryResult& sr, const Coloring& phi);

/// {"g0", "rho", "lists", "s0", "f0", "seam_copies": [{"left", "right"}]}
std::string surgery_to_json(const SurgeryResult& sr);

/// Inverse of pull_back on fibre-constant colourings; throws ArgumentError
/// naming the first G vertex whose copies disagree.
Coloring push_forward(const SurgeryResult& sr, const Coloring& phi0);

struct ConservationReport {
  bool rho_homomorphism = false;   // edges map to edges
  bool lists_inherited = false;    // L0 = L ∘ rho
  bool identity_off_tree = false;  // vertices outside H have one copy, mapped to themselves
  bool copy_counts = false;        // copies(v) = max(1, deg_H(v)) on H - Y
  bool branch_degree_sum = false;  // sum of copies over branch vertices = sum of their tree degrees
  bool vertex_count = false;       // |V(G0)| = |V(G)| + sum (copies - 1)
  bool connected = false;
  bool scaffold_on_outer_face = false;
  bool scaffold_paths = false;     // S0 is a disjoint union of paths along the outer walk
  bool canvas_valid = false;       // (G0, S0, L0) passes validate_canvas

  bool all() const {
    return rho_homomorphism && lists_inherited && identity_off_tree && copy_counts && branch_degree_sum &&
           vertex_count && connected && scaffold_on_outer_face && scaffold_paths && canvas_valid;
  }
};

ConservationReport check_conservation(const PlaneGraph& g, const ListAssignment& lists, const SurgeryRun& run);

/// Components of S0 as vertex sequences when each is a path along consecutive
/// darts of the outer walk of G0; none otherwise.
std::optional<std::vector<std::vector<Vertex>>> scaffold_as_outer_paths(const SurgeryResult& sr);

enum class ClaimStatus { kHolds, kFails, kHypothesisUnmet, kSkipped };
std::string to_string(ClaimStatus s);

struct ClaimResult {
  std::string name;
  ClaimStatus status = ClaimStatus::kSkipped;
  bool hypothesis_met = false;
  std::string note;
};

struct SeamRecord {
  int length = 0;
  Vertex midpoint = -1;
  bool long_seam = false;  // length >= 16
  int radius = 0;          // ceil(length / 4 - 4) for long seams
  int ring_size = 0;       // |N_radius(mid)| in G
  bool ring_in_z = false;
};

struct ProofLedger {
  int m = 0;
  int distance_parameter = 0;  // D used for the arithmetic
  double c1 = 1.0;
  double c2 = 1.0;
  std::vector<Vertex> r, z, r0, z0;
  int s0_size = 0;
  int seams = 0;
  int long_seams = 0;
  int short_seams = 0;
  long long long_length_sum = 0;
  std::optional<double> x;     // mean length over long seams
  double d_prime = 0.0;        // (D - 4) / (4 c1) - 35
  std::optional<double> f_x;
  double f_d_prime = 0.0;
  bool z0_contains_preimage = false;  // rho^{-1}(Z) ⊆ Z0
  bool z0_equals_preimage = false;
  bool r_sizes_match = false;         // |R| = |R0|
  bool z_size_bound = false;          // |Z| <= |Z0|
  bool long_rings_disjoint = true;
  // Whether each distance bound alone forces the rings of every long pair apart.
  // The midpoint-to-terminal bound gives no lower bound between two midpoints.
  bool clause4_separates_rings = true;
  bool clause5_separates_rings = true;  // 4 (r_e + r_f) < |e| + |f| - 2
  std::vector<SeamRecord> seam_records;
};

ProofLedger build_ledger(const MainInstance& instance, const SurgeryRun& run, int distance_parameter, double c1,
                         double c2);

/// CSV header: m,D,c1,c2,R,Z,R0,Z0,S0,seams,long_seams,short_seams,long_length_sum,x,D_prime,f_x,f_D_prime
std::string ledger_csv_header();
std::string ledger_csv_row(const ProofLedger& ledger);

struct ClaimsReport {
  std::vector<ClaimResult> claims;
  std::optional<Coloring> s_coloring;      // from the tree-colouring procedure
  std::optional<Coloring> no_chord_composite;  // from the split-and-recolour reduction, when run
};

/// Evaluates each claim's statement on a concrete instance. T0Critical is
/// only evaluated when S0 has at most `criticality_budget` L0-colourings.
ClaimsReport check_claims(const MainInstance& instance, const SurgeryRun& run, const ProofLedger& ledger,
                          std::uint64_t criticality_budget = 20000);

/// Colours S = P ∪ (H - Y): the special paths first, then each tree component
/// greedily from a root, avoiding path neighbours. None if a list runs out.
std::optional<Coloring> color_scaffold_tree(const MainInstance& instance, const SurgeryResult& sr);

struct DSolution {
  long long d = 0;                      // smallest even D >= floor satisfying the inequality
  long long floor_even = 0;             // smallest even integer >= 720 c1 c2^2
  long long inequality_threshold = 0;   // smallest even D with the inequality at every even D' >= D
  bool f_positive = false;              // f(D') > 0 at d, evaluated from D' directly
  bool d_prime_bound = false;           // D' >= 144 c2^2 at d
  double f_value = 0.0;                 // f(D') (rounded, for display)
};

/// Exact evaluation: rationals for c1, c2 (the exact binary values of the
/// doubles) and 2^a compared against rationals with directed-rounding MPFR
/// bounds, refined until decided; integer exponents are compared exactly.
DSolution solve_D_inequality(double c1, double c2);

/// 2^((D - 4 - 204 c1) / (32 c1 c2)) > (D - 4) / (4 c1), decided exactly.
bool d_inequality_holds(long long d, double c1, double c2);

}  // namespace canvas_forge
