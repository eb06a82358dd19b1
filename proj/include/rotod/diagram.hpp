#pragma once

#include <cstddef>
#include <vector>

#include "rotod/renormalize.hpp"

namespace rotod {

/// Which vertices of each level a construction keeps.
enum class VertexSelection {
  All,        ///< the full alphabet at every level
  Aperiodic,  ///< letters whose coding cell meets the aperiodic set
  Minimal,    ///< the minimal subdiagram grown from letter 0
};

/// Vertex sets of levels 1..depth (result[k-1] is level k).
std::vector<std::vector<bool>> vertex_sets(const RenormSeq& seq, std::size_t depth,
                                           VertexSelection selection);

struct HeightVector {
  std::size_t level = 0;
  std::vector<Letter> letters;
  std::vector<BigInt> h;  // aligned with letters

  BigInt at(Letter letter) const;
};

/// h^{(n)}: number of root-to-vertex paths at level n, via
/// h^{(n)} = M_{n-1} ... M_1 * (1,...,1) restricted to the selected vertices.
HeightVector heights(const RenormSeq& seq, std::size_t n,
                     VertexSelection selection = VertexSelection::All);

/// Same numbers as `heights` for the full alphabet, computed as lengths of
/// chi_1 ∘ ... ∘ chi_{n-1}(i). Exponential in n; for cross-checks.
std::vector<BigInt> heights_by_words(const RenormSeq& seq, std::size_t n);

/// First `len` letters of lim chi_1 ∘ ... ∘ chi_k(0). Throws
/// PreconditionError if the limit word is finite and shorter than `len`.
Word fixed_point_prefix(const RenormSeq& seq, std::size_t len);

/// Smallest letter set containing 0 that is closed under the composition of
/// the substitutions of one period.
std::vector<Letter> minimal_alphabet(const RenormSeq& seq);

/// Composition chi_{k0+1} ∘ ... ∘ chi_{k0+p0} of one period.
Substitution period_substitution(const RenormSeq& seq);

struct TelescopedSystem {
  /// M_{k0+p0} ... M_{k0+1}.
  IntegerMatrix b;
  /// M_{k0} ... M_1 * (1,...,1).
  std::vector<BigInt> w;
};

TelescopedSystem telescope(const RenormSeq& seq);

struct DiagramEdge {
  Letter source;  // vertex at level k
  Letter target;  // vertex at level k+1
  std::size_t rank;
};

/// Ordered Bratteli diagram truncated at `depth` levels below the root.
///
/// Level k (1 <= k <= depth) holds the present letters; every level-1 vertex
/// has one edge from the root. Edges from level k to level k+1 follow chi_k:
/// the incoming edges of target i are the letters of chi_k(i) that are
/// present at level k, in word order.
class OrderedDiagram {
 public:
  OrderedDiagram(const RenormSeq& seq, std::size_t depth, VertexSelection selection);

  std::size_t depth() const noexcept { return depth_; }
  std::size_t alphabet_size() const noexcept { return q_; }
  bool present(std::size_t level, Letter v) const { return present_.at(level - 1).at(v); }
  std::vector<Letter> vertices(std::size_t level) const;

  /// Sources of the ordered incoming edges of `target` at level+1, for 1 <= level < depth.
  const Word& incoming(std::size_t level, Letter target) const { return incoming_.at(level - 1).at(target); }
  std::vector<DiagramEdge> edges(std::size_t level) const;
  std::size_t edge_count(std::size_t level) const;

 private:
  std::size_t depth_;
  std::size_t q_;
  std::vector<std::vector<bool>> present_;
  std::vector<std::vector<Word>> incoming_;
};

OrderedDiagram build_diagram(const RenormSeq& seq, std::size_t depth, bool restrict_to_aperiodic);

/// A finite path from the root to level `depth`.
///
/// vertices[k-1] is the vertex at level k; ranks[k-1] is the order rank of
/// the edge from level k to level k+1 among the incoming edges of
/// vertices[k]. The root edge carries no choice.
struct PathPrefix {
  std::vector<Letter> vertices;
  std::vector<std::size_t> ranks;

  std::size_t depth() const noexcept { return vertices.size(); }
  Letter top() const { return vertices.back(); }
  friend bool operator==(const PathPrefix&, const PathPrefix&) = default;
  friend auto operator<=>(const PathPrefix&, const PathPrefix&) = default;
};

/// Throws StructuralError if the path does not belong to the diagram.
void validate_path(const OrderedDiagram& d, const PathPrefix& path);

/// The path of minimal (resp. maximal) edges ending at `top`.
PathPrefix minimal_path(const OrderedDiagram& d, Letter top);
PathPrefix maximal_path(const OrderedDiagram& d, Letter top);

bool is_maximal(const OrderedDiagram& d, const PathPrefix& path);
bool is_minimal(const PathPrefix& path);

/// Vershik successor at finite depth: advance the lowest non-maximal edge
/// and reset everything below it to the minimal path into its new source.
/// A path of maximal edges moves to the minimal path into the next present
/// top vertex, wrapping from the last one to the first, so the map cycles
/// through every depth-limited path.
PathPrefix vershik_successor(const OrderedDiagram& d, const PathPrefix& path);

struct CodingCheck {
  bool itinerary_matches = false;  // orbit letters of 0 == fixed point prefix
  bool vershik_matches = false;    // level-1 vertices of the Vershik orbit == fixed point prefix
  bool ok() const noexcept { return itinerary_matches && vershik_matches; }
};

/// Compares the first n letters of the itinerary of 0 under F_pi with the
/// fixed point of the substitution sequence and with the level-1 vertices
/// along the Vershik orbit of the minimal path.
CodingCheck coding_check(const RotatedOdometer& sys, std::size_t n);

}  // namespace rotod
