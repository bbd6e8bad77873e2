#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ramsey/coloring.hpp"
#include "ramsey/gf16.hpp"
#include "ramsey/template.hpp"

namespace ramsey {

/// The three cosets of the cubic residues in GF(16)^*. Class j lists
/// g^(3k+j) for k = 0..4, in that order, with g = x.
struct ResidueClasses {
  std::array<std::array<Gf16, 5>, 3> classes;

  // Index of the class containing a nonzero element.
  int class_of(Gf16 a) const;
};

ResidueClasses cubic_classes();

/// True when a + b lies outside the set for every a != b in it.
bool is_sum_free(std::span<const Gf16> set);

/// Greenwood-Gleason coloring of K_16: vertices are field elements, edge
/// {u, w} takes the color of the class of u + w (class 0 Blue, 1 Red, 2 Yellow).
EdgeColoring construct_gf16();

// Cylinder labelling of K_16: vertex 0 = O, 1..5 = A_1..A_5,
// 6..10 = B_1..B_5, 11..15 = C_1..C_5.
namespace cylinder {
inline constexpr Vertex kHub = 0;
inline constexpr int kBlockSize = 5;
enum class Part { A = 0, B = 1, C = 2 };
constexpr Vertex vertex(Part p, int i) { return 1 + static_cast<int>(p) * kBlockSize + (i - 1); }
std::string label(Vertex v);  // "O", "A1", ..., "C5"
}  // namespace cylinder

/// Template of the cylinder construction: fixed spokes (O-A Blue, O-B Red,
/// O-C Yellow), two-color blocks (A {R,Y}, B {Y,B}, C {B,R}), free A-B cross
/// edges and couplings color(B_iC_j) = sigma(color(A_iB_j)),
/// color(C_iA_j) = sigma^2(color(A_iB_j)).
ColoringTemplate cylinder_template();

/// Backtracking search for triangle-free completions of a template.
///
/// Edges are visited in ordinal order and colors tried Blue, Red, Yellow.
/// Coupled edges form groups; choosing the color of a group's first edge
/// fixes every member. An assignment that closes a monochromatic triangle
/// with already-assigned edges is pruned immediately. Returns at most
/// `limit` solutions in search order; an empty result means unsatisfiable.
/// Inconsistent couplings yield no solutions. Throws CapacityError for n > 64.
std::vector<EdgeColoring> solve_template(const ColoringTemplate& t, std::size_t limit);

/// First solution of the cylinder template.
EdgeColoring construct_cylinder();

}  // namespace ramsey
