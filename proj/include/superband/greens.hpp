#pragma once

#include <map>
#include <string>
#include <vector>

#include "superband/band.hpp"
#include "superband/partition.hpp"

namespace superband {

// Closed finite multiplication table over element indices.
struct MulTable {
  int n = 0;
  std::vector<std::vector<int>> cell;
};

// Throws DomainError when the Cayley table is not closed.
MulTable to_multable(const CayleyTable& table);

struct GreensClasses {
  Partition r, l, h, d, j;
};

// Brute-force Green's relations over the monoid S^1 = S + {1}:
// R by equal right ideals aS^1, L by equal S^1 a, H = R meet L,
// D = join(R, L), J by equal S^1 a S^1.
GreensClasses greens_classes(const MulTable& table);

enum class DeltaMode { Single, Double, NPle };

// Partition by componentwise alpha-equality of the stored parameters.
// Single expects P/Q/Y, Double expects R, NPle expects F elements.
Partition delta_partition(const std::vector<BandElement>& elems, DeltaMode mode);

enum class Side { R, L };

// Fine relation: blocks by alpha-equality of the k-th t-parameter (Side::R)
// or k-th u-parameter (Side::L); k is 1-based.
Partition fine_relation(const std::vector<BandElement>& elems, Side side, int k);

// k-dimensional grid of cells indexed by tuples of class indices, one axis
// per relation. Every element lands in exactly one cell; the grid is
// complete (cells may be empty).
struct EggboxDiagram {
  std::vector<std::string> axis_names;
  std::vector<int> classes_per_axis;
  std::map<std::vector<int>, std::vector<int>> cells;
};

EggboxDiagram make_eggbox(
    const std::vector<std::pair<std::string, Partition>>& axes);

}  // namespace superband
