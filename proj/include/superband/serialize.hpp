#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "superband/family.hpp"

namespace superband {

using Json = nlohmann::ordered_json;

// Element terms as a list of {"mask": [1-based indices], "coeff": "p/q"}.
Json element_to_json(const GrassmannElement& x);
GrassmannElement element_from_json(int n_generators, const Json& j);

// {"shape": [p, q], "n_generators": N, "entries": [[terms, ...], ...]}.
Json matrix_to_json(const Supermatrix& m);
Supermatrix matrix_from_json(const Json& j);

// Header row/column are the element labels, cells are labels.
std::string cayley_csv(const std::vector<std::string>& labels,
                       const std::vector<std::vector<std::string>>& cells);
std::string cayley_csv(const CayleyTable& table);
Json cayley_json(const std::vector<std::string>& labels,
                 const std::vector<std::vector<std::string>>& cells,
                 bool closed);
Json cayley_json(const CayleyTable& table);

// {"axes": [...], "classes_per_axis": [...], "cells": {"i,j,...": [labels]}}.
Json eggbox_json(const EggboxDiagram& box, const std::vector<std::string>& labels);

// 2-D eggbox as a DOT graph: one cluster per D-class, nodes are H-cells laid
// out on the R x L grid.
std::string eggbox_dot(const EggboxDiagram& box,
                       const std::vector<std::string>& labels,
                       const Partition& d_classes);

}  // namespace superband
