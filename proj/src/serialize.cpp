#include "superband/serialize.hpp"

#include <bit>
#include <sstream>

namespace superband {

Json element_to_json(const GrassmannElement& x) {
  Json terms = Json::array();
  for (const auto& [m, c] : x.terms()) {
    Json indices = Json::array();
    Mask mm = m;
    while (mm) {
      indices.push_back(std::countr_zero(mm) + 1);
      mm &= mm - 1;
    }
    terms.push_back(Json{{"mask", indices}, {"coeff", rat_str(c)}});
  }
  return terms;
}

GrassmannElement element_from_json(int n_generators, const Json& j) {
  if (!j.is_array()) throw ParseError("element JSON must be a list of terms");
  GrassmannElement::TermMap terms;
  for (const auto& term : j) {
    Mask m = 0;
    for (const auto& idx : term.at("mask")) {
      int i = idx.get<int>();
      if (i < 1 || i > n_generators)
        throw ParseError("generator index out of range in element JSON");
      Mask bit = Mask{1} << (i - 1);
      if (m & bit) throw ParseError("repeated generator in element JSON");
      m |= bit;
    }
    Rat c = rat_parse(term.at("coeff").get<std::string>());
    if (terms.count(m)) throw ParseError("repeated mask in element JSON");
    terms[m] = c;
  }
  return GrassmannElement::from_terms(n_generators, std::move(terms));
}

Json matrix_to_json(const Supermatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.dim(); ++j) row.push_back(element_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"shape", {m.even_dim(), m.odd_dim()}},
              {"n_generators", m.generators()},
              {"entries", rows}};
}

Supermatrix matrix_from_json(const Json& j) {
  const auto& shape = j.at("shape");
  int p = shape.at(0).get<int>();
  int q = shape.at(1).get<int>();
  int n = j.at("n_generators").get<int>();
  const auto& rows = j.at("entries");
  std::vector<std::vector<GrassmannElement>> entries;
  for (const auto& row : rows) {
    std::vector<GrassmannElement> r;
    for (const auto& cell : row) r.push_back(element_from_json(n, cell));
    entries.push_back(std::move(r));
  }
  return Supermatrix::from_rows(p, q, std::move(entries));
}

namespace {

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string cayley_csv(const std::vector<std::string>& labels,
                       const std::vector<std::vector<std::string>>& cells) {
  std::ostringstream os;
  os << "*";
  for (const auto& l : labels) os << ',' << csv_quote(l);
  os << '\n';
  for (std::size_t i = 0; i < labels.size(); ++i) {
    os << csv_quote(labels[i]);
    for (const auto& cell : cells[i]) os << ',' << csv_quote(cell);
    os << '\n';
  }
  return os.str();
}

namespace {

std::vector<std::vector<std::string>> table_cells(const CayleyTable& table) {
  std::vector<std::vector<std::string>> cells;
  for (std::size_t i = 0; i < table.elems.size(); ++i) {
    std::vector<std::string> row;
    for (std::size_t j = 0; j < table.elems.size(); ++j) {
      int k = table.cell[i][j];
      row.push_back(k >= 0 ? table.labels[k]
                           : band_label(band_mul(table.elems[i], table.elems[j],
                                                 Canon::Canonical)));
    }
    cells.push_back(std::move(row));
  }
  return cells;
}

}  // namespace

std::string cayley_csv(const CayleyTable& table) {
  return cayley_csv(table.labels, table_cells(table));
}

Json cayley_json(const std::vector<std::string>& labels,
                 const std::vector<std::vector<std::string>>& cells,
                 bool closed) {
  return Json{{"elements", labels}, {"closed", closed}, {"cells", cells}};
}

Json cayley_json(const CayleyTable& table) {
  return cayley_json(table.labels, table_cells(table), table.closed);
}

Json eggbox_json(const EggboxDiagram& box,
                 const std::vector<std::string>& labels) {
  Json cells = Json::object();
  for (const auto& [tuple, members] : box.cells) {
    std::ostringstream key;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      if (i) key << ',';
      key << tuple[i];
    }
    Json names = Json::array();
    for (int e : members) names.push_back(labels.at(e));
    cells[key.str()] = std::move(names);
  }
  return Json{{"axes", box.axis_names},
              {"classes_per_axis", box.classes_per_axis},
              {"cells", cells}};
}

std::string eggbox_dot(const EggboxDiagram& box,
                       const std::vector<std::string>& labels,
                       const Partition& d_classes) {
  if (box.axis_names.size() != 2)
    throw DomainError("DOT export is defined for 2-D eggboxes");
  std::ostringstream os;
  os << "graph eggbox {\n  node [shape=box];\n";
  const int rows = box.classes_per_axis[0];
  const int cols = box.classes_per_axis[1];
  // every cell belongs to one D-class; cluster per class
  std::vector<std::vector<std::pair<int, int>>> by_class(d_classes.num_blocks());
  for (const auto& [tuple, members] : box.cells) {
    if (members.empty()) continue;
    by_class[d_classes.block_of(members[0])].emplace_back(tuple[0], tuple[1]);
  }
  auto node_name = [](int r, int c) {
    std::ostringstream n;
    n << "cell_" << r << "_" << c;
    return n.str();
  };
  for (std::size_t d = 0; d < by_class.size(); ++d) {
    os << "  subgraph cluster_d" << d << " {\n    label=\"D" << d << "\";\n";
    for (const auto& [r, c] : by_class[d]) {
      std::ostringstream text;
      const auto& members = box.cells.at({r, c});
      for (std::size_t i = 0; i < members.size(); ++i) {
        if (i) text << "\\n";
        text << labels.at(members[i]);
      }
      os << "    " << node_name(r, c) << " [label=\"" << text.str() << "\"];\n";
    }
    os << "  }\n";
  }
  // grid alignment: same rank per R-class row, invisible column edges
  for (int r = 0; r < rows; ++r) {
    os << "  { rank=same";
    for (int c = 0; c < cols; ++c)
      if (!box.cells.at({r, c}).empty()) os << "; " << node_name(r, c);
    os << "; }\n";
  }
  os << "  edge [style=invis];\n";
  for (int c = 0; c < cols; ++c) {
    std::vector<int> present;
    for (int r = 0; r < rows; ++r)
      if (!box.cells.at({r, c}).empty()) present.push_back(r);
    for (std::size_t i = 1; i < present.size(); ++i)
      os << "  " << node_name(present[i - 1], c) << " -- "
         << node_name(present[i], c) << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace superband
