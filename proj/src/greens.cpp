#include "superband/greens.hpp"

#include <algorithm>
#include <set>

namespace superband {

MulTable to_multable(const CayleyTable& table) {
  if (!table.closed)
    throw DomainError("Green's relations require a closed table");
  MulTable out;
  out.n = static_cast<int>(table.elems.size());
  out.cell = table.cell;
  return out;
}

namespace {

using IdealSet = std::vector<char>;

Partition partition_by_sets(const std::vector<IdealSet>& sets) {
  std::map<IdealSet, int> ids;
  std::vector<int> raw;
  raw.reserve(sets.size());
  for (const auto& s : sets)
    raw.push_back(ids.emplace(s, static_cast<int>(ids.size())).first->second);
  return Partition::from_block_of(std::move(raw));
}

}  // namespace

GreensClasses greens_classes(const MulTable& table) {
  const int n = table.n;
  for (const auto& row : table.cell)
    for (int v : row)
      if (v < 0 || v >= n) throw DomainError("table is not closed");

  std::vector<IdealSet> right(n, IdealSet(n, 0));
  std::vector<IdealSet> left(n, IdealSet(n, 0));
  std::vector<IdealSet> two(n, IdealSet(n, 0));
  for (int a = 0; a < n; ++a) {
    right[a][a] = left[a][a] = two[a][a] = 1;
    for (int x = 0; x < n; ++x) {
      right[a][table.cell[a][x]] = 1;
      left[a][table.cell[x][a]] = 1;
      two[a][table.cell[a][x]] = 1;
      two[a][table.cell[x][a]] = 1;
      for (int y = 0; y < n; ++y) two[a][table.cell[table.cell[x][a]][y]] = 1;
    }
  }

  GreensClasses g;
  g.r = partition_by_sets(right);
  g.l = partition_by_sets(left);
  g.h = meet(g.r, g.l);
  g.d = join(g.r, g.l);
  g.j = partition_by_sets(two);
  return g;
}

namespace {

const AlphaContext& common_ctx(const std::vector<BandElement>& elems) {
  if (elems.empty()) throw DomainError("empty element list");
  for (const auto& x : elems)
    if (!(x.ctx()->alpha() == elems[0].ctx()->alpha()))
      throw DomainError("elements over different alphas");
  return *elems[0].ctx();
}

}  // namespace

Partition delta_partition(const std::vector<BandElement>& elems, DeltaMode mode) {
  const AlphaContext& ctx = common_ctx(elems);
  const BandKind kind = elems[0].kind();
  const int arity = elems[0].arity();
  for (const auto& x : elems)
    if (x.kind() != kind || x.arity() != arity)
      throw DomainError("delta partition expects a homogeneous element list");
  switch (mode) {
    case DeltaMode::Single:
      if (kind != BandKind::P && kind != BandKind::Q && kind != BandKind::Y)
        throw DomainError("single mode expects p/q/y elements");
      break;
    case DeltaMode::Double:
      if (kind != BandKind::R)
        throw DomainError("double mode expects r elements");
      break;
    case DeltaMode::NPle:
      if (kind != BandKind::F && kind != BandKind::R)
        throw DomainError("n-ple mode expects f elements");
      break;
  }
  std::vector<std::string> keys;
  keys.reserve(elems.size());
  for (const auto& x : elems) {
    std::string key;
    for (const auto& t : x.t_params()) key += ctx.class_key(t) + "|";
    key += "/";
    for (const auto& u : x.u_params()) key += ctx.class_key(u) + "|";
    keys.push_back(std::move(key));
  }
  return Partition::from_keys(keys);
}

Partition fine_relation(const std::vector<BandElement>& elems, Side side, int k) {
  const AlphaContext& ctx = common_ctx(elems);
  std::vector<std::string> keys;
  keys.reserve(elems.size());
  for (const auto& x : elems) {
    auto [tv, uv] = x.normal_form();
    const auto& params = side == Side::R ? tv : uv;
    if (k < 1 || k > static_cast<int>(params.size()))
      throw DomainError("fine relation index out of range");
    keys.push_back(ctx.class_key(params[k - 1]));
  }
  return Partition::from_keys(keys);
}

EggboxDiagram make_eggbox(
    const std::vector<std::pair<std::string, Partition>>& axes) {
  if (axes.empty()) throw DomainError("eggbox needs at least one axis");
  EggboxDiagram out;
  const int n = axes[0].second.size();
  std::set<std::string> seen;
  for (const auto& [name, part] : axes) {
    if (part.size() != n)
      throw DimensionError("axis partitions over different element lists");
    if (!seen.insert(name).second)
      throw DomainError("duplicate eggbox axis: " + name);
    out.axis_names.push_back(name);
    out.classes_per_axis.push_back(part.num_blocks());
  }
  // complete grid
  std::vector<int> tuple(axes.size(), 0);
  for (;;) {
    out.cells.emplace(tuple, std::vector<int>{});
    std::size_t i = 0;
    for (; i < tuple.size(); ++i) {
      if (++tuple[i] < out.classes_per_axis[i]) break;
      tuple[i] = 0;
    }
    if (i == tuple.size()) break;
  }
  for (int e = 0; e < n; ++e) {
    std::vector<int> key;
    key.reserve(axes.size());
    for (const auto& [name, part] : axes) key.push_back(part.block_of(e));
    out.cells.at(key).push_back(e);
  }
  return out;
}

}  // namespace superband
