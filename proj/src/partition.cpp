#include "superband/partition.hpp"

#include <map>
#include <numeric>

namespace superband {

Partition Partition::from_block_of(std::vector<int> raw) {
  Partition p;
  std::map<int, int> renumber;
  p.block_of_.reserve(raw.size());
  for (int b : raw) {
    auto [it, inserted] = renumber.emplace(b, static_cast<int>(p.blocks_.size()));
    if (inserted) p.blocks_.emplace_back();
    p.block_of_.push_back(it->second);
    p.blocks_[it->second].push_back(static_cast<int>(p.block_of_.size()) - 1);
  }
  return p;
}

Partition Partition::from_keys(const std::vector<std::string>& keys) {
  std::map<std::string, int> ids;
  std::vector<int> raw;
  raw.reserve(keys.size());
  for (const auto& k : keys)
    raw.push_back(ids.emplace(k, static_cast<int>(ids.size())).first->second);
  return from_block_of(std::move(raw));
}

Partition Partition::universal(int n) {
  return from_block_of(std::vector<int>(n, 0));
}

Partition Partition::equality(int n) {
  std::vector<int> raw(n);
  std::iota(raw.begin(), raw.end(), 0);
  return from_block_of(std::move(raw));
}

bool Partition::refines(const Partition& coarser) const {
  if (size() != coarser.size())
    throw DimensionError("partitions over different element lists");
  for (const auto& block : blocks_) {
    for (std::size_t i = 1; i < block.size(); ++i)
      if (!coarser.same_block(block[0], block[i])) return false;
  }
  return true;
}

Partition meet(const Partition& a, const Partition& b) {
  if (a.size() != b.size())
    throw DimensionError("partitions over different element lists");
  std::map<std::pair<int, int>, int> ids;
  std::vector<int> raw;
  raw.reserve(a.size());
  for (int i = 0; i < a.size(); ++i) {
    auto key = std::make_pair(a.block_of(i), b.block_of(i));
    raw.push_back(ids.emplace(key, static_cast<int>(ids.size())).first->second);
  }
  return Partition::from_block_of(std::move(raw));
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

Partition join(const Partition& a, const Partition& b) {
  if (a.size() != b.size())
    throw DimensionError("partitions over different element lists");
  UnionFind uf(a.size());
  for (const auto& block : a.blocks())
    for (std::size_t i = 1; i < block.size(); ++i) uf.unite(block[0], block[i]);
  for (const auto& block : b.blocks())
    for (std::size_t i = 1; i < block.size(); ++i) uf.unite(block[0], block[i]);
  std::vector<int> raw(a.size());
  for (int i = 0; i < a.size(); ++i) raw[i] = uf.find(i);
  return Partition::from_block_of(std::move(raw));
}

Partition restrict_to(const Partition& p, const std::vector<int>& subset) {
  std::vector<int> raw;
  raw.reserve(subset.size());
  for (int i : subset) raw.push_back(p.block_of(i));
  return Partition::from_block_of(std::move(raw));
}

Partition pullback(const Partition& p, const std::vector<int>& index_map) {
  std::vector<int> raw;
  raw.reserve(index_map.size());
  for (int i : index_map) raw.push_back(p.block_of(i));
  return Partition::from_block_of(std::move(raw));
}

}  // namespace superband
