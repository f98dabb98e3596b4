#include "rees/hilbert/ideal_counter.hpp"

#include <algorithm>

namespace rees::hilbert {

using core::Exponents;
using core::MonomialIdeal;

namespace {

std::vector<int> canonical_key(const MonomialIdeal& ideal) {
  std::vector<int> key;
  key.reserve(1 + ideal.size() * static_cast<std::size_t>(ideal.nvars()));
  key.push_back(ideal.nvars());
  for (const auto& g : ideal.generators()) key.insert(key.end(), g.begin(), g.end());
  return key;
}

}  // namespace

std::size_t IdealCounter::MemoKeyHash::operator()(const MemoKey& k) const noexcept {
  std::size_t h = std::hash<const void*>{}(k.node);
  h ^= std::hash<long>{}(k.degree) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  h ^= std::hash<int>{}(k.free) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

IdealCounter& IdealCounter::shared() {
  static IdealCounter counter;
  return counter;
}

std::size_t IdealCounter::interned_ideals() const {
  std::size_t n = 0;
  for (auto& shard : intern_) {
    std::lock_guard lock(shard.mutex);
    n += shard.nodes.size();
  }
  return n;
}

void IdealCounter::clear() {
  for (auto& shard : memo_) {
    std::lock_guard lock(shard.mutex);
    shard.values.clear();
  }
  for (auto& shard : intern_) {
    std::lock_guard lock(shard.mutex);
    shard.nodes.clear();
  }
}

IdealCounter::NodePtr IdealCounter::intern(const MonomialIdeal& ideal) {
  auto key = canonical_key(ideal);
  auto& shard = intern_[core::ExponentsHash{}(key) % kShards];
  {
    std::lock_guard lock(shard.mutex);
    auto it = shard.nodes.find(key);
    if (it != shard.nodes.end()) return it->second;
  }
  // Built outside the lock; a concurrent builder of the same ideal produces an
  // equivalent node and the first insertion wins.
  NodePtr node = build(ideal);
  std::lock_guard lock(shard.mutex);
  return shard.nodes.emplace(std::move(key), std::move(node)).first->second;
}

IdealCounter::NodePtr IdealCounter::build(const MonomialIdeal& ideal) {
  auto node = std::make_shared<Node>();
  node->nvars = ideal.nvars();
  if (ideal.is_zero()) {
    node->kind = Node::Kind::Zero;
    return node;
  }
  if (ideal.is_unit()) {
    node->kind = Node::Kind::Unit;
    return node;
  }
  if (ideal.nvars() == 1) {
    node->kind = Node::Kind::Threshold;
    node->threshold = ideal.generators().front()[0];
    return node;
  }
  node->kind = Node::Kind::Split;
  std::vector<const Exponents*> by_first;
  for (const auto& g : ideal.generators()) by_first.push_back(&g);
  std::stable_sort(by_first.begin(), by_first.end(),
                   [](const Exponents* a, const Exponents* b) { return (*a)[0] < (*b)[0]; });
  const int top = (*by_first.back())[0];
  const int rest = ideal.nvars() - 1;
  std::vector<Exponents> current;
  std::size_t next = 0;
  for (int j = 0; j <= top; ++j) {
    bool grew = false;
    while (next < by_first.size() && (*by_first[next])[0] == j) {
      current.emplace_back(by_first[next]->begin() + 1, by_first[next]->end());
      ++next;
      grew = true;
    }
    if (grew || node->slices.empty()) {
      auto slice = MonomialIdeal::from_generators(rest, current);
      current = slice.generators();
      node->slices.push_back(intern(slice));
    } else {
      node->slices.push_back(node->slices.back());
    }
  }
  return node;
}

Integer IdealCounter::count_node(const Node& node, int free, long t) {
  if (t < 0) return 0;
  switch (node.kind) {
    case Node::Kind::Zero:
      return 0;
    case Node::Kind::Unit:
      return monomial_count(node.nvars + free, t);
    case Node::Kind::Threshold:
      return monomial_count(1 + free, t - node.threshold);
    case Node::Kind::Split:
      break;
  }
  const MemoKey key{&node, free, t};
  auto& shard = memo_[MemoKeyHash{}(key) % kShards];
  {
    std::lock_guard lock(shard.mutex);
    auto it = shard.values.find(key);
    if (it != shard.values.end()) return it->second;
  }
  Integer total = 0;
  const long top = static_cast<long>(node.slices.size()) - 1;
  for (long j = 0; j < top && j <= t; ++j) total += count_node(*node.slices[j], free, t - j);
  total += count_node(*node.slices.back(), free + 1, t - top);
  std::lock_guard lock(shard.mutex);
  shard.values.emplace(key, total);
  return total;
}

Integer IdealCounter::count(const MonomialIdeal& ideal, long t) {
  if (t < 0 || ideal.is_zero()) return 0;
  return count_node(*intern(ideal), 0, t);
}

Integer IdealCounter::count_up_to(const MonomialIdeal& ideal, long t) {
  if (t < 0 || ideal.is_zero()) return 0;
  return count_node(*intern(ideal), 1, t);
}

Integer count_ideal_degree(const MonomialIdeal& ideal, long t) {
  return IdealCounter::shared().count(ideal, t);
}

}  // namespace rees::hilbert
