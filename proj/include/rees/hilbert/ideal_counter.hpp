#pragma once

#include <array>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "rees/core/monomial_ideal.hpp"
#include "rees/core/rational.hpp"

namespace rees::hilbert {

// Counts monomials of a given degree inside a monomial ideal.
//
// Splitting on the first variable x: a monomial x^j * u lies in I iff u lies
// in the slice I_j = <g|_{x=0} : g_x <= j>. The slices grow with j and are
// constant from J = max_g g_x on, so
//
//   #I_t = sum_{j<J} #I_j,(t-j) + #(I_J with x kept free)_(t-J).
//
// Ideals are interned by canonical generator list and expanded into a DAG of
// slices once; counts are memoized per (node, free variables, degree).
// Thread-safe; insertions into the memo are idempotent.
class IdealCounter {
 public:
  IdealCounter() = default;
  IdealCounter(const IdealCounter&) = delete;
  IdealCounter& operator=(const IdealCounter&) = delete;

  // Number of monomials of degree t in I (0 for t < 0).
  Integer count(const core::MonomialIdeal& ideal, long t);
  // Number of monomials of degree <= t in I.
  Integer count_up_to(const core::MonomialIdeal& ideal, long t);

  std::size_t interned_ideals() const;
  void clear();

  static IdealCounter& shared();

 private:
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;

  struct Node {
    enum class Kind { Zero, Unit, Threshold, Split } kind;
    int nvars = 0;
    int threshold = 0;               // Threshold: single-variable ideal (y^threshold)
    std::vector<NodePtr> slices;     // Split: slices[0..J]
  };

  struct MemoKey {
    const Node* node;
    int free;
    long degree;
    bool operator==(const MemoKey&) const = default;
  };
  struct MemoKeyHash {
    std::size_t operator()(const MemoKey& k) const noexcept;
  };

  static constexpr std::size_t kShards = 16;

  NodePtr intern(const core::MonomialIdeal& ideal);
  NodePtr build(const core::MonomialIdeal& ideal);
  Integer count_node(const Node& node, int free, long t);

  struct InternShard {
    std::mutex mutex;
    std::unordered_map<std::vector<int>, NodePtr, core::ExponentsHash> nodes;
  };
  struct MemoShard {
    std::mutex mutex;
    std::unordered_map<MemoKey, Integer, MemoKeyHash> values;
  };
  mutable std::array<InternShard, kShards> intern_;
  std::array<MemoShard, kShards> memo_;
};

Integer count_ideal_degree(const core::MonomialIdeal& ideal, long t);

}  // namespace rees::hilbert
