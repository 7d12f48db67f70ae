#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "hskern/types.hpp"

namespace hskern {

/// 64-bit finalizer of SplitMix64; used to hash id sequences.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Hash of a canonical id sequence: h0 = golden-ratio constant xor length,
/// then h = mix64(h + id) per id in order. Stable across platforms.
constexpr std::uint64_t hash_key(KeyView key) noexcept {
  std::uint64_t h = 0x9E3779B97F4A7C15ULL ^ key.size();
  for (VertexId v : key) h = mix64(h + v);
  return h;
}

/// Transparent hash/equality/ordering so containers keyed by CoreKey can be
/// probed with a KeyView without allocating.
struct KeyHash {
  using is_transparent = void;
  std::size_t operator()(KeyView k) const noexcept { return static_cast<std::size_t>(hash_key(k)); }
  std::size_t operator()(const CoreKey& k) const noexcept { return (*this)(KeyView{k}); }
};

struct KeyEqual {
  using is_transparent = void;
  bool operator()(KeyView a, KeyView b) const noexcept { return std::ranges::equal(a, b); }
};

/// Lexicographic order; a proper prefix sorts before its extensions.
struct KeyLess {
  using is_transparent = void;
  bool operator()(KeyView a, KeyView b) const noexcept {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

/**
 * A sequence of CoreKeys stored back to back. This is the list L of candidate
 * cores that is radix-sorted before a lazy trie is built over it.
 */
class KeyList {
 public:
  KeyList() = default;
  KeyList(std::initializer_list<std::initializer_list<VertexId>> keys);

  void push_back(KeyView key) {
    ids_.insert(ids_.end(), key.begin(), key.end());
    offsets_.push_back(ids_.size());
  }
  void clear() noexcept {
    ids_.clear();
    offsets_.assign(1, 0);
  }
  void reserve(std::size_t keys, std::size_t ids) {
    offsets_.reserve(keys + 1);
    ids_.reserve(ids);
  }

  std::size_t size() const noexcept { return offsets_.size() - 1; }
  bool empty() const noexcept { return size() == 0; }
  KeyView operator[](std::size_t i) const noexcept {
    return {ids_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }
  std::size_t max_length() const noexcept;

  std::vector<CoreKey> to_vector() const;

  /// Sorts lexicographically and drops repeated keys (comparison sort).
  void sort_unique();

  friend bool operator==(const KeyList& a, const KeyList& b) = default;

 private:
  std::vector<VertexId> ids_;
  std::vector<std::size_t> offsets_{0};
};

/// Stable LSD radix sort into lexicographic order (shorter prefix first) in
/// O(len * (n + |keys|)) time. Every id must lie in 1..n.
KeyList radix_sort_keys(const KeyList& keys, VertexId n);

/// All 2^|e| subsets of a sorted edge, each sorted, in lexicographic order.
KeyList enumerate_subsets(EdgeView e);

/// Appends the subsets of `e` to `out` in lexicographic order without
/// clearing it first.
void append_subsets(EdgeView e, KeyList& out);

}  // namespace hskern
