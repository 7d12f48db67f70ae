#include "hskern/core_store.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include <absl/container/btree_set.h>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace hskern {

std::string_view to_string(Backend b) noexcept {
  switch (b) {
    case Backend::LazyTrie: return "lazy-trie";
    case Backend::ZeroTrie: return "zero-trie";
    case Backend::HashTable: return "hash";
    case Backend::BalancedTree: return "btree";
  }
  return "?";
}

Backend backend_from_string(std::string_view name) {
  for (Backend b : kAllBackends)
    if (to_string(b) == name) return b;
  throw std::invalid_argument("unknown backend '" + std::string(name) + "'");
}

bool UsedSet::contains(VertexId v) const noexcept {
  if (dense_) return (spill_[v / 32] >> (v % 32)) & 1u;
  if (size_ <= kInline) return std::find(inline_.begin(), inline_.begin() + size_, v) != inline_.begin() + size_;
  return std::binary_search(spill_.begin(), spill_.end(), v);
}

void UsedSet::insert(VertexId v, UsedMode mode, VertexId n) {
  if (mode == UsedMode::Dense) {
    if (!dense_) {
      spill_.assign(static_cast<std::size_t>(n) / 32 + 1, 0);
      dense_ = true;
    }
    std::uint32_t bit = 1u << (v % 32);
    if (!(spill_[v / 32] & bit)) {
      spill_[v / 32] |= bit;
      ++size_;
    }
    return;
  }
  if (contains(v)) return;
  if (size_ < kInline) {
    auto end = inline_.begin() + size_;
    auto pos = std::upper_bound(inline_.begin(), end, v);
    std::copy_backward(pos, end, end + 1);
    *pos = v;
  } else {
    if (size_ == kInline) spill_.assign(inline_.begin(), inline_.end());
    spill_.insert(std::upper_bound(spill_.begin(), spill_.end(), v), v);
  }
  ++size_;
}

std::vector<VertexId> UsedSet::members() const {
  if (!dense_) {
    if (size_ <= kInline) return {inline_.begin(), inline_.begin() + size_};
    return spill_;
  }
  std::vector<VertexId> out;
  for (std::size_t v = 0; v < spill_.size() * 32; ++v)
    if ((spill_[v / 32] >> (v % 32)) & 1u) out.push_back(static_cast<VertexId>(v));
  return out;
}

namespace detail {
namespace {

struct TrieCell {
  std::uint32_t child;   // node id, 0 = none
  std::uint32_t record;  // record slot, 0 = none
};

/// Trie whose inner nodes are arrays of n cells indexed by vertex id - 1.
/// The record of the empty key lives at the root.
class Trie : public KeyIndex {
 public:
  Trie(VertexId n, bool zeroed) : n_(n), zeroed_(zeroed) { new_node(); }

  std::uint32_t lookup(KeyView key) const override {
    if (key.empty()) return root_record_;
    std::uint32_t node = 1;
    for (std::size_t i = 0;; ++i) {
      const TrieCell& c = nodes_[node - 1][key[i] - 1];
      if (i + 1 == key.size()) return c.record;
      node = c.child;
      if (node == 0) return 0;
    }
  }

  void insert(KeyView key, std::uint32_t id) override {
    if (key.empty()) {
      root_record_ = id + 1;
      return;
    }
    std::uint32_t node = 1;
    for (std::size_t i = 0;; ++i) {
      TrieCell& c = nodes_[node - 1][key[i] - 1];
      if (i + 1 == key.size()) {
        c.record = id + 1;
        return;
      }
      if (c.child == 0) {
        // Only reachable on the zero-filled trie; the lazy trie has every
        // child along registered keys allocated at build time.
        std::uint32_t fresh = new_node();
        nodes_[node - 1][key[i] - 1].child = fresh;
      }
      node = nodes_[node - 1][key[i] - 1].child;
    }
  }

  /// Initializes exactly the cells on the paths of `sorted` (lexicographic),
  /// comparing each key with its predecessor to skip the shared prefix.
  void register_keys(const KeyList& sorted) {
    KeyView prev;
    bool first = true;
    for (std::size_t k = 0; k < sorted.size(); ++k) {
      KeyView key = sorted[k];
      if (!first && KeyLess{}(key, prev)) throw std::invalid_argument("lazy trie keys are not sorted");
      std::size_t shared = 0;
      if (!first)
        while (shared < key.size() && shared < prev.size() && key[shared] == prev[shared]) ++shared;
      first = false;
      prev = key;
      if (shared == key.size()) continue;  // repeated key

      std::uint32_t node = 1;
      for (std::size_t i = 0; i < key.size(); ++i) {
        if (key[i] < 1 || key[i] > n_) throw std::invalid_argument("lazy trie key outside 1..n");
        TrieCell* c = &nodes_[node - 1][key[i] - 1];
        if (i >= shared) {
          *c = TrieCell{0, 0};
          ++cells_;
        }
        if (i + 1 < key.size()) {
          if (c->child == 0) {
            std::uint32_t fresh = new_node();
            c = &nodes_[node - 1][key[i] - 1];
            c->child = fresh;
          }
          node = c->child;
        }
      }
    }
  }

  std::size_t cells_initialized() const noexcept override { return cells_; }

 private:
  std::uint32_t new_node() {
    if (zeroed_) {
      nodes_.push_back(std::make_unique<TrieCell[]>(n_));
      cells_ += n_;
    } else {
      nodes_.push_back(std::make_unique_for_overwrite<TrieCell[]>(n_));
    }
    return static_cast<std::uint32_t>(nodes_.size());
  }

  VertexId n_;
  bool zeroed_;
  std::uint32_t root_record_ = 0;
  std::vector<std::unique_ptr<TrieCell[]>> nodes_;
  std::size_t cells_ = 0;
};

// Comparators over record ids that resolve ids through the key arena, so
// containers hold 4-byte ids and lookups take plain KeyViews.
// Tree entries carry the key's leading ids packed big-endian into one word
// (0 pads short keys, so word order agrees with lexicographic order). Only
// ties fall back to the arena.
struct Packer {
  unsigned bits = 32;
  std::size_t fits = 2;

  explicit Packer(VertexId n) : bits(std::max(1u, static_cast<unsigned>(std::bit_width(n)))), fits(64 / bits) {}
  std::uint64_t operator()(KeyView k) const noexcept {
    std::uint64_t w = 0;
    for (std::size_t i = 0; i < fits; ++i) w = (w << bits) | (i < k.size() ? k[i] : 0);
    return w;
  }
};

struct TreeEntry {
  std::uint64_t packed;
  std::uint32_t id;
};

struct TreeProbe {
  std::uint64_t packed;
  KeyView key;
};

struct ArenaLess {
  using is_transparent = void;
  const KeyList* arena;
  KeyView view(const TreeEntry& e) const noexcept { return (*arena)[e.id]; }
  static KeyView view(const TreeProbe& p) noexcept { return p.key; }
  template <typename A, typename B>
  bool operator()(const A& a, const B& b) const noexcept {
    if (a.packed != b.packed) return a.packed < b.packed;
    return KeyLess{}(view(a), view(b));
  }
};

class TreeIndex : public KeyIndex {
 public:
  TreeIndex(const KeyList* arena, VertexId n) : pack_(n), set_(ArenaLess{arena}) {}
  std::uint32_t lookup(KeyView key) const override {
    auto it = set_.find(TreeProbe{pack_(key), key});
    return it == set_.end() ? 0 : it->id + 1;
  }
  void insert(KeyView key, std::uint32_t id) override { set_.insert(TreeEntry{pack_(key), id}); }

 private:
  Packer pack_;
  absl::btree_set<TreeEntry, ArenaLess> set_;
};

struct ArenaHash {
  using is_transparent = void;
  const KeyList* arena;
  std::size_t operator()(std::uint32_t id) const noexcept { return KeyHash{}((*arena)[id]); }
  std::size_t operator()(KeyView k) const noexcept { return KeyHash{}(k); }
};

struct ArenaEqual {
  using is_transparent = void;
  const KeyList* arena;
  KeyView view(std::uint32_t id) const noexcept { return (*arena)[id]; }
  static KeyView view(KeyView k) noexcept { return k; }
  template <typename A, typename B>
  bool operator()(const A& a, const B& b) const noexcept {
    return KeyEqual{}(view(a), view(b));
  }
};

template <typename SetType>
class SetIndex : public KeyIndex {
 public:
  using Set = SetType;
  explicit SetIndex(Set set) : set_(std::move(set)) {}
  std::uint32_t lookup(KeyView key) const override {
    auto it = set_.find(key);
    return it == set_.end() ? 0 : *it + 1;
  }
  void insert(KeyView, std::uint32_t id) override { set_.insert(id); }

 private:
  Set set_;
};

using HashIndex = SetIndex<std::unordered_set<std::uint32_t, ArenaHash, ArenaEqual>>;

}  // namespace
}  // namespace detail

CoreStore::CoreStore(Backend backend, VertexId n, UsedMode used)
    : backend_(backend), n_(n), used_mode_(used), keys_(std::make_unique<KeyList>()) {}
CoreStore::CoreStore(CoreStore&&) noexcept = default;
CoreStore& CoreStore::operator=(CoreStore&&) noexcept = default;
CoreStore::~CoreStore() = default;

CoreStore CoreStore::build(Backend backend, const KeyList& sorted_keys, VertexId n, UsedMode used) {
  CoreStore store(backend, n, used);
  switch (backend) {
    case Backend::LazyTrie: {
      auto trie = std::make_unique<detail::Trie>(n, false);
      trie->register_keys(sorted_keys);
      store.index_ = std::move(trie);
      store.registered_.reserve(sorted_keys.size(), 0);
      for (std::size_t i = 0; i < sorted_keys.size(); ++i)
        if (store.registered_.empty() || !KeyEqual{}(store.registered_[store.registered_.size() - 1], sorted_keys[i]))
          store.registered_.push_back(sorted_keys[i]);
      break;
    }
    case Backend::ZeroTrie: store.index_ = std::make_unique<detail::Trie>(n, true); break;
    case Backend::HashTable: {
      const KeyList* arena = store.keys_.get();
      store.index_ = std::make_unique<detail::HashIndex>(detail::HashIndex::Set(0, {arena}, {arena}));
      break;
    }
    case Backend::BalancedTree:
      store.index_ = std::make_unique<detail::TreeIndex>(store.keys_.get(), n);
      break;
  }
  return store;
}

bool CoreStore::is_registered(KeyView key) const {
  if (backend_ != Backend::LazyTrie) return true;
  std::size_t lo = 0, hi = registered_.size();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (KeyLess{}(registered_[mid], key))
      lo = mid + 1;
    else
      hi = mid;
  }
  return lo < registered_.size() && KeyEqual{}(registered_[lo], key);
}

void CoreStore::check_access(KeyView key) const {
  if constexpr (kContractChecks) {
    for (VertexId v : key)
      if (v < 1 || v > n_) throw std::logic_error("core key has a vertex outside 1..n");
    if (!is_registered(key)) throw std::logic_error("core key was not registered with the lazy trie");
  }
}

const CoreRecord* CoreStore::find(KeyView key) const {
  check_access(key);
  std::uint32_t s = index_->lookup(key);
  return s == 0 ? nullptr : &records_[s - 1];
}

CoreRecord* CoreStore::find_mutable(KeyView key) {
  check_access(key);
  std::uint32_t s = index_->lookup(key);
  return s == 0 ? nullptr : &records_[s - 1];
}

CoreRecord& CoreStore::at(KeyView key) {
  check_access(key);
  if (std::uint32_t s = index_->lookup(key)) return records_[s - 1];
  auto id = static_cast<std::uint32_t>(records_.size());
  keys_->push_back(key);
  index_->insert(key, id);
  CoreRecord& r = records_.emplace_back();
  r.index = id;
  return r;
}

void CoreStore::add_petal(CoreRecord& r, EdgeIndex edge) {
  petal_links_.emplace_back(edge, r.last_petal);
  r.last_petal = static_cast<std::uint32_t>(petal_links_.size());
}

std::vector<EdgeIndex> CoreStore::petal_edges(const CoreRecord& r) const {
  std::vector<EdgeIndex> out;
  for (std::uint32_t link = r.last_petal; link != 0; link = petal_links_[link - 1].second)
    out.push_back(petal_links_[link - 1].first);
  std::reverse(out.begin(), out.end());
  return out;
}

std::uint32_t CoreStore::petal_count(KeyView key) const {
  const CoreRecord* r = find(key);
  return r ? r->petals : 0;
}

void CoreStore::increment_petals(KeyView key) { ++at(key).petals; }

bool CoreStore::is_used(KeyView key, VertexId v) const {
  const CoreRecord* r = find(key);
  return r && r->used.contains(v);
}

void CoreStore::mark_used(KeyView key, VertexId v) { at(key).used.insert(v, used_mode_, n_); }

bool CoreStore::get_flag(KeyView key) const {
  const CoreRecord* r = find(key);
  return r && r->flag;
}

void CoreStore::set_flag(KeyView key) { at(key).flag = true; }

std::size_t CoreStore::cells_initialized() const noexcept { return index_ ? index_->cells_initialized() : 0; }

}  // namespace hskern
