#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <memory>
#include <string_view>
#include <utility>
#include <vector>

#include "hskern/key_list.hpp"
#include "hskern/types.hpp"

namespace hskern {

#ifdef HSKERN_CONTRACT_CHECKS
inline constexpr bool kContractChecks = true;
#else
inline constexpr bool kContractChecks = false;
#endif

/// Storage strategy for the per-core records.
enum class Backend {
  LazyTrie,      ///< trie over uninitialized node arrays, cells initialized only along registered keys
  ZeroTrie,      ///< trie over zero-filled node arrays, nodes created on first write
  HashTable,     ///< std::unordered_map keyed by the id sequence (hash_key)
  BalancedTree,  ///< std::map in lexicographic key order
};

std::string_view to_string(Backend b) noexcept;
/// Accepts the CLI spellings lazy-trie, zero-trie, hash, btree.
Backend backend_from_string(std::string_view name);
inline constexpr Backend kAllBackends[] = {Backend::LazyTrie, Backend::ZeroTrie, Backend::HashTable,
                                           Backend::BalancedTree};

/// How a record stores the vertices marked as used for its core.
enum class UsedMode {
  Sparse,  ///< sorted vector; at most d(k+1) entries under kernelization
  Dense,   ///< one bit per vertex of the universe
};

/// Set of vertices marked for one core. Up to four vertices live inline;
/// dense mode keeps a bitset over 0..n instead.
class UsedSet {
 public:
  bool contains(VertexId v) const noexcept;
  void insert(VertexId v, UsedMode mode, VertexId n);
  std::size_t size() const noexcept { return size_; }
  /// Marked vertices in ascending order.
  std::vector<VertexId> members() const;

 private:
  static constexpr std::size_t kInline = 4;
  std::array<VertexId, kInline> inline_{};
  std::vector<VertexId> spill_;  // sorted ids once size_ > kInline, or bit words when dense_
  std::uint32_t size_ = 0;
  bool dense_ = false;
};

struct CoreRecord {
  std::uint32_t index = 0;       ///< creation order within the store; the key is CoreStore::key(index)
  std::uint32_t petals = 0;
  std::uint32_t last_petal = 0;  ///< head of the petal chain, see CoreStore::petal_edges
  bool flag = false;
  UsedSet used;
};

namespace detail {

/// Maps a key to a record id. Keys live in the store's arena, where key i
/// belongs to record i.
class KeyIndex {
 public:
  virtual ~KeyIndex() = default;
  /// Record id + 1, or 0 when absent.
  virtual std::uint32_t lookup(KeyView key) const = 0;
  /// Adds the arena key `id`, which must be absent.
  virtual void insert(KeyView key, std::uint32_t id) = 0;
  virtual std::size_t cells_initialized() const noexcept { return 0; }
};

}  // namespace detail

/**
 * Associative store from cores (sorted vertex sets of length <= d) to
 * CoreRecords. All backends behave identically for registered keys; a key
 * that was never written reads as a zero record.
 *
 * The lazy trie only has valid cells along the keys passed to build(); any
 * other key is a contract violation. It is detected when built with
 * HSKERN_CONTRACT_CHECKS (std::logic_error), undefined otherwise. The other
 * backends ignore the key list.
 *
 * Single writer; concurrent readers only while no writer is active.
 */
class CoreStore {
 public:
  /// `sorted_keys` must be in lexicographic order for Backend::LazyTrie
  /// (std::invalid_argument otherwise); repeated keys are allowed.
  static CoreStore build(Backend backend, const KeyList& sorted_keys, VertexId n, UsedMode used = UsedMode::Sparse);

  CoreStore(CoreStore&&) noexcept;
  CoreStore& operator=(CoreStore&&) noexcept;
  ~CoreStore();

  Backend backend() const noexcept { return backend_; }
  VertexId vertex_count() const noexcept { return n_; }

  /// Always true for backends other than the lazy trie.
  bool is_registered(KeyView key) const;

  std::uint32_t petal_count(KeyView key) const;
  void increment_petals(KeyView key);
  bool is_used(KeyView key, VertexId v) const;
  void mark_used(KeyView key, VertexId v);
  bool get_flag(KeyView key) const;
  void set_flag(KeyView key);

  /// nullptr if nothing has been written for `key` yet.
  const CoreRecord* find(KeyView key) const;
  CoreRecord* find_mutable(KeyView key);
  /// The record for `key`, created zeroed on first access.
  CoreRecord& at(KeyView key);

  /// Records `edge` as the newest petal of `r`.
  void add_petal(CoreRecord& r, EdgeIndex edge);
  /// Petal edges of `r`, oldest first.
  std::vector<EdgeIndex> petal_edges(const CoreRecord& r) const;

  std::size_t record_count() const noexcept { return records_.size(); }
  const std::deque<CoreRecord>& records() const noexcept { return records_; }
  KeyView key(const CoreRecord& r) const noexcept { return (*keys_)[r.index]; }

  /// Trie cells written during build and later growth (0 for map backends).
  std::size_t cells_initialized() const noexcept;
  std::size_t registered_key_count() const noexcept { return registered_.size(); }

 private:
  CoreStore(Backend backend, VertexId n, UsedMode used);
  void check_access(KeyView key) const;

  Backend backend_;
  VertexId n_;
  UsedMode used_mode_;
  std::unique_ptr<detail::KeyIndex> index_;
  std::deque<CoreRecord> records_;
  std::unique_ptr<KeyList> keys_;  // heap-held so the index may point at it across moves
  std::vector<std::pair<EdgeIndex, std::uint32_t>> petal_links_;  // (edge, previous link + 1)
  KeyList registered_;
};

}  // namespace hskern
