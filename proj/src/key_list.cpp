#include "hskern/key_list.hpp"

#include <numeric>
#include <stdexcept>

namespace hskern {

KeyList::KeyList(std::initializer_list<std::initializer_list<VertexId>> keys) {
  for (const auto& k : keys) {
    ids_.insert(ids_.end(), k.begin(), k.end());
    offsets_.push_back(ids_.size());
  }
}

std::size_t KeyList::max_length() const noexcept {
  std::size_t len = 0;
  for (std::size_t i = 0; i + 1 < offsets_.size(); ++i) len = std::max(len, offsets_[i + 1] - offsets_[i]);
  return len;
}

std::vector<CoreKey> KeyList::to_vector() const {
  std::vector<CoreKey> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.emplace_back((*this)[i].begin(), (*this)[i].end());
  return out;
}

void KeyList::sort_unique() {
  std::vector<std::size_t> order(size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [this](std::size_t a, std::size_t b) { return KeyLess{}((*this)[a], (*this)[b]); });
  KeyList out;
  out.reserve(size(), ids_.size());
  for (std::size_t i : order) {
    if (!out.empty() && KeyEqual{}(out[out.size() - 1], (*this)[i])) continue;
    out.push_back((*this)[i]);
  }
  *this = std::move(out);
}

KeyList radix_sort_keys(const KeyList& keys, VertexId n) {
  const std::size_t count = keys.size();
  const std::size_t width = keys.max_length();
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<std::size_t> scratch(count);
  // Symbol 0 pads short keys, so a prefix sorts before its extensions.
  std::vector<std::size_t> bucket(static_cast<std::size_t>(n) + 2);

  auto symbol = [&](std::size_t key, std::size_t pos) -> std::size_t {
    KeyView k = keys[key];
    return pos < k.size() ? k[pos] : 0;
  };

  for (std::size_t pos = width; pos-- > 0;) {
    std::fill(bucket.begin(), bucket.end(), 0);
    for (std::size_t i : order) {
      std::size_t s = symbol(i, pos);
      if (s > n) throw std::invalid_argument("radix_sort_keys: vertex id exceeds n");
      ++bucket[s + 1];
    }
    std::partial_sum(bucket.begin(), bucket.end(), bucket.begin());
    for (std::size_t i : order) scratch[bucket[symbol(i, pos)]++] = i;
    order.swap(scratch);
  }

  KeyList out;
  for (std::size_t i : order) out.push_back(keys[i]);
  return out;
}

namespace {

void subsets_from(EdgeView e, std::size_t next, std::vector<VertexId>& prefix, KeyList& out) {
  out.push_back(prefix);
  for (std::size_t j = next; j < e.size(); ++j) {
    prefix.push_back(e[j]);
    subsets_from(e, j + 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

void append_subsets(EdgeView e, KeyList& out) {
  std::vector<VertexId> prefix;
  prefix.reserve(e.size());
  subsets_from(e, 0, prefix, out);
}

KeyList enumerate_subsets(EdgeView e) {
  KeyList out;
  append_subsets(e, out);
  return out;
}

}  // namespace hskern
