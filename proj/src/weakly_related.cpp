#include "hskern/weakly_related.hpp"

namespace hskern {

namespace {

void subsets_of_size(EdgeView e, std::size_t next, std::size_t size, std::vector<VertexId>& prefix, KeyList& out) {
  if (prefix.size() == size) {
    out.push_back(prefix);
    return;
  }
  for (std::size_t j = next; j + (size - prefix.size()) <= e.size(); ++j) {
    prefix.push_back(e[j]);
    subsets_of_size(e, j + 1, size, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

KeyList cardinality_subsets(EdgeView e, std::size_t size) {
  KeyList out;
  if (size > e.size()) return out;
  std::vector<VertexId> prefix;
  subsets_of_size(e, 0, size, prefix, out);
  return out;
}

WeaklyRelatedResult weakly_related_set(const Hypergraph& h, Backend backend) {
  const std::size_t d = h.max_cardinality();
  const std::size_t core_size = d == 0 ? 0 : d - 1;

  KeyList registered;
  if (backend == Backend::LazyTrie) {
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
      EdgeView e = h.edge(i);
      KeyList cores = cardinality_subsets(e, core_size);
      for (std::size_t c = 0; c < cores.size(); ++c) registered.push_back(cores[c]);
      for (VertexId v : e) registered.push_back(KeyView(&v, 1));
    }
    registered = radix_sort_keys(registered, h.vertex_count());
  }

  WeaklyRelatedResult result{{}, CoreStore::build(backend, registered, h.vertex_count()), d};
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    EdgeView e = h.edge(i);
    KeyList cores = cardinality_subsets(e, core_size);
    bool free = true;
    for (std::size_t c = 0; c < cores.size() && free; ++c) free = !result.flags.get_flag(cores[c]);
    if (!free) continue;
    result.w.push_back(static_cast<EdgeIndex>(i));
    for (std::size_t c = 0; c < cores.size(); ++c) result.flags.set_flag(cores[c]);
    for (VertexId v : e) result.flags.set_flag(KeyView(&v, 1));
  }
  return result;
}

}  // namespace hskern
