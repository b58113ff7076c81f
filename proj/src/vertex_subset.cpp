#include "gb/vertex_subset.hpp"

#include <algorithm>
#include <bit>

namespace gb {

VertexSubset::VertexSubset(uint64_t n, std::vector<VertexId> ids)
    : n_(n), repr_(Repr::Sparse), ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  if (!ids_.empty() && ids_.back() >= n_)
    throw std::out_of_range("VertexSubset: id out of range");
  cached_size_ = ids_.size();
}

VertexSubset::VertexSubset(uint64_t n, std::vector<uint64_t> bits, Repr tag)
    : n_(n), repr_(Repr::Dense), words_(std::move(bits)) {
  (void)tag;
  words_.resize((n + 63) / 64, 0);
  cached_size_ = 0;
  for (uint64_t w : words_) cached_size_ += std::popcount(w);
}

bool VertexSubset::contains(VertexId v) const {
  if (v >= n_) return false;
  if (repr_ == Repr::Dense)
    return (words_[v >> 6] >> (v & 63)) & 1;
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

VertexSubset VertexSubset::to_dense() const {
  if (repr_ == Repr::Dense) return *this;
  std::vector<uint64_t> words((n_ + 63) / 64, 0);
  for (VertexId v : ids_) words[v >> 6] |= uint64_t{1} << (v & 63);
  return VertexSubset(n_, std::move(words), Repr::Dense);
}

VertexSubset VertexSubset::to_sparse() const {
  if (repr_ == Repr::Sparse) return *this;
  std::vector<VertexId> ids;
  ids.reserve(cached_size_);
  for_each([&](VertexId v) { ids.push_back(v); });
  return VertexSubset(n_, std::move(ids));
}

}  // namespace gb
