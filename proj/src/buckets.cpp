#include "gb/buckets.hpp"

#include <stdexcept>

namespace gb {

Buckets::Buckets(const std::vector<uint64_t>& priorities)
    : priority_(priorities), emitted_(priorities.size(), 0) {
  for (VertexId v = 0; v < priorities.size(); ++v) {
    if (priorities[v] == kNever) continue;
    ensure_bucket(priorities[v]);
    buckets_[priorities[v]].push_back(v);
    ++remaining_;
  }
}

void Buckets::ensure_bucket(uint64_t p) {
  if (p >= buckets_.size()) buckets_.resize(p + 1);
}

std::optional<Buckets::Bucket> Buckets::next_bucket() {
  while (remaining_ > 0 && cursor_ < buckets_.size()) {
    std::vector<VertexId> current;
    for (VertexId v : buckets_[cursor_]) {
      // skip stale entries left behind by priority moves
      if (emitted_[v] || priority_[v] != cursor_) continue;
      emitted_[v] = 1;
      current.push_back(v);
    }
    buckets_[cursor_].clear();
    if (!current.empty()) {
      // the cursor stays put: priority updates may refill this level
      remaining_ -= current.size();
      return Bucket{cursor_, std::move(current)};
    }
    buckets_[cursor_].shrink_to_fit();
    ++cursor_;
  }
  return std::nullopt;
}

void Buckets::update(VertexId v, uint64_t new_priority) {
  if (emitted_[v]) return;
  // priorities may move freely above the cursor; dropping below it would
  // mean re-peeling an already-closed level
  if (new_priority < cursor_)
    throw std::logic_error(
        "Buckets::update: priority below the current bucket");
  if (new_priority == priority_[v]) return;
  bool was_never = priority_[v] == kNever;
  priority_[v] = new_priority;
  if (new_priority == kNever) {
    if (!was_never) --remaining_;
    return;
  }
  ensure_bucket(new_priority);
  buckets_[new_priority].push_back(v);
  if (was_never) ++remaining_;
}

}  // namespace gb
