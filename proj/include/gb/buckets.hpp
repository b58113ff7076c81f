#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gb/types.hpp"

namespace gb {

// Monotone bucket queue keyed by per-vertex priority, for peeling-style
// algorithms. Extraction walks buckets in nondecreasing order; a vertex
// whose priority is raised reappears exactly once, in its final bucket.
// Entries are lazily invalidated, so raising a priority several times is
// cheap.
class Buckets {
 public:
  static constexpr uint64_t kNever = UINT64_MAX;

  explicit Buckets(const std::vector<uint64_t>& priorities);

  // Vertices of the next nonempty bucket, with its priority. nullopt once
  // everything has been emitted.
  struct Bucket {
    uint64_t priority;
    std::vector<VertexId> vertices;
  };
  std::optional<Bucket> next_bucket();

  // Raising only; lowering below the cursor would break monotone peeling.
  void update(VertexId v, uint64_t new_priority);

  uint64_t priority_of(VertexId v) const { return priority_[v]; }

 private:
  void ensure_bucket(uint64_t p);

  std::vector<uint64_t> priority_;
  std::vector<char> emitted_;
  std::vector<std::vector<VertexId>> buckets_;
  uint64_t cursor_ = 0;
  uint64_t remaining_ = 0;
};

}  // namespace gb
