#include "gb/batch.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "gb/rng.hpp"

namespace gb {

namespace {

uint64_t arc_key(Edge e) {
  return (static_cast<uint64_t>(e.src) << 32) | e.dst;
}

std::vector<PreparedBatch::Group> scan_groups(const std::vector<Edge>& arcs) {
  std::vector<PreparedBatch::Group> groups;
  for (size_t i = 0; i < arcs.size();) {
    size_t j = i;
    while (j < arcs.size() && arcs[j].src == arcs[i].src) ++j;
    groups.push_back({arcs[i].src, i, j});
    i = j;
  }
  return groups;
}

}  // namespace

PreparedBatch prepare(const EdgeBatch& batch, BatchForm form) {
  PreparedBatch pb;
  pb.form = form;

  if (form == BatchForm::GlobalSort) {
    pb.arcs.reserve(batch.updates.size());
    for (Edge e : batch.updates)
      if (e.src != e.dst) pb.arcs.push_back(e);
    std::sort(pb.arcs.begin(), pb.arcs.end());
    pb.arcs.erase(std::unique(pb.arcs.begin(), pb.arcs.end()), pb.arcs.end());
    pb.groups = scan_groups(pb.arcs);
    return pb;
  }

  // group by source in first-occurrence order, deduplicate inside groups
  std::vector<VertexId> source_order;
  std::unordered_map<VertexId, std::vector<VertexId>> by_source;
  std::unordered_set<uint64_t> seen;
  for (Edge e : batch.updates) {
    if (e.src == e.dst) continue;
    if (!seen.insert(arc_key(e)).second) continue;
    auto [it, fresh] = by_source.try_emplace(e.src);
    if (fresh) source_order.push_back(e.src);
    it->second.push_back(e.dst);
  }
  for (VertexId src : source_order) {
    auto& dsts = by_source[src];
    if (form == BatchForm::SemiSortLocalSort)
      std::sort(dsts.begin(), dsts.end());
    size_t begin = pb.arcs.size();
    for (VertexId dst : dsts) pb.arcs.push_back({src, dst});
    pb.groups.push_back({src, begin, pb.arcs.size()});
  }
  return pb;
}

void validate_prepared(const PreparedBatch& pb) {
  for (size_t g = 0; g < pb.groups.size(); ++g) {
    const auto& grp = pb.groups[g];
    if (grp.begin >= grp.end || grp.end > pb.arcs.size())
      throw config_error("prepared batch: bad group range");
    for (size_t i = grp.begin; i < grp.end; ++i) {
      if (pb.arcs[i].src != grp.src)
        throw config_error("prepared batch: group source mismatch");
      if (pb.arcs[i].src == pb.arcs[i].dst)
        throw config_error("prepared batch: self-loop survived preparation");
    }
    if (pb.form != BatchForm::SemiSort) {
      for (size_t i = grp.begin + 1; i < grp.end; ++i)
        if (pb.arcs[i].dst <= pb.arcs[i - 1].dst)
          throw config_error("prepared batch: destinations not sorted");
    }
    if (pb.form == BatchForm::GlobalSort && g > 0 &&
        pb.groups[g - 1].src >= grp.src)
      throw config_error("prepared batch: sources not globally sorted");
  }
  size_t covered = 0;
  for (const auto& grp : pb.groups) covered += grp.end - grp.begin;
  if (covered != pb.arcs.size())
    throw config_error("prepared batch: groups do not cover the arcs");
}

namespace {

// How much ordering each form guarantees; a batch can feed any container
// whose requirement is at most its own strength.
int form_strength(BatchForm f) {
  switch (f) {
    case BatchForm::SemiSort: return 0;
    case BatchForm::SemiSortLocalSort: return 1;
    case BatchForm::GlobalSort: return 2;
  }
  return 0;
}

uint64_t apply(GraphContainer& g, const PreparedBatch& pb, bool insert) {
  validate_prepared(pb);
  BatchForm want = g.preferred_batch_form();
  if (form_strength(pb.form) >= form_strength(want))
    return insert ? g.insert_sorted_batch(pb.arcs)
                  : g.delete_sorted_batch(pb.arcs);
  // weaker than the container wants: re-prepare at the required strength
  EdgeBatch raw{pb.arcs};
  PreparedBatch upgraded = prepare(raw, want);
  return insert ? g.insert_sorted_batch(upgraded.arcs)
                : g.delete_sorted_batch(upgraded.arcs);
}

}  // namespace

uint64_t apply_insert(GraphContainer& g, const PreparedBatch& pb) {
  return apply(g, pb, /*insert=*/true);
}

uint64_t apply_delete(GraphContainer& g, const PreparedBatch& pb) {
  return apply(g, pb, /*insert=*/false);
}

EdgeBatch generate_update_batch(const RmatParams& params, uint64_t size,
                                uint64_t seed) {
  if (size < 1) throw config_error("update batch size must be >= 1");
  EdgeBatch batch;
  batch.updates.reserve(2 * size);
  for (uint64_t i = 0; i < size; ++i) {
    VertexId u = 0, v = 0;
    for (uint64_t level = 0; level < params.log2_n; ++level) {
      double r = rng_double(seed, i, level);
      u <<= 1;
      v <<= 1;
      if (r < params.a) {
        // top-left quadrant
      } else if (r < params.a + params.b) {
        v |= 1;
      } else if (r < params.a + params.b + params.c) {
        u |= 1;
      } else {
        u |= 1;
        v |= 1;
      }
    }
    batch.updates.push_back({u, v});
    batch.updates.push_back({v, u});
  }
  return batch;
}

}  // namespace gb
