#pragma once

#include <functional>
#include <vector>

#include "pgemb/model.hpp"

namespace pgemb {

/// A structure-preserving map between models.
struct Hom {
  std::vector<ObjectId> vertex_map;
  std::vector<EdgeId>   edge_map;

  friend bool operator==(Hom const&, Hom const&) = default;
};

inline bool is_hom(Model const& source, Model const& target, Hom const& h) {
  if (h.vertex_map.size() != source.num_objects()
      || h.edge_map.size() != source.num_edges()) {
    return false;
  }
  for (EdgeId e = 0; e < source.num_edges(); ++e) {
    EdgeId t = h.edge_map[e];
    if (t >= target.num_edges()
        || target.src(t) != h.vertex_map[source.src(e)]
        || target.tgt(t) != h.vertex_map[source.tgt(e)]) {
      return false;
    }
    if (source.is_identity(e) && !target.is_identity(t)) {
      return false;
    }
    if (source.symmetric()
        && h.edge_map[source.inverse(e)] != target.inverse(t)) {
      return false;
    }
  }
  for (auto const& tri : source.triangles()) {
    auto p = target.product(h.edge_map[tri.f], h.edge_map[tri.g]);
    if (!p || *p != h.edge_map[tri.h]) {
      return false;
    }
  }
  return true;
}

/// second o first.
inline Hom compose(Hom const& first, Hom const& second) {
  Hom r;
  for (auto v : first.vertex_map) {
    r.vertex_map.push_back(second.vertex_map.at(v));
  }
  for (auto e : first.edge_map) {
    r.edge_map.push_back(second.edge_map.at(e));
  }
  return r;
}

inline Hom identity_hom(Model const& m) {
  Hom h;
  for (ObjectId o = 0; o < m.num_objects(); ++o) {
    h.vertex_map.push_back(o);
  }
  for (EdgeId e = 0; e < m.num_edges(); ++e) {
    h.edge_map.push_back(e);
  }
  return h;
}

/// Visits every hom source -> target in lexicographic order (vertex map
/// first, then edges by name). The visitor returns false to stop early.
/// A symmetric source needs a symmetric target.
inline void for_each_hom(Model const&                     source,
                         Model const&                     target,
                         std::function<bool(Hom const&)> const& visit) {
  if (source.symmetric() && !target.symmetric()) {
    throw PreconditionError(
        "hom search: symmetric source needs a symmetric target");
  }
  auto const nv = source.num_objects();
  auto const nt = target.num_objects();
  if (nv > 0 && nt == 0) {
    return;
  }

  // One representative per inverse pair; its partner follows.
  std::vector<EdgeId> reps;
  std::vector<int>    step_of(source.num_edges(), -1);
  for (EdgeId e = 0; e < source.num_edges(); ++e) {
    if (source.is_identity(e)) {
      continue;
    }
    if (source.symmetric() && source.inverse(e) < e) {
      step_of[e] = step_of[source.inverse(e)];
      continue;
    }
    step_of[e] = static_cast<int>(reps.size());
    reps.push_back(e);
  }
  // Each triangle is checked once its last edge has been assigned.
  std::vector<std::vector<Triangle>> checks(reps.size() + 1);
  for (auto const& t : source.triangles()) {
    int s = std::max({step_of[t.f], step_of[t.g], step_of[t.h]});
    checks[static_cast<std::size_t>(s + 1)].push_back(t);
  }

  Hom h;
  h.vertex_map.assign(nv, 0);
  h.edge_map.assign(source.num_edges(), no_edge);
  bool stop = false;

  auto triangles_ok = [&](std::vector<Triangle> const& ts) {
    for (auto const& t : ts) {
      auto p = target.product(h.edge_map[t.f], h.edge_map[t.g]);
      if (!p || *p != h.edge_map[t.h]) {
        return false;
      }
    }
    return true;
  };

  std::function<void(std::size_t)> assign_edge = [&](std::size_t i) {
    if (stop) {
      return;
    }
    if (i == reps.size()) {
      stop = !visit(h);
      return;
    }
    EdgeId e       = reps[i];
    bool   selfinv = source.symmetric() && source.inverse(e) == e;
    for (EdgeId t : target.edges_between(h.vertex_map[source.src(e)],
                                         h.vertex_map[source.tgt(e)])) {
      if (selfinv && target.inverse(t) != t) {
        continue;
      }
      h.edge_map[e] = t;
      if (source.symmetric()) {
        h.edge_map[source.inverse(e)] = target.inverse(t);
      }
      if (triangles_ok(checks[i + 1])) {
        assign_edge(i + 1);
      }
      if (stop) {
        return;
      }
    }
  };

  std::function<void(ObjectId)> assign_vertex = [&](ObjectId v) {
    if (stop) {
      return;
    }
    if (v == nv) {
      for (ObjectId o = 0; o < nv; ++o) {
        h.edge_map[source.identity(o)] = target.identity(h.vertex_map[o]);
      }
      if (triangles_ok(checks[0])) {
        assign_edge(0);
      }
      return;
    }
    for (ObjectId t = 0; t < nt && !stop; ++t) {
      h.vertex_map[v] = t;
      assign_vertex(v + 1);
    }
  };
  assign_vertex(0);
}

inline std::vector<Hom> enumerate_homs(Model const& source,
                                       Model const& target) {
  std::vector<Hom> result;
  for_each_hom(source, target, [&](Hom const& h) {
    result.push_back(h);
    return true;
  });
  return result;
}

}  // namespace pgemb
