#pragma once

// Bounded reflection into embeddable models, and the pregroup associativity
// probe.

#include <numeric>
#include <optional>
#include <vector>

#include "pgemb/hom.hpp"
#include "pgemb/model.hpp"
#include "pgemb/search.hpp"
#include "pgemb/validate.hpp"

namespace pgemb {

namespace detail {

  class UnionFind {
   public:
    explicit UnionFind(std::size_t n) : parent_(n) {
      std::iota(parent_.begin(), parent_.end(), 0u);
    }

    std::uint32_t find(std::uint32_t x) {
      while (parent_[x] != x) {
        parent_[x] = parent_[parent_[x]];
        x          = parent_[x];
      }
      return x;
    }

    // The smaller root survives, so roots are the least members.
    bool unite(std::uint32_t a, std::uint32_t b) {
      a = find(a);
      b = find(b);
      if (a == b) {
        return false;
      }
      if (b < a) {
        std::swap(a, b);
      }
      parent_[b] = a;
      return true;
    }

   private:
    std::vector<std::uint32_t> parent_;
  };

  // Extends the merges in `uf` until the quotient is spiny and compatible
  // with the involution. Edge pairs whose spines become equal force their
  // products together.
  inline void saturate(Model const& m, UnionFind& uf) {
    auto const n       = m.num_edges();
    bool       changed = true;
    while (changed) {
      changed = false;
      if (m.symmetric()) {
        for (EdgeId e = 0; e < n; ++e) {
          changed |= uf.unite(m.inverse(e), m.inverse(uf.find(e)));
        }
      }
      // (class f, class g) -> class of a product
      std::vector<EdgeId> seen(n * n, no_edge);
      for (EdgeId f = 0; f < n; ++f) {
        for (EdgeId g = 0; g < n; ++g) {
          auto p = m.product(f, g);
          if (!p) {
            continue;
          }
          auto& slot = seen[uf.find(f) * n + uf.find(g)];
          if (slot == no_edge) {
            slot = *p;
          } else {
            changed |= uf.unite(slot, *p);
          }
        }
      }
    }
  }

  // The quotient of m by the classes of uf (assumed saturated). Classes
  // are named after their least member, or become the identity when they
  // contain one.
  inline std::pair<Model, std::vector<EdgeId>> quotient(Model const& m,
                                                        UnionFind&   uf) {
    auto const  n = m.num_edges();
    std::vector<EdgeId> rep(n);
    std::vector<char>   has_identity(n, 0);
    for (EdgeId e = 0; e < n; ++e) {
      rep[e] = uf.find(e);
      if (m.is_identity(e)) {
        has_identity[rep[e]] = 1;
      }
    }
    auto class_name = [&](EdgeId e) {
      EdgeId r = rep[e];
      return has_identity[r] ? m.name(m.identity(m.src(r))) : m.name(r);
    };

    ModelBuilder b(m.mode());
    for (auto const& o : m.objects()) {
      b.add_object(o);
    }
    for (EdgeId e = 0; e < n; ++e) {
      if (rep[e] != e || has_identity[e]) {
        continue;
      }
      auto const& src = m.object_name(m.src(e));
      auto const& tgt = m.object_name(m.tgt(e));
      if (!m.symmetric()) {
        b.add_edge(m.name(e), src, tgt);
        continue;
      }
      EdgeId inv = rep[m.inverse(e)];
      if (inv < e) {
        continue;
      }
      b.add_edge(m.name(e), src, tgt, m.name(inv));
    }
    Model tmp = b.build(false);
    std::vector<EdgeId> map(n);
    for (EdgeId e = 0; e < n; ++e) {
      map[e] = tmp.edge_id(class_name(e));
    }
    for (auto const& t : m.triangles()) {
      EdgeId f = map[t.f], g = map[t.g], h = map[t.h];
      if (tmp.degenerate_product(f, g)) {
        continue;
      }
      b.add_triangle(tmp.name(f), tmp.name(g), tmp.name(h));
    }
    return {b.build(true), std::move(map)};
  }

}  // namespace detail

struct ReflectResult {
  Model model;
  /// Image of each input edge in `model`.
  std::vector<EdgeId> edge_map;
  std::size_t         bound = 0;
  /// The result has no mean word up to the bound.
  bool        complete_at_bound = false;
  std::size_t rounds            = 0;
};

/// Identifies the values of every mean word up to max_len, closes the
/// identification under the model structure, and repeats until no mean
/// word remains.
inline ReflectResult reflect_bounded(Model const& m, std::size_t max_len) {
  if (!m.symmetric()) {
    throw PreconditionError("reflect: model is not symmetric");
  }
  require_valid(m, "reflect");
  ReflectResult r;
  r.model    = m;
  r.edge_map = identity_hom(m).edge_map;
  r.bound    = max_len;
  ScanOptions opts;
  opts.max_len     = max_len;
  opts.collect_all = true;
  while (true) {
    auto scan = mean_scan(r.model, opts);
    if (scan.kind_up_to_bound()) {
      r.complete_at_bound = true;
      return r;
    }
    detail::UnionFind uf(r.model.num_edges());
    for (auto const& group : scan.value_groups) {
      for (EdgeId e : group) {
        uf.unite(group.front(), e);
      }
    }
    detail::saturate(r.model, uf);
    auto [next, map] = detail::quotient(r.model, uf);
    require_valid(next, "reflect");
    for (auto& e : r.edge_map) {
      e = map[e];
    }
    r.model = std::move(next);
    ++r.rounds;
  }
}

struct PregroupViolation {
  EdgeId a, b, c;
  /// (ab)c and a(bc); at most one may be absent.
  std::optional<EdgeId> left, right;
};

/// First triple of non-identity edges, in name order, with ab and bc
/// defined where exactly one of (ab)c, a(bc) is defined or both are and
/// differ.
inline std::optional<PregroupViolation> pregroup_axiom_check(Model const& m) {
  for (EdgeId a = 0; a < m.num_edges(); ++a) {
    if (m.is_identity(a)) {
      continue;
    }
    for (EdgeId b : m.out_edges(m.tgt(a))) {
      auto ab = m.product(a, b);
      if (!ab) {
        continue;
      }
      for (EdgeId c : m.out_edges(m.tgt(b))) {
        auto bc = m.product(b, c);
        if (!bc) {
          continue;
        }
        auto left  = m.product(*ab, c);
        auto right = m.product(a, *bc);
        if ((left || right) && left != right) {
          return PregroupViolation{a, b, c, left, right};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace pgemb
