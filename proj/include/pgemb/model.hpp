#pragma once

// Two-truncated partial groupoids (spiny symmetric sets) and edgy simplicial
// sets: objects, edges with an involution, and nondegenerate triangles.

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pgemb {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (bad tokens, dangling references, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

using ObjectId = std::uint32_t;
using EdgeId   = std::uint32_t;

inline constexpr EdgeId no_edge = std::numeric_limits<EdgeId>::max();

enum class Mode { symmetric, simplicial };

inline std::string_view to_string(Mode m) {
  return m == Mode::symmetric ? "symmetric" : "simplicial";
}

struct Edge {
  std::string name;
  ObjectId    src      = 0;
  ObjectId    tgt      = 0;
  EdgeId      inverse  = no_edge;  // no_edge in simplicial mode
  bool        identity = false;

  friend bool operator==(Edge const&, Edge const&) = default;
};

/// A 2-simplex with spine (f, g) and long edge h, i.e. h = g o f.
struct Triangle {
  EdgeId f = no_edge;
  EdgeId g = no_edge;
  EdgeId h = no_edge;

  friend auto operator<=>(Triangle const&, Triangle const&) = default;
};

/// A composable sequence of edges.
using Word = std::vector<EdgeId>;

namespace detail {

  inline bool is_token_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')
           || (c >= '0' && c <= '9') || c == '_' || c == '\'';
  }

  inline bool is_token(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), is_token_char);
  }

  // A token optionally followed by inverse markers, e.g. "x" or "x^".
  inline bool is_edge_token(std::string_view s) {
    auto n = s.find_last_not_of('^');
    return n != std::string_view::npos && is_token(s.substr(0, n + 1));
  }

  inline std::string identity_name(std::string_view object) {
    return "1@" + std::string(object);
  }

}  // namespace detail

class ModelBuilder;

class Model {
 public:
  Model() = default;

  Mode mode() const noexcept { return mode_; }
  bool symmetric() const noexcept { return mode_ == Mode::symmetric; }

  std::size_t num_objects() const noexcept { return objects_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  std::span<std::string const> objects() const noexcept { return objects_; }
  std::string const& object_name(ObjectId o) const { return objects_.at(o); }

  std::span<Edge const> edges() const noexcept { return edges_; }
  Edge const& edge(EdgeId e) const { return edges_.at(e); }
  std::string const& name(EdgeId e) const { return edges_.at(e).name; }
  ObjectId src(EdgeId e) const { return edges_[e].src; }
  ObjectId tgt(EdgeId e) const { return edges_[e].tgt; }
  bool is_identity(EdgeId e) const { return edges_[e].identity; }
  EdgeId inverse(EdgeId e) const { return edges_[e].inverse; }
  EdgeId identity(ObjectId o) const { return identities_.at(o); }

  /// Stored (nondegenerate) triangles in sorted order.
  std::span<Triangle const> triangles() const noexcept { return triangles_; }

  std::optional<ObjectId> find_object(std::string_view name) const {
    auto it = std::lower_bound(objects_.begin(), objects_.end(), name);
    if (it == objects_.end() || *it != name) {
      return std::nullopt;
    }
    return static_cast<ObjectId>(it - objects_.begin());
  }

  /// Looks up an edge by name. Also resolves `x^` as the inverse of `x`
  /// in symmetric mode and `1@obj` as the identity at `obj`.
  std::optional<EdgeId> find_edge(std::string_view name) const {
    auto it = std::lower_bound(
        edges_.begin(), edges_.end(), name,
        [](Edge const& e, std::string_view n) { return e.name < n; });
    if (it != edges_.end() && it->name == name) {
      return static_cast<EdgeId>(it - edges_.begin());
    }
    if (name.starts_with("1@")) {
      if (auto o = find_object(name.substr(2))) {
        return identities_[*o];
      }
    }
    if (symmetric() && name.size() > 1 && name.back() == '^') {
      if (auto base = find_edge(name.substr(0, name.size() - 1))) {
        return inverse(*base);
      }
    }
    return std::nullopt;
  }

  EdgeId edge_id(std::string_view name) const {
    if (auto e = find_edge(name)) {
      return *e;
    }
    throw InputError("unknown edge '" + std::string(name) + "'");
  }

  /// Product read off the triangle table, degenerate products included.
  /// Endpoints are not checked; non-composable pairs have no product.
  std::optional<EdgeId> product(EdgeId f, EdgeId g) const {
    EdgeId h = products_[f * edges_.size() + g];
    if (h == no_edge) {
      return std::nullopt;
    }
    return h;
  }

  /// Pairs (f, g) whose product is h, in lexicographic order.
  std::span<std::pair<EdgeId, EdgeId> const> producers(EdgeId h) const {
    return producers_.at(h);
  }

  /// The product an implicit degenerate triangle assigns to (f, g), if any.
  std::optional<EdgeId> degenerate_product(EdgeId f, EdgeId g) const {
    if (tgt(f) != src(g)) {
      return std::nullopt;
    }
    if (is_identity(f)) {
      return g;
    }
    if (is_identity(g)) {
      return f;
    }
    if (symmetric() && inverse(f) == g) {
      return identity(src(f));
    }
    return std::nullopt;
  }

  /// Non-identity edges leaving `o`, in lexicographic order.
  std::span<EdgeId const> out_edges(ObjectId o) const { return out_.at(o); }

  /// Edges from `a` to `b` (identities included), lexicographic order.
  std::vector<EdgeId> edges_between(ObjectId a, ObjectId b) const {
    std::vector<EdgeId> result;
    if (a == b) {
      result.push_back(identity(a));
    }
    for (EdgeId e : out_[a]) {
      if (tgt(e) == b) {
        result.push_back(e);
      }
    }
    std::sort(result.begin(), result.end());
    return result;
  }

  /// The six triangles obtained from t by permuting its vertices. Only
  /// meaningful in symmetric mode.
  std::array<Triangle, 6> orbit(Triangle t) const {
    auto inv = [this](EdgeId e) { return inverse(e); };
    return {{{t.f, t.g, t.h},
             {t.g, inv(t.h), inv(t.f)},
             {inv(t.h), t.f, inv(t.g)},
             {inv(t.f), t.h, t.g},
             {t.h, inv(t.g), t.f},
             {inv(t.g), inv(t.f), inv(t.h)}}};
  }

  friend bool operator==(Model const& a, Model const& b) {
    return a.mode_ == b.mode_ && a.objects_ == b.objects_
           && a.edges_ == b.edges_ && a.triangles_ == b.triangles_;
  }

 private:
  friend class ModelBuilder;

  void index() {
    auto const n = edges_.size();
    identities_.assign(objects_.size(), no_edge);
    out_.assign(objects_.size(), {});
    for (EdgeId e = 0; e < n; ++e) {
      if (edges_[e].identity) {
        identities_[edges_[e].src] = e;
      } else {
        out_[edges_[e].src].push_back(e);
      }
    }
    products_.assign(n * n, no_edge);
    for (EdgeId f = 0; f < n; ++f) {
      for (EdgeId g = 0; g < n; ++g) {
        if (auto d = degenerate_product(f, g)) {
          products_[f * n + g] = *d;
        }
      }
    }
    for (auto const& t : triangles_) {
      if (t.f >= n || t.g >= n || t.h >= n || tgt(t.f) != src(t.g)) {
        continue;
      }
      auto& slot = products_[t.f * n + t.g];
      if (slot == no_edge) {
        slot = t.h;
      }
    }
    producers_.assign(n, {});
    for (EdgeId f = 0; f < n; ++f) {
      for (EdgeId g = 0; g < n; ++g) {
        if (EdgeId h = products_[f * n + g]; h != no_edge) {
          producers_[h].emplace_back(f, g);
        }
      }
    }
  }

  Mode                                              mode_ = Mode::symmetric;
  std::vector<std::string>                          objects_;
  std::vector<Edge>                                 edges_;
  std::vector<Triangle>                             triangles_;
  std::vector<EdgeId>                               identities_;
  std::vector<std::vector<EdgeId>>                  out_;
  std::vector<EdgeId>                               products_;
  std::vector<std::vector<std::pair<EdgeId, EdgeId>>> producers_;
};

/// Collects named objects, edges and triangles and produces a canonical
/// Model: objects and edges sorted by name, one identity `1@obj` per
/// object, and (optionally) triangles closed under the symmetric action.
class ModelBuilder {
 public:
  explicit ModelBuilder(Mode mode) : mode_(mode) {}

  ModelBuilder& add_object(std::string name) {
    objects_.push_back(std::move(name));
    return *this;
  }

  /// In symmetric mode the inverse is created as `name^`.
  ModelBuilder& add_edge(std::string name, std::string src, std::string tgt) {
    std::string inv = mode_ == Mode::symmetric ? name + "^" : std::string();
    edges_.push_back({std::move(name), std::move(src), std::move(tgt),
                      std::move(inv)});
    return *this;
  }

  /// Symmetric mode only: an edge with an explicitly named inverse. Passing
  /// `inverse == name` declares a self-inverse loop.
  ModelBuilder& add_edge(std::string name,
                         std::string src,
                         std::string tgt,
                         std::string inverse) {
    if (mode_ != Mode::symmetric) {
      throw InputError("edge '" + name
                       + "': inverses are only available in symmetric mode");
    }
    edges_.push_back(
        {std::move(name), std::move(src), std::move(tgt), std::move(inverse)});
    return *this;
  }

  ModelBuilder& add_triangle(std::string f, std::string g, std::string h) {
    triangles_.push_back({std::move(f), std::move(g), std::move(h)});
    return *this;
  }

  Model build(bool close_orbits = true) const {
    Model m;
    m.mode_    = mode_;
    m.objects_ = objects_;
    std::sort(m.objects_.begin(), m.objects_.end());
    for (std::size_t i = 0; i < m.objects_.size(); ++i) {
      if (!detail::is_token(m.objects_[i])) {
        throw InputError("invalid object name '" + m.objects_[i] + "'");
      }
      if (i > 0 && m.objects_[i] == m.objects_[i - 1]) {
        throw InputError("duplicate object '" + m.objects_[i] + "'");
      }
    }
    auto object = [&](std::string const& name) {
      if (auto o = m.find_object(name)) {
        return *o;
      }
      throw InputError("unknown object '" + name + "'");
    };

    struct Pending {
      Edge        edge;
      std::string inverse;
    };
    std::vector<Pending> pending;
    for (auto const& o : m.objects_) {
      ObjectId id = object(o);
      pending.push_back({{detail::identity_name(o), id, id, no_edge, true},
                         mode_ == Mode::symmetric ? detail::identity_name(o)
                                                  : std::string()});
    }
    for (auto const& e : edges_) {
      if (!detail::is_edge_token(e.name)) {
        throw InputError("invalid edge name '" + e.name + "'");
      }
      ObjectId s = object(e.src), t = object(e.tgt);
      pending.push_back({{e.name, s, t, no_edge, false}, e.inverse});
      if (mode_ == Mode::symmetric && e.inverse != e.name) {
        if (!detail::is_edge_token(e.inverse)) {
          throw InputError("invalid edge name '" + e.inverse + "'");
        }
        pending.push_back({{e.inverse, t, s, no_edge, false}, e.name});
      }
    }
    std::sort(pending.begin(), pending.end(), [](auto const& a, auto const& b) {
      return a.edge.name < b.edge.name;
    });
    for (std::size_t i = 1; i < pending.size(); ++i) {
      if (pending[i].edge.name == pending[i - 1].edge.name) {
        throw InputError("duplicate edge '" + pending[i].edge.name + "'");
      }
    }
    for (auto& p : pending) {
      m.edges_.push_back(p.edge);
    }
    // Resolve inverses by exact name, before the `x^` fallback applies.
    auto exact = [&](std::string const& name) -> EdgeId {
      auto it = std::lower_bound(
          m.edges_.begin(), m.edges_.end(), name,
          [](Edge const& e, std::string const& n) { return e.name < n; });
      if (it == m.edges_.end() || it->name != name) {
        throw InputError("unknown edge '" + name + "'");
      }
      return static_cast<EdgeId>(it - m.edges_.begin());
    };
    if (mode_ == Mode::symmetric) {
      for (std::size_t i = 0; i < pending.size(); ++i) {
        m.edges_[i].inverse = exact(pending[i].inverse);
      }
    }
    m.index();

    for (auto const& t : triangles_) {
      m.triangles_.push_back(
          {m.edge_id(t.f), m.edge_id(t.g), m.edge_id(t.h)});
    }
    if (close_orbits && mode_ == Mode::symmetric) {
      std::vector<Triangle> closed;
      for (auto const& t : m.triangles_) {
        closed.push_back(t);
        for (auto const& u : m.orbit(t)) {
          // Degenerate members of the orbit stay implicit when they agree
          // with the degenerate product; disagreements are kept so that
          // validation reports them.
          auto d = m.degenerate_product(u.f, u.g);
          if (d && *d == u.h) {
            continue;
          }
          closed.push_back(u);
        }
      }
      m.triangles_ = std::move(closed);
    }
    std::sort(m.triangles_.begin(), m.triangles_.end());
    m.triangles_.erase(std::unique(m.triangles_.begin(), m.triangles_.end()),
                       m.triangles_.end());
    m.index();
    return m;
  }

 private:
  struct NamedEdge {
    std::string name, src, tgt, inverse;
  };
  struct NamedTriangle {
    std::string f, g, h;
  };

  Mode                       mode_;
  std::vector<std::string>   objects_;
  std::vector<NamedEdge>     edges_;
  std::vector<NamedTriangle> triangles_;
};

/// Rebuilds `m` through a builder; handy for deriving variants of a model.
inline ModelBuilder to_builder(Model const& m, Mode mode) {
  ModelBuilder b(mode);
  for (auto const& o : m.objects()) {
    b.add_object(o);
  }
  for (EdgeId e = 0; e < m.num_edges(); ++e) {
    auto const& edge = m.edge(e);
    if (edge.identity) {
      continue;
    }
    if (mode == Mode::symmetric && m.symmetric()) {
      EdgeId inv = edge.inverse;
      if (inv < e) {
        continue;
      }
      b.add_edge(edge.name, m.object_name(edge.src), m.object_name(edge.tgt),
                 m.name(inv));
    } else {
      b.add_edge(edge.name, m.object_name(edge.src), m.object_name(edge.tgt));
    }
  }
  return b;
}

inline std::string triangle_string(Model const& m, Triangle t) {
  return "(" + m.name(t.f) + "," + m.name(t.g) + "," + m.name(t.h) + ")";
}

}  // namespace pgemb
