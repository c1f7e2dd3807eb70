#pragma once

// Triangulations of the (n+1)-gon with vertices 0..n, the matching
// parenthesizations of n letters, and the gluings NA^{T,T'} and A^{T,T'}
// of two triangulations along the spine (resp. the circular spine).

#include <algorithm>
#include <cctype>
#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pgemb/hom.hpp"
#include "pgemb/model.hpp"
#include "pgemb/validate.hpp"

namespace pgemb {

struct Triple {
  int i = 0, j = 0, k = 0;

  friend auto operator<=>(Triple const&, Triple const&) = default;
};

inline Triple make_triple(int a, int b, int c) {
  int v[3] = {a, b, c};
  std::sort(v, v + 3);
  return {v[0], v[1], v[2]};
}

class Triangulation {
 public:
  Triangulation() = default;

  /// Throws InputError unless `triples` triangulate the (n+1)-gon.
  Triangulation(int n, std::vector<Triple> triples)
      : n_(n), triples_(std::move(triples)) {
    std::sort(triples_.begin(), triples_.end());
    check();
  }

  int n() const noexcept { return n_; }
  std::vector<Triple> const& triples() const noexcept { return triples_; }

  bool contains(Triple t) const {
    return std::binary_search(triples_.begin(), triples_.end(), t);
  }

  /// Chords (i, j), i < j, that are neither sides nor the long edge (0, n).
  std::vector<std::pair<int, int>> diagonals() const {
    std::set<std::pair<int, int>> d;
    for (auto const& t : triples_) {
      for (auto e : {std::pair{t.i, t.j}, std::pair{t.j, t.k}, std::pair{t.i, t.k}}) {
        if (is_diagonal(e.first, e.second)) {
          d.insert(e);
        }
      }
    }
    return {d.begin(), d.end()};
  }

  bool is_diagonal(int i, int j) const {
    return j - i >= 2 && !(i == 0 && j == n_);
  }

  std::string to_string() const {
    std::string s = "{";
    for (std::size_t x = 0; x < triples_.size(); ++x) {
      auto const& t = triples_[x];
      s += (x ? "," : "") + std::string("(") + std::to_string(t.i) + ","
           + std::to_string(t.j) + "," + std::to_string(t.k) + ")";
    }
    return s + "}";
  }

  friend bool operator==(Triangulation const&, Triangulation const&) = default;
  friend auto operator<=>(Triangulation const& a, Triangulation const& b) {
    if (a.n_ != b.n_) {
      return a.n_ <=> b.n_;
    }
    return a.triples_ <=> b.triples_;
  }

 private:
  void check() const {
    auto bad = [&](std::string const& why) {
      throw InputError("not a triangulation of the " + std::to_string(n_ + 1)
                       + "-gon: " + why);
    };
    if (n_ < 2) {
      bad("n must be at least 2");
    }
    if (static_cast<int>(triples_.size()) != n_ - 1) {
      bad("expected " + std::to_string(n_ - 1) + " triangles");
    }
    std::map<std::pair<int, int>, int> uses;
    for (std::size_t x = 0; x < triples_.size(); ++x) {
      auto const& t = triples_[x];
      if (t.i < 0 || t.k > n_ || !(t.i < t.j && t.j < t.k)) {
        bad("bad triple");
      }
      if (x > 0 && triples_[x - 1] == t) {
        bad("repeated triple");
      }
      ++uses[{t.i, t.j}];
      ++uses[{t.j, t.k}];
      ++uses[{t.i, t.k}];
    }
    std::vector<std::pair<int, int>> chords;
    for (auto const& [e, count] : uses) {
      bool side = e.second - e.first == 1 || (e.first == 0 && e.second == n_);
      if (count != (side ? 1 : 2)) {
        bad("chord (" + std::to_string(e.first) + "," + std::to_string(e.second)
            + ") used " + std::to_string(count) + " times");
      }
      if (!side) {
        chords.push_back(e);
      }
    }
    if (static_cast<int>(chords.size()) != n_ - 2) {
      bad("wrong number of diagonals");
    }
    for (auto [a, b] : chords) {
      for (auto [c, d] : chords) {
        if (a < c && c < b && b < d) {
          bad("crossing diagonals");
        }
      }
    }
  }

  int                 n_ = 0;
  std::vector<Triple> triples_;
};

/// All triangulations of the (n+1)-gon in increasing order.
inline std::vector<Triangulation> enumerate_triangulations(int n) {
  if (n < 2) {
    throw PreconditionError("enumerate_triangulations: n must be at least 2");
  }
  // Triangulations of the sub-polygon a..b, as triple lists.
  std::map<std::pair<int, int>, std::vector<std::vector<Triple>>> memo;
  std::function<std::vector<std::vector<Triple>> const&(int, int)> sub =
      [&](int a, int b) -> std::vector<std::vector<Triple>> const& {
    auto it = memo.find({a, b});
    if (it != memo.end()) {
      return it->second;
    }
    std::vector<std::vector<Triple>> out;
    if (b - a < 2) {
      out.emplace_back();
    } else {
      for (int m = a + 1; m < b; ++m) {
        for (auto const& l : sub(a, m)) {
          for (auto const& r : sub(m, b)) {
            std::vector<Triple> t = l;
            t.insert(t.end(), r.begin(), r.end());
            t.push_back({a, m, b});
            out.push_back(std::move(t));
          }
        }
      }
    }
    return memo.emplace(std::pair{a, b}, std::move(out)).first->second;
  };
  std::vector<Triangulation> result;
  for (auto const& t : sub(0, n)) {
    result.emplace_back(n, t);
  }
  std::sort(result.begin(), result.end());
  return result;
}

/// Parses a full binary parenthesization of leaves u1 u2 ... un, such as
/// "((u1u2)u3)". The node over leaves i..j split after leaf m is the
/// triangle (i-1, m, j).
inline Triangulation from_parenthesization(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c != ' ' && c != '\t') {
      s += c;
    }
  }
  std::size_t pos = 0;
  int         leaves = 0;
  std::vector<Triple> triples;
  auto fail = [&](std::string const& why) -> void {
    throw InputError("parenthesization '" + std::string(text) + "': " + why);
  };
  // Returns the leaf range [first, last] of the parsed node.
  std::function<std::pair<int, int>()> node = [&]() -> std::pair<int, int> {
    if (pos >= s.size()) {
      fail("unexpected end");
    }
    if (s[pos] == '(') {
      ++pos;
      auto l = node();
      auto r = node();
      if (pos >= s.size() || s[pos] != ')') {
        fail("expected ')'");
      }
      ++pos;
      triples.push_back({l.first - 1, l.second, r.second});
      return {l.first, r.second};
    }
    std::size_t start = pos;
    while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) {
      ++pos;
    }
    std::size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      ++pos;
    }
    if (digits == start || pos == digits) {
      fail("expected a leaf such as u1");
    }
    int index = std::stoi(s.substr(digits, pos - digits));
    if (index != ++leaves) {
      fail("leaves must be numbered 1, 2, ... in order");
    }
    return {index, index};
  };
  auto root = node();
  if (pos != s.size()) {
    fail("trailing characters");
  }
  if (root.second < 2) {
    fail("need at least two leaves");
  }
  return Triangulation(root.second, std::move(triples));
}

inline std::string to_parenthesization(Triangulation const& t,
                                       std::string const&   letter = "u") {
  std::function<std::string(int, int)> rec = [&](int a, int b) {
    if (b - a == 1) {
      return letter + std::to_string(b);
    }
    for (int m = a + 1; m < b; ++m) {
      if (t.contains({a, m, b})) {
        return "(" + rec(a, m) + rec(m, b) + ")";
      }
    }
    throw Error("to_parenthesization: malformed triangulation");
  };
  return rec(0, t.n());
}

/// T' differs from T by a single flip.
inline bool flip_adjacent(Triangulation const& t, Triangulation const& u) {
  if (t.n() != u.n()) {
    throw PreconditionError("flip_adjacent: polygons differ");
  }
  auto a = t.diagonals(), b = u.diagonals();
  std::vector<std::pair<int, int>> diff;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(diff));
  return diff.size() == 2;
}

enum class PairClass { incompatible, compatible, well_behaved };

inline std::string_view to_string(PairClass c) {
  switch (c) {
    case PairClass::incompatible: return "incompatible";
    case PairClass::compatible: return "compatible";
    case PairClass::well_behaved: return "well-behaved";
  }
  return "unknown";
}

inline PairClass classify_pair(Triangulation const& t, Triangulation const& u) {
  if (t.n() != u.n()) {
    throw PreconditionError("classify_pair: polygons differ");
  }
  int const n      = t.n();
  auto      shared = [&](Triple x) { return t.contains(x) && u.contains(x); };
  for (int i = 1; i <= n - 1; ++i) {
    if (shared({i - 1, i, i + 1})) {
      return PairClass::incompatible;
    }
  }
  if (shared(make_triple(n - 1, n, 0)) || shared(make_triple(n, 0, 1))) {
    return PairClass::compatible;
  }
  return PairClass::well_behaved;
}

inline bool is_compatible(PairClass c) { return c != PairClass::incompatible; }

enum class SpineKind { plain, circular };
enum class Variant { na, a };

/// A gluing of H(T) and H(T') with its distinguished edges.
struct GluedModel {
  Model               model;
  Triangulation       t, t_prime;
  SpineKind           spine_kind = SpineKind::plain;
  std::vector<EdgeId> spine;  // s_1 .. s_n
  EdgeId              long_t       = no_edge;
  EdgeId              long_t_prime = no_edge;  // equal to long_t when circular

  /// The edge from vertex i to vertex j on the given side (0 for T, 1 for
  /// T'), if the gluing has one.
  std::optional<EdgeId> edge_between(int side, int i, int j) const;
};

namespace detail {

  inline std::string glued_edge_name(int n, SpineKind kind, int side, int i, int j) {
    if (j - i == 1) {
      return "s" + std::to_string(j);
    }
    std::string tag = side == 0 ? "T" : "T'";
    if (i == 0 && j == n) {
      return kind == SpineKind::circular ? "l" : "l" + tag;
    }
    if (n < 10) {
      return "d" + tag + "_" + std::to_string(i) + std::to_string(j);
    }
    return "d" + tag + "_" + std::to_string(i) + "_" + std::to_string(j);
  }

}  // namespace detail

inline std::optional<EdgeId> GluedModel::edge_between(int side, int i, int j) const {
  int const n = t.n();
  if (i < 0 || j < 0 || i > n || j > n) {
    return std::nullopt;
  }
  if (i == j) {
    return model.identity(*model.find_object(std::to_string(i)));
  }
  int a = std::min(i, j), b = std::max(i, j);
  auto const& tri = side == 0 ? t : t_prime;
  if (b - a >= 2 && !(a == 0 && b == n)) {
    auto d = tri.diagonals();
    if (!std::binary_search(d.begin(), d.end(), std::pair{a, b})) {
      return std::nullopt;
    }
  }
  auto e = model.find_edge(detail::glued_edge_name(n, spine_kind, side, a, b));
  if (!e) {
    return std::nullopt;
  }
  return i < j ? *e : model.inverse(*e);
}

/// The gluing without validation; the plain spine keeps two long edges,
/// the circular spine shares one.
inline GluedModel glue_raw(Triangulation const& t,
                           Triangulation const& u,
                           SpineKind            kind) {
  if (t.n() != u.n()) {
    throw PreconditionError("glue: polygons differ");
  }
  int const n = t.n();
  ModelBuilder b(Mode::symmetric);
  for (int v = 0; v <= n; ++v) {
    b.add_object(std::to_string(v));
  }
  std::set<std::string> added;
  auto edge = [&](int side, int i, int j) {
    auto name = detail::glued_edge_name(n, kind, side, i, j);
    if (added.insert(name).second) {
      b.add_edge(name, std::to_string(i), std::to_string(j));
    }
    return name;
  };
  for (int i = 1; i <= n; ++i) {
    edge(0, i - 1, i);
  }
  edge(0, 0, n);
  edge(1, 0, n);
  for (int side = 0; side < 2; ++side) {
    auto const& tri = side == 0 ? t : u;
    for (auto [i, j] : tri.diagonals()) {
      edge(side, i, j);
    }
    for (auto const& x : tri.triples()) {
      b.add_triangle(edge(side, x.i, x.j), edge(side, x.j, x.k),
                     edge(side, x.i, x.k));
    }
  }
  GluedModel g;
  g.model      = b.build(true);
  g.t          = t;
  g.t_prime    = u;
  g.spine_kind = kind;
  for (int i = 1; i <= n; ++i) {
    g.spine.push_back(g.model.edge_id("s" + std::to_string(i)));
  }
  g.long_t = g.model.edge_id(detail::glued_edge_name(n, kind, 0, 0, n));
  g.long_t_prime = g.model.edge_id(detail::glued_edge_name(n, kind, 1, 0, n));
  return g;
}

/// NA^{T,T'} needs a compatible pair, A^{T,T'} a well-behaved one.
inline GluedModel build_glued(Triangulation const& t,
                              Triangulation const& u,
                              Variant              variant) {
  auto c = classify_pair(t, u);
  if (variant == Variant::na && c == PairClass::incompatible) {
    throw PreconditionError("NA needs a compatible pair");
  }
  if (variant == Variant::a && c != PairClass::well_behaved) {
    throw PreconditionError("A needs a well-behaved pair");
  }
  auto g = glue_raw(t, u, variant == Variant::na ? SpineKind::plain
                                                 : SpineKind::circular);
  require_valid(g.model, "gluing");
  return g;
}

struct PeelResult {
  Triangulation s, s_prime;
  GluedModel    glued;  // NA^{S,S'}
  Hom           hom;    // NA^{S,S'} -> X
  /// Deleted vertex at each step, as 'n' (last vertex) or '0'.
  std::string deleted;
};

/// Deletes a shared wrap triangle from a compatible pair until the pair is
/// well-behaved, restricting a hom NA^{T,T'} -> X along the inclusions.
inline PeelResult peel(Triangulation const& t,
                       Triangulation const& u,
                       Model const&         x,
                       Hom const&           hom) {
  auto c = classify_pair(t, u);
  if (c != PairClass::compatible) {
    throw PreconditionError(
        "peel: needs a compatible pair that is not well-behaved");
  }
  PeelResult r;
  r.s       = t;
  r.s_prime = u;
  r.glued   = build_glued(t, u, Variant::na);
  r.hom     = hom;
  if (!is_hom(r.glued.model, x, hom)) {
    throw PreconditionError("peel: not a hom NA^{T,T'} -> X");
  }
  while (classify_pair(r.s, r.s_prime) == PairClass::compatible) {
    int const n = r.s.n();
    int       offset;
    Triple    drop;
    if (r.s.contains({0, n - 1, n}) && r.s_prime.contains({0, n - 1, n})) {
      offset = 0;
      drop   = {0, n - 1, n};
      r.deleted += 'n';
    } else {
      offset = 1;
      drop   = {0, 1, n};
      r.deleted += '0';
    }
    auto shrink = [&](Triangulation const& tri) {
      std::vector<Triple> kept;
      for (auto const& x3 : tri.triples()) {
        if (x3 != drop) {
          kept.push_back({x3.i - offset, x3.j - offset, x3.k - offset});
        }
      }
      return Triangulation(n - 1, kept);
    };
    auto s = shrink(r.s), s_prime = shrink(r.s_prime);
    if (!is_compatible(classify_pair(s, s_prime))) {
      throw Error("peel: pair became incompatible");
    }
    auto small = build_glued(s, s_prime, Variant::na);
    Hom  incl;
    for (int v = 0; v < n; ++v) {
      incl.vertex_map.push_back(0);
    }
    incl.edge_map.assign(small.model.num_edges(), no_edge);
    for (int v = 0; v < n; ++v) {
      auto from = *small.model.find_object(std::to_string(v));
      incl.vertex_map[from] = *r.glued.model.find_object(std::to_string(v + offset));
    }
    for (int side = 0; side < 2; ++side) {
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          if (auto e = small.edge_between(side, i, j)) {
            incl.edge_map[*e] =
                *r.glued.edge_between(side, i + offset, j + offset);
          }
        }
      }
    }
    r.hom     = compose(incl, r.hom);
    r.s       = std::move(s);
    r.s_prime = std::move(s_prime);
    r.glued   = std::move(small);
  }
  return r;
}

struct OrthogonalityViolation {
  Triangulation t, t_prime;
  GluedModel    glued;
  Hom           hom;
};

/// Searches well-behaved pairs with 3 <= n <= max_n for a hom NA^{T,T'} -> X
/// that separates the two long edges.
inline std::optional<OrthogonalityViolation> orthogonality_check(Model const& x,
                                                                 int max_n) {
  if (!x.symmetric()) {
    throw PreconditionError("orthogonality: model is not symmetric");
  }
  for (int n = 3; n <= max_n; ++n) {
    auto all = enumerate_triangulations(n);
    for (auto const& t : all) {
      for (auto const& u : all) {
        if (classify_pair(t, u) != PairClass::well_behaved) {
          continue;
        }
        auto g = build_glued(t, u, Variant::na);
        std::optional<OrthogonalityViolation> found;
        for_each_hom(g.model, x, [&](Hom const& h) {
          if (h.edge_map[g.long_t] != h.edge_map[g.long_t_prime]) {
            found = OrthogonalityViolation{t, u, g, h};
            return false;
          }
          return true;
        });
        if (found) {
          return found;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace pgemb
