#pragma once

// The reduction of a model to a single object, and the monoid M(C) of
// reduced jagged strings of a finite category C.
//
// Strings list morphisms in the order they are traversed: (f, g) with
// tgt(f) = src(g) rewrites to (g o f).

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pgemb/category.hpp"
#include "pgemb/model.hpp"
#include "pgemb/validate.hpp"

namespace pgemb {

struct ReducedModel {
  Model model;
  /// Image of each input edge.
  std::vector<EdgeId> edge_map;
};

/// Identifies all objects to a single object `pt`. Non-identity edges keep
/// their names and inverses; identities collapse to `1@pt`.
inline ReducedModel reduce_model(Model const& m) {
  require_valid(m, "reduce");
  std::string const pt = "pt";
  ModelBuilder      b(m.mode());
  b.add_object(pt);
  for (EdgeId e = 0; e < m.num_edges(); ++e) {
    if (m.is_identity(e)) {
      continue;
    }
    if (!m.symmetric()) {
      b.add_edge(m.name(e), pt, pt);
    } else if (m.inverse(e) >= e) {
      b.add_edge(m.name(e), pt, pt, m.name(m.inverse(e)));
    }
  }
  auto name = [&](EdgeId e) {
    return m.is_identity(e) ? detail::identity_name(pt) : m.name(e);
  };
  for (auto const& t : m.triangles()) {
    b.add_triangle(name(t.f), name(t.g), name(t.h));
  }
  ReducedModel r;
  r.model = b.build(true);
  for (EdgeId e = 0; e < m.num_edges(); ++e) {
    r.edge_map.push_back(r.model.edge_id(name(e)));
  }
  require_valid(r.model, "reduce");
  return r;
}

using RawString = std::vector<MorphId>;

/// A reduced jagged string: no identities, no composable neighbours.
struct NormalForm {
  FiniteCategory const* owner = nullptr;
  RawString             entries;

  friend bool operator==(NormalForm const& a, NormalForm const& b) {
    return a.owner == b.owner && a.entries == b.entries;
  }
};

struct RewriteStep {
  enum class Kind { compose, erase };

  Kind        kind;
  std::size_t pos;  // compose: the pair (pos, pos + 1); erase: the entry

  friend bool operator==(RewriteStep const&, RewriteStep const&) = default;
};

inline void require_string(FiniteCategory const& c, RawString const& s) {
  for (MorphId m : s) {
    if (m >= c.num_morphisms()) {
      throw PreconditionError("string has an entry outside the category");
    }
  }
}

/// Applicable steps by position; at equal positions composition first.
inline std::vector<RewriteStep> applicable_steps(FiniteCategory const& c,
                                                 RawString const&      s) {
  std::vector<RewriteStep> steps;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i + 1 < s.size() && c.composable(s[i], s[i + 1])) {
      steps.push_back({RewriteStep::Kind::compose, i});
    }
    if (c.is_identity(s[i])) {
      steps.push_back({RewriteStep::Kind::erase, i});
    }
  }
  return steps;
}

inline RawString apply_step(FiniteCategory const& c,
                            RawString             s,
                            RewriteStep           step) {
  auto const at = s.begin() + static_cast<std::ptrdiff_t>(step.pos);
  if (step.kind == RewriteStep::Kind::erase) {
    if (step.pos >= s.size() || !c.is_identity(s[step.pos])) {
      throw PreconditionError("erase step does not apply");
    }
    s.erase(at);
    return s;
  }
  if (step.pos + 1 >= s.size() || !c.composable(s[step.pos], s[step.pos + 1])) {
    throw PreconditionError("compose step does not apply");
  }
  s[step.pos] = c.compose(s[step.pos + 1], s[step.pos]);
  s.erase(at + 1);
  return s;
}

inline bool is_normal(FiniteCategory const& c, RawString const& s) {
  return applicable_steps(c, s).empty();
}

enum class Strategy { leftmost, random };

inline NormalForm normalize(FiniteCategory const& c,
                            RawString             s,
                            Strategy              strategy = Strategy::leftmost,
                            std::uint64_t         seed     = 0) {
  require_string(c, s);
  std::mt19937_64 rng(seed);
  while (true) {
    auto steps = applicable_steps(c, s);
    if (steps.empty()) {
      return {&c, std::move(s)};
    }
    std::size_t pick = 0;
    if (strategy == Strategy::random) {
      pick = std::uniform_int_distribution<std::size_t>(0, steps.size() - 1)(rng);
    }
    s = apply_step(c, std::move(s), steps[pick]);
  }
}

inline void require_same_owner(NormalForm const& x, NormalForm const& y) {
  if (x.owner == nullptr || x.owner != y.owner) {
    throw PreconditionError("normal forms belong to different categories");
  }
}

/// x . y: the normal form of y followed by x.
inline NormalForm monoid_mult(NormalForm const& x, NormalForm const& y) {
  require_same_owner(x, y);
  RawString s = y.entries;
  s.insert(s.end(), x.entries.begin(), x.entries.end());
  return normalize(*x.owner, std::move(s));
}

inline NormalForm monoid_inverse(NormalForm const& x) {
  if (x.owner == nullptr || !x.owner->is_groupoid()) {
    throw PreconditionError("monoid inverse needs a groupoid");
  }
  NormalForm r{x.owner, {}};
  for (auto it = x.entries.rbegin(); it != x.entries.rend(); ++it) {
    r.entries.push_back(x.owner->inverse(*it));
  }
  return r;
}

inline std::string format_string(FiniteCategory const& c, RawString const& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    out += (i ? "," : "") + c.name(s[i]);
  }
  return out + ")";
}

struct EmbedReport {
  /// Image of each morphism: () for identities, (f) otherwise.
  std::vector<NormalForm> image;
  /// Composable pairs (f, g) with rs(g o f) != (g) . (f).
  std::vector<std::pair<MorphId, MorphId>> non_functorial;
  /// Distinct non-identity morphisms with equal images.
  std::vector<std::pair<MorphId, MorphId>> collisions;

  bool ok() const noexcept { return non_functorial.empty() && collisions.empty(); }
};

/// Checks that f -> rs(f) is a functor C -> M(C), injective on
/// non-identity morphisms.
inline EmbedReport embed_check(FiniteCategory const& c) {
  EmbedReport r;
  for (MorphId f = 0; f < c.num_morphisms(); ++f) {
    r.image.push_back(normalize(c, {f}));
  }
  for (MorphId f = 0; f < c.num_morphisms(); ++f) {
    for (MorphId g = 0; g < c.num_morphisms(); ++g) {
      if (c.composable(f, g)
          && r.image[c.compose(g, f)] != monoid_mult(r.image[g], r.image[f])) {
        r.non_functorial.emplace_back(f, g);
      }
    }
  }
  for (MorphId f = 0; f < c.num_morphisms(); ++f) {
    for (MorphId g = f + 1; g < c.num_morphisms(); ++g) {
      if (!c.is_identity(f) && !c.is_identity(g) && r.image[f] == r.image[g]) {
        r.collisions.emplace_back(f, g);
      }
    }
  }
  return r;
}

}  // namespace pgemb
