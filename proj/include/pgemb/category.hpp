#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pgemb/model.hpp"
#include "pgemb/validate.hpp"

namespace pgemb {

using MorphId = std::uint32_t;

inline constexpr MorphId no_morph = std::numeric_limits<MorphId>::max();

struct Morphism {
  std::string name;
  ObjectId    src      = 0;
  ObjectId    tgt      = 0;
  bool        identity = false;

  friend bool operator==(Morphism const&, Morphism const&) = default;
};

/// A finite category given by its full composition table. Instances come
/// out of CategoryBuilder and always satisfy the category axioms.
class FiniteCategory {
 public:
  std::span<std::string const> objects() const noexcept { return objects_; }
  std::span<Morphism const> morphisms() const noexcept { return morphisms_; }
  std::size_t num_objects() const noexcept { return objects_.size(); }
  std::size_t num_morphisms() const noexcept { return morphisms_.size(); }

  Morphism const& morphism(MorphId m) const { return morphisms_.at(m); }
  std::string const& name(MorphId m) const { return morphisms_.at(m).name; }
  ObjectId src(MorphId m) const { return morphisms_[m].src; }
  ObjectId tgt(MorphId m) const { return morphisms_[m].tgt; }
  bool is_identity(MorphId m) const { return morphisms_[m].identity; }
  MorphId identity(ObjectId o) const { return identities_.at(o); }

  /// f then g.
  bool composable(MorphId f, MorphId g) const { return tgt(f) == src(g); }

  /// g o f; requires tgt(f) == src(g).
  MorphId compose(MorphId g, MorphId f) const {
    if (!composable(f, g)) {
      throw PreconditionError("compose: " + name(g) + " o " + name(f)
                              + " is not defined");
    }
    return table_[f * morphisms_.size() + g];
  }

  bool is_groupoid() const noexcept { return groupoid_; }

  MorphId inverse(MorphId m) const {
    if (!groupoid_) {
      throw PreconditionError("inverse: category is not a groupoid");
    }
    return inverses_[m];
  }

  std::optional<MorphId> find(std::string_view name) const {
    auto it = std::lower_bound(
        morphisms_.begin(), morphisms_.end(), name,
        [](Morphism const& m, std::string_view n) { return m.name < n; });
    if (it != morphisms_.end() && it->name == name) {
      return static_cast<MorphId>(it - morphisms_.begin());
    }
    if (groupoid_ && name.size() > 1 && name.back() == '^') {
      if (auto base = find(name.substr(0, name.size() - 1))) {
        return inverses_[*base];
      }
    }
    return std::nullopt;
  }

  std::optional<ObjectId> find_object(std::string_view name) const {
    auto it = std::find(objects_.begin(), objects_.end(), name);
    if (it == objects_.end()) {
      return std::nullopt;
    }
    return static_cast<ObjectId>(it - objects_.begin());
  }

  friend bool operator==(FiniteCategory const& a, FiniteCategory const& b) {
    return a.objects_ == b.objects_ && a.morphisms_ == b.morphisms_
           && a.table_ == b.table_;
  }

 private:
  friend class CategoryBuilder;

  std::vector<std::string> objects_;
  std::vector<Morphism>    morphisms_;
  std::vector<MorphId>     identities_;
  std::vector<MorphId>     table_;  // table_[f * n + g] = g o f
  std::vector<MorphId>     inverses_;
  bool                     groupoid_ = false;
};

/// Assembles a FiniteCategory from objects, non-identity morphisms and
/// composites `h = g o f`. Composites with identities are implicit.
class CategoryBuilder {
 public:
  CategoryBuilder& add_object(std::string name) {
    objects_.push_back(std::move(name));
    return *this;
  }

  CategoryBuilder& add_morphism(std::string name,
                                std::string src,
                                std::string tgt) {
    morphisms_.push_back({std::move(name), std::move(src), std::move(tgt)});
    return *this;
  }

  /// Records h = g o f.
  CategoryBuilder& add_composite(std::string g, std::string f, std::string h) {
    composites_.push_back({std::move(g), std::move(f), std::move(h)});
    return *this;
  }

  /// Checks totality on composable pairs, the unit laws and associativity
  /// exhaustively; throws InputError on the first failure.
  FiniteCategory build() const {
    FiniteCategory c;
    c.objects_ = objects_;
    {
      auto sorted = objects_;
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (!detail::is_token(sorted[i])) {
          throw InputError("invalid object name '" + sorted[i] + "'");
        }
        if (i > 0 && sorted[i] == sorted[i - 1]) {
          throw InputError("duplicate object '" + sorted[i] + "'");
        }
      }
    }
    auto object = [&](std::string const& name) {
      if (auto o = c.find_object(name)) {
        return *o;
      }
      throw InputError("unknown object '" + name + "'");
    };
    for (auto const& o : objects_) {
      ObjectId id = object(o);
      c.morphisms_.push_back({detail::identity_name(o), id, id, true});
    }
    for (auto const& m : morphisms_) {
      if (!detail::is_edge_token(m.name)) {
        throw InputError("invalid morphism name '" + m.name + "'");
      }
      c.morphisms_.push_back({m.name, object(m.src), object(m.tgt), false});
    }
    std::sort(c.morphisms_.begin(), c.morphisms_.end(),
              [](auto const& a, auto const& b) { return a.name < b.name; });
    for (std::size_t i = 1; i < c.morphisms_.size(); ++i) {
      if (c.morphisms_[i].name == c.morphisms_[i - 1].name) {
        throw InputError("duplicate morphism '" + c.morphisms_[i].name + "'");
      }
    }
    auto const n = c.morphisms_.size();
    c.identities_.assign(c.objects_.size(), no_morph);
    for (MorphId m = 0; m < n; ++m) {
      if (c.morphisms_[m].identity) {
        c.identities_[c.morphisms_[m].src] = m;
      }
    }
    auto morph = [&](std::string const& name) {
      if (auto m = c.find(name)) {
        return *m;
      }
      throw InputError("unknown morphism '" + name + "'");
    };

    c.table_.assign(n * n, no_morph);
    for (MorphId f = 0; f < n; ++f) {
      for (MorphId g = 0; g < n; ++g) {
        if (!c.composable(f, g)) {
          continue;
        }
        if (c.is_identity(f)) {
          c.table_[f * n + g] = g;
        } else if (c.is_identity(g)) {
          c.table_[f * n + g] = f;
        }
      }
    }
    for (auto const& [gn, fn, hn] : composites_) {
      MorphId g = morph(gn), f = morph(fn), h = morph(hn);
      std::string label = gn + " o " + fn + " = " + hn;
      if (!c.composable(f, g)) {
        throw InputError("composite " + label + ": not composable");
      }
      if (c.src(h) != c.src(f) || c.tgt(h) != c.tgt(g)) {
        throw InputError("composite " + label + ": wrong endpoints");
      }
      auto& slot = c.table_[f * n + g];
      if (slot != no_morph && slot != h) {
        throw InputError("composite " + label + ": conflicts with "
                         + c.name(slot));
      }
      slot = h;
    }
    for (MorphId f = 0; f < n; ++f) {
      for (MorphId g = 0; g < n; ++g) {
        if (c.composable(f, g) && c.table_[f * n + g] == no_morph) {
          throw InputError("composition not total: " + c.name(g) + " o "
                           + c.name(f) + " is missing");
        }
      }
    }
    for (MorphId f = 0; f < n; ++f) {
      for (MorphId g = 0; g < n; ++g) {
        if (!c.composable(f, g)) {
          continue;
        }
        for (MorphId h = 0; h < n; ++h) {
          if (!c.composable(g, h)) {
            continue;
          }
          MorphId left  = c.compose(h, c.compose(g, f));
          MorphId right = c.compose(c.compose(h, g), f);
          if (left != right) {
            throw InputError("composition not associative at (" + c.name(h)
                             + ", " + c.name(g) + ", " + c.name(f) + ")");
          }
        }
      }
    }

    c.inverses_.assign(n, no_morph);
    c.groupoid_ = true;
    for (MorphId f = 0; f < n; ++f) {
      for (MorphId g = 0; g < n; ++g) {
        if (c.composable(f, g) && c.composable(g, f)
            && c.compose(g, f) == c.identity(c.src(f))
            && c.compose(f, g) == c.identity(c.tgt(f))) {
          c.inverses_[f] = g;
          break;
        }
      }
      if (c.inverses_[f] == no_morph) {
        c.groupoid_ = false;
      }
    }
    if (!c.groupoid_) {
      c.inverses_.clear();
    }
    return c;
  }

 private:
  struct NamedMorphism {
    std::string name, src, tgt;
  };
  struct Composite {
    std::string g, f, h;
  };

  std::vector<std::string>   objects_;
  std::vector<NamedMorphism> morphisms_;
  std::vector<Composite>     composites_;
};

/// The 2-truncated nerve: edges are morphisms, triangles are composable
/// non-identity pairs (f, g, g o f) that are not degenerate. Symmetric mode
/// requires a groupoid and uses its inverses as the edge involution.
inline Model nerve_truncation(FiniteCategory const& c, Mode mode) {
  if (mode == Mode::symmetric && !c.is_groupoid()) {
    throw PreconditionError(
        "nerve_truncation: symmetric mode requires a groupoid");
  }
  ModelBuilder b(mode);
  for (auto const& o : c.objects()) {
    b.add_object(o);
  }
  for (MorphId m = 0; m < c.num_morphisms(); ++m) {
    auto const& mor = c.morphism(m);
    if (mor.identity) {
      continue;
    }
    auto const& s = c.objects()[mor.src];
    auto const& t = c.objects()[mor.tgt];
    if (mode == Mode::symmetric) {
      MorphId inv = c.inverse(m);
      if (inv < m) {
        continue;
      }
      b.add_edge(mor.name, s, t, c.name(inv));
    } else {
      b.add_edge(mor.name, s, t);
    }
  }
  for (MorphId f = 0; f < c.num_morphisms(); ++f) {
    for (MorphId g = 0; g < c.num_morphisms(); ++g) {
      if (c.is_identity(f) || c.is_identity(g) || !c.composable(f, g)) {
        continue;
      }
      if (mode == Mode::symmetric && c.inverse(f) == g) {
        continue;
      }
      b.add_triangle(c.name(f), c.name(g), c.name(c.compose(g, f)));
    }
  }
  Model m = b.build(false);
  require_valid(m, "nerve_truncation");
  return m;
}

}  // namespace pgemb
