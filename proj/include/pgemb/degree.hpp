#pragma once

// Starry words and the degree of 2-dimensional symmetric models.
//
// In a 2-dimensional model every simplex is the image phi^* y of a vertex,
// edge or triangle y, so a starry word (f_1, ..., f_n) with source p is a
// member exactly when some y has a vertex p' with all f_i among the edges
// of y leaving p' (its star at p').

#include <algorithm>
#include <optional>
#include <vector>

#include "pgemb/model.hpp"
#include "pgemb/polygon.hpp"
#include "pgemb/validate.hpp"

namespace pgemb {

struct StarryWord {
  ObjectId            source = 0;
  std::vector<EdgeId> legs;

  friend bool operator==(StarryWord const&, StarryWord const&) = default;
};

/// Stars of all simplices of a symmetric model, grouped by source object.
class StarOracle {
 public:
  explicit StarOracle(Model const& m) : model_(m), stars_(m.num_objects()) {
    if (!m.symmetric()) {
      throw PreconditionError("starry words need a symmetric model");
    }
    auto add = [&](std::vector<EdgeId> star) {
      std::sort(star.begin(), star.end());
      star.erase(std::unique(star.begin(), star.end()), star.end());
      stars_[m.src(star.front())].push_back(std::move(star));
    };
    for (ObjectId o = 0; o < m.num_objects(); ++o) {
      add({m.identity(o)});
    }
    for (EdgeId e = 0; e < m.num_edges(); ++e) {
      add({m.identity(m.src(e)), e});
    }
    for (auto const& t : m.triangles()) {
      add({m.identity(m.src(t.f)), t.f, t.h});
      add({m.identity(m.tgt(t.f)), m.inverse(t.f), t.g});
      add({m.identity(m.tgt(t.g)), m.inverse(t.h), m.inverse(t.g)});
    }
    for (auto& s : stars_) {
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
    }
  }

  Model const& model() const noexcept { return model_; }

  bool member(std::span<EdgeId const> legs) const {
    if (legs.empty()) {
      throw PreconditionError("starry word needs at least one leg");
    }
    ObjectId p = model_.src(legs.front());
    for (EdgeId e : legs) {
      if (model_.src(e) != p) {
        throw PreconditionError("starry word legs need a common source");
      }
    }
    std::vector<EdgeId> need(legs.begin(), legs.end());
    std::sort(need.begin(), need.end());
    need.erase(std::unique(need.begin(), need.end()), need.end());
    return std::any_of(stars_[p].begin(), stars_[p].end(), [&](auto const& s) {
      return std::includes(s.begin(), s.end(), need.begin(), need.end());
    });
  }

 private:
  Model const&                                  model_;
  std::vector<std::vector<std::vector<EdgeId>>> stars_;
};

inline bool starry_member(Model const& m, StarryWord const& w) {
  for (EdgeId e : w.legs) {
    if (m.src(e) != w.source) {
      throw PreconditionError("starry word legs need a common source");
    }
  }
  return StarOracle(m).member(w.legs);
}

/// A starry word (a, b, c) of distinct non-identity legs, in name order,
/// whose two-leg faces are members while the word is not.
inline std::optional<StarryWord> degree3_witness(StarOracle const& oracle) {
  auto const& m = oracle.model();
  for (ObjectId p = 0; p < m.num_objects(); ++p) {
    auto out = m.out_edges(p);
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (std::size_t j = i + 1; j < out.size(); ++j) {
        EdgeId ab[] = {out[i], out[j]};
        if (!oracle.member(ab)) {
          continue;
        }
        for (std::size_t k = j + 1; k < out.size(); ++k) {
          EdgeId ac[] = {out[i], out[k]}, bc[] = {out[j], out[k]};
          EdgeId abc[] = {out[i], out[j], out[k]};
          if (oracle.member(ac) && oracle.member(bc) && !oracle.member(abc)) {
            return StarryWord{p, {out[i], out[j], out[k]}};
          }
        }
      }
    }
  }
  return std::nullopt;
}

inline std::optional<StarryWord> degree3_witness(Model const& m) {
  return degree3_witness(StarOracle(m));
}

/// Triangles (i-1, i, k) and (i, i+1, k) of one triangulation whose ear
/// (i-1, i, i+1) lies in the other, for some 1 <= i <= n-1.
inline bool has_cone(Triangulation const& t, Triangulation const& u) {
  if (!is_compatible(classify_pair(t, u))) {
    throw PreconditionError("has_cone: pair is incompatible");
  }
  int const n    = t.n();
  auto      cone = [&](Triangulation const& a, Triangulation const& b) {
    for (int i = 1; i <= n - 1; ++i) {
      if (!b.contains({i - 1, i, i + 1})) {
        continue;
      }
      for (int k = 0; k <= n; ++k) {
        if (k >= i - 1 && k <= i + 1) {
          continue;
        }
        if (a.contains(make_triple(i - 1, i, k))
            && a.contains(make_triple(i, i + 1, k))) {
          return true;
        }
      }
    }
    return false;
  };
  return cone(t, u) || cone(u, t);
}

inline int degree_na(Triangulation const& t, Triangulation const& u) {
  return has_cone(t, u) ? 3 : 2;
}

struct DegreeResult {
  int                       degree = 1;
  std::optional<StarryWord> witness;
  /// For degree > 1: a starry pair that is not a member, or a triple of
  /// distinct non-identity legs (never a member in dimension 2) whose two
  /// faces through the last leg are members.
  std::optional<StarryWord> obstruction;
};

/// Degree of a valid symmetric model read as 2-dimensional. A violation of
/// the lower 2-Segal condition reduces to a starry pair outside X_2 or to
/// three distinct non-identity legs with (f_2, f_3) and (f_1, f_3) in X_2;
/// a violation of the lower 3-Segal condition reduces to a length-3
/// witness, since longer members have at most two distinct non-identity
/// legs.
inline DegreeResult degree_2dim(Model const& m) {
  if (!m.symmetric()) {
    throw PreconditionError("degree: model is not symmetric");
  }
  require_valid(m, "degree");
  StarOracle   oracle(m);
  DegreeResult r;
  for (ObjectId p = 0; p < m.num_objects() && !r.obstruction; ++p) {
    auto out = m.out_edges(p);
    for (std::size_t i = 0; i < out.size() && !r.obstruction; ++i) {
      for (std::size_t j = i + 1; j < out.size() && !r.obstruction; ++j) {
        EdgeId pair[] = {out[i], out[j]};
        if (!oracle.member(pair)) {
          r.obstruction = StarryWord{p, {out[i], out[j]}};
        }
      }
    }
  }
  for (ObjectId p = 0; p < m.num_objects() && !r.obstruction; ++p) {
    auto out = m.out_edges(p);
    if (out.size() >= 3) {
      r.obstruction = StarryWord{p, {out[0], out[1], out[2]}};
    }
  }
  if (!r.obstruction) {
    return r;
  }
  r.witness = degree3_witness(oracle);
  r.degree  = r.witness ? 3 : 2;
  return r;
}

}  // namespace pgemb
