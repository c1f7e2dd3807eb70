#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pgemb/model.hpp"

namespace pgemb {

struct Violation {
  enum class Kind {
    involution_fault,
    endpoint_mismatch,
    identity_component,
    stored_degenerate,
    spine_collision,
    orbit_gap,
  };

  Kind                  kind;
  std::string           detail;
  std::vector<Triangle> triangles;  // witnesses; for orbit gaps, the missing triple
};

inline std::string_view to_string(Violation::Kind k) {
  switch (k) {
    case Violation::Kind::involution_fault: return "involution-fault";
    case Violation::Kind::endpoint_mismatch: return "endpoint-mismatch";
    case Violation::Kind::identity_component: return "identity-component";
    case Violation::Kind::stored_degenerate: return "stored-degenerate";
    case Violation::Kind::spine_collision: return "spine-collision";
    case Violation::Kind::orbit_gap: return "orbit-gap";
  }
  return "unknown";
}

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }

  bool has(Violation::Kind k) const {
    return std::any_of(violations.begin(), violations.end(),
                       [k](Violation const& v) { return v.kind == k; });
  }
};

/// Thrown when an operation produces a model that is not spiny.
class SpininessError : public Error {
 public:
  SpininessError(std::string const& what, ValidationReport report)
      : Error(what), report_(std::move(report)) {}

  ValidationReport const& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

/// Checks the involution laws, triangle well-formedness, spininess (spines
/// determine triangles, including the implicit degenerate ones) and, in
/// symmetric mode, closure of the stored triangles under the symmetric
/// action.
inline ValidationReport validate(Model const& m) {
  using Kind = Violation::Kind;
  ValidationReport report;
  auto             add = [&](Kind k, std::string detail,
                 std::vector<Triangle> tris = {}) {
    report.violations.push_back({k, std::move(detail), std::move(tris)});
  };

  for (EdgeId e = 0; e < m.num_edges(); ++e) {
    auto const& edge = m.edge(e);
    if (!m.symmetric()) {
      if (edge.inverse != no_edge) {
        add(Kind::involution_fault,
            edge.name + " carries an inverse in simplicial mode");
      }
      continue;
    }
    EdgeId inv = edge.inverse;
    if (inv == no_edge || inv >= m.num_edges()) {
      add(Kind::involution_fault, edge.name + " has no inverse");
      continue;
    }
    if (m.inverse(inv) != e) {
      add(Kind::involution_fault, edge.name + ": inverse is not an involution");
    }
    if (m.src(inv) != edge.tgt || m.tgt(inv) != edge.src) {
      add(Kind::involution_fault,
          edge.name + ": inverse has mismatched endpoints");
    }
    if (edge.identity && inv != e) {
      add(Kind::involution_fault, edge.name + ": identity is not self-inverse");
    }
  }

  std::map<std::pair<EdgeId, EdgeId>, std::vector<Triangle>> by_spine;
  for (auto const& t : m.triangles()) {
    if (m.tgt(t.f) != m.src(t.g) || m.src(t.h) != m.src(t.f)
        || m.tgt(t.h) != m.tgt(t.g)) {
      add(Kind::endpoint_mismatch, triangle_string(m, t), {t});
      continue;
    }
    if (m.is_identity(t.f) || m.is_identity(t.g)) {
      auto d = m.degenerate_product(t.f, t.g);
      if (d && *d == t.h) {
        add(Kind::stored_degenerate, triangle_string(m, t), {t});
      } else {
        add(Kind::identity_component,
            triangle_string(m, t) + " collides with a degenerate triangle",
            {t});
      }
      continue;
    }
    if (auto d = m.degenerate_product(t.f, t.g)) {
      if (*d == t.h) {
        add(Kind::stored_degenerate, triangle_string(m, t), {t});
      } else {
        add(Kind::spine_collision,
            triangle_string(m, t) + " collides with a degenerate triangle",
            {t, {t.f, t.g, *d}});
      }
      continue;
    }
    by_spine[{t.f, t.g}].push_back(t);
  }
  for (auto const& [spine, tris] : by_spine) {
    if (tris.size() > 1) {
      std::string detail = "spine (" + m.name(spine.first) + ","
                           + m.name(spine.second) + ") has long edges";
      for (auto const& t : tris) {
        detail += " " + m.name(t.h);
      }
      add(Kind::spine_collision, detail, tris);
    }
  }

  if (m.symmetric()) {
    auto stored = m.triangles();
    for (auto const& t : stored) {
      if (m.tgt(t.f) != m.src(t.g) || m.is_identity(t.f) || m.is_identity(t.g)) {
        continue;
      }
      for (auto const& u : m.orbit(t)) {
        if (auto d = m.degenerate_product(u.f, u.g)) {
          if (*d != u.h) {
            add(Kind::spine_collision,
                triangle_string(m, u) + " (from " + triangle_string(m, t)
                    + ") collides with a degenerate triangle",
                {t, u});
          }
          continue;
        }
        if (!std::binary_search(stored.begin(), stored.end(), u)) {
          add(Kind::orbit_gap,
              triangle_string(m, u) + " missing from the orbit of "
                  + triangle_string(m, t),
              {u});
        }
      }
    }
  }
  return report;
}

/// Multiplication f then g (the product g o f), degenerate products
/// included.
inline std::optional<EdgeId> mult(Model const& m, EdgeId f, EdgeId g) {
  if (m.tgt(f) != m.src(g)) {
    throw PreconditionError("mult: " + m.name(f) + " and " + m.name(g)
                            + " are not composable");
  }
  return m.product(f, g);
}

inline void require_valid(Model const& m, std::string_view what) {
  auto report = validate(m);
  if (!report.ok()) {
    auto msg = std::string(what) + ": " + report.violations.front().detail;
    throw SpininessError(msg, std::move(report));
  }
}

/// Adds a fresh inverse `x^` for every non-identity edge of a simplicial
/// model and closes the triangles under the symmetric action.
inline Model symmetrize(Model const& m) {
  if (m.symmetric()) {
    throw PreconditionError("symmetrize: model is already symmetric");
  }
  auto b = to_builder(m, Mode::symmetric);
  for (auto const& t : m.triangles()) {
    b.add_triangle(m.name(t.f), m.name(t.g), m.name(t.h));
  }
  Model result = b.build(true);
  require_valid(result, "symmetrize");
  return result;
}

}  // namespace pgemb
