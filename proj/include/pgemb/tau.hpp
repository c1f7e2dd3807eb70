#pragma once

// Generators and relations for the fundamental groupoid.

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pgemb/model.hpp"

namespace pgemb {

struct Letter {
  std::uint32_t generator = 0;
  bool          inverse   = false;

  friend bool operator==(Letter const&, Letter const&) = default;
  friend auto operator<=>(Letter const&, Letter const&) = default;
};

/// A free-group word in composition order: the rightmost letter acts first.
using FreeWord = std::vector<Letter>;

inline FreeWord free_reduce(FreeWord const& w) {
  FreeWord out;
  for (auto const& l : w) {
    if (!out.empty() && out.back().generator == l.generator
        && out.back().inverse != l.inverse) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

inline FreeWord free_inverse(FreeWord const& w) {
  FreeWord out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    out.push_back({it->generator, !it->inverse});
  }
  return out;
}

struct Presentation {
  /// Generator names, one per non-identity inverse pair.
  std::vector<std::string> generators;
  /// Relators, freely reduced; the relator of a triangle (f, g, h) is
  /// h^-1 g f.
  std::vector<FreeWord> relators;
  /// Letter for each edge of the model; nullopt for identities.
  std::vector<std::optional<Letter>> edge_letter;

  /// The image of a composable word (f_1, ..., f_n): f_n ... f_1.
  FreeWord image(std::span<EdgeId const> w) const {
    FreeWord out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      if (auto const& l = edge_letter.at(*it)) {
        out.push_back(*l);
      }
    }
    return free_reduce(out);
  }

  std::string format(FreeWord const& w) const {
    if (w.empty()) {
      return "1";
    }
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
      s += (i ? " " : "") + generators.at(w[i].generator)
           + (w[i].inverse ? "^-1" : "");
    }
    return s;
  }

  /// "<x, y | x x y^-1, ...>"
  std::string to_string() const {
    std::string s = "<";
    for (std::size_t i = 0; i < generators.size(); ++i) {
      s += (i ? ", " : "") + generators[i];
    }
    s += " | ";
    for (std::size_t i = 0; i < relators.size(); ++i) {
      s += (i ? ", " : "") + format(relators[i]);
    }
    return s + ">";
  }
};

/// One generator per non-identity edge pair (preferring the name without a
/// trailing `^`), one relator per orbit of stored triangles, and e e for
/// each self-inverse edge e. Relators are only freely reduced.
inline Presentation tau_presentation(Model const& m) {
  Presentation p;
  p.edge_letter.assign(m.num_edges(), std::nullopt);
  std::vector<EdgeId> involutions;
  for (EdgeId e = 0; e < m.num_edges(); ++e) {
    if (m.is_identity(e) || p.edge_letter[e]) {
      continue;
    }
    auto const gen = static_cast<std::uint32_t>(p.generators.size());
    if (!m.symmetric()) {
      p.generators.push_back(m.name(e));
      p.edge_letter[e] = Letter{gen, false};
      continue;
    }
    EdgeId inv = m.inverse(e);
    EdgeId chosen = e;
    if (inv != e && m.name(e).ends_with('^') && !m.name(inv).ends_with('^')) {
      chosen = inv;
    }
    p.generators.push_back(m.name(chosen));
    p.edge_letter[chosen] = Letter{gen, false};
    if (inv == e) {
      involutions.push_back(e);
    } else {
      p.edge_letter[m.inverse(chosen)] = Letter{gen, true};
    }
  }

  auto relator = [&](Triangle t) {
    FreeWord w;
    if (auto const& l = p.edge_letter[t.h]) {
      w.push_back({l->generator, !l->inverse});
    }
    for (EdgeId e : {t.g, t.f}) {
      if (auto const& l = p.edge_letter[e]) {
        w.push_back(*l);
      }
    }
    return free_reduce(w);
  };
  auto const stored = m.triangles();
  for (auto const& t : stored) {
    if (m.symmetric()) {
      bool is_rep = true;
      for (auto const& u : m.orbit(t)) {
        if (u < t && std::binary_search(stored.begin(), stored.end(), u)) {
          is_rep = false;
          break;
        }
      }
      if (!is_rep) {
        continue;
      }
    }
    p.relators.push_back(relator(t));
  }
  for (EdgeId e : involutions) {
    auto l = *p.edge_letter[e];
    p.relators.push_back({l, l});
  }
  return p;
}

}  // namespace pgemb
