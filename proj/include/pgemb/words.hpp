#pragma once

// The contraction calculus on composable words: single contractions, the
// set of full-contraction values, reachability, and the zigzag-to-mountain
// construction.

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pgemb/model.hpp"
#include "pgemb/validate.hpp"

namespace pgemb {

/// Sorted set of edges.
using EdgeSet = std::vector<EdgeId>;

inline bool composable(Model const& m, std::span<EdgeId const> w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (m.tgt(w[i]) != m.src(w[i + 1])) {
      return false;
    }
  }
  return true;
}

inline void require_word(Model const& m, std::span<EdgeId const> w) {
  if (w.empty()) {
    throw PreconditionError("word must be nonempty");
  }
  for (EdgeId e : w) {
    if (e >= m.num_edges()) {
      throw PreconditionError("word refers to an unknown edge");
    }
  }
  if (!composable(m, w)) {
    throw PreconditionError("word is not composable");
  }
}

inline std::string format_word(Model const& m, std::span<EdgeId const> w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    s += (i ? "," : "") + m.name(w[i]);
  }
  return s + ")";
}

/// Replaces the adjacent pair at positions (pos, pos + 1) by its product.
inline std::optional<Word> contract(Model const&            m,
                                    std::span<EdgeId const> w,
                                    std::size_t             pos) {
  require_word(m, w);
  if (pos + 1 >= w.size()) {
    throw PreconditionError("contract: position out of range");
  }
  auto p = m.product(w[pos], w[pos + 1]);
  if (!p) {
    return std::nullopt;
  }
  Word r(w.begin(), w.end());
  r[pos] = *p;
  r.erase(r.begin() + static_cast<std::ptrdiff_t>(pos) + 1);
  return r;
}

namespace detail {

  inline void insert_sorted(EdgeSet& s, EdgeId e) {
    auto it = std::lower_bound(s.begin(), s.end(), e);
    if (it == s.end() || *it != e) {
      s.insert(it, e);
    }
  }

  // table[i][j] holds the values of w[i..j].
  inline std::vector<std::vector<EdgeSet>> value_table(
      Model const& m, std::span<EdgeId const> w) {
    auto const n = w.size();
    std::vector<std::vector<EdgeSet>> v(n, std::vector<EdgeSet>(n));
    for (std::size_t i = 0; i < n; ++i) {
      v[i][i] = {w[i]};
    }
    for (std::size_t len = 2; len <= n; ++len) {
      for (std::size_t i = 0; i + len <= n; ++i) {
        auto const j   = i + len - 1;
        auto&      out = v[i][j];
        for (std::size_t k = i; k < j; ++k) {
          for (EdgeId x : v[i][k]) {
            for (EdgeId y : v[k + 1][j]) {
              if (auto p = m.product(x, y)) {
                insert_sorted(out, *p);
              }
            }
          }
        }
      }
    }
    return v;
  }

}  // namespace detail

/// All edges e with w ~>* e: the values of the full parenthesizations of w.
inline EdgeSet values(Model const& m, std::span<EdgeId const> w) {
  require_word(m, w);
  return detail::value_table(m, w)[0][w.size() - 1];
}

inline bool is_mean(Model const& m, std::span<EdgeId const> w) {
  return values(m, w).size() >= 2;
}

/// Whether `from` contracts to `to` in zero or more steps: `from` splits
/// into |to| consecutive blocks, block k having to[k] among its values.
inline bool reaches(Model const&            m,
                    std::span<EdgeId const> from,
                    std::span<EdgeId const> to) {
  require_word(m, from);
  require_word(m, to);
  if (to.size() > from.size()) {
    return false;
  }
  auto const table = detail::value_table(m, from);
  auto const n = from.size(), k = to.size();
  // ok[a][i]: the first i letters of `from` contract to the first a of `to`.
  std::vector<std::vector<char>> ok(k + 1, std::vector<char>(n + 1, 0));
  ok[0][0] = 1;
  for (std::size_t a = 1; a <= k; ++a) {
    for (std::size_t i = a; i <= n; ++i) {
      for (std::size_t start = a - 1; start < i && !ok[a][i]; ++start) {
        if (ok[a - 1][start]
            && std::binary_search(table[start][i - 1].begin(),
                                  table[start][i - 1].end(), to[a - 1])) {
          ok[a][i] = 1;
        }
      }
    }
  }
  return ok[k][n];
}

/// Reverses w and inverts each edge.
inline Word inverse_word(Model const& m, std::span<EdgeId const> w) {
  if (!m.symmetric()) {
    throw PreconditionError("inverse_word: model is not symmetric");
  }
  Word r;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    r.push_back(m.inverse(*it));
  }
  return r;
}

/// w_0 <~ w_1 ~> w_2 <~ w_3 ~> ... ~> w_{2n}: odd entries are peaks
/// contracting to both neighbours.
struct Zigzag {
  std::vector<Word> entries;

  std::size_t peaks() const { return entries.size() / 2; }
};

/// Throws PreconditionError naming the first contraction that fails.
inline void verify(Model const& m, Zigzag const& z) {
  if (z.entries.size() < 3 || z.entries.size() % 2 == 0) {
    throw PreconditionError("zigzag needs an odd number (>= 3) of entries");
  }
  for (std::size_t i = 1; i < z.entries.size(); i += 2) {
    auto const& peak = z.entries[i];
    for (std::size_t j : {i - 1, i + 1}) {
      if (!reaches(m, peak, z.entries[j])) {
        throw PreconditionError("zigzag: " + format_word(m, peak)
                                + " does not contract to "
                                + format_word(m, z.entries[j]));
      }
    }
  }
}

/// A single word contracting to both ends of a zigzag:
/// w_1 w_3^-1 w_5 ... w_{2n-1} for odd n and
/// w_1 w_3^-1 ... w_{2n-1}^-1 w_{2n} for even n.
inline Word mountain_from_zigzag(Model const& m, Zigzag const& z) {
  if (!m.symmetric()) {
    throw PreconditionError("mountain_from_zigzag: model is not symmetric");
  }
  verify(m, z);
  auto const n = z.peaks();
  Word       w;
  for (std::size_t k = 1; k <= n; ++k) {
    auto const& peak = z.entries[2 * k - 1];
    if (k % 2 == 1) {
      w.insert(w.end(), peak.begin(), peak.end());
    } else {
      auto inv = inverse_word(m, peak);
      w.insert(w.end(), inv.begin(), inv.end());
    }
  }
  if (n % 2 == 0) {
    auto const& last = z.entries.back();
    w.insert(w.end(), last.begin(), last.end());
  }
  if (!reaches(m, w, z.entries.front()) || !reaches(m, w, z.entries.back())) {
    throw Error("mountain_from_zigzag: postcondition failed for "
                + format_word(m, w));
  }
  return w;
}

}  // namespace pgemb
