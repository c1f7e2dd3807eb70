#pragma once

// Fixture access, random instances, and brute-force oracles that share no
// code paths with the library routines they check.

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "pgemb/pgemb.hpp"

namespace support {

using namespace pgemb;

inline std::string fixture(std::string const& name) {
  return std::string(PGEMB_FIXTURE_DIR) + "/" + name;
}

inline Model load(std::string const& name) { return io::load_pgd(fixture(name)); }

inline FiniteCategory load_category(std::string const& name) {
  return io::load_cat(fixture(name));
}

inline Model z3_nerve() {
  return nerve_truncation(load_category("z3.cat"), Mode::symmetric);
}

inline Word word(Model const& m, std::string const& text) {
  return io::parse_word(m, text);
}

inline std::vector<std::string> pgd_fixtures() {
  return {"example1.pgd", "example2.pgd",  "horn.pgd",
          "free_z.pgd",   "na_square.pgd", "a_square.pgd",
          "na_pentagon.pgd"};
}

/// Loaded fixtures plus the symmetrizations of the simplicial ones and the
/// nerves of the category fixtures.
inline std::vector<std::pair<std::string, Model>> fixture_suite() {
  std::vector<std::pair<std::string, Model>> out;
  for (auto const& f : pgd_fixtures()) {
    Model m = load(f);
    out.emplace_back(f, m);
    if (!m.symmetric()) {
      out.emplace_back(f + "+sym", symmetrize(m));
    }
  }
  out.emplace_back("z3.cat", z3_nerve());
  out.emplace_back("interval.cat",
                   nerve_truncation(load_category("interval.cat"), Mode::symmetric));
  return out;
}

/// Every composable word of length len (identities included when asked).
inline void for_each_word(Model const&                      m,
                          std::size_t                       len,
                          bool                              identities,
                          std::function<void(Word const&)> const& visit) {
  Word w;
  std::function<void()> rec = [&] {
    if (w.size() == len) {
      visit(w);
      return;
    }
    for (EdgeId e = 0; e < m.num_edges(); ++e) {
      if (!identities && m.is_identity(e)) {
        continue;
      }
      if (!w.empty() && m.tgt(w.back()) != m.src(e)) {
        continue;
      }
      w.push_back(e);
      rec();
      w.pop_back();
    }
  };
  rec();
}

// ---- oracle: full contraction sequences --------------------------------

/// Values of w found by trying every sequence of single contractions,
/// reading products directly off the stored triangles and the degenerate
/// rules.
class BruteValues {
 public:
  explicit BruteValues(Model const& m) : m_(m) {
    for (auto const& t : m.triangles()) {
      table_[{t.f, t.g}] = t.h;
    }
  }

  std::optional<EdgeId> product(EdgeId f, EdgeId g) const {
    if (m_.tgt(f) != m_.src(g)) {
      return std::nullopt;
    }
    if (auto it = table_.find({f, g}); it != table_.end()) {
      return it->second;
    }
    if (m_.is_identity(f)) {
      return g;
    }
    if (m_.is_identity(g)) {
      return f;
    }
    if (m_.symmetric() && m_.inverse(f) == g) {
      return m_.identity(m_.src(f));
    }
    return std::nullopt;
  }

  std::set<EdgeId> const& values(Word const& w) {
    if (auto it = memo_.find(w); it != memo_.end()) {
      return it->second;
    }
    std::set<EdgeId> out;
    if (w.size() == 1) {
      out.insert(w[0]);
    } else {
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (auto p = product(w[i], w[i + 1])) {
          Word next = w;
          next[i]   = *p;
          next.erase(next.begin() + static_cast<std::ptrdiff_t>(i) + 1);
          auto const& sub = values(next);
          out.insert(sub.begin(), sub.end());
        }
      }
    }
    return memo_.emplace(w, std::move(out)).first->second;
  }

 private:
  Model const&                                 m_;
  std::map<std::pair<EdgeId, EdgeId>, EdgeId>  table_;
  std::map<Word, std::set<EdgeId>>             memo_;
};

// ---- oracle: triangulations as non-crossing diagonal sets --------------

inline std::size_t brute_triangulation_count(int n) {
  std::vector<std::pair<int, int>> chords;
  for (int i = 0; i <= n; ++i) {
    for (int j = i + 2; j <= n; ++j) {
      if (!(i == 0 && j == n)) {
        chords.emplace_back(i, j);
      }
    }
  }
  auto crosses = [](std::pair<int, int> a, std::pair<int, int> b) {
    return (a.first < b.first && b.first < a.second && a.second < b.second)
           || (b.first < a.first && a.first < b.second && b.second < a.second);
  };
  std::size_t count = 0;
  auto const  k     = chords.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    if (std::popcount(mask) != n - 2) {
      continue;
    }
    bool ok = true;
    for (std::size_t a = 0; a < k && ok; ++a) {
      for (std::size_t b = a + 1; b < k && ok; ++b) {
        if ((mask >> a & 1) && (mask >> b & 1) && crosses(chords[a], chords[b])) {
          ok = false;
        }
      }
    }
    count += ok;
  }
  return count;
}

// ---- oracle: starry membership by explicit phi^* y ---------------------

/// A simplex of dimension k <= 2 as its table of oriented edges.
struct Simplex {
  int                              k = 0;
  std::vector<std::vector<EdgeId>> edge;  // edge[p][q]
};

inline std::vector<Simplex> all_simplices(Model const& m) {
  std::vector<Simplex> out;
  for (ObjectId o = 0; o < m.num_objects(); ++o) {
    out.push_back({0, {{m.identity(o)}}});
  }
  auto tri = [&](EdgeId f, EdgeId g, EdgeId h) {
    EdgeId a = m.identity(m.src(f)), b = m.identity(m.tgt(f)),
           c = m.identity(m.tgt(g));
    out.push_back({2,
                   {{a, f, h},
                    {m.inverse(f), b, g},
                    {m.inverse(h), m.inverse(g), c}}});
  };
  for (EdgeId e = 0; e < m.num_edges(); ++e) {
    EdgeId a = m.identity(m.src(e)), b = m.identity(m.tgt(e));
    out.push_back({1, {{a, e}, {m.inverse(e), b}}});
    // degenerate triangles s_0 e, s_1 e and the swap degeneracy
    tri(a, e, e);
    tri(e, b, e);
    tri(e, m.inverse(e), a);
  }
  for (auto const& t : m.triangles()) {
    tri(t.f, t.g, t.h);
  }
  return out;
}

/// Is (f_1, ..., f_n) = (y(phi 0, phi 1), ..., y(phi 0, phi n)) for some
/// phi: [n] -> [k] and some simplex y?
inline bool phi_member(std::vector<Simplex> const& simplices,
                       std::vector<EdgeId> const&  legs) {
  auto const n = legs.size();
  for (auto const& y : simplices) {
    int const           k = y.k;
    std::vector<int>    phi(n + 1, 0);
    std::function<bool(std::size_t)> rec = [&](std::size_t i) {
      if (i == n + 1) {
        for (std::size_t j = 1; j <= n; ++j) {
          if (y.edge[phi[0]][phi[j]] != legs[j - 1]) {
            return false;
          }
        }
        return true;
      }
      for (int v = 0; v <= k; ++v) {
        phi[i] = v;
        if (i >= 1 && y.edge[phi[0]][v] != legs[i - 1]) {
          continue;
        }
        if (rec(i + 1)) {
          return true;
        }
      }
      return false;
    };
    if (rec(0)) {
      return true;
    }
  }
  return false;
}

// ---- random categories -------------------------------------------------

/// The groupoid G x (indiscrete groupoid on k objects) for a group G given
/// by a multiplication table mul[a][b] = a*b with identity 0.
inline FiniteCategory group_groupoid(std::vector<std::vector<int>> const& mul,
                                     int                                 k,
                                     std::string const&                  tag = "g") {
  int const       order = static_cast<int>(mul.size());
  CategoryBuilder b;
  auto obj  = [](int i) { return "o" + std::to_string(i); };
  auto name = [&](int g, int i, int j) {
    if (g == 0 && i == j) {
      return detail::identity_name(obj(i));
    }
    return tag + std::to_string(g) + "_" + std::to_string(i) + std::to_string(j);
  };
  for (int i = 0; i < k; ++i) {
    b.add_object(obj(i));
  }
  for (int g = 0; g < order; ++g) {
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        if (!(g == 0 && i == j)) {
          b.add_morphism(name(g, i, j), obj(i), obj(j));
        }
      }
    }
  }
  // (h, j -> l) o (g, i -> j) = (h g, i -> l)
  for (int g = 0; g < order; ++g) {
    for (int h = 0; h < order; ++h) {
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
          for (int l = 0; l < k; ++l) {
            if ((g == 0 && i == j) || (h == 0 && j == l)) {
              continue;
            }
            b.add_composite(name(h, j, l), name(g, i, j), name(mul[h][g], i, l));
          }
        }
      }
    }
  }
  return b.build();
}

inline std::vector<std::vector<int>> cyclic_table(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      t[a][b] = (a + b) % n;
    }
  }
  return t;
}

/// Multiplication table of S_3 with the identity permutation first.
inline std::vector<std::vector<int>> s3_table() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3>              p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int x = 0; x < 3; ++x) {
        c[x] = perms[a][perms[b][x]];
      }
      t[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return t;
}

/// The monoid generated by a few random self-maps of {0, ..., m-1}, as a
/// one-object category.
inline FiniteCategory random_transformation_monoid(std::mt19937_64& rng,
                                                   int m, int gens) {
  using Map = std::vector<int>;
  Map id(m);
  for (int i = 0; i < m; ++i) {
    id[i] = i;
  }
  std::vector<Map> elems{id};
  std::uniform_int_distribution<int> pick(0, m - 1);
  std::vector<Map> generators;
  for (int g = 0; g < gens; ++g) {
    Map f(m);
    for (auto& x : f) {
      x = pick(rng);
    }
    generators.push_back(f);
  }
  // f then g
  auto then = [&](Map const& f, Map const& g) {
    Map r(m);
    for (int i = 0; i < m; ++i) {
      r[i] = g[f[i]];
    }
    return r;
  };
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (auto const& g : generators) {
      Map next = then(elems[i], g);
      if (std::find(elems.begin(), elems.end(), next) == elems.end()) {
        elems.push_back(next);
      }
    }
  }
  auto index = [&](Map const& f) {
    return static_cast<int>(std::find(elems.begin(), elems.end(), f) - elems.begin());
  };
  auto name = [](int i) { return i == 0 ? std::string("1@o") : "t" + std::to_string(i); };
  CategoryBuilder b;
  b.add_object("o");
  for (std::size_t i = 1; i < elems.size(); ++i) {
    b.add_morphism(name(static_cast<int>(i)), "o", "o");
  }
  for (std::size_t f = 1; f < elems.size(); ++f) {
    for (std::size_t g = 1; g < elems.size(); ++g) {
      b.add_composite(name(static_cast<int>(g)), name(static_cast<int>(f)),
                      name(index(then(elems[f], elems[g]))));
    }
  }
  return b.build();
}

/// A random finite poset on k objects viewed as a category.
inline FiniteCategory random_poset(std::mt19937_64& rng, int k) {
  std::vector<std::vector<char>> le(k, std::vector<char>(k, 0));
  std::bernoulli_distribution    coin(0.4);
  for (int i = 0; i < k; ++i) {
    le[i][i] = 1;
    for (int j = i + 1; j < k; ++j) {
      le[i][j] = coin(rng);
    }
  }
  for (int m = 0; m < k; ++m) {
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        if (le[i][m] && le[m][j]) {
          le[i][j] = 1;
        }
      }
    }
  }
  auto obj  = [](int i) { return "p" + std::to_string(i); };
  auto name = [&](int i, int j) {
    return i == j ? detail::identity_name(obj(i))
                  : "r" + std::to_string(i) + "_" + std::to_string(j);
  };
  CategoryBuilder b;
  for (int i = 0; i < k; ++i) {
    b.add_object(obj(i));
  }
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i != j && le[i][j]) {
        b.add_morphism(name(i, j), obj(i), obj(j));
      }
    }
  }
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      for (int l = 0; l < k; ++l) {
        if (i != j && j != l && le[i][j] && le[j][l]) {
          b.add_composite(name(j, l), name(i, j), name(i, l));
        }
      }
    }
  }
  return b.build();
}

inline FiniteCategory random_groupoid(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kind(0, 3), objs(1, 3);
  switch (kind(rng)) {
    case 0: return group_groupoid(cyclic_table(2 + static_cast<int>(rng() % 4)), objs(rng));
    case 1: return group_groupoid(s3_table(), 1 + static_cast<int>(rng() % 2));
    case 2: return group_groupoid(cyclic_table(1), objs(rng) + 1);
    default: return group_groupoid(cyclic_table(3), objs(rng));
  }
}

inline FiniteCategory random_category(std::mt19937_64& rng) {
  switch (rng() % 3) {
    case 0: return random_groupoid(rng);
    case 1: return random_transformation_monoid(rng, 3, 1 + static_cast<int>(rng() % 2));
    default: return random_poset(rng, 2 + static_cast<int>(rng() % 4));
  }
}

inline RawString random_string(std::mt19937_64& rng, FiniteCategory const& c,
                               std::size_t max_len) {
  RawString s(rng() % (max_len + 1));
  for (auto& x : s) {
    x = static_cast<MorphId>(rng() % c.num_morphisms());
  }
  return s;
}

inline NormalForm random_normal_form(std::mt19937_64& rng, FiniteCategory const& c,
                                     std::size_t max_len) {
  return normalize(c, random_string(rng, c, max_len));
}

// ---- tau certificate -----------------------------------------------------

/// Cyclic reduction of a freely reduced word.
inline FreeWord cyclic_reduce(FreeWord w) {
  w = free_reduce(w);
  while (w.size() >= 2 && w.front().generator == w.back().generator
         && w.front().inverse != w.back().inverse) {
    w = FreeWord(w.begin() + 1, w.end() - 1);
  }
  return w;
}

/// Is w a cyclic conjugate of some relator or relator inverse?
inline bool is_relator_conjugate(Presentation const& p, FreeWord const& w) {
  auto c = cyclic_reduce(w);
  if (c.empty()) {
    return true;
  }
  for (auto const& r : p.relators) {
    for (auto base : {cyclic_reduce(r), cyclic_reduce(free_inverse(r))}) {
      if (base.size() != c.size()) {
        continue;
      }
      for (std::size_t s = 0; s < base.size(); ++s) {
        std::rotate(base.begin(), base.begin() + 1, base.end());
        if (base == c) {
          return true;
        }
      }
    }
  }
  return false;
}

/// A sequence of single contractions from w down to the one-letter word
/// (target), each step justified by a relator of the presentation. Returns
/// false when no such chain exists or a step is not justified.
inline bool certified_chain(Model const& m, Presentation const& p, Word const& w,
                            EdgeId target) {
  if (w.size() == 1) {
    return w[0] == target;
  }
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    auto next = contract(m, w, i);
    if (!next) {
      continue;
    }
    EdgeId   z = (*next)[i];
    FreeWord step;
    if (auto const& l = p.edge_letter[z]) {
      step.push_back({l->generator, !l->inverse});
    }
    for (EdgeId e : {w[i + 1], w[i]}) {
      if (auto const& l = p.edge_letter[e]) {
        step.push_back(*l);
      }
    }
    if (!is_relator_conjugate(p, step)) {
      return false;
    }
    Word single{target};
    if (reaches(m, *next, single) && certified_chain(m, p, *next, target)) {
      return true;
    }
  }
  return false;
}

// ---- random zigzags ------------------------------------------------------

/// Replaces one random entry by a random producer pair.
inline bool expand_once(std::mt19937_64& rng, Model const& m, Word& w) {
  std::vector<std::size_t> spots;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!m.producers(w[i]).empty()) {
      spots.push_back(i);
    }
  }
  if (spots.empty()) {
    return false;
  }
  auto i     = spots[rng() % spots.size()];
  auto prods = m.producers(w[i]);
  auto [f, g] = prods[rng() % prods.size()];
  w[i]        = f;
  w.insert(w.begin() + static_cast<std::ptrdiff_t>(i) + 1, g);
  return true;
}

/// Applies one random available contraction.
inline bool contract_once(std::mt19937_64& rng, Model const& m, Word& w) {
  std::vector<Word> next;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (auto c = contract(m, w, i)) {
      next.push_back(std::move(*c));
    }
  }
  if (next.empty()) {
    return false;
  }
  w = next[rng() % next.size()];
  return true;
}

/// A zigzag with the given number of peaks built by random expansion
/// (going up) and random contraction (going down).
inline Zigzag random_zigzag(std::mt19937_64& rng, Model const& m, std::size_t peaks) {
  Zigzag z;
  Word   cur{static_cast<EdgeId>(rng() % m.num_edges())};
  z.entries.push_back(cur);
  for (std::size_t k = 0; k < peaks; ++k) {
    Word peak = cur;
    for (int s = 0, steps = 1 + static_cast<int>(rng() % 3); s < steps; ++s) {
      expand_once(rng, m, peak);
    }
    Word down = peak;
    for (int s = 0, steps = static_cast<int>(rng() % 4); s < steps; ++s) {
      contract_once(rng, m, down);
    }
    z.entries.push_back(peak);
    z.entries.push_back(down);
    cur = down;
  }
  return z;
}

/// Up to `limit` homs source -> target, collected in enumeration order.
inline std::vector<Hom> first_homs(Model const& source, Model const& target,
                                   std::size_t limit) {
  std::vector<Hom> out;
  for_each_hom(source, target, [&](Hom const& h) {
    out.push_back(h);
    return out.size() < limit;
  });
  return out;
}

}  // namespace support
