#pragma once

// Bounded searches over words: mean words (two distinct full contractions)
// and mountains (a single word contracting to two given edges).
//
// Rather than enumerating every composable word and running the interval
// DP on each, words are generated from the edges they contract to: the
// words of length n with value e are the concatenations u v with u of
// value x, v of value y, and (x, y) a spine with product e. Words without
// any value are never materialized, which keeps the search small on
// reduced (one-object) models where every sequence is composable.

#include <algorithm>
#include <functional>
#include <iterator>
#include <optional>
#include <vector>

#include "pgemb/model.hpp"
#include "pgemb/validate.hpp"
#include "pgemb/words.hpp"

namespace pgemb {

namespace detail {

  inline std::size_t inverse_count(Model const& m, Word const& w) {
    return static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [&](EdgeId e) {
      return m.name(e).ends_with('^');
    }));
  }

  // Witness order within one length: fewer edges named as inverses first,
  // then lexicographic by name.
  inline bool witness_less(Model const& m, Word const& a, Word const& b) {
    auto ca = inverse_count(m, a), cb = inverse_count(m, b);
    return ca != cb ? ca < cb : a < b;
  }

}  // namespace detail

/// Memoized table of the words of each length contracting to each edge.
class DerivationTable {
 public:
  DerivationTable(Model const& m, std::size_t max_len, bool allow_identities)
      : model_(m),
        allow_identities_(allow_identities),
        memo_(m.num_edges(),
              std::vector<std::optional<std::vector<Word>>>(max_len + 1)) {}

  std::size_t max_len() const noexcept {
    return memo_.empty() ? 0 : memo_.front().size() - 1;
  }

  /// Sorted, duplicate-free words of length `len` with `e` among their
  /// values.
  std::vector<Word> const& words(EdgeId e, std::size_t len) {
    auto& slot = memo_.at(e).at(len);
    if (slot) {
      return *slot;
    }
    std::vector<Word> out;
    if (len == 1) {
      if (allow_identities_ || !model_.is_identity(e)) {
        out.push_back({e});
      }
    } else {
      for (auto [x, y] : model_.producers(e)) {
        for (std::size_t a = 1; a < len; ++a) {
          auto const& left = words(x, a);
          if (left.empty()) {
            continue;
          }
          auto const& right = words(y, len - a);
          for (auto const& u : left) {
            for (auto const& v : right) {
              Word w;
              w.reserve(len);
              w.insert(w.end(), u.begin(), u.end());
              w.insert(w.end(), v.begin(), v.end());
              out.push_back(std::move(w));
            }
          }
        }
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
    }
    slot = std::move(out);
    return *slot;
  }

 private:
  Model const&                                               model_;
  bool                                                       allow_identities_;
  std::vector<std::vector<std::optional<std::vector<Word>>>> memo_;
};

/// Length of the longest composable word of non-identity edges, or nullopt
/// when such words can be arbitrarily long.
inline std::optional<std::size_t> longest_chain(Model const& m) {
  auto const n = m.num_objects();
  // Longest path in the graph of non-identity edges; a cycle means none.
  std::vector<int>         state(n, 0);
  std::vector<std::size_t> depth(n, 0);
  bool                     cyclic = false;
  std::function<void(ObjectId)> visit = [&](ObjectId o) {
    state[o] = 1;
    for (EdgeId e : m.out_edges(o)) {
      ObjectId t = m.tgt(e);
      if (state[t] == 1) {
        cyclic = true;
        return;
      }
      if (state[t] == 0) {
        visit(t);
      }
      if (cyclic) {
        return;
      }
      depth[o] = std::max(depth[o], depth[t] + 1);
    }
    state[o] = 2;
  };
  std::size_t best = 0;
  for (ObjectId o = 0; o < n && !cyclic; ++o) {
    if (state[o] == 0) {
      visit(o);
    }
    best = std::max(best, depth[o]);
  }
  if (cyclic) {
    return std::nullopt;
  }
  return best;
}

struct ScanOptions {
  std::size_t max_len          = 6;
  bool        allow_identities = false;
  /// Keep scanning to max_len and record every mean word's values instead
  /// of stopping at the first length with a mean word.
  bool collect_all = false;
};

struct MeanWitness {
  Word    word;
  EdgeSet values;

  friend bool operator==(MeanWitness const&, MeanWitness const&) = default;
};

struct MeanScanResult {
  /// The first mean word of minimal length: fewest inverse-named edges,
  /// then lexicographic.
  std::optional<MeanWitness> witness;
  /// Distinct value sets of the mean words found.
  std::vector<EdgeSet> value_groups;
  /// Union of the values of the mean words found.
  EdgeSet     sad_edges;
  std::size_t mean_words = 0;
  std::size_t bound      = 0;
  /// True when no composable word is longer than the bound, so the
  /// verdict is not merely bounded.
  bool exhaustive = false;

  bool kind_up_to_bound() const noexcept { return !witness.has_value(); }
};

inline MeanScanResult mean_scan(Model const& m, ScanOptions const& opts = {}) {
  if (opts.max_len < 2) {
    throw PreconditionError("mean_scan: max_len must be at least 2");
  }
  MeanScanResult result;
  result.bound = opts.max_len;
  if (!opts.allow_identities) {
    auto chain        = longest_chain(m);
    result.exhaustive = chain && *chain <= opts.max_len;
  }
  DerivationTable table(m, opts.max_len, opts.allow_identities);

  for (std::size_t len = 2; len <= opts.max_len; ++len) {
    std::vector<std::pair<Word const*, EdgeId>> hits;
    for (EdgeId e = 0; e < m.num_edges(); ++e) {
      for (auto const& w : table.words(e, len)) {
        hits.emplace_back(&w, e);
      }
    }
    std::sort(hits.begin(), hits.end(), [](auto const& a, auto const& b) {
      return *a.first != *b.first ? *a.first < *b.first : a.second < b.second;
    });
    for (std::size_t i = 0; i < hits.size();) {
      std::size_t j = i;
      EdgeSet     vals;
      while (j < hits.size() && *hits[j].first == *hits[i].first) {
        vals.push_back(hits[j].second);
        ++j;
      }
      if (vals.size() >= 2) {
        ++result.mean_words;
        if (!result.witness
            || (result.witness->word.size() == len
                && detail::witness_less(m, *hits[i].first, result.witness->word))) {
          result.witness = MeanWitness{*hits[i].first, vals};
        }
        for (EdgeId e : vals) {
          detail::insert_sorted(result.sad_edges, e);
        }
        auto it = std::lower_bound(result.value_groups.begin(),
                                   result.value_groups.end(), vals);
        if (it == result.value_groups.end() || *it != vals) {
          result.value_groups.insert(it, vals);
        }
      }
      i = j;
    }
    if (result.witness && !opts.collect_all) {
      break;
    }
  }
  return result;
}

/// A shortest word of length at most max_len with both f and g among its
/// values, in witness order.
/// For f == g this is (id, f).
inline std::optional<Word> mountain(Model const& m,
                                    EdgeId       f,
                                    EdgeId       g,
                                    std::size_t  max_len) {
  if (m.src(f) != m.src(g) || m.tgt(f) != m.tgt(g)) {
    throw PreconditionError("mountain: " + m.name(f) + " and " + m.name(g)
                            + " are not parallel");
  }
  if (f == g) {
    if (max_len < 2) {
      return std::nullopt;
    }
    return Word{m.identity(m.src(f)), f};
  }
  DerivationTable table(m, max_len, false);
  for (std::size_t len = 2; len <= max_len; ++len) {
    auto const& a = table.words(f, len);
    auto const& b = table.words(g, len);
    std::vector<Word> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(common));
    if (!common.empty()) {
      return *std::min_element(common.begin(), common.end(),
                               [&](Word const& x, Word const& y) {
                                 return detail::witness_less(m, x, y);
                               });
    }
  }
  return std::nullopt;
}

}  // namespace pgemb
