#pragma once

// Text formats: PGD (partial groupoid data) and CAT (finite categories).
// The grammar is documented in docs/formats.md.

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pgemb/category.hpp"
#include "pgemb/model.hpp"

namespace pgemb::io {

namespace detail {

  inline std::vector<std::string> split_ws(std::string_view line) {
    std::vector<std::string> out;
    std::istringstream       in{std::string(line)};
    for (std::string tok; in >> tok;) {
      out.push_back(tok);
    }
    return out;
  }

  inline std::string strip_comment(std::string const& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
  }

  [[noreturn]] inline void fail(std::size_t lineno, std::string const& msg) {
    throw InputError("line " + std::to_string(lineno) + ": " + msg);
  }

  inline std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw InputError("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  // Lines with comments removed and blank lines skipped, numbered from 1.
  inline std::vector<std::pair<std::size_t, std::vector<std::string>>>
  tokenize(std::string_view text) {
    std::vector<std::pair<std::size_t, std::vector<std::string>>> out;
    std::istringstream in{std::string(text)};
    std::size_t        lineno = 0;
    for (std::string line; std::getline(in, line);) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') {
        line.pop_back();
      }
      auto toks = split_ws(strip_comment(line));
      if (!toks.empty()) {
        out.emplace_back(lineno, std::move(toks));
      }
    }
    return out;
  }

}  // namespace detail

/// Parses PGD text. Symmetric models are closed under the symmetric action;
/// the result is not validated (see pgemb::validate).
inline Model parse_pgd(std::string_view text) {
  auto lines = detail::tokenize(text);
  if (lines.empty() || lines[0].second != std::vector<std::string>{"pgd", "1"}) {
    throw InputError("line 1: expected header 'pgd 1'");
  }
  if (lines.size() < 2 || lines[1].second.size() != 2
      || lines[1].second[0] != "mode") {
    throw InputError("line " + std::to_string(lines.size() < 2 ? 2 : lines[1].first)
                     + ": expected 'mode symmetric|simplicial'");
  }
  Mode mode;
  if (lines[1].second[1] == "symmetric") {
    mode = Mode::symmetric;
  } else if (lines[1].second[1] == "simplicial") {
    mode = Mode::simplicial;
  } else {
    detail::fail(lines[1].first, "unknown mode '" + lines[1].second[1] + "'");
  }
  ModelBuilder b(mode);
  for (std::size_t i = 2; i < lines.size(); ++i) {
    auto const& [lineno, t] = lines[i];
    if (t[0] == "object") {
      if (t.size() < 2) {
        detail::fail(lineno, "object needs a name");
      }
      for (std::size_t k = 1; k < t.size(); ++k) {
        b.add_object(t[k]);
      }
    } else if (t[0] == "edge") {
      if (t.size() == 4) {
        b.add_edge(t[1], t[2], t[3]);
      } else if (t.size() == 5) {
        if (mode != Mode::symmetric) {
          detail::fail(lineno, "explicit inverses need symmetric mode");
        }
        b.add_edge(t[1], t[2], t[3], t[4]);
      } else {
        detail::fail(lineno, "expected 'edge <name> <src> <tgt> [<inverse>]'");
      }
    } else if (t[0] == "tri") {
      if (t.size() != 4) {
        detail::fail(lineno, "expected 'tri <f> <g> <h>'");
      }
      b.add_triangle(t[1], t[2], t[3]);
    } else {
      detail::fail(lineno, "unknown directive '" + t[0] + "'");
    }
  }
  return b.build(true);
}

inline Model load_pgd(std::string const& path) {
  return parse_pgd(detail::read_file(path));
}

/// Canonical PGD text. Symmetric models list each inverse pair once and
/// one triangle per orbit.
inline std::string emit_pgd(Model const& m) {
  std::ostringstream out;
  out << "pgd 1\nmode " << to_string(m.mode()) << '\n';
  for (auto const& o : m.objects()) {
    out << "object " << o << '\n';
  }
  for (EdgeId e = 0; e < m.num_edges(); ++e) {
    auto const& edge = m.edge(e);
    if (edge.identity) {
      continue;
    }
    auto line = [&](EdgeId x) {
      return "edge " + m.name(x) + " " + m.object_name(m.src(x)) + " "
             + m.object_name(m.tgt(x));
    };
    if (!m.symmetric()) {
      out << line(e) << '\n';
      continue;
    }
    EdgeId inv = edge.inverse;
    if (inv == e) {
      out << line(e) << ' ' << edge.name << '\n';
    } else if (m.name(inv) == edge.name + "^") {
      out << line(e) << '\n';
    } else if (edge.name == m.name(inv) + "^") {
      continue;  // emitted with its partner
    } else if (e < inv) {
      out << line(e) << ' ' << m.name(inv) << '\n';
    }
  }
  std::set<Triangle> reps;
  for (auto const& t : m.triangles()) {
    if (!m.symmetric()) {
      reps.insert(t);
      continue;
    }
    Triangle best = t;
    for (auto const& u : m.orbit(t)) {
      if (u < best && std::binary_search(m.triangles().begin(),
                                         m.triangles().end(), u)) {
        best = u;
      }
    }
    reps.insert(best);
  }
  for (auto const& t : reps) {
    out << "tri " << m.name(t.f) << ' ' << m.name(t.g) << ' ' << m.name(t.h)
        << '\n';
  }
  return out.str();
}

inline void save_pgd(Model const& m, std::string const& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw InputError("cannot write '" + path + "'");
  }
  out << emit_pgd(m);
}

inline FiniteCategory parse_cat(std::string_view text) {
  auto lines = detail::tokenize(text);
  if (lines.empty() || lines[0].second != std::vector<std::string>{"cat", "1"}) {
    throw InputError("line 1: expected header 'cat 1'");
  }
  CategoryBuilder b;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto const& [lineno, t] = lines[i];
    if (t[0] == "objects") {
      for (std::size_t k = 1; k < t.size(); ++k) {
        b.add_object(t[k]);
      }
    } else if (t[0] == "mor") {
      if (t.size() != 4) {
        detail::fail(lineno, "expected 'mor <name> <src> <tgt>'");
      }
      b.add_morphism(t[1], t[2], t[3]);
    } else if (t[0] == "comp") {
      if (t.size() != 4) {
        detail::fail(lineno, "expected 'comp <g> <f> <h>'");
      }
      b.add_composite(t[1], t[2], t[3]);
    } else {
      detail::fail(lineno, "unknown directive '" + t[0] + "'");
    }
  }
  return b.build();
}

inline FiniteCategory load_cat(std::string const& path) {
  return parse_cat(detail::read_file(path));
}

inline std::string emit_cat(FiniteCategory const& c) {
  std::ostringstream out;
  out << "cat 1\nobjects";
  for (auto const& o : c.objects()) {
    out << ' ' << o;
  }
  out << '\n';
  for (MorphId m = 0; m < c.num_morphisms(); ++m) {
    if (!c.is_identity(m)) {
      out << "mor " << c.name(m) << ' ' << c.objects()[c.src(m)] << ' '
          << c.objects()[c.tgt(m)] << '\n';
    }
  }
  for (MorphId g = 0; g < c.num_morphisms(); ++g) {
    for (MorphId f = 0; f < c.num_morphisms(); ++f) {
      if (c.is_identity(f) || c.is_identity(g) || !c.composable(f, g)) {
        continue;
      }
      out << "comp " << c.name(g) << ' ' << c.name(f) << ' '
          << c.name(c.compose(g, f)) << '\n';
    }
  }
  return out.str();
}

namespace detail {

  // "a,b,c", "(a,b,c)" or "()" into its tokens.
  inline std::vector<std::string> split_list(std::string_view text) {
    std::string s;
    for (char c : text) {
      if (c != ' ' && c != '\t') {
        s += c;
      }
    }
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
      s = s.substr(1, s.size() - 2);
    }
    std::vector<std::string> out;
    if (s.empty()) {
      return out;
    }
    std::size_t start = 0;
    while (true) {
      auto comma = s.find(',', start);
      out.push_back(s.substr(start, comma - start));
      if (out.back().empty()) {
        throw InputError("empty entry in '" + std::string(text) + "'");
      }
      if (comma == std::string::npos) {
        break;
      }
      start = comma + 1;
    }
    return out;
  }

}  // namespace detail

/// Comma-separated edge tokens; `x^` is the inverse of x, `1@o` the
/// identity at o.
inline Word parse_word(Model const& m, std::string_view text) {
  Word w;
  for (auto const& tok : detail::split_list(text)) {
    w.push_back(m.edge_id(tok));
  }
  if (w.empty()) {
    throw InputError("empty word");
  }
  return w;
}

inline std::vector<MorphId> parse_string(FiniteCategory const& c,
                                         std::string_view      text) {
  std::vector<MorphId> s;
  for (auto const& tok : detail::split_list(text)) {
    auto m = c.find(tok);
    if (!m) {
      throw InputError("unknown morphism '" + tok + "'");
    }
    s.push_back(*m);
  }
  return s;
}

}  // namespace pgemb::io
