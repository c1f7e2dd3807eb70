#pragma once

// Command-line front end. Every result is one JSON line on `out`.
// Exit codes: 0 pass, 1 nothing found, 2 bad input, 3 witnessed failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

#include "pgemb/pgemb.hpp"

namespace pgemb::cli {

using Json = nlohmann::ordered_json;

inline constexpr int exit_pass    = 0;
inline constexpr int exit_none    = 1;
inline constexpr int exit_input   = 2;
inline constexpr int exit_witness = 3;

namespace detail {

  inline Json names(Model const& m, std::span<EdgeId const> edges) {
    Json a = Json::array();
    for (EdgeId e : edges) {
      a.push_back(m.name(e));
    }
    return a;
  }

  inline Model load_valid(std::string const& path) {
    Model m = io::load_pgd(path);
    auto  report = validate(m);
    if (!report.ok()) {
      auto const& v = report.violations.front();
      throw InputError(path + ": " + std::string(to_string(v.kind)) + ": "
                       + v.detail);
    }
    return m;
  }

  inline Triangulation triangulation_arg(int n, std::string const& arg) {
    if (!arg.empty() && std::all_of(arg.begin(), arg.end(), ::isdigit)) {
      auto all = enumerate_triangulations(n);
      auto i   = std::stoul(arg);
      if (i >= all.size()) {
        throw InputError("triangulation index " + arg + " out of range (n="
                         + std::to_string(n) + " has "
                         + std::to_string(all.size()) + ")");
      }
      return all[i];
    }
    auto t = from_parenthesization(arg);
    if (t.n() != n) {
      throw InputError("'" + arg + "' has " + std::to_string(t.n())
                       + " leaves, expected " + std::to_string(n));
    }
    return t;
  }

  inline std::string bounded(std::string const& verdict, std::size_t bound) {
    return verdict + "-up-to(" + std::to_string(bound) + ")";
  }

}  // namespace detail

/// Runs one invocation; `args` excludes the program name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Embeddability of finite partial groupoids", "pgemb"};
  app.require_subcommand(1);

  std::string file, file2, output, f_name, g_name, n_arg, i_arg, j_arg;
  std::string variant = "na";
  std::size_t max_len = 6;
  int         max_gon = 5;
  int         n_gon   = 4;
  bool        allow_identities = false;
  bool        raw              = false;
  std::vector<std::string> mult_args;
  std::string inverse_arg, normalize_arg;

  auto* validate_cmd = app.add_subcommand("validate", "Check the model laws");
  validate_cmd->add_option("file", file, "PGD file")->required();

  auto* embeddable_cmd =
      app.add_subcommand("embeddable", "Search for a mean word");
  embeddable_cmd->add_option("file", file, "PGD file")->required();
  embeddable_cmd->add_option("--max-len", max_len, "Longest word searched");
  embeddable_cmd->add_flag("--allow-identities", allow_identities,
                           "Let identities occur in searched words");

  auto* mountain_cmd =
      app.add_subcommand("mountain", "Find a word contracting to f and to g");
  mountain_cmd->add_option("file", file, "PGD file")->required();
  mountain_cmd->add_option("f", f_name, "First edge")->required();
  mountain_cmd->add_option("g", g_name, "Second edge")->required();
  mountain_cmd->add_option("--max-len", max_len, "Longest word searched");

  auto* tau_cmd = app.add_subcommand("tau", "Fundamental groupoid presentation");
  tau_cmd->add_option("file", file, "PGD file")->required();

  auto* reflect_cmd =
      app.add_subcommand("reflect", "Identify sad edges until no mean word is left");
  reflect_cmd->add_option("file", file, "PGD file")->required();
  reflect_cmd->add_option("--max-len", max_len, "Longest word searched");
  reflect_cmd->add_option("-o,--output", output, "Output PGD file")->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "Identify all objects");
  reduce_cmd->add_option("file", file, "PGD file")->required();
  reduce_cmd->add_option("-o,--output", output, "Output PGD file")->required();

  auto* symmetrize_cmd =
      app.add_subcommand("symmetrize", "Add inverses to a simplicial model");
  symmetrize_cmd->add_option("file", file, "PGD file")->required();
  symmetrize_cmd->add_option("-o,--output", output, "Output PGD file")->required();

  auto* na_cmd = app.add_subcommand("na", "Glue two triangulations");
  na_cmd->add_option("n", n_arg, "Polygon has vertices 0..n")->required();
  na_cmd->add_option("t", i_arg, "Index or parenthesization of T")->required();
  na_cmd->add_option("t_prime", j_arg, "Index or parenthesization of T'")
      ->required();
  na_cmd->add_option("--variant", variant, "na or a")
      ->check(CLI::IsMember({"na", "a"}));
  na_cmd->add_option("-o,--output", output, "Output PGD file")->required();
  na_cmd->add_flag("--raw", raw, "Write the gluing even when it is not spiny");

  auto* pairs_cmd = app.add_subcommand("pairs", "Classify all pairs for one n");
  pairs_cmd->add_option("n", n_gon, "Polygon has vertices 0..n")->required();

  auto* orthogonal_cmd = app.add_subcommand(
      "orthogonal", "Look for a hom from NA separating the long edges");
  orthogonal_cmd->add_option("file", file, "PGD file")->required();
  orthogonal_cmd->add_option("--max-gon", max_gon, "Largest n searched");

  auto* degree_cmd = app.add_subcommand("degree", "Degree of a 2-dimensional model");
  degree_cmd->add_option("file", file, "PGD file")->required();

  auto* monoid_cmd = app.add_subcommand("monoid", "Normal forms in M(C)");
  monoid_cmd->add_option("file", file2, "CAT file")->required();
  monoid_cmd->add_option("--mult", mult_args, "Multiply x . y")->expected(2);
  monoid_cmd->add_option("--inverse", inverse_arg, "Inverse in a groupoid");
  monoid_cmd->add_option("--normalize", normalize_arg, "Normal form of a string");

  auto* pregroup_cmd =
      app.add_subcommand("pregroup", "Check the pregroup associativity axiom");
  pregroup_cmd->add_option("file", file, "PGD file")->required();

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return exit_pass;
  } catch (CLI::ParseError const& e) {
    err << "pgemb: " << e.what() << '\n';
    return exit_input;
  }

  auto emit = [&](Json const& j) { out << j.dump() << '\n'; };
  std::string command = app.get_subcommands().front()->get_name();

  try {
    if (*validate_cmd) {
      Model m      = io::load_pgd(file);
      auto  report = validate(m);
      Json  j;
      j["command"] = command;
      j["verdict"] = report.ok() ? "pass" : "fail";
      j["counts"]  = {{"objects", m.num_objects()},
                      {"edges", m.num_edges()},
                      {"triangles", m.triangles().size()}};
      Json v = Json::array();
      for (auto const& x : report.violations) {
        Json tris = Json::array();
        for (auto const& t : x.triangles) {
          tris.push_back(triangle_string(m, t));
        }
        v.push_back({{"kind", to_string(x.kind)},
                     {"detail", x.detail},
                     {"triangles", tris}});
      }
      j["violations"] = v;
      emit(j);
      return report.ok() ? exit_pass : exit_witness;
    }

    if (*embeddable_cmd) {
      Model       m = detail::load_valid(file);
      ScanOptions opts;
      opts.max_len          = max_len;
      opts.allow_identities = allow_identities;
      auto r = mean_scan(m, opts);
      Json j;
      j["command"] = command;
      if (r.witness) {
        j["verdict"] = "not-embeddable";
        j["witness"] = {{"word", format_word(m, r.witness->word)},
                        {"values", detail::names(m, r.witness->values)}};
      } else {
        j["verdict"] = detail::bounded("embeddable", r.bound);
      }
      j["bound"]      = r.bound;
      j["exhaustive"] = r.exhaustive;
      emit(j);
      return r.witness ? exit_witness : exit_pass;
    }

    if (*mountain_cmd) {
      Model  m = detail::load_valid(file);
      EdgeId f = m.edge_id(f_name), g = m.edge_id(g_name);
      auto   w = mountain(m, f, g, max_len);
      Json   j;
      j["command"] = command;
      j["verdict"] = w ? "found" : detail::bounded("none", max_len);
      if (w) {
        j["witness"] = {{"word", format_word(m, *w)},
                        {"values", detail::names(m, values(m, *w))}};
      }
      j["bound"] = max_len;
      emit(j);
      return w ? exit_pass : exit_none;
    }

    if (*tau_cmd) {
      Model m = detail::load_valid(file);
      auto  p = tau_presentation(m);
      Json  j;
      j["command"]      = command;
      j["verdict"]      = "ok";
      j["counts"]       = {{"generators", p.generators.size()},
                           {"relators", p.relators.size()}};
      j["presentation"] = p.to_string();
      emit(j);
      return exit_pass;
    }

    if (*reflect_cmd) {
      Model m = detail::load_valid(file);
      auto  r = reflect_bounded(m, max_len);
      io::save_pgd(r.model, output);
      std::map<EdgeId, std::vector<EdgeId>> classes;
      for (EdgeId e = 0; e < m.num_edges(); ++e) {
        classes[r.edge_map[e]].push_back(e);
      }
      Json merged = Json::array();
      for (auto const& [img, members] : classes) {
        if (members.size() > 1) {
          merged.push_back(detail::names(m, members));
        }
      }
      Json j;
      j["command"] = command;
      j["verdict"] = r.complete_at_bound ? detail::bounded("embeddable", max_len)
                                         : "incomplete";
      j["counts"]  = {{"edges", r.model.num_edges()},
                      {"triangles", r.model.triangles().size()},
                      {"rounds", r.rounds}};
      j["bound"]      = max_len;
      j["identified"] = merged;
      j["output"]     = output;
      emit(j);
      return exit_pass;
    }

    if (*reduce_cmd || *symmetrize_cmd) {
      Model m = detail::load_valid(file);
      Model r = *reduce_cmd ? reduce_model(m).model : symmetrize(m);
      io::save_pgd(r, output);
      Json j;
      j["command"] = command;
      j["verdict"] = "ok";
      j["counts"]  = {{"objects", r.num_objects()},
                      {"edges", r.num_edges()},
                      {"triangles", r.triangles().size()}};
      j["output"] = output;
      emit(j);
      return exit_pass;
    }

    if (*na_cmd) {
      int  n  = std::stoi(n_arg);
      auto t  = detail::triangulation_arg(n, i_arg);
      auto u  = detail::triangulation_arg(n, j_arg);
      auto c  = classify_pair(t, u);
      Json j;
      j["command"] = command;
      j["class"]   = to_string(c);
      auto v = variant == "na" ? Variant::na : Variant::a;
      if ((v == Variant::na && c == PairClass::incompatible)
          || (v == Variant::a && c != PairClass::well_behaved)) {
        auto raw_glue = glue_raw(t, u, v == Variant::na ? SpineKind::plain
                                                        : SpineKind::circular);
        auto report   = validate(raw_glue.model);
        j["verdict"] = "not-spiny";
        Json v2      = Json::array();
        for (auto const& x : report.violations) {
          v2.push_back({{"kind", to_string(x.kind)}, {"detail", x.detail}});
        }
        j["witness"] = {{"violations", v2}};
        if (raw) {
          io::save_pgd(raw_glue.model, output);
          j["output"] = output;
        }
        emit(j);
        return exit_witness;
      }
      auto g = build_glued(t, u, v);
      io::save_pgd(g.model, output);
      j["verdict"] = "ok";
      j["counts"]  = {{"objects", g.model.num_objects()},
                      {"edges", g.model.num_edges()},
                      {"triangles", g.model.triangles().size()}};
      j["t"]       = to_parenthesization(t);
      j["t_prime"] = to_parenthesization(u);
      j["output"]  = output;
      emit(j);
      return exit_pass;
    }

    if (*pairs_cmd) {
      auto all = enumerate_triangulations(n_gon);
      std::size_t incompatible = 0, compatible = 0, well = 0, flips = 0, cones = 0;
      for (std::size_t a = 0; a < all.size(); ++a) {
        for (std::size_t b = 0; b < all.size(); ++b) {
          auto c    = classify_pair(all[a], all[b]);
          bool flip = flip_adjacent(all[a], all[b]);
          Json j;
          j["command"]       = command;
          j["t"]             = a;
          j["t_prime"]       = b;
          j["parens"]        = {to_parenthesization(all[a]),
                                to_parenthesization(all[b])};
          j["class"]         = to_string(c);
          j["flip_adjacent"] = flip;
          flips += flip;
          if (c == PairClass::incompatible) {
            ++incompatible;
            j["cone"]   = nullptr;
            j["degree"] = nullptr;
          } else {
            ++compatible;
            well += c == PairClass::well_behaved;
            bool cone = has_cone(all[a], all[b]);
            cones += cone;
            j["cone"]   = cone;
            j["degree"] = cone ? 3 : 2;
          }
          emit(j);
        }
      }
      Json j;
      j["command"] = command;
      j["verdict"] = "ok";
      j["counts"]  = {{"triangulations", all.size()},
                      {"pairs", all.size() * all.size()},
                      {"incompatible", incompatible},
                      {"compatible", compatible},
                      {"well_behaved", well},
                      {"flip_adjacent", flips},
                      {"cones", cones}};
      emit(j);
      return exit_pass;
    }

    if (*orthogonal_cmd) {
      Model m = detail::load_valid(file);
      auto  v = orthogonality_check(m, max_gon);
      Json  j;
      j["command"] = command;
      if (v) {
        auto const& src = v->glued.model;
        Json        map = Json::object();
        for (EdgeId e = 0; e < src.num_edges(); ++e) {
          if (!src.is_identity(e)) {
            map[src.name(e)] = m.name(v->hom.edge_map[e]);
          }
        }
        j["verdict"] = "violated";
        j["witness"] = {{"t", to_parenthesization(v->t)},
                        {"t_prime", to_parenthesization(v->t_prime)},
                        {"edge_map", map}};
      } else {
        j["verdict"] = "pass";
      }
      j["bound"] = max_gon;
      emit(j);
      return v ? exit_witness : exit_pass;
    }

    if (*degree_cmd) {
      Model m = detail::load_valid(file);
      auto  r = degree_2dim(m);
      Json  j;
      j["command"] = command;
      j["verdict"] = "ok";
      j["degree"]  = r.degree;
      if (r.witness) {
        j["witness"] = {{"source", m.object_name(r.witness->source)},
                        {"legs", detail::names(m, r.witness->legs)}};
      } else if (r.obstruction) {
        j["obstruction"] = {{"source", m.object_name(r.obstruction->source)},
                            {"legs", detail::names(m, r.obstruction->legs)}};
      }
      emit(j);
      return exit_pass;
    }

    if (*monoid_cmd) {
      auto c = io::load_cat(file2);
      Json j;
      j["command"] = command;
      auto nf = [&](std::string const& s) {
        return normalize(c, io::parse_string(c, s));
      };
      if (!mult_args.empty()) {
        auto r       = monoid_mult(nf(mult_args[0]), nf(mult_args[1]));
        j["verdict"] = "ok";
        j["result"]  = format_string(c, r.entries);
      } else if (!inverse_arg.empty()) {
        auto r       = monoid_inverse(nf(inverse_arg));
        j["verdict"] = "ok";
        j["result"]  = format_string(c, r.entries);
      } else if (!normalize_arg.empty()) {
        j["verdict"] = "ok";
        j["result"]  = format_string(c, nf(normalize_arg).entries);
      } else {
        auto r     = embed_check(c);
        Json image = Json::object();
        for (MorphId f = 0; f < c.num_morphisms(); ++f) {
          image[c.name(f)] = format_string(c, r.image[f].entries);
        }
        j["verdict"] = r.ok() ? "pass" : "fail";
        if (!r.ok()) {
          Json w = Json::array();
          for (auto [f, g] : r.non_functorial) {
            w.push_back({{"kind", "non-functorial"}, {"f", c.name(f)}, {"g", c.name(g)}});
          }
          for (auto [f, g] : r.collisions) {
            w.push_back({{"kind", "collision"}, {"f", c.name(f)}, {"g", c.name(g)}});
          }
          j["witness"] = w;
        }
        j["image"] = image;
        emit(j);
        return r.ok() ? exit_pass : exit_witness;
      }
      emit(j);
      return exit_pass;
    }

    if (*pregroup_cmd) {
      Model m = detail::load_valid(file);
      auto  v = pregroup_axiom_check(m);
      Json  j;
      j["command"] = command;
      if (v) {
        auto opt = [&](std::optional<EdgeId> e) -> Json {
          return e ? Json(m.name(*e)) : Json(nullptr);
        };
        j["verdict"] = "violated";
        j["witness"] = {{"triple", format_word(m, std::vector<EdgeId>{v->a, v->b, v->c})},
                        {"ab_c", opt(v->left)},
                        {"a_bc", opt(v->right)}};
      } else {
        j["verdict"] = "pass";
      }
      emit(j);
      return v ? exit_witness : exit_pass;
    }
  } catch (Error const& e) {
    Json j;
    j["command"] = command;
    j["verdict"] = "error";
    j["error"]   = e.what();
    emit(j);
    err << "pgemb: " << e.what() << '\n';
    return exit_input;
  } catch (std::invalid_argument const& e) {
    err << "pgemb: " << e.what() << '\n';
    return exit_input;
  }
  return exit_input;
}

}  // namespace pgemb::cli
