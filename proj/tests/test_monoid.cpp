#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace pgemb;

namespace {

NormalForm nf(FiniteCategory const& c, std::string const& text) {
  return normalize(c, io::parse_string(c, text));
}

std::string show(NormalForm const& x) { return format_string(*x.owner, x.entries); }

std::set<RawString> successors(FiniteCategory const& c, RawString const& s) {
  std::set<RawString> out;
  for (auto const& step : applicable_steps(c, s)) {
    out.insert(apply_step(c, s, step));
  }
  return out;
}

}  // namespace

TEST_CASE("reduction to one object") {
  auto x = support::load("example1.pgd");
  auto r = reduce_model(symmetrize(x));
  CHECK(r.model.num_objects() == 1);
  CHECK(r.model.object_name(0) == "pt");
  CHECK(r.model.num_edges() == 1 + 2 * 13);
  CHECK(r.model.triangles().size() == 8 * 6);

  auto sq  = support::load("na_square.pgd");
  auto rsq = reduce_model(sq);
  CHECK(rsq.model.num_edges() == 1 + 2 * 7);
  CHECK(rsq.model.triangles().size() == 4 * 6);
  Word w = support::word(sq, "(s1,s2,s3)");
  Word image;
  for (EdgeId e : w) {
    image.push_back(rsq.edge_map[e]);
  }
  CHECK(is_mean(rsq.model, image));
  CHECK(rsq.edge_map[sq.identity(2)] == rsq.model.identity(0));

  auto z = support::load("free_z.pgd");
  auto rz = reduce_model(z);
  CHECK(io::emit_pgd(rz.model) != io::emit_pgd(z));  // object renamed
  CHECK(rz.model.num_edges() == z.num_edges());
  CHECK(rz.model.triangles().size() == z.triangles().size());
}

TEST_CASE("normal forms on the interval groupoid") {
  auto c = support::load_category("interval.cat");
  CHECK(show(nf(c, "()")) == "()");
  CHECK(show(nf(c, "(1@a)")) == "()");
  CHECK(show(nf(c, "(f,f^)")) == "()");
  CHECK(show(nf(c, "(f,f)")) == "(f,f)");
  CHECK(is_normal(c, io::parse_string(c, "(f,f)")));
  CHECK_FALSE(is_normal(c, io::parse_string(c, "(f,g)")));
  CHECK_THROWS_AS(normalize(c, {99}), PreconditionError);
}

TEST_CASE("monoid product and inverse") {
  auto c = support::load_category("interval.cat");
  auto f = nf(c, "(f)"), g = nf(c, "(g)"), e = nf(c, "()");
  CHECK(monoid_mult(f, e) == f);
  CHECK(monoid_mult(e, f) == f);
  CHECK(show(monoid_mult(f, f)) == "(f,f)");
  CHECK(show(monoid_mult(f, g)) == "()");
  auto ff = nf(c, "(f,f)");
  CHECK(show(monoid_inverse(ff)) == "(g,g)");
  CHECK(show(monoid_mult(ff, monoid_inverse(ff))) == "()");
  CHECK(show(monoid_inverse(e)) == "()");

  auto z3 = support::load_category("z3.cat");
  CHECK(show(monoid_mult(nf(z3, "(x)"), nf(z3, "(x)"))) == "(y)");
  CHECK_THROWS_AS(monoid_mult(f, nf(z3, "(x)")), PreconditionError);

  std::mt19937_64 rng(2);
  auto mon = support::random_transformation_monoid(rng, 3, 2);
  CHECK_THROWS_AS(monoid_inverse(nf(mon, "()")), PreconditionError);
}

TEST_CASE("each rewrite step shortens the string") {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 20; ++k) {
    auto c = support::random_category(rng);
    for (int i = 0; i < 20; ++i) {
      auto s = support::random_string(rng, c, 8);
      for (auto const& step : applicable_steps(c, s)) {
        CHECK(apply_step(c, s, step).size() + 1 == s.size());
      }
    }
  }
}

TEST_CASE("normal forms do not depend on the strategy") {
  std::mt19937_64 rng(23);
  for (int k = 0; k < 40; ++k) {
    auto c = support::random_category(rng);
    for (int i = 0; i < 25; ++i) {
      auto s   = support::random_string(rng, c, 10);
      auto one = normalize(c, s);
      CHECK(is_normal(c, one.entries));
      for (std::uint64_t seed = 0; seed < 3; ++seed) {
        CHECK(normalize(c, s, Strategy::random, seed * 977 + i) == one);
      }
    }
  }
}

TEST_CASE("divergent single steps rejoin within one step") {
  std::mt19937_64 rng(29);
  for (int k = 0; k < 30; ++k) {
    auto c = support::random_category(rng);
    for (int i = 0; i < 30; ++i) {
      auto s     = support::random_string(rng, c, 6);
      auto steps = applicable_steps(c, s);
      for (std::size_t a = 0; a < steps.size(); ++a) {
        for (std::size_t b = a + 1; b < steps.size(); ++b) {
          auto x = apply_step(c, s, steps[a]);
          auto y = apply_step(c, s, steps[b]);
          if (x == y) {
            continue;
          }
          auto sx = successors(c, x), sy = successors(c, y);
          sx.insert(x);
          sy.insert(y);
          std::vector<RawString> common;
          std::set_intersection(sx.begin(), sx.end(), sy.begin(), sy.end(),
                                std::back_inserter(common));
          CHECK_FALSE(common.empty());
        }
      }
    }
  }
}

TEST_CASE("the product is associative") {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 20; ++k) {
    auto c = support::random_category(rng);
    for (int i = 0; i < 50; ++i) {
      auto x = support::random_normal_form(rng, c, 5);
      auto y = support::random_normal_form(rng, c, 5);
      auto z = support::random_normal_form(rng, c, 5);
      CHECK(monoid_mult(monoid_mult(x, y), z) == monoid_mult(x, monoid_mult(y, z)));
    }
  }
}

TEST_CASE("groupoid inverses cancel") {
  std::mt19937_64 rng(37);
  for (int k = 0; k < 20; ++k) {
    auto c = support::random_groupoid(rng);
    for (int i = 0; i < 25; ++i) {
      auto x = support::random_normal_form(rng, c, 8);
      CHECK(monoid_mult(x, monoid_inverse(x)).entries.empty());
      CHECK(monoid_mult(monoid_inverse(x), x).entries.empty());
    }
  }
}

TEST_CASE("categories embed in their monoids") {
  auto interval = support::load_category("interval.cat");
  auto r        = embed_check(interval);
  CHECK(r.ok());
  std::vector<std::string> images;
  for (auto const& x : r.image) {
    images.push_back(show(x));
  }
  std::vector<std::string> names;
  for (MorphId m = 0; m < interval.num_morphisms(); ++m) {
    names.push_back(interval.is_identity(m) ? "()" : "(" + interval.name(m) + ")");
  }
  CHECK(images == names);

  std::mt19937_64 rng(41);
  for (int k = 0; k < 15; ++k) {
    CHECK(embed_check(support::random_category(rng)).ok());
  }
}
