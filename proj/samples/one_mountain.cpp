// Builds the two-square model of the zigzag f <~ (a,b,c) ~> h <~ (p,q,r) ~> g
// in code, symmetrizes it, and prints a single word contracting to both f
// and g.

#include <iostream>

#include "pgemb/pgemb.hpp"

int main() {
  using namespace pgemb;
  ModelBuilder b(Mode::simplicial);
  for (auto o : {"0", "1", "2", "3", "1'", "2'"}) {
    b.add_object(o);
  }
  b.add_edge("a", "0", "1").add_edge("b", "1", "2").add_edge("c", "2", "3");
  b.add_edge("d", "0", "2").add_edge("e", "1", "3");
  b.add_edge("f", "0", "3").add_edge("h", "0", "3").add_edge("g", "0", "3");
  b.add_edge("p", "0", "1'").add_edge("q", "1'", "2'").add_edge("r", "2'", "3");
  b.add_edge("s", "0", "2'").add_edge("t", "1'", "3");
  b.add_triangle("a", "b", "d").add_triangle("d", "c", "f");
  b.add_triangle("b", "c", "e").add_triangle("a", "e", "h");
  b.add_triangle("p", "q", "s").add_triangle("s", "r", "h");
  b.add_triangle("q", "r", "t").add_triangle("p", "t", "g");
  Model x = b.build();
  require_valid(x, "sample");

  EdgeId f = x.edge_id("f"), g = x.edge_id("g");
  std::cout << "simplicial: mountain for f, g up to length 7: "
            << (mountain(x, f, g, 7) ? "yes" : "none") << '\n';

  Model sym = symmetrize(x);
  auto  w   = mountain(sym, sym.edge_id("f"), sym.edge_id("g"), 7);
  if (!w) {
    std::cout << "symmetric: none\n";
    return 1;
  }
  std::cout << "symmetric: " << format_word(sym, *w) << " contracts to";
  for (EdgeId e : values(sym, *w)) {
    std::cout << ' ' << sym.name(e);
  }
  std::cout << '\n';
}
