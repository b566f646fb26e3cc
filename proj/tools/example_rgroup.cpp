// Minimal library use: the R-group and Springer class of one induction datum.

#include <hrg/hrg.hpp>

#include <iostream>

int main() {
  using namespace hrg;
  auto xi = make_datum(36, 3, Partition{11, 7, 4, 3}, Partition{4, 3, 2, 1, 1});

  auto rg = r_group(xi);
  std::cout << "d = " << rg.d << ", |R| = " << rg.componentCount << "\n";
  for (const auto& g : rg.generators) std::cout << "  " << g.word() << "\n";

  auto v = variant_for(xi.m);
  auto cls = springer_correspondents(xi);
  auto sym = symbol(*cls.members.begin(), v);
  std::cout << "class of " << cls.members.size() << ", symbol " << sym.str() << ", " << intervals(sym).size() << " intervals\n";
}
