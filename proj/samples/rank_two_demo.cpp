// Walks through the rank-two operator T[f] = f'(0) x(x+1)(x-1) + f(0) (x^2 - 1/4):
// an operator of infinite order that preserves hyperbolicity yet is not
// monotone.

#include <iostream>

#include "polyop/polyop.hpp"

int main() {
  using namespace polyop;

  const RankTwo t{FunctionalSpec{{0, 1}, 0}, FunctionalSpec{{1}, 0}, Poly{0, -1, 0, 1}, Poly{frac(-1, 4), 0, 1}};

  const auto rep = rep_prefix(t, 6);
  for (std::size_t k = 0; k < rep.q.size(); ++k)
    std::cout << "Q_" << k << " = " << to_string(rep.q[k]) << "   (deg " << to_string(rep.q[k].degree()) << ")\n";

  std::cout << "monotone: " << to_string(monotone_classify(rep)) << '\n';
  std::cout << "P, R interlace: " << (interlaces(t.p, t.r) ? "yes" : "no") << '\n';
  if (auto cert = infinite_order_certificate(t)) std::cout << "infinite order: " << *cert << '\n';

  const auto corpus = generate_corpus({7, 50, 6, 4});
  std::cout << preserve_test(t, corpus).summary() << '\n';
}
