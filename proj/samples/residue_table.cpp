// Prints the size of every residue class modulo n and checks they add up to G.
#include <cstdlib>
#include <iostream>

#include "grossone/grossone.hpp"

using namespace grossone;

int main(int argc, char** argv) {
  const long n = argc > 1 ? std::strtol(argv[1], nullptr, 10) : 6;
  if (n < 1) {
    std::cerr << "usage: residue_table [n >= 1]\n";
    return 2;
  }
  GrossNumber total;
  for (long k = 1; k <= n; ++k) {
    const GrossAP cls = ap_nat(k, n);
    total += cardinality(cls);
    std::cout << "N_{" << k << "," << n << "}: first " << format(cls.first) << ", last " << format(cls.last())
              << ", count " << format(cardinality(cls)) << '\n';
  }
  std::cout << "sum of counts = " << format(total) << '\n';
  return total == GrossNumber::grossone() ? 0 : 1;
}
