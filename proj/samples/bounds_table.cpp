// Prints D(U), delta_f and D(S_R) for every modulus up to a degree (default 3).

#include <cstdio>
#include <cstdlib>

#include "gf2dav/gf2dav.hpp"

int main(int argc, char** argv) {
  const int max_degree = argc > 1 ? std::atoi(argv[1]) : 3;
  if (max_degree < 1 || max_degree > 4) {
    std::fprintf(stderr, "usage: %s [max-degree 1..4]\n", argv[0]);
    return 2;
  }
  std::printf("%-14s %4s %6s %4s\n", "f", "D_U", "delta", "D_S");
  for (int d = 1; d <= max_degree; ++d) {
    for (std::uint64_t low = 0; low < (std::uint64_t{1} << d); ++low) {
      const gf2dav::RingCtx ctx(gf2dav::Poly((std::uint64_t{1} << d) | low));
      const int du = gf2dav::davenport_group(gf2dav::unit_group_table(ctx)).value;
      const int ds = gf2dav::davenport_semigroup(ctx).value;
      std::printf("%-14s %4d %6d %4d\n", gf2dav::format(ctx.modulus()).c_str(), du,
                  gf2dav::delta_f(ctx.modulus()).value, ds);
    }
  }
}
