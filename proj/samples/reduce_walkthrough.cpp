// Shortens one sequence over F2[x]/(x^3+x^2) and prints each step.

#include <cstdio>

#include "gf2dav/gf2dav.hpp"

int main() {
  using namespace gf2dav;
  const RingCtx ctx(parse("x^3+x^2"));
  const Seq t{ctx.elem(parse("x")), ctx.elem(parse("x+1")), ctx.elem(parse("x^2+1")), ctx.elem(parse("x")),
              ctx.elem(parse("x^2+x+1"))};

  const ReductionTrace tr = reduce_sequence(ctx, t);
  auto show = [&](const char* label, auto&& terms) {
    std::printf("%-8s", label);
    for (const auto& e : terms) std::printf(" [%s]", format(e).c_str());
    std::printf("\n");
  };
  show("T", t);
  show("V", tr.v);
  std::printf("%-8s %zu strict step(s) in the stabilizer chain\n", "M", tr.chain.strict_steps.size());
  show("W", tr.w);
  show("T/W", tr.result);
  std::printf("product %s == %s via %s\n", format(sigma(ctx, t)).c_str(), format(sigma(ctx, tr.result)).c_str(),
              to_string(tr.path));
}
