#include <doctest.h>

#include "generators.hpp"
#include "living.hpp"
#include "oracle.hpp"
#include "rca/rules.hpp"

using namespace rca;

namespace {

Implication imp(const FormalContext& ctx, std::initializer_list<std::string_view> u,
                std::initializer_list<std::string_view> v) {
  return {ctx.attribute_set(u), ctx.attribute_set(v)};
}

}  // namespace

TEST_SUITE("rules") {
  TEST_CASE("rough measures on the Living context") {
    const auto ctx = living::context();
    const auto lb_ll = rough_measure(ctx, imp(ctx, {"lb"}, {"ll"}));
    CHECK(lb_ll.numerator() == 2);
    CHECK(lb_ll.denominator() == 3);
    CHECK(lb_ll.value() == RoughMeasure::rational(2, 3));
    CHECK(lb_ll.to_string() == "2/3");

    const auto lb_sk = rough_measure(ctx, imp(ctx, {"lb"}, {"sk"}));
    CHECK(lb_sk.value() == RoughMeasure::rational(1, 3));
    CHECK(lb_sk.to_string() == "1/3");

    const auto mo_nw = rough_measure(ctx, imp(ctx, {"mo"}, {"nw"}));
    CHECK(mo_nw.is_one());
    CHECK(mo_nw.to_string() == "1");
    CHECK(rough_measure(ctx, imp(ctx, {"sk"}, {"lw"})).to_string() == "0");
    CHECK_FALSE(implication_holds(ctx, imp(ctx, {"lb"}, {"ll"})));
  }

  TEST_CASE("undefined measure") {
    const auto ctx = living::context();
    const auto m = rough_measure(ctx, imp(ctx, {"2lg", "1lg"}, {"sk"}));
    CHECK_FALSE(m.defined());
    CHECK_FALSE(m.is_one());
    CHECK(m.to_string() == "undefined");
    try {
      (void)m.value();
      FAIL("expected undefined measure");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::undefined_measure);
    }
    CHECK(implication_holds(ctx, imp(ctx, {"2lg", "1lg"}, {"sk"})));
  }

  TEST_CASE("certain and possible rules") {
    const auto ctx = living::context();
    const auto space = living::space();
    CHECK(possible_rule(space, ctx, imp(ctx, {"lb"}, {"ll"})));
    CHECK(certain_rule(space, ctx, imp(ctx, {"lb"}, {"sk"})));
    CHECK_FALSE(implication_holds(ctx, imp(ctx, {"lb"}, {"sk"})));
    CHECK_FALSE(certain_rule(space, ctx, imp(ctx, {"mo"}, {"lw"})));
    CHECK(possible_rule(space, ctx, imp(ctx, {"2lg"}, {"1lg"})));
    CHECK_FALSE(implication_holds(ctx, imp(ctx, {"2lg"}, {"1lg"})));

    const Implication foreign{AttributeSet(2), AttributeSet(2)};
    CHECK_THROWS_AS(implication_holds(ctx, foreign), Error);
  }

  TEST_CASE("measures against brute-force counts") {
    gen::Rng rng(17);
    for (int t = 0; t < 500; ++t) {
      const auto ctx = gen::small_context(rng, 8, 6);
      const auto rel = oracle::Relation::of(ctx);
      const Implication i{gen::attribute_subset(rng, ctx.attribute_count(), 0.3),
                          gen::attribute_subset(rng, ctx.attribute_count(), 0.3)};
      const auto u = oracle::extent(rel, gen::to_oracle(i.premise));
      const auto v = oracle::extent(rel, gen::to_oracle(i.conclusion));
      const auto m = rough_measure(ctx, i);
      CHECK(m.denominator() == u.size());
      CHECK(m.numerator() == oracle::intersect(u, v).size());
      CHECK(implication_holds(ctx, i) == oracle::subset(u, v));
      if (m.defined()) CHECK(m.is_one() == implication_holds(ctx, i));

      // antitone in the conclusion
      auto wider = i;
      wider.conclusion |= gen::attribute_subset(rng, ctx.attribute_count(), 0.3);
      const auto w = rough_measure(ctx, wider);
      if (m.defined()) CHECK(w.value() <= m.value());
    }
  }
}
