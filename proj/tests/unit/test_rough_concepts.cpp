#include <doctest.h>

#include <set>

#include "generators.hpp"
#include "labels.hpp"
#include "living.hpp"
#include "oracle.hpp"
#include "rca/rough_concepts.hpp"

using namespace rca;

namespace {

using Assignment = std::vector<std::pair<std::vector<int>, int>>;

const ConceptApproximationMaps& living_maps() {
  static const ConceptApproximationMaps maps(living::space(), living::context());
  return maps;
}

std::size_t base_label(int label) {
  return labels::by_extent(living_maps().base(), living::base_labels.at(label));
}

// Reference fibers translated to (image index, {base indices}).
std::set<std::pair<std::size_t, std::set<std::size_t>>> expected_fibers(
    const Assignment& listed, const ConceptLattice& target,
    const std::map<int, std::vector<std::string>>& target_labels) {
  std::set<std::pair<std::size_t, std::set<std::size_t>>> out;
  for (const auto& [members, image] : listed) {
    std::set<std::size_t> m;
    for (int b : members) m.insert(base_label(b));
    out.emplace(labels::by_extent(target, target_labels.at(image)), m);
  }
  return out;
}

std::set<std::pair<std::size_t, std::set<std::size_t>>> as_set(const std::vector<Fiber>& fibers) {
  std::set<std::pair<std::size_t, std::set<std::size_t>>> out;
  for (const auto& f : fibers) out.emplace(f.image, std::set<std::size_t>(f.members.begin(), f.members.end()));
  return out;
}

FormalContext four_object_counterexample() {
  // a:x  b:y  c:x,y  e:z
  return FormalContext({"a", "b", "c", "e"}, {"x", "y", "z"},
                       {AttributeSet(3, {0}), AttributeSet(3, {1}), AttributeSet(3, {0, 1}),
                        AttributeSet(3, {2})});
}

}  // namespace

TEST_SUITE("rough_concepts") {
  TEST_CASE("images of B_2") {
    const auto& maps = living_maps();
    const auto& ctx = maps.base().context();
    const auto& b2 = maps.base()[base_label(2)];
    const auto& up = concept_upper_approx(maps, b2);
    const auto& lo = concept_lower_approx(maps, b2);
    CHECK(up.extent == ctx.object_set({"Le", "Br", "Fr", "Dg"}));
    CHECK(up.intent == ctx.attribute_set({"nw", "ll", "mo", "lb"}));
    CHECK(lo.extent == ctx.object_set({"Dg"}));
    CHECK(lo.intent == ctx.attribute_set({"nw", "ll", "mo", "lb", "sk"}));
    CHECK(maps.upper().owns(up));
    CHECK(maps.lower().owns(lo));
    CHECK_THROWS_AS(concept_upper_approx(maps, up), Error);
  }

  TEST_CASE("lower join and upper meet") {
    const auto& maps = living_maps();
    const auto& u1 = maps.upper()[labels::by_extent(maps.upper(), living::upper_labels.at(1))];
    CHECK(lower_join(maps, u1).index == base_label(1));
    CHECK(lower_join(maps, maps.upper().top()).index == maps.base().top().index);
    const auto& l4 = maps.lower()[labels::by_extent(maps.lower(), living::lower_labels.at(4))];
    CHECK(upper_meet(maps, l4).index == base_label(7));
    CHECK(upper_meet(maps, maps.lower().bottom()).index == maps.base().bottom().index);
    CHECK_THROWS_AS(lower_join(maps, l4), Error);
    CHECK_THROWS_AS(upper_meet(maps, u1), Error);

    // scan-based oracle for every upper/lower concept
    for (const auto& d : maps.upper().concepts()) {
      auto acc = maps.base().bottom().extent;
      for (const auto& c : maps.base().concepts())
        if (c.extent.is_subset_of(d.extent)) acc |= c.extent;
      const auto closed = derive_extent(maps.base().context(), derive_intent(maps.base().context(), acc));
      CHECK(lower_join(maps, d).extent == closed);
    }
    for (const auto& d : maps.lower().concepts()) {
      auto acc = maps.base().top().extent;
      for (const auto& c : maps.base().concepts())
        if (d.extent.is_subset_of(c.extent)) acc &= c.extent;
      CHECK(upper_meet(maps, d).extent == acc);
    }
  }

  TEST_CASE("units of both adjunctions on the Living lattices") {
    const auto& maps = living_maps();
    for (const auto& c : maps.base().concepts()) {
      CHECK(maps.base().leq(c.index, lower_join(maps, concept_upper_approx(maps, c)).index));
      CHECK(maps.base().leq(upper_meet(maps, concept_lower_approx(maps, c)).index, c.index));
    }
    for (const auto& d : maps.lower().concepts())
      CHECK(maps.lower().leq(d.index, concept_lower_approx(maps, upper_meet(maps, d)).index));
  }

  TEST_CASE("both adjunctions and preservation laws hold on the Living lattices") {
    const auto& maps = living_maps();
    const auto& base = maps.base();
    for (const auto& c : base.concepts()) {
      for (const auto& d : maps.upper().concepts())
        CHECK(maps.upper().leq(maps.to_upper(c.index), d.index) ==
              base.leq(c.index, lower_join(maps, d).index));
      for (const auto& d : maps.lower().concepts())
        CHECK(base.leq(upper_meet(maps, d).index, c.index) ==
              maps.lower().leq(d.index, maps.to_lower(c.index)));
      for (const auto& e : base.concepts()) {
        std::vector<std::size_t> pair{c.index, e.index};
        std::vector<std::size_t> ups{maps.to_upper(c.index), maps.to_upper(e.index)};
        std::vector<std::size_t> los{maps.to_lower(c.index), maps.to_lower(e.index)};
        CHECK(maps.to_upper(base.join_of(pair).index) == maps.upper().join_of(ups).index);
        CHECK(maps.to_lower(base.meet_of(pair).index) == maps.lower().meet_of(los).index);
      }
    }
  }

  TEST_CASE("upper adjunction fails on a four-object context") {
    const auto ctx = four_object_counterexample();
    const ApproximationSpace space(ctx.objects(), {{0, 1}, {2, 3}});
    const ConceptApproximationMaps maps(space, ctx);
    const auto& c = maps.base()[*maps.base().find_extent(ctx.object_set({"c"}))];
    const auto& d = maps.upper()[*maps.upper().find_extent(ctx.object_set({"c", "e"}))];
    CHECK(concept_upper_approx(maps, c).index == maps.upper().top().index);
    CHECK(lower_join(maps, d).index == maps.base().top().index);
    CHECK(maps.base().leq(c.index, lower_join(maps, d).index));
    CHECK_FALSE(maps.upper().leq(maps.to_upper(c.index), d.index));

  }

  TEST_CASE("join preservation fails on a three-object context") {
    // a: -  b:y  c:x, blocks {a},{b,c}
    const FormalContext ctx({"a", "b", "c"}, {"x", "y"},
                            {AttributeSet(2), AttributeSet(2, {1}), AttributeSet(2, {0})});
    const ConceptApproximationMaps maps(ApproximationSpace(ctx.objects(), {{0}, {1, 2}}), ctx);
    std::vector<std::size_t> pair{*maps.base().find_extent(ctx.object_set({"b"})),
                                  *maps.base().find_extent(ctx.object_set({"c"}))};
    const auto& joined = maps.base().join_of(pair);
    CHECK(joined.index == maps.base().top().index);
    std::vector<std::size_t> ups{maps.to_upper(pair[0]), maps.to_upper(pair[1])};
    CHECK(ups[0] == ups[1]);
    CHECK(maps.upper()[ups[0]].extent == ctx.object_set({"b", "c"}));
    CHECK(maps.to_upper(joined.index) == maps.upper().top().index);
    CHECK(maps.to_upper(joined.index) != maps.upper().join_of(ups).index);
  }

  TEST_CASE("lower adjunction and meet preservation on random contexts") {
    gen::Rng rng(41);
    for (int t = 0; t < 200; ++t) {
      const auto ctx = gen::small_context(rng);
      const auto [space, blocks] = gen::partition(rng, ctx);
      const ConceptApproximationMaps maps(space, ctx);
      const auto& base = maps.base();
      for (const auto& c : base.concepts()) {
        for (const auto& d : maps.lower().concepts())
          CHECK(base.leq(upper_meet(maps, d).index, c.index) ==
                maps.lower().leq(d.index, maps.to_lower(c.index)));
        for (const auto& e : base.concepts()) {
          std::vector<std::size_t> pair{c.index, e.index};
          std::vector<std::size_t> los{maps.to_lower(c.index), maps.to_lower(e.index)};
          CHECK(maps.to_lower(base.meet_of(pair).index) == maps.lower().meet_of(los).index);
          if (base.leq(c.index, e.index)) {
            CHECK(maps.upper().leq(maps.to_upper(c.index), maps.to_upper(e.index)));
            CHECK(maps.lower().leq(maps.to_lower(c.index), maps.to_lower(e.index)));
          }
        }
      }
    }
  }

  TEST_CASE("images against brute force") {
    gen::Rng rng(3);
    for (int t = 0; t < 200; ++t) {
      const auto ctx = gen::small_context(rng);
      const auto [space, blocks] = gen::partition(rng, ctx);
      const ConceptApproximationMaps maps(space, ctx);
      const auto rel = oracle::Relation::of(ctx);
      const auto up = oracle::approximate(rel, blocks, true);
      const auto lo = oracle::approximate(rel, blocks, false);
      for (const auto& c : maps.base().concepts()) {
        const auto b = gen::to_oracle(c.intent);
        CHECK(gen::to_oracle(maps.upper()[maps.to_upper(c.index)].extent) == oracle::extent(up, b));
        CHECK(gen::to_oracle(maps.lower()[maps.to_lower(c.index)].extent) == oracle::extent(lo, b));
      }
    }
  }

  TEST_CASE("possibility kernel matches the reference upper assignment") {
    const auto& maps = living_maps();
    const auto k = indiscernibility_kernels(maps);
    CHECK(k.possibility.size() == 9);
    CHECK(as_set(k.possibility) ==
          expected_fibers(living::reference_upper_assignment, maps.upper(), living::upper_labels));
  }

  TEST_CASE("necessity kernel matches the recomputed lower assignment") {
    const auto& maps = living_maps();
    const auto k = indiscernibility_kernels(maps);
    CHECK(k.necessity.size() == 10);
    CHECK(as_set(k.necessity) ==
          expected_fibers(living::corrected_lower_assignment, maps.lower(), living::lower_labels));

    // oracle: lower image straight from the lower matrix
    const auto lower_rel = oracle::Relation::of(living::from_rows(living::lower_rows));
    std::map<oracle::Set, std::set<std::size_t>> fibers;
    for (const auto& c : maps.base().concepts())
      fibers[oracle::extent(lower_rel, gen::to_oracle(c.intent))].insert(c.index);
    std::set<std::set<std::size_t>> expect, got;
    for (const auto& [ext, members] : fibers) expect.insert(members);
    for (const auto& f : k.necessity) got.emplace(f.members.begin(), f.members.end());
    CHECK(got == expect);

    // the listed fiber differs only by B_16 standing in for "B_19"
    const auto& reference_last = living::reference_lower_assignment.back().first;
    const auto& fixed_last = living::corrected_lower_assignment.back().first;
    CHECK(std::count(reference_last.begin(), reference_last.end(), 19) == 1);
    CHECK(std::count(fixed_last.begin(), fixed_last.end(), 16) == 1);
  }

  TEST_CASE("rough classes") {
    const auto& maps = living_maps();
    const auto classes = rough_concept_classes(maps);
    CHECK(classes.size() == 17);
    std::set<std::set<std::size_t>> multi;
    for (const auto& rc : classes) {
      CHECK(std::is_sorted(rc.members.begin(), rc.members.end()));
      for (auto m : rc.members) {
        CHECK(maps.to_upper(m) == rc.upper_image);
        CHECK(maps.to_lower(m) == rc.lower_image);
      }
      if (rc.members.size() > 1) multi.emplace(rc.members.begin(), rc.members.end());
    }
    CHECK(multi == std::set<std::set<std::size_t>>{{base_label(2), base_label(6)},
                                                   {base_label(13), base_label(16)}});
    for (std::size_t i = 1; i < classes.size(); ++i)
      CHECK(classes[i - 1].members.front() < classes[i].members.front());
  }

  TEST_CASE("concept orders") {
    const auto& maps = living_maps();
    const auto& b2 = maps.base()[base_label(2)];
    const auto& b6 = maps.base()[base_label(6)];
    const auto& b1 = maps.base()[base_label(1)];
    CHECK(concept_order(maps, b2, b6, ApproxMode::rough));
    CHECK(concept_order(maps, b6, b2, ApproxMode::rough));
    CHECK(concept_order(maps, b2, b1, ApproxMode::upper));
    CHECK(concept_order(maps, b1, b2, ApproxMode::upper));
    CHECK_FALSE(concept_order(maps, b1, b2, ApproxMode::lower));
    CHECK(concept_order(maps, b2, b1, ApproxMode::lower));
  }

  TEST_CASE("crispness") {
    gen::Rng rng(8);
    for (int t = 0; t < 100; ++t) {
      const auto seed_ctx = gen::small_context(rng);
      const auto [space, blocks] = gen::partition(rng, seed_ctx);
      const auto ctx = gen::definable_context(rng, space, gen::uniform(rng, 1, 6));
      const ConceptApproximationMaps maps(space, ctx);
      for (const auto& rc : rough_concept_classes(maps)) CHECK(rc.members.size() == 1);
      const ConceptApproximationMaps id(ApproximationSpace::identity(seed_ctx.objects()), seed_ctx);
      for (const auto& rc : rough_concept_classes(id)) CHECK(rc.members.size() == 1);
    }
  }
}
