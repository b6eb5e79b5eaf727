#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>

#include "repvar/hereditary.hpp"

using namespace repvar;

namespace {

Quiver kronecker() { return Quiver(2, {{"a", 1, 2}, {"b", 1, 2}}); }
Quiver a2() { return Quiver(2, {{"a", 1, 2}}); }

// Exhaustive oracle over F_3: minimum of dim Hom - Euler over all pairs of
// representations with the given dimension vectors. Independent of the
// sampling estimator.
int brute_force_ext(const Quiver& q, const DimVector& d1,
                    const DimVector& d2) {
  const uint32_t p = 3;
  TruncatedAlgebra a = hereditary_algebra(q);
  auto all_reps = [&](const DimVector& d) {
    std::vector<Representation> out;
    std::vector<FpMat> mats;
    size_t entries = 0;
    for (const Arrow& ar : q.arrows) {
      mats.emplace_back(p, d[ar.target - 1], d[ar.source - 1]);
      entries += mats.back().a.size();
    }
    std::function<void(size_t, size_t)> rec = [&](size_t mi, size_t ei) {
      if (mi == mats.size()) {
        out.emplace_back(a, p, d, mats);
        return;
      }
      if (ei == mats[mi].a.size()) {
        rec(mi + 1, 0);
        return;
      }
      for (uint32_t v = 0; v < p; ++v) {
        mats[mi].a[ei] = v;
        rec(mi, ei + 1);
      }
    };
    rec(0, 0);
    return out;
  };
  long long euler = euler_form(q, d1, d2);
  long long best = -1;
  for (const Representation& m : all_reps(d1))
    for (const Representation& n : all_reps(d2)) {
      long long e = hom_dim(m, n) - euler;
      if (best < 0 || e < best) best = e;
    }
  return static_cast<int>(best);
}

}  // namespace

TEST_CASE("sampling representations") {
  SUBCASE("zero dimension vector") {
    Rng rng(1);
    Representation m =
        sample_hereditary(kronecker(), DimVector({0, 0}), 10007, rng);
    CHECK(m.dim.total() == 0);
  }
  SUBCASE("two seeds give distinct Kronecker parameter ratios") {
    Rng r1(5), r2(6);
    Representation m = sample_hereditary(kronecker(), DimVector({1, 1}),
                                         10007, r1);
    Representation n = sample_hereditary(kronecker(), DimVector({1, 1}),
                                         10007, r2);
    uint64_t ratio_m = static_cast<uint64_t>(m.matrices[0].at(0, 0)) * 100000 +
                       m.matrices[0].at(0, 0);
    (void)ratio_m;
    // distinct modules: Hom = 0
    CHECK(hom_dim(m, n) == 0);
  }
  SUBCASE("long chain is generically uniserial at p = 10007") {
    Quiver q(7, {{"a1", 1, 2}, {"a2", 2, 3}, {"a3", 3, 4}, {"a4", 4, 5},
                 {"a5", 5, 6}, {"a6", 6, 7}, {"b1", 1, 3}, {"b2", 2, 4},
                 {"b3", 3, 5}, {"b4", 4, 6}, {"b5", 5, 7}});
    DimVector d({1, 1, 1, 1, 1, 1, 1});
    SemisimpleSequence expect = generic_radical_layering_hereditary(q, d);
    for (uint64_t seed : {11u, 12u, 13u}) {
      Rng rng(seed);
      Representation m = sample_hereditary(q, d, 10007, rng);
      CHECK(radical_layering(m) == expect);
    }
  }
  SUBCASE("cyclic sampling is rejected when truncation fails") {
    Quiver loop(1, {{"l", 1, 1}});
    TruncatedAlgebra a(loop, 2);
    Rng rng(3);
    CHECK_THROWS(sample_representation(a, DimVector({3}), 10007, rng, true));
  }
}

TEST_CASE("generic ext") {
  Quiver k = kronecker();
  CHECK(generic_ext(k, DimVector({2, 2}), DimVector({0, 0}), 4, 32003, 1) ==
        0);
  CHECK(generic_ext(k, DimVector({1, 1}), DimVector({1, 1}), 12, 32003, 1) ==
        0);
  CHECK(generic_ext(k, DimVector({1, 0}), DimVector({1, 2}), 12, 32003, 1) >
        0);

  SUBCASE("estimator matches the exhaustive F_3 oracle on small cases") {
    std::vector<std::pair<DimVector, DimVector>> cases = {
        {DimVector({1, 0}), DimVector({1, 2})},
        {DimVector({2, 0}), DimVector({0, 2})},
        {DimVector({2, 1}), DimVector({0, 1})},
        {DimVector({1, 1}), DimVector({1, 1})},
        {DimVector({1, 2}), DimVector({1, 0})},
        {DimVector({0, 1}), DimVector({2, 1})},
    };
    for (const auto& [d1, d2] : cases) {
      int oracle = brute_force_ext(k, d1, d2);
      int est = generic_ext(k, d1, d2, 12, 32003, 7);
      CHECK(est == oracle);
    }
    CHECK(brute_force_ext(k, DimVector({1, 0}), DimVector({1, 2})) == 3);
  }

  SUBCASE("monotone non-increasing in the sample count") {
    Rng rng(17);
    for (int t = 0; t < 200; ++t) {
      DimVector d1({static_cast<int>(rng.below(3)),
                    static_cast<int>(rng.below(3))});
      DimVector d2({static_cast<int>(rng.below(3)),
                    static_cast<int>(rng.below(3))});
      uint64_t seed = rng.next();
      int e1 = generic_ext(k, d1, d2, 1, 101, seed);
      int e3 = generic_ext(k, d1, d2, 3, 101, seed);
      int e9 = generic_ext(k, d1, d2, 9, 101, seed);
      CHECK(e1 >= e3);
      CHECK(e3 >= e9);
    }
  }
}

TEST_CASE("generically attained submodule dimension vectors") {
  Quiver k = kronecker();
  auto sub = sub_dimension_vectors(k, DimVector({2, 2}), 12, 32003, 1);
  auto has = [&](std::vector<int> v) {
    return std::find(sub.begin(), sub.end(), DimVector(v)) != sub.end();
  };
  CHECK(sub.size() == 6);
  CHECK(has({0, 0}));
  CHECK(has({2, 2}));
  CHECK(has({1, 1}));
  CHECK(has({1, 2}));
  CHECK(has({0, 1}));
  CHECK(has({0, 2}));
  CHECK(!has({1, 0}));
  CHECK(!has({2, 0}));
  CHECK(!has({2, 1}));
}

TEST_CASE("schur roots") {
  Quiver k = kronecker();
  CHECK(is_schur_root(k, DimVector({1, 0}), 8, 32003, 1));
  CHECK(is_schur_root(k, DimVector({0, 1}), 8, 32003, 1));
  CHECK(is_schur_root(k, DimVector({1, 1}), 8, 32003, 1));
  CHECK(!is_schur_root(k, DimVector({2, 2}), 8, 32003, 1));
}

TEST_CASE("canonical decomposition") {
  SUBCASE("Kronecker (2,2) = (1,1) + (1,1)") {
    CanonicalDecomposition cd =
        canonical_decomposition(kronecker(), DimVector({2, 2}), 12, 32003, 1);
    CHECK(cd.verified);
    REQUIRE(cd.summands.size() == 1);
    CHECK(cd.summands[0].first == DimVector({1, 1}));
    CHECK(cd.summands[0].second == 2);
    CHECK(mu_generic_params(kronecker(), cd) == 2);
  }
  SUBCASE("a unit vector decomposes as itself") {
    CanonicalDecomposition cd =
        canonical_decomposition(kronecker(), DimVector({1, 0}), 8, 32003, 2);
    CHECK(cd.verified);
    REQUIRE(cd.summands.size() == 1);
    CHECK(cd.summands[0].first == DimVector({1, 0}));
    CHECK(cd.summands[0].second == 1);
    CHECK(mu_generic_params(kronecker(), cd) == 0);
  }
  SUBCASE("A_2 at (1,1) is a single summand with a dense orbit") {
    CanonicalDecomposition cd =
        canonical_decomposition(a2(), DimVector({1, 1}), 8, 32003, 3);
    CHECK(cd.verified);
    REQUIRE(cd.summands.size() == 1);
    CHECK(cd.summands[0].first == DimVector({1, 1}));
    CHECK(cd.summands[0].second == 1);
    CHECK(mu_generic_params(a2(), cd) == 0);
  }
  SUBCASE("summands sum to the input") {
    Rng rng(23);
    for (int t = 0; t < 20; ++t) {
      DimVector d({1 + static_cast<int>(rng.below(3)),
                   1 + static_cast<int>(rng.below(3))});
      CanonicalDecomposition cd =
          canonical_decomposition(kronecker(), d, 12, 32003, rng.next());
      CHECK(cd.total(2) == d);
    }
  }
}

TEST_CASE("generalized Kronecker separated transfer sanity") {
  // 3 loops separate to the 3-arrow Kronecker quiver; (1,1) is a Schur
  // root there but has self-extensions, so (2,2) stays indecomposable.
  Quiver k3(2, {{"l1", 1, 2}, {"l2", 1, 2}, {"l3", 1, 2}});
  CHECK(is_schur_root(k3, DimVector({1, 1}), 8, 32003, 5));
  CHECK(generic_ext(k3, DimVector({1, 1}), DimVector({1, 1}), 12, 32003, 5) ==
        1);
  CanonicalDecomposition cd =
      canonical_decomposition(k3, DimVector({2, 2}), 12, 32003, 5);
  CHECK(cd.verified);
  REQUIRE(cd.summands.size() == 1);
  CHECK(cd.summands[0].first == DimVector({2, 2}));
  CHECK(cd.summands[0].second == 1);
}
