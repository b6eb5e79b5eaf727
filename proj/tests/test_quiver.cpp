#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "repvar/fp.hpp"
#include "repvar/quiver.hpp"

using namespace repvar;

namespace {

Quiver kronecker() {
  return Quiver(2, {{"a", 1, 2}, {"b", 1, 2}});
}

// two vertices, arrows a1,a2: 1->2 and b1,b2,b3: 2->1
Quiver two_cycle() {
  return Quiver(2, {{"a1", 1, 2},
                    {"a2", 1, 2},
                    {"b1", 2, 1},
                    {"b2", 2, 1},
                    {"b3", 2, 1}});
}

Quiver local_loops(int r) {
  std::vector<Arrow> arrows;
  for (int i = 0; i < r; ++i)
    arrows.push_back({"l" + std::to_string(i + 1), 1, 1});
  return Quiver(1, arrows);
}

}  // namespace

TEST_CASE("quiver validation") {
  CHECK_THROWS(Quiver(2, {{"a", 1, 9}}));
  CHECK_THROWS(Quiver(2, {{"a", 0, 1}}));
  CHECK_THROWS(Quiver(2, {{"a", 1, 2}, {"a", 2, 1}}));
}

TEST_CASE("adjacency matrices") {
  auto a = two_cycle().adjacency_matrix();
  CHECK(a == std::vector<std::vector<int>>{{0, 2}, {3, 0}});
  auto z = Quiver(3, {}).adjacency_matrix();
  CHECK(z == std::vector<std::vector<int>>{{0, 0, 0}, {0, 0, 0}, {0, 0, 0}});
  auto k = kronecker().adjacency_matrix();
  CHECK(k == std::vector<std::vector<int>>{{0, 2}, {0, 0}});
}

TEST_CASE("euler form") {
  Quiver k = kronecker();
  CHECK(euler_form(k, DimVector({1, 1}), DimVector({1, 1})) == 0);
  CHECK(euler_form(k, DimVector({3, 5}), DimVector({0, 0})) == 0);
  CHECK(euler_form(k, DimVector({2, 2}), DimVector({2, 2})) == 0);
  CHECK(euler_form(k, DimVector({1, 0}), DimVector({1, 2})) == 1 - 4);
  CHECK_THROWS(euler_form(k, DimVector({1}), DimVector({1, 1})));
}

TEST_CASE("euler form is bilinear") {
  Quiver q = two_cycle();
  Rng rng(5);
  for (int t = 0; t < 200; ++t) {
    auto rnd = [&]() {
      return DimVector({static_cast<int>(rng.below(7)),
                        static_cast<int>(rng.below(7))});
    };
    DimVector d = rnd(), dp = rnd(), e = rnd();
    CHECK(euler_form(q, d.plus(dp), e) ==
          euler_form(q, d, e) + euler_form(q, dp, e));
    CHECK(euler_form(q, e, d.plus(dp)) ==
          euler_form(q, e, d) + euler_form(q, e, dp));
  }
}

TEST_CASE("separated quiver") {
  SUBCASE("local quiver becomes a generalized Kronecker quiver") {
    Quiver sep = local_loops(3).separated();
    CHECK(sep.n == 2);
    CHECK(sep.arrows.size() == 3);
    for (const Arrow& ar : sep.arrows) {
      CHECK(ar.source == 1);
      CHECK(ar.target == 2);
    }
    CHECK(sep.is_acyclic());
  }
  SUBCASE("no arrows gives isolated doubled vertices") {
    Quiver sep = Quiver(3, {}).separated();
    CHECK(sep.n == 6);
    CHECK(sep.arrows.empty());
  }
  SUBCASE("two-vertex cycle separates to 4 vertices") {
    Quiver sep = two_cycle().separated();
    CHECK(sep.n == 4);
    auto a = sep.adjacency_matrix();
    CHECK(a[0][3] == 2);  // 1 -> 2^
    CHECK(a[1][2] == 3);  // 2 -> 1^
    CHECK(sep.is_acyclic());
  }
  SUBCASE("block form [[0,A],[0,0]] for random quivers") {
    Rng rng(17);
    for (int t = 0; t < 50; ++t) {
      int n = 1 + static_cast<int>(rng.below(4));
      std::vector<Arrow> arrows;
      int m = static_cast<int>(rng.below(6));
      for (int i = 0; i < m; ++i)
        arrows.push_back({"x" + std::to_string(i),
                          1 + static_cast<int>(rng.below(n)),
                          1 + static_cast<int>(rng.below(n))});
      Quiver q(n, arrows);
      auto a = q.adjacency_matrix();
      auto s = q.separated().adjacency_matrix();
      for (int i = 0; i < 2 * n; ++i)
        for (int j = 0; j < 2 * n; ++j) {
          int expect = (i < n && j >= n) ? a[i][j - n] : 0;
          CHECK(s[i][j] == expect);
        }
    }
  }
}

TEST_CASE("hat and unhat dimension vectors") {
  DimVector t({1, 0}), d({2, 2});
  CHECK(hat_dim(t, d) == DimVector({1, 0, 1, 2}));
  CHECK(hat_dim(d, d) == DimVector({2, 2, 0, 0}));
  CHECK(unhat_dim(DimVector({1, 0, 1, 2})) == DimVector({2, 2}));
  CHECK_THROWS(hat_dim(DimVector({3, 0}), d));

  Rng rng(23);
  for (int i = 0; i < 200; ++i) {
    int n = 1 + static_cast<int>(rng.below(5));
    DimVector dd = DimVector::zeros(n), tt = DimVector::zeros(n);
    for (int j = 0; j < n; ++j) {
      dd[j] = static_cast<int>(rng.below(6));
      tt[j] = static_cast<int>(rng.below(dd[j] + 1));
    }
    CHECK(unhat_dim(hat_dim(tt, dd)) == dd);
  }
}

TEST_CASE("acyclicity and longest paths") {
  CHECK(kronecker().is_acyclic());
  CHECK(kronecker().longest_path_length() == 1);
  CHECK(!two_cycle().is_acyclic());
  CHECK(!local_loops(1).is_acyclic());
  Quiver chain(4, {{"a", 1, 2}, {"b", 2, 3}, {"c", 3, 4}, {"s", 1, 3}});
  CHECK(chain.longest_path_length() == 3);
  CHECK_THROWS(two_cycle().longest_path_length());
}

TEST_CASE("path enumeration") {
  TruncatedAlgebra a(two_cycle(), 3);
  SUBCASE("from a vertex with arrows") {
    auto paths = enumerate_paths(a, 2, 1);
    REQUIRE(paths.size() == 4);
    CHECK(paths[0].length() == 0);
    CHECK(paths[1].to_string(a.quiver) == "b1");
    CHECK(paths[2].to_string(a.quiver) == "b2");
    CHECK(paths[3].to_string(a.quiver) == "b3");
  }
  SUBCASE("length zero only") {
    auto paths = enumerate_paths(a, 1, 0);
    REQUIRE(paths.size() == 1);
    CHECK(paths[0] == Path::trivial(1));
  }
  SUBCASE("sink vertex of the Kronecker quiver") {
    TruncatedAlgebra k(kronecker(), 1);
    auto paths = enumerate_paths(k, 2, 1);
    REQUIRE(paths.size() == 1);
    CHECK(paths[0].length() == 0);
  }
  SUBCASE("counts match adjacency powers") {
    // number of length-l paths from i = i-th row sum of A^l
    auto adj = a.quiver.adjacency_matrix();
    for (int from = 1; from <= 2; ++from) {
      auto paths = enumerate_paths(a, from, 3);
      std::vector<std::vector<int>> pw{{1, 0}, {0, 1}};
      for (int l = 0; l <= 3; ++l) {
        int count = 0;
        for (const Path& pth : paths)
          if (pth.length() == l) ++count;
        int expect = pw[from - 1][0] + pw[from - 1][1];
        CHECK(count == expect);
        // pw = pw * adj
        std::vector<std::vector<int>> nx(2, std::vector<int>(2, 0));
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) nx[i][j] += pw[i][k] * adj[k][j];
        pw = nx;
      }
    }
  }
  SUBCASE("composition convention") {
    // path b1 then a1: starts at 2, ends at 2, renders function-style
    Path p{2, 1, {2}};  // b1
    Path q{1, 2, {0}};  // a1
    Path c = Path::compose(p, q);
    CHECK(c.start == 2);
    CHECK(c.end == 2);
    CHECK(c.to_string(a.quiver) == "a1*b1");
  }
}
