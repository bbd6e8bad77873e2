#include <doctest.h>

#include <random>
#include <set>
#include <tuple>

#include "ramsey/census.hpp"
#include "ramsey/constructions.hpp"
#include "ramsey/errors.hpp"
#include "test_support.hpp"

using namespace ramsey;
using ramsey::testing::random_k_coloring;
using ramsey::testing::random_permutation;

TEST_CASE("edge_index is lexicographic") {
  CHECK(edge_index(0, 1, 17) == 0);
  CHECK(edge_index(0, 16, 17) == 15);
  CHECK(edge_index(1, 2, 17) == 16);
  CHECK(edge_index(15, 16, 17) == 135);

  std::size_t expected = 0;
  for (int i = 0; i < 9; ++i)
    for (int j = i + 1; j < 9; ++j) {
      CHECK(edge_index(i, j, 9) == expected);
      CHECK(edge_endpoints(expected, 9) == Edge{i, j});
      ++expected;
    }
}

TEST_CASE("edge_index rejects invalid edges") {
  CHECK_THROWS_AS(edge_index(3, 3, 5), InvalidArgument);
  CHECK_THROWS_AS(edge_index(4, 2, 5), InvalidArgument);
  CHECK_THROWS_AS(edge_index(1, 5, 5), InvalidArgument);
  CHECK_THROWS_AS(edge_index(-1, 2, 5), InvalidArgument);
}

TEST_CASE("coloring length must match C(n,2)") {
  CHECK_THROWS_AS(EdgeColoring(4, std::vector<Color>(5, Color::Red)), InvalidArgument);
  CHECK_NOTHROW(EdgeColoring(4, std::vector<Color>(6, Color::Red)));
}

TEST_CASE("census of K3") {
  const TriangleCensus blue = census(EdgeColoring(3, Color::Blue));
  CHECK(blue.mono == MonoCounts{1, 0, 0});
  CHECK(blue.bichromatic == 0);
  CHECK(blue.rainbow == 0);
  REQUIRE(blue.mono_list.size() == 1);
  CHECK(blue.mono_list[0] == MonoTriangle{0, 1, 2, Color::Blue});

  const TriangleCensus rainbow = census(EdgeColoring(3, {Color::Blue, Color::Red, Color::Yellow}));
  CHECK(rainbow.mono == MonoCounts{0, 0, 0});
  CHECK(rainbow.bichromatic == 0);
  CHECK(rainbow.rainbow == 1);

  const TriangleCensus bi = census(EdgeColoring(3, {Color::Blue, Color::Blue, Color::Red}));
  CHECK(bi.bichromatic == 1);
}

TEST_CASE("degenerate sizes have an empty census") {
  for (int n : {1, 2}) {
    const TriangleCensus t = census(EdgeColoring(n, Color::Yellow));
    CHECK(t.total() == 0);
    CHECK(fast_mono_counts(EdgeColoring(n, Color::Yellow)) == MonoCounts{0, 0, 0});
  }
}

TEST_CASE("census conservation and mono_list consistency") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + trial % 15;
    const EdgeColoring c = random_k_coloring(n, 3, rng);
    const TriangleCensus t = census(c);
    CHECK(t.total() == num_triangles(n));
    CHECK(t.mono_list.size() == t.mono_total());
    CHECK(t.mono == ramsey::testing::matrix_mono_counts(c));
    for (std::size_t i = 0; i < t.mono_list.size(); ++i) {
      const auto& m = t.mono_list[i];
      CHECK(m.a < m.b);
      CHECK(m.b < m.c);
      CHECK(c.at(m.a, m.b) == m.color);
      CHECK(c.at(m.a, m.c) == m.color);
      CHECK(c.at(m.b, m.c) == m.color);
      if (i > 0) {
        const auto& p = t.mono_list[i - 1];
        CHECK(std::tie(p.a, p.b, p.c) < std::tie(m.a, m.b, m.c));
      }
    }
  }
}

TEST_CASE("fast_mono_counts agrees with the census") {
  CHECK(fast_mono_counts(EdgeColoring(3, Color::Red)) == MonoCounts{0, 1, 0});
  CHECK(fast_mono_counts(construct_gf16()) == MonoCounts{0, 0, 0});

  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 3 + trial % 22;
    const int k = 2 + trial % 2;
    const EdgeColoring c = random_k_coloring(n, k, rng);
    CHECK(fast_mono_counts(c) == census(c).mono);
  }
  // Full word width.
  const EdgeColoring big = random_k_coloring(64, 2, rng);
  CHECK(fast_mono_counts(big) == census(big).mono);
}

TEST_CASE("fast path enforces the word ceiling, census does not") {
  const EdgeColoring c(65, Color::Blue);
  CHECK_THROWS_AS(fast_mono_counts(c), CapacityError);
  CHECK(census(c).mono[0] == num_triangles(65));
}

TEST_CASE("permute_colors") {
  std::mt19937_64 rng(5);
  const EdgeColoring c = random_k_coloring(9, 3, rng);
  CHECK(permute_colors(c, ColorPermutation::identity()) == c);

  const EdgeColoring red(3, Color::Red);
  CHECK(permute_colors(red, ColorPermutation::cyclic()) == EdgeColoring(3, Color::Yellow));

  CHECK_THROWS_AS(ColorPermutation({Color::Blue, Color::Blue, Color::Red}), InvalidArgument);
}

TEST_CASE("color equivariance over all six permutations") {
  std::vector<ColorPermutation> perms;
  std::array<Color, 3> img = {Color::Blue, Color::Red, Color::Yellow};
  do {
    perms.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  REQUIRE(perms.size() == 6);

  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const EdgeColoring c = random_k_coloring(4 + trial % 10, 3, rng);
    const MonoCounts before = census(c).mono;
    for (const auto& pi : perms) {
      const MonoCounts after = census(permute_colors(c, pi)).mono;
      for (Color x : kAllColors) CHECK(after[to_index(pi(x))] == before[to_index(x)]);
    }
  }
}

TEST_CASE("permute_vertices") {
  std::mt19937_64 rng(7);
  const EdgeColoring c = random_k_coloring(8, 3, rng);
  std::vector<Vertex> id(8);
  std::iota(id.begin(), id.end(), 0);
  CHECK(permute_vertices(c, id) == c);

  auto swap = id;
  std::swap(swap[2], swap[5]);
  CHECK(permute_vertices(permute_vertices(c, swap), swap) == c);

  const auto rho = random_permutation(8, rng);
  const EdgeColoring moved = permute_vertices(c, rho);
  for (Vertex i = 0; i < 8; ++i)
    for (Vertex j = i + 1; j < 8; ++j) CHECK(moved.at(rho[i], rho[j]) == c.at(i, j));

  CHECK_THROWS_AS(permute_vertices(c, std::vector<Vertex>{0, 1, 2}), InvalidArgument);
  CHECK_THROWS_AS(permute_vertices(c, std::vector<Vertex>{0, 0, 2, 3, 4, 5, 6, 7}), InvalidArgument);
}

TEST_CASE("relabeling leaves the census unchanged") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + trial % 14;
    const EdgeColoring c = random_k_coloring(n, 3, rng);
    const TriangleCensus a = census(c);
    const TriangleCensus b = census(permute_vertices(c, random_permutation(n, rng)));
    CHECK(a.mono == b.mono);
    CHECK(a.bichromatic == b.bichromatic);
    CHECK(a.rainbow == b.rainbow);
  }
}

TEST_CASE("delete_vertex") {
  const EdgeColoring k3(3, Color::Blue);
  CHECK(delete_vertex(k3, 2) == EdgeColoring(2, Color::Blue));
  CHECK_THROWS_AS(delete_vertex(k3, 3), InvalidArgument);
  CHECK_THROWS_AS(delete_vertex(EdgeColoring(1), 0), InvalidArgument);

  const EdgeColoring g = construct_gf16();
  for (Vertex v = 0; v < 16; ++v) {
    const EdgeColoring k15 = delete_vertex(g, v);
    CHECK(k15.vertex_count() == 15);
    CHECK(census(k15).mono == MonoCounts{0, 0, 0});
  }

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + trial % 12;
    const EdgeColoring c = random_k_coloring(n, 3, rng);
    const Vertex v = static_cast<Vertex>(rng() % n);
    const EdgeColoring d = delete_vertex(c, v);
    for (Vertex i = 0; i + 1 < n; ++i)
      for (Vertex j = i + 1; j + 1 < n; ++j)
        CHECK(d.at(i, j) == c.at(i < v ? i : i + 1, j < v ? j : j + 1));
    const MonoCounts before = census(c).mono;
    const MonoCounts after = census(d).mono;
    for (int x = 0; x < 3; ++x) CHECK(after[x] <= before[x]);
  }
}

TEST_CASE("color_degree_profile") {
  CHECK(color_degree_profile(EdgeColoring(3, Color::Blue), 0) == std::array<int, 3>{2, 0, 0});
  CHECK_THROWS_AS(color_degree_profile(EdgeColoring(3), 3), InvalidArgument);

  const EdgeColoring g = construct_gf16();
  for (Vertex v = 0; v < 16; ++v) CHECK(color_degree_profile(g, v) == std::array<int, 3>{5, 5, 5});

  // Handshake per color class.
  std::mt19937_64 rng(4);
  const EdgeColoring c = random_k_coloring(13, 3, rng);
  std::array<int, 3> sum{};
  for (Vertex v = 0; v < 13; ++v) {
    const auto p = color_degree_profile(c, v);
    CHECK(p[0] + p[1] + p[2] == 12);
    for (int x = 0; x < 3; ++x) sum[x] += p[x];
  }
  std::array<int, 3> edges{};
  for (Color x : c.colors()) ++edges[to_index(x)];
  for (int x = 0; x < 3; ++x) CHECK(sum[x] == 2 * edges[x]);
}

TEST_CASE("fingerprint") {
  std::mt19937_64 rng(21);
  const EdgeColoring c = random_k_coloring(10, 3, rng);
  CHECK(fingerprint(c) == fingerprint(c));
  CHECK(fingerprint(c) == fingerprint(permute_vertices(c, random_permutation(10, rng))));
  CHECK(fingerprint(EdgeColoring(3, Color::Blue)) != fingerprint(EdgeColoring(3, Color::Red)));

  const std::string gf = fingerprint(construct_gf16());
  for (int trial = 0; trial < 10; ++trial) {
    const EdgeColoring r = random_k_coloring(16, 3, rng);
    if (census(r).mono_total() > 0) CHECK(fingerprint(r) != gf);
  }
}
