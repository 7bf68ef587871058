#include <doctest.h>

#include "flagcx/complex.hpp"
#include "flagcx/error.hpp"
#include "flagcx/graph.hpp"
#include "flagcx/homology.hpp"
#include "helpers.hpp"

using namespace flagcx;
using testing::cx;
using testing::fv;

TEST_SUITE("complex") {
  TEST_CASE("generate closes under subsets") {
    CHECK(f_vector(cx({{1, 2, 3}})) == fv({1, 3, 3, 1}));
    CHECK(f_vector(generate({Face{}})) == fv({1}));
    CHECK(f_vector(cx({{1, 2}, {2, 3}, {1, 4}, {3, 4}})) == fv({1, 4, 4}));
    CHECK(generate({Face{}}) == Complex());
  }

  TEST_CASE("from_faces rejects non-closed families") {
    CHECK_THROWS_AS(Complex::from_faces({Face::of({1, 2})}), Error);
    CHECK(Complex::from_faces({Face::of({1}), Face::of({2}), Face::of({1, 2})}) == cx({{1, 2}}));
  }

  TEST_CASE("faces reject repeated vertices") {
    CHECK_THROWS_AS(Face::of({1, 1}), Error);
    CHECK_THROWS_AS(Vertex::plain(0), Error);
  }

  TEST_CASE("vertex order matches the integer order of the canonical partition") {
    // 1 = u_{1,1}, 2 = u_{2,1}, 3 = u_{1,2}, 4 = u_{2,2} for d = 2.
    CHECK(Vertex::colored(1, 1) < Vertex::colored(2, 1));
    CHECK(Vertex::colored(2, 1) < Vertex::colored(1, 2));
    CHECK(Vertex::colored(1, 2) < Vertex::colored(2, 2));
    CHECK(parse_vertex("2.3") == Vertex::colored(2, 3));
    CHECK(to_string(Vertex::colored(2, 3)) == "2.3");
  }

  TEST_CASE("h-vectors") {
    CHECK(h_vector(fv({1, 4, 4})).entries() == testing::big({1, 2, 1}));
    CHECK(h_vector(fv({1, 4, 6, 4, 1})).entries() == testing::big({1, 0, 0, 0, 0}));
    CHECK(h_vector(f_vector(turan_complex(4, 2))).entries() == f_vector(turan_complex(2, 2)).entries());
    for (const auto& f : {fv({1, 7, 16, 12}), fv({1, 5, 6}), fv({1, 3})}) CHECK(f_from_h(h_vector(f)) == f);
  }

  TEST_CASE("links, stars and induced subcomplexes") {
    const auto c4 = cx({{1, 2}, {2, 3}, {1, 4}, {3, 4}});
    CHECK(link(c4, Face::of({1})) == cx({{2}, {4}}));
    CHECK(antistar(cx({{1, 2, 3}}), Face::of({1})) == cx({{2, 3}}));
    const std::vector<Vertex> w{Vertex::plain(1), Vertex::plain(2)};
    CHECK(induced(c4, w) == cx({{1, 2}}));
    CHECK(closed_star(c4, Face::of({1})) == cx({{1, 2}, {1, 4}}));
    CHECK_THROWS_AS(link(c4, Face::of({1, 3})), Error);
  }

  TEST_CASE("joins and cones") {
    const auto two = cx({{1}, {2}});
    const auto other = cx({{3}, {4}});
    const auto c4 = join(two, other);
    CHECK(f_vector(c4) == fv({1, 4, 4}));
    CHECK(is_flag(c4));
    CHECK_THROWS_AS(join(two, two), Error);
    const auto cone4 = cone(c4, Vertex::plain(9));
    const auto cone_betti = betti_vector(cone4);
    for (auto b : cone_betti.entries()) CHECK(b == 0);
    // The join of d two-point complexes is the Turán complex T_d(2d).
    auto acc = cx({{1}, {2}});
    for (int i = 1; i < 3; ++i) acc = join(acc, cx({{2 * i + 1}, {2 * i + 2}}));
    CHECK(f_vector(acc) == f_vector(turan_complex(6, 3)));
  }

  TEST_CASE("union and intersection") {
    const auto a = cx({{1, 2}});
    const auto b = cx({{2, 3}});
    CHECK(unite(a, b) == cx({{1, 2}, {2, 3}}));
    CHECK(intersect(a, b) == cx({{2}}));
  }

  TEST_CASE("facet-free reduction") {
    const auto pure = cx({{1, 2}, {2, 3}});
    CHECK(facet_free_reduction(pure, {0}) == pure);
    CHECK(facet_free_reduction(cx({{1, 2}, {3}}), {0}) == cx({{1, 2}}));
    // A hollow tetrahedron with a pendant edge: removing 1-dim facets keeps b_2.
    auto sphere = cx({{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}, {4, 5}});
    const auto reduced = facet_free_reduction(sphere, {1});
    CHECK(reduced == cx({{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}, {5}}));
    CHECK(betti(reduced, 2) == betti(sphere, 2));
  }

  TEST_CASE("purity") {
    CHECK(is_pure(cx({{1, 2}, {2, 3}})));
    CHECK_FALSE(is_pure(cx({{1, 2}, {3}})));
    CHECK(is_pure(Complex()));
  }
}
