#include <algorithm>
#include <map>

#include "doctest.h"
#include "exspec/canonical.hpp"
#include "exspec/families.hpp"

using namespace exspec;

TEST_CASE("descriptor text round trip") {
  for (const char* s : {"I(a=5,k=7)", "II(k=6,l=2)", "III(m=4)", "IV(k=3)", "V(a=2,b=9)", "VI(a=42,b=10)",
                        "VII(a=6,m=3)", "VIII(a=4,k=10)", "IX(a=3,k=4)", "F(t=4,r=1,k=2)"})
    CHECK(to_string(parse_descriptor(s)) == s);
  CHECK(parse_descriptor("VIII(4,10)") == FamilyDescriptor::type_VIII(4, 10));
  CHECK(parse_descriptor(" II ( l=2 , k=6 ) ") == FamilyDescriptor::type_II(6, 2));
  CHECK(parse_descriptor("II(k=6,\xE2\x84\x93=2)") == FamilyDescriptor::type_II(6, 2));
  for (const char* bad : {"I(a=0,k=2)", "I(a=1,k=1)", "II(k=2,l=3)", "III(m=2)", "V(a=2,b=8)", "X(a=1)",
                          "I(a=1)", "I(a=1,k=2", "I(a=x,k=2)", "I(a=1,a=2)", "I(a=1,q=2)", "F(t=3,r=0,k=2)"})
    CHECK_THROWS_AS(parse_descriptor(bad), DescriptorError);
}

TEST_CASE("orders") {
  CHECK(order(FamilyDescriptor::type_I(1, 2)) == 7);
  CHECK(order(FamilyDescriptor::type_II(4, 3)) == 21);
  CHECK(order(FamilyDescriptor::type_III(3)) == 9);
  CHECK(order(FamilyDescriptor::type_IV(3)) == 17);
  CHECK(order(FamilyDescriptor::type_V(2, 9)) == 13);
  CHECK(order(FamilyDescriptor::type_VI(7, 45)) == 53);
  CHECK(order(FamilyDescriptor::type_VII(4, 4)) == 16);
  CHECK(order(FamilyDescriptor::type_VIII(4, 10)) == 34);
  CHECK(order(FamilyDescriptor::type_IX(3, 4)) == 16);
  CHECK(order(FamilyDescriptor::friendship(4, 1, 2)) == 7);
  for (const auto& d : catalog_descriptors(60)) CHECK(build_family(d).order() == order(d));
}

TEST_CASE("blocks") {
  Block t6 = build_block(BlockKind::T, 6);
  Graph two_triangles = pad_with_triangles(Graph::complete(3), 1);
  CHECK(t6.to_matrix() == two_triangles.adjacency_matrix());
  CHECK(build_block(BlockKind::R, 4).to_matrix() == disjoint_union(Graph::complete(2), Graph::complete(2)).adjacency_matrix());
  Block s6 = build_block(BlockKind::S, 6);
  REQUIRE(s6.rows == 6);
  REQUIRE(s6.cols == 3);
  for (std::size_t j = 0; j < 3; ++j) {
    int col = 0;
    for (std::size_t i = 0; i < 6; ++i) col += s6(i, j);
    CHECK(col == 2);
  }
  for (std::size_t i = 0; i < 6; ++i) {
    int row = 0;
    for (std::size_t j = 0; j < 3; ++j) row += s6(i, j);
    CHECK(row == 1);
  }
  CHECK_THROWS(build_block(BlockKind::T, 4));
  CHECK_THROWS(build_block(BlockKind::J, 0));
  // an asymmetric assembly is rejected
  Block s = build_block(BlockKind::S, 4).complement();
  CHECK_THROWS_AS(assemble_blocks({{build_block(BlockKind::R, 4), s}, {s, block_zero(2, 2)}}), std::logic_error);
}

TEST_CASE("family structure") {
  Graph g = build_family(FamilyDescriptor::type_I(1, 2));
  CHECK(g.order() == 7);
  CHECK(are_isomorphic(g, build_family(FamilyDescriptor::friendship(4, 1, 2))));
  std::vector<std::size_t> block{0, 1, 2, 3};
  CHECK(induced_subgraph(g, block) == Graph::complete(4));

  g = build_family(FamilyDescriptor::type_III(3));
  std::vector<std::size_t> deg;
  for (std::size_t v = 0; v < g.order(); ++v) deg.push_back(g.degree(v));
  CHECK(deg == std::vector<std::size_t>{3, 3, 3, 3, 3, 3, 4, 4, 4});

  for (const auto& d : catalog_descriptors(60)) CHECK(is_connected(build_family(d)));

  for (int a = 1; a <= 8; ++a)
    for (int k = 2; k <= 8; ++k)
      CHECK(are_isomorphic(build_family(FamilyDescriptor::type_I(a, k)), build_family(FamilyDescriptor::friendship(a + 3, a, k))));
  CHECK(normalize(FamilyDescriptor::friendship(5, 2, 3)) == FamilyDescriptor::type_I(2, 3));
  CHECK_FALSE(in_catalog(FamilyDescriptor::friendship(5, 1, 3)));
}

TEST_CASE("claimed spectra") {
  auto s = claimed_spectrum(FamilyDescriptor::type_I(1, 2));
  CHECK(s == ClaimedSpectrum{1, 4, 2, -6});
  CHECK(claimed_spectrum(FamilyDescriptor::type_II(2, 2)) == ClaimedSpectrum{2, 8, 4, -32});
  CHECK(claimed_spectrum(FamilyDescriptor::type_VIII(4, 10)) == ClaimedSpectrum{10, 22, 2, -243});
  // roots 3 +- sqrt 76
  CHECK(claimed_spectrum(FamilyDescriptor::type_I(5, 5)) == ClaimedSpectrum{4, 14, 6, 9 - 76});
  CHECK_THROWS_AS(claimed_spectrum(FamilyDescriptor::friendship(5, 1, 3)), DescriptorError);
  for (const auto& d : catalog_descriptors(60)) {
    auto c = claimed_spectrum(d);
    CHECK(c.p + c.q + 2 == order(d));
    CHECK(2 * static_cast<std::int64_t>(c.p) - static_cast<std::int64_t>(c.q) + c.trace == 0);
  }
}

TEST_CASE("certification of small members") {
  for (const auto& d : catalog_descriptors(30)) {
    auto rep = certify_family(d);
    INFO(to_string(d), " ", rep.message);
    CHECK(rep.passed());
  }
  for (const auto& d : sporadic_descriptors()) CHECK(certify_family(d).passed());
  CHECK(sporadic_descriptors().size() == 20);
}
