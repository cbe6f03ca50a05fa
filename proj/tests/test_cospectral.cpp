#include <doctest.h>

#include <map>
#include <set>

#include "exspec/cospectral.hpp"

using namespace exspec;

namespace {
using D = FamilyDescriptor;

const CospectralWitness* find_partner(const std::vector<CospectralWitness>& ws, const D& d) {
  for (const auto& w : ws)
    if (w.right.desc == d) return &w;
  return nullptr;
}
}  // namespace

TEST_CASE("paddings equalize multiplicities") {
  auto p = equalizing_paddings(D::type_I(3, 4), D::type_II(2, 2));
  REQUIRE(p);
  CHECK(*p == std::pair<std::size_t, std::size_t>{0, 1});
  p = equalizing_paddings(D::type_I(3, 6), D::type_II(3, 2));
  REQUIRE(p);
  CHECK(*p == std::pair<std::size_t, std::size_t>{0, 2});
  p = equalizing_paddings(D::type_I(1, 81), D::type_VIII(4, 10));
  REQUIRE(p);
  CHECK(*p == std::pair<std::size_t, std::size_t>{0, 70});
  CHECK_FALSE(equalizing_paddings(D::type_I(3, 4), D::type_I(3, 5)));
}

TEST_CASE("listed cospectral pairs certify") {
  auto ws = cospectral_mates(D::type_I(3, 4));
  auto w = find_partner(ws, D::type_II(2, 2));
  REQUIRE(w);
  CHECK(w->certified());
  CHECK(w->left.beta == 0);
  CHECK(w->right.beta == 1);
  CHECK(w->relation == MateRelation::ThreeProduct);
  CHECK(w->method == NonIsomorphismMethod::CanonicalForm);

  ws = cospectral_mates(D::type_I(5, 5));
  w = find_partner(ws, D::type_IV(3));
  REQUIRE(w);
  CHECK(w->certified());
  CHECK(w->right.beta == 1);
  CHECK(w->relation == MateRelation::FiveEighths);

  ws = cospectral_mates(D::type_II(6, 2));
  w = find_partner(ws, D::type_II(4, 3));
  REQUIRE(w);
  CHECK(w->certified());
  // orders 24 and 21
  CHECK(w->left.beta == 0);
  CHECK(w->right.beta == 1);
  CHECK(w->relation == MateRelation::EqualProduct);
}

TEST_CASE("the order-244 pair certifies by component structure") {
  const auto w = certify_pair({D::type_I(1, 81), 0}, {D::type_VIII(4, 10), 70});
  CHECK(w.orders_equal);
  CHECK(w.char_poly_equal);
  CHECK(w.non_isomorphic);
  CHECK(w.method == NonIsomorphismMethod::ComponentStructure);
  CHECK(w.relation == MateRelation::Sporadic);
  CHECK(w.shared_char_poly.degree() == 244);
}

TEST_CASE("a non-pair fails certification") {
  const auto w = certify_pair({D::type_I(3, 4), 0}, {D::type_I(3, 4), 0});
  CHECK(w.char_poly_equal);
  CHECK_FALSE(w.non_isomorphic);
  CHECK_FALSE(w.certified());
  CHECK_FALSE(certify_pair({D::type_I(3, 4), 0}, {D::type_I(4, 4), 0}).certified());
}

TEST_CASE("determined-by-spectrum verdicts") {
  auto v = is_determined_by_spectrum(D::type_I(3, 7));
  CHECK(v.is_ds);
  CHECK_FALSE(v.exception);
  CHECK(v.consistent);

  // no divisor of 8 strictly between 2 and 4, but I(3,8) is a mate
  v = is_determined_by_spectrum(D::type_II(4, 2));
  CHECK_FALSE(v.exception);
  CHECK_FALSE(v.is_ds);
  CHECK(v.partner_side);
  CHECK(find_partner(v.witnesses, D::type_I(3, 8)));

  v = is_determined_by_spectrum(D::type_II(6, 2));
  CHECK_FALSE(v.is_ds);
  CHECK(v.exception == MateRelation::EqualProduct);
  CHECK(find_partner(v.witnesses, D::type_II(4, 3)));
  CHECK(v.consistent);

  v = is_determined_by_spectrum(D::type_I(3, 6));
  CHECK_FALSE(v.is_ds);
  const auto* w = find_partner(v.witnesses, D::type_II(3, 2));
  REQUIRE(w);
  CHECK(w->right.beta == 2);

  v = is_determined_by_spectrum(D::type_I(1, 81));
  CHECK_FALSE(v.is_ds);
  CHECK(v.exception == MateRelation::Sporadic);
  CHECK(v.consistent);
  REQUIRE(v.witnesses.size() == 1);
  CHECK(v.witnesses[0].right == PaddedDescriptor{D::type_VIII(4, 10), 70});

  // partner side: not named by a predicate, still has a mate
  v = is_determined_by_spectrum(D::type_VIII(4, 10));
  CHECK_FALSE(v.is_ds);
  CHECK_FALSE(v.exception);
  CHECK(v.partner_side);
  CHECK(v.consistent);
  CHECK_FALSE(v.note.empty());
}

TEST_CASE("friendship summaries") {
  CHECK(friendship_ds_summary(1, 80).is_ds);
  auto v = friendship_ds_summary(5, 13);
  CHECK_FALSE(v.is_ds);
  CHECK(find_partner(v.witnesses, D::type_IV(8)));
  for (int k = 2; k <= 20; ++k) CHECK(friendship_ds_summary(2, k).is_ds);
  CHECK_THROWS_AS(friendship_ds_summary(D::friendship(5, 1, 3)), DescriptorError);
}

TEST_CASE("predicates agree with witness search") {
  for (const auto& d : catalog_descriptors(40)) {
    const auto v = is_determined_by_spectrum(d);
    INFO(to_string(d) << " " << v.note);
    CHECK(v.consistent);
    CHECK(v.is_ds == v.witnesses.empty());
    if (v.exception) CHECK_FALSE(v.is_ds);
  }
}

TEST_CASE("exhaustive pair search equals the listed equations") {
  const std::size_t bound = 120;
  const auto all = catalog_descriptors(bound);
  std::map<std::pair<long, long>, std::vector<D>> by_residual;
  for (const auto& d : all) {
    const auto s = claimed_spectrum(d);
    by_residual[{s.trace, s.det}].push_back(d);
  }
  std::set<std::pair<D, D>> searched, listed;
  for (const auto& [key, group] : by_residual)
    for (const auto& x : group)
      for (const auto& y : group)
        if (x < y && equalizing_paddings(x, y)) searched.insert({x, y});
  for (const auto& x : all)
    for (const auto& y : equation_partners(x, bound))
      if (x < y) listed.insert({x, y});
      else listed.insert({y, x});
  CHECK(searched.size() == listed.size());
  CHECK(searched == listed);
  CHECK(searched.size() > 50);
}
