#include <algorithm>
#include <random>

#include "doctest.h"
#include "sphercat/dg_core.hpp"
#include "sphercat/error.hpp"
#include "support/random_modules.hpp"

using namespace sphercat;
using sphercat::testing::assemble;
using sphercat::testing::contractible_pair;
using sphercat::testing::random_base_change;
using sphercat::testing::random_labels;

namespace {

std::map<int, std::size_t> dims(const DgModule& m) { return m.support(); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected sphercat::Error");
  return ErrorCode::parse_error;
}

// e (deg 0), Te (deg 1), f (deg 2) with ∂f = Te over w = 2: the resolution
// of X_0 cut off above degree 2.
DgModule truncated_resolution() {
  const auto a = make_algebra(2);
  GradedMaps diff;
  diff.emplace(2, Matrix::from_rows(a.field, {{1}}));
  GradedMaps tmul;
  tmul.emplace(0, Matrix::from_rows(a.field, {{1}}));
  return DgModule(a, {{0, 1}, {1, 1}, {2, 1}}, std::move(diff), std::move(tmul));
}

std::map<int, std::size_t> add_dims(const std::map<int, std::size_t>& a, const std::map<int, std::size_t>& b) {
  auto out = a;
  for (const auto& [n, k] : b) out[n] += k;
  return out;
}

}  // namespace

TEST_CASE("make_algebra sets d = w - 1") {
  CHECK(make_algebra(2).d == 1);
  CHECK(make_algebra(0).d == -1);
  CHECK(make_algebra(1).d == 0);
  CHECK(make_algebra(-3, 5).field.prime() == 5);
  CHECK(code_of([] { make_algebra(2, 4); }) == ErrorCode::not_prime);
}

TEST_CASE("make_indec_module") {
  SUBCASE("w=2, X_1") {
    const auto m = make_indec_module(make_algebra(2), {0, 1});
    CHECK(dims(m) == std::map<int, std::size_t>{{0, 1}, {1, 1}});
    CHECK(m.tmul(0) == Matrix::from_rows(m.algebra().field, {{1}}));
    CHECK(m.diff(1).is_zero());
    CHECK(validate_module(m).ok);
  }
  SUBCASE("w=0, Σ^3 X_0") {
    const auto m = make_indec_module(make_algebra(0), {3, 0});
    CHECK(dims(m) == std::map<int, std::size_t>{{3, 1}});
    CHECK(m.tmul(3).rows() == 0);
    CHECK(validate_module(m).ok);
  }
  SUBCASE("w=1, X_2 is a nilpotent Jordan block of size 3") {
    const auto m = make_indec_module(make_algebra(1), {0, 2});
    CHECK(dims(m) == std::map<int, std::size_t>{{0, 3}});
    CHECK(m.tmul_power(0, 3).is_zero());
    CHECK_FALSE(m.tmul_power(0, 2).is_zero());
    CHECK(validate_module(m).ok);
  }
  SUBCASE("w=-2 places the chain at decreasing degrees") {
    const auto m = make_indec_module(make_algebra(-2), {1, 2});
    CHECK(dims(m) == std::map<int, std::size_t>{{-5, 1}, {-2, 1}, {1, 1}});
  }
}

TEST_CASE("direct_sum") {
  const auto a = make_algebra(2);
  CHECK(direct_sum(a, {}).is_zero());
  const std::vector<DgModule> two_x0{make_indec_module(a, {0, 0}), make_indec_module(a, {0, 0})};
  CHECK(dims(direct_sum(a, two_x0)) == std::map<int, std::size_t>{{0, 2}});
  const std::vector<DgModule> mixed{make_indec_module(a, {0, 1}), make_indec_module(a, {1, 0})};
  const auto s = direct_sum(a, mixed);
  CHECK(dims(s) == std::map<int, std::size_t>{{0, 1}, {1, 2}});
  CHECK(validate_module(s).ok);
  const std::vector<DgModule> clash{make_indec_module(a, {0, 0}), make_indec_module(make_algebra(3), {0, 0})};
  CHECK(code_of([&] { direct_sum(a, clash); }) == ErrorCode::algebra_mismatch);
}

TEST_CASE("module constructor checks shapes") {
  const auto a = make_algebra(2);
  GradedMaps diff;
  diff.emplace(1, Matrix::identity(a.field, 2));
  CHECK(code_of([&] { DgModule(a, {{0, 1}, {1, 1}}, diff, {}); }) == ErrorCode::shape_mismatch);
}

TEST_CASE("validate_module") {
  const auto a = make_algebra(2);
  CHECK(validate_module(make_indec_module(a, {-2, 4})).ok);

  SUBCASE("identity chain of length three has ∂² != 0") {
    GradedMaps diff;
    diff.emplace(2, Matrix::identity(a.field, 1));
    diff.emplace(1, Matrix::identity(a.field, 1));
    const auto check = validate_module(DgModule(a, {{0, 1}, {1, 1}, {2, 1}}, diff, {}));
    CHECK_FALSE(check.ok);
    CHECK(check.reason == "d2_nonzero");
  }
  SUBCASE("commuting ∂ and T violate the odd-d sign rule") {
    // degree 0: x0; degree 1: (x1, y1); degree 2: y2.  T x0 = x1, T y1 = y2,
    // ∂ y1 = x0, ∂ y2 = x1, so ∂T = T∂ instead of -T∂.
    GradedMaps diff;
    diff.emplace(1, Matrix::from_rows(a.field, {{0, 1}}));
    diff.emplace(2, Matrix::from_rows(a.field, {{1}, {0}}));
    GradedMaps tmul;
    tmul.emplace(0, Matrix::from_rows(a.field, {{1}, {0}}));
    tmul.emplace(1, Matrix::from_rows(a.field, {{0, 1}}));
    const DgModule bad(a, {{0, 1}, {1, 2}, {2, 1}}, diff, tmul);
    const auto check = validate_module(bad);
    CHECK_FALSE(check.ok);
    CHECK(check.reason == "leibniz");
    CHECK(code_of([&] { homology_with_action(bad); }) == ErrorCode::invalid_module);

    // flipping one sign repairs it
    GradedMaps fixed = diff;
    fixed.erase(2);
    fixed.emplace(2, Matrix::from_rows(a.field, {{-1}, {0}}));
    CHECK(validate_module(DgModule(a, {{0, 1}, {1, 2}, {2, 1}}, fixed, tmul)).ok);
  }
}

TEST_CASE("homology_with_action") {
  SUBCASE("indecomposables are their own homology") {
    for (int w : {-2, 0, 1, 2, 3}) {
      const auto m = make_indec_module(make_algebra(w), {1, 3});
      const auto h = homology_with_action(m);
      CHECK(h.support() == m.support());
      for (const auto& [n, k] : m.support()) CHECK(h.op(n) == m.tmul(n));
    }
  }
  SUBCASE("contractible pair is acyclic") {
    const auto h = homology_with_action(contractible_pair(make_algebra(2), 1));
    CHECK(h.total_dim() == 0);
  }
  SUBCASE("truncated resolution of X_0 has homology k in degree 0") {
    const auto h = homology_with_action(truncated_resolution());
    CHECK(h.support() == std::map<int, std::size_t>{{0, 1}});
    CHECK(decompose(truncated_resolution()) == std::vector<Indec>{{0, 0}});
  }
}

TEST_CASE("decompose") {
  const auto a = make_algebra(2);
  CHECK(decompose(assemble(a, {{0, 2}, {1, 0}})) == std::vector<Indec>{{0, 2}, {1, 0}});
  CHECK(decompose(contractible_pair(a, 0)).empty());
  CHECK(decompose(DgModule(a)).empty());

  SUBCASE("shift moves the label") {
    for (int w : {-1, 1, 3}) {
      const auto alg = make_algebra(w);
      CHECK(decompose(shift_module(make_indec_module(alg, {2, 3}), -5)) == std::vector<Indec>{{-3, 3}});
    }
  }
  SUBCASE("non-nilpotent operator is outside the category") {
    const auto alg = make_algebra(1);
    GradedMaps tmul;
    tmul.emplace(0, Matrix::from_rows(alg.field, {{1, 0}, {0, 0}}));
    const DgModule m(alg, {{0, 2}}, {}, tmul);
    CHECK(validate_module(m).ok);
    CHECK(code_of([&] { decompose(m); }) == ErrorCode::not_in_category);
  }
  SUBCASE("w=1 Jordan blocks in one degree") {
    const auto alg = make_algebra(1);
    const std::vector<Indec> labels{{0, 0}, {0, 0}, {0, 3}, {2, 1}};
    CHECK(decompose(assemble(alg, labels)) == labels);
  }
}

TEST_CASE("Krull-Schmidt round trip under random base change") {
  std::mt19937 rng(5);
  const Window win{-4, 4, 4};
  for (int w = -3; w <= 3; ++w) {
    const auto a = make_algebra(w, 101);
    for (int trial = 0; trial < 40; ++trial) {
      auto labels = random_labels(rng, win, 5);
      std::sort(labels.begin(), labels.end());
      auto m = assemble(a, labels);
      // contractible noise must not show up
      const std::vector<DgModule> parts{m, contractible_pair(a, static_cast<int>(rng() % 5) - 2)};
      m = random_base_change(rng, direct_sum(a, parts));
      REQUIRE(validate_module(m).ok);
      CHECK(decompose(m) == labels);
    }
  }
}

TEST_CASE("truncate_smart") {
  const auto a2 = make_algebra(2);
  SUBCASE("X_r is already non-negative") {
    for (int r = 0; r <= 3; ++r) {
      const auto m = make_indec_module(a2, {0, r});
      const auto [sub, quot] = truncate_smart(m, 0);
      CHECK(decompose(sub) == std::vector<Indec>{{0, r}});
      CHECK(quot.is_zero());
    }
  }
  SUBCASE("Σ^{-1} X_2 splits into X_1 and Σ^{-1} X_0") {
    const auto [sub, quot] = truncate_smart(make_indec_module(a2, {-1, 2}), 0);
    CHECK(decompose(sub) == std::vector<Indec>{{0, 1}});
    CHECK(decompose(quot) == std::vector<Indec>{{-1, 0}});
    CHECK(validate_module(sub).ok);
    CHECK(validate_module(quot).ok);
  }
  SUBCASE("w=3 Σ^{-1} X_0 lies below the threshold") {
    const auto [sub, quot] = truncate_smart(make_indec_module(make_algebra(3), {-1, 0}), 0);
    CHECK(sub.is_zero());
    CHECK(decompose(quot) == std::vector<Indec>{{-1, 0}});
  }
  SUBCASE("threshold through a nonzero differential") {
    const auto [sub, quot] = truncate_smart(truncated_resolution(), 1);
    CHECK(homology_with_action(sub).total_dim() == 0);
    CHECK(decompose(quot) == std::vector<Indec>{{0, 0}});
  }
  SUBCASE("wrong sign") {
    CHECK(code_of([] { truncate_smart(make_indec_module(make_algebra(1), {0, 0})); }) == ErrorCode::wrong_sign);
    CHECK(code_of([] { truncate_smart(make_indec_module(make_algebra(-1), {0, 0})); }) == ErrorCode::wrong_sign);
  }
}

TEST_CASE("truncate_hard") {
  const auto a0 = make_algebra(0);
  SUBCASE("X_r is already non-positive") {
    const auto [sub, quot] = truncate_hard(make_indec_module(a0, {0, 3}), 0);
    CHECK(decompose(sub) == std::vector<Indec>{{0, 3}});
    CHECK(quot.is_zero());
  }
  SUBCASE("Σ X_2 splits into X_1 and Σ X_0") {
    const auto [sub, quot] = truncate_hard(make_indec_module(a0, {1, 2}), 0);
    CHECK(decompose(sub) == std::vector<Indec>{{0, 1}});
    CHECK(decompose(quot) == std::vector<Indec>{{1, 0}});
  }
  SUBCASE("w=-1 Σ X_0 lies above the threshold") {
    const auto [sub, quot] = truncate_hard(make_indec_module(make_algebra(-1), {1, 0}), 0);
    CHECK(sub.is_zero());
    CHECK(decompose(quot) == std::vector<Indec>{{1, 0}});
  }
  SUBCASE("wrong sign") {
    CHECK(code_of([] { truncate_hard(make_indec_module(make_algebra(1), {0, 0})); }) == ErrorCode::wrong_sign);
    CHECK(code_of([] { truncate_hard(make_indec_module(make_algebra(2), {0, 0})); }) == ErrorCode::wrong_sign);
  }
}

TEST_CASE("truncations split homology degreewise") {
  std::mt19937 rng(99);
  const Window win{-5, 5, 4};
  for (int w : {-3, -2, -1, 0, 2, 3}) {
    const auto a = make_algebra(w, 101);
    for (int trial = 0; trial < 30; ++trial) {
      const int n = static_cast<int>(rng() % 5) - 2;
      const std::vector<DgModule> parts{assemble(a, random_labels(rng, win, 5)),
                                        contractible_pair(a, n + static_cast<int>(rng() % 3) - 1)};
      const auto m = random_base_change(rng, direct_sum(a, parts));
      const auto [sub, quot] = w >= 2 ? truncate_smart(m, n) : truncate_hard(m, n);
      REQUIRE(validate_module(sub).ok);
      REQUIRE(validate_module(quot).ok);
      const auto hs = homology_with_action(sub);
      const auto hq = homology_with_action(quot);
      if (w >= 2) {
        CHECK(add_dims(hs.support(), hq.support()) == homology_with_action(m).support());
        for (const auto& [deg, k] : hs.support()) CHECK(deg >= n);
        for (const auto& [deg, k] : hq.support()) CHECK(deg < n);
      } else {
        for (const auto& [deg, k] : sub.support()) CHECK(deg <= n);
        for (const auto& [deg, k] : quot.support()) CHECK(deg > n);
        CHECK(add_dims(sub.support(), quot.support()) == m.support());
      }
    }
  }
}

TEST_CASE("hard truncation of minimal modules splits homology") {
  std::mt19937 rng(3);
  const Window win{-5, 5, 4};
  for (int w : {-3, -1, 0}) {
    const auto a = make_algebra(w, 101);
    for (int trial = 0; trial < 30; ++trial) {
      const auto m = random_base_change(rng, assemble(a, random_labels(rng, win, 5)));
      const auto [sub, quot] = truncate_hard(m, 0);
      CHECK(add_dims(homology_with_action(sub).support(), homology_with_action(quot).support()) ==
            homology_with_action(m).support());
    }
  }
}
