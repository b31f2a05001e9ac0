#include <algorithm>
#include <random>

#include "doctest.h"
#include "sphercat/error.hpp"
#include "sphercat/tstructures.hpp"
#include "support/random_modules.hpp"

using namespace sphercat;
using sphercat::testing::assemble;
using sphercat::testing::random_labels;

namespace {

std::size_t total_homology(const DgModule& m) {
  std::size_t total = 0;
  const auto h = homology_with_action(m);
  for (const auto& [n, dim] : h.support()) total += dim;
  return total;
}

}  // namespace

TEST_CASE("canonical_spec membership") {
  const auto s3 = canonical_spec(3);
  CHECK(s3.kind == TorsionKind::t);
  CHECK(s3.first({0, 0}));
  CHECK_FALSE(s3.first({-1, 4}));
  CHECK(s3.second({-1, 0}));
  CHECK(s3.second({-3, 1}));
  CHECK_FALSE(s3.second({-2, 1}));

  const auto s0 = canonical_spec(0);
  CHECK(s0.kind == TorsionKind::cot);
  CHECK(s0.first({0, 3}));
  CHECK_FALSE(s0.first({1, 0}));
  CHECK(s0.second({1, 0}));
  CHECK(s0.second({2, 1}));
  CHECK_FALSE(s0.second({1, 1}));

  const auto s1 = canonical_spec(1);
  CHECK(s1.second({-1, 7}));
  CHECK_FALSE(s1.second({0, 0}));
}

TEST_CASE("canonical pairs are orthogonal on the default window") {
  for (int w = -4; w <= 5; ++w) {
    const auto report = orthogonality_check(w, canonical_spec(w), Window{});
    CHECK_MESSAGE(report.passed(), "w=" << w);
    CHECK(report.stats.at("pairs_checked") == report.stats.at("first_labels") * report.stats.at("second_labels"));
    CHECK(report.stats.at("pairs_checked") > 0);
    CHECK(report.name.find("evidence") != std::string::npos);
  }
  for (int w = -2; w <= 3; ++w) {
    CHECK(orthogonality_check(w, canonical_spec(w), Window{-4, 4, 3}, HomBackend::oracle).passed());
  }
}

TEST_CASE("corrupted aisle is detected") {
  auto spec = canonical_spec(2);
  spec.first = [](Indec t) { return t.shift >= -1; };
  const auto report = orthogonality_check(2, spec, Window{});
  CHECK_FALSE(report.passed());
  const Violation expected{{-1, 1}, {-1, 0}, 0, 1};
  CHECK(std::find(report.violations.begin(), report.violations.end(), expected) != report.violations.end());
  CHECK(std::is_sorted(report.violations.begin(), report.violations.end(),
                       [](const Violation& a, const Violation& b) { return std::tie(a.t, a.u) < std::tie(b.t, b.u); }));
}

TEST_CASE("shifted specs stay orthogonal and closed") {
  for (int w : {-2, 0, 1, 3}) {
    for (int k : {-2, 1, 3}) {
      const auto spec = shifted_spec(canonical_spec(w), k);
      CHECK(spec.first(suspend({0, 0}, k)));
      CHECK(orthogonality_check(w, spec, Window{}).passed());
      CHECK(suspension_closure_check(spec, Window{}).passed());
    }
  }
}

TEST_CASE("suspension closure") {
  for (int w = -3; w <= 4; ++w) {
    const auto report = suspension_closure_check(canonical_spec(w), Window{});
    CHECK(report.passed());
    CHECK(report.stats.at("pairs_checked") > 0);
  }
  auto bad = canonical_spec(2);
  bad.first = [](Indec t) { return t.shift == 0; };
  CHECK_FALSE(suspension_closure_check(bad, Window{}).passed());
}

TEST_CASE("decomposition triangle lands in the two classes") {
  std::mt19937 rng(5);
  for (int w = -3; w <= 4; ++w) {
    const auto a = make_algebra(w, 101);
    const auto spec = canonical_spec(w);
    for (int trial = 0; trial < 25; ++trial) {
      const auto m = assemble(a, random_labels(rng, Window{-4, 4, 3}, 4));
      const auto tri = decomposition_triangle(w, m);
      CHECK(validate_module(tri.sub).ok);
      CHECK(validate_module(tri.quot).ok);
      for (const auto& t : tri.sub_labels) CHECK_MESSAGE(spec.first(t), "w=" << w << " " << format_label(t));
      for (const auto& t : tri.quot_labels) CHECK_MESSAGE(spec.second(t), "w=" << w << " " << format_label(t));
      CHECK(decompose(tri.sub) == tri.sub_labels);
      if (w != 0) CHECK(total_homology(tri.sub) + total_homology(tri.quot) == total_homology(m));
    }
  }
  const auto a1 = make_algebra(1);
  const auto tri = decomposition_triangle(1, assemble(a1, {{2, 1}, {-1, 3}, {0, 0}}));
  CHECK(tri.sub_labels == std::vector<Indec>{{0, 0}, {2, 1}});
  CHECK(tri.quot_labels == std::vector<Indec>{{-1, 3}});
  CHECK_THROWS_AS(decomposition_triangle(2, make_indec_module(a1, {0, 0})), Error);
}

TEST_CASE("hearts and co-hearts") {
  for (int w = 2; w <= 5; ++w) CHECK(heart_window(w, canonical_spec(w), Window{}) == std::vector<Indec>{{0, 0}});
  const auto tube = heart_window(1, canonical_spec(1), Window{-3, 3, 4});
  CHECK(tube == std::vector<Indec>{{0, 0}, {0, 1}, {0, 2}, {0, 3}, {0, 4}});
  for (int w = -4; w <= 0; ++w) CHECK(coheart_window(w, canonical_spec(w), Window{}) == std::vector<Indec>{{0, 0}});
  CHECK_THROWS_AS(heart_window(0, canonical_spec(0), Window{}), Error);
  CHECK_THROWS_AS(coheart_window(2, canonical_spec(2), Window{}), Error);
}

TEST_CASE("heart_orthogonality") {
  for (int w = 1; w <= 5; ++w) {
    const auto hearts = heart_window(w, canonical_spec(w), Window{-3, 3, 4});
    CHECK(heart_orthogonality(w, hearts, Window{}, TorsionKind::t).passed());
  }
  for (int w = -4; w <= 0; ++w) {
    const auto cohearts = coheart_window(w, canonical_spec(w), Window{});
    const auto report = heart_orthogonality(w, cohearts, Window{}, TorsionKind::cot, HomBackend::oracle);
    CHECK(report.passed());
    CHECK(report.stats.at("pairs_checked") == 8);
  }
  // In the t mode X_0 has Σ^w X_0 among its positive self-extensions, not negative ones.
  CHECK_FALSE(heart_orthogonality(-2, {{0, 0}}, Window{}, TorsionKind::t).passed());
}

TEST_CASE("sparseness evidence") {
  for (int w = -4; w <= -1; ++w) {
    const auto report = sparseness_evidence(w, Window{});
    CHECK(report.passed());
    CHECK(report.evidence.size() == Window{}.labels().size());
    CHECK_FALSE(report.notes.empty());
  }
  const auto zero = sparseness_evidence(0, Window{});
  CHECK(zero.passed());
  CHECK(zero.stats.at("baseline_labels") == Window{}.shift_count());
  CHECK(zero.stats.at("heart_candidates") == zero.stats.at("baseline_labels"));
  CHECK_THROWS_AS(sparseness_evidence(1, Window{}), Error);
}

TEST_CASE("silting vanishing") {
  for (int w = -5; w <= -1; ++w) {
    CHECK(silting_check(w, 12).passed());
    CHECK(silting_check(w, 12, HomBackend::closed).passed());
  }
  try {
    silting_check(0, 5);
    FAIL("expected WrongSign");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::wrong_sign);
  }
}

TEST_CASE("thick closure of X_0 fills the window interior") {
  for (int w = -3; w <= 4; ++w) {
    const auto result = thick_closure_window(w, {0, 0}, Window{});
    CHECK_MESSAGE(result.interior_missing.empty(), "w=" << w << " " << result.note);
    CHECK(std::is_sorted(result.reached.begin(), result.reached.end()));
    CHECK_FALSE(window_interior(w, Window{}).empty());
  }
  const auto outside = thick_closure_window(2, {20, 0}, Window{});
  CHECK(outside.reached.empty());
  CHECK(outside.note.find("outside") != std::string::npos);
}

TEST_CASE("thick closure from a wider seed") {
  // X_1 -> X_0 + X_2 -> X_1 in the tube puts X_0 back into the closure.
  for (int w : {-1, 1, 2, 3}) {
    const auto result = thick_closure_window(w, {0, 1}, Window{});
    CHECK(std::binary_search(result.reached.begin(), result.reached.end(), Indec{0, 0}));
    CHECK_MESSAGE(result.interior_missing.empty(), "w=" << w << " " << result.note);
  }
}

TEST_CASE("decomposition triangle at a threshold uses the shifted classes") {
  std::mt19937 rng(9);
  for (int w : {-2, 0, 1, 3}) {
    const auto a = make_algebra(w, 101);
    for (int n : {-3, 2}) {
      const auto spec = shifted_spec(canonical_spec(w), n);
      for (int trial = 0; trial < 10; ++trial) {
        const auto m = assemble(a, random_labels(rng, Window{-4, 4, 3}, 4));
        const auto tri = decomposition_triangle(w, m, n);
        for (const auto& t : tri.sub_labels) CHECK(spec.first(t));
        for (const auto& t : tri.quot_labels) CHECK(spec.second(t));
        CHECK(decompose(tri.quot) == tri.quot_labels);
      }
    }
  }
}
