#include <doctest.h>

#include <random>

#include "cycmds/codecheck.hpp"
#include "cycmds/error.hpp"
#include "oracle.hpp"
#include "seed.hpp"

using namespace cycmds;

namespace {

FieldMatrix reduced(int n, std::vector<int> J, std::uint64_t p) {
  return reduce_matrix(build_generator_matrix(CodeSpec::make(n, std::move(J))), build_field(p, n));
}

}  // namespace

TEST_SUITE("codecheck") {

TEST_CASE("linear algebra over F_q") {
  const auto ctx = build_field(29, 7);
  const oracle::Fq o(ctx);
  std::mt19937_64 rng(test_seed());
  for (int t = 0; t < 50; ++t) {
    FieldMatrix m(1 + rng() % 5, 1 + rng() % 7);
    for (auto& x : m.a) x = (rng() % 3) ? rng() % 29 : 0;
    const auto r = rank(ctx, m);
    CHECK(r == o.rank(m));
    const auto ns = nullspace(ctx, m);
    CHECK(ns.rows == m.cols - r);
    for (std::size_t i = 0; i < ns.rows; ++i)
      for (std::size_t a = 0; a < m.rows; ++a) {
        FElem s = 0;
        for (std::size_t j = 0; j < m.cols; ++j) s = ctx.add(s, ctx.mul(m.at(a, j), ns.at(i, j)));
        CHECK(s == 0);
      }
    CHECK(row_basis(ctx, m).rows == r);
  }
}

TEST_CASE("MDS checks") {
  CHECK(is_mds(build_field(11, 5), reduced(5, {0, 1, 3}, 11)));
  CHECK_FALSE(is_mds(build_field(7, 9), reduced(9, {0, 2, 3}, 7)));
  // (7,{0,1,3}) is MDS over F_29 but not at the bad prime 2.
  CHECK(is_mds(build_field(29, 7), reduced(7, {0, 1, 3}, 29)));
  CHECK_FALSE(is_mds(build_field(2, 7), reduced(7, {0, 1, 3}, 2)));
  auto m = reduced(7, {0, 1, 4}, 29);
  for (std::size_t i = 0; i < m.rows; ++i) m.at(i, 4) = 0;
  CHECK_FALSE(is_mds(build_field(29, 7), m));
  FieldMatrix dependent(2, 4);
  for (auto& x : dependent.a) x = 1;
  CHECK_THROWS_AS(is_mds(build_field(29, 7), dependent), Error);
}

TEST_CASE("minimum distance by enumeration") {
  const auto f11 = build_field(11, 5);
  const auto m5 = reduced(5, {0, 1, 3}, 11);
  CHECK(brute_min_distance(f11, m5) == 3);
  CHECK(oracle::Fq(f11).min_distance(m5) == 3);
  const auto f29 = build_field(29, 7);
  CHECK(brute_min_distance(f29, reduced(7, {0, 1, 3}, 29)) == 5);
  FieldMatrix rep(1, 6);
  for (auto& x : rep.a) x = 3;
  CHECK(brute_min_distance(f29, rep) == 6);
  // Over F_2 the (7,{0,1,3}) reduction loses the MDS property.
  const auto f8 = build_field(2, 7);
  const auto bad = reduced(7, {0, 1, 3}, 2);
  CHECK(brute_min_distance(f8, bad) == oracle::Fq(f8).min_distance(bad));
  CHECK(brute_min_distance(f8, bad) < 5);
  try {
    brute_min_distance(f29, reduced(7, {0, 1, 3}, 29), CodewordBudget{1000});
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BudgetExceeded);
  }
  CHECK(brute_min_distance_serial(f29, reduced(7, {0, 1, 3}, 29)) == 5);
}

TEST_CASE("cyclicity") {
  CHECK(is_cyclic(build_field(29, 7), reduced(7, {0, 1, 3}, 29)));
  CHECK(is_cyclic(build_field(2, 9), reduced(9, {0, 2, 3}, 2)));
  const auto f3 = build_field(3, 2);
  FieldMatrix diag(1, 2);
  diag.at(0, 0) = diag.at(0, 1) = 1;
  CHECK(is_cyclic(f3, diag));
  FieldMatrix unit(1, 3);
  unit.at(0, 0) = 1;
  CHECK_FALSE(is_cyclic(build_field(2, 3), unit));
}

TEST_CASE("Schur square dimension") {
  const auto f29 = build_field(29, 7);
  CHECK(schur_square_dim(f29, reduced(7, {0, 1, 3}, 29)) == 6);
  CHECK(schur_square_dim(f29, reduced(7, {0, 1, 4}, 29)) == 5);
  FieldMatrix ones(1, 7);
  for (auto& x : ones.a) x = 1;
  CHECK(schur_square_dim(f29, ones) == 1);
}

TEST_CASE("arithmetic progressions and sumsets") {
  CHECK(is_arithmetic_progression({0, 2, 4}));
  CHECK(is_arithmetic_progression({1, 4, 7, 10}));
  CHECK_FALSE(is_arithmetic_progression({0, 1, 3}));
  CHECK(sumset_mod_size({0, 1, 3}, 7) == 6);
  CHECK(sumset_mod_size({0, 1, 4}, 7) == 5);
  // {0,1,2,3,4,5,6,8,9,10,12,16}
  CHECK(sumset_mod_size({0, 1, 2, 4, 8}, 17) == 12);
  CHECK(sumset_mod_size({0, 1, 2, 4}, 17) == 8);
}

TEST_CASE("classification at p = 29") {
  const auto f29 = build_field(29, 7);
  CHECK(classify_rs(f29, reduced(7, {0, 1, 3}, 29)).classification == Classification::NonRS);
  CHECK(classify_rs(f29, reduced(7, {0, 1, 4}, 29)).classification == Classification::RS);
  CHECK(classify_rs(f29, reduced(7, {1, 2, 5}, 29)).classification == Classification::RS);
  CHECK_THROWS_AS(classify_rs(build_field(7, 9), reduced(9, {0, 2, 3}, 7)), Error);
  // k = 4, n = 8: neither the code nor its dual satisfies 2k <= n - 1.
  const auto v = classify_rs(build_field(17, 8), reduced(8, {0, 1, 2, 3}, 17));
  CHECK(v.classification == Classification::Indeterminate);
  CHECK(v.side == ClassificationSide::None);
}

TEST_CASE("analyze pipeline") {
  const auto r13 = analyze(CodeSpec::make(13, {0, 1, 2, 5}), 2);
  CHECK(r13.is_mds);
  CHECK(r13.is_cyclic);
  CHECK(r13.classification == Classification::NonRS);
  const auto bad13 = compute_bad_primes(CodeSpec::make(13, {0, 1, 2, 5}));
  CHECK(bad13.bad_primes() == std::vector<BigInt>{3, 13, 157, 521, 599});

  const auto r9 = analyze_auto(CodeSpec::make(9, {0, 2, 3, 4}), 100, 1,
                               compute_bad_primes(CodeSpec::make(9, {0, 2, 3, 4})));
  REQUIRE(r9.size() == 1);
  CHECK(r9[0].field.p == 2);
  CHECK(r9[0].is_mds);
  CHECK(r9[0].classification == Classification::NonRS);

  try {
    analyze(CodeSpec::make(9, {0, 1, 3, 4}), 2);
    FAIL("expected ZeroMinorPresent");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroMinorPresent);
  }
  try {
    analyze(CodeSpec::make(7, {0, 1, 3}), 2);
    FAIL("expected BadPrime");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BadPrime);
  }
}

TEST_CASE("analyze falls back to the minor criterion past the codeword budget") {
  AnalyzeOptions o;
  o.codewords.max_codewords = 100;
  const auto r = analyze(CodeSpec::make(7, {0, 1, 3}), 29, o);
  REQUIRE(r.min_distance.has_value());
  CHECK(*r.min_distance == 5);
  CHECK(r.min_distance_method == "minor_criterion");
  CHECK_FALSE(r.notices.empty());
  const auto full = analyze(CodeSpec::make(7, {0, 1, 3}), 29);
  CHECK(full.min_distance_method == "brute_force");
  CHECK(full.notices.empty());
}

TEST_CASE("binary construction") {
  CHECK(binary_defining_set(4) == std::vector<int>{0, 1, 2, 4});
  CHECK(binary_defining_set(5) == std::vector<int>{0, 1, 2, 4, 8});
  const auto r = binary_construction(3, 4);
  CHECK(r.spec.n == 9);
  CHECK(r.field.q == 64);
  CHECK(r.is_mds);
  CHECK(r.is_cyclic);
  CHECK(r.classification == Classification::NonRS);
  CHECK(r.min_distance == 6);
  CHECK(r.schur_dim == 8);
  const auto r17 = binary_construction(4, 5);
  CHECK(r17.spec.J == std::vector<int>{0, 1, 2, 4, 8});
  CHECK(r17.schur_dim == 12);
  CHECK(r17.schur_dim == r17.sumset_mod_size);
  CHECK_THROWS_AS(binary_construction(2, 4), Error);
  CHECK_THROWS_AS(binary_construction(3, 3), Error);
  CHECK_THROWS_AS(binary_construction(3, 5), Error);  // 2^3 = 8 is not < 9/2
}

TEST_CASE("serial and parallel checks agree") {
  const auto ctx = build_field(29, 7);
  for (auto J : {std::vector<int>{0, 1, 3}, std::vector<int>{0, 1, 2, 5}}) {
    const auto m = reduced(7, J, 29);
    CHECK(is_mds(ctx, m) == is_mds_serial(ctx, m));
    CHECK(brute_min_distance(ctx, m) == brute_min_distance_serial(ctx, m));
  }
  const auto f8 = build_field(2, 7);
  const auto bad = reduced(7, {0, 1, 3}, 2);
  CHECK(is_mds(f8, bad) == is_mds_serial(f8, bad));
  CHECK(brute_min_distance(f8, bad) == brute_min_distance_serial(f8, bad));
}

TEST_CASE("short non-AP defining sets give non-RS codes; short APs give RS") {
  const std::vector<std::pair<int, std::vector<int>>> specs = {
      {7, {0, 1, 3}}, {7, {0, 2, 3}}, {8, {0, 1, 3}},    {8, {0, 2, 3}},    {10, {0, 1, 3}}, {10, {0, 2, 3}},
      {10, {1, 2, 4}}, {10, {1, 3, 4}}, {13, {0, 1, 2, 5}}, {13, {0, 1, 3, 4}}, {9, {0, 2, 4}},  {9, {0, 1, 2}},
      {11, {0, 2, 4}}, {13, {1, 3, 5}}, {12, {0, 1, 2, 3}},
  };
  for (const auto& [n, J] : specs) {
    const auto spec = CodeSpec::make(n, J);
    const auto bad = compute_bad_primes(spec);
    if (bad.has_zero_minor() || 2 * J.back() > n - 1) continue;
    AnalyzeOptions o;
    o.codewords.max_codewords = 1;
    for (std::uint64_t p : good_primes(bad, 40)) {
      if (!oracle::field_size_at_most(p, oracle::order_mod(p, n), 1ull << 40)) continue;
      const auto r = analyze(spec, p, bad, o);
      if (is_arithmetic_progression(J)) {
        CHECK_MESSAGE(r.classification == Classification::RS, spec.to_string() << " p=" << p);
        CHECK(r.schur_dim == 2 * J.size() - 1);
      } else {
        CHECK_MESSAGE(r.classification == Classification::NonRS, spec.to_string() << " p=" << p);
        CHECK(r.sumset_mod_size >= 2 * J.size());
      }
    }
  }
}

}
