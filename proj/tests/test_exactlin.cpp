// Exact rational linear algebra: ranks, kernels, subspace arithmetic,
// signatures, bracket closure, and the structured-form diagonalizer.

#include <catch2/catch_amalgamated.hpp>

#include "mobius/liealg.hpp"
#include "mobius/matrix.hpp"
#include "mobius/prng.hpp"
#include "mobius/rational.hpp"
#include "mobius/subspace.hpp"

using namespace mobius;

namespace {

Mat random_mat(Prng& rng, std::size_t r, std::size_t c) {
  Mat m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rng.small_rat();
  return m;
}

Mat random_invertible(Prng& rng, std::size_t n) {
  for (;;) {
    Mat s = random_mat(rng, n, n);
    if (rank(s) == n) return s;
  }
}

}  // namespace

TEST_CASE("rational parse and print round-trip") {
  CHECK(rat_str(rat_parse("3")) == "3");
  CHECK(rat_str(rat_parse("-7/2")) == "-7/2");
  CHECK(rat_str(rat_parse("2/4")) == "1/2");
  CHECK(rat_str(rat_parse("3/-6")) == "-1/2");
  CHECK(rat_str(Rat(0)) == "0");
  CHECK_THROWS_AS(rat_parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rat_parse("a"), std::invalid_argument);
  CHECK_THROWS_AS(rat_parse(""), std::invalid_argument);
  CHECK(rational_square_root(Rat(9, 4)).value() == Rat(3, 2));
  CHECK(!rational_square_root(Rat(2)).has_value());
}

TEST_CASE("rank: identity, zero, proportional rows") {
  CHECK(rank(Mat::identity(3)) == 3);
  CHECK(rank(Mat(3, 3)) == 0);
  Mat m = Mat::from_rows({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}});
  CHECK(rank(m) == 1);
}

TEST_CASE("rank equals transpose rank on random matrices") {
  Prng rng(12345);
  for (int t = 0; t < 25; ++t) {
    Mat m = random_mat(rng, 4 + t % 3, 3 + t % 4);
    CHECK(rank(m) == rank(m.transpose()));
  }
}

TEST_CASE("rank agrees with rref pivot count") {
  Prng rng(777);
  for (int t = 0; t < 25; ++t) {
    Mat m = random_mat(rng, 5, 6);
    Mat r = m;
    CHECK(rank(m) == rref(r).size());
  }
}

TEST_CASE("kernel: identity, zero matrix, single row") {
  CHECK(kernel_basis(Mat::identity(4)).empty());
  CHECK(kernel_basis(Mat(2, 3)).size() == 3);
  Mat m = Mat::from_rows({{Rat(1), Rat(1)}});
  auto k = kernel_basis(m);
  REQUIRE(k.size() == 1);
  // span{(1,-1)} up to scale
  CHECK(k[0][0] * Rat(-1) == k[0][1]);
  CHECK(k[0][0] != 0);
}

TEST_CASE("kernel re-multiplication is exactly zero; dim = cols - rank") {
  Prng rng(999);
  for (int t = 0; t < 20; ++t) {
    // Low-rank products exercise nontrivial kernels.
    Mat a = random_mat(rng, 5, 2);
    Mat b = random_mat(rng, 2, 7);
    Mat m = a * b;
    auto k = kernel_basis(m);
    CHECK(k.size() == m.cols() - rank(m));
    for (const auto& v : k) {
      auto mv = mul_vec(m, v);
      for (const auto& x : mv) CHECK(x == 0);
    }
  }
}

TEST_CASE("solve and inverse") {
  Prng rng(31337);
  for (int t = 0; t < 10; ++t) {
    Mat a = random_invertible(rng, 4);
    CHECK(a * inverse(a) == Mat::identity(4));
    std::vector<Rat> b;
    for (int i = 0; i < 4; ++i) b.push_back(rng.small_rat());
    auto x = solve(a, b);
    REQUIRE(x.has_value());
    CHECK(mul_vec(a, *x) == b);
  }
  // Inconsistent system
  Mat m = Mat::from_rows({{Rat(1), Rat(1)}, {Rat(1), Rat(1)}});
  CHECK(!solve(m, {Rat(0), Rat(1)}).has_value());
  CHECK_THROWS_AS(inverse(m), std::domain_error);
}

TEST_CASE("subspace arithmetic: axes, idempotence, dimension formula") {
  RowSpan u(2), w(2);
  u.insert({Rat(1), Rat(0)});
  w.insert({Rat(0), Rat(1)});
  CHECK(span_sum(u, w).dim() == 2);
  CHECK(span_intersect(u, w).dim() == 0);

  CHECK(span_sum(u, u).dim() == u.dim());
  CHECK(span_intersect(u, u).dim() == u.dim());

  Prng rng(2024);
  for (int t = 0; t < 15; ++t) {
    const std::size_t amb = 6;
    RowSpan a(amb), b(amb);
    for (int i = 0; i < 3; ++i) {
      a.insert(random_mat(rng, 1, amb).row(0));
      b.insert(random_mat(rng, 1, amb).row(0));
    }
    RowSpan s = span_sum(a, b);
    RowSpan i = span_intersect(a, b);
    CHECK(s.dim() + i.dim() == a.dim() + b.dim());
    for (const auto& v : i.basis()) {
      CHECK(a.contains(v));
      CHECK(b.contains(v));
    }
  }
}

TEST_CASE("signature: diagonal and hyperbolic examples") {
  Mat d = Mat::from_rows(
      {{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(-1)}});
  CHECK(signature(d) == Signature{2, 1, 0});
  Mat h = Mat::from_rows({{Rat(0), Rat(1)}, {Rat(1), Rat(0)}});
  CHECK(signature(h) == Signature{1, 1, 0});
  Mat z(3, 3);
  CHECK(signature(z) == Signature{0, 0, 3});
  Mat ns = Mat::from_rows({{Rat(0), Rat(1)}, {Rat(0), Rat(0)}});
  CHECK_THROWS_AS(signature(ns), std::invalid_argument);
}

TEST_CASE("signature invariant under congruence") {
  Prng rng(555);
  for (int t = 0; t < 12; ++t) {
    const std::size_t n = 4;
    Mat a = random_mat(rng, n, n);
    Mat g = a + a.transpose();
    Mat s = random_invertible(rng, n);
    Mat g2 = s.transpose() * g * s;
    CHECK(signature(g) == signature(g2));
  }
}

TEST_CASE("signature plus+minus equals rank") {
  Prng rng(808);
  for (int t = 0; t < 12; ++t) {
    Mat a = random_mat(rng, 3, 5);
    Mat g = a.transpose() * a;  // symmetric, rank <= 3
    Signature sig = signature(g);
    CHECK(sig.pos + sig.neg == rank(g));
    CHECK(sig.pos + sig.neg + sig.zero == 5);
  }
}

TEST_CASE("bracket closure: so(3) with structure constants") {
  // Standard rotation generators.
  Mat lx = Mat::from_rows(
      {{Rat(0), Rat(0), Rat(0)}, {Rat(0), Rat(0), Rat(-1)}, {Rat(0), Rat(1), Rat(0)}});
  Mat ly = Mat::from_rows(
      {{Rat(0), Rat(0), Rat(1)}, {Rat(0), Rat(0), Rat(0)}, {Rat(-1), Rat(0), Rat(0)}});
  Mat lz = Mat::from_rows(
      {{Rat(0), Rat(-1), Rat(0)}, {Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(0), Rat(0)}});
  std::vector<Mat> basis = {lx, ly, lz};
  auto bc = bracket_closure_check(basis);
  REQUIRE(bc.closed);
  // [lx, ly] = lz etc.; verify the recovered constants reproduce brackets.
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      Mat lhs = commutator(basis[i], basis[j]);
      Mat rhs(3, 3);
      for (std::size_t k = 0; k < 3; ++k)
        rhs = rhs + bc.structure[i][j][k] * basis[k];
      CHECK(lhs == rhs);
    }
  CHECK(bc.structure[0][1][2] == 1);
}

TEST_CASE("bracket closure: abelian singleton and a non-closed pair") {
  Mat e12(2, 2), e21(2, 2);
  e12.at(0, 1) = 1;
  e21.at(1, 0) = 1;
  CHECK(bracket_closure_check({e12}).closed);
  auto bad = bracket_closure_check({e12, e21});
  CHECK(!bad.closed);
  CHECK(is_bracket_closed({e12}));
  CHECK(!is_bracket_closed({e12, e21}));
  CHECK_THROWS_AS(bracket_closure_check({e12, (Rat(2) * e12)}),
                  std::invalid_argument);
}

TEST_CASE("orthogonal unit diagonalizer on structured forms") {
  // Already diagonal, shuffled signs: gets sorted.
  Mat d = Mat::from_rows(
      {{Rat(-1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(-1)}});
  auto ud = orthogonal_unit_diagonalizer(d);
  CHECK(ud.pos == 1);
  CHECK(ud.neg == 2);
  CHECK(ud.t.transpose() * ud.t == Mat::identity(3));
  Mat diag = ud.t.transpose() * d * ud.t;
  CHECK(diag.at(0, 0) == 1);
  CHECK(diag.at(1, 1) == -1);
  CHECK(diag.at(2, 2) == -1);

  // Two hyperbolic planes: [[0,I],[I,0]] in 4 dims.
  Mat h(4, 4);
  h.at(0, 2) = h.at(2, 0) = h.at(1, 3) = h.at(3, 1) = 1;
  auto uh = orthogonal_unit_diagonalizer(h);
  CHECK(uh.pos == 2);
  CHECK(uh.neg == 2);
  CHECK(uh.t.transpose() * uh.t == Mat::identity(4));
  Mat hd = uh.t.transpose() * h * uh.t;
  Signature sig = signature(hd);
  CHECK(sig == Signature{2, 2, 0});
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (i != j) CHECK(hd.at(i, j) == 0);

  // A single hyperbolic plane cannot be unit-diagonalized orthogonally over
  // the rationals.
  Mat one(2, 2);
  one.at(0, 1) = one.at(1, 0) = 1;
  CHECK_THROWS_AS(orthogonal_unit_diagonalizer(one), std::domain_error);

  // Non-signed-permutation input is rejected.
  Mat bad = Mat::from_rows({{Rat(2), Rat(0)}, {Rat(0), Rat(1)}});
  CHECK_THROWS_AS(orthogonal_unit_diagonalizer(bad), std::domain_error);
}
