// Matrix realizations and exact certificates: construction invariants for
// every family, commutant classification, compact-orbit transitivity,
// line-stabilizer defects, pencil witnesses, and null-cone spanning sets.

#include <catch2/catch_amalgamated.hpp>

#include "mobius/certify.hpp"
#include "mobius/octonion.hpp"
#include "mobius/prng.hpp"
#include "mobius/realize.hpp"

#include <utility>
#include <vector>

using namespace mobius;

namespace {

std::vector<Rat> rat_vec(std::vector<long long> v) {
  std::vector<Rat> out;
  out.reserve(v.size());
  for (auto x : v) out.push_back(Rat(x));
  return out;
}

// Conjugates a realization by a random form-preserving signed permutation
// (permutes plus-coordinates and minus-coordinates separately, flips signs).
Realization signed_perm_conjugate(const Realization& r, Prng& rng) {
  const std::size_t n = r.ambient;
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t i = 1; i < r.plus; ++i)
    std::swap(perm[i], perm[rng.int_in(0, static_cast<long long>(i))]);
  for (std::size_t i = 1; i < r.minus; ++i)
    std::swap(perm[r.plus + i],
              perm[r.plus + rng.int_in(0, static_cast<long long>(i))]);
  Mat t(n, n);
  for (std::size_t i = 0; i < n; ++i)
    t.at(perm[i], i) = rng.int_in(0, 1) ? Rat(1) : Rat(-1);
  Realization out = r;
  Mat tt = t.transpose();
  for (auto& x : out.basis) x = tt * x * t;
  out.compact_point = mul_vec(tt, r.compact_point);
  return out;
}

}  // namespace

TEST_CASE("all realization families construct with expected invariants") {
  struct Probe {
    const char* family;
    std::vector<Int> params;
    std::size_t dim, plus, minus;
  };
  const std::vector<Probe> probes = {
      {"so", {4, 3}, 21, 4, 3},    {"so", {8, 8}, 120, 8, 8},
      {"block", {4, 4}, 12, 4, 4}, {"block", {4, 3}, 9, 4, 3},
      {"su", {2, 2}, 15, 4, 4},    {"su", {1, 2}, 8, 2, 4},
      {"sp", {1, 1}, 10, 4, 4},    {"sp", {2, 2}, 36, 8, 8},
      {"sp1sp", {1, 1}, 13, 4, 4}, {"sp1sp", {2, 2}, 39, 8, 8},
      {"soc", {4}, 12, 4, 4},      {"soc", {8}, 56, 8, 8},
      {"sl2csl2c", {}, 12, 4, 4},  {"su2sl2c", {}, 9, 4, 4},
      {"spin34", {}, 21, 4, 4},    {"spin18", {}, 36, 8, 8},
      {"g2", {}, 14, 4, 3}};
  for (const auto& pr : probes) {
    CAPTURE(pr.family, pr.params);
    Realization r = realization(pr.family, pr.params);
    CHECK(r.basis.size() == pr.dim);
    CHECK(r.plus == pr.plus);
    CHECK(r.minus == pr.minus);
    CHECK(r.ambient == pr.plus + pr.minus);
    // finalize() has already asserted skewness, closure, independence; the
    // designated point is null for the stored form.
    Rat val = 0;
    for (std::size_t i = 0; i < r.ambient; ++i)
      val += r.compact_point[i] * r.compact_point[i] * r.form.at(i, i);
    CHECK(val == 0);
  }
  CHECK_THROWS_AS(realization("e8", {}), std::invalid_argument);
  CHECK_THROWS_AS(realization("so", {4}), std::invalid_argument);
  CHECK_THROWS_AS(realization("su", {2, 2, 2}), std::invalid_argument);
}

TEST_CASE("cayley-dickson ladder produces the expected algebras") {
  const CayleyDickson& h = quaternions();
  auto i = h.basis_vec(1), j = h.basis_vec(2), k = h.basis_vec(3);
  CHECK(h.mul(i, j) == k);
  CHECK(h.mul(j, i) == h.conj(k));
  for (const auto& d : h.norm_diagonal()) CHECK(d == 1);

  const CayleyDickson& o = octonions();
  CHECK(o.dim == 8);
  for (const auto& d : o.norm_diagonal()) CHECK(d == 1);
  // Alternativity spot check: u(uv) = (uu)v for units.
  for (std::size_t a = 1; a < 8; ++a)
    for (std::size_t b = 1; b < 8; ++b) {
      auto u = o.basis_vec(a), v = o.basis_vec(b);
      CHECK(o.mul(u, o.mul(u, v)) == o.mul(o.mul(u, u), v));
    }

  const CayleyDickson& os = split_octonions();
  auto diag = os.norm_diagonal();
  int pos = 0, neg = 0;
  for (const auto& d : diag) (d == 1 ? pos : neg)++;
  CHECK(pos == 4);
  CHECK(neg == 4);
  CHECK(derivation_algebra(os).size() == 14);
  CHECK(derivation_algebra(o).size() == 14);
}

TEST_CASE("full orthogonal algebra: complete certificate suite") {
  Realization r = standard_so_basis(4, 3);
  auto sub = subalgebra_certificate(r);
  CHECK(sub.verdict == "pass");
  CHECK(sub.numbers.at("dim") == 21);

  auto fs = form_signature_certificate(r);
  CHECK(fs.verdict == "pass");
  CHECK(fs.numbers.at("space_dim") == 1);
  CHECK(fs.numbers.at("pos") == 4);
  CHECK(fs.numbers.at("neg") == 3);

  auto irr = irreducibility_certificate(r);
  CHECK(irr.verdict == "pass");
  CHECK(irr.numbers.at("centralizer_dim") == 1);

  auto tr = transitivity_certificate(r);
  CHECK(tr.verdict == "pass");
  CHECK(tr.numbers.at("compact_dim") == 9);  // so(4) + so(3)
  CHECK(tr.numbers.at("orbit_rank") == 6);
  CHECK(tr.numbers.at("trace_form_negative_definite") == 1);

  CHECK(reverify(sub, r));
  CHECK(reverify(fs, r));
  CHECK(reverify(irr, r));
  CHECK(reverify(tr, r));

  SECTION("tampered certificates are rejected") {
    auto bad = tr;
    bad.numbers["orbit_rank"] = 7;
    CHECK_FALSE(reverify(bad, r));
    bad = tr;
    bad.verdict = "fail";
    CHECK_FALSE(reverify(bad, r));
    bad = tr;
    bad.witness_vectors[0][0] += 1;
    CHECK_FALSE(reverify(bad, r));
  }
}

TEST_CASE("line stabilizer dimensions inside the ambient algebra") {
  CHECK(parabolic_basis(standard_so_basis(4, 3).form,
                        rat_vec({1, 0, 0, 0, 1, 0, 0}))
            .size() == 16);
  CHECK(parabolic_basis(standard_so_basis(4, 4).form,
                        rat_vec({1, 0, 0, 0, 1, 0, 0, 0}))
            .size() == 22);
  Realization big = standard_so_basis(8, 8);
  CHECK(parabolic_basis(big.form, big.compact_point).size() == 106);
  // Stabilizer elements do fix the line.
  auto par = parabolic_basis(standard_so_basis(4, 3).form,
                             rat_vec({1, 0, 0, 0, 1, 0, 0}));
  std::vector<Rat> w = rat_vec({1, 0, 0, 0, 1, 0, 0});
  for (const auto& x : par) {
    std::vector<std::vector<Rat>> rows = {mul_vec(x, w), w};
    CHECK(rank(Mat::from_row_vectors(rows)) <= 1);
  }
}

TEST_CASE("reducible block action: projection witness and orbit ranks") {
  Realization r = block_so_basis(4, 4);
  auto irr = irreducibility_certificate(r);
  CHECK(irr.verdict == "fail");
  CHECK(irr.numbers.at("centralizer_dim") == 2);
  REQUIRE_FALSE(irr.witness_vectors.empty());
  CHECK(irr.numbers.at("invariant_subspace_dim") == 4);
  // The witness spans an invariant coordinate block: every basis element
  // maps it into the same block.
  std::vector<Rat> wit;
  for (const auto& x : irr.witness_vectors[0]) wit.push_back(Rat(x));
  CHECK(reverify(irr, r));

  // Orbit rank at e1 + e5: each factor moves its own sphere, rank 3 + 3 + 1.
  auto k = compact_intersection(r);
  CHECK(k.size() == 12);
  CHECK(orbit_rank(k, rat_vec({1, 0, 0, 0, 1, 0, 0, 0})) == 7);
  // Block action is genuinely transitive on S^3 x S^3.
  CHECK(transitivity_certificate(r).verdict == "pass");
  // Trivial algebra: rank of the point alone.
  CHECK(orbit_rank({}, rat_vec({1, 0, 0, 0, 1, 0, 0, 0})) == 1);
}

TEST_CASE("commutant classification across division types") {
  SECTION("complex type: su(2,2)") {
    Realization r = su_realification(2, 2);
    auto irr = irreducibility_certificate(r);
    CHECK(irr.verdict == "pass");
    CHECK(irr.numbers.at("centralizer_dim") == 2);
    CHECK(irr.numbers.at("disc_num") < 0);
    CHECK(compact_intersection(r).size() == 7);
    CHECK(transitivity_certificate(r).verdict == "pass");
    auto fs = form_signature_certificate(r);
    CHECK(fs.numbers.at("space_dim") == 1);
  }
  SECTION("quaternionic type: sp(1,1)") {
    Realization r = sp_realification(1, 1);
    auto irr = irreducibility_certificate(r);
    CHECK(irr.verdict == "pass");
    CHECK(irr.numbers.at("centralizer_dim") == 4);
    CHECK(irr.numbers.at("quaternion_relations") == 1);
    CHECK(compact_intersection(r).size() == 6);
    CHECK(transitivity_certificate(r).verdict == "pass");
    CHECK(reverify(irr, r));
  }
  SECTION("real type: adding the commuting sp(1) collapses the commutant") {
    Realization r = sp1_sp_realification(1, 1);
    auto irr = irreducibility_certificate(r);
    CHECK(irr.verdict == "pass");
    CHECK(irr.numbers.at("centralizer_dim") == 1);
    CHECK(compact_intersection(r).size() == 9);
    CHECK(transitivity_certificate(r).verdict == "pass");
  }
  SECTION("complex structure on the realified orthogonal algebra") {
    Realization r = so_complex_realification(4);
    auto irr = irreducibility_certificate(r);
    CHECK(irr.numbers.at("centralizer_dim") == 2);
    auto fs = form_signature_certificate(r);
    CHECK(fs.numbers.at("space_dim") == 2);  // real and imaginary parts
  }
}

TEST_CASE("exceptional and spin realizations certify transitivity") {
  SECTION("split g2 on the trace-free split octonions") {
    Realization r = g2_split_realization();
    CHECK(compact_intersection(r).size() == 6);
    auto tr = transitivity_certificate(r);
    CHECK(tr.verdict == "pass");
    CHECK(tr.numbers.at("orbit_rank") == 6);  // S^3 x S^2 plus the point
    CHECK(irreducibility_certificate(r).verdict == "pass");
    CHECK(form_signature_certificate(r).numbers.at("space_dim") == 1);
  }
  SECTION("8-dimensional split spin representation") {
    Realization r = spin34_realification();
    CHECK(compact_intersection(r).size() == 9);
    CHECK(transitivity_certificate(r).verdict == "pass");
    auto irr = irreducibility_certificate(r);
    CHECK(irr.verdict == "pass");
    CHECK(irr.numbers.at("centralizer_dim") == 1);
    CHECK(form_signature_certificate(r).numbers.at("space_dim") == 1);
  }
  SECTION("16-dimensional Lorentzian spin representation") {
    Realization r = spin18_realification();
    auto k = compact_intersection(r);
    CHECK(k.size() == 28);
    auto tr = transitivity_certificate(r);
    CHECK(tr.verdict == "pass");
    CHECK(tr.numbers.at("orbit_rank") == 15);  // both 7-spheres filled
    auto irr = irreducibility_certificate(r);
    CHECK(irr.verdict == "pass");
    CHECK(irr.numbers.at("centralizer_dim") == 1);
    CHECK(form_signature_certificate(r).numbers.at("space_dim") == 1);
  }
}

TEST_CASE("pencil witness: exact identities and non-transitivity defects") {
  SECTION("witness data is integer and matches the fixed null vector") {
    auto pw = pencil_form_witness(4, 1, 0);
    CHECK(pw.w == std::vector<Int>{1, 0, 0, 1, 1, 0, 0, -1});
    CHECK(pw.companion.size() == 6);  // 2(n-2) middles + scaled pair
    CHECK(pw.form == detail::diag_pm(4, 4));
    CHECK_THROWS_AS(pencil_form_witness(4, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(pencil_form_witness(2, 1, 0), std::invalid_argument);
    // Mixed member: identities hold for general (alpha, beta) too.
    CHECK_NOTHROW(pencil_form_witness(5, 2, 3));
    CHECK_NOTHROW(pencil_form_witness(8, -1, 7));
  }
  SECTION("defect 1 for every excluded family at both pencil generators") {
    struct Case {
      Realization r;
      std::size_t n, h_dim;
    };
    std::vector<Case> cases;
    cases.push_back({sl2c_pair_realification(), 4, 12});
    cases.push_back({su2_sl2c_realification(), 4, 9});
    cases.push_back({so_complex_realification(8), 8, 56});
    for (const auto& cs : cases) {
      CAPTURE(cs.r.family);
      for (auto [a, b] : {std::pair<int, int>{1, 0}, {0, 1}}) {
        auto pw = pencil_form_witness(cs.n, a, b);
        std::vector<Rat> w;
        for (const auto& x : pw.w) w.push_back(Rat(x));
        auto lt = local_transitivity_certificate(cs.r.basis, pw.form, w);
        CHECK(lt.verdict == "pass");
        CHECK(lt.numbers.at("deficit") == 1);
        CHECK(lt.numbers.at("h_dim") == Int(cs.h_dim));
        lt.numbers["alpha"] = a;
        lt.numbers["beta"] = b;
        CHECK(reverify(lt, cs.r));
      }
    }
  }
  SECTION("a transitive algebra has no defect at a generic line") {
    Realization r = su_realification(2, 2);
    auto w = generic_null_line(3, 3, 20240816);
    auto lt = local_transitivity_certificate(r.basis, r.form, w);
    CHECK(lt.verdict == "fail");  // no non-transitivity certificate here
    CHECK(lt.numbers.at("sum_dim") == 28);
    CHECK(lt.numbers.at("deficit") == 0);
  }
}

TEST_CASE("seeded null lines are null, reproducible, and generic") {
  auto w1 = generic_null_line(3, 3, 7);
  auto w2 = generic_null_line(3, 3, 7);
  CHECK(w1 == w2);
  auto w3 = generic_null_line(3, 3, 8);
  CHECK(w1 != w3);
  Mat form = detail::diag_pm(4, 4);
  for (const auto& w : {w1, w3}) {
    Rat val = 0;
    for (std::size_t i = 0; i < 8; ++i)
      val += w[i] * w[i] * form.at(i, i);
    CHECK(val == 0);
  }
}

TEST_CASE("null vectors affinely spanning the ambient space") {
  auto c = null_cone_certificate(1, 1);
  CHECK(c.verdict == "pass");
  CHECK(c.numbers.at("count") == 5);
  CHECK(c.numbers.at("affine_rank") == 4);
  auto big = null_cone_certificate(7, 7);
  CHECK(big.verdict == "pass");
  CHECK(big.numbers.at("count") == 17);
  CHECK(big.numbers.at("affine_rank") == 16);
  for (std::size_t p = 2; p <= 4; ++p)
    for (std::size_t q = 2; q <= p; ++q)
      CHECK(null_cone_certificate(p, q).verdict == "pass");
  CHECK_THROWS_AS(null_cone_certificate(3, 0), std::invalid_argument);
  CHECK(reverify(c, standard_so_basis(2, 2)));
}

TEST_CASE("certificates are invariant under form-preserving symmetry") {
  // Conjugating by a signed permutation that preserves the diagonal form and
  // rescaling the witness point must not change any certified number.
  Prng rng(99);
  for (const char* fam : {"so", "su", "g2"}) {
    std::vector<Int> params;
    if (std::string(fam) == "so") params = {4, 3};
    if (std::string(fam) == "su") params = {2, 2};
    Realization r = realization(fam, params);
    Realization rc = signed_perm_conjugate(r, rng);
    CAPTURE(fam);
    auto a = transitivity_certificate(r);
    auto b = transitivity_certificate(rc);
    CHECK(a.numbers == b.numbers);
    CHECK(a.verdict == b.verdict);
    CHECK(irreducibility_certificate(r).numbers ==
          irreducibility_certificate(rc).numbers);
    // Rescaling the point leaves the orbit rank unchanged.
    auto k = compact_intersection(r);
    std::vector<Rat> w3 = r.compact_point;
    for (auto& x : w3) x *= 3;
    CHECK(orbit_rank(k, w3) == orbit_rank(k, r.compact_point));
  }
}

TEST_CASE("compact intersection demands the aligned diagonal form") {
  Realization r = standard_so_basis(3, 2);
  r.form.at(0, 1) = 1;  // break the unit-diagonal shape
  CHECK_THROWS_AS(compact_intersection(r), std::invalid_argument);
}
