// End-to-end tests of the classification pipeline: sphere-product catalog,
// final group sets at benchmark signatures, record-level pins for the
// certified survivors and the pencil exclusions, named-case lookup, report
// round-trips, and determinism.

#include "catch2/catch_amalgamated.hpp"
#include "mobius/catalog_data.hpp"
#include "mobius/classify.hpp"
#include "mobius/report.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

using namespace mobius;

namespace {

const Catalog& cat() {
  static Catalog c = Catalog::load(kCatalogText);
  return c;
}

// Pipeline runs are cached: several tests inspect the same signature.
const Report& report(int p, int q) {
  static std::map<std::pair<int, int>, Report> cache;
  const auto key = std::make_pair(p, q);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, run_pipeline(cat(), p, q, 0)).first;
  return it->second;
}

std::set<std::string> finals(int p, int q) {
  const Report& r = report(p, q);
  return {r.final_groups.begin(), r.final_groups.end()};
}

std::vector<const CaseRecord*> with_status(const Report& r,
                                           const std::string& status) {
  std::vector<const CaseRecord*> out;
  for (const auto& rec : r.records)
    if (rec.status == status) out.push_back(&rec);
  return out;
}

std::multiset<std::string> real_forms(
    const std::vector<const CaseRecord*>& recs) {
  std::multiset<std::string> out;
  for (const auto* r : recs) out.insert(r->real_form);
  return out;
}

}  // namespace

TEST_CASE("sphere-product catalog lists the expected actions") {
  auto ids = [](int p, int q) {
    std::set<std::string> out;
    for (const auto& e : kamerich_entries(p, q)) out.insert(e.list_id);
    return out;
  };

  CHECK(ids(2, 2) == std::set<std::string>{"II(a,a)"});
  CHECK(ids(3, 2) ==
        std::set<std::string>{"II(a,a)", "II(a,b)", "II(a,c)", "III(a)"});
  CHECK(ids(3, 3) == std::set<std::string>{"II(a,a)", "II(a,b)", "II(a,c)",
                                           "II(b,b)", "II(b,c)", "II(c,c)"});

  const auto at77 = ids(7, 7);
  for (const char* id : {"I(b)", "II(a,a)", "II(a,b)", "II(a,c)", "II(a,e)",
                         "II(b,b)", "II(b,c)", "II(b,e)", "II(c,c)",
                         "II(c,e)", "II(e,e)", "III(e)"})
    CHECK(at77.count(id) == 1);
  CHECK(at77.size() == 12);

  // Entries dedup on (id, canonical compact): the two letter orders of a
  // mixed product collapse to one sorted id.
  for (const auto& e : kamerich_entries(5, 3))
    CHECK(e.list_id.find("II(b,a)") == std::string::npos);

  CHECK_THROWS_AS(kamerich_entries(1, 5), std::invalid_argument);
  CHECK_THROWS_AS(kamerich_entries(4, 0), std::invalid_argument);
}

TEST_CASE("final groups at the benchmark signatures") {
  CHECK(finals(2, 2) == std::set<std::string>{"so(3,3)"});
  CHECK(finals(3, 2) == std::set<std::string>{"g2(2)", "so(4,3)"});
  CHECK(finals(2, 3) == std::set<std::string>{"g2(2)", "so(3,4)"});
  CHECK(finals(4, 3) == std::set<std::string>{"so(5,4)"});
  CHECK(finals(3, 3) ==
        std::set<std::string>{"so(4,4)", "sp(1)+sp(1,1)", "sp(1,1)",
                              "spin(3,4)", "su(2,2)"});
  CHECK(finals(5, 5) == std::set<std::string>{"so(6,6)", "su(3,3)"});
}

TEST_CASE("every record reaches a terminal status") {
  for (auto [p, q] : std::vector<std::pair<int, int>>{
           {2, 2}, {3, 2}, {2, 3}, {3, 3}, {4, 3}, {5, 5}}) {
    const auto counts = status_counts(report(p, q));
    INFO("signature (" << p << "," << q << ")");
    CHECK(counts.count(kStatusUnresolved) == 0);
    CHECK(counts.count(kStatusCandidate) == 0);
  }
}

TEST_CASE("signature (2,2): one survivor, fully certified") {
  const Report& r = report(2, 2);
  CHECK(r.records.size() == 13);
  const auto counts = status_counts(r);
  CHECK(counts.at(kStatusCertifiedTransitive) == 1);
  CHECK(counts.at(kStatusExcludedCompactness) == 1);
  CHECK(counts.at(kStatusExcludedDimension) == 3);
  CHECK(counts.at(kStatusExcludedReality) == 8);

  const auto survivors = with_status(r, kStatusCertifiedTransitive);
  REQUIRE(survivors.size() == 1);
  const CaseRecord& rec = *survivors[0];
  CHECK(rec.real_form == "so(3,3)");
  CHECK(rec.highest_weight == "(1,0,0)");
  CHECK(rec.real_type == "I");
  CHECK(rec.complex_dim == 6);
  CHECK(rec.real_dim == 6);
  CHECK(rec.form_type == "orthogonal");
  CHECK(rec.kamerich_id == "II(a,a)");
  CHECK(parse_compact(rec.compact).dim() == 6);

  std::set<std::string> kinds;
  for (const auto& c : rec.certificates) {
    CHECK(c.verdict == "pass");
    kinds.insert(c.kind);
  }
  CHECK(kinds == std::set<std::string>{"subalgebra", "form_signature",
                                       "irreducible", "transitive"});
}

TEST_CASE("signature (3,3): survivors and pencil exclusions") {
  const Report& r = report(3, 3);
  CHECK(r.records.size() == 168);

  const auto survivors = with_status(r, kStatusCertifiedTransitive);
  CHECK(real_forms(survivors) ==
        std::multiset<std::string>{"so(4,4)", "so(4,4)", "so(4,4)", "so(3,4)",
                                   "sp(1,1)", "sp(1,1)+su(2)", "su(2,2)"});

  // The three 8-dimensional classes of so(4,4) all certify: vector and both
  // half-spin images are exchanged by triality, and each passes on its own.
  std::set<std::string> so44_weights;
  for (const auto* rec : survivors)
    if (rec->real_form == "so(4,4)") {
      CHECK(rec->real_type == "I");
      so44_weights.insert(rec->highest_weight);
    }
  CHECK(so44_weights ==
        std::set<std::string>{"(1,0,0,0)", "(0,0,1,0)", "(0,0,0,1)"});

  const auto excluded = with_status(r, kStatusExcludedNotTransitive);
  CHECK(real_forms(excluded) ==
        std::multiset<std::string>{"sl(2,C)+sl(2,C)", "sl(2,C)+sl(2,C)",
                                   "sl(2,C)+su(2)"});

  // Each exclusion carries a deficient local-transitivity certificate at
  // both generators of the invariant-form pencil.
  for (const auto* rec : excluded) {
    CHECK(rec->real_type == "II");
    std::set<std::pair<std::string, std::string>> generators;
    for (const auto& c : rec->certificates) {
      if (c.kind != "not_locally_transitive") {
        CHECK(c.verdict == "pass");
        continue;
      }
      CHECK(c.verdict == "pass");
      CHECK(c.numbers.at("deficit") == 1);
      generators.insert({c.numbers.at("alpha").str(),
                         c.numbers.at("beta").str()});
    }
    CHECK(generators == std::set<std::pair<std::string, std::string>>{
                            {"1", "0"}, {"0", "1"}});
  }

  CHECK(reverify_report(r));
}

TEST_CASE("signature (5,5): orthogonal and unitary survivors only") {
  const Report& r = report(5, 5);
  CHECK(r.records.size() == 72);
  const auto survivors = with_status(r, kStatusCertifiedTransitive);
  CHECK(real_forms(survivors) ==
        std::multiset<std::string>{"so(6,6)", "su(3,3)"});
  for (const auto* rec : survivors)
    if (rec->real_form == "su(3,3)") {
      CHECK(rec->real_type == "II");
      CHECK(rec->complex_dim == 6);
      CHECK(rec->real_dim == 12);
    }
  CHECK(with_status(r, kStatusExcludedNotTransitive).empty());
}

TEST_CASE("named cases match pipeline records at their minimal signatures") {
  for (const auto& row : named_cases()) {
    if (row.p > 5 || row.q > 5) continue;  // spin cases live at (7,7)
    INFO("case " << row.id);
    const Report& r = report(row.p, row.q);
    std::size_t matches = 0;
    bool weight_seen = row.weight.empty();
    bool certified = false;
    for (const auto& rec : r.records) {
      if (!record_matches_case(rec, row.id, row.p, row.q)) continue;
      ++matches;
      CHECK(parse_compact(rec.compact).dim() == row.compact_dim);
      if (rec.highest_weight == row.weight) weight_seen = true;
      if (rec.status == kStatusCertifiedTransitive) certified = true;
      if (!row.transitive) CHECK(rec.status == kStatusExcludedNotTransitive);
    }
    CHECK(matches >= 1);
    CHECK(weight_seen);
    CHECK(certified == row.transitive);
  }
}

TEST_CASE("swapping p and q relabels but does not change the outcome") {
  const Report& a = report(3, 2);
  const Report& b = report(2, 3);
  CHECK(status_counts(a) == status_counts(b));
  CHECK(a.records.size() == b.records.size());
  // so(4,3) vs so(3,4): same algebra, displayed in the caller's order.
  CHECK(finals(3, 2).count("so(4,3)") == 1);
  CHECK(finals(2, 3).count("so(3,4)") == 1);
}

TEST_CASE("realization lookup normalizes outer-automorphism classes") {
  auto spec = find_realization("so(4,4)", "(0,0,1,0)", 3, 3);
  REQUIRE(spec.has_value());
  CHECK(spec->family == "so");
  CHECK(spec->params == std::vector<Int>{4, 4});

  spec = find_realization("so(8,C)", "(0,0,0,1)x(0,0,0,0)", 7, 7);
  REQUIRE(spec.has_value());
  CHECK(spec->family == "soc");

  spec = find_realization("su(2,2)", "(1,0,0)", 3, 3);
  REQUIRE(spec.has_value());
  CHECK(spec->family == "su");
  CHECK(spec->params == std::vector<Int>{2, 2});

  CHECK(!find_realization("so(5,5)", "(1,0,0)", 3, 3).has_value());
  CHECK(!find_realization("f4(4)", "(1,0,0,0)", 12, 12).has_value());

  CHECK(final_group_name("su", 5, 5) == "su(3,3)");
  CHECK(final_group_name("sp1sp", 7, 7) == "sp(1)+sp(2,2)");
  CHECK_THROWS_AS(final_group_name("soc", 7, 7), std::logic_error);
}

TEST_CASE("case id lookup validates its argument") {
  CHECK(case_real_form("II_a_a", 4, 3) == "so(4,5)");
  CHECK(case_real_form("II_b_b_i", 5, 3) == "su(2,3)");
  CHECK(case_real_form("II_b_b_i", 4, 4) == "");  // even signature: no match
  CHECK(case_real_form("I_b_i", 7, 7) == "so(1,8)");
  CHECK(case_real_form("I_b_i", 5, 5) == "");
  CHECK_THROWS_AS(case_real_form("II_z_z", 3, 3), std::invalid_argument);
}

TEST_CASE("reports survive a render/parse round trip") {
  const Report& r = report(3, 2);
  const std::string text = render_report_json(r);
  const Report back = parse_report(text);
  CHECK(back == r);
  CHECK(render_report_json(back) == text);

  Report empty;
  empty.p = 2;
  empty.q = 2;
  empty.tool_version = kToolVersion;
  const Report empty_back = parse_report(render_report_json(empty));
  CHECK(empty_back == empty);
}

TEST_CASE("report rendering rejects bad input") {
  CHECK_THROWS(render_report(report(2, 2), "yaml"));
  CHECK_THROWS(parse_report("{\"seed\": 1.5}"));   // no floats anywhere
  CHECK_THROWS(parse_report("{\"seed\": 1e3}"));
  CHECK_THROWS(parse_report("not json"));
  CHECK_THROWS_AS(run_pipeline(cat(), 1, 4, 0), std::invalid_argument);
}

TEST_CASE("two pipeline runs render byte-identically") {
  const Report a = run_pipeline(cat(), 3, 2, 17);
  const Report b = run_pipeline(cat(), 3, 2, 17);
  CHECK(a == b);
  CHECK(render_report_json(a) == render_report_json(b));
  CHECK(render_report_text(a) == render_report_text(b));
}
