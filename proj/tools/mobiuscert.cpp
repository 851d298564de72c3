// Command-line interface to the certification engine.
//
//   mobiuscert roots     --type <series><rank>
//   mobiuscert irreps    --algebra <spec> --dim <d>
//   mobiuscert realforms --compact <spec>
//   mobiuscert certify   --family <id> [--params <list>] [--witness <vector>]
//                        [--format text|json]
//   mobiuscert classify  --p <int> --q <int> [--format text|json]
//                        [--out FILE] [--seed <int>] [--case <id>]
//
// All output is deterministic for equal arguments and seed.

#include "mobius/catalog_data.hpp"
#include "mobius/classify.hpp"
#include "mobius/report.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace mobius;

int usage(const std::string& msg) {
  if (!msg.empty()) std::cerr << "error: " << msg << "\n";
  std::cerr <<
      "usage:\n"
      "  mobiuscert roots     --type <series><rank>          (e.g. --type B3)\n"
      "  mobiuscert irreps    --algebra <spec> --dim <d>     (e.g. --algebra A1+A1 --dim 8)\n"
      "  mobiuscert realforms --compact <spec>               (e.g. --compact \"su(2)+su(2)+u(1)\")\n"
      "  mobiuscert certify   --family <id> [--params <list>] [--witness <vector>] [--format text|json]\n"
      "        families: so a,b | su a,b | sp a,b | sp1sp a,b | soc n |\n"
      "                  sl2csl2c | su2sl2c | spin34 | spin18 | g2 | block a,b\n"
      "  mobiuscert classify  --p <int> --q <int> [--format text|json] [--out FILE] [--seed <int>] [--case <id>]\n";
  return 2;
}

// --key value pairs after the subcommand; returns std::nullopt on malformed
// input. Every key consumes exactly one value.
std::optional<std::map<std::string, std::string>> parse_args(
    int argc, char** argv, int start) {
  std::map<std::string, std::string> out;
  for (int i = start; i < argc; i += 2) {
    std::string key = argv[i];
    if (key.size() < 3 || key[0] != '-' || key[1] != '-') return std::nullopt;
    if (i + 1 >= argc) return std::nullopt;
    out[key.substr(2)] = argv[i + 1];
  }
  return out;
}

std::vector<Int> parse_int_list(const std::string& text) {
  std::vector<Int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Int(item));
  return out;
}

const Catalog& catalog() {
  static Catalog cat = Catalog::load(kCatalogText);
  return cat;
}

std::string weight_coords_str(const std::vector<Int>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].str();
  }
  return out + ")";
}

int cmd_roots(const std::map<std::string, std::string>& args) {
  auto it = args.find("type");
  if (it == args.end()) return usage("roots requires --type");
  RootSystem rs{parse_type(it->second)};
  std::cout << "root system " << it->second << "  rank " << rs.rank()
            << "  positive roots " << rs.positive_roots().size() << "\n\n";
  std::cout << "Cartan matrix (row i: <a_i, a_j^v>):\n";
  for (const auto& row : rs.cartan()) {
    std::cout << " ";
    for (const auto& x : row) std::cout << " " << x.str();
    std::cout << "\n";
  }
  std::cout << "\npositive roots (simple-root basis | fundamental-weight "
               "basis):\n";
  const auto& cartan = rs.cartan();
  for (const auto& root : rs.positive_roots()) {
    // fw coordinates: sum_j k_j * (column j of the Cartan matrix).
    std::vector<Int> fw(static_cast<std::size_t>(rs.rank()), Int(0));
    for (std::size_t i = 0; i < fw.size(); ++i)
      for (std::size_t j = 0; j < fw.size(); ++j)
        fw[i] += root[j] * cartan[i][j];
    std::cout << "  " << weight_coords_str(root) << "  |  "
              << weight_coords_str(fw) << "\n";
  }
  std::cout << "\nWeyl vector (fundamental-weight basis): "
            << rs.weyl_vector().str() << "\n";
  return 0;
}

void print_irrep_line(const ComplexIrrep& ir) {
  std::cout << "  " << ir.weight.str() << "  dim " << ir.dim.str()
            << "  self-dual " << (ir.self_dual ? "yes" : "no") << "  form "
            << form_type_str(ir.form_type) << "\n";
}

int cmd_irreps(const std::map<std::string, std::string>& args) {
  auto a_it = args.find("algebra");
  auto d_it = args.find("dim");
  if (a_it == args.end() || d_it == args.end())
    return usage("irreps requires --algebra and --dim");
  SemisimpleComplex a = parse_semisimple(a_it->second);
  const Int d(d_it->second);
  CandidateSets sets = candidate_sets(a, d);
  std::cout << "algebra " << a.str() << "  target real dimension " << d.str()
            << "\n\n";
  std::cout << "faithful irreducibles of complex dimension " << d.str()
            << " (Type I candidates): " << sets.c_d.size() << "\n";
  for (const auto& ir : sets.c_d) print_irrep_line(ir);
  if (d % 2 == 0) {
    std::cout << "\nfaithful irreducibles of complex dimension "
              << Int(d / 2).str() << " (Type II candidates): "
              << sets.c_half.size() << "\n";
    for (const auto& ir : sets.c_half) print_irrep_line(ir);
  }
  return 0;
}

int cmd_realforms(const std::map<std::string, std::string>& args) {
  auto it = args.find("compact");
  if (it == args.end()) return usage("realforms requires --compact");
  CompactAlgebra k = parse_compact(it->second);
  std::cout << "canonical compact: " << k.str() << "  dim " << k.dim()
            << "\n";
  auto sums = catalog().real_forms_with_compact(k);
  std::cout << "noncompact real forms with this maximal compact: "
            << sums.size() << "\n";
  for (const auto& h : sums) {
    long long dim = 0;
    for (const auto* e : h) dim += e->dim();
    std::cout << "  " << real_form_name(h) << "  dim " << dim
              << "  complexification " << complexification_of(h).str()
              << "\n";
  }
  return 0;
}

// The certificate bundle for one realized family, in the same shape the
// classification pipeline attaches to a record.
int cmd_certify(const std::map<std::string, std::string>& args) {
  auto f_it = args.find("family");
  if (f_it == args.end()) return usage("certify requires --family");
  std::vector<Int> params;
  if (auto p_it = args.find("params"); p_it != args.end())
    params = parse_int_list(p_it->second);
  const Realization r = realization(f_it->second, params);

  CaseRecord rec;
  rec.kamerich_id = "-";
  rec.compact = "-";
  rec.highest_weight = "-";
  rec.real_type = "-";
  rec.form_type = "-";
  rec.real_dim = Int(r.ambient);
  rec.real_form = detail::is_pencil_excluded_family(r.family) ||
                          r.family == "block"
                      ? r.family
                      : final_group_name(r.family,
                                         static_cast<int>(r.plus) - 1,
                                         static_cast<int>(r.minus) - 1);

  rec.certificates.push_back(subalgebra_certificate(r));
  rec.certificates.push_back(form_signature_certificate(r));
  rec.certificates.push_back(irreducibility_certificate(r));
  bool all_pass = true;
  for (const auto& c : rec.certificates) all_pass &= c.verdict == "pass";
  if (detail::is_pencil_excluded_family(r.family)) {
    bool deficient = true;
    for (auto [a, b] : {std::pair<int, int>{1, 0}, {0, 1}}) {
      NullPencilWitness pw = pencil_form_witness(r.ambient / 2, Int(a), Int(b));
      Certificate lt = local_transitivity_certificate(
          r.basis, pw.form, mobius::detail::to_rational(pw.w));
      lt.numbers["alpha"] = Int(a);
      lt.numbers["beta"] = Int(b);
      deficient &= lt.verdict == "pass";
      rec.certificates.push_back(std::move(lt));
    }
    rec.status = all_pass && deficient ? kStatusExcludedNotTransitive
                                       : kStatusUnresolved;
  } else {
    Certificate tr = transitivity_certificate(r);
    all_pass &= tr.verdict == "pass";
    rec.certificates.push_back(std::move(tr));
    rec.status = all_pass ? kStatusCertifiedTransitive : kStatusUnresolved;
  }
  if (auto w_it = args.find("witness"); w_it != args.end()) {
    std::vector<Rat> w;
    for (const auto& x : parse_int_list(w_it->second)) w.push_back(Rat(x));
    rec.certificates.push_back(
        local_transitivity_certificate(r.basis, r.form, w));
  }

  const std::string format =
      args.count("format") ? args.at("format") : "text";
  if (format == "json") {
    std::string out;
    detail::emit_json(detail::record_to_json(rec), out, 0);
    std::cout << out << "\n";
    return 0;
  }
  if (format != "text") return usage("unknown format: " + format);
  std::cout << "realization " << r.family;
  for (const auto& x : r.params) std::cout << " " << x.str();
  std::cout << "\n  " << r.note << "\n";
  std::cout << "  acting on R^" << r.ambient << " with invariant form of "
            << "signature (" << r.plus << "," << r.minus << ")\n";
  std::cout << "  verdict: " << rec.status << "\n";
  std::cout << "  certificates:\n";
  for (const auto& c : rec.certificates) {
    std::cout << "    - " << c.kind << ": " << c.verdict << "; ambient "
              << c.ambient_dim.str();
    for (const auto& [key, val] : c.numbers)
      std::cout << "; " << key << "=" << val.str();
    std::cout << "\n";
    for (const auto& wv : c.witness_vectors) {
      std::cout << "      witness [";
      for (std::size_t j = 0; j < wv.size(); ++j) {
        if (j) std::cout << ", ";
        std::cout << wv[j].str();
      }
      std::cout << "]\n";
    }
  }
  return 0;
}

int cmd_classify(const std::map<std::string, std::string>& args) {
  auto p_it = args.find("p");
  auto q_it = args.find("q");
  if (p_it == args.end() || q_it == args.end())
    return usage("classify requires --p and --q");
  const int p = std::stoi(p_it->second);
  const int q = std::stoi(q_it->second);
  const long long seed =
      args.count("seed") ? std::stoll(args.at("seed")) : 0;
  const std::string format =
      args.count("format") ? args.at("format") : "text";
  if (format != "text" && format != "json")
    return usage("unknown format: " + format);

  Report rep = run_pipeline(catalog(), p, q, seed);

  if (auto c_it = args.find("case"); c_it != args.end()) {
    // Focus the report on one named case: keep its records (and the final
    // groups they certify); everything else is elided.
    const std::string& id = c_it->second;
    case_real_form(id, p, q);  // validates the id
    std::vector<CaseRecord> kept;
    std::set<std::string> finals;
    for (const auto& rec : rep.records) {
      if (!record_matches_case(rec, id, p, q)) continue;
      if (rec.status == kStatusCertifiedTransitive) {
        auto spec = find_realization(rec.real_form, rec.highest_weight,
                                     std::max(p, q), std::min(p, q));
        if (spec) finals.insert(final_group_name(spec->family, p, q));
      }
      kept.push_back(rec);
    }
    rep.records = std::move(kept);
    rep.final_groups.assign(finals.begin(), finals.end());
    if (rep.records.empty())
      std::cerr << "note: case " << id << " has no surviving record at ("
                << p << "," << q << ")\n";
  }

  const std::string out_text = render_report(rep, format);
  if (auto o_it = args.find("out"); o_it != args.end()) {
    std::ofstream f(o_it->second, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << o_it->second << "\n";
      return 1;
    }
    f << out_text;
    std::cerr << "wrote " << o_it->second << "\n";
    return 0;
  }
  std::cout << out_text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) return usage("missing subcommand");
  const std::string cmd = argv[1];
  auto args = parse_args(argc, argv, 2);
  if (!args) return usage("arguments must come as --key value pairs");
  try {
    if (cmd == "roots") return cmd_roots(*args);
    if (cmd == "irreps") return cmd_irreps(*args);
    if (cmd == "realforms") return cmd_realforms(*args);
    if (cmd == "certify") return cmd_certify(*args);
    if (cmd == "classify") return cmd_classify(*args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return usage("unknown subcommand: " + cmd);
}
