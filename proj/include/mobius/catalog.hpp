#pragma once

// Catalog of real forms keyed by maximal compact subalgebra, and the
// Type I / Type II reality classification of real irreducible
// representations built from highest weights of the complexification.
//
// The catalog is a checked data file: every entry carries its family and
// parameters plus all derived fields (complexification, maximal compact,
// symmetric-space dimension, conjugation tag, index-rule tag, citation);
// the loader re-derives each field from the family and parameters and
// rejects the file on any mismatch, so the rules live in exactly one place
// and the file stays diff-reviewable.

#include "mobius/compact.hpp"
#include "mobius/irreps.hpp"
#include "mobius/rootsystem.hpp"

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mobius {

inline constexpr int kMaxRank = 20;  // per simple factor of a complexification

enum class FormFamily {
  so,       // so(a,b), a >= 1
  su,       // su(a,b), a,b >= 1
  sp,       // sp(a,b), a,b >= 1
  sl_r,     // sl(n,R)
  su_star,  // su*(2n)
  sl_c,     // sl(n,C) as a real algebra
  so_c,     // so(n,C) as a real algebra
  sp_c,     // sp(n,C) as a real algebra
  g2_split, // g2(2)
  g2_c,     // g2(C) as a real algebra
  c_su,     // compact su(n)
  c_so,     // compact so(n), n >= 7
  c_sp,     // compact sp(n)
  c_g2,     // compact g2
};

enum class ConjTag { id, dual, flip, swap_pair };
enum class IndexTag { so_spin, su_mid, fs, plus, su_star };

inline std::string form_family_str(FormFamily f) {
  switch (f) {
    case FormFamily::so: return "so";
    case FormFamily::su: return "su";
    case FormFamily::sp: return "sp";
    case FormFamily::sl_r: return "sl_r";
    case FormFamily::su_star: return "su_star";
    case FormFamily::sl_c: return "sl_c";
    case FormFamily::so_c: return "so_c";
    case FormFamily::sp_c: return "sp_c";
    case FormFamily::g2_split: return "g2_split";
    case FormFamily::g2_c: return "g2_c";
    case FormFamily::c_su: return "c_su";
    case FormFamily::c_so: return "c_so";
    case FormFamily::c_sp: return "c_sp";
    case FormFamily::c_g2: return "c_g2";
  }
  return "?";
}

inline std::string conj_tag_str(ConjTag t) {
  switch (t) {
    case ConjTag::id: return "id";
    case ConjTag::dual: return "dual";
    case ConjTag::flip: return "flip";
    case ConjTag::swap_pair: return "swap";
  }
  return "?";
}

inline std::string index_tag_str(IndexTag t) {
  switch (t) {
    case IndexTag::so_spin: return "so_spin";
    case IndexTag::su_mid: return "su_mid";
    case IndexTag::fs: return "fs";
    case IndexTag::plus: return "plus";
    case IndexTag::su_star: return "su_star";
  }
  return "?";
}

struct RealFormEntry {
  std::string name;
  FormFamily family = FormFamily::so;
  std::vector<int> params;
  SemisimpleComplex complexification;
  CompactAlgebra max_compact;
  long long symdim = 0;  // dim(form) - dim(max_compact)
  ConjTag conj = ConjTag::id;
  IndexTag index = IndexTag::plus;
  std::string cite;
  bool is_compact = false;

  int factor_count() const {
    return static_cast<int>(complexification.factors.size());
  }
  long long dim() const { return max_compact.dim() + symdim; }
};

namespace detail {

inline long long complex_dim(const SemisimpleComplex& a) {
  long long d = 0;
  for (const auto& t : a.factors)
    d += t.rank + 2 * expected_positive_roots(t);
  return d;
}

inline RootSystemType orthogonal_type(int n) {
  // complexification of so(n) / so(a,b) with a+b = n
  if (n % 2 == 1) return {Series::B, (n - 1) / 2};
  return {Series::D, n / 2};
}

}  // namespace detail

// Single source of truth for every derived field of a catalog entry.
inline RealFormEntry make_entry(FormFamily family,
                                const std::vector<int>& params) {
  RealFormEntry e;
  e.family = family;
  e.params = params;
  e.cite = "Knapp-AppC3";
  auto p = [&](std::size_t i) { return params.at(i); };
  auto two = [&](const char* head) {
    return std::string(head) + "(" + std::to_string(p(0)) + "," +
           std::to_string(p(1)) + ")";
  };
  switch (family) {
    case FormFamily::so: {
      int a = p(0), b = p(1);
      if (!(1 <= a && a <= b && a + b >= 5))
        throw std::invalid_argument("so(a,b) params out of range");
      e.name = two("so");
      e.complexification = {{detail::orthogonal_type(a + b)}};
      e.max_compact = canonical_compact(
          {"so(" + std::to_string(a) + ")", "so(" + std::to_string(b) + ")"});
      e.symdim = static_cast<long long>(a) * b;
      if ((a + b) % 2 == 1) {
        e.conj = ConjTag::id;
      } else {
        int k = (a + b) / 2;
        e.conj = ((b + k) % 2 == 1) ? ConjTag::flip : ConjTag::id;
      }
      e.index = IndexTag::so_spin;
      break;
    }
    case FormFamily::su: {
      int a = p(0), b = p(1);
      if (!(1 <= a && a <= b))
        throw std::invalid_argument("su(a,b) params out of range");
      e.name = two("su");
      e.complexification = {{{Series::A, a + b - 1}}};
      e.max_compact = canonical_compact(
          {"su(" + std::to_string(a) + ")", "su(" + std::to_string(b) + ")",
           "u(1)"});
      e.symdim = 2LL * a * b;
      e.conj = ConjTag::dual;
      e.index = IndexTag::su_mid;
      break;
    }
    case FormFamily::sp: {
      int a = p(0), b = p(1);
      if (!(1 <= a && a <= b))
        throw std::invalid_argument("sp(a,b) params out of range");
      e.name = two("sp");
      e.complexification = {{{Series::C, a + b}}};
      e.max_compact = canonical_compact(
          {"sp(" + std::to_string(a) + ")", "sp(" + std::to_string(b) + ")"});
      e.symdim = 4LL * a * b;
      e.conj = ConjTag::id;
      e.index = IndexTag::fs;
      break;
    }
    case FormFamily::sl_r: {
      int n = p(0);
      if (n < 3) throw std::invalid_argument("sl(n,R) params out of range");
      e.name = "sl(" + std::to_string(n) + ",R)";
      e.complexification = {{{Series::A, n - 1}}};
      e.max_compact = canonical_compact({"so(" + std::to_string(n) + ")"});
      e.symdim = static_cast<long long>(n - 1) * (n + 2) / 2;
      e.conj = ConjTag::id;
      e.index = IndexTag::plus;
      break;
    }
    case FormFamily::su_star: {
      int n = p(0);  // su*(2n)
      if (n < 2) throw std::invalid_argument("su*(2n) params out of range");
      e.name = "su*(" + std::to_string(2 * n) + ")";
      e.complexification = {{{Series::A, 2 * n - 1}}};
      e.max_compact = canonical_compact({"sp(" + std::to_string(n) + ")"});
      e.symdim = static_cast<long long>(n - 1) * (2 * n + 1);
      e.conj = ConjTag::id;
      e.index = IndexTag::su_star;
      break;
    }
    case FormFamily::sl_c: {
      int n = p(0);
      if (n < 2) throw std::invalid_argument("sl(n,C) params out of range");
      e.name = "sl(" + std::to_string(n) + ",C)";
      e.complexification = {{{Series::A, n - 1}, {Series::A, n - 1}}};
      e.max_compact = canonical_compact({"su(" + std::to_string(n) + ")"});
      e.symdim = static_cast<long long>(n) * n - 1;
      e.conj = ConjTag::swap_pair;
      e.index = IndexTag::plus;
      break;
    }
    case FormFamily::so_c: {
      int n = p(0);
      if (n < 7) throw std::invalid_argument("so(n,C) params out of range");
      e.name = "so(" + std::to_string(n) + ",C)";
      auto t = detail::orthogonal_type(n);
      e.complexification = {{t, t}};
      e.max_compact = canonical_compact({"so(" + std::to_string(n) + ")"});
      e.symdim = static_cast<long long>(n) * (n - 1) / 2;
      e.conj = ConjTag::swap_pair;
      e.index = IndexTag::plus;
      break;
    }
    case FormFamily::sp_c: {
      int n = p(0);
      if (n < 2) throw std::invalid_argument("sp(n,C) params out of range");
      e.name = "sp(" + std::to_string(n) + ",C)";
      e.complexification = {{{Series::C, n}, {Series::C, n}}};
      e.max_compact = canonical_compact({"sp(" + std::to_string(n) + ")"});
      e.symdim = static_cast<long long>(n) * (2 * n + 1);
      e.conj = ConjTag::swap_pair;
      e.index = IndexTag::plus;
      break;
    }
    case FormFamily::g2_split: {
      e.name = "g2(2)";
      e.complexification = {{{Series::G, 2}}};
      e.max_compact = canonical_compact({"su(2)", "su(2)"});
      e.symdim = 8;
      e.conj = ConjTag::id;
      e.index = IndexTag::plus;
      break;
    }
    case FormFamily::g2_c: {
      e.name = "g2(C)";
      e.complexification = {{{Series::G, 2}, {Series::G, 2}}};
      e.max_compact = canonical_compact({"g2"});
      e.symdim = 14;
      e.conj = ConjTag::swap_pair;
      e.index = IndexTag::plus;
      break;
    }
    case FormFamily::c_su: {
      int n = p(0);
      if (n < 2) throw std::invalid_argument("su(n) params out of range");
      e.name = "su(" + std::to_string(n) + ")";
      e.complexification = {{{Series::A, n - 1}}};
      e.max_compact = canonical_compact({e.name});
      e.symdim = 0;
      e.conj = ConjTag::dual;
      e.index = IndexTag::fs;
      e.is_compact = true;
      break;
    }
    case FormFamily::c_so: {
      int n = p(0);
      if (n < 7) throw std::invalid_argument("so(n) params out of range");
      e.name = "so(" + std::to_string(n) + ")";
      e.complexification = {{detail::orthogonal_type(n)}};
      e.max_compact = canonical_compact({e.name});
      e.symdim = 0;
      e.conj = ConjTag::dual;
      e.index = IndexTag::fs;
      e.is_compact = true;
      break;
    }
    case FormFamily::c_sp: {
      int n = p(0);
      if (n < 2) throw std::invalid_argument("sp(n) params out of range");
      e.name = "sp(" + std::to_string(n) + ")";
      e.complexification = {{{Series::C, n}}};
      e.max_compact = canonical_compact({e.name});
      e.symdim = 0;
      e.conj = ConjTag::dual;
      e.index = IndexTag::fs;
      e.is_compact = true;
      break;
    }
    case FormFamily::c_g2: {
      e.name = "g2";
      e.complexification = {{{Series::G, 2}}};
      e.max_compact = canonical_compact({"g2"});
      e.symdim = 0;
      e.conj = ConjTag::dual;
      e.index = IndexTag::fs;
      e.is_compact = true;
      break;
    }
  }
  for (const auto& t : e.complexification.factors)
    if (t.rank > kMaxRank)
      throw std::invalid_argument("entry exceeds rank horizon: " + e.name);
  if (detail::complex_dim(e.complexification) !=
      e.max_compact.dim() + e.symdim)
    throw std::logic_error("dimension identity violated: " + e.name);
  return e;
}

// ---------------------------------------------------------------------------
// Conjugation and index rules on direct sums of entries.

using RealFormSum = std::vector<const RealFormEntry*>;

inline SemisimpleComplex complexification_of(const RealFormSum& h) {
  SemisimpleComplex a;
  for (const auto* e : h)
    a.factors.insert(a.factors.end(), e->complexification.factors.begin(),
                     e->complexification.factors.end());
  return a;
}

inline std::string real_form_name(const RealFormSum& h) {
  std::string out;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (i) out += "+";
    out += h[i]->name;
  }
  return out;
}

inline HighestWeight apply_conjugation(const RealFormSum& h,
                                       const HighestWeight& w) {
  HighestWeight out = w;
  std::size_t off = 0;
  for (const auto* e : h) {
    std::size_t nf = static_cast<std::size_t>(e->factor_count());
    if (off + nf > w.per_factor.size())
      throw std::invalid_argument("weight/form factor mismatch");
    switch (e->conj) {
      case ConjTag::id: break;
      case ConjTag::dual:
        for (std::size_t j = 0; j < nf; ++j) {
          RootSystem rs(e->complexification.factors[j]);
          out.per_factor[off + j] = rs.dual_weight(w.per_factor[off + j]);
        }
        break;
      case ConjTag::flip: {
        auto& c = out.per_factor[off].coords;
        if (c.size() < 2) throw std::logic_error("flip needs rank >= 2");
        std::swap(c[c.size() - 1], c[c.size() - 2]);
        break;
      }
      case ConjTag::swap_pair:
        std::swap(out.per_factor[off], out.per_factor[off + 1]);
        break;
    }
    off += nf;
  }
  if (off != w.per_factor.size())
    throw std::invalid_argument("weight/form factor mismatch");
  return out;
}

namespace detail {

// Index (Frobenius-Schur-type invariant) of one entry's weight slice.
// Meaningful for slices fixed by the entry's conjugation; total elsewhere.
inline int entry_index(const RealFormEntry& e,
                       const std::vector<Weight>& slice) {
  switch (e.index) {
    case IndexTag::plus:
      return 1;
    case IndexTag::fs: {
      RootSystem rs(e.complexification.factors[0]);
      const Weight& w = slice[0];
      if (!rs.self_dual(w)) return 1;  // never consulted
      return rs.form_parity(w) == RootSystem::FormParity::orthogonal ? 1 : -1;
    }
    case IndexTag::su_star: {
      Int s = 0;
      for (std::size_t i = 0; i < slice[0].coords.size(); i += 2)
        s += slice[0].coords[i];
      return s % 2 == 0 ? 1 : -1;
    }
    case IndexTag::su_mid: {
      int a = e.params[0], b = e.params[1];
      int n = a + b;
      if (n % 2 == 1) return 1;
      int m = n / 2;
      Int am = slice[0].coords[m - 1];
      Int exp = Int(m + b) * am;
      return exp % 2 == 0 ? 1 : -1;
    }
    case IndexTag::so_spin: {
      int a = e.params[0], b = e.params[1];
      const auto& c = slice[0].coords;
      const auto t = e.complexification.factors[0];
      bool spinorial;
      if (t.series == Series::B)
        spinorial = c.back() % 2 != 0;
      else
        spinorial = (c[c.size() - 1] + c[c.size() - 2]) % 2 != 0;
      if (!spinorial) return 1;
      int m = ((a - b) % 8 + 8) % 8;
      if ((a + b) % 2 == 1) return (m == 1 || m == 7) ? 1 : -1;
      if (m == 0) return 1;
      if (m == 4) return -1;
      return 1;  // m = 2, 6: weight is never conjugation-fixed
    }
  }
  return 1;
}

}  // namespace detail

inline int conjugation_index(const RealFormSum& h, const HighestWeight& w) {
  int idx = 1;
  std::size_t off = 0;
  for (const auto* e : h) {
    std::size_t nf = static_cast<std::size_t>(e->factor_count());
    std::vector<Weight> slice(w.per_factor.begin() + off,
                              w.per_factor.begin() + off + nf);
    idx *= detail::entry_index(*e, slice);
    off += nf;
  }
  return idx;
}

struct RealIrrep {
  RealFormSum entries;
  HighestWeight weight;
  int real_type = 1;  // 1 or 2
  Int complex_dim = 0;
  Int real_dim = 0;
};

// Accepts w as a real irrep of real dimension d over the sum h, per the
// Type I / Type II criteria; std::nullopt on rejection.
inline std::optional<RealIrrep> reality_type(const RealFormSum& h,
                                             const HighestWeight& w,
                                             const Int& d) {
  SemisimpleComplex cx = complexification_of(h);
  ComplexIrrep ir = classify_complex_irrep(cx, w);  // validates shape
  RealIrrep out;
  out.entries = h;
  out.weight = w;
  out.complex_dim = ir.dim;
  if (ir.dim == d) {
    if (apply_conjugation(h, w) == w && conjugation_index(h, w) == 1) {
      out.real_type = 1;
      out.real_dim = d;
      return out;
    }
    return std::nullopt;
  }
  if (ir.dim * 2 == d) {
    if (apply_conjugation(h, w) != w || conjugation_index(h, w) == -1) {
      out.real_type = 2;
      out.real_dim = d;
      return out;
    }
    return std::nullopt;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Catalog: parsing, validation, and compact-multiset cover queries.

inline std::string format_entry(const RealFormEntry& e) {
  std::string params = "-";
  if (!e.params.empty()) {
    params.clear();
    for (std::size_t i = 0; i < e.params.size(); ++i) {
      if (i) params += ",";
      params += std::to_string(e.params[i]);
    }
  }
  return "entry name=" + e.name + " family=" + form_family_str(e.family) +
         " params=" + params + " complex=" + e.complexification.str() +
         " compact=" + e.max_compact.str() +
         " symdim=" + std::to_string(e.symdim) +
         " conj=" + conj_tag_str(e.conj) + " index=" + index_tag_str(e.index) +
         " cite=" + e.cite;
}

class Catalog {
 public:
  static Catalog load(std::string_view text) {
    Catalog cat;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    bool versioned = false;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty() || line[0] == '#') continue;
      std::istringstream ls(line);
      std::string head;
      ls >> head;
      if (head == "version") {
        int v = 0;
        ls >> v;
        if (v != 1)
          throw std::invalid_argument("unsupported catalog version");
        versioned = true;
        continue;
      }
      if (head != "entry")
        throw std::invalid_argument("catalog line " + std::to_string(lineno) +
                                    ": unknown directive " + head);
      if (!versioned)
        throw std::invalid_argument("catalog: entry before version line");
      cat.entries_.push_back(parse_entry(ls, lineno));
    }
    cat.finish();
    return cat;
  }

  const std::vector<RealFormEntry>& entries() const { return entries_; }

  const RealFormEntry* find(std::string_view name) const {
    auto it = by_name_.find(std::string(name));
    return it == by_name_.end() ? nullptr : &entries_[it->second];
  }

  // All direct sums of entries whose total maximal compact equals k and
  // which contain at least one non-compact summand. Each sum is returned
  // with entries in non-decreasing catalog order; the list is ordered
  // lexicographically by catalog indices (deterministic).
  std::vector<RealFormSum> real_forms_with_compact(
      const CompactAlgebra& k) const {
    validate_canonical(k);
    std::vector<RealFormSum> out;
    std::vector<const RealFormEntry*> chosen;
    search(k.factors, k.center_dim, 0, chosen, out);
    return out;
  }

 private:
  std::vector<RealFormEntry> entries_;
  std::map<std::string, std::size_t> by_name_;

  static void validate_canonical(const CompactAlgebra& k) {
    CompactAlgebra again = parse_compact(k.str());
    if (!(again == k))
      throw std::invalid_argument("compact algebra not canonical: " + k.str());
  }

  static FormFamily parse_family(const std::string& s) {
    for (FormFamily f :
         {FormFamily::so, FormFamily::su, FormFamily::sp, FormFamily::sl_r,
          FormFamily::su_star, FormFamily::sl_c, FormFamily::so_c,
          FormFamily::sp_c, FormFamily::g2_split, FormFamily::g2_c,
          FormFamily::c_su, FormFamily::c_so, FormFamily::c_sp,
          FormFamily::c_g2})
      if (form_family_str(f) == s) return f;
    throw std::invalid_argument("unknown family: " + s);
  }

  static RealFormEntry parse_entry(std::istringstream& ls, int lineno) {
    std::map<std::string, std::string> kv;
    std::string tok;
    while (ls >> tok) {
      auto eq = tok.find('=');
      if (eq == std::string::npos)
        throw std::invalid_argument("catalog line " + std::to_string(lineno) +
                                    ": bad token " + tok);
      kv[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
    for (const char* key : {"name", "family", "params", "complex", "compact",
                            "symdim", "conj", "index", "cite"})
      if (!kv.count(key))
        throw std::invalid_argument("catalog line " + std::to_string(lineno) +
                                    ": missing field " + key);
    std::vector<int> params;
    if (kv["params"] != "-") {
      std::istringstream ps(kv["params"]);
      std::string piece;
      while (std::getline(ps, piece, ',')) params.push_back(std::stoi(piece));
    }
    RealFormEntry derived = make_entry(parse_family(kv["family"]), params);
    // Every stored field must agree with the derived entry.
    auto expect = [&](const std::string& field, const std::string& stored,
                      const std::string& want) {
      if (stored != want)
        throw std::invalid_argument(
            "catalog line " + std::to_string(lineno) + ": field " + field +
            " is " + stored + ", expected " + want);
    };
    expect("name", kv["name"], derived.name);
    expect("complex", kv["complex"], derived.complexification.str());
    expect("compact", kv["compact"], derived.max_compact.str());
    expect("symdim", kv["symdim"], std::to_string(derived.symdim));
    expect("conj", kv["conj"], conj_tag_str(derived.conj));
    expect("index", kv["index"], index_tag_str(derived.index));
    derived.cite = kv["cite"];
    return derived;
  }

  void finish() {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      auto [it, fresh] = by_name_.emplace(entries_[i].name, i);
      (void)it;
      if (!fresh)
        throw std::invalid_argument("duplicate catalog entry: " +
                                    entries_[i].name);
    }
  }

  // True iff sub is a sub-multiset of sorted super; removes it from super.
  static bool take_submultiset(std::vector<CompactSimple>& super,
                               const std::vector<CompactSimple>& sub) {
    std::vector<CompactSimple> rest;
    rest.reserve(super.size());
    std::size_t i = 0;
    for (const auto& f : super) {
      if (i < sub.size() && sub[i] == f)
        ++i;
      else
        rest.push_back(f);
    }
    if (i != sub.size()) return false;
    super = std::move(rest);
    return true;
  }

  void search(std::vector<CompactSimple> remaining, int center,
              std::size_t min_idx, std::vector<const RealFormEntry*>& chosen,
              std::vector<RealFormSum>& out) const {
    if (remaining.empty() && center == 0) {
      for (const auto* e : chosen)
        if (!e->is_compact) {
          out.push_back(chosen);
          return;
        }
      return;
    }
    for (std::size_t i = min_idx; i < entries_.size(); ++i) {
      const auto& e = entries_[i];
      if (e.max_compact.center_dim > center) continue;
      std::vector<CompactSimple> rest = remaining;
      if (!take_submultiset(rest, e.max_compact.factors)) continue;
      chosen.push_back(&e);
      search(std::move(rest), center - e.max_compact.center_dim, i, chosen,
             out);
      chosen.pop_back();
    }
  }
};

}  // namespace mobius
