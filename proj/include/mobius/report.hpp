#pragma once

// Report serialization: a deterministic JSON encoding (sorted keys, integer
// numbers only, byte-identical for equal reports) with a strict parser that
// round-trips exactly, plus a human-oriented text rendering.

#include "mobius/classify.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace mobius {

namespace detail {

// ---- minimal JSON document model (objects, arrays, strings, integers) ----

struct JsonValue {
  enum class Kind { object, array, string, number };
  Kind kind = Kind::object;
  std::map<std::string, JsonValue> object;  // sorted keys by construction
  std::vector<JsonValue> array;
  std::string string;
  Int number = 0;

  static JsonValue obj() { return JsonValue{Kind::object, {}, {}, "", 0}; }
  static JsonValue arr() { return JsonValue{Kind::array, {}, {}, "", 0}; }
  static JsonValue str(std::string s) {
    return JsonValue{Kind::string, {}, {}, std::move(s), 0};
  }
  static JsonValue num(Int n) {
    return JsonValue{Kind::number, {}, {}, "", std::move(n)};
  }

  const JsonValue& at(const std::string& key) const {
    auto it = object.find(key);
    if (it == object.end())
      throw std::invalid_argument("report field missing: " + key);
    return it->second;
  }
  const std::string& as_string() const {
    if (kind != Kind::string)
      throw std::invalid_argument("report field is not a string");
    return string;
  }
  const Int& as_number() const {
    if (kind != Kind::number)
      throw std::invalid_argument("report field is not an integer");
    return number;
  }
  const std::vector<JsonValue>& as_array() const {
    if (kind != Kind::array)
      throw std::invalid_argument("report field is not an array");
    return array;
  }
};

inline void json_escape(std::string& out, const std::string& s) {
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          static const char* hex = "0123456789abcdef";
          out += "\\u00";
          out += hex[(ch >> 4) & 0xf];
          out += hex[ch & 0xf];
        } else {
          out += ch;
        }
    }
  }
}

inline bool is_scalar(const JsonValue& v) {
  return v.kind == JsonValue::Kind::string ||
         v.kind == JsonValue::Kind::number;
}

// Objects and arrays of composites are laid out one element per line;
// arrays whose elements are all scalars are emitted inline, so vectors of
// integers stay on one line.
inline void emit_json(const JsonValue& v, std::string& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  const std::string pad2(static_cast<std::size_t>(indent) + 2, ' ');
  switch (v.kind) {
    case JsonValue::Kind::string:
      out += '"';
      json_escape(out, v.string);
      out += '"';
      return;
    case JsonValue::Kind::number:
      out += v.number.str();
      return;
    case JsonValue::Kind::object: {
      if (v.object.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, val] : v.object) {
        if (!first) out += ",\n";
        first = false;
        out += pad2;
        out += '"';
        json_escape(out, key);
        out += "\": ";
        emit_json(val, out, indent + 2);
      }
      out += "\n" + pad + "}";
      return;
    }
    case JsonValue::Kind::array: {
      if (v.array.empty()) {
        out += "[]";
        return;
      }
      bool scalars = true;
      for (const auto& e : v.array) scalars = scalars && is_scalar(e);
      if (scalars) {
        out += "[";
        for (std::size_t i = 0; i < v.array.size(); ++i) {
          if (i) out += ", ";
          emit_json(v.array[i], out, indent);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < v.array.size(); ++i) {
        if (i) out += ",\n";
        out += pad2;
        emit_json(v.array[i], out, indent + 2);
      }
      out += "\n" + pad + "]";
      return;
    }
  }
}

// ---- strict parser: JSON subset with integer-only numbers ----------------

class JsonParser {
 public:
  explicit JsonParser(const std::string& text) : s_(text) {}

  JsonValue parse_document() {
    JsonValue v = parse_value();
    skip_ws();
    if (i_ != s_.size())
      throw std::invalid_argument("trailing content after JSON document");
    return v;
  }

 private:
  const std::string& s_;
  std::size_t i_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("JSON parse error at offset " +
                                std::to_string(i_) + ": " + what);
  }
  void skip_ws() {
    while (i_ < s_.size() && (s_[i_] == ' ' || s_[i_] == '\n' ||
                              s_[i_] == '\t' || s_[i_] == '\r'))
      ++i_;
  }
  char peek() {
    skip_ws();
    if (i_ >= s_.size()) fail("unexpected end of input");
    return s_[i_];
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++i_;
  }

  JsonValue parse_value() {
    switch (peek()) {
      case '{': return parse_object();
      case '[': return parse_array();
      case '"': return JsonValue::str(parse_string());
      default: return parse_number();
    }
  }

  JsonValue parse_object() {
    expect('{');
    JsonValue out = JsonValue::obj();
    if (peek() == '}') {
      ++i_;
      return out;
    }
    for (;;) {
      std::string key = parse_string();
      expect(':');
      if (!out.object.emplace(std::move(key), parse_value()).second)
        fail("duplicate object key");
      if (peek() == ',') {
        ++i_;
        continue;
      }
      expect('}');
      return out;
    }
  }

  JsonValue parse_array() {
    expect('[');
    JsonValue out = JsonValue::arr();
    if (peek() == ']') {
      ++i_;
      return out;
    }
    for (;;) {
      out.array.push_back(parse_value());
      if (peek() == ',') {
        ++i_;
        continue;
      }
      expect(']');
      return out;
    }
  }

  std::string parse_string() {
    expect('"');
    std::string out;
    while (i_ < s_.size() && s_[i_] != '"') {
      char ch = s_[i_++];
      if (ch != '\\') {
        out += ch;
        continue;
      }
      if (i_ >= s_.size()) fail("dangling escape");
      char esc = s_[i_++];
      switch (esc) {
        case '"': out += '"'; break;
        case '\\': out += '\\'; break;
        case '/': out += '/'; break;
        case 'n': out += '\n'; break;
        case 't': out += '\t'; break;
        case 'r': out += '\r'; break;
        case 'u': {
          if (i_ + 4 > s_.size()) fail("short unicode escape");
          int code = 0;
          for (int k = 0; k < 4; ++k) {
            char h = s_[i_++];
            code <<= 4;
            if (h >= '0' && h <= '9') code |= h - '0';
            else if (h >= 'a' && h <= 'f') code |= h - 'a' + 10;
            else if (h >= 'A' && h <= 'F') code |= h - 'A' + 10;
            else fail("bad unicode escape");
          }
          if (code > 0x7f) fail("non-ASCII escape not supported");
          out += static_cast<char>(code);
          break;
        }
        default: fail("unknown escape");
      }
    }
    if (i_ >= s_.size()) fail("unterminated string");
    ++i_;  // closing quote
    return out;
  }

  JsonValue parse_number() {
    skip_ws();
    std::size_t start = i_;
    if (i_ < s_.size() && s_[i_] == '-') ++i_;
    std::size_t digits = 0;
    while (i_ < s_.size() && s_[i_] >= '0' && s_[i_] <= '9') {
      ++i_;
      ++digits;
    }
    if (digits == 0) fail("expected integer");
    if (i_ < s_.size() &&
        (s_[i_] == '.' || s_[i_] == 'e' || s_[i_] == 'E'))
      fail("floating-point numbers are not allowed in reports");
    return JsonValue::num(Int(s_.substr(start, i_ - start)));
  }
};

// ---- Report <-> JSON document --------------------------------------------

inline JsonValue certificate_to_json(const Certificate& c) {
  JsonValue out = JsonValue::obj();
  out.object["kind"] = JsonValue::str(c.kind);
  out.object["ambient_dim"] = JsonValue::num(c.ambient_dim);
  JsonValue numbers = JsonValue::obj();
  for (const auto& [key, val] : c.numbers)
    numbers.object[key] = JsonValue::num(val);
  out.object["numbers"] = std::move(numbers);
  JsonValue witnesses = JsonValue::arr();
  for (const auto& row : c.witness_vectors) {
    JsonValue v = JsonValue::arr();
    for (const auto& x : row) v.array.push_back(JsonValue::num(x));
    witnesses.array.push_back(std::move(v));
  }
  out.object["witness_vectors"] = std::move(witnesses);
  out.object["verdict"] = JsonValue::str(c.verdict);
  return out;
}

inline Certificate certificate_from_json(const JsonValue& v) {
  Certificate c;
  c.kind = v.at("kind").as_string();
  c.ambient_dim = v.at("ambient_dim").as_number();
  for (const auto& [key, val] : v.at("numbers").object)
    c.numbers[key] = val.as_number();
  if (v.at("numbers").kind != JsonValue::Kind::object)
    throw std::invalid_argument("certificate numbers must be an object");
  for (const auto& row : v.at("witness_vectors").as_array()) {
    std::vector<Int> out_row;
    for (const auto& x : row.as_array()) out_row.push_back(x.as_number());
    c.witness_vectors.push_back(std::move(out_row));
  }
  c.verdict = v.at("verdict").as_string();
  return c;
}

inline JsonValue record_to_json(const CaseRecord& r) {
  JsonValue out = JsonValue::obj();
  JsonValue certs = JsonValue::arr();
  for (const auto& c : r.certificates)
    certs.array.push_back(certificate_to_json(c));
  out.object["certificates"] = std::move(certs);
  out.object["compact"] = JsonValue::str(r.compact);
  out.object["complex_dim"] = JsonValue::num(r.complex_dim);
  out.object["form_type"] = JsonValue::str(r.form_type);
  out.object["highest_weight"] = JsonValue::str(r.highest_weight);
  out.object["kamerich_id"] = JsonValue::str(r.kamerich_id);
  out.object["real_dim"] = JsonValue::num(r.real_dim);
  out.object["real_form"] = JsonValue::str(r.real_form);
  out.object["real_type"] = JsonValue::str(r.real_type);
  out.object["self_dual"] = JsonValue::num(Int(r.self_dual));
  out.object["status"] = JsonValue::str(r.status);
  return out;
}

inline CaseRecord record_from_json(const JsonValue& v) {
  CaseRecord r;
  for (const auto& c : v.at("certificates").as_array())
    r.certificates.push_back(certificate_from_json(c));
  r.compact = v.at("compact").as_string();
  r.complex_dim = v.at("complex_dim").as_number();
  r.form_type = v.at("form_type").as_string();
  r.highest_weight = v.at("highest_weight").as_string();
  r.kamerich_id = v.at("kamerich_id").as_string();
  r.real_dim = v.at("real_dim").as_number();
  r.real_form = v.at("real_form").as_string();
  r.real_type = v.at("real_type").as_string();
  r.self_dual = v.at("self_dual").as_number().convert_to<int>();
  r.status = v.at("status").as_string();
  return r;
}

inline JsonValue report_to_json(const Report& r) {
  JsonValue out = JsonValue::obj();
  JsonValue finals = JsonValue::arr();
  for (const auto& g : r.final_groups)
    finals.array.push_back(JsonValue::str(g));
  out.object["final_groups"] = std::move(finals);
  JsonValue records = JsonValue::arr();
  for (const auto& rec : r.records)
    records.array.push_back(record_to_json(rec));
  out.object["records"] = std::move(records);
  out.object["seed"] = JsonValue::num(Int(r.seed));
  JsonValue sig = JsonValue::arr();
  sig.array.push_back(JsonValue::num(Int(r.p)));
  sig.array.push_back(JsonValue::num(Int(r.q)));
  out.object["signature"] = std::move(sig);
  out.object["tool_version"] = JsonValue::str(r.tool_version);
  return out;
}

inline Report report_from_json(const JsonValue& v) {
  Report r;
  const auto& sig = v.at("signature").as_array();
  if (sig.size() != 2)
    throw std::invalid_argument("signature must have two components");
  r.p = sig[0].as_number().convert_to<int>();
  r.q = sig[1].as_number().convert_to<int>();
  r.seed = v.at("seed").as_number().convert_to<long long>();
  r.tool_version = v.at("tool_version").as_string();
  for (const auto& rec : v.at("records").as_array())
    r.records.push_back(record_from_json(rec));
  for (const auto& g : v.at("final_groups").as_array())
    r.final_groups.push_back(g.as_string());
  return r;
}

}  // namespace detail

inline std::string render_report_json(const Report& r) {
  std::string out;
  detail::emit_json(detail::report_to_json(r), out, 0);
  out += "\n";
  return out;
}

inline Report parse_report(const std::string& text) {
  detail::JsonParser parser(text);
  return detail::report_from_json(parser.parse_document());
}

inline std::string render_report_text(const Report& r) {
  std::string out;
  out += "classification of transitive conformal actions on the null-line "
         "space of R^(" +
         std::to_string(r.p + 1) + "," + std::to_string(r.q + 1) + ")\n";
  out += "signature: (" + std::to_string(r.p) + "," + std::to_string(r.q) +
         ")   ambient dimension: " + std::to_string(r.p + r.q + 2) +
         "   tool version: " + r.tool_version +
         "   seed: " + std::to_string(r.seed) + "\n";
  out += "final groups: ";
  if (r.final_groups.empty()) out += "(none)";
  for (std::size_t i = 0; i < r.final_groups.size(); ++i) {
    if (i) out += ", ";
    out += r.final_groups[i];
  }
  out += "\n";
  std::map<std::string, std::size_t> counts;
  for (const auto& rec : r.records) ++counts[rec.status];
  out += "records: " + std::to_string(r.records.size());
  if (!counts.empty()) {
    out += " (";
    bool first = true;
    for (const auto& [status, n] : counts) {
      if (!first) out += ", ";
      first = false;
      out += status + " " + std::to_string(n);
    }
    out += ")";
  }
  out += "\n";
  for (std::size_t i = 0; i < r.records.size(); ++i) {
    const CaseRecord& rec = r.records[i];
    out += "\nrecord " + std::to_string(i + 1) + ": " + rec.status + "\n";
    out += "  sphere-product ids: " + rec.kamerich_id + "\n";
    out += "  compact: " + rec.compact + "\n";
    out += "  real form: " + rec.real_form + "\n";
    if (rec.highest_weight != "-") {
      out += "  highest weight: " + rec.highest_weight + "   type: " +
             rec.real_type + "   dim: " + rec.complex_dim.str() + " complex / " +
             rec.real_dim.str() + " real\n";
      out += "  self-dual: " +
             std::string(rec.self_dual == 1   ? "yes"
                         : rec.self_dual == 0 ? "no"
                                              : "-") +
             "   complex form: " + rec.form_type + "\n";
    }
    if (rec.certificates.empty()) continue;
    out += "  certificates:\n";
    for (const auto& c : rec.certificates) {
      out += "    - " + c.kind + ": " + c.verdict + "; ambient " +
             c.ambient_dim.str();
      for (const auto& [key, val] : c.numbers)
        out += "; " + key + "=" + val.str();
      out += "\n";
      for (const auto& wv : c.witness_vectors) {
        out += "      witness [";
        for (std::size_t j = 0; j < wv.size(); ++j) {
          if (j) out += ", ";
          out += wv[j].str();
        }
        out += "]\n";
      }
    }
  }
  return out;
}

// format is "text" or "json"; anything else throws.
inline std::string render_report(const Report& r, const std::string& format) {
  if (format == "json") return render_report_json(r);
  if (format == "text") return render_report_text(r);
  throw std::invalid_argument("unknown report format: " + format);
}

}  // namespace mobius
