#include "hg/io.hpp"

#include <cctype>
#include <cstdio>
#include <ostream>

namespace hg::io {

namespace {

std::string fmt_double(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string serialize(const Hypergroup& h) {
  const int n = h.order();
  std::string out = "{\"order\":" + std::to_string(n) + ",\"star\":[";
  for (int i = 0; i < n; ++i) {
    if (i) out += ',';
    out += std::to_string(h.star()(i));
  }
  out += "],\"table\":[";
  for (int i = 0; i < n; ++i) {
    if (i) out += ',';
    out += '[';
    for (int j = 0; j < n; ++j) {
      if (j) out += ',';
      out += '[';
      for (int k = 0; k < n; ++k) {
        if (k) out += ',';
        out += '"';
        out += to_fraction_string(h.at(i, j, k));
        out += '"';
      }
      out += ']';
    }
    out += ']';
  }
  out += "]}\n";
  return out;
}

namespace {

// Recursive-descent reader for the document grammar. Whitespace between
// tokens is tolerated; everything else is strict.
class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool at_end() {
    skip_ws();
    return pos_ == text_.size();
  }

  char peek() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of document");
    return text_[pos_];
  }

  void expect(char c) {
    if (peek() != c) {
      fail(std::string("expected '") + c + "', found '" + text_[pos_] + "'");
    }
    ++pos_;
  }

  bool consume_if(char c) {
    if (!at_end() && peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  // Unsigned decimal literal without leading zeros (except "0" itself).
  long read_uint() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) fail("expected an integer");
    std::string_view digits = text_.substr(start, pos_ - start);
    if (digits.size() > 1 && digits[0] == '0') fail("integer has leading zeros");
    if (digits.size() > 9) fail("integer literal out of range");
    long v = 0;
    for (char c : digits) v = v * 10 + (c - '0');
    return v;
  }

  std::string read_string() {
    expect('"');
    size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != '"') {
      if (text_[pos_] == '\\') fail("escape sequences are not allowed");
      ++pos_;
    }
    if (pos_ == text_.size()) fail("unterminated string");
    std::string s(text_.substr(start, pos_ - start));
    ++pos_;
    return s;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError("parse error at byte " + std::to_string(pos_) + ": " + message);
  }

 private:
  std::string_view text_;
  size_t pos_ = 0;
};

}  // namespace

Hypergroup parse_document(std::string_view text) {
  Cursor cur(text);
  cur.expect('{');

  bool have_order = false, have_star = false, have_table = false;
  long order = 0;
  std::vector<int> star;
  std::vector<std::vector<std::vector<std::string>>> table;

  while (true) {
    const std::string key = cur.read_string();
    cur.expect(':');
    if (key == "order") {
      if (have_order) cur.fail("duplicate key \"order\"");
      have_order = true;
      order = cur.read_uint();
      if (order < 1) cur.fail("order must be positive");
    } else if (key == "star") {
      if (have_star) cur.fail("duplicate key \"star\"");
      have_star = true;
      cur.expect('[');
      do {
        star.push_back(static_cast<int>(cur.read_uint()));
      } while (cur.consume_if(','));
      cur.expect(']');
    } else if (key == "table") {
      if (have_table) cur.fail("duplicate key \"table\"");
      have_table = true;
      cur.expect('[');
      do {
        std::vector<std::vector<std::string>> plane;
        cur.expect('[');
        do {
          std::vector<std::string> row;
          cur.expect('[');
          do {
            row.push_back(cur.read_string());
          } while (cur.consume_if(','));
          cur.expect(']');
          plane.push_back(std::move(row));
        } while (cur.consume_if(','));
        cur.expect(']');
        table.push_back(std::move(plane));
      } while (cur.consume_if(','));
      cur.expect(']');
    } else {
      cur.fail("unknown key \"" + key + "\"");
    }
    if (!cur.consume_if(',')) break;
  }
  cur.expect('}');
  if (!cur.at_end()) cur.fail("trailing content after document");

  if (!have_order || !have_star || !have_table) {
    throw ParseError("document is missing a required key");
  }
  const int n = static_cast<int>(order);
  if (static_cast<int>(star.size()) != n) {
    throw ParseError("star length does not match order");
  }
  StarInvolution star_map{star};
  if (!star_map.is_valid()) {
    throw ParseError("star is not an involution fixing 0");
  }
  if (static_cast<int>(table.size()) != n) {
    throw ParseError("table has wrong dimensions");
  }
  std::vector<Rational> flat;
  flat.reserve(static_cast<size_t>(n) * n * n);
  for (const auto& plane : table) {
    if (static_cast<int>(plane.size()) != n) {
      throw ParseError("table has wrong dimensions");
    }
    for (const auto& row : plane) {
      if (static_cast<int>(row.size()) != n) {
        throw ParseError("table has wrong dimensions");
      }
      for (const std::string& cell : row) {
        auto q = parse_canonical_fraction(cell);
        if (!q) throw ParseError("malformed rational \"" + cell + "\"");
        flat.push_back(std::move(*q));
      }
    }
  }
  return Hypergroup(n, std::move(star_map), std::move(flat));
}

namespace {

std::string pair_str(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

std::string triple_str(int i, int j, int k) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + "," +
         std::to_string(k) + ")";
}

constexpr size_t kMaxListed = 10;

template <class V, class Fn>
std::string listed(const std::vector<V>& violations, Fn&& fmt) {
  std::string out;
  for (size_t idx = 0; idx < violations.size() && idx < kMaxListed; ++idx) {
    out += "\n    " + fmt(violations[idx]);
  }
  if (violations.size() > kMaxListed) {
    out += "\n    ... and " + std::to_string(violations.size() - kMaxListed) + " more";
  }
  return out;
}

}  // namespace

std::string report_to_text(const validation::ValidationReport& r) {
  using validation::StochasticViolation;
  std::string out;
  out += "unit rows:          ";
  out += r.unit_ok ? "ok" : "FAIL";
  out += "\nrow stochasticity:  ";
  if (r.stochastic_violations.empty()) {
    out += "ok";
  } else {
    out += "FAIL (" + std::to_string(r.stochastic_violations.size()) + ")";
    out += listed(r.stochastic_violations, [](const StochasticViolation& v) {
      if (v.kind == StochasticViolation::Kind::kNegativeEntry) {
        return "m" + triple_str(v.i, v.j, v.k) + " = " + to_fraction_string(v.value) +
               " is negative";
      }
      return "row " + pair_str(v.i, v.j) + " sums to " + to_fraction_string(v.value);
    });
  }
  out += "\nstar compatibility: ";
  if (r.star_compat_violations.empty()) {
    out += "ok";
  } else {
    out += "FAIL (" + std::to_string(r.star_compat_violations.size()) + ")";
    out += listed(r.star_compat_violations, [](const validation::StarCompatViolation& v) {
      return "at " + triple_str(v.i, v.j, v.k);
    });
  }
  out += "\nsupport condition:  ";
  if (r.support_violations.empty()) {
    out += "ok";
  } else {
    out += "FAIL (" + std::to_string(r.support_violations.size()) + ")";
    out += listed(r.support_violations, [](const validation::SupportViolation& v) {
      return "at " + pair_str(v.i, v.j);
    });
  }
  out += "\nassociativity:      ";
  if (r.associativity_violations.empty()) {
    out += "ok";
  } else {
    out += "FAIL (" + std::to_string(r.associativity_violations.size()) + " triples)";
    out += listed(r.associativity_violations,
                  [](const validation::AssociativityViolation& v) {
                    return "triple " + triple_str(v.i, v.j, v.k) +
                           ", max residual " + to_fraction_string(v.max_residual);
                  });
  }
  out += "\ncommutativity:      ";
  if (r.commutativity_witness) {
    out += "non-commutative, witness " +
           pair_str(r.commutativity_witness->first, r.commutativity_witness->second);
  } else {
    out += "commutative";
  }
  out += "\noverall:            ";
  out += r.overall ? "valid hypergroup" : "NOT a hypergroup";
  out += "\n";
  return out;
}

std::string report_to_json(const validation::ValidationReport& r) {
  using validation::StochasticViolation;
  std::string out = "{\"unit_ok\":";
  out += r.unit_ok ? "true" : "false";
  out += ",\"stochastic_violations\":[";
  for (size_t idx = 0; idx < r.stochastic_violations.size(); ++idx) {
    const auto& v = r.stochastic_violations[idx];
    if (idx) out += ',';
    out += "{\"i\":" + std::to_string(v.i) + ",\"j\":" + std::to_string(v.j) +
           ",\"kind\":\"";
    out += v.kind == StochasticViolation::Kind::kNegativeEntry ? "negative_entry"
                                                               : "bad_row_sum";
    out += "\",\"k\":" + std::to_string(v.k) + ",\"value\":\"" +
           to_fraction_string(v.value) + "\"}";
  }
  out += "],\"star_compat_violations\":[";
  for (size_t idx = 0; idx < r.star_compat_violations.size(); ++idx) {
    const auto& v = r.star_compat_violations[idx];
    if (idx) out += ',';
    out += "[" + std::to_string(v.i) + "," + std::to_string(v.j) + "," +
           std::to_string(v.k) + "]";
  }
  out += "],\"support_violations\":[";
  for (size_t idx = 0; idx < r.support_violations.size(); ++idx) {
    const auto& v = r.support_violations[idx];
    if (idx) out += ',';
    out += "[" + std::to_string(v.i) + "," + std::to_string(v.j) + "]";
  }
  out += "],\"associativity_violations\":[";
  for (size_t idx = 0; idx < r.associativity_violations.size(); ++idx) {
    const auto& v = r.associativity_violations[idx];
    if (idx) out += ',';
    out += "{\"triple\":[" + std::to_string(v.i) + "," + std::to_string(v.j) + "," +
           std::to_string(v.k) + "],\"max_residual\":\"" +
           to_fraction_string(v.max_residual) + "\"}";
  }
  out += "],\"commutativity_witness\":";
  if (r.commutativity_witness) {
    out += "[" + std::to_string(r.commutativity_witness->first) + "," +
           std::to_string(r.commutativity_witness->second) + "]";
  } else {
    out += "null";
  }
  out += ",\"overall\":";
  out += r.overall ? "true" : "false";
  out += "}\n";
  return out;
}

namespace {

std::string classification_name(const symbolic::Classification& c) {
  switch (c.kind) {
    case symbolic::Classification::Kind::kAlwaysZero:
      return "always_zero";
    case symbolic::Classification::Kind::kConicMultiple:
      return "conic_multiple";
    default:
      return "other";
  }
}

}  // namespace

std::string catalog_report_to_text(const symbolic::CatalogReport& report) {
  std::string out;
  for (const auto& entry : report.entries) {
    const auto& [i, j, k] = entry.id.triple;
    out += triple_str(i, j, k) + " coeff " + std::to_string(entry.id.coefficient_index) +
           ": ";
    switch (entry.classification.kind) {
      case symbolic::Classification::Kind::kAlwaysZero:
        out += "always zero";
        break;
      case symbolic::Classification::Kind::kConicMultiple:
        out += "conic multiple, cofactor " +
               to_fraction_string(entry.classification.cofactor);
        break;
      default:
        out += "OTHER: " + entry.residual.to_string();
        break;
    }
    out += "\n";
  }
  out += report.all_certified
             ? "catalog certified: every residual is 0 or a multiple of the conic\n"
             : "catalog FAILED: some residual is neither 0 nor a conic multiple\n";
  return out;
}

std::string catalog_report_to_json(const symbolic::CatalogReport& report) {
  std::string out = "{\"entries\":[";
  for (size_t idx = 0; idx < report.entries.size(); ++idx) {
    const auto& entry = report.entries[idx];
    if (idx) out += ',';
    const auto& [i, j, k] = entry.id.triple;
    out += "{\"triple\":[" + std::to_string(i) + "," + std::to_string(j) + "," +
           std::to_string(k) + "],\"coefficient\":" +
           std::to_string(entry.id.coefficient_index) + ",\"classification\":\"" +
           classification_name(entry.classification) + "\"";
    if (entry.classification.conic_multiple()) {
      out += ",\"cofactor\":\"" + to_fraction_string(entry.classification.cofactor) + "\"";
    }
    out += "}";
  }
  out += "],\"all_certified\":";
  out += report.all_certified ? "true" : "false";
  out += "}\n";
  return out;
}

void write_region_csv(std::ostream& out,
                      const std::vector<search::RegionSample>& rows) {
  out << "r,s,in_region,conic_value,admissible\n";
  for (const auto& row : rows) {
    out << fmt_double(to_double(row.r)) << ',' << fmt_double(to_double(row.s)) << ','
        << (row.in_region ? 1 : 0) << ',' << fmt_double(row.conic_value) << ','
        << (row.admissible ? 1 : 0) << '\n';
  }
}

void write_candidates_csv(std::ostream& out,
                          const std::vector<search::Candidate>& candidates) {
  out << "restart,residual,defect\n";
  for (const auto& c : candidates) {
    out << c.restart << ',' << fmt_double(c.residual) << ','
        << fmt_double(c.commutativity_defect) << '\n';
  }
}

}  // namespace hg::io
