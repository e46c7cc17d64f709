#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hg/hypergroup.hpp"
#include "hg/search.hpp"
#include "hg/symbolic.hpp"
#include "hg/validate.hpp"

namespace hg::io {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Canonical document: {"order":N,"star":[...],"table":[[["a/b",...],...],...]}
// with keys in that order, rationals as lowest-terms "num/den" strings,
// no whitespace, newline-terminated. Equal hypergroups serialize to
// byte-identical documents.
std::string serialize(const Hypergroup& h);

// Strict parse of a hypergroup document. Accepts the three keys in any
// order but rejects duplicate or unknown keys, non-canonical rational
// strings, dimension mismatches and star maps that are not involutions
// fixing 0. Parsing does not validate the hypergroup axioms.
Hypergroup parse_document(std::string_view text);

std::string report_to_text(const validation::ValidationReport& report);
std::string report_to_json(const validation::ValidationReport& report);

std::string catalog_report_to_text(const symbolic::CatalogReport& report);
std::string catalog_report_to_json(const symbolic::CatalogReport& report);

// CSV with header "r,s,in_region,conic_value,admissible".
void write_region_csv(std::ostream& out, const std::vector<search::RegionSample>& rows);

// CSV with header "restart,residual,defect".
void write_candidates_csv(std::ostream& out, const std::vector<search::Candidate>& candidates);

}  // namespace hg::io
