#pragma once

// Machine-readable renderings of every result type: JSON (one object per
// line), CSV and key=value text.

#include "json.hpp"
#include <string>
#include <string_view>

#include "shanks/dedekind.hpp"
#include "shanks/intpoly.hpp"
#include "shanks/recurrence.hpp"
#include "shanks/search.hpp"

namespace shanks {

using Json = nlohmann::ordered_json;

enum class Format { json, csv, text };

/// Throws DomainError on anything but "json", "csv" or "text".
Format parse_format(std::string_view s);
std::string_view format_name(Format f);

Json to_json(const PeriodRecord& r);
Json to_json(const ShanksParams& p);
Json to_json(const FactoredDisc& d);
/// Tag plus the distinct roots in F_p (empty when irreducible).
Json to_json(const Classification& c);
Json to_json(const ShanksTestResult& r);
Json to_json(const DedekindVerdict& v);
Json to_json(const MonogenicityCertificate& c);
Json to_json(const SearchRecord& r);

PeriodRecord period_record_from_json(const Json& j);
ShanksTestResult shanks_test_from_json(const Json& j);
MonogenicityCertificate certificate_from_json(const Json& j);
SearchRecord search_record_from_json(const Json& j);

/// Column header line for CSV output of records shaped like `sample`; empty
/// for the other formats.
std::string header_line(const Json& sample, Format f);

/// One line, newline-terminated. Nested values are written as compact JSON.
std::string render_line(const Json& record, Format f);

}  // namespace shanks
