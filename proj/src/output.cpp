#include "shanks/output.hpp"

#include <sstream>

#include "shanks/errors.hpp"

namespace shanks {

using json = Json;

Format parse_format(std::string_view s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "text") return Format::text;
  throw DomainError("unknown format: " + std::string(s));
}

std::string_view format_name(Format f) {
  switch (f) {
    case Format::json:
      return "json";
    case Format::csv:
      return "csv";
    case Format::text:
      return "text";
  }
  return "json";
}

json to_json(const PeriodRecord& r) {
  return {{"k", r.k}, {"m", r.m}, {"pi", r.pi}, {"method", std::string(method_name(r.method))}};
}

json to_json(const ShanksParams& p) {
  return {{"k", p.k},
          {"disc_base_root", p.disc_base_root},
          {"cap_d", p.cap_d},
          {"hypotheses_ok", p.hypotheses_ok},
          {"failure_reasons", p.failure_reasons}};
}

json to_json(const FactoredDisc& d) {
  return {{"sign", d.sign}, {"p", d.p}, {"exp_p", d.exp_p}, {"base", d.base}, {"exp_base", d.exp_base}};
}

json to_json(const Classification& c) {
  json roots = json::array();
  if (const auto* s = std::get_if<SplitsDistinct>(&c)) {
    roots = s->roots;
  } else if (const auto* t = std::get_if<TripleRoot>(&c)) {
    roots.push_back(t->root);
  }
  return {{"classification", std::string(classification_tag(c))}, {"roots", roots}};
}

namespace {

Classification classification_from_json(const json& j) {
  const std::string tag = j.at("classification").get<std::string>();
  if (tag == "irreducible") return IrreducibleModP{};
  if (tag == "split") return SplitsDistinct{j.at("roots").get<std::array<u64, 3>>()};
  if (tag == "triple") return TripleRoot{j.at("roots").at(0).get<u64>()};
  throw DomainError("unknown classification tag: " + tag);
}

void merge_classification(json& j, const Classification& c) {
  const json parts = to_json(c);
  for (const auto& [key, value] : parts.items()) j[key] = value;
}

template <typename T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> optional_from(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

}  // namespace

json to_json(const ShanksTestResult& r) {
  json j = {{"k", r.k}, {"p", r.p}};
  merge_classification(j, r.classification);
  j["pi_p"] = r.pi_p;
  j["pi_p2"] = r.pi_p2;
  j["is_shanks"] = r.is_shanks;
  j["ring_criterion"] = optional_json(r.ring_criterion);
  return j;
}

json to_json(const DedekindVerdict& v) {
  return {{"q", v.q},
          {"divides_index", v.divides_index},
          {"gcd_witness", v.gcd_witness.coeffs()},
          {"gcd_witness_str", v.gcd_witness.to_string()}};
}

json to_json(const MonogenicityCertificate& c) {
  json verdicts = json::array();
  for (const auto& v : c.verdicts) verdicts.push_back(to_json(v));
  return {{"k", c.k},
          {"p", optional_json(c.p)},
          {"polynomial", c.p ? "S_k(x^p)" : "S_k(x)"},
          {"monogenic", c.monogenic},
          {"route", std::string(route_name(c.route))},
          {"critical_primes", c.critical_primes},
          {"verdicts", verdicts},
          {"discriminant", to_json(c.discriminant)},
          {"aux_irreducible_mod", optional_json(c.aux_irreducible_mod)},
          {"assumption", c.assumption}};
}

json to_json(const SearchRecord& r) {
  json j = {{"k", r.k}, {"p", r.p}};
  merge_classification(j, r.classification);
  j["pi_p"] = r.pi_p;
  j["pi_p2"] = r.pi_p2;
  j["is_shanks"] = r.is_shanks;
  j["power_monogenic"] = optional_json(r.power_monogenic);
  j["checks_passed"] = r.checks_passed;
  return j;
}

PeriodRecord period_record_from_json(const json& j) {
  PeriodRecord r;
  r.k = j.at("k").get<i64>();
  r.m = j.at("m").get<u64>();
  r.pi = j.at("pi").get<u64>();
  const std::string method = j.at("method").get<std::string>();
  if (method != "brute" && method != "fast") throw DomainError("unknown period method: " + method);
  r.method = method == "brute" ? PeriodMethod::brute : PeriodMethod::fast;
  return r;
}

ShanksTestResult shanks_test_from_json(const json& j) {
  ShanksTestResult r;
  r.k = j.at("k").get<i64>();
  r.p = j.at("p").get<u64>();
  r.classification = classification_from_json(j);
  r.pi_p = j.at("pi_p").get<u64>();
  r.pi_p2 = j.at("pi_p2").get<u64>();
  r.is_shanks = j.at("is_shanks").get<bool>();
  r.ring_criterion = optional_from<bool>(j, "ring_criterion");
  return r;
}

MonogenicityCertificate certificate_from_json(const json& j) {
  MonogenicityCertificate c;
  c.k = j.at("k").get<i64>();
  c.p = optional_from<u64>(j, "p");
  c.monogenic = j.at("monogenic").get<bool>();
  const std::string route = j.at("route").get<std::string>();
  if (route == "full_dedekind") {
    c.route = CertRoute::full_dedekind;
  } else if (route == "ring_criterion") {
    c.route = CertRoute::ring_criterion;
  } else if (route == "both_agree") {
    c.route = CertRoute::both_agree;
  } else {
    throw DomainError("unknown route: " + route);
  }
  c.critical_primes = j.at("critical_primes").get<std::vector<u64>>();
  for (const auto& v : j.at("verdicts")) {
    DedekindVerdict d;
    d.q = v.at("q").get<u64>();
    d.divides_index = v.at("divides_index").get<bool>();
    d.gcd_witness = ModPoly(d.q, v.at("gcd_witness").get<std::vector<u64>>());
    c.verdicts.push_back(std::move(d));
  }
  const json& d = j.at("discriminant");
  c.discriminant = FactoredDisc{d.at("sign").get<int>(), d.at("p").get<u64>(), d.at("exp_p").get<u64>(),
                                d.at("base").get<u64>(), d.at("exp_base").get<u64>()};
  c.aux_irreducible_mod = optional_from<u64>(j, "aux_irreducible_mod");
  c.assumption = j.at("assumption").get<std::string>();
  return c;
}

SearchRecord search_record_from_json(const json& j) {
  SearchRecord r;
  r.k = j.at("k").get<i64>();
  r.p = j.at("p").get<u64>();
  r.classification = classification_from_json(j);
  r.pi_p = j.at("pi_p").get<u64>();
  r.pi_p2 = j.at("pi_p2").get<u64>();
  r.is_shanks = j.at("is_shanks").get<bool>();
  r.power_monogenic = optional_from<bool>(j, "power_monogenic");
  r.checks_passed = j.at("checks_passed").get<std::vector<std::string>>();
  return r;
}

namespace {

std::string scalar_text(const json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string header_line(const json& sample, Format f) {
  if (f != Format::csv) return {};
  std::string out;
  for (const auto& [key, value] : sample.items()) {
    if (!out.empty()) out += ',';
    out += csv_escape(key);
  }
  return out + "\n";
}

std::string render_line(const json& record, Format f) {
  switch (f) {
    case Format::json:
      return record.dump() + "\n";
    case Format::csv: {
      std::string out;
      bool first = true;
      for (const auto& [key, value] : record.items()) {
        if (!first) out += ',';
        first = false;
        out += csv_escape(scalar_text(value));
      }
      return out + "\n";
    }
    case Format::text: {
      std::string out;
      for (const auto& [key, value] : record.items()) {
        if (!out.empty()) out += ' ';
        out += key + "=" + (value.is_null() ? std::string("-") : scalar_text(value));
      }
      return out + "\n";
    }
  }
  return {};
}

}  // namespace shanks
