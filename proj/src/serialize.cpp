#include "homspec/serialize.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace homspec {

using nlohmann::json;

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  if (name == "table") return OutputFormat::table;
  throw std::invalid_argument("unknown format '" + name + "' (expected csv, json or table)");
}

std::string csv_escape(const std::string& field) {
  bool needs_quotes = field.find_first_of(",\"\r\n") != std::string::npos;
  if (!needs_quotes) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

namespace {

json rationals_json(const std::vector<Rational>& v) {
  json arr = json::array();
  for (const auto& r : v) arr.push_back(r.str());
  return arr;
}

json ints_json(const std::vector<long long>& v) {
  json arr = json::array();
  for (long long x : v) arr.push_back(x);
  return arr;
}

const char* const kDiiiParamNames[2] = {"s2", "t2"};
const char* const kAiiParamNames[3] = {"r1_2", "r2_2", "r3_2"};

template <class Table>
void csv_certificate(std::ostream& os, const Table& t, std::span<const char* const> names) {
  os << "# space=" << t.space << "\n# n=" << t.n << "\n";
  for (size_t i = 0; i < t.params.size(); ++i)
    os << "# " << names[i] << "=" << t.params[i].str() << "\n";
  os << "# cutoff=" << t.cutoff.str() << "\n";
  os << "# casimir_bound=" << t.casimir_bound.str() << "\n";
  os << "# entries=" << t.entries.size() << "\n";
}

template <class Table>
json table_header_json(const Table& t, std::span<const char* const> names) {
  json doc;
  doc["space"] = t.space;
  doc["n"] = t.n;
  json params;
  for (size_t i = 0; i < t.params.size(); ++i) params[names[i]] = t.params[i].str();
  doc["params"] = params;
  doc["cutoff"] = t.cutoff.str();
  doc["casimir_bound"] = t.casimir_bound.str();
  return doc;
}

}  // namespace

void write_spectrum(std::ostream& os, const DiiiTable& t, const RenderOptions& opt) {
  switch (opt.format) {
    case OutputFormat::csv: {
      csv_certificate(os, t, kDiiiParamNames);
      os << "value,multiplicity,Lambda,mu";
      if (opt.decimal_digits > 0) os << ",value_approx";
      os << "\r\n";
      for (const auto& e : t.entries) {
        os << csv_escape(e.value.str()) << ',' << e.multiplicity.get_str() << ','
           << csv_escape(coords_str(std::span<const long long>(e.prov.hw_g))) << ','
           << csv_escape(coords_str(std::span<const long long>(e.prov.hw_k)));
        if (opt.decimal_digits > 0) os << ',' << e.value.decimal(opt.decimal_digits);
        os << "\r\n";
      }
      break;
    }
    case OutputFormat::json: {
      os << json_spectrum(t) << "\n";
      break;
    }
    case OutputFormat::table: {
      os << "space " << t.space << ", n=" << t.n << ", s2=" << t.params[0].str()
         << ", t2=" << t.params[1].str() << ", cutoff=" << t.cutoff.str()
         << ", casimir_bound=" << t.casimir_bound.str() << "\n";
      os << std::left << std::setw(14) << "value" << std::setw(14) << "mult"
         << std::setw(16) << "Lambda" << "mu";
      if (opt.decimal_digits > 0) os << "  ~value";
      os << "\n";
      for (const auto& e : t.entries) {
        os << std::left << std::setw(14) << e.value.str() << std::setw(14)
           << e.multiplicity.get_str() << std::setw(16)
           << coords_str(std::span<const long long>(e.prov.hw_g))
           << coords_str(std::span<const long long>(e.prov.hw_k));
        if (opt.decimal_digits > 0) os << "  ~" << e.value.decimal(opt.decimal_digits);
        os << "\n";
      }
      break;
    }
  }
}

void write_spectrum(std::ostream& os, const AiiTable& t, const RenderOptions& opt) {
  switch (opt.format) {
    case OutputFormat::csv: {
      csv_certificate(os, t, kAiiParamNames);
      os << "value,multiplicity,q,k,l,Lambda,mu,mu_prime";
      if (opt.decimal_digits > 0) os << ",value_approx";
      os << "\r\n";
      for (const auto& e : t.entries) {
        os << csv_escape(e.value.str()) << ',' << e.multiplicity.get_str() << ','
           << csv_escape(coords_str(std::span<const long long>(e.prov.idx.q))) << ','
           << e.prov.idx.k << ','
           << csv_escape(coords_str(std::span<const long long>(e.prov.idx.l))) << ','
           << csv_escape(coords_str(std::span<const Rational>(e.prov.weights.lambda.coords)))
           << ','
           << csv_escape(coords_str(std::span<const Rational>(e.prov.weights.mu.coords)))
           << ','
           << csv_escape(coords_str(std::span<const Rational>(e.prov.weights.mu_prime.coords)));
        if (opt.decimal_digits > 0) os << ',' << e.value.decimal(opt.decimal_digits);
        os << "\r\n";
      }
      break;
    }
    case OutputFormat::json: {
      os << json_spectrum(t) << "\n";
      break;
    }
    case OutputFormat::table: {
      os << "space " << t.space << ", n=" << t.n << ", r2=(" << t.params[0].str() << ","
         << t.params[1].str() << "," << t.params[2].str() << "), cutoff=" << t.cutoff.str()
         << ", casimir_bound=" << t.casimir_bound.str() << "\n";
      os << std::left << std::setw(12) << "value" << std::setw(10) << "mult" << std::setw(10)
         << "q" << std::setw(6) << "k" << std::setw(10) << "l" << "Lambda";
      if (opt.decimal_digits > 0) os << "  ~value";
      os << "\n";
      for (const auto& e : t.entries) {
        os << std::left << std::setw(12) << e.value.str() << std::setw(10)
           << e.multiplicity.get_str() << std::setw(10)
           << coords_str(std::span<const long long>(e.prov.idx.q)) << std::setw(6)
           << e.prov.idx.k << std::setw(10)
           << coords_str(std::span<const long long>(e.prov.idx.l))
           << coords_str(std::span<const Rational>(e.prov.weights.lambda.coords));
        if (opt.decimal_digits > 0) os << "  ~" << e.value.decimal(opt.decimal_digits);
        os << "\n";
      }
      break;
    }
  }
}

std::string json_spectrum(const DiiiTable& t) {
  json doc = table_header_json(t, kDiiiParamNames);
  json entries = json::array();
  for (const auto& e : t.entries) {
    json row;
    row["value"] = e.value.str();
    row["coeffs"] = rationals_json(e.form.coeffs);
    row["multiplicity"] = e.multiplicity.get_str();
    row["Lambda"] = ints_json(e.prov.hw_g);
    row["mu"] = ints_json(e.prov.hw_k);
    entries.push_back(std::move(row));
  }
  doc["entries"] = std::move(entries);
  return doc.dump();
}

std::string json_spectrum(const AiiTable& t) {
  json doc = table_header_json(t, kAiiParamNames);
  json entries = json::array();
  for (const auto& e : t.entries) {
    json row;
    row["value"] = e.value.str();
    row["coeffs"] = rationals_json(e.form.coeffs);
    row["multiplicity"] = e.multiplicity.get_str();
    row["q"] = ints_json(e.prov.idx.q);
    row["k"] = e.prov.idx.k;
    row["l"] = ints_json(e.prov.idx.l);
    row["Lambda"] = rationals_json(e.prov.weights.lambda.coords);
    row["mu"] = rationals_json(e.prov.weights.mu.coords);
    row["mu_prime"] = rationals_json(e.prov.weights.mu_prime.coords);
    entries.push_back(std::move(row));
  }
  doc["entries"] = std::move(entries);
  return doc.dump();
}

void write_geometry(std::ostream& os, const GeometryReport& r, const RenderOptions& opt) {
  json doc;
  doc["space"] = r.space;
  doc["n"] = r.n;
  json params;
  if (r.space == "diii") {
    params["s2"] = r.params[0].str();
    params["t2"] = r.params[1].str();
  } else {
    params["r1_2"] = r.params[0].str();
    params["r2_2"] = r.params[1].str();
    params["r3_2"] = r.params[2].str();
  }
  doc["params"] = params;
  json vol;
  for (const auto& [name, e] : r.volume_exponents) vol[name] = e;
  doc["volume_exponents"] = vol;
  doc["volume_squared_vs_normal"] = r.volume_squared.str();
  if (r.scal) doc["scal"] = r.scal->str();
  if (r.einstein_constant) doc["einstein_constant"] = r.einstein_constant->str();
  doc["lambda1"] = r.lambda1.str();
  doc["lambda1_multiplicity"] = r.lambda1_multiplicity.get_str();
  doc["symmetric"] = r.symmetric;
  doc["einstein"] = r.einstein;
  doc["verdicts"] = r.verdicts;
  if (opt.decimal_digits > 0) doc["lambda1_approx"] = r.lambda1.decimal(opt.decimal_digits);

  if (opt.format == OutputFormat::json) {
    os << doc.dump() << "\n";
    return;
  }
  os << doc.dump(2) << "\n";
}

void write_verdict(std::ostream& os, const IsospectralityVerdict& v, const RenderOptions& opt) {
  json doc;
  doc["status"] = iso_status_name(v.status);
  if (v.witness) {
    json w;
    w["invariant"] = v.witness->invariant;
    w["lhs"] = v.witness->lhs;
    w["rhs"] = v.witness->rhs;
    doc["witness"] = w;
  }
  doc["log"] = v.log;
  os << (opt.format == OutputFormat::json ? doc.dump() : doc.dump(2)) << "\n";
}

void write_curve_profile(std::ostream& os, int n, const Rational& step,
                         const VolumeCurveProfile& prof, const RenderOptions& opt) {
  if (opt.format == OutputFormat::csv) {
    os << "# n=" << n << "\n# step=" << step.str() << "\n";
    os << "theta,value\r\n";
    for (size_t j = 0; j < prof.samples; ++j) {
      Rational theta = step * Rational(static_cast<long long>(j + 1));
      os << csv_escape(theta.str()) << ',' << csv_escape(volume_curve_value(n, theta).str())
         << "\r\n";
    }
    return;
  }
  json doc;
  doc["n"] = n;
  doc["step"] = step.str();
  doc["samples"] = prof.samples;
  doc["rising_before_one"] = prof.rising_before_one;
  doc["falling_after_one"] = prof.falling_after_one;
  json units = json::array();
  for (const auto& u : prof.unit_points) units.push_back(u.str());
  doc["unit_points"] = units;
  os << (opt.format == OutputFormat::json ? doc.dump() : doc.dump(2)) << "\n";
}

}  // namespace homspec
