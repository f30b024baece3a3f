#pragma once

#include <ostream>
#include <string>

#include "homspec/aii.hpp"
#include "homspec/diii.hpp"
#include "homspec/geometry.hpp"
#include "homspec/uniqueness.hpp"

namespace homspec {

enum class OutputFormat { csv, json, table };

OutputFormat parse_format(const std::string& name);

/// RFC-4180 field quoting (quotes only when needed).
std::string csv_escape(const std::string& field);

struct RenderOptions {
  OutputFormat format = OutputFormat::table;
  int decimal_digits = 0;  // 0: exact output only; > 0: add approximations
};

void write_spectrum(std::ostream& os, const DiiiTable& t, const RenderOptions& opt);
void write_spectrum(std::ostream& os, const AiiTable& t, const RenderOptions& opt);

void write_geometry(std::ostream& os, const GeometryReport& r, const RenderOptions& opt);

void write_verdict(std::ostream& os, const IsospectralityVerdict& v, const RenderOptions& opt);

void write_curve_profile(std::ostream& os, int n, const Rational& step,
                         const VolumeCurveProfile& prof, const RenderOptions& opt);

std::string json_spectrum(const DiiiTable& t);
std::string json_spectrum(const AiiTable& t);

}  // namespace homspec
