#include "booth/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

namespace booth {

using nlohmann::json;

std::string fmt15(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15g", x);
  return buf;
}

std::string fmt15(cdouble z) {
  return fmt15(z.real()) + (z.imag() < 0 ? "" : "+") + fmt15(z.imag()) + "i";
}

namespace {
json complex_json(cdouble z) { return json::array({z.real(), z.imag()}); }
}  // namespace

json to_json(const MembershipReport& rep) {
  json j;
  j["verdict"] = verdict_name(rep.verdict);
  j["boundary_touching"] = rep.boundary_touching;
  j["worst_margin"] = rep.worst_margin;
  j["witness"] = complex_json(rep.witness);
  j["witness_image"] = complex_json(rep.witness_image);
  j["grid"] = {{"radii", rep.grid.radii}, {"angles", rep.grid.angles}};
  return j;
}

json to_json(const AreaReport& rep) {
  json j;
  j["radius"] = rep.radius;
  j["parseval"] = rep.parseval_value;
  j["quadrature"] = rep.quadrature_value;
  if (rep.has_closed_forms) {
    j["stated_closed_form"] = rep.stated_form_value;
    j["termwise_formula"] = rep.termwise_formula_value;
    j["deviation_from_stated"] =
        std::abs(rep.quadrature_value - rep.stated_form_value);
    j["deviation_from_termwise"] =
        std::abs(rep.quadrature_value - rep.termwise_formula_value);
  }
  return j;
}

json to_json(const RangeReport& rep) {
  json j;
  j["min"] = rep.min_value;
  j["max"] = rep.max_value;
  j["lower_bound"] = rep.lower_bound;
  j["upper_bound"] = rep.upper_bound;
  j["pass"] = rep.pass;
  j["worst_slack"] = rep.worst_slack;
  j["witness"] = complex_json(rep.witness);
  return j;
}

json to_json(const DistortionBounds& b) {
  return json{{"fprime_low", b.fprime_low},
              {"fprime_high", b.fprime_high},
              {"fmod_low", b.fmod_low},
              {"fmod_high", b.fmod_high}};
}

json to_json(const CoefficientReport& rep) {
  json j;
  j["a2_margin"] = rep.a2_margin;
  j["a3_margin"] = rep.a3_margin;
  j["gamma_margins"] = rep.gamma_margins;
  j["bk_pass"] = rep.bk_pass;
  j["bs_pass"] = rep.bs_pass;
  return j;
}

json series_to_json(const Series& s) {
  json arr = json::array();
  for (int k = 0; k <= s.order(); ++k) arr.push_back(complex_json(s[k]));
  return arr;
}

Series series_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open coefficient file: " + path);
  json j = json::parse(in);
  if (!j.is_array() || j.empty())
    throw std::runtime_error("coefficient file must be a non-empty JSON array");
  std::vector<cdouble> coeffs;
  coeffs.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
      throw std::runtime_error("coefficient entries must be [re, im] pairs");
    coeffs.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  return Series(std::move(coeffs));
}

void write_boundary_csv(std::ostream& os, BoothParam p, int resolution) {
  os << "theta,x,y\n";
  for (int k = 0; k < resolution; ++k) {
    const double theta = 2.0 * 3.14159265358979323846 * k / resolution;
    const BoundaryPoint b = boundary_point(theta, p);
    os << fmt15(b.theta) << ',' << fmt15(b.x) << ',' << fmt15(b.y) << '\n';
  }
}

void write_boundary_svg(std::ostream& os, BoothParam p, int resolution) {
  std::vector<BoundaryPoint> pts;
  pts.reserve(static_cast<size_t>(resolution) + 1);
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (int k = 0; k <= resolution; ++k) {
    const double theta = 2.0 * 3.14159265358979323846 * k / resolution;
    pts.push_back(boundary_point(theta, p));
    xmin = std::min(xmin, pts.back().x);
    xmax = std::max(xmax, pts.back().x);
    ymin = std::min(ymin, pts.back().y);
    ymax = std::max(ymax, pts.back().y);
  }
  const double pad = 0.05 * std::max(xmax - xmin, ymax - ymin);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
     << fmt15(xmin - pad) << ' ' << fmt15(ymin - pad) << ' '
     << fmt15(xmax - xmin + 2 * pad) << ' ' << fmt15(ymax - ymin + 2 * pad)
     << "\">\n<polyline fill=\"none\" stroke=\"black\" stroke-width=\""
     << fmt15(0.005 * (xmax - xmin + 2 * pad)) << "\" points=\"";
  for (size_t i = 0; i < pts.size(); ++i) {
    if (i) os << ' ';
    // SVG y axis points down.
    os << fmt15(pts[i].x) << ',' << fmt15(-pts[i].y);
  }
  os << "\"/>\n</svg>\n";
}

}  // namespace booth
