#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "projgb/affine.hpp"
#include "projgb/certificate.hpp"
#include "projgb/errors.hpp"
#include "projgb/groebner.hpp"
#include "projgb/io.hpp"
#include "projgb/points.hpp"
#include "projgb/projective.hpp"
#include "projgb/render.hpp"
#include "projgb/staircase.hpp"

namespace projgb::cli {

enum ExitCode { success = 0, verification_failed = 1, input_error = 2 };

struct Result {
  int exit_code = success;
  std::string out;
  std::string err;
};

struct JobConfig {
  std::string command;
  std::string input;
  TermOrder order = TermOrder::deglex;
  bool text = false;
  bool verify = false;
  bool render = false;
  std::optional<std::size_t> degree_cap;
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::size_t first_index(const PointSet& a) { return a.is_projective() ? 1 : 2; }

inline GroebnerBasis compute_basis(const PointSet& a, TermOrder order) {
  if (order == TermOrder::degrevlex) throw InputError("degrevlex is only available for compare-orders");
  if (!a.is_projective()) return buchberger_moeller(a, order).basis;
  if (order != TermOrder::deglex) throw InputError("projective bases are computed under deglex only");
  return projective_gb(a);
}

inline CertificateReport certify_any(const GroebnerBasis& gb, const PointSet& a) {
  return a.is_projective() ? certify(gb, a) : certify_affine(gb, a);
}

inline json report_to_json(const CertificateReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures) failures.push_back({{"check", f.check}, {"detail", f.detail}});
  return {{"pass", r.pass}, {"failures", std::move(failures)}};
}

inline std::string report_to_text(const CertificateReport& r) {
  if (r.pass) return "certificate: pass\n";
  std::string out = "certificate: FAIL\n";
  for (const auto& f : r.failures) out += "  " + f.check + ": " + f.detail + "\n";
  return out;
}

inline json exponents_to_json(const std::vector<ExponentVector>& v) {
  json out = json::array();
  for (const auto& e : v) out.push_back(e.entries());
  return out;
}

inline std::string exponents_to_text(const std::vector<ExponentVector>& v) {
  std::string out;
  for (const auto& e : v) out += " " + e.to_string();
  return out;
}

inline std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

inline void require_projective(const PointSet& a, const std::string& command) {
  if (!a.is_projective()) throw InputError(command + " requires a projective point set");
}

inline Result emit(const JobConfig& cfg, json doc, std::string text, int code = success) {
  Result r;
  r.exit_code = code;
  r.out = cfg.text ? std::move(text) : doc.dump(2) + "\n";
  return r;
}

inline Result cmd_gb(const JobConfig& cfg, const PointSet& a) {
  const GroebnerBasis gb = compute_basis(a, cfg.order);
  json doc = basis_document_to_json({a, gb});
  json polys = json::array();
  std::string text;
  for (const auto& g : gb.elements) {
    const std::string t = to_text(g, first_index(a));
    polys.push_back(t);
    text += t + "\n";
  }
  doc["polynomials"] = std::move(polys);
  int code = success;
  if (cfg.verify) {
    const auto report = certify_any(gb, a);
    doc["certificate"] = report_to_json(report);
    text += report_to_text(report);
    if (!report.pass) code = verification_failed;
  }
  if (cfg.render) {
    const std::string pic = render_staircase(Staircase::of(gb));
    doc["render"] = pic;
    text += pic;
  }
  return emit(cfg, std::move(doc), std::move(text), code);
}

inline Result cmd_staircase(const JobConfig& cfg, const PointSet& a) {
  const GroebnerBasis gb = compute_basis(a, cfg.order);
  const Staircase st = Staircase::of(gb);
  std::vector<ExponentVector> standard;
  std::size_t cap = 0;
  if (cfg.degree_cap) {
    cap = *cfg.degree_cap;
  } else if (a.is_projective()) {
    cap = st.max_corner_degree() + 1;
  } else {
    for (const auto& e : st.standard_monomials()) cap = std::max(cap, e.degree());
  }
  for (std::size_t d = 0; d <= cap; ++d)
    for (auto& e : st.standard_monomials_of_degree(d, gb.order)) standard.push_back(std::move(e));
  json doc = {{"space", a.is_projective() ? "projective" : "affine"},
              {"variables", gb.arity},
              {"order", std::string(to_string(gb.order))},
              {"corners", exponents_to_json(st.corners())},
              {"degree_cap", cap},
              {"standard_monomials", exponents_to_json(standard)}};
  std::string text = "corners:" + exponents_to_text(st.corners()) + "\n" + "standard monomials up to degree " +
                     std::to_string(cap) + ":" + exponents_to_text(standard) + "\n";
  if (cfg.render) {
    const std::string pic = render_staircase(st);
    doc["render"] = pic;
    text += pic;
  }
  return emit(cfg, std::move(doc), std::move(text));
}

inline Result cmd_axes(const JobConfig& cfg, const PointSet& a) {
  require_projective(a, "axes");
  const GroebnerBasis gb = compute_basis(a, cfg.order);
  const AxisReport report = axis_census(Staircase::of(gb));
  const auto charts = split_charts(a);
  std::vector<std::size_t> chart_sizes;
  for (const auto& c : charts.charts) chart_sizes.push_back(c.size());
  const bool matches = report.bounded && report.per_direction == chart_sizes && report.total == a.size();
  json axes = json::array();
  std::string text;
  for (std::size_t j = 0; j < gb.arity; ++j) {
    text += "X" + std::to_string(j + 1) + ":";
    for (const auto& ax : report.axes) {
      if (ax.direction != j) continue;
      axes.push_back({{"direction", j + 1}, {"base", ax.base.entries()}});
      text += " " + ax.base.to_string();
    }
    text += "\n";
  }
  json doc = {{"axes", std::move(axes)},       {"per_direction", report.per_direction},
              {"total", report.total},         {"chart_sizes", chart_sizes},
              {"points", a.size()},            {"matches", matches}};
  text += "per direction: " + join(report.per_direction) + "\n" + "chart sizes: " + join(chart_sizes) + "\n" +
          "total: " + std::to_string(report.total) + "\n" + "matches: " + (matches ? "true" : "false") + "\n";
  return emit(cfg, std::move(doc), std::move(text), matches ? success : verification_failed);
}

inline Result cmd_hilbert(const JobConfig& cfg, const PointSet& a) {
  require_projective(a, "hilbert");
  const std::size_t cap = cfg.degree_cap.value_or(a.size());
  std::vector<std::size_t> values;
  std::string text;
  for (std::size_t d = 0; d <= cap; ++d) {
    values.push_back(hilbert_function(a, d));
    text += std::to_string(d) + ": " + std::to_string(values.back()) + "\n";
  }
  return emit(cfg, {{"degree_cap", cap}, {"values", values}}, std::move(text));
}

inline Result cmd_verify(const JobConfig& cfg, const BasisDocument& doc) {
  const auto report = certify_any(doc.basis, doc.points);
  return emit(cfg, report_to_json(report), report_to_text(report), report.pass ? success : verification_failed);
}

inline Result cmd_compare_orders(const JobConfig& cfg, const PointSet& a) {
  require_projective(a, "compare-orders");
  const GroebnerBasis deglex = projective_gb(a);
  const GroebnerBasis degrevlex = buchberger(deglex.elements, TermOrder::degrevlex);
  const AxisReport r0 = axis_census(Staircase::of(deglex));
  const AxisReport r1 = axis_census(Staircase::of(degrevlex));
  const bool equal = r0.total == r1.total;
  json doc = {{"deglex", {{"per_direction", r0.per_direction}, {"total", r0.total}}},
              {"degrevlex", {{"per_direction", r1.per_direction}, {"total", r1.total}}},
              {"totals_equal", equal},
              {"per_direction_equal", r0.per_direction == r1.per_direction}};
  std::string text = "deglex:    per direction " + join(r0.per_direction) + ", total " + std::to_string(r0.total) +
                     "\n" + "degrevlex: per direction " + join(r1.per_direction) + ", total " +
                     std::to_string(r1.total) + "\n" + "totals equal: " + (equal ? "true" : "false") + "\n";
  return emit(cfg, std::move(doc), std::move(text), equal ? success : verification_failed);
}

inline Result cmd_render(const JobConfig& cfg, const PointSet& a) {
  const std::string pic = render_staircase(Staircase::of(compute_basis(a, cfg.order)));
  return emit(cfg, {{"render", pic}}, pic);
}

} // namespace detail

inline Result execute(const JobConfig& cfg) {
  if (cfg.order == TermOrder::degrevlex && cfg.command != "compare-orders")
    throw InputError("degrevlex is only available for compare-orders");
  const std::string text = detail::read_file(cfg.input);
  if (cfg.command == "verify") return detail::cmd_verify(cfg, parse_basis_document(text));
  const PointSet a = parse_points(text);
  if (cfg.command == "gb") return detail::cmd_gb(cfg, a);
  if (cfg.command == "staircase") return detail::cmd_staircase(cfg, a);
  if (cfg.command == "axes") return detail::cmd_axes(cfg, a);
  if (cfg.command == "hilbert") return detail::cmd_hilbert(cfg, a);
  if (cfg.command == "compare-orders") return detail::cmd_compare_orders(cfg, a);
  if (cfg.command == "render") return detail::cmd_render(cfg, a);
  throw InputError("unknown command " + cfg.command);
}

/// Parses the arguments (without the program name) and runs the command.
inline Result run(const std::vector<std::string>& args) {
  CLI::App app{"Groebner bases of vanishing ideals of finite point sets", "projgb"};
  app.require_subcommand(1);
  app.fallthrough();

  JobConfig cfg;
  std::string order = "deglex", output = "json";
  std::size_t cap = 0;
  app.add_option("--order", order, "term order")->check(CLI::IsMember({"lex", "deglex", "degrevlex"}));
  app.add_option("--output", output, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--verify", cfg.verify, "certify the computed basis");
  auto* cap_opt = app.add_option("--degree-cap", cap, "last degree reported");
  app.add_flag("--render", cfg.render, "append a staircase picture");

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"gb", "reduced Groebner basis of the vanishing ideal"},
      {"staircase", "corners and standard monomials"},
      {"axes", "axes of the staircase against chart sizes"},
      {"hilbert", "Hilbert function values"},
      {"verify", "certify a basis document"},
      {"compare-orders", "axis totals under deglex and degrevlex"},
      {"render", "text picture of the staircase"}};
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("input", cfg.input, "JSON point set (basis document for verify)")->required();
    sub->callback([&cfg, name = name] { cfg.command = name; });
  }

  std::vector<const char*> argv{"projgb"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return {code == 0 ? success : input_error, out.str(), err.str()};
  }
  cfg.order = parse_term_order(order);
  cfg.text = output == "text";
  if (cap_opt->count() > 0) cfg.degree_cap = cap;

  try {
    return execute(cfg);
  } catch (const CertificationError& e) {
    return {verification_failed, "", std::string("error: ") + e.what() + "\n"};
  } catch (const InputError& e) {
    return {input_error, "", std::string("error: ") + e.what() + "\n"};
  } catch (const UnsupportedRenderError& e) {
    return {input_error, "", std::string("error: ") + e.what() + "\n"};
  }
}

} // namespace projgb::cli
