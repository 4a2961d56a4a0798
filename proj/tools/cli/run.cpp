#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cli/cli.hpp"
#include "json.hpp"
#include "locmaass/error.hpp"
#include "locmaass/evaluators.hpp"
#include "locmaass/geodesics.hpp"
#include "locmaass/poincare.hpp"
#include "locmaass/theta.hpp"

namespace locmaass::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr double kDefaultQz2Max = 1e4;
constexpr double kJumpQz2Max = 1e5;

json cplx_json(cplx v) { return {{"re", v.real()}, {"im", v.imag()}}; }

json envelope(const Command &cmd) {
  json j;
  j["schema"] = kSchema;
  j["command"] = json::parse(command_to_json(cmd));
  return j;
}

std::string num(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

SumConfig sum_config(const Command &cmd) {
  if (cmd.tol)
    return SumConfig::adaptive(*cmd.tol);
  return SumConfig::fixed(cmd.qz2_max.value_or(kDefaultQz2Max));
}

void write_lattice(const Command &cmd, std::ostream &out) {
  Family fam;
  if (cmd.sub == Subcommand::eval_f)
    fam = cmd.classical ? Family::f_classical : Family::f;
  else
    fam = cmd.harmonic ? Family::F_harmonic : Family::F;
  const KernelParams p{cmd.k, cmd.s, cmd.D};
  const SumConfig cfg = sum_config(cmd);

  std::vector<EvalResult> results;
  for (const UHPoint &z : cmd.z)
    results.push_back(evaluate(fam, p, z, cfg));

  if (cmd.format == Format::csv) {
    out << "x,y,re,im,tail,forms_used,min_abs_qz\r\n";
    for (std::size_t i = 0; i < results.size(); ++i) {
      const EvalResult &r = results[i];
      out << num(cmd.z[i].x) << ',' << num(cmd.z[i].y) << ',' << num(r.value.real()) << ','
          << num(r.value.imag()) << ',' << num(r.tail_estimate) << ',' << r.forms_used << ','
          << num(r.min_abs_qz) << "\r\n";
    }
    return;
  }
  json j = envelope(cmd);
  j["family"] = family_name(fam);
  j["weight"] = family_weight(fam, cmd.k);
  json rows = json::array();
  for (std::size_t i = 0; i < results.size(); ++i) {
    const EvalResult &r = results[i];
    rows.push_back({{"z", {{"x", cmd.z[i].x}, {"y", cmd.z[i].y}}},
                    {"value", cplx_json(r.value)},
                    {"tail", r.tail_estimate},
                    {"forms_used", r.forms_used},
                    {"min_abs_qz", r.min_abs_qz},
                    {"largest_term", r.largest_term},
                    {"qz2_max", r.qz2_max}});
  }
  if (rows.size() == 1)
    for (const char *key : {"value", "tail", "forms_used", "min_abs_qz"})
      j[key] = rows[0][key];
  j["results"] = rows;
  out << j.dump(2) << '\n';
}

void write_theta(const Command &cmd, std::ostream &out) {
  ThetaConfig cfg;
  if (cmd.tol)
    cfg.tol = *cmd.tol;
  std::vector<cplx> values;
  for (const UHPoint &z : cmd.z) {
    const ThetaPoint pt{z, cmd.tau};
    values.push_back(cmd.star ? eval_theta_star(cmd.k, pt, cfg) : eval_theta(cmd.k, pt, cfg));
  }
  if (cmd.format == Format::csv) {
    out << "x,y,u,v,re,im\r\n";
    for (std::size_t i = 0; i < values.size(); ++i)
      out << num(cmd.z[i].x) << ',' << num(cmd.z[i].y) << ',' << num(cmd.tau.x) << ',' << num(cmd.tau.y)
          << ',' << num(values[i].real()) << ',' << num(values[i].imag()) << "\r\n";
    return;
  }
  json j = envelope(cmd);
  j["kernel"] = cmd.star ? "theta_star" : "theta";
  json rows = json::array();
  for (std::size_t i = 0; i < values.size(); ++i)
    rows.push_back({{"z", {{"x", cmd.z[i].x}, {"y", cmd.z[i].y}}}, {"value", cplx_json(values[i])}});
  if (rows.size() == 1)
    j["value"] = rows[0]["value"];
  j["results"] = rows;
  out << j.dump(2) << '\n';
}

void write_poincare(const Command &cmd, std::ostream &out) {
  PoincareSpec spec;
  spec.kappa = cmd.kappa;
  spec.s = cmd.s;
  spec.m = cmd.m;
  spec.c_max = cmd.c_max;
  if (cmd.tol)
    spec.translate_tol = *cmd.tol;
  const cplx value = eval_poincare(spec, cmd.tau);
  json j = envelope(cmd);
  j["value"] = cplx_json(value);
  j["seed"] = cplx_json(seed_psi(spec.m, spec.kappa, spec.s, cmd.tau));
  j["translates"] = spec.translates();
  j["cosets"] = coset_reps(spec.c_max).size();
  j["results"] = json::array({{{"tau", {{"x", cmd.tau.x}, {"y", cmd.tau.y}}}, {"value", j["value"]}}});
  out << j.dump(2) << '\n';
}

void write_jump(const Command &cmd, std::ostream &out) {
  const KernelParams p{cmd.k, cmd.s, cmd.D};
  const double X = cmd.qz2_max.value_or(kJumpQz2Max);
  json rows = json::array();
  for (const UHPoint &z : cmd.z) {
    const cplx predicted = predicted_jump(z, p);
    if (!(cmd.r < 0.5 * z.y))
      throw DomainError("--r must be below y/2");
    const FrozenSum F(Family::F, p, z, X);
    auto diff = [&](double r) { return F({z.x, z.y + r}) - F({z.x, z.y - r}); };
    const cplx d1 = diff(cmd.r), d2 = diff(0.5 * cmd.r);
    const cplx measured = 2.0 * d2 - d1; // first-order extrapolation
    const cplx average = 0.5 * (F({z.x, z.y + cmd.r}) + F({z.x, z.y - cmd.r}));
    const cplx at_z = F(z);
    rows.push_back({{"z", {{"x", z.x}, {"y", z.y}}},
                    {"predicted", cplx_json(predicted)},
                    {"measured", cplx_json(measured)},
                    {"raw_difference", cplx_json(d1)},
                    {"relative_error", std::abs(measured - predicted) / std::abs(predicted)},
                    {"two_sided_average", cplx_json(average)},
                    {"value", cplx_json(at_z)},
                    {"forms_used", F.forms().size()}});
  }
  json j = envelope(cmd);
  if (rows.size() == 1)
    for (const char *key : {"predicted", "measured", "relative_error", "value"})
      j[key] = rows[0][key];
  j["results"] = rows;
  out << j.dump(2) << '\n';
}

std::string svg_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

void write_geodesics(const Command &cmd, std::ostream &out) {
  const auto arcs = geodesics_in_strip(cmd.D, cmd.a_max);
  if (cmd.format != Format::svg) {
    json j = envelope(cmd);
    json rows = json::array();
    for (const GeodesicArc &a : arcs) {
      json row = {{"form", {a.source.a, a.source.b, a.source.c}}};
      if (a.kind == GeodesicArc::Kind::semicircle) {
        row["kind"] = "semicircle";
        row["center"] = a.center;
        row["radius"] = a.radius;
      } else {
        row["kind"] = "vertical";
        row["x0"] = a.x0;
      }
      rows.push_back(row);
    }
    j["results"] = rows;
    out << j.dump(2) << '\n';
    return;
  }
  const double h = std::sqrt(3.0) / 2.0;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"900\" height=\"600\" "
         "viewBox=\"-1.5 0 3 2\">\n"
      << "<title>Geodesics of discriminant " << cmd.D << " with |a| &lt;= " << cmd.a_max << "</title>\n"
      << "<defs><clipPath id=\"strip\"><rect x=\"-1.5\" y=\"0\" width=\"3\" height=\"2\"/></clipPath></defs>\n"
      << "<rect x=\"-1.5\" y=\"0\" width=\"3\" height=\"2\" fill=\"white\"/>\n"
      << "<g transform=\"matrix(1 0 0 -1 0 2)\" clip-path=\"url(#strip)\" fill=\"none\" "
         "stroke-linecap=\"round\">\n"
      << "<g class=\"guides\" stroke=\"#999999\" stroke-width=\"0.004\" stroke-dasharray=\"0.02 0.02\">\n"
      << "<circle cx=\"0\" cy=\"0\" r=\"1\"/>\n"
      << "<line x1=\"-0.5\" y1=\"0\" x2=\"-0.5\" y2=\"2\"/>\n"
      << "<line x1=\"0.5\" y1=\"0\" x2=\"0.5\" y2=\"2\"/>\n"
      << "</g>\n"
      << "<path class=\"fundamental-domain\" stroke=\"black\" stroke-width=\"0.008\" d=\"M -0.5 2 L -0.5 "
      << svg_num(h) << " A 1 1 0 0 0 0.5 " << svg_num(h) << " L 0.5 2\"/>\n"
      << "<g class=\"geodesics\" stroke=\"#c0392b\" stroke-width=\"0.006\">\n";
  for (const GeodesicArc &a : arcs) {
    const std::string form = "[" + std::to_string(a.source.a) + "," + std::to_string(a.source.b) + "," +
                             std::to_string(a.source.c) + "]";
    if (a.kind == GeodesicArc::Kind::semicircle) {
      out << "<path data-form=\"" << form << "\" data-center=\"" << svg_num(a.center) << "\" data-radius=\""
          << svg_num(a.radius) << "\" d=\"M " << svg_num(a.center - a.radius) << " 0 A " << svg_num(a.radius)
          << ' ' << svg_num(a.radius) << " 0 0 0 " << svg_num(a.center + a.radius) << " 0\"/>\n";
    } else {
      out << "<line data-form=\"" << form << "\" data-x0=\"" << svg_num(a.x0) << "\" x1=\"" << svg_num(a.x0)
          << "\" y1=\"0\" x2=\"" << svg_num(a.x0) << "\" y2=\"2\"/>\n";
    }
  }
  out << "</g>\n</g>\n</svg>\n";
}

int write_verify(const Command &cmd, std::ostream &out) {
  bool all = true;
  for (const CheckResult &c : run_suite(cmd.suite, cmd.p)) {
    out << format_check(c) << '\n';
    all = all && c.pass;
  }
  return all ? kExitOk : kExitFail;
}

int dispatch(const Command &cmd, std::ostream &out) {
  switch (cmd.sub) {
  case Subcommand::eval_f:
  case Subcommand::eval_F:
    write_lattice(cmd, out);
    return kExitOk;
  case Subcommand::eval_theta:
    write_theta(cmd, out);
    return kExitOk;
  case Subcommand::eval_poincare:
    write_poincare(cmd, out);
    return kExitOk;
  case Subcommand::jump:
    write_jump(cmd, out);
    return kExitOk;
  case Subcommand::geodesics:
    write_geodesics(cmd, out);
    return kExitOk;
  case Subcommand::verify:
    return write_verify(cmd, out);
  }
  return kExitFail;
}

} // namespace

int run(const Command &cmd, std::ostream &out, std::ostream &err) {
  try {
    validate(cmd);
    if (cmd.out.empty())
      return dispatch(cmd, out);
    std::ostringstream buf;
    const int code = dispatch(cmd, buf);
    std::ofstream file(cmd.out, std::ios::binary);
    if (!file)
      throw Error("cannot open output file \"" + cmd.out + "\"");
    file << buf.str();
    if (!file)
      throw Error("failed writing \"" + cmd.out + "\"");
    return code;
  } catch (const UsageError &e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapacityError &e) {
    err << "capacity error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const DomainError &e) {
    err << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kExitFail;
  }
}

int main_entry(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  Command cmd;
  try {
    cmd = parse_args(args);
  } catch (const HelpRequest &e) {
    out << e.what() << '\n';
    return kExitOk;
  } catch (const UsageError &e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError &e) {
    err << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return run(cmd, out, err);
}

} // namespace locmaass::cli
