#include <algorithm>
#include <cmath>
#include <sstream>

#include "CLI11.hpp"
#include "cli/cli.hpp"
#include "json.hpp"
#include "locmaass/error.hpp"
#include "locmaass/evaluators.hpp"
#include "locmaass/hecke.hpp"

namespace locmaass::cli {

namespace {

using json = nlohmann::ordered_json;

struct Pair {
  double first = 0.0;
  double second = 0.0;
};

Pair parse_pair(const std::string &text, const char *flag, bool second_optional) {
  std::string t = text;
  std::replace(t.begin(), t.end(), ',', ' ');
  std::istringstream in(t);
  Pair p;
  if (!(in >> p.first))
    throw UsageError(std::string(flag) + ": expected \"a,b\", got \"" + text + "\"");
  if (!(in >> p.second)) {
    if (!second_optional)
      throw UsageError(std::string(flag) + ": expected \"a,b\", got \"" + text + "\"");
    p.second = 0.0;
  }
  std::string rest;
  if (in >> rest)
    throw UsageError(std::string(flag) + ": trailing characters in \"" + text + "\"");
  return p;
}

const std::vector<std::pair<std::string, Subcommand>> kSubcommands = {
    {"eval-f", Subcommand::eval_f},       {"eval-F", Subcommand::eval_F},
    {"eval-theta", Subcommand::eval_theta}, {"eval-poincare", Subcommand::eval_poincare},
    {"jump", Subcommand::jump},           {"geodesics", Subcommand::geodesics},
    {"verify", Subcommand::verify}};

Subcommand subcommand_from(const std::string &name) {
  for (const auto &[n, s] : kSubcommands)
    if (n == name)
      return s;
  throw UsageError("unknown subcommand \"" + name + "\"");
}

Format format_from(const std::string &name) {
  if (name == "json")
    return Format::json;
  if (name == "csv")
    return Format::csv;
  if (name == "svg")
    return Format::svg;
  throw UsageError("unknown format \"" + name + "\" (json, csv or svg)");
}

json cplx_json(cplx v) { return {{"re", v.real()}, {"im", v.imag()}}; }

cplx cplx_from(const json &j) { return {j.at("re").get<double>(), j.at("im").get<double>()}; }

} // namespace

const char *subcommand_name(Subcommand sub) {
  for (const auto &[n, s] : kSubcommands)
    if (s == sub)
      return n.c_str();
  return "?";
}

const char *format_name(Format f) {
  switch (f) {
  case Format::json:
    return "json";
  case Format::csv:
    return "csv";
  case Format::svg:
    return "svg";
  }
  return "?";
}

Command parse_args(const std::vector<std::string> &args) {
  if (!args.empty() && (args.front() == "--help" || args.front() == "-h"))
    throw HelpRequest("usage: locmaass <eval-f|eval-F|eval-theta|eval-poincare|jump|geodesics|verify> "
                      "[options]\n       locmaass <subcommand> --help");
  if (args.empty())
    throw UsageError("missing subcommand; one of eval-f, eval-F, eval-theta, eval-poincare, jump, "
                     "geodesics, verify");
  Command cmd;
  cmd.sub = subcommand_from(args.front());

  CLI::App app{std::string("locmaass ") + args.front()};
  std::string s_text, tau_text, format_text = "json";
  std::vector<std::string> z_texts;
  double tol = 0.0, qz2 = 0.0;

  const Subcommand sub = cmd.sub;
  const bool lattice = sub == Subcommand::eval_f || sub == Subcommand::eval_F || sub == Subcommand::jump;
  if (sub != Subcommand::verify && sub != Subcommand::eval_poincare)
    app.add_option("--k", cmd.k, "weight parameter (even, >= 2)");
  if (lattice || sub == Subcommand::geodesics)
    app.add_option("--D", cmd.D, "positive discriminant");
  if (lattice || sub == Subcommand::eval_poincare)
    app.add_option("--s", s_text, "spectral parameter \"re,im\"");
  if (lattice || sub == Subcommand::eval_theta)
    app.add_option("--z", z_texts, "point \"x,y\" (repeatable)");
  if (sub == Subcommand::eval_theta || sub == Subcommand::eval_poincare)
    app.add_option("--tau", tau_text, "point \"u,v\"");
  if (sub == Subcommand::verify) {
    app.add_option("suite", cmd.suite, "suite name")->required();
    app.add_option("--p", cmd.p, "odd prime for the hecke suite");
  }
  CLI::Option *tol_opt = nullptr, *qz2_opt = nullptr;
  if (sub != Subcommand::geodesics && sub != Subcommand::verify)
    tol_opt = app.add_option("--tol", tol, "target tolerance");
  if (lattice)
    qz2_opt = app.add_option("--qz2-max", qz2, "cutoff on Q_z^2");
  app.add_option("--format", format_text, "json, csv or svg");
  app.add_option("--out", cmd.out, "output path (default: stdout)");
  if (sub == Subcommand::eval_f)
    app.add_flag("--classical", cmd.classical, "classical holomorphic sum f_{k,D}");
  if (sub == Subcommand::eval_F)
    app.add_flag("--harmonic", cmd.harmonic, "locally harmonic F_{1-k,D}");
  if (sub == Subcommand::eval_theta)
    app.add_flag("--star", cmd.star, "evaluate Theta* instead of Theta");
  if (sub == Subcommand::eval_poincare) {
    app.add_option("--kappa", cmd.kappa, "half-integral weight");
    app.add_option("--m", cmd.m, "nonzero index");
    app.add_option("--c-max", cmd.c_max, "coset truncation");
  }
  if (sub == Subcommand::jump)
    app.add_option("--r", cmd.r, "vertical offset of the two-sided difference");
  if (sub == Subcommand::geodesics)
    app.add_option("--a-max", cmd.a_max, "largest |a| drawn");

  std::vector<std::string> rest(args.rbegin(), args.rend() - 1);
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp &) {
    throw HelpRequest(app.help());
  } catch (const CLI::ParseError &e) {
    throw UsageError(e.what());
  }

  if (!s_text.empty()) {
    const Pair p = parse_pair(s_text, "--s", true);
    cmd.s = {p.first, p.second};
  } else if (sub == Subcommand::eval_poincare) {
    cmd.s = {2.0, 0.0};
  }
  for (const std::string &t : z_texts) {
    const Pair p = parse_pair(t, "--z", false);
    cmd.z.push_back({p.first, p.second});
  }
  if (!tau_text.empty()) {
    const Pair p = parse_pair(tau_text, "--tau", false);
    cmd.tau = {p.first, p.second};
  }
  if (tol_opt && tol_opt->count())
    cmd.tol = tol;
  if (qz2_opt && qz2_opt->count())
    cmd.qz2_max = qz2;
  cmd.format = format_from(format_text);
  if (cmd.z.empty() && sub == Subcommand::jump && cmd.D > 0)
    // apex of [1, D mod 2, (D mod 2 - D)/4]
    cmd.z.push_back({-0.5 * static_cast<double>(cmd.D % 2), 0.5 * std::sqrt(static_cast<double>(cmd.D))});
  if (cmd.z.empty() && (lattice || sub == Subcommand::eval_theta))
    cmd.z.push_back({0.0, 1.0});
  if (cmd.harmonic)
    cmd.s = {cmd.k / 2.0 + 0.25, 0.0};

  if (cmd.format == Format::svg && sub != Subcommand::geodesics)
    throw UsageError("--format svg is only available for geodesics");
  if (cmd.format == Format::csv &&
      !(sub == Subcommand::eval_f || sub == Subcommand::eval_F || sub == Subcommand::eval_theta))
    throw UsageError("--format csv is only available for eval-f, eval-F and eval-theta");
  if (cmd.tol && cmd.qz2_max)
    throw UsageError("--tol and --qz2-max are mutually exclusive");
  validate(cmd);
  return cmd;
}

void validate(const Command &cmd) {
  for (const UHPoint &z : cmd.z)
    if (!(z.y > 0.0) || !std::isfinite(z.x) || !std::isfinite(z.y))
      throw DomainError("--z must lie in the upper half-plane (y > 0)");
  if (cmd.tol && !(*cmd.tol > 0.0 && *cmd.tol < 1.0))
    throw DomainError("--tol must lie in (0, 1)");
  if (cmd.qz2_max && !(*cmd.qz2_max >= 0.0 && std::isfinite(*cmd.qz2_max)))
    throw DomainError("--qz2-max must be finite and non-negative");
  switch (cmd.sub) {
  case Subcommand::eval_f:
    validate_family(cmd.classical ? Family::f_classical : Family::f, {cmd.k, cmd.s, cmd.D});
    break;
  case Subcommand::eval_F:
    validate_family(cmd.harmonic ? Family::F_harmonic : Family::F, {cmd.k, cmd.s, cmd.D});
    break;
  case Subcommand::jump:
    validate_family(Family::F, {cmd.k, cmd.s, cmd.D});
    if (!(cmd.r > 0.0 && cmd.r < 0.1))
      throw DomainError("--r must lie in (0, 0.1)");
    break;
  case Subcommand::eval_theta:
    if (cmd.k < 1)
      throw DomainError("--k must be a positive integer");
    if (!(cmd.tau.y > 0.0))
      throw DomainError("--tau must lie in the upper half-plane");
    break;
  case Subcommand::eval_poincare:
    if (!(cmd.tau.y > 0.0))
      throw DomainError("--tau must lie in the upper half-plane");
    if (std::abs(2.0 * cmd.kappa - std::round(2.0 * cmd.kappa)) > 1e-12 ||
        std::lround(2.0 * cmd.kappa) % 2 == 0)
      throw DomainError("--kappa must be half-integral");
    if (!(cmd.s.real() > 1.0))
      throw DomainError("--s must satisfy Re(s) > 1 for the Poincare series");
    if (cmd.m == 0)
      throw DomainError("--m must be nonzero");
    if (cmd.c_max < 0)
      throw DomainError("--c-max must be non-negative");
    break;
  case Subcommand::geodesics:
    if (cmd.D <= 0 || !is_discriminant(cmd.D))
      throw DomainError("--D must be a positive discriminant (D = 0, 1 mod 4)");
    if (cmd.a_max < 1 || cmd.a_max > 200)
      throw DomainError("--a-max must lie in [1, 200]");
    break;
  case Subcommand::verify: {
    const auto &names = verify_suites();
    if (cmd.suite != "all" && std::find(names.begin(), names.end(), cmd.suite) == names.end())
      throw UsageError("unknown suite \"" + cmd.suite + "\"");
    if (cmd.p == 2 || !is_prime(cmd.p))
      throw DomainError("--p must be an odd prime");
    break;
  }
  }
}

std::string command_to_json(const Command &cmd) {
  json j;
  j["subcommand"] = subcommand_name(cmd.sub);
  j["k"] = cmd.k;
  j["D"] = cmd.D;
  j["s"] = cplx_json(cmd.s);
  json zs = json::array();
  for (const UHPoint &z : cmd.z)
    zs.push_back({{"x", z.x}, {"y", z.y}});
  j["z"] = zs;
  j["tau"] = {{"x", cmd.tau.x}, {"y", cmd.tau.y}};
  j["p"] = cmd.p;
  j["tol"] = cmd.tol ? json(*cmd.tol) : json(nullptr);
  j["qz2_max"] = cmd.qz2_max ? json(*cmd.qz2_max) : json(nullptr);
  j["format"] = format_name(cmd.format);
  j["out"] = cmd.out;
  j["classical"] = cmd.classical;
  j["harmonic"] = cmd.harmonic;
  j["star"] = cmd.star;
  j["kappa"] = cmd.kappa;
  j["m"] = cmd.m;
  j["c_max"] = cmd.c_max;
  j["r"] = cmd.r;
  j["a_max"] = cmd.a_max;
  j["suite"] = cmd.suite;
  return j.dump();
}

Command command_from_json(const std::string &text) {
  const json j = json::parse(text);
  Command cmd;
  cmd.sub = subcommand_from(j.at("subcommand").get<std::string>());
  cmd.k = j.at("k").get<int>();
  cmd.D = j.at("D").get<long>();
  cmd.s = cplx_from(j.at("s"));
  for (const json &z : j.at("z"))
    cmd.z.push_back({z.at("x").get<double>(), z.at("y").get<double>()});
  cmd.tau = {j.at("tau").at("x").get<double>(), j.at("tau").at("y").get<double>()};
  cmd.p = j.at("p").get<long>();
  if (!j.at("tol").is_null())
    cmd.tol = j.at("tol").get<double>();
  if (!j.at("qz2_max").is_null())
    cmd.qz2_max = j.at("qz2_max").get<double>();
  cmd.format = format_from(j.at("format").get<std::string>());
  cmd.out = j.at("out").get<std::string>();
  cmd.classical = j.at("classical").get<bool>();
  cmd.harmonic = j.at("harmonic").get<bool>();
  cmd.star = j.at("star").get<bool>();
  cmd.kappa = j.at("kappa").get<double>();
  cmd.m = j.at("m").get<long>();
  cmd.c_max = j.at("c_max").get<long>();
  cmd.r = j.at("r").get<double>();
  cmd.a_max = j.at("a_max").get<long>();
  cmd.suite = j.at("suite").get<std::string>();
  return cmd;
}

} // namespace locmaass::cli
