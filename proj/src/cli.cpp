#include "polydiv/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "polydiv/error.hpp"
#include "polydiv/hefer.hpp"
#include "polydiv/kernel.hpp"
#include "polydiv/membership.hpp"
#include "polydiv/residue.hpp"

namespace polydiv {

namespace {

constexpr int kFeasible = 0;
constexpr int kFailure = 1;
constexpr int kInfeasible = 2;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream stream(text);
  while (std::getline(stream, cur, sep)) parts.push_back(cur);
  return parts;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<unsigned> parse_degrees(const std::string& text) {
  std::vector<unsigned> out;
  for (const auto& part : split(text, ',')) {
    const std::string t = trim(part);
    std::size_t used = 0;
    long v = -1;
    try {
      v = std::stol(t, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != t.size() || v < 0) throw Error("invalid degree list '" + text + "'");
    out.push_back(static_cast<unsigned>(v));
  }
  return out;
}

std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string read_file(const std::string& path, std::istream& in) {
  if (path == "-") return read_all(in);
  std::ifstream file(path);
  if (!file) throw Error("cannot open '" + path + "'");
  return read_all(file);
}

// Shared options for commands that take generators.
struct SystemArgs {
  std::size_t n = 0;
  std::string gens;
  std::string degrees;

  void attach(CLI::App* cmd) {
    cmd->add_option("--n", n, "number of affine variables")->required();
    cmd->add_option("--gens", gens, "generators separated by ';'")->required();
    cmd->add_option("--degrees", degrees, "declared degrees d1,d2,...");
  }

  GeneratorSystem build(VarBase base = VarBase::Affine) const {
    const std::size_t nvars = base == VarBase::Affine ? n : n + 1;
    std::vector<Polynomial> polys;
    for (const auto& g : split(gens, ';')) polys.push_back(parse(trim(g), nvars, base));
    std::optional<std::vector<unsigned>> decl;
    if (!degrees.empty()) decl = parse_degrees(degrees);
    return GeneratorSystem(nvars, std::move(polys), decl);
  }
};

Polynomial read_target(const std::string& text, std::size_t nvars, std::istream& in,
                       VarBase base = VarBase::Affine) {
  return parse(trim(text == "-" ? read_all(in) : text), nvars, base);
}

std::vector<Complex> parse_point(const std::string& text) {
  std::vector<Complex> out;
  for (const auto& coord : split(text, ';')) {
    const auto parts = split(coord, ',');
    if (parts.size() != 2) throw Error("point coordinates must be written as re,im");
    try {
      out.emplace_back(std::stod(parts[0]), std::stod(parts[1]));
    } catch (const std::exception&) {
      throw Error("invalid point coordinate '" + coord + "'");
    }
  }
  return out;
}

void print_certificate(std::ostream& out, const DivisionCertificate& cert) {
  for (std::size_t j = 0; j < cert.cofactors.size(); ++j)
    out << "Q" << j + 1 << " = " << to_string(cert.cofactors[j]) << "\n";
}

int report(std::ostream& out, const GeneratorSystem& g, const Polynomial& target, const DivisionOutcome& outcome,
           bool json) {
  if (!outcome.feasible()) {
    out << "infeasible\n";
    if (outcome.witness) out << "witness: " << to_string(Polynomial::term(*outcome.witness, 1)) << "\n";
    return kInfeasible;
  }
  const auto& cert = *outcome.certificate;
  if (json) {
    out << certificate_to_json(g, target, cert) << "\n";
  } else {
    out << "feasible\n";
    print_certificate(out, cert);
    out << (cert.verified ? "verified\n" : "not verified\n");
  }
  return kFeasible;
}

std::string index_key(const std::vector<std::size_t>& set) {
  std::string s = "(";
  for (std::size_t i = 0; i < set.size(); ++i) s += (i ? "," : "") + std::to_string(set[i] + 1);
  return s + ")";
}

// {"n", "generators", "declared_degrees"?, "r", "components": {"1,2": "poly", ...}}
int run_koszul(const std::string& path, unsigned ell, std::ostream& out, std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_file(path, in));
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("invalid components file: ") + e.what());
  }
  try {
    const std::size_t n = doc.at("n").get<std::size_t>();
    std::vector<Polynomial> polys;
    for (const auto& g : doc.at("generators")) polys.push_back(parse(g.get<std::string>(), n));
    std::optional<std::vector<unsigned>> decl;
    if (doc.contains("declared_degrees")) decl = doc.at("declared_degrees").get<std::vector<unsigned>>();
    const GeneratorSystem g(n, std::move(polys), decl);
    KoszulTuple phi;
    phi.ell = ell;
    phi.r = doc.at("r").get<int>();
    for (const auto& [key, value] : doc.at("components").items()) {
      std::vector<std::size_t> set;
      if (!trim(key).empty())
        for (auto idx : parse_degrees(key)) {
          if (idx == 0 || idx > g.m()) throw Error("component index out of range: " + key);
          set.push_back(idx - 1);
        }
      if (set.size() != ell) throw Error("component " + key + " does not have ell indices");
      phi.components[set] = parse(value.get<std::string>(), n);
    }
    const KoszulOutcome outcome = koszul_divide(g, phi);
    if (!outcome.feasible()) {
      out << "infeasible\n";
      if (outcome.witness)
        out << "witness: " << index_key(outcome.witness->first) << " "
            << to_string(Polynomial::term(outcome.witness->second, 1)) << "\n";
      return kInfeasible;
    }
    out << "feasible\n";
    for (const auto& [set, poly] : outcome.psi->components) out << index_key(set) << " = " << to_string(poly) << "\n";
    return kFeasible;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("invalid components file: ") + e.what());
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Exact and integral-formula polynomial division"};
  app.require_subcommand(1);

  SystemArgs sys;
  std::string target;
  int r = 0;
  std::string r_text;
  bool json = false;

  auto* divide_cmd = app.add_subcommand("divide", "solve Σ F_j Q_j = Φ with deg F_j Q_j <= r");
  sys.attach(divide_cmd);
  divide_cmd->add_option("--target", target, "Φ, or - for stdin")->required();
  divide_cmd->add_option("--r", r, "degree budget")->required();
  divide_cmd->add_flag("--json", json, "print a JSON certificate");

  SystemArgs bez;
  auto* bezout_cmd = app.add_subcommand("bezout", "solve Σ F_j Q_j = 1");
  bez.attach(bezout_cmd);
  bezout_cmd->add_option("--r", r_text, "degree budget or 'auto'")->required();
  bezout_cmd->add_flag("--json", json, "print a JSON certificate");

  SystemArgs pow_sys;
  std::string pow_target, budget_rule;
  unsigned nu_max = 1;
  auto* power_cmd = app.add_subcommand("power-divide", "smallest ν with Φ^ν in the ideal");
  pow_sys.attach(power_cmd);
  power_cmd->add_option("--target", pow_target, "Φ, or - for stdin")->required();
  power_cmd->add_option("--nu-max", nu_max, "largest power tried")->required();
  power_cmd->add_option("--budget-rule", budget_rule, "linear:c gives r(ν) = c·ν")->required();

  unsigned ell = 0;
  std::string components;
  auto* koszul_cmd = app.add_subcommand("koszul", "solve δ_f ψ = φ");
  koszul_cmd->add_option("--ell", ell, "degree of φ in Λ E")->required();
  koszul_cmd->add_option("--components", components, "JSON file with n, generators, r, components")->required();

  SystemArgs res_sys;
  std::string res_target;
  bool projective = false;
  unsigned z0_power = 0;
  auto* residue_cmd = app.add_subcommand("residue-annihilates", "φ·R^f = 0 for a monomial complete intersection");
  res_sys.attach(residue_cmd);
  residue_cmd->add_option("--target", res_target, "φ, or - for stdin")->required();
  residue_cmd->add_flag("--projective", projective, "generators and target are homogeneous in z0..zn");
  residue_cmd->add_option("--z0-power", z0_power, "multiply φ by z0^s (with --projective)");

  std::string hefer_gen;
  std::size_t hefer_n = 0;
  int hefer_degree = -1;
  auto* hefer_cmd = app.add_subcommand("hefer", "Hefer decomposition of one polynomial");
  hefer_cmd->add_option("--gen", hefer_gen, "F")->required();
  hefer_cmd->add_option("--n", hefer_n, "number of variables")->required();
  hefer_cmd->add_option("--degree", hefer_degree, "declared degree (default deg F)");

  std::string berg_target, berg_at;
  int berg_r = 0;
  std::size_t berg_res = 64;
  auto* bergman_cmd = app.add_subcommand("bergman", "Bergman reproduction by quadrature");
  bergman_cmd->add_option("--target", berg_target, "Φ, or - for stdin")->required();
  bergman_cmd->add_option("--r", berg_r, "weight degree, >= deg Φ")->required();
  bergman_cmd->add_option("--at", berg_at, "evaluation point re,im[;re,im]")->required();
  bergman_cmd->add_option("--resolution", berg_res, "quadrature resolution");

  SystemArgs ker_sys;
  std::string ker_target;
  int ker_r = 0;
  std::size_t ker_res = 64;
  auto* kernel_cmd = app.add_subcommand("kernel-divide", "cofactors from the explicit division formula");
  ker_sys.attach(kernel_cmd);
  kernel_cmd->add_option("--target", ker_target, "Φ, or - for stdin")->required();
  kernel_cmd->add_option("--r", ker_r, "r >= deg Φ")->required();
  kernel_cmd->add_option("--resolution", ker_res, "quadrature resolution");

  std::string thr_degrees;
  std::size_t thr_n = 0;
  unsigned thr_ell = 0;
  auto* threshold_cmd = app.add_subcommand("threshold", "minimal degree budget for Koszul division");
  threshold_cmd->add_option("--degrees", thr_degrees, "d1,d2,...")->required();
  threshold_cmd->add_option("--n", thr_n, "dimension")->required();
  threshold_cmd->add_option("--ell", thr_ell, "Koszul degree");

  std::string cert_path;
  auto* verify_cmd = app.add_subcommand("verify", "recheck a JSON certificate");
  verify_cmd->add_option("--certificate", cert_path, "file, or - for stdin")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kFeasible;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kFeasible;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }

  try {
    if (divide_cmd->parsed()) {
      const GeneratorSystem g = sys.build();
      const Polynomial phi = read_target(target, g.n(), in);
      return report(out, g, phi, divide(g, phi, r), json);
    }
    if (bezout_cmd->parsed()) {
      const GeneratorSystem g = bez.build();
      int budget = 0;
      if (trim(r_text) == "auto") {
        if (g.m() < g.n() + 1) throw Error("r = auto needs at least n + 1 generators");
        budget = std::accumulate(g.degrees().begin(), g.degrees().end(), 0) - static_cast<int>(g.n());
        if (budget < 0) budget = 0;
      } else {
        try {
          std::size_t used = 0;
          budget = std::stoi(r_text, &used);
          if (used != r_text.size()) throw Error("");
        } catch (const std::exception&) {
          throw Error("--r must be an integer or 'auto'");
        }
      }
      const Polynomial one = Polynomial::constant(g.n(), 1);
      return report(out, g, one, bezout(g, budget), json);
    }
    if (power_cmd->parsed()) {
      const GeneratorSystem g = pow_sys.build();
      const Polynomial phi = read_target(pow_target, g.n(), in);
      const std::string prefix = "linear:";
      if (budget_rule.rfind(prefix, 0) != 0) throw Error("budget rule must be linear:c");
      int slope = 0;
      try {
        slope = std::stoi(budget_rule.substr(prefix.size()));
      } catch (const std::exception&) {
        throw Error("budget rule must be linear:c");
      }
      const PowerOutcome res =
          power_divide(g, phi, nu_max, [slope](unsigned nu) { return slope * static_cast<int>(nu); });
      if (!res.outcome.feasible()) {
        out << "infeasible\n";
        return kInfeasible;
      }
      out << "nu = " << res.nu << "\n";
      print_certificate(out, *res.outcome.certificate);
      out << (res.outcome.certificate->verified ? "verified\n" : "not verified\n");
      return kFeasible;
    }
    if (koszul_cmd->parsed()) return run_koszul(components, ell, out, in);
    if (residue_cmd->parsed()) {
      if (!projective) {
        if (z0_power != 0) throw Error("--z0-power requires --projective");
        const GeneratorSystem g = res_sys.build();
        const Polynomial phi = read_target(res_target, g.n(), in);
        const bool ok = annihilates(MonomialCI::from_generators(g), phi);
        out << (ok ? "true\n" : "false\n");
        return ok ? kFeasible : kInfeasible;
      }
      const GeneratorSystem g = res_sys.build(VarBase::Homogeneous);
      const Polynomial phi = read_target(res_target, g.n(), in, VarBase::Homogeneous);
      const MonomialCI affine = MonomialCI::from_generators(g);
      const MonomialCI ci(affine.nvars(), affine.gens(), true);
      const int deg = phi.degree();
      const HomogeneousSection section(phi, deg < 0 ? 0u : static_cast<unsigned>(deg));
      const bool ok = annihilates_projective(ci, section, z0_power);
      out << (ok ? "true\n" : "false\n");
      return ok ? kFeasible : kInfeasible;
    }
    if (hefer_cmd->parsed()) {
      const Polynomial f = parse(trim(hefer_gen), hefer_n);
      std::optional<unsigned> d;
      if (hefer_degree >= 0) d = static_cast<unsigned>(hefer_degree);
      const HeferDecomposition h = hefer_decompose(f, d);
      std::vector<std::string> names;
      for (std::size_t k = 1; k <= hefer_n; ++k) names.push_back("w" + std::to_string(k));
      for (std::size_t k = 1; k <= hefer_n; ++k) names.push_back("z" + std::to_string(k));
      for (std::size_t k = 0; k < h.forms.size(); ++k)
        out << "h" << k + 1 << " = " << to_string(h.forms[k], names) << "\n";
      const bool ok = verify_hefer(f, h);
      out << (ok ? "verified\n" : "not verified\n");
      return ok ? kFeasible : kInfeasible;
    }
    if (bergman_cmd->parsed()) {
      const std::vector<Complex> z = parse_point(berg_at);
      const Polynomial phi = read_target(berg_target, z.size(), in);
      const Complex value = bergman_reproduce(phi, berg_r, z, fs_quadrature(z.size(), berg_res));
      const Complex direct = evaluate(phi, z);
      out << "value = " << format_complex(value) << "\n";
      out << "direct = " << format_complex(direct) << "\n";
      std::ostringstream e;
      e.precision(12);
      e << std::abs(value - direct);
      out << "error = " << e.str() << "\n";
      return kFeasible;
    }
    if (kernel_cmd->parsed()) {
      const GeneratorSystem g = ker_sys.build();
      const Polynomial phi = read_target(ker_target, g.n(), in);
      const KernelDivision res = kernel_divide(g, phi, ker_r, fs_quadrature(g.n(), ker_res));
      for (std::size_t j = 0; j < res.cofactors.size(); ++j)
        out << "Q" << j + 1 << " = " << to_string(res.cofactors[j], 12) << "\n";
      std::ostringstream diag;
      diag.precision(12);
      diag << "degree bound = " << res.degree_bound << "\n";
      diag << "fit residual = " << res.fit_residual << "\n";
      out << diag.str();
      return kFeasible;
    }
    if (threshold_cmd->parsed()) {
      const Threshold t = noll_threshold(parse_degrees(thr_degrees), thr_n, thr_ell);
      if (t.auto_satisfied)
        out << "auto-satisfied\n";
      else
        out << "minimal r = " << t.minimal_r << "\n";
      return kFeasible;
    }
    if (verify_cmd->parsed()) {
      const ParsedCertificate cert = certificate_from_json(read_file(cert_path, in));
      const bool ok = verify(cert.generators, cert.target, cert.certificate);
      out << (ok ? "verified\n" : "not verified\n");
      return ok ? kFeasible : kInfeasible;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  err << "error: no subcommand\n";
  return kFailure;
}

}  // namespace polydiv
