// Command-line front end: table/JSON/CSV emission for every derived
// classification artifact, plus golden-file verification.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "k3ns/report.hpp"
#include "k3ns/verify.hpp"

namespace fs = std::filesystem;
using namespace k3ns;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::vector<int> primes_for(int prime_flag) {
  if (prime_flag == 0)
    return {std::begin(kClassifiablePrimes), std::end(kClassifiablePrimes)};
  for (int p : kClassifiablePrimes)
    if (p == prime_flag) return {prime_flag};
  throw domain_error("unsupported prime " + std::to_string(prime_flag));
}

int run_lattice(const std::string& expr, OutputFormat format) {
  Lattice l = parse_lattice_expr(expr);
  LatticeInvariants inv = invariants(l);
  if (format == OutputFormat::kJson) {
    json j{{"lattice", lattice_json(l)}, {"invariants", lattice_invariants_json(inv)}};
    std::cout << dump(j);
    return kExitOk;
  }
  std::ostringstream out;
  out << l.label << ": rank " << inv.rank << ", signature (" << inv.s_plus << ", " << inv.s_minus
      << "), det " << to_string(inv.det);
  if (inv.unimodular) {
    out << ", unimodular";
  } else if (inv.elementary) {
    out << ", " << to_string(inv.elementary->first) << "-elementary a=" << inv.elementary->second;
  } else {
    out << ", discriminant group";
    for (const Int& f : inv.factors) out << " Z/" << to_string(f);
  }
  if (inv.delta) out << ", delta=" << *inv.delta;
  std::cout << out.str() << "\n";
  return kExitOk;
}

int run_table1(int prime_flag, OutputFormat format) {
  std::vector<LefschetzSolution> sols;
  for (int p : primes_for(prime_flag)) sols.push_back(solve_table1(p));
  switch (format) {
    case OutputFormat::kJson: {
      json arr = json::array();
      for (const auto& s : sols) arr.push_back(table1_json(s));
      std::cout << dump(arr);
      break;
    }
    case OutputFormat::kMarkdown:
      std::cout << table1_markdown(sols);
      break;
    case OutputFormat::kCsv:
      std::cout << table1_csv(sols);
      break;
  }
  return kExitOk;
}

int run_classify(int prime, OutputFormat format) {
  auto rows = classification_table(prime);
  switch (format) {
    case OutputFormat::kJson:
      std::cout << dump(classification_table_json(rows));
      break;
    case OutputFormat::kMarkdown:
      std::cout << classification_markdown(rows);
      break;
    case OutputFormat::kCsv:
      std::cout << classification_csv(rows);
      break;
  }
  return kExitOk;
}

int run_moduli(int prime_flag, OutputFormat format) {
  std::vector<ModuliComponent> components;
  for (int p : primes_for(prime_flag))
    for (auto& c : irreducible_components(p)) components.push_back(std::move(c));
  switch (format) {
    case OutputFormat::kJson:
      std::cout << dump(moduli_json(components));
      break;
    case OutputFormat::kMarkdown:
      std::cout << moduli_markdown(components);
      break;
    case OutputFormat::kCsv:
      std::cout << moduli_csv(components);
      break;
  }
  return kExitOk;
}

int run_fibers(const std::string& example, const std::string& f_text, const std::string& g_text,
               const std::vector<std::string>& binds, unsigned long seed, OutputFormat format) {
  WeierstrassModel model;
  if (!example.empty()) {
    model = instantiate(catalog_entry(example), seed);
  } else {
    if (f_text.empty() && g_text.empty())
      throw domain_error("fibers requires --example or --f/--g");
    std::map<std::string, Rat> bindings;
    for (const std::string& b : binds) {
      auto eq = b.find('=');
      if (eq == std::string::npos) throw domain_error("--bind expects name=rational");
      bindings[b.substr(0, eq)] = rat_from_string(b.substr(eq + 1));
    }
    model = make_model(parse_poly(f_text, bindings), parse_poly(g_text, bindings), "cli", bindings);
  }
  FiberSummary summary = classify_fibers(model);
  switch (format) {
    case OutputFormat::kJson:
      std::cout << dump(fibers_json(model, summary));
      break;
    case OutputFormat::kMarkdown:
      std::cout << fibers_markdown(model, summary);
      break;
    case OutputFormat::kCsv:
      std::cout << fibers_csv(summary);
      break;
  }
  return kExitOk;
}

int run_appendix(OutputFormat format) {
  auto results = verify_appendix();
  int failures = 0;
  if (format == OutputFormat::kJson) {
    json checks = json::array();
    for (const auto& r : results) {
      checks.push_back(json{{"check", r.name}, {"pass", r.pass}, {"detail", r.detail}});
      if (!r.pass) ++failures;
    }
    json j{{"checks", checks},
           {"norm_v", cyclotomic_json(hermitian_norm(rho0().lattice, appendix_vector_v()))},
           {"norm_w", cyclotomic_json(hermitian_norm(rho6().lattice, appendix_vector_w()))}};
    std::cout << dump(j);
  } else {
    std::vector<std::vector<std::string>> rows{{"check", "result"}};
    for (const auto& r : results) {
      rows.push_back({r.name, r.pass ? "pass" : "FAIL " + r.detail});
      if (!r.pass) ++failures;
    }
    std::cout << markdown_table(rows);
  }
  return failures == 0 ? kExitOk : kExitMismatch;
}

int run_verify_all(const std::string& golden_dir, bool regen, unsigned long seed) {
  VerifySummary summary = verify_all(seed);
  for (const auto& r : summary.checks)
    if (!r.pass) std::cout << "FAIL " << r.name << (r.detail.empty() ? "" : ": " + r.detail) << "\n";
  std::cout << summary.checks.size() - summary.failures << "/" << summary.checks.size()
            << " verification checks passed\n";
  int failures = summary.failures;

  if (!golden_dir.empty()) {
    auto docs = golden_documents(seed);
    if (regen) {
      fs::create_directories(golden_dir);
      for (const auto& [name, text] : docs) {
        std::ofstream out(fs::path(golden_dir) / name, std::ios::binary);
        out << text;
      }
      std::cout << "wrote " << docs.size() << " golden files to " << golden_dir << "\n";
    } else {
      int golden_failures = 0;
      for (const auto& [name, text] : docs) {
        std::ifstream in(fs::path(golden_dir) / name, std::ios::binary);
        if (!in) {
          std::cout << "FAIL golden " << name << ": missing\n";
          ++golden_failures;
          continue;
        }
        std::stringstream buf;
        buf << in.rdbuf();
        if (buf.str() != text) {
          std::cout << "FAIL golden " << name << ": differs\n";
          ++golden_failures;
        }
      }
      std::cout << docs.size() - golden_failures << "/" << docs.size()
                << " golden files match\n";
      failures += golden_failures;
    }
  }
  return failures == 0 ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact classification toolkit for prime-order non-symplectic "
               "automorphisms of K3 surfaces"};
  app.require_subcommand(1);

  std::string format_text = "md";
  int prime = 0;
  unsigned long seed = 0;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format_text, "md, json or csv")->default_val("md");
  };

  // lattice info <expr>
  auto* lattice_cmd = app.add_subcommand("lattice", "lattice invariants");
  std::string lattice_expr;
  auto* lattice_info = lattice_cmd->add_subcommand("info", "invariants of a lattice expression");
  lattice_info->add_option("expr", lattice_expr, "lattice expression, e.g. \"U(7)+K7\"")
      ->required();
  add_format(lattice_info);

  auto* table1_cmd = app.add_subcommand("table1", "isolated-fixed-point counts per prime");
  table1_cmd->add_option("--prime", prime, "restrict to one prime");
  add_format(table1_cmd);

  auto* classify_cmd = app.add_subcommand("classify", "classification rows for a prime");
  int classify_prime = 0;
  classify_cmd->add_option("--prime", classify_prime, "prime (2..19)")->required();
  add_format(classify_cmd);

  auto* moduli_cmd = app.add_subcommand("moduli", "irreducible moduli components");
  moduli_cmd->add_option("--prime", prime, "restrict to one prime");
  add_format(moduli_cmd);

  auto* fibers_cmd = app.add_subcommand("fibers", "Kodaira fibers of a Weierstrass model");
  std::string example, f_text, g_text;
  std::vector<std::string> binds;
  fibers_cmd->add_option("--example", example, "catalog key, e.g. 5.6 or kondo-7");
  fibers_cmd->add_option("--f", f_text, "coefficient polynomial f(t)");
  fibers_cmd->add_option("--g", g_text, "coefficient polynomial g(t)");
  fibers_cmd->add_option("--bind", binds, "parameter binding name=rational");
  fibers_cmd->add_option("--seed", seed, "generic-parameter sampling seed");
  add_format(fibers_cmd);

  auto* appendix_cmd = app.add_subcommand("appendix", "order-7 isometry checks");
  appendix_cmd->add_subcommand("verify", "run all appendix checks");
  add_format(appendix_cmd);

  auto* verify_cmd = app.add_subcommand("verify-all", "run the full verification suite");
  std::string golden_dir;
  bool regen = false;
  verify_cmd->add_option("--golden-dir", golden_dir, "directory of golden files");
  verify_cmd->add_flag("--regen", regen, "regenerate golden files instead of comparing");
  verify_cmd->add_option("--seed", seed, "generic-parameter sampling seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    OutputFormat format = output_format_from_string(format_text);
    if (lattice_info->parsed()) return run_lattice(lattice_expr, format);
    if (table1_cmd->parsed()) return run_table1(prime, format);
    if (classify_cmd->parsed()) return run_classify(classify_prime, format);
    if (moduli_cmd->parsed()) return run_moduli(prime, format);
    if (fibers_cmd->parsed()) return run_fibers(example, f_text, g_text, binds, seed, format);
    if (appendix_cmd->parsed()) return run_appendix(format);
    if (verify_cmd->parsed()) return run_verify_all(golden_dir, regen, seed);
    std::cerr << "no subcommand\n";
    return kExitUsage;
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "verification error: " << e.what() << "\n";
    return kExitMismatch;
  }
}
