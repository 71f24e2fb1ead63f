// Command-line front end: run axiom suites against the Cartesian, Klein disk
// or finite models, construct witness points, and emit or replay
// counterexample certificates.
//
// Exit codes: 0 all requested checks pass (or are not-checked), 1 at least
// one counterexample / unverified certificate, 2 usage or input errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "tarski/tarski.hpp"

namespace {

using namespace tarski;

using AnyModel = std::variant<CartesianModel, KleinModel, FiniteBinding>;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

AnyModel make_model(const std::string& selector, long bound) {
  if (selector.rfind("cartesian:", 0) == 0) {
    int dim = 0;
    try {
      dim = std::stoi(selector.substr(10));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad dimension in '" + selector + "'");
    }
    return CartesianModel(dim, bound);
  }
  if (selector == "klein") return KleinModel(bound);
  if (selector.rfind("finite:", 0) == 0) {
    std::string path = selector.substr(7);
    return FiniteBinding(parse_model(read_file(path)), selector);
  }
  throw std::invalid_argument("unknown model '" + selector +
                              "' (expected cartesian:<dim>, klein or finite:<path>)");
}

std::vector<AxiomId> parse_axiom_list(const std::string& csv) {
  if (csv.empty()) return all_axioms();
  std::vector<AxiomId> out;
  size_t start = 0;
  while (start <= csv.size()) {
    size_t comma = csv.find(',', start);
    std::string name = csv.substr(start, comma == std::string::npos ? csv.size() - start
                                                                    : comma - start);
    auto id = parse_axiom(name);
    if (!id) throw std::invalid_argument("unknown axiom '" + name + "'");
    out.push_back(*id);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

int run_check(const std::string& selector, const std::string& axioms_csv, long trials,
              std::uint64_t seed, long bound, const std::string& format) {
  AnyModel model = make_model(selector, bound);
  std::vector<AxiomId> axioms = parse_axiom_list(axioms_csv);
  std::vector<CheckReport> reports = std::visit(
      [&](const auto& m) { return check_suite(m, axioms, trials, seed); }, model);

  bool all_ok = true;
  for (const CheckReport& r : reports)
    if (r.status == CheckStatus::fail || r.status == CheckStatus::unknown) all_ok = false;

  if (format == "structured") {
    for (const CheckReport& r : reports) std::cout << report_structured(r) << "\n";
  } else {
    std::cout << "model " << selector << "  trials " << trials << "  seed " << seed
              << "  bound " << bound << "\n";
    std::cout << report_table_header() << "\n";
    for (const CheckReport& r : reports) std::cout << report_text_line(r) << "\n";
    for (const CheckReport& r : reports)
      if (r.certificate) std::cout << "\n" << certificate_text(*r.certificate);
  }
  return all_ok ? 0 : 1;
}

int run_refute(const std::string& selector, const std::string& axiom_name_arg,
               const std::string& out_path, long bound) {
  auto id = parse_axiom(axiom_name_arg);
  if (!id) throw std::invalid_argument("unknown axiom '" + axiom_name_arg + "'");
  AnyModel model = make_model(selector, bound);

  std::optional<Certificate> cert;
  if (std::holds_alternative<KleinModel>(model)) {
    if (*id != AxiomId::A10p)
      throw std::invalid_argument("refute on klein supports only A10p");
    cert = klein_refutation_certificate(std::get<KleinModel>(model));
  } else if (std::holds_alternative<FiniteBinding>(model)) {
    CheckReport rep = exhaustive_check(*id, std::get<FiniteBinding>(model));
    if (rep.certificate) cert = rep.certificate;
  } else {
    throw std::invalid_argument("refute supports the klein and finite models");
  }

  if (!cert) {
    std::cout << axiom_name(*id) << " holds in " << selector << "; no counterexample\n";
    return 1;
  }
  bool verified = std::visit([&](const auto& m) { return verify_certificate(*cert, m); },
                             model);
  if (!verified) throw std::logic_error("emitted certificate failed self-verification");
  std::cout << certificate_text(*cert);
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
    out << certificate_text(*cert);
  }
  return 0;
}

int run_verify(const std::string& selector, const std::string& cert_path, long bound) {
  Certificate cert = parse_certificate(read_file(cert_path));
  AnyModel model = make_model(selector, bound);
  bool ok = std::visit([&](const auto& m) { return verify_certificate(cert, m); }, model);
  std::cout << "certificate " << (ok ? "verified: failure reproduced" : "rejected") << "\n";
  return ok ? 0 : 1;
}

struct WitnessArgs {
  std::string a, b, c, d, p, q, t;
  int n = 4;
};

int run_witness(const std::string& kind, const WitnessArgs& args) {
  auto pt = [](const std::string& text, const char* flag) {
    if (text.empty())
      throw std::invalid_argument(std::string("missing --") + flag + " point");
    return Vec::parse(text);
  };
  if (kind == "pasch") {
    PaschWitness w = pasch_witness(pt(args.a, "a"), pt(args.b, "b"), pt(args.c, "c"),
                                   pt(args.p, "p"), pt(args.q, "q"));
    std::cout << "x=" << w.x.str() << " k3=" << to_string(w.k3) << " k4=" << to_string(w.k4)
              << "\n";
  } else if (kind == "euclid") {
    EuclidWitness w = euclid_witnesses(pt(args.a, "a"), pt(args.b, "b"), pt(args.c, "c"),
                                       pt(args.d, "d"), pt(args.t, "t"));
    std::cout << "x=" << w.x.str() << " y=" << w.y.str() << "\n";
  } else if (kind == "segment") {
    Vec e = seg_construct_witness(pt(args.a, "a"), pt(args.b, "b"), pt(args.c, "c"),
                                  pt(args.d, "d"));
    std::cout << "e=" << e.str() << "\n";
  } else if (kind == "a9n") {
    A9nCounterexample w = a9n_counterexample(args.n);
    for (size_t i = 0; i < w.ring.size(); ++i)
      std::cout << "p" << i + 1 << "=" << w.ring[i].str() << "\n";
    std::cout << "a=" << w.a.str() << "\nb=" << w.b.str() << "\nc=" << w.c.str() << "\n";
  } else {
    throw std::invalid_argument("unknown witness kind '" + kind +
                                "' (pasch | euclid | segment | a9n)");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact axiom checking for models of Tarski-style geometry"};
  app.require_subcommand(1);

  std::uint64_t seed = 42;
  if (const char* env = std::getenv("TARSKICHECK_SEED")) seed = std::strtoull(env, nullptr, 10);
  long trials = 1000;
  long bound = 100;
  std::string model_sel, axioms_csv, format = "text", out_path, cert_path, kind;
  WitnessArgs wargs;

  CLI::App* check = app.add_subcommand("check", "run axiom checks against a model");
  check->add_option("--model", model_sel, "cartesian:<dim> | klein | finite:<path>")
      ->required();
  check->add_option("--axioms", axioms_csv, "comma-separated axiom ids (default: all)");
  check->add_option("--trials", trials, "sampled trials per axiom")->check(CLI::PositiveNumber);
  check->add_option("--seed", seed, "seed for premise-directed sampling");
  check->add_option("--bound", bound, "bound on random rational numerators/denominators");
  check->add_option("--format", format, "text | structured")
      ->check(CLI::IsMember({"text", "structured"}));

  CLI::App* refute = app.add_subcommand("refute", "emit a verified counterexample certificate");
  refute->add_option("--model", model_sel, "klein | finite:<path>")->required();
  refute->add_option("--axiom", axioms_csv, "axiom id to refute")->required();
  refute->add_option("--out", out_path, "also write the certificate to this file");
  refute->add_option("--bound", bound, "bound on random rational numerators/denominators");

  CLI::App* witness = app.add_subcommand("witness", "construct witness points");
  witness->add_option("kind", kind, "pasch | euclid | segment | a9n")->required();
  witness->add_option("--a", wargs.a, "point, e.g. 1/2,3/4");
  witness->add_option("--b", wargs.b, "point");
  witness->add_option("--c", wargs.c, "point");
  witness->add_option("--d", wargs.d, "point");
  witness->add_option("--p", wargs.p, "point");
  witness->add_option("--q", wargs.q, "point");
  witness->add_option("--t", wargs.t, "point");
  witness->add_option("--n", wargs.n, "ring size for a9n (only 4 is constructible here)");

  CLI::App* verify = app.add_subcommand("verify", "replay a stored certificate");
  verify->add_option("--model", model_sel, "model the certificate refers to")->required();
  verify->add_option("--certificate", cert_path, "certificate file")->required();
  verify->add_option("--bound", bound, "bound on random rational numerators/denominators");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return run_check(model_sel, axioms_csv, trials, seed, bound, format);
    if (refute->parsed()) return run_refute(model_sel, axioms_csv, out_path, bound);
    if (witness->parsed()) return run_witness(kind, wargs);
    if (verify->parsed()) return run_verify(model_sel, cert_path, bound);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
