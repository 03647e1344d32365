#include "knotcert/cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "knotcert/catalog.hpp"
#include "knotcert/errors.hpp"
#include "knotcert/module.hpp"
#include "knotcert/seifert.hpp"

namespace knotcert {

namespace {

void print_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << "\n"; }

std::string data_summary(const KnotDescriptor& k) {
  if (k.seifert)
    return "seifert [" + k.seifert->matrix().to_string() + "] (q = " +
           std::to_string(k.seifert->q()) + ")";
  return "module [" + k.module_h3->matrix().to_string() + "]";
}

std::string underlying_text(const KnotDescriptor& k) {
  if (k.underlying == Underlying::Other) return "other (" + k.underlying_label + ")";
  return to_string(k.underlying);
}

void run_alex(std::ostream& out, const std::string& matrix_text, std::optional<int> q, bool json) {
  if (json && !q) throw ParseError("--q is required with --json");
  const SeifertMatrix s = SeifertMatrix::validate(IntMatrix::parse(matrix_text), q.value_or(3));
  const AlexanderClass cls = alexander_class(s);
  if (json) {
    print_json(out, {{"alexander_class", cls.to_string()},
                     {"q", s.q()},
                     {"size", static_cast<int>(s.size())}});
  } else {
    out << cls.to_string() << "\n";
  }
}

void run_cert(std::ostream& out, const std::string& matrix_text, std::optional<int> q, bool json) {
  if (json && !q) throw ParseError("--q is required with --json");
  const SeifertMatrix s = SeifertMatrix::validate(IntMatrix::parse(matrix_text), q.value_or(3));
  const KnottednessCertificate cert = knottedness_certificate(s);
  if (json) {
    print_json(out, {{"verdict", to_string(cert.verdict)},
                     {"evidence", cert.evidence.to_string()},
                     {"note", cert.narrative}});
  } else {
    out << "verdict: " << to_string(cert.verdict) << "\n";
    out << "evidence: " << cert.evidence.to_string() << "\n";
    out << "note: " << cert.narrative << "\n";
  }
}

void run_module(std::ostream& out, const std::string& presentation_text, bool json) {
  const ModulePresentation m(LaurentMatrix::parse(presentation_text));
  const std::vector<LaurentPoly> fitting0 = fitting_generators(m, 0);
  if (json) {
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : fitting0) gens.push_back(g.to_string());
    print_json(out, {{"size", static_cast<int>(m.size())},
                     {"trivial", is_trivial(m)},
                     {"fitting_0", gens}});
  } else {
    out << "size: " << m.size() << "\n";
    out << "trivial: " << (is_trivial(m) ? "yes" : "no") << "\n";
    out << "fitting-0:";
    for (const auto& g : fitting0) out << " " << g.to_string() << ";";
    out << "\n";
  }
}

void run_catalog_list(std::ostream& out, bool json) {
  const std::vector<KnotDescriptor> entries = catalog_entries();
  if (json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& k : entries) arr.push_back(descriptor_to_json(k));
    print_json(out, arr);
    return;
  }
  for (const auto& k : entries) {
    out << k.name << "\n";
    out << "  n: " << k.n << "\n";
    out << "  underlying: " << underlying_text(k) << "\n";
    out << "  mu: " << k.mu << "\n";
    out << "  singular: " << to_string(k.singular_kind) << "\n";
    out << "  data: " << data_summary(k) << "\n";
  }
}

int run_verify(std::ostream& out, int theorem, int n, bool json) {
  TheoremReport report = [&] {
    switch (theorem) {
      case 1: return verify_theorem1(n);
      case 2: return verify_theorem2();
      case 3: return verify_theorem3(n);
      default: throw ParseError("--theorem must be 1, 2 or 3");
    }
  }();
  if (json)
    print_json(out, report.to_json());
  else
    out << report.to_text();
  return report.overall() ? 0 : 1;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact knottedness certificates from Seifert matrices and cover modules"};
  app.name("knotcert");
  app.require_subcommand(1);

  int exit_code = 0;

  std::string alex_matrix;
  std::optional<int> alex_q;
  bool alex_json = false;
  CLI::App* alex = app.add_subcommand("alex", "Alexander class of a Seifert matrix");
  alex->add_option("--matrix", alex_matrix, "square integer matrix, rows ';'-separated")
      ->required();
  alex->add_option("--q", alex_q, "half-dimension parameter (knot dimension 2q-1; default 3)");
  alex->add_flag("--json", alex_json, "emit JSON");
  alex->callback([&] { run_alex(out, alex_matrix, alex_q, alex_json); });

  std::string cert_matrix;
  std::optional<int> cert_q;
  bool cert_json = false;
  CLI::App* cert = app.add_subcommand("cert", "knottedness certificate of a Seifert matrix");
  cert->add_option("--matrix", cert_matrix, "square integer matrix, rows ';'-separated")
      ->required();
  cert->add_option("--q", cert_q, "half-dimension parameter (knot dimension 2q-1; default 3)");
  cert->add_flag("--json", cert_json, "emit JSON");
  cert->callback([&] { run_cert(out, cert_matrix, cert_q, cert_json); });

  std::string module_presentation;
  bool module_json = false;
  CLI::App* module = app.add_subcommand("module", "inspect a Z[t,t^-1]-module presentation");
  module
      ->add_option("--presentation", module_presentation,
                   "square matrix of Laurent polynomials; \"\" for the 0x0 presentation")
      ->required();
  module->add_flag("--json", module_json, "emit JSON");
  module->callback([&] { run_module(out, module_presentation, module_json); });

  CLI::App* catalog = app.add_subcommand("catalog", "built-in knot constructions");
  catalog->require_subcommand(1);
  bool list_json = false;
  CLI::App* list = catalog->add_subcommand("list", "list the catalogued constructions");
  list->add_flag("--json", list_json, "emit JSON descriptors");
  list->callback([&] { run_catalog_list(out, list_json); });

  int verify_theorem = 0;
  int verify_n = 5;
  bool verify_json = false;
  CLI::App* verify = app.add_subcommand("verify", "re-run the algebra behind a theorem");
  verify->add_option("--theorem", verify_theorem, "theorem number: 1, 2 or 3")->required();
  verify->add_option("--n", verify_n, "knot dimension for theorems 1 and 3 (default 5)");
  verify->add_flag("--json", verify_json, "emit JSON");
  verify->callback([&] { exit_code = run_verify(out, verify_theorem, verify_n, verify_json); });

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    auto parsed = app.get_subcommands();
    out << (parsed.empty() ? app.help() : parsed.back()->help());
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}

}  // namespace knotcert
