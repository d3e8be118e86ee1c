#include "symconn/cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "symconn/automorphism.hpp"
#include "symconn/catalog.hpp"
#include "symconn/error.hpp"
#include "symconn/example_run.hpp"
#include "symconn/moduli.hpp"
#include "symconn/report.hpp"
#include "symconn/spec_io.hpp"

namespace symconn {

namespace {

// Usage and I/O failures that are not file-format errors.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw UsageError("cannot open '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

LoadedModel load_file(const std::string& path) {
  const ModelSpecDocument doc = parse_spec(read_file(path));
  return load_model(doc, std::filesystem::path(path).stem().string());
}

std::optional<Rational> beta_option(const std::string& text) {
  if (text.empty()) {
    return std::nullopt;
  }
  return parse_rational(text);
}

const Connection& require_connection(const LoadedModel& m) {
  if (!m.connection) {
    throw PreconditionError("model '" + m.name + "' has no connection");
  }
  return *m.connection;
}

std::string render_christoffel(const Tensor& gamma) {
  std::string out;
  for (IndexCounter idx(gamma.dim(), 3); !idx.done(); idx.next()) {
    const Scalar& v = gamma.at(idx.index());
    if (v.is_zero()) {
      continue;
    }
    out += (out.empty() ? "" : ", ") + ("G_" + std::to_string(idx[0] + 1) +
                                         std::to_string(idx[1] + 1) + "^" +
                                         std::to_string(idx[2] + 1)) +
           " = " + v.to_string();
  }
  return out.empty() ? "0" : out;
}

struct VerifyOptions {
  std::string file;
  std::vector<std::string> vectors;
  bool all_invariant = false;
  std::string beta;
  std::string format = "human";
};

int run_verify(const VerifyOptions& opt, std::ostream& out) {
  const LoadedModel m = load_file(opt.file);
  const std::optional<Rational> beta = beta_option(opt.beta);
  Connection conn = require_connection(m);
  if (beta) {
    conn = conn.substitute(*beta);
  }
  require_symplectic_connection(m.algebra, m.omega, conn);
  const std::size_t n = m.algebra.dim();

  std::vector<std::pair<std::string, Tensor>> targets;
  for (const auto& name : opt.vectors) {
    if (auto it = m.vectors.find(name); it != m.vectors.end()) {
      targets.emplace_back(name, beta ? it->second.substitute(*beta) : it->second);
      continue;
    }
    bool builtin = false;
    for (std::size_t a = 1; a <= n; ++a) {
      if (name == "E" + std::to_string(a)) {
        targets.emplace_back(name, Tensor::frame_vector(n, a));
        builtin = true;
      }
    }
    if (!builtin) {
      throw UsageError("unknown vector '" + name + "'");
    }
  }

  std::optional<Subspace> aut;
  std::optional<Subspace> symp;
  if (opt.all_invariant || opt.vectors.empty()) {
    aut = automorphism_space(m.algebra, conn);
    symp = symplectic_field_space(m.algebra, m.omega);
    for (const auto& v : aut->basis_tensors()) {
      targets.emplace_back(render_vector(v), v);
    }
  }

  std::vector<LabelledReport> reports;
  for (const auto& [name, x] : targets) {
    reports.push_back(
        {m.name, name, beta, verify_automorphism(m.algebra, m.omega, conn, x, beta)});
  }

  if (opt.format == "machine") {
    out << render_machine(reports);
    return kExitOk;
  }
  if (aut) {
    const Subspace both = intersection(*aut, *symp);
    out << "affine automorphisms: " << render_subspace(*aut) << " (dimension "
        << aut->dim() << ")\n";
    out << "symplectic automorphisms: " << render_subspace(both) << " (dimension "
        << both.dim() << ")\n";
    out << (aut->dim() == both.dim() ? "all symplectic\n"
                                     : "some automorphisms are not symplectic\n");
  }
  for (std::size_t a = 0; a < reports.size(); ++a) {
    out << (a || aut ? "\n" : "") << render_human(reports[a]);
  }
  return kExitOk;
}

int run_moduli(const std::string& file, std::ostream& out) {
  const LoadedModel m = load_file(file);
  const AffineSolutionSpace space = symplectic_connection_space(m.algebra, m.omega);
  out << "dimension: " << space.dimension() << "\n";
  out << "particular: " << render_christoffel(space.particular.christoffel()) << "\n";
  for (std::size_t a = 0; a < space.homogeneous_basis.size(); ++a) {
    out << "basis " << a + 1 << ": " << render_christoffel(space.homogeneous_basis[a])
        << "\n";
  }
  if (m.connection) {
    out << "file connection in space: "
        << (m.connection->is_rational()
                ? (space.contains(*m.connection) ? "yes" : "no")
                : "parameter-dependent")
        << "\n";
  }
  return kExitOk;
}

int run_holonomy(const std::string& file, const std::string& beta_text,
                 std::ostream& out) {
  const LoadedModel m = load_file(file);
  Connection conn = require_connection(m);
  if (const auto beta = beta_option(beta_text)) {
    conn = conn.substitute(*beta);
  }
  const auto generators = infinitesimal_holonomy(m.algebra, conn);
  if (generators.empty()) {
    out << "generators: 0 (flat)\n";
  } else {
    out << "generators: " << generators.size() << "\n";
    for (std::size_t a = 0; a < generators.size(); ++a) {
      out << "  " << a + 1 << ": " << render_endomorphism(generators[a]) << "\n";
    }
  }
  out << "span dimension: " << generators.size() << "\n";
  return kExitOk;
}

int run_example(const std::string& beta_text, std::ostream& out) {
  const auto beta = beta_option(beta_text);
  const ExampleRun run = run_kodaira_thurston_example(beta);
  out << "Kodaira-Thurston example, beta = "
      << (beta ? to_string(*beta) : std::string(kCatalogParameter) + " (symbolic)")
      << "\n";
  for (const auto& c : run.checks) {
    out << (c.passed ? "[ok]   " : "[FAIL] ") << c.name << ": residual " << c.residual
        << "\n";
  }
  out << (run.all_passed() ? "all identities verified\n" : "identity check failed\n");
  return run.all_passed() ? kExitOk : kExitSemantic;
}

int run_export(const std::string& name, const std::string& beta_text,
               std::ostream& out) {
  const auto beta = beta_option(beta_text);
  std::optional<NamedModel> model;
  if (name == "kodaira_thurston") {
    model = beta ? kodaira_thurston(Scalar(*beta)) : kodaira_thurston_symbolic();
  } else if (name.rfind("darboux_flat_", 0) == 0) {
    const std::string digits = name.substr(13);
    if (digits.size() == 1 && digits[0] >= '1' && digits[0] <= '4') {
      model = darboux_flat(static_cast<std::size_t>(digits[0] - '0'));
    }
  }
  if (!model) {
    throw UsageError("unknown catalog model '" + name +
                     "' (known: kodaira_thurston, darboux_flat_1..4)");
  }
  out << serialize_spec(document_from_model(*model));
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact checks for invariant symplectic connections", "symconn"};
  app.require_subcommand(1);

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "automorphism chain for vectors");
  verify_cmd->add_option("file", verify.file, "model file")->required();
  auto* vector_opt =
      verify_cmd->add_option("--vector", verify.vectors, "named vector (repeatable)");
  verify_cmd->add_flag("--all-invariant", verify.all_invariant,
                       "every invariant affine automorphism")
      ->excludes(vector_opt);
  verify_cmd->add_option("--beta", verify.beta, "parameter value");
  verify_cmd->add_option("--format", verify.format, "human or machine")
      ->check(CLI::IsMember({"human", "machine"}));

  std::string file;
  std::string beta;
  auto* moduli_cmd = app.add_subcommand("moduli", "symplectic connection space");
  moduli_cmd->add_option("file", file, "model file")->required();

  auto* holonomy_cmd = app.add_subcommand("holonomy", "infinitesimal holonomy");
  holonomy_cmd->add_option("file", file, "model file")->required();
  holonomy_cmd->add_option("--beta", beta, "parameter value");

  bool symbolic = false;
  auto* example_cmd =
      app.add_subcommand("paper-example", "built-in Kodaira-Thurston example");
  auto* example_beta = example_cmd->add_option("--beta", beta, "parameter value");
  example_cmd->add_flag("--symbolic", symbolic, "keep beta symbolic (default)")
      ->excludes(example_beta);

  auto* canon_cmd = app.add_subcommand("canonicalize", "rewrite a model file");
  canon_cmd->add_option("file", file, "model file")->required();

  std::string catalog_name;
  auto* export_cmd = app.add_subcommand("export", "write a catalog model");
  export_cmd->add_option("name", catalog_name, "catalog name")->required();
  export_cmd->add_option("--beta", beta, "parameter value");

  std::vector<const char*> argv{"symconn"};
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitParse;
  }

  try {
    if (verify_cmd->parsed()) {
      return run_verify(verify, out);
    }
    if (moduli_cmd->parsed()) {
      return run_moduli(file, out);
    }
    if (holonomy_cmd->parsed()) {
      return run_holonomy(file, beta, out);
    }
    if (example_cmd->parsed()) {
      return run_example(beta, out);
    }
    if (canon_cmd->parsed()) {
      out << serialize_spec(parse_spec(read_file(file)));
      return kExitOk;
    }
    if (export_cmd->parsed()) {
      return run_export(catalog_name, beta, out);
    }
  } catch (const SpecFormatError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const AlgebraValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitSemantic;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitSemantic;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << "\n";
    return kExitSemantic;
  } catch (const ShapeError& e) {
    err << "error: " << e.what() << "\n";
    return kExitSemantic;
  } catch (const ConventionFault& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitSemantic;
  }
  return kExitParse;
}

}  // namespace symconn
