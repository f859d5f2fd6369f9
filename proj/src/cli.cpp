#include "eqknot/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>

#include "eqknot/catalog.hpp"
#include "eqknot/report.hpp"

namespace eqknot::cli {

namespace {

enum Exit { ok = 0, invalid = 1, usage = 2 };

// Usage errors that are not tied to a parse position.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;
  bool quiet = false;
};

KnotSpec resolve(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) return load(arg);
  try {
    return builtin_ref(arg);
  } catch (const DomainError& e) {
    throw UsageError("'" + arg + "' is neither a readable file nor a builtin: " + e.what());
  }
}

ModuleElement parse_vector(const std::string& text, std::size_t expected) {
  ModuleElement v;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    v.push_back(LaurentPoly::parse(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (v.size() != expected)
    throw UsageError("vector has " + std::to_string(v.size()) + " entries, the module has " +
                     std::to_string(expected) + " generators");
  return v;
}

Json strings(const std::vector<LaurentPoly>& v) {
  Json out = Json::array();
  for (const auto& p : v) out.push_back(p.to_string());
  return out;
}

std::string bracketed(const std::vector<LaurentPoly>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
  return s + "]";
}

Json spec_json(const KnotSpec& s) {
  Json out;
  out["name"] = s.name;
  Json params = Json::object();
  for (const auto& [k, v] : s.params) params[k] = to_string(v);
  out["params"] = std::move(params);
  out["seifert"] = s.seifert;
  if (const auto* named = std::get_if<std::string>(&s.involution)) {
    out["involution"] = *named;
  } else {
    const auto& m = std::get<LambdaMatrix>(s.involution);
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
      rows.push_back(std::move(row));
    }
    out["involution"] = std::move(rows);
  }
  out["notes"] = s.notes;
  return out;
}

class Emitter {
 public:
  Emitter(const Options& o, std::ostream& out) : o_(o), out_(out) {}
  void operator()(const Json& j, const std::string& text) const {
    if (o_.quiet) return;
    if (o_.json)
      out_ << j.dump(2) << "\n";
    else
      out_ << text;
  }

 private:
  const Options& o_;
  std::ostream& out_;
};

// One obstruct result, computed in isolation so specs can run concurrently.
struct BatchItem {
  Json json;
  std::string text;
  std::string error;
  int code = ok;
};

BatchItem obstruct_one(const std::string& arg, std::uint64_t seed) {
  BatchItem item;
  try {
    const KnotSpec spec = resolve(arg);
    const SliceReport r = equivariant_slice_verdict(assemble(spec), seed);
    item.json = to_json(r);
    item.json["spec"] = spec.name;
    item.text = "spec: " + spec.name + "\n" + to_text(r);
  } catch (const ValidationError& e) {
    item.error = arg + ": validation failed: " + e.what();
    item.code = invalid;
  } catch (const ParseError& e) {
    item.error = arg + ": " + e.what();
    item.code = usage;
  } catch (const UsageError& e) {
    item.error = e.what();
    item.code = usage;
  } catch (const std::exception& e) {
    item.error = arg + ": " + e.what();
    item.code = invalid;
  }
  return item;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariants and equivariant sliceness obstructions for strongly invertible knots"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.json, "Machine-readable output");
  app.add_flag("--quiet", opt.quiet, "Suppress normal output");

  std::string spec_arg;
  std::vector<std::string> spec_args;
  std::string x_arg, y_arg, out_path, catalog_action, catalog_name;
  std::uint64_t seed = 0;
  std::optional<std::size_t> k_upper;
  long a_param = 0, n_param = 0;

  auto* alexander = app.add_subcommand("alexander", "Alexander polynomial, invariant factors and grk");
  alexander->add_option("spec", spec_arg, "Spec file or builtin reference")->required();
  auto* blanchfield = app.add_subcommand("blanchfield", "Gram matrix of the Blanchfield pairing");
  blanchfield->add_option("spec", spec_arg)->required();
  auto* pair_cmd = app.add_subcommand("pair", "Evaluate the pairing on two elements");
  pair_cmd->add_option("spec", spec_arg)->required();
  pair_cmd->add_option("--x", x_arg, "Comma-separated coefficients")->required();
  pair_cmd->add_option("--y", y_arg, "Comma-separated coefficients")->required();
  auto* tau_cmd = app.add_subcommand("tau", "Apply the involution");
  tau_cmd->add_option("spec", spec_arg)->required();
  tau_cmd->add_option("--x", x_arg, "Comma-separated coefficients")->required();
  auto* obstruct = app.add_subcommand("obstruct", "Equivariant sliceness verdict with certificate");
  obstruct->add_option("spec", spec_args, "One or more specs")->required();
  obstruct->add_option("--seed", seed, "Falsifier seed");
  auto* genus = app.add_subcommand("genus-bound", "Lower bound on the equivariant 4-genus");
  genus->add_option("spec", spec_arg)->required();
  genus->add_option("--k-upper", k_upper, "Known upper bound on k");
  genus->add_option("--seed", seed, "Falsifier seed");
  auto* sum_cmd = app.add_subcommand("sum", "Write the equivariant connected sum spec");
  sum_cmd->add_option("spec", spec_args)->required();
  sum_cmd->add_option("-o,--output", out_path, "Output file")->required();
  auto* amph = app.add_subcommand("amphichiral", "Obstruction for sums of twist knots K_a");
  amph->add_option("--a", a_param)->required()->check(CLI::PositiveNumber);
  amph->add_option("--n", n_param)->required()->check(CLI::PositiveNumber);
  auto* catalog = app.add_subcommand("catalog", "Builtin knots");
  catalog->add_option("action", catalog_action)->required()->check(CLI::IsMember({"list", "show"}));
  catalog->add_option("name", catalog_name);
  auto* verify = app.add_subcommand("verify", "Check every structural axiom");
  verify->add_option("spec", spec_arg)->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }

  const Emitter emit(opt, out);
  try {
    if (*alexander) {
      const KnotSpec spec = resolve(spec_arg);
      const auto t = assemble(spec);
      const auto& h = t.h();
      Json j;
      j["spec"] = spec.name;
      j["alexander"] = h.order().to_string();
      j["invariant_factors"] = strings(h.invariant_factors());
      j["grk"] = h.grk();
      emit(j, "alexander: " + h.order().to_string() + "\ninvariant_factors: " + bracketed(h.invariant_factors()) +
                  "\ngrk: " + std::to_string(h.grk()) + "\n");
    } else if (*blanchfield) {
      const KnotSpec spec = resolve(spec_arg);
      const auto t = assemble(spec);
      Json j;
      j["spec"] = spec.name;
      j["gram"] = to_json(t.pairing.gram());
      std::string text;
      const auto& g = t.pairing.gram();
      for (std::size_t i = 0; i < g.rows(); ++i) {
        for (std::size_t k = 0; k < g.cols(); ++k) text += (k ? "  |  " : "") + g(i, k).to_string();
        text += "\n";
      }
      emit(j, text);
    } else if (*pair_cmd) {
      const KnotSpec spec = resolve(spec_arg);
      const auto t = assemble(spec);
      const auto x = parse_vector(x_arg, t.h().generators());
      const auto y = parse_vector(y_arg, t.h().generators());
      const TorsionClass v = t.pairing.pair(x, y);
      Json j;
      j["spec"] = spec.name;
      j["x"] = strings(x);
      j["y"] = strings(y);
      j["value"] = v.to_string();
      emit(j, v.to_string() + "\n");
    } else if (*tau_cmd) {
      const KnotSpec spec = resolve(spec_arg);
      const auto t = assemble(spec);
      const auto x = parse_vector(x_arg, t.h().generators());
      const auto y = t.involution.apply(x);
      Json j;
      j["spec"] = spec.name;
      j["x"] = strings(x);
      j["tau_x"] = strings(y);
      emit(j, bracketed(y) + "\n");
    } else if (*obstruct) {
      std::vector<BatchItem> items(spec_args.size());
      const long count = static_cast<long>(spec_args.size());
#pragma omp parallel for schedule(dynamic)
      for (long i = 0; i < count; ++i) items[static_cast<std::size_t>(i)] = obstruct_one(spec_args[static_cast<std::size_t>(i)], seed);
      int code = ok;
      Json all = Json::array();
      std::string text;
      for (const auto& item : items) {
        if (item.code != ok) {
          err << item.error << "\n";
          code = std::max(code, item.code);
          continue;
        }
        all.push_back(item.json);
        text += (text.empty() ? "" : "\n") + item.text;
      }
      emit(items.size() == 1 && !all.empty() ? all[0] : all, text);
      return code;
    } else if (*genus) {
      const KnotSpec spec = resolve(spec_arg);
      const auto t = assemble(spec);
      const auto cert = certify_k0(t, seed);
      const auto g = genus_lower_bound(t, cert, k_upper);
      Json j = to_json(g, cert);
      j["spec"] = spec.name;
      emit(j, to_text(g, cert));
    } else if (*sum_cmd) {
      std::vector<KnotSpec> specs;
      for (const auto& s : spec_args) {
        specs.push_back(resolve(s));
        (void)assemble(specs.back());
      }
      const KnotSpec total = sum_specs(specs);
      (void)assemble(total);
      save(total, out_path);
      Json j;
      j["output"] = out_path;
      j["summands"] = spec_args.size();
      j["size"] = total.seifert.size();
      emit(j, "wrote " + out_path + " (" + std::to_string(spec_args.size()) + " summands)\n");
    } else if (*amph) {
      const auto r = amphichiral_obstruction(a_param, n_param);
      emit(to_json(r), to_text(r));
    } else if (*catalog) {
      if (catalog_action == "list") {
        Json j = builtin_names();
        std::string text;
        for (const auto& n : builtin_names()) text += n + "\n";
        emit(j, text);
      } else {
        if (catalog_name.empty()) throw UsageError("catalog show needs a name");
        const KnotSpec spec = resolve(catalog_name);
        emit(spec_json(spec), format_spec(spec));
      }
    } else if (*verify) {
      const KnotSpec spec = resolve(spec_arg);
      const auto r = validate(assemble_unchecked(spec));
      Json j = to_json(r);
      j["spec"] = spec.name;
      emit(j, to_text(r));
      if (!r.ok()) {
        err << "validation failed: " << r.first_failure()->axiom << "\n";
        return invalid;
      }
    }
  } catch (const ValidationError& e) {
    err << "validation failed: " << e.what() << "\n";
    return invalid;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return usage;
  } catch (const UsageError& e) {
    err << e.what() << "\n";
    return usage;
  } catch (const DomainError& e) {
    err << "invalid input: " << e.what() << "\n";
    return usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return invalid;
  }
  return ok;
}

int run(int argc, char** argv) {
  return run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}

}  // namespace eqknot::cli
