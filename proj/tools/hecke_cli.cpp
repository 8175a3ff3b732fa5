#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hecke/errors.hpp"
#include "hecke/expr.hpp"
#include "hecke/serialize.hpp"
#include "hecke/verify.hpp"

namespace {

using namespace hecke;

struct Stack {
  std::shared_ptr<const RootDatum> datum;
  std::shared_ptr<const WeylGroup> W;
  std::shared_ptr<const ExtAffineWeyl> E;
  std::shared_ptr<const HeckeAlgebra> H;
  std::shared_ptr<KLTable> kl;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

Stack build(const std::string& type, const std::string& datum_file) {
  Stack s;
  s.datum = std::make_shared<RootDatum>(datum_file.empty() ? RootDatum::preset(type)
                                                           : RootDatum::from_json_text(read_file(datum_file)));
  s.W = std::make_shared<WeylGroup>(s.datum);
  s.E = std::make_shared<ExtAffineWeyl>(s.W);
  s.H = std::make_shared<HeckeAlgebra>(s.E);
  s.kl = std::make_shared<KLTable>(s.H);
  return s;
}

int run_suite(const verify::SuiteConfig& cfg, const std::string& json_out, bool timing) {
  const verify::SuiteReport report = verify::run_suite(cfg);
  std::cout << verify::report_to_text(report);
  if (!json_out.empty()) write_file(json_out, verify::report_to_json(report, timing).dump(2) + "\n");
  return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in extended affine Hecke algebras and their double coset modules"};
  app.require_subcommand(1);

  std::string type = "A1", datum_file, I_text, J_text;

  // suite
  auto* suite = app.add_subcommand("suite", "Run the registered invariant checks");
  std::vector<std::string> suite_types;
  verify::SuiteConfig cfg;
  std::string suite_json;
  bool list = false, no_timing = false;
  suite->add_option("--type", suite_types, "Preset names or root datum .json files (repeatable)");
  suite->add_option("--window", cfg.window, "Length cap for W_ex windows")->capture_default_str();
  suite->add_option("--weight-window", cfg.weight_window, "Coordinate cap for weight windows")->capture_default_str();
  suite->add_option("--I", I_text, "Left subset, e.g. 1 or S (with --J; default: the four corners)");
  suite->add_option("--J", J_text, "Right subset");
  suite->add_option("--filter", cfg.filter, "Only checks whose name starts with this prefix");
  suite->add_option("--threads", cfg.threads, "Worker threads (0: all cores)");
  suite->add_option("--json", suite_json, "Write the JSON report here");
  suite->add_flag("--no-timing", no_timing, "Omit wall_ms from the JSON report");
  suite->add_flag("--list", list, "List registered checks and exit");

  // expand
  auto* expand = app.add_subcommand("expand", "Expand an element of H^{IJ} in a basis");
  std::string expr_text, basis_text = "standard", expand_json;
  expand->add_option("--type", type, "Preset name")->capture_default_str();
  expand->add_option("--datum", datum_file, "Root datum JSON file (overrides --type)");
  expand->add_option("--I", I_text, "Left subset");
  expand->add_option("--J", J_text, "Right subset");
  expand->add_option("--basis", basis_text, "standard, bernstein or kl")->capture_default_str();
  expand->add_option("--expr", expr_text, "Element expression")->required();
  expand->add_option("--json", expand_json, "Write coordinates and carrier as JSON");

  // kl-table
  auto* kltab = app.add_subcommand("kl-table", "Tabulate Kazhdan-Lusztig polynomials over a length window");
  int maxlen = 4, box = 1;
  std::string tsv_out, cache;
  kltab->add_option("--type", type, "Preset name")->capture_default_str();
  kltab->add_option("--datum", datum_file, "Root datum JSON file (overrides --type)");
  kltab->add_option("--maxlen", maxlen, "Largest length")->capture_default_str();
  kltab->add_option("--box", box, "Coordinate box for length-zero elements")->capture_default_str();
  kltab->add_option("--tsv", tsv_out, "Write the table as TSV here (default: stdout)");
  kltab->add_option("--cache", cache, "JSON cache file, loaded when present and rewritten after");

  // cosets
  auto* cosets = app.add_subcommand("cosets", "List the indices (lambda, z) of H^{IJ} over a weight window");
  int weight_window = 2;
  cosets->add_option("--type", type, "Preset name")->capture_default_str();
  cosets->add_option("--datum", datum_file, "Root datum JSON file (overrides --type)");
  cosets->add_option("--I", I_text, "Left subset");
  cosets->add_option("--J", J_text, "Right subset");
  cosets->add_option("--weight-window", weight_window, "Coordinate cap")->capture_default_str();

  // transition
  auto* transition = app.add_subcommand("transition", "Transition matrix between two bases over a weight window");
  std::string from_text = "kl", to_text = "standard";
  transition->add_option("--type", type, "Preset name")->capture_default_str();
  transition->add_option("--datum", datum_file, "Root datum JSON file (overrides --type)");
  transition->add_option("--I", I_text, "Left subset");
  transition->add_option("--J", J_text, "Right subset");
  transition->add_option("--from", from_text, "Source basis")->capture_default_str();
  transition->add_option("--to", to_text, "Target basis")->capture_default_str();
  transition->add_option("--weight-window", weight_window, "Coordinate cap")->capture_default_str();
  transition->add_option("--tsv", tsv_out, "Write here (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*suite) {
      if (list) {
        for (const auto& ch : verify::registry())
          std::cout << ch.name << '\t' << (ch.scope == verify::Scope::Type ? "type" : "cell") << '\t'
                    << ch.description << '\n';
        std::cout << verify::registry().size() << " checks\n";
        return 0;
      }
      if (!suite_types.empty()) cfg.types = suite_types;
      if (suite->count("--I") || suite->count("--J")) cfg.subsets = {{I_text, J_text}};
      return run_suite(cfg, suite_json, !no_timing);
    }

    Stack s = build(type, datum_file);
    const SimpleSubset I = s.datum->parse_subset(I_text), J = s.datum->parse_subset(J_text);

    if (*kltab) {
      if (maxlen < 0) throw InputError("--maxlen must be nonnegative");
      if (!cache.empty() && std::filesystem::exists(cache))
        kl_cache_load(*s.kl, nlohmann::json::parse(read_file(cache)));
      for (const auto& x : s.E->enumerate_window(maxlen, box)) s.kl->c_prime(x);
      const std::string tsv = kl_table_tsv(*s.kl);
      if (tsv_out.empty())
        std::cout << tsv;
      else
        write_file(tsv_out, tsv);
      if (!cache.empty()) write_file(cache, kl_cache_to_json(*s.kl).dump() + "\n");
      std::cerr << s.kl->entries().size() << " nonzero polynomials over " << s.kl->size() << " columns; all in Z[v^2]: " << (s.kl->all_in_v_squared() ? "yes" : "no")
                << '\n';
      return 0;
    }

    const DoubleCosetModule mod(s.kl, I, J);

    if (*cosets) {
      std::cout << "I = " << I.to_string() << ", J = " << J.to_string() << ", r_IJ = " << mod.r_IJ().to_string()
                << '\n';
      std::cout << "graded pieces:";
      for (auto z : s.W->min_double_coset_reps(I, J)) std::cout << " {" << s.W->name(z) << '}';
      std::cout << "\nindex\tK\tm\tl(m)\n";
      for (const auto& idx : mod.index_window(weight_window)) {
        const ExtAffElt m = mod.m(idx);
        std::cout << mod.index_name(idx) << '\t' << mod.K(idx.z).to_string() << '\t' << s.E->name(m) << '\t'
                  << s.E->length(m) << '\n';
      }
      return 0;
    }

    if (*transition) {
      const std::string tsv =
          transition_tsv(mod, parse_basis(from_text), parse_basis(to_text), mod.index_window(weight_window));
      if (tsv_out.empty())
        std::cout << tsv;
      else
        write_file(tsv_out, tsv);
      return 0;
    }

    if (*expand) {
      const Basis basis = parse_basis(basis_text);
      const ExprValue value = evaluate_expression(expr_text, mod);
      const bool inside = value.preimage || mod.in_module(value.value);
      if (!inside) std::cout << "note: expression is not in H^{IJ}; expanding chi of it\n";
      const HIJElt e = value.preimage ? HIJElt{value.value, I, J, value.preimage}
                       : inside       ? mod.from_carrier(value.value)
                                      : mod.chi(value.value);
      const Coords c = mod.coords(basis, e);
      std::cout << basis_name(basis) << " coordinates:\n" << render_coords(mod, basis, c);
      std::cout << "carrier: " << e.carrier.to_string() << '\n';
      if (!expand_json.empty()) {
        const nlohmann::json j{{"I", subset_to_json(I)},
                               {"J", subset_to_json(J)},
                               {"basis", basis_name(basis)},
                               {"coordinates", coords_to_json(mod, c)},
                               {"carrier", hecke_to_json(e.carrier)}};
        write_file(expand_json, j.dump(2) + "\n");
      }
      return 0;
    }
  } catch (const InputError& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 2;
  } catch (const std::exception& ex) {
    std::cerr << "internal error: " << ex.what() << '\n';
    return 3;
  }
  return 0;
}
