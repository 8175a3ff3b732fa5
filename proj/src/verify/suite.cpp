#include <atomic>
#include <chrono>
#include <fstream>
#include <sstream>
#include <thread>

#include "checks.hpp"
#include "hecke/errors.hpp"
#include "hecke/serialize.hpp"

namespace hecke::verify {

const std::vector<Check>& registry() {
  static const std::vector<Check> checks = [] {
    std::vector<Check> out;
    detail::add_group_checks(out);
    detail::add_hecke_checks(out);
    detail::add_hij_checks(out);
    return out;
  }();
  return checks;
}

bool SuiteReport::ok() const { return failed() == 0; }

std::size_t SuiteReport::failed() const {
  std::size_t n = 0;
  for (const auto& r : records) n += r.pass ? 0 : 1;
  return n;
}

namespace {

RootDatum load_datum(const std::string& type) {
  if (type.size() > 5 && type.compare(type.size() - 5, 5, ".json") == 0) {
    std::ifstream in(type);
    if (!in) throw InputError("cannot read root datum file " + type);
    std::stringstream ss;
    ss << in.rdbuf();
    return RootDatum::from_json_text(ss.str());
  }
  return RootDatum::preset(type);
}

struct Job {
  const Check* check;
  const Context* ctx;
  bool cell;
};

}  // namespace

SuiteReport run_suite(const SuiteConfig& config) {
  if (config.window < 0 || config.weight_window < 0) throw InputError("windows must be nonnegative");
  SuiteReport report;
  report.config = config;

  std::vector<std::unique_ptr<Context>> type_ctx, cell_ctx;
  std::vector<CheckRecord> construction;
  for (const auto& type : config.types) {
    auto base = std::make_unique<Context>();
    base->type = type;
    base->window = config.window;
    base->weight_window = config.weight_window;
    try {
      base->datum = std::make_shared<RootDatum>(load_datum(type));
      base->W = std::make_shared<WeylGroup>(base->datum);
      base->E = std::make_shared<ExtAffineWeyl>(base->W);
      base->H = std::make_shared<HeckeAlgebra>(base->E);
      base->kl = std::make_shared<KLTable>(base->H);
    } catch (const std::exception& ex) {
      CheckRecord r;
      r.name = "construction";
      r.module = "root_datum";
      r.type = type;
      r.window = config.window;
      r.weight_window = config.weight_window;
      r.counterexample = ex.what();
      construction.push_back(r);
      continue;
    }
    std::vector<std::pair<std::string, std::string>> subsets = config.subsets;
    if (subsets.empty()) subsets = {{"", ""}, {"", "S"}, {"S", ""}, {"S", "S"}};
    for (const auto& [Itext, Jtext] : subsets) {
      auto cell = std::make_unique<Context>(*base);
      try {
        cell->I = base->datum->parse_subset(Itext);
        cell->J = base->datum->parse_subset(Jtext);
        cell->mod = std::make_shared<DoubleCosetModule>(base->kl, cell->I, cell->J);
      } catch (const std::exception& ex) {
        CheckRecord r;
        r.name = "construction";
        r.module = "double_coset_module";
        r.type = type;
        r.window = config.window;
        r.weight_window = config.weight_window;
        r.I = Itext;
        r.J = Jtext;
        r.counterexample = ex.what();
        construction.push_back(r);
        continue;
      }
      CellSummary summary;
      summary.type = type;
      summary.I = cell->I.to_string();
      summary.J = cell->J.to_string();
      for (auto z : base->W->min_double_coset_reps(cell->I, cell->J)) summary.graded_pieces.push_back(base->W->name(z));
      summary.r_IJ = cell->mod->r_IJ().to_string();
      report.cells.push_back(summary);
      cell_ctx.push_back(std::move(cell));
    }
    // Type-scoped checks see the first cell's module (or an empty-subset one).
    base->mod = std::make_shared<DoubleCosetModule>(base->kl, SimpleSubset(), SimpleSubset());
    type_ctx.push_back(std::move(base));
  }

  std::vector<Job> jobs;
  auto selected = [&](const Check& ch) { return ch.name.rfind(config.filter, 0) == 0; };
  for (const auto& ctx : type_ctx) {
    for (const auto& ch : registry())
      if (ch.scope == Scope::Type && selected(ch)) jobs.push_back({&ch, ctx.get(), false});
    for (const auto& cell : cell_ctx)
      if (cell->type == ctx->type && cell->datum == ctx->datum)
        for (const auto& ch : registry())
          if (ch.scope == Scope::Cell && selected(ch)) jobs.push_back({&ch, cell.get(), true});
  }

  std::vector<CheckRecord> results(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      const Job& job = jobs[i];
      CheckRecord r;
      r.name = job.check->name;
      r.module = job.check->module;
      r.type = job.ctx->type;
      r.window = job.ctx->window;
      r.weight_window = job.ctx->weight_window;
      if (job.cell) {
        r.I = job.ctx->I.to_string();
        r.J = job.ctx->J.to_string();
      }
      const auto start = std::chrono::steady_clock::now();
      try {
        const Outcome o = job.check->run(*job.ctx);
        r.pass = o.pass;
        r.cases = o.cases;
        r.counterexample = o.counterexample;
      } catch (const std::exception& ex) {
        r.pass = false;
        r.counterexample = std::string("exception: ") + ex.what();
      }
      r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      results[i] = std::move(r);
    }
  };
  unsigned threads = config.threads ? config.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(jobs.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  report.records = std::move(construction);
  report.records.insert(report.records.end(), results.begin(), results.end());
  return report;
}

nlohmann::json report_to_json(const SuiteReport& report, bool timing) {
  using nlohmann::json;
  json subsets = json::array();
  for (const auto& [I, J] : report.config.subsets) subsets.push_back({{"I", I}, {"J", J}});
  json checks = json::array();
  for (const auto& r : report.records) {
    json j{{"name", r.name},
           {"module", r.module},
           {"parameters",
            {{"type", r.type},
             {"window", r.window},
             {"weight_window", r.weight_window},
             {"I", r.I ? json(*r.I) : json(nullptr)},
             {"J", r.J ? json(*r.J) : json(nullptr)}}},
           {"status", r.pass ? "pass" : "fail"},
           {"cases", r.cases},
           {"counterexample", r.pass ? json(nullptr) : json(r.counterexample)}};
    if (timing) j["wall_ms"] = r.wall_ms;
    checks.push_back(j);
  }
  json cells = json::array();
  for (const auto& c : report.cells)
    cells.push_back({{"type", c.type}, {"I", c.I}, {"J", c.J}, {"graded_pieces", c.graded_pieces}, {"r_IJ", c.r_IJ}});
  json names = json::array();
  for (const auto& ch : registry()) names.push_back(ch.name);
  const std::size_t failed = report.failed();
  return {{"config",
           {{"types", report.config.types},
            {"window", report.config.window},
            {"weight_window", report.config.weight_window},
            {"subsets", subsets},
            {"filter", report.config.filter}}},
          {"registered", names},
          {"cells", cells},
          {"checks", checks},
          {"summary", {{"total", report.records.size()}, {"passed", report.records.size() - failed}, {"failed", failed}}}};
}

std::string report_to_text(const SuiteReport& report) {
  std::ostringstream os;
  for (const auto& c : report.cells) {
    os << "cell " << c.type << " I=" << c.I << " J=" << c.J << " graded pieces {";
    for (std::size_t i = 0; i < c.graded_pieces.size(); ++i) os << (i ? ", " : "") << c.graded_pieces[i];
    os << "} r_IJ = " << c.r_IJ << '\n';
  }
  for (const auto& r : report.records) {
    os << (r.pass ? "pass " : "FAIL ") << r.name << " [" << r.type;
    if (r.I) os << " I=" << *r.I << " J=" << *r.J;
    os << "] cases=" << r.cases;
    if (!r.pass) os << " counterexample: " << r.counterexample;
    os << '\n';
  }
  os << "summary: " << report.records.size() - report.failed() << " passed, " << report.failed() << " failed\n";
  return os.str();
}

}  // namespace hecke::verify
