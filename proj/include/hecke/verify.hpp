#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hecke/double_coset.hpp"

namespace hecke::verify {

/// Everything a check may touch for one (type, window, I, J) cell.
struct Context {
  std::string type;
  int window = 4;         ///< length cap for W_ex windows
  int weight_window = 2;  ///< coordinate cap for weight windows
  SimpleSubset I, J;
  std::shared_ptr<const RootDatum> datum;
  std::shared_ptr<const WeylGroup> W;
  std::shared_ptr<const ExtAffineWeyl> E;
  std::shared_ptr<const HeckeAlgebra> H;
  std::shared_ptr<const KLTable> kl;
  std::shared_ptr<const DoubleCosetModule> mod;
};

struct Outcome {
  bool pass = true;
  std::size_t cases = 0;
  std::string counterexample;
};

/// Type-scoped checks run once per root datum; cell-scoped checks once per (I, J).
enum class Scope { Type, Cell };

struct Check {
  std::string name;
  std::string module;
  std::string description;
  Scope scope;
  std::function<Outcome(const Context&)> run;
};

/// Every registered invariant, each exactly once, in a fixed order.
const std::vector<Check>& registry();
/// Number of invariants the suite is expected to carry.
inline constexpr std::size_t kExpectedChecks = 33;

/// Counts cases and keeps the first failure.
class Probe {
 public:
  template <class Describe>
  void expect(bool ok, Describe&& describe) {
    ++cases_;
    if (!ok && !failed_) {
      failed_ = true;
      counterexample_ = describe();
    }
  }
  bool failed() const { return failed_; }
  Outcome done() const { return {!failed_, cases_, counterexample_}; }

 private:
  std::size_t cases_ = 0;
  bool failed_ = false;
  std::string counterexample_;
};

struct SuiteConfig {
  /// Preset names; a value ending in ".json" is read as a root datum file.
  std::vector<std::string> types{"A1", "A2"};
  int window = 4;
  int weight_window = 2;
  /// Subset pairs as text ("S", "", "1,2"); empty means the four corners
  /// (empty/empty, empty/S, S/empty, S/S).
  std::vector<std::pair<std::string, std::string>> subsets;
  /// Run only checks whose name starts with this prefix.
  std::string filter;
  unsigned threads = 0;  ///< 0: hardware concurrency
};

struct CheckRecord {
  std::string name;
  std::string module;
  std::string type;
  int window = 0;
  int weight_window = 0;
  std::optional<std::string> I, J;
  bool pass = false;
  std::size_t cases = 0;
  std::string counterexample;
  double wall_ms = 0;
};

struct CellSummary {
  std::string type;
  std::string I, J;
  std::vector<std::string> graded_pieces;  ///< W^{IJ}
  std::string r_IJ;
};

struct SuiteReport {
  SuiteConfig config;
  std::vector<CheckRecord> records;
  std::vector<CellSummary> cells;
  bool ok() const;
  std::size_t failed() const;
};

/// Build every cell and run the registered checks. Construction errors
/// (invalid root data, bad subsets) become failed "construction" records.
SuiteReport run_suite(const SuiteConfig& config);

/// Deterministic rendering; wall_ms fields are omitted when timing is false.
nlohmann::json report_to_json(const SuiteReport& report, bool timing = true);

/// One line per record plus a summary line.
std::string report_to_text(const SuiteReport& report);

}  // namespace hecke::verify
