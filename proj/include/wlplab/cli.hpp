#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "wlplab/wlp.hpp"

namespace wlplab::cli {

inline constexpr const char* kVersion = "0.1.0";

struct CaseOutcome {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
  double seconds = 0;
};

struct ReproductionReport {
  std::string target;
  std::vector<CaseOutcome> cases;

  std::size_t passed() const;
  std::size_t failed() const { return cases.size() - passed(); }
  bool pass() const { return failed() == 0; }
  nlohmann::json to_json() const;
};

struct ReproduceOptions {
  WlpOptions wlp;
  /// Upper end of the swept range; 0 selects the target's default.
  long max_n = 0;
  /// Worker count for independent cases; <= 0 uses the hardware concurrency.
  int workers = 0;
};

class UnknownTarget : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

const std::vector<std::string>& reproduce_targets();
ReproductionReport reproduce(const std::string& target, const ReproduceOptions& options = {});

/// Calls fn(i) for i in [0, count) on a bounded pool; results keep input order.
/// The first exception thrown by a worker is rethrown after all workers join.
void for_each_index(std::size_t count, int workers, const std::function<void(std::size_t)>& fn);

/// Append-only JSON-lines verdict cache keyed by (spec, characteristic, certify).
class VerdictCache {
 public:
  explicit VerdictCache(std::string path) : path_(std::move(path)) {}
  static std::string key(const std::string& spec, std::uint64_t characteristic, CertifyMode certify);
  /// Latest entry for the key, if any.  Malformed lines are skipped.
  std::optional<WlpVerdict> lookup(const std::string& key) const;
  void store(const std::string& key, const WlpVerdict& verdict) const;

 private:
  std::string path_;
};

/// Entry point behind the wlplab executable.  args excludes the program name.
/// Returns 0 on success or a true verdict, 1 on a false verdict or failed
/// reproduction, 2 on a usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wlplab::cli
