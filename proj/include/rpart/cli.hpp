#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rpart/core.hpp"
#include "rpart/oracle.hpp"
#include "rpart/scheme.hpp"
#include "rpart/series.hpp"

namespace rpart::cli {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,
  kBadInput = 2,
  kEngineError = 3,
  kNetworkError = 4,
};

enum class Engine { kPositive, kNegative, kBrute };
enum class OutputFormat { kLines, kJson, kCsv };

std::string_view to_string(Engine engine);
Engine parse_engine(std::string_view name);
OutputFormat parse_output_format(std::string_view name);

struct RunConfig {
  PatternSet avoid;
  std::size_t n = 20;
  Engine engine = Engine::kPositive;
  OutputFormat format = OutputFormat::kLines;
  SchemeFormat scheme_format = SchemeFormat::kText;
  std::size_t brute_ceiling = kDefaultBruteCeiling;
  std::size_t neg_ceiling = 40;
  bool fetch = false;
  bool net = false;
  std::optional<std::string> oeis_id;
  std::filesystem::path fixture_dir;
};

/// Default location of the committed OEIS fixtures.
std::filesystem::path default_fixture_dir();

/// Runs one engine over p_A(0..n).
std::vector<BigInt> run_engine(Engine engine, const RunConfig& config, std::size_t n);

std::string format_counts(const RunConfig& config, const std::vector<BigInt>& counts);

int cmd_count(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_scheme(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Test hook applied to each named sequence ("positive", "brute",
/// "negative", or a product name) before comparison.
using Tamper = std::function<void(std::string_view source, std::vector<BigInt>& values)>;

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err,
               const Tamper& tamper = {});
int cmd_oeis(const RunConfig& config, std::ostream& out, std::ostream& err);
/// Regenerates every mapped fixture into config.fixture_dir.
int cmd_fixtures(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to a subcommand.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rpart::cli
