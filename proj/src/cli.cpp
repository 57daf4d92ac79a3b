#include "rpart/cli.hpp"

#include <cstdlib>
#include <future>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rpart/negative.hpp"
#include "rpart/oeis.hpp"
#include "rpart/positive.hpp"

#ifndef RPART_FIXTURE_DIR
#define RPART_FIXTURE_DIR "data/oeis"
#endif

namespace rpart::cli {

namespace {

/// Bad command-line input: exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

nlohmann::ordered_json patterns_json(const PatternSet& set) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& p : set) arr.push_back(std::vector<int>(p.diffs().begin(), p.diffs().end()));
  return arr;
}

std::vector<BigInt> series_terms(const TruncatedSeries& s) {
  return {s.coeffs().begin(), s.coeffs().end()};
}

template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const InvalidPattern& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const CeilingExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const NetworkError& e) {
    err << "network error: " << e.what() << "\n";
    return kNetworkError;
  } catch (const HttpError& e) {
    err << "network error: " << e.what() << "\n";
    return kNetworkError;
  } catch (const std::exception& e) {
    err << "engine error: " << e.what() << "\n";
    return kEngineError;
  }
}

}  // namespace

std::string_view to_string(Engine engine) {
  switch (engine) {
    case Engine::kPositive:
      return "positive";
    case Engine::kNegative:
      return "negative";
    case Engine::kBrute:
      return "brute";
  }
  return "unknown";
}

Engine parse_engine(std::string_view name) {
  if (name == "positive") return Engine::kPositive;
  if (name == "negative") return Engine::kNegative;
  if (name == "brute") return Engine::kBrute;
  throw UsageError("unknown engine \"" + std::string(name) + "\"");
}

OutputFormat parse_output_format(std::string_view name) {
  if (name == "lines") return OutputFormat::kLines;
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") return OutputFormat::kCsv;
  throw UsageError("unknown output format \"" + std::string(name) + "\"");
}

std::filesystem::path default_fixture_dir() {
  if (const char* env = std::getenv("RPART_FIXTURE_DIR"); env && *env) return env;
  return RPART_FIXTURE_DIR;
}

std::vector<BigInt> run_engine(Engine engine, const RunConfig& config, std::size_t n) {
  switch (engine) {
    case Engine::kPositive:
      return count_sequence(config.avoid, n);
    case Engine::kNegative:
      return neg_sequence(config.avoid, n);
    case Engine::kBrute:
      return brute_count(config.avoid, n, config.brute_ceiling);
  }
  throw Error("unknown engine");
}

std::string format_counts(const RunConfig& config, const std::vector<BigInt>& counts) {
  std::string out;
  switch (config.format) {
    case OutputFormat::kLines:
      for (std::size_t n = 0; n < counts.size(); ++n)
        out += std::to_string(n) + " " + counts[n].get_str() + "\n";
      break;
    case OutputFormat::kCsv:
      for (std::size_t n = 0; n < counts.size(); ++n) {
        if (n) out += ",";
        out += counts[n].get_str();
      }
      out += "\n";
      break;
    case OutputFormat::kJson: {
      nlohmann::ordered_json doc;
      doc["avoid"] = patterns_json(config.avoid);
      doc["n"] = config.n;
      doc["engine"] = std::string(to_string(config.engine));
      auto arr = nlohmann::ordered_json::array();
      for (const auto& c : counts) arr.push_back(c.get_str());
      doc["counts"] = std::move(arr);
      out = doc.dump() + "\n";
      break;
    }
  }
  return out;
}

int cmd_count(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    validate_user_set(config.avoid);
    out << format_counts(config, run_engine(config.engine, config, config.n));
    return kOk;
  });
}

int cmd_scheme(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    validate_user_set(config.avoid);
    out << export_scheme(build_scheme(config.avoid), config.scheme_format);
    return kOk;
  });
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err,
               const Tamper& tamper) {
  return guarded(err, [&]() -> int {
    validate_user_set(config.avoid);
    const std::size_t n = config.n;
    const std::size_t brute_n = std::min(n, config.brute_ceiling);
    const std::size_t neg_n = std::min(n, config.neg_ceiling);

    // Engines run concurrently; each owns its memo tables.
    auto positive = std::async(std::launch::async, [&] { return count_sequence(config.avoid, n); });
    auto brute = std::async(std::launch::async,
                            [&] { return brute_count(config.avoid, brute_n, config.brute_ceiling); });
    auto negative = std::async(std::launch::async, [&] { return neg_sequence(config.avoid, neg_n); });

    std::vector<std::pair<std::string, std::vector<BigInt>>> references;
    references.emplace_back("brute", brute.get());
    references.emplace_back("negative", negative.get());

    const PatternSet none;
    const PatternSet distinct{Pattern{0}};
    const PatternSet rogers_ramanujan{Pattern{0}, Pattern{1}};
    if (config.avoid == none) {
      references.emplace_back("euler_product", series_terms(euler_product(n)));
    } else if (config.avoid == distinct) {
      references.emplace_back("distinct_product", series_terms(distinct_product(n)));
      const std::uint32_t odd[] = {1};
      references.emplace_back("residue_product(2;1)", series_terms(residue_product(2, odd, n)));
    } else if (config.avoid == rogers_ramanujan) {
      const std::uint32_t residues[] = {1, 4};
      references.emplace_back("residue_product(5;1,4)",
                              series_terms(residue_product(5, residues, n)));
    }

    std::vector<BigInt> baseline = positive.get();
    if (tamper) {
      tamper("positive", baseline);
      for (auto& [name, values] : references) tamper(name, values);
    }

    out << "verify {" << config.avoid.to_string() << "} n=0.." << n << "\n";
    bool all_agree = true;
    for (const auto& [name, values] : references) {
      const std::size_t upto = std::min(values.size(), baseline.size());
      bool agree = true;
      for (std::size_t i = 0; i < upto; ++i) {
        if (values[i] != baseline[i]) {
          out << "MISMATCH " << name << " n=" << i << " positive=" << baseline[i].get_str() << " "
              << name << "=" << values[i].get_str() << "\n";
          agree = false;
          break;
        }
      }
      if (agree) out << "ok " << name << " agrees with positive on n=0.." << upto - 1 << "\n";
      all_agree = all_agree && agree;
    }
    out << (all_agree ? "PASS" : "FAIL") << "\n";
    return all_agree ? kOk : kMismatch;
  });
}

int cmd_oeis(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    validate_user_set(config.avoid);
    const OeisEntry* entry = builtin_map().lookup(config.avoid);
    std::string id;
    std::int64_t align = 0;
    if (config.oeis_id) {
      id = normalize_oeis_id(*config.oeis_id);
      if (entry && entry->id == id) align = entry->align;
    } else if (entry && entry->id) {
      id = *entry->id;
      align = entry->align;
    } else if (entry) {
      out << "{" << config.avoid.to_string() << "}: no OEIS id on record\n";
      return kOk;
    } else {
      throw UsageError("{" + config.avoid.to_string() +
                       "} is not in the built-in map; pass --id to compare against a sequence");
    }
    if (config.fetch && !config.net) throw UsageError("--fetch needs --net to allow network access");

    bool ok = true;
    const auto path = fixture_path(config.fixture_dir, id);
    const bool have_fixture = std::filesystem::exists(path);
    if (have_fixture) {
      const SequenceFixture fixture = read_fixture(path);
      const auto last = fixture.offset + static_cast<std::int64_t>(fixture.terms.size()) - 1 - align;
      const auto counts =
          count_sequence(config.avoid, static_cast<std::size_t>(std::max<std::int64_t>(last, 0)));
      const auto report = compare(counts, fixture, align);
      if (report.full_match()) {
        out << id << " fixture: " << report.matched << " terms match (n=" << report.first_n << ".."
            << report.first_n + static_cast<std::int64_t>(report.overlap) - 1 << ")\n";
      } else if (report.mismatch) {
        out << id << " fixture: MISMATCH at n=" << report.mismatch->n
            << " computed=" << report.mismatch->computed.get_str()
            << " expected=" << report.mismatch->expected.get_str() << "\n";
        ok = false;
      } else {
        out << id << " fixture: no overlapping terms\n";
        ok = false;
      }
    } else if (!config.fetch) {
      throw UsageError("no fixture for " + id + " in " + config.fixture_dir.string());
    }

    if (config.fetch) {
      const SequenceFixture remote = fetch_bfile(id);
      const std::size_t upto = config.n;
      const auto counts = count_sequence(config.avoid, upto);
      const auto report = compare(counts, remote, align);
      if (report.full_match()) {
        out << id << " b-file: " << report.matched << " terms match (n=" << report.first_n << ".."
            << report.first_n + static_cast<std::int64_t>(report.overlap) - 1 << ")\n";
      } else if (report.mismatch) {
        out << id << " b-file: MISMATCH at n=" << report.mismatch->n
            << " computed=" << report.mismatch->computed.get_str()
            << " expected=" << report.mismatch->expected.get_str() << "\n";
        ok = false;
      } else {
        out << id << " b-file: no overlapping terms\n";
        ok = false;
      }
    }
    return ok ? kOk : kMismatch;
  });
}

int cmd_fixtures(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::filesystem::create_directories(config.fixture_dir);
    for (const auto& entry : builtin_map().entries()) {
      if (!entry.id) continue;
      const auto fixture = generate_fixture(entry, config.n, config.brute_ceiling);
      const auto path = fixture_path(config.fixture_dir, *entry.id);
      write_fixture(path, fixture);
      out << "wrote " << path.string() << " (" << fixture.terms.size() << " terms)\n";
    }
    return kOk;
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Count integer partitions avoiding consecutive-difference patterns."};
  app.require_subcommand(1);

  std::string avoid_text;
  std::size_t n = 0;
  std::string engine_text = "positive";
  std::string format_text;
  std::size_t brute_ceiling = kDefaultBruteCeiling;
  std::size_t neg_ceiling = 40;
  bool fetch = false;
  bool net = false;
  std::string id;
  std::string fixture_dir;

  auto add_avoid = [&](CLI::App* sub) {
    sub->add_option("--avoid", avoid_text,
                    "Pattern set, e.g. \"[0],[1,2]\"; empty means no restriction");
  };
  auto add_n = [&](CLI::App* sub, std::size_t fallback) {
    sub->add_option("--n", n, "Largest n to count")->default_val(fallback);
  };

  auto* count = app.add_subcommand("count", "Print p_A(0..n)");
  add_avoid(count);
  add_n(count, 20);
  count->add_option("--engine", engine_text, "positive | negative | brute");
  count->add_option("--format", format_text, "lines | json | csv");
  count->add_option("--brute-ceiling", brute_ceiling, "Largest n the brute engine accepts");

  auto* scheme = app.add_subcommand("scheme", "Print the recurrence scheme for a pattern set");
  add_avoid(scheme);
  scheme->add_option("--format", format_text, "text | json | dot");

  auto* verify = app.add_subcommand("verify", "Cross-check every engine and product identity");
  add_avoid(verify);
  add_n(verify, 30);
  verify->add_option("--brute-ceiling", brute_ceiling, "Largest n checked by brute force");
  verify->add_option("--neg-ceiling", neg_ceiling, "Largest n checked by the cluster sieve");

  auto* oeis = app.add_subcommand("oeis", "Compare against the OEIS identification");
  add_avoid(oeis);
  add_n(oeis, 200);
  oeis->add_option("--id", id, "Explicit OEIS id (A-number)");
  oeis->add_flag("--fetch", fetch, "Also compare with the live b-file");
  oeis->add_flag("--net", net, "Allow network access");
  oeis->add_option("--fixtures", fixture_dir, "Fixture directory");

  auto* fixtures = app.add_subcommand("fixtures", "Regenerate the OEIS fixtures");
  add_n(fixtures, 50);
  fixtures->add_option("--fixtures", fixture_dir, "Output directory");
  fixtures->add_option("--brute-ceiling", brute_ceiling, "Brute force covers n up to this");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  RunConfig config;
  config.n = n;
  config.brute_ceiling = brute_ceiling;
  config.neg_ceiling = neg_ceiling;
  config.fetch = fetch;
  config.net = net;
  if (!id.empty()) config.oeis_id = id;
  config.fixture_dir = fixture_dir.empty() ? default_fixture_dir() : std::filesystem::path(fixture_dir);

  const int parsed = guarded(err, [&] {
    config.avoid = parse_pattern_set(avoid_text);
    config.engine = parse_engine(engine_text);
    if (scheme->parsed()) {
      config.scheme_format = parse_scheme_format(format_text.empty() ? "text" : format_text);
    } else if (!format_text.empty()) {
      config.format = parse_output_format(format_text);
    }
    if (!id.empty()) normalize_oeis_id(id);
    return kOk;
  });
  if (parsed != kOk) return parsed == kEngineError ? kBadInput : parsed;

  if (count->parsed()) return cmd_count(config, out, err);
  if (scheme->parsed()) return cmd_scheme(config, out, err);
  if (verify->parsed()) return cmd_verify(config, out, err);
  if (oeis->parsed()) return cmd_oeis(config, out, err);
  return cmd_fixtures(config, out, err);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("rpart");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace rpart::cli
