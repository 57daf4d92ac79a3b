#pragma once

// Known OEIS identifications, locally generated sequence fixtures, and an
// opt-in b-file fetcher.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rpart/core.hpp"
#include "rpart/series.hpp"

namespace rpart {

class NetworkError : public Error {
 public:
  using Error::Error;
};

class HttpError : public Error {
 public:
  HttpError(int status, const std::string& what) : Error(what), status_(status) {}
  int status() const { return status_; }

 private:
  int status_;
};

/// Malformed b-file body or fixture document.
class FormatError : public Error {
 public:
  using Error::Error;
};

enum class Provenance { kGeneratedByOracle, kFetchedBfile };

std::string_view to_string(Provenance p);

struct SequenceFixture {
  std::string id;
  /// Index of terms[0].
  std::int64_t offset = 0;
  /// Generating pattern set, present for generated fixtures.
  std::optional<PatternSet> avoid;
  Provenance provenance = Provenance::kGeneratedByOracle;
  std::vector<BigInt> terms;

  /// Term at absolute index n, if stored.
  const BigInt* term(std::int64_t n) const;
};

struct OeisEntry {
  PatternSet avoid;
  /// Empty when the sequence is not in the OEIS.
  std::optional<std::string> id;
  /// Counted index n corresponds to sequence index n + align.
  std::int64_t align = 0;
};

class PatternOeisMap {
 public:
  explicit PatternOeisMap(std::vector<OeisEntry> entries);

  std::span<const OeisEntry> entries() const { return entries_; }
  const OeisEntry* lookup(const PatternSet& avoid) const;
  const OeisEntry* lookup_id(std::string_view id) const;

 private:
  std::vector<OeisEntry> entries_;
};

/// The published identifications, plus the sets known to be absent.
const PatternOeisMap& builtin_map();

/// "A9" and "A000009" both normalize to "A000009". Throws FormatError.
std::string normalize_oeis_id(std::string_view id);

/// Parses "<n> <a(n)>" lines; '#' comments and blank lines are skipped and
/// the indices must be consecutive.
SequenceFixture parse_bfile(std::string_view body, std::string_view id);

/// HTTPS GET of the b-file for `id`. Throws NetworkError, HttpError or
/// FormatError.
SequenceFixture fetch_bfile(std::string_view id,
                            std::chrono::seconds timeout = std::chrono::seconds(20));

struct Mismatch {
  std::int64_t n = 0;
  BigInt computed;
  BigInt expected;
};

struct CompareReport {
  /// First counted index compared and number of indices compared.
  std::int64_t first_n = 0;
  std::size_t overlap = 0;
  /// Terms that agree before the first mismatch (all of them on success).
  std::size_t matched = 0;
  std::optional<Mismatch> mismatch;

  bool full_match() const { return overlap > 0 && !mismatch; }
};

/// Compares seq[n] against the fixture term at n + align over the indices
/// both cover.
CompareReport compare(std::span<const BigInt> seq, const SequenceFixture& fixture,
                      std::int64_t align);

std::string fixture_to_json(const SequenceFixture& fixture);
SequenceFixture fixture_from_json(std::string_view text);

void write_fixture(const std::filesystem::path& path, const SequenceFixture& fixture);
SequenceFixture read_fixture(const std::filesystem::path& path);
std::filesystem::path fixture_path(const std::filesystem::path& dir, std::string_view id);

/// Terms 0..max_n for a mapped entry: brute force up to `brute_limit`,
/// positive engine beyond. Throws Error if the two disagree on the shared
/// range.
SequenceFixture generate_fixture(const OeisEntry& entry, std::size_t max_n,
                                 std::size_t brute_limit);

}  // namespace rpart
