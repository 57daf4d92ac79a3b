#pragma once

// Patterns, partitions and the containment / overlap primitives shared by
// both counting engines.
//
// A pattern [a_1, ..., a_r] is a run of r consecutive differences between
// adjacent parts. A partition contains it when some window of r + 1
// consecutive parts realizes exactly those differences.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rpart {

/// Base class for every error the library reports.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed pattern text, negative entries, or an empty user pattern.
class InvalidPattern : public Error {
 public:
  using Error::Error;
};

/// Part list that is not a partition (non-positive or increasing parts).
class InvalidPartition : public Error {
 public:
  using Error::Error;
};

/// Pattern instantiated at a start too small for its last part to stay >= 1.
class InvalidInstantiation : public Error {
 public:
  using Error::Error;
};

class Pattern {
 public:
  Pattern() = default;
  Pattern(std::initializer_list<int> diffs) : Pattern(std::vector<int>(diffs)) {}
  explicit Pattern(std::vector<int> diffs);

  std::span<const int> diffs() const { return diffs_; }
  std::size_t length() const { return diffs_.size(); }
  bool empty() const { return diffs_.empty(); }
  std::int64_t sum() const { return sum_; }

  /// First difference; the pattern must be non-empty.
  int head() const;
  /// The pattern without its first difference; the pattern must be non-empty.
  Pattern tail() const;

  /// True when this pattern is a (not necessarily strict) prefix of `other`.
  bool is_prefix_of(const Pattern& other) const;
  /// True when this pattern occurs as a consecutive run inside `other`.
  bool is_factor_of(const Pattern& other) const;

  /// "[1,1,0]"
  std::string to_string() const;

  /// Canonical order: shorter patterns first, then lexicographic entries.
  std::strong_ordering operator<=>(const Pattern& other) const;
  bool operator==(const Pattern& other) const { return diffs_ == other.diffs_; }

 private:
  std::vector<int> diffs_;
  std::int64_t sum_ = 0;
};

/// A deduplicated, canonically ordered set of patterns.
class PatternSet {
 public:
  PatternSet() = default;
  PatternSet(std::initializer_list<Pattern> patterns)
      : PatternSet(std::vector<Pattern>(patterns)) {}
  explicit PatternSet(std::vector<Pattern> patterns);

  std::span<const Pattern> patterns() const { return patterns_; }
  std::size_t size() const { return patterns_.size(); }
  bool empty() const { return patterns_.empty(); }
  bool contains(const Pattern& p) const;
  auto begin() const { return patterns_.begin(); }
  auto end() const { return patterns_.end(); }

  std::size_t max_length() const;
  int max_entry() const;

  /// "[0],[1,2]"; the empty set renders as "".
  std::string to_string() const;

  auto operator<=>(const PatternSet&) const = default;
  bool operator==(const PatternSet&) const = default;

 private:
  std::vector<Pattern> patterns_;
};

/// Parses the comma-separated bracket grammar, e.g. "[0], [1,2]".
/// Whitespace is ignored and an empty (or all-whitespace) string is the empty
/// set. Throws InvalidPattern on malformed text or on empty brackets.
PatternSet parse_pattern_set(std::string_view text);

/// Rejects sets containing the empty pattern.
void validate_user_set(const PatternSet& set);

/// Drops every pattern that has another member of the set as a consecutive
/// factor. The avoiding partitions are unchanged, and in the reduced set no
/// occurrence of one member can sit inside an occurrence of another.
PatternSet reduce_factors(const PatternSet& set);

class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  explicit Partition(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  std::int64_t sum() const { return sum_; }
  int operator[](std::size_t i) const { return parts_[i]; }

  std::string to_string() const;

  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
  std::int64_t sum_ = 0;
};

/// One way the tail of a first partition can coincide with the head of a
/// second one. `exponent` is the sum of the first partition's parts that are
/// not shared; `overlap_len` is the number of shared parts.
struct OverlapEntry {
  std::int64_t exponent = 0;
  int overlap_len = 0;

  auto operator<=>(const OverlapEntry&) const = default;
};

/// Overlaps are limited to min(|u1|, |u2|) - kOverlapMargin shared parts, so a
/// second mark starts strictly after the first one and ends strictly after it.
inline constexpr std::size_t kOverlapMargin = 1;

std::vector<int> differences(const Partition& p);

/// Throws InvalidPattern for the empty pattern.
bool contains(const Partition& p, const Pattern& a);

bool avoids_set(const Partition& p, const PatternSet& set);

/// The partition (k, k - v_1, k - v_1 - v_2, ..., k - sum(v)).
/// Throws InvalidInstantiation when k < sum(v) + 1.
Partition instantiate(const Pattern& v, std::int64_t k);

/// Entries ordered by increasing overlap length.
std::vector<OverlapEntry> overlap(const Partition& u1, const Partition& u2);

/// overlap(instantiate(v, k1), instantiate(u, k2)).
std::vector<OverlapEntry> overlap1(const Pattern& v, const Pattern& u, std::int64_t k1,
                                   std::int64_t k2);

}  // namespace rpart
