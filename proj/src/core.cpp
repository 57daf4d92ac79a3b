#include "rpart/core.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace rpart {

namespace {

std::string join_ints(std::span<const int> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- Pattern

Pattern::Pattern(std::vector<int> diffs) : diffs_(std::move(diffs)) {
  for (int d : diffs_) {
    if (d < 0) throw InvalidPattern("pattern entries must be non-negative");
    sum_ += d;
  }
}

int Pattern::head() const {
  if (diffs_.empty()) throw InvalidPattern("empty pattern has no head");
  return diffs_.front();
}

Pattern Pattern::tail() const {
  if (diffs_.empty()) throw InvalidPattern("empty pattern has no tail");
  return Pattern(std::vector<int>(diffs_.begin() + 1, diffs_.end()));
}

bool Pattern::is_prefix_of(const Pattern& other) const {
  return diffs_.size() <= other.diffs_.size() &&
         std::equal(diffs_.begin(), diffs_.end(), other.diffs_.begin());
}

bool Pattern::is_factor_of(const Pattern& other) const {
  return diffs_.empty() || std::search(other.diffs_.begin(), other.diffs_.end(), diffs_.begin(),
                                       diffs_.end()) != other.diffs_.end();
}

std::string Pattern::to_string() const { return "[" + join_ints(diffs_) + "]"; }

std::strong_ordering Pattern::operator<=>(const Pattern& other) const {
  if (auto c = diffs_.size() <=> other.diffs_.size(); c != 0) return c;
  return diffs_ <=> other.diffs_;
}

// ------------------------------------------------------------- PatternSet

PatternSet::PatternSet(std::vector<Pattern> patterns) : patterns_(std::move(patterns)) {
  std::sort(patterns_.begin(), patterns_.end());
  patterns_.erase(std::unique(patterns_.begin(), patterns_.end()), patterns_.end());
}

bool PatternSet::contains(const Pattern& p) const {
  return std::binary_search(patterns_.begin(), patterns_.end(), p);
}

std::size_t PatternSet::max_length() const {
  std::size_t best = 0;
  for (const auto& p : patterns_) best = std::max(best, p.length());
  return best;
}

int PatternSet::max_entry() const {
  int best = 0;
  for (const auto& p : patterns_)
    for (int d : p.diffs()) best = std::max(best, d);
  return best;
}

std::string PatternSet::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < patterns_.size(); ++i) {
    if (i) out += ',';
    out += patterns_[i].to_string();
  }
  return out;
}

PatternSet parse_pattern_set(std::string_view text) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;

  std::vector<Pattern> patterns;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw InvalidPattern("bad pattern set \"" + std::string(text) + "\": " + why);
  };
  while (pos < compact.size()) {
    if (compact[pos] != '[') fail("expected '['");
    ++pos;
    std::vector<int> diffs;
    if (pos < compact.size() && compact[pos] == ']') fail("empty brackets");
    while (true) {
      if (pos >= compact.size() || !std::isdigit(static_cast<unsigned char>(compact[pos])))
        fail("expected a non-negative integer");
      long value = 0;
      while (pos < compact.size() && std::isdigit(static_cast<unsigned char>(compact[pos]))) {
        value = value * 10 + (compact[pos] - '0');
        if (value > 1'000'000) fail("entry too large");
        ++pos;
      }
      diffs.push_back(static_cast<int>(value));
      if (pos >= compact.size()) fail("unterminated pattern");
      if (compact[pos] == ']') {
        ++pos;
        break;
      }
      if (compact[pos] != ',') fail("expected ',' or ']'");
      ++pos;
    }
    patterns.emplace_back(std::move(diffs));
    if (pos < compact.size()) {
      if (compact[pos] != ',') fail("expected ',' between patterns");
      ++pos;
      if (pos == compact.size()) fail("trailing ','");
    }
  }
  return PatternSet(std::move(patterns));
}

void validate_user_set(const PatternSet& set) {
  for (const auto& p : set)
    if (p.empty()) throw InvalidPattern("the empty pattern is not a valid user pattern");
}

PatternSet reduce_factors(const PatternSet& set) {
  std::vector<Pattern> kept;
  for (const auto& p : set) {
    bool redundant = std::any_of(set.begin(), set.end(), [&](const Pattern& q) {
      return !(q == p) && q.is_factor_of(p);
    });
    if (!redundant) kept.push_back(p);
  }
  return PatternSet(std::move(kept));
}

// -------------------------------------------------------------- Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw InvalidPartition("parts must be positive");
    if (i && parts_[i] > parts_[i - 1]) throw InvalidPartition("parts must be non-increasing");
    sum_ += parts_[i];
  }
}

std::string Partition::to_string() const { return "(" + join_ints(parts_) + ")"; }

// ------------------------------------------------------------- predicates

std::vector<int> differences(const Partition& p) {
  std::vector<int> out;
  if (p.size() < 2) return out;
  out.reserve(p.size() - 1);
  for (std::size_t i = 0; i + 1 < p.size(); ++i) out.push_back(p[i] - p[i + 1]);
  return out;
}

bool contains(const Partition& p, const Pattern& a) {
  if (a.empty()) throw InvalidPattern("containment is undefined for the empty pattern");
  const auto diffs = differences(p);
  const auto needle = a.diffs();
  return std::search(diffs.begin(), diffs.end(), needle.begin(), needle.end()) != diffs.end();
}

bool avoids_set(const Partition& p, const PatternSet& set) {
  return std::none_of(set.begin(), set.end(), [&](const Pattern& a) { return contains(p, a); });
}

Partition instantiate(const Pattern& v, std::int64_t k) {
  if (k < v.sum() + 1) {
    throw InvalidInstantiation("cannot start " + v.to_string() + " at " + std::to_string(k));
  }
  std::vector<int> parts;
  parts.reserve(v.length() + 1);
  std::int64_t current = k;
  parts.push_back(static_cast<int>(current));
  for (int d : v.diffs()) {
    current -= d;
    parts.push_back(static_cast<int>(current));
  }
  return Partition(std::move(parts));
}

std::vector<OverlapEntry> overlap(const Partition& u1, const Partition& u2) {
  std::vector<OverlapEntry> out;
  const std::size_t n1 = u1.size();
  const std::size_t n2 = u2.size();
  const std::size_t shorter = std::min(n1, n2);
  if (shorter <= kOverlapMargin) return out;
  const auto a = u1.parts();
  const auto b = u2.parts();
  for (std::size_t j = 1; j <= shorter - kOverlapMargin; ++j) {
    if (!std::equal(a.end() - static_cast<std::ptrdiff_t>(j), a.end(), b.begin())) continue;
    const std::int64_t head =
        std::accumulate(a.begin(), a.end() - static_cast<std::ptrdiff_t>(j), std::int64_t{0});
    out.push_back({head, static_cast<int>(j)});
  }
  return out;
}

std::vector<OverlapEntry> overlap1(const Pattern& v, const Pattern& u, std::int64_t k1,
                                   std::int64_t k2) {
  return overlap(instantiate(v, k1), instantiate(u, k2));
}

}  // namespace rpart
