#include "rpart/oeis.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rpart/oracle.hpp"
#include "rpart/positive.hpp"

namespace rpart {

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::kGeneratedByOracle:
      return "generated-by-oracle";
    case Provenance::kFetchedBfile:
      return "fetched-b-file";
  }
  return "unknown";
}

const BigInt* SequenceFixture::term(std::int64_t n) const {
  const std::int64_t i = n - offset;
  if (i < 0 || i >= static_cast<std::int64_t>(terms.size())) return nullptr;
  return &terms[static_cast<std::size_t>(i)];
}

PatternOeisMap::PatternOeisMap(std::vector<OeisEntry> entries) : entries_(std::move(entries)) {
  for (auto& e : entries_)
    if (e.id) e.id = normalize_oeis_id(*e.id);
}

const OeisEntry* PatternOeisMap::lookup(const PatternSet& avoid) const {
  for (const auto& e : entries_)
    if (e.avoid == avoid) return &e;
  return nullptr;
}

const OeisEntry* PatternOeisMap::lookup_id(std::string_view id) const {
  const std::string wanted = normalize_oeis_id(id);
  for (const auto& e : entries_)
    if (e.id == wanted) return &e;
  return nullptr;
}

const PatternOeisMap& builtin_map() {
  // Every listed sequence counts partitions of n, so index n lines up with
  // the OEIS index n.
  static const PatternOeisMap map({
      {PatternSet{}, "A000041", 0},
      {PatternSet{Pattern{0}}, "A000009", 0},
      {PatternSet{Pattern{0}, Pattern{1}}, "A003114", 0},
      {PatternSet{Pattern{1}}, "A116931", 0},
      {PatternSet{Pattern{1}, Pattern{0, 0}}, "A070047", 0},
      {PatternSet{Pattern{0, 0}}, "A000726", 0},
      {PatternSet{Pattern{0, 0, 0}}, "A001935", 0},
      {PatternSet{Pattern{0, 0, 0, 0}}, "A035957", 0},
      {PatternSet{Pattern{2}}, std::nullopt, 0},
      {PatternSet{Pattern{2}, Pattern{0, 0}}, std::nullopt, 0},
      {PatternSet{Pattern{0, 1}}, std::nullopt, 0},
      {PatternSet{Pattern{1, 0}}, std::nullopt, 0},
  });
  return map;
}

std::string normalize_oeis_id(std::string_view id) {
  if (id.size() < 2 || (id[0] != 'A' && id[0] != 'a') || id.size() > 8) {
    throw FormatError("bad OEIS id \"" + std::string(id) + "\"");
  }
  const std::string_view digits = id.substr(1);
  if (!std::all_of(digits.begin(), digits.end(),
                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw FormatError("bad OEIS id \"" + std::string(id) + "\"");
  }
  std::string out = "A";
  out.append(6 > digits.size() ? 6 - digits.size() : 0, '0');
  out.append(digits);
  return out;
}

SequenceFixture parse_bfile(std::string_view body, std::string_view id) {
  SequenceFixture fixture;
  fixture.id = normalize_oeis_id(id);
  fixture.provenance = Provenance::kFetchedBfile;
  std::istringstream in{std::string(body)};
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::int64_t> previous;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line.substr(first));
    std::string index_text, value_text, extra;
    fields >> index_text >> value_text;
    auto fail = [&](const std::string& why) {
      throw FormatError("b-file line " + std::to_string(line_no) + ": " + why);
    };
    if (value_text.empty() || (fields >> extra)) fail("expected \"<n> <a(n)>\"");
    std::int64_t n = 0;
    try {
      std::size_t used = 0;
      n = std::stoll(index_text, &used);
      if (used != index_text.size()) fail("bad index");
    } catch (const std::logic_error&) {
      fail("bad index");
    }
    BigInt value;
    if (value.set_str(value_text, 10) != 0) fail("bad value");
    if (previous && n != *previous + 1) fail("indices not consecutive");
    if (!previous) fixture.offset = n;
    previous = n;
    fixture.terms.push_back(std::move(value));
  }
  if (fixture.terms.empty()) throw FormatError("b-file has no terms");
  return fixture;
}

CompareReport compare(std::span<const BigInt> seq, const SequenceFixture& fixture,
                      std::int64_t align) {
  CompareReport report;
  const auto count = static_cast<std::int64_t>(seq.size());
  const std::int64_t lo = std::max<std::int64_t>(0, fixture.offset - align);
  const std::int64_t hi =
      std::min(count, fixture.offset + static_cast<std::int64_t>(fixture.terms.size()) - align);
  if (hi <= lo) return report;
  report.first_n = lo;
  report.overlap = static_cast<std::size_t>(hi - lo);
  for (std::int64_t n = lo; n < hi; ++n) {
    const BigInt& computed = seq[static_cast<std::size_t>(n)];
    const BigInt& expected = *fixture.term(n + align);
    if (computed != expected) {
      report.mismatch = Mismatch{n, computed, expected};
      return report;
    }
    ++report.matched;
  }
  return report;
}

namespace {

nlohmann::json patterns_json(const PatternSet& set) {
  auto arr = nlohmann::json::array();
  for (const auto& p : set) arr.push_back(std::vector<int>(p.diffs().begin(), p.diffs().end()));
  return arr;
}

}  // namespace

std::string fixture_to_json(const SequenceFixture& fixture) {
  nlohmann::ordered_json doc;
  doc["id"] = fixture.id;
  doc["offset"] = fixture.offset;
  doc["avoid"] = fixture.avoid ? nlohmann::ordered_json(patterns_json(*fixture.avoid))
                               : nlohmann::ordered_json(nullptr);
  doc["provenance"] = std::string(to_string(fixture.provenance));
  auto terms = nlohmann::ordered_json::array();
  for (const auto& t : fixture.terms) terms.push_back(t.get_str());
  doc["terms"] = std::move(terms);
  return doc.dump(1) + "\n";
}

SequenceFixture fixture_from_json(std::string_view text) {
  SequenceFixture fixture;
  try {
    const auto doc = nlohmann::json::parse(text);
    fixture.id = normalize_oeis_id(doc.at("id").get<std::string>());
    fixture.offset = doc.at("offset").get<std::int64_t>();
    if (!doc.at("avoid").is_null()) {
      std::vector<Pattern> patterns;
      for (const auto& p : doc.at("avoid")) patterns.emplace_back(p.get<std::vector<int>>());
      fixture.avoid = PatternSet(std::move(patterns));
    }
    const auto provenance = doc.at("provenance").get<std::string>();
    if (provenance == to_string(Provenance::kGeneratedByOracle)) {
      fixture.provenance = Provenance::kGeneratedByOracle;
    } else if (provenance == to_string(Provenance::kFetchedBfile)) {
      fixture.provenance = Provenance::kFetchedBfile;
    } else {
      throw FormatError("unknown provenance \"" + provenance + "\"");
    }
    for (const auto& t : doc.at("terms")) {
      BigInt value;
      if (value.set_str(t.get<std::string>(), 10) != 0) throw FormatError("bad term");
      fixture.terms.push_back(std::move(value));
    }
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("fixture document: ") + e.what());
  }
  if (fixture.terms.empty()) throw FormatError("fixture has no terms");
  return fixture;
}

void write_fixture(const std::filesystem::path& path, const SequenceFixture& fixture) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << fixture_to_json(fixture);
}

SequenceFixture read_fixture(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return fixture_from_json(buffer.str());
}

std::filesystem::path fixture_path(const std::filesystem::path& dir, std::string_view id) {
  return dir / (normalize_oeis_id(id) + ".json");
}

SequenceFixture generate_fixture(const OeisEntry& entry, std::size_t max_n,
                                 std::size_t brute_limit) {
  if (!entry.id) throw Error("no OEIS id for {" + entry.avoid.to_string() + "}");
  const auto counted = count_sequence(entry.avoid, max_n);
  const auto brute = brute_count(entry.avoid, std::min(max_n, brute_limit), brute_limit);
  for (std::size_t n = 0; n < brute.size(); ++n) {
    if (brute[n] != counted[n]) {
      throw Error("positive engine disagrees with brute force at n=" + std::to_string(n));
    }
  }
  SequenceFixture fixture;
  fixture.id = *entry.id;
  fixture.offset = entry.align;
  fixture.avoid = entry.avoid;
  fixture.provenance = Provenance::kGeneratedByOracle;
  fixture.terms = brute;
  fixture.terms.insert(fixture.terms.end(), counted.begin() + static_cast<std::ptrdiff_t>(brute.size()),
                       counted.end());
  return fixture;
}

}  // namespace rpart
