#include "rpart/scheme.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include <json.hpp>

namespace rpart {

std::optional<PatternSet> child(const PatternSet& avoid, const PatternSet& local, int d) {
  std::vector<Pattern> tails;
  for (const PatternSet* source : {&avoid, &local}) {
    for (const auto& a : *source) {
      if (a.empty() || a.head() != d) continue;
      Pattern t = a.tail();
      if (t.empty()) return std::nullopt;
      tails.push_back(std::move(t));
    }
  }
  PatternSet raw(std::move(tails));
  std::vector<Pattern> reduced;
  for (const auto& b : raw) {
    const bool subsumed = std::any_of(raw.begin(), raw.end(), [&](const Pattern& shorter) {
      return shorter.length() < b.length() && shorter.is_prefix_of(b);
    });
    if (!subsumed) reduced.push_back(b);
  }
  return PatternSet(std::move(reduced));
}

std::span<const SchemeEdge> Scheme::edges(int state) const {
  return edges_.at(static_cast<std::size_t>(state));
}

std::vector<SchemeEdge> Scheme::all_edges() const {
  std::vector<SchemeEdge> out;
  for (const auto& group : edges_) out.insert(out.end(), group.begin(), group.end());
  return out;
}

int Scheme::transition(int state, int d) const {
  for (const auto& e : edges(state))
    if (e.diff == d) return e.to;
  return 0;
}

Scheme build_scheme(const PatternSet& avoid) {
  Scheme scheme;
  scheme.avoid_ = avoid;
  std::map<PatternSet, int> index;
  auto intern = [&](PatternSet local) {
    auto [it, inserted] = index.try_emplace(local, static_cast<int>(scheme.states_.size()));
    if (inserted) {
      scheme.states_.push_back({it->second, std::move(local)});
      scheme.edges_.emplace_back();
    }
    return it->second;
  };

  intern(PatternSet{});
  for (std::size_t next = 0; next < scheme.states_.size(); ++next) {
    const PatternSet local = scheme.states_[next].local;
    std::set<int> special;
    for (const PatternSet* source : {&avoid, &local})
      for (const auto& a : *source)
        if (!a.empty()) special.insert(a.head());

    std::vector<SchemeEdge> out;
    for (int d : special) {
      auto target = child(avoid, local, d);
      const int to = target ? intern(std::move(*target)) : kDeadState;
      out.push_back({static_cast<int>(next), d, to});
    }
    scheme.edges_[next] = std::move(out);
  }
  return scheme;
}

SchemeFormat parse_scheme_format(std::string_view name) {
  if (name == "text") return SchemeFormat::kText;
  if (name == "json") return SchemeFormat::kJson;
  if (name == "dot") return SchemeFormat::kDot;
  throw Error("unknown scheme format \"" + std::string(name) + "\"");
}

namespace {

std::string state_name(int id) { return id == kDeadState ? "DEAD" : "S" + std::to_string(id); }

std::string local_text(const PatternSet& local) { return "{" + local.to_string() + "}"; }

nlohmann::json patterns_json(const PatternSet& set) {
  auto arr = nlohmann::json::array();
  for (const auto& p : set) arr.push_back(std::vector<int>(p.diffs().begin(), p.diffs().end()));
  return arr;
}

std::string export_text(const Scheme& scheme) {
  std::string out = "avoid: {" + scheme.pattern_set().to_string() + "}\n";
  out += "states: " + std::to_string(scheme.num_states()) + "\n";
  for (const auto& s : scheme.states()) out += "  " + state_name(s.id) + " " + local_text(s.local) + "\n";
  const auto edges = scheme.all_edges();
  out += "edges: " + std::to_string(edges.size()) + "\n";
  for (const auto& e : edges) {
    out += "  " + state_name(e.from) + " d=" + std::to_string(e.diff) + " -> " + state_name(e.to) +
           "\n";
  }
  out += "default: any other d -> S0\n";
  return out;
}

std::string export_json(const Scheme& scheme) {
  nlohmann::json doc;
  doc["avoid"] = patterns_json(scheme.pattern_set());
  auto states = nlohmann::json::array();
  for (const auto& s : scheme.states())
    states.push_back({{"id", s.id}, {"local", patterns_json(s.local)}});
  doc["states"] = std::move(states);
  auto edges = nlohmann::json::array();
  for (const auto& e : scheme.all_edges()) {
    nlohmann::json to = e.to == kDeadState ? nlohmann::json("DEAD") : nlohmann::json(e.to);
    edges.push_back({{"from", e.from}, {"d", e.diff}, {"to", std::move(to)}});
  }
  doc["edges"] = std::move(edges);
  return doc.dump(2) + "\n";
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string export_dot(const Scheme& scheme) {
  std::string out = "digraph scheme {\n  rankdir=LR;\n";
  out += "  label=\"avoid {" + dot_escape(scheme.pattern_set().to_string()) + "}\";\n";
  for (const auto& s : scheme.states()) {
    out += "  " + state_name(s.id) + " [label=\"" + state_name(s.id) + "\\n" +
           dot_escape(local_text(s.local)) + "\"];\n";
  }
  const auto edges = scheme.all_edges();
  if (std::any_of(edges.begin(), edges.end(), [](const SchemeEdge& e) { return e.to == kDeadState; }))
    out += "  DEAD [shape=box];\n";
  for (const auto& e : edges) {
    out += "  " + state_name(e.from) + " -> " + state_name(e.to) + " [label=\"d=" +
           std::to_string(e.diff) + "\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace

std::string export_scheme(const Scheme& scheme, SchemeFormat format) {
  switch (format) {
    case SchemeFormat::kText:
      return export_text(scheme);
    case SchemeFormat::kJson:
      return export_json(scheme);
    case SchemeFormat::kDot:
      return export_dot(scheme);
  }
  throw Error("unknown scheme format");
}

}  // namespace rpart
