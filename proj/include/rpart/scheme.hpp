#pragma once

// Automatic construction of the recurrence scheme used by the positive
// engine.
//
// A partition is counted together with a set of "local" patterns that it
// must not start with, on top of the global set A that it must avoid
// everywhere. Removing the largest part m, when the next part is m' and
// d = m - m', turns the local set into the tails of every pattern in
// A ∪ local whose head is d. Closing this map over all reachable local sets
// yields a finite machine: its states are the auxiliary counting functions
// and its edges the terms of their recurrences.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rpart/core.hpp"

namespace rpart {

/// Transition target standing for "must avoid the empty pattern at the
/// start", which no partition can do.
inline constexpr int kDeadState = -1;

struct SchemeState {
  int id = 0;
  PatternSet local;
};

struct SchemeEdge {
  int from = 0;
  int diff = 0;
  int to = 0;  ///< live state id or kDeadState
};

/// The local set reached from `local` through first difference `d`, or
/// nullopt for the dead condition. The result is prefix-reduced: if both b
/// and an extension of b are present, the extension is dropped.
std::optional<PatternSet> child(const PatternSet& avoid, const PatternSet& local, int d);

class Scheme {
 public:
  Scheme() = default;

  const PatternSet& pattern_set() const { return avoid_; }
  std::span<const SchemeState> states() const { return states_; }
  std::size_t num_states() const { return states_.size(); }

  /// Special edges leaving `state`, ordered by difference.
  std::span<const SchemeEdge> edges(int state) const;
  /// All special edges, grouped by source state.
  std::vector<SchemeEdge> all_edges() const;

  /// Target for difference d; differences without a special edge return to
  /// state 0.
  int transition(int state, int d) const;

  friend Scheme build_scheme(const PatternSet& avoid);

 private:
  PatternSet avoid_;
  std::vector<SchemeState> states_;
  std::vector<std::vector<SchemeEdge>> edges_;
};

/// Breadth-first closure from the empty local set; states are numbered in
/// discovery order with differences explored in increasing order.
Scheme build_scheme(const PatternSet& avoid);

enum class SchemeFormat { kText, kJson, kDot };

/// Throws Error for an unknown name.
SchemeFormat parse_scheme_format(std::string_view name);

std::string export_scheme(const Scheme& scheme, SchemeFormat format);

}  // namespace rpart
