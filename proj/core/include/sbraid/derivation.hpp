#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sbraid/presentation.hpp"

namespace sbraid {

enum class StepKind {
  ApplyRelation,    // replace one side of a relation instance by the other
  FreeReduce,       // freely reduce a window (or the whole word)
  FreeExpand,       // insert x x^-1
  SubstituteNamed,  // expand a named abbreviation at one letter
};

enum class Direction { Forward, Backward };  // lhs -> rhs, rhs -> lhs

std::string to_string(StepKind kind);
StepKind parse_step_kind(std::string_view name);
std::string to_string(Direction d);
Direction parse_direction(std::string_view name);

struct RewriteStep {
  StepKind kind = StepKind::FreeReduce;
  std::size_t position = 0;

  // ApplyRelation.  With `inverted` the step uses lhs^-1 = rhs^-1, which is
  // how conjugates of inverse letters are rewritten.
  Family family = Family::TR;
  IndexAssignment indices;
  Direction direction = Direction::Forward;
  bool inverted = false;

  // FreeReduce: window length; the whole word when absent (position ignored).
  std::optional<std::size_t> length;

  // FreeExpand: letter x such that x x^-1 is inserted at position.
  Letter letter;

  // SubstituteNamed: abbreviation name.  Only "section" is defined: it
  // replaces the c/d letter at position by its image under the section.
  std::string name;

  static RewriteStep apply(Family family, IndexAssignment indices, Direction direction, std::size_t position,
                           bool inverted = false);
  static RewriteStep reduce();
  static RewriteStep reduce(std::size_t position, std::size_t length);
  static RewriteStep expand(std::size_t position, Letter letter);
  static RewriteStep substitute(std::size_t position, std::string name);
};

struct Ambient {
  Preset preset = Preset::PureClosedAbt;
  int n = 2;
  int g = 1;
};

struct DerivationScript {
  std::string name;
  Ambient ambient;
  RawWord start;
  RawWord target;
  std::vector<RewriteStep> steps;
};

struct DerivationReport {
  std::string name;
  bool pass = false;
  std::size_t steps_checked = 0;
  std::optional<std::size_t> failing_step;  // == steps.size() for the final comparison
  std::string failure;
  std::vector<RawWord> intermediates;  // start, then the word after every successful step
};

// Throws MatchError (expected vs found) or SideConditionError.
RawWord apply_step(std::span<const Letter> w, const RewriteStep& step, const Ambient& ambient);

DerivationReport check_derivation(const DerivationScript& script);

// Bounded breadth-first search over relation applications, each followed by
// a full free reduction.  `max_states` caps the frontier bookkeeping.
std::optional<DerivationScript> search_derivation(const Word& lhs, const Word& rhs, const Ambient& ambient,
                                                  int depth_bound, std::size_t max_states = 200000);

// Records steps while applying them, so that authored scripts replay by
// construction.  Used by the built-in suites and handy for experiments.
class ScriptBuilder {
 public:
  ScriptBuilder(std::string name, Ambient ambient, RawWord start);

  const RawWord& word() const { return word_; }
  const Ambient& ambient() const { return script_.ambient; }

  void step(const RewriteStep& s);
  void apply(Family family, IndexAssignment indices, Direction direction, std::size_t position,
             bool inverted = false);
  void reduce();
  void reduce(std::size_t position, std::size_t length);
  void expand(std::size_t position, Letter letter);
  // Inserts u u^-1 at position, one letter pair at a time.
  void expand_word(std::size_t position, std::span<const Letter> u);
  void substitute(std::size_t position, std::string name);

  // Rewrites x W x^-1 (x a positive letter at position, |W| = length) into
  // the product of the images of x w x^-1 over the letters w of W, using the
  // unique conjugation relation for each letter.
  void conjugate_all(std::size_t position, std::size_t length);

  // Adjacent positive letters u v at position become v u: uses either a
  // relation ^{u}v = v (forward) or ^{v}u = u (backward).
  void swap(std::size_t position);

  // First position of `pattern` at or after `from`, or throws MatchError.
  std::size_t find(std::span<const Letter> pattern, std::size_t from = 0) const;

  DerivationScript finish(RawWord target) &&;

 private:
  DerivationScript script_;
  RawWord word_;
};

}  // namespace sbraid
