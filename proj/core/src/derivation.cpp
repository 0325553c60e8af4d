#include "sbraid/derivation.hpp"

#include <deque>
#include <set>
#include <unordered_map>

#include "sbraid/error.hpp"
#include "sbraid/relation_index.hpp"
#include "sbraid/split.hpp"

namespace sbraid {

std::string to_string(StepKind kind) {
  switch (kind) {
    case StepKind::ApplyRelation: return "apply-relation";
    case StepKind::FreeReduce: return "free-reduce";
    case StepKind::FreeExpand: return "free-expand";
    case StepKind::SubstituteNamed: return "substitute-named";
  }
  return "?";
}

StepKind parse_step_kind(std::string_view name) {
  for (StepKind k : {StepKind::ApplyRelation, StepKind::FreeReduce, StepKind::FreeExpand, StepKind::SubstituteNamed}) {
    if (to_string(k) == name) return k;
  }
  throw ParseError("unknown step kind '" + std::string(name) + "'");
}

std::string to_string(Direction d) { return d == Direction::Forward ? "forward" : "backward"; }

Direction parse_direction(std::string_view name) {
  if (name == "forward" || name == "lhs->rhs") return Direction::Forward;
  if (name == "backward" || name == "rhs->lhs") return Direction::Backward;
  throw ParseError("unknown direction '" + std::string(name) + "'");
}

RewriteStep RewriteStep::apply(Family family, IndexAssignment indices, Direction direction, std::size_t position,
                               bool inverted) {
  RewriteStep s;
  s.kind = StepKind::ApplyRelation;
  s.family = family;
  s.indices = std::move(indices);
  s.direction = direction;
  s.position = position;
  s.inverted = inverted;
  return s;
}

RewriteStep RewriteStep::reduce() {
  RewriteStep s;
  s.kind = StepKind::FreeReduce;
  return s;
}

RewriteStep RewriteStep::reduce(std::size_t position, std::size_t length) {
  RewriteStep s;
  s.kind = StepKind::FreeReduce;
  s.position = position;
  s.length = length;
  return s;
}

RewriteStep RewriteStep::expand(std::size_t position, Letter letter) {
  RewriteStep s;
  s.kind = StepKind::FreeExpand;
  s.position = position;
  s.letter = letter;
  return s;
}

RewriteStep RewriteStep::substitute(std::size_t position, std::string name) {
  RewriteStep s;
  s.kind = StepKind::SubstituteNamed;
  s.position = position;
  s.name = std::move(name);
  return s;
}

namespace {

bool is_pure_closed(Preset p) { return p == Preset::PureClosedA || p == Preset::PureClosedAbt; }

bool in_alphabet(const GeneratorId& gen, const Ambient& amb) {
  switch (amb.preset) {
    case Preset::PureClosedA: return is_point_generator(gen, amb.n, amb.g);
    case Preset::PureClosedAbt: return is_strand_generator(gen, amb.n, amb.g);
    default: {
      auto p = build_presentation(amb.preset, amb.n, amb.g);
      return p.contains(gen);
    }
  }
}

std::string window(std::span<const Letter> w, std::size_t pos, std::size_t len) {
  if (pos >= w.size()) return "<end of word>";
  return to_string(w.subspan(pos, std::min(len, w.size() - pos)));
}

RawWord splice(std::span<const Letter> w, std::size_t pos, std::size_t len, std::span<const Letter> repl) {
  RawWord out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
  out.insert(out.end(), repl.begin(), repl.end());
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + len), w.end());
  return out;
}

}  // namespace

RawWord apply_step(std::span<const Letter> w, const RewriteStep& step, const Ambient& ambient) {
  switch (step.kind) {
    case StepKind::ApplyRelation: {
      if (!is_pure_closed(ambient.preset)) {
        throw ParameterError("relation steps need a pure-closed ambient presentation");
      }
      bool point = ambient.preset == Preset::PureClosedA;
      if (is_point_family(step.family) != point) {
        throw ParameterError(to_string(step.family) + " does not belong to the " + to_string(ambient.preset) +
                             " presentation");
      }
      RelationInstance inst = instantiate(step.family, step.indices, ambient.n, ambient.g);
      Word from = step.direction == Direction::Forward ? inst.lhs : inst.rhs;
      Word to = step.direction == Direction::Forward ? inst.rhs : inst.lhs;
      if (step.inverted) {
        from = from.inverse();
        to = to.inverse();
      }
      const RawWord& pattern = from.letters();
      bool ok = step.position + pattern.size() <= w.size() &&
                std::equal(pattern.begin(), pattern.end(), w.begin() + static_cast<std::ptrdiff_t>(step.position));
      if (!ok) {
        throw MatchError(inst.label() + " " + to_string(step.direction) + (step.inverted ? " inverted" : "") +
                         " at " + std::to_string(step.position) + ": expected '" + to_string(from) + "', found '" +
                         window(w, step.position, pattern.size()) + "'");
      }
      return splice(w, step.position, pattern.size(), to.letters());
    }
    case StepKind::FreeReduce: {
      if (!step.length) return free_reduce(w);
      if (step.position + *step.length > w.size()) {
        throw MatchError("free-reduce window [" + std::to_string(step.position) + ", " +
                         std::to_string(step.position + *step.length) + ") exceeds word length " +
                         std::to_string(w.size()));
      }
      RawWord inner = free_reduce(w.subspan(step.position, *step.length));
      return splice(w, step.position, *step.length, inner);
    }
    case StepKind::FreeExpand: {
      if (step.position > w.size()) {
        throw MatchError("free-expand position " + std::to_string(step.position) + " exceeds word length " +
                         std::to_string(w.size()));
      }
      if (!in_alphabet(step.letter.gen, ambient)) {
        throw AlphabetError("free-expand letter " + to_string(step.letter.gen) + " is not in the alphabet");
      }
      Letter pair[2] = {step.letter, step.letter.inverse()};
      return splice(w, step.position, 0, pair);
    }
    case StepKind::SubstituteNamed: {
      if (step.name != "section") throw ParameterError("unknown abbreviation '" + step.name + "'");
      if (ambient.preset != Preset::PureClosedAbt) {
        throw ParameterError("the section abbreviation needs the pure-closed-abt ambient");
      }
      if (step.position >= w.size()) {
        throw MatchError("substitute position " + std::to_string(step.position) + " exceeds word length " +
                         std::to_string(w.size()));
      }
      const Letter& l = w[step.position];
      if (l.gen.kind != Kind::c && l.gen.kind != Kind::d) {
        throw MatchError("section substitution expects a c/d letter at " + std::to_string(step.position) +
                         ", found '" + to_string(l) + "'");
      }
      Word img = section_image(l.gen, ambient.n, ambient.g);
      if (l.exp < 0) img = img.inverse();
      return splice(w, step.position, 1, img.letters());
    }
  }
  throw ParameterError("unknown step kind");
}

DerivationReport check_derivation(const DerivationScript& script) {
  DerivationReport report;
  report.name = script.name;
  const Ambient& amb = script.ambient;
  if (is_pure_closed(amb.preset) && (amb.n < 2 || amb.g < 1)) {
    report.failure = "ambient " + to_string(amb.preset) + " requires n >= 2 and g >= 1";
    return report;
  }
  RawWord w = script.start;
  report.intermediates.push_back(w);
  for (std::size_t i = 0; i < script.steps.size(); ++i) {
    try {
      w = apply_step(w, script.steps[i], amb);
    } catch (const Error& e) {
      report.failing_step = i;
      report.failure = "step " + std::to_string(i) + " (" + to_string(script.steps[i].kind) + "): " + e.what();
      return report;
    }
    report.intermediates.push_back(w);
    ++report.steps_checked;
  }
  if (w != script.target) {
    report.failing_step = script.steps.size();
    report.failure = "final word '" + to_string(std::span<const Letter>(w)) + "' differs from target '" +
                     to_string(std::span<const Letter>(script.target)) + "'";
    return report;
  }
  report.pass = true;
  return report;
}

namespace {

struct WordHash {
  std::size_t operator()(const RawWord& w) const {
    std::size_t h = 1469598103934665603ull;
    for (const Letter& l : w) {
      std::size_t v = (static_cast<std::size_t>(l.gen.kind) << 40) ^ (static_cast<std::size_t>(l.gen.first) << 24) ^
                      (static_cast<std::size_t>(l.gen.second) << 8) ^ static_cast<std::size_t>(l.exp + 1);
      h = (h ^ v) * 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

std::optional<DerivationScript> search_derivation(const Word& lhs, const Word& rhs, const Ambient& ambient,
                                                  int depth_bound, std::size_t max_states) {
  if (depth_bound < 1) throw ParameterError("search depth bound must be at least 1");
  DerivationScript script;
  script.name = "search";
  script.ambient = ambient;
  script.start = lhs.letters();
  script.target = rhs.letters();
  if (lhs == rhs) return script;
  if (!is_pure_closed(ambient.preset)) return std::nullopt;

  const auto& instances = RelationIndex::get(ambient.preset, ambient.n, ambient.g).instances();
  struct Node {
    RawWord word;
    std::size_t parent;
    RewriteStep step;
    int depth;
  };
  std::vector<Node> nodes;
  std::unordered_map<RawWord, std::size_t, WordHash> seen;
  nodes.push_back({lhs.letters(), 0, {}, 0});
  seen.emplace(lhs.letters(), 0);
  std::deque<std::size_t> frontier{0};

  auto build = [&](std::size_t leaf) {
    std::vector<RewriteStep> rev;
    for (std::size_t at = leaf; at != 0; at = nodes[at].parent) rev.push_back(nodes[at].step);
    for (auto it = rev.rbegin(); it != rev.rend(); ++it) {
      script.steps.push_back(*it);
      script.steps.push_back(RewriteStep::reduce());
    }
    return script;
  };

  while (!frontier.empty()) {
    std::size_t at = frontier.front();
    frontier.pop_front();
    if (nodes[at].depth >= depth_bound) continue;
    for (const RelationInstance& inst : instances) {
      for (Direction dir : {Direction::Forward, Direction::Backward}) {
        for (bool inverted : {false, true}) {
          Word from = dir == Direction::Forward ? inst.lhs : inst.rhs;
          Word to = dir == Direction::Forward ? inst.rhs : inst.lhs;
          if (inverted) {
            from = from.inverse();
            to = to.inverse();
          }
          const RawWord& pat = from.letters();
          const RawWord cur = nodes[at].word;
          if (pat.size() > cur.size()) continue;
          for (std::size_t pos = 0; pos + pat.size() <= cur.size(); ++pos) {
            if (!std::equal(pat.begin(), pat.end(), cur.begin() + static_cast<std::ptrdiff_t>(pos))) continue;
            RawWord next = free_reduce(splice(cur, pos, pat.size(), to.letters()));
            if (seen.count(next)) continue;
            RewriteStep step = RewriteStep::apply(inst.family, inst.indices, dir, pos, inverted);
            nodes.push_back({next, at, step, nodes[at].depth + 1});
            std::size_t id = nodes.size() - 1;
            if (next == rhs.letters()) return build(id);
            seen.emplace(std::move(next), id);
            frontier.push_back(id);
            if (nodes.size() >= max_states) return std::nullopt;
          }
        }
      }
    }
  }
  return std::nullopt;
}

ScriptBuilder::ScriptBuilder(std::string name, Ambient ambient, RawWord start) : word_(start) {
  script_.name = std::move(name);
  script_.ambient = ambient;
  script_.start = std::move(start);
}

void ScriptBuilder::step(const RewriteStep& s) {
  word_ = apply_step(word_, s, script_.ambient);
  script_.steps.push_back(s);
}

void ScriptBuilder::apply(Family family, IndexAssignment indices, Direction direction, std::size_t position,
                          bool inverted) {
  step(RewriteStep::apply(family, std::move(indices), direction, position, inverted));
}

void ScriptBuilder::reduce() { step(RewriteStep::reduce()); }

void ScriptBuilder::reduce(std::size_t position, std::size_t length) { step(RewriteStep::reduce(position, length)); }

void ScriptBuilder::expand(std::size_t position, Letter letter) { step(RewriteStep::expand(position, letter)); }

void ScriptBuilder::expand_word(std::size_t position, std::span<const Letter> u) {
  for (std::size_t i = 0; i < u.size(); ++i) expand(position + i, u[i]);
}

void ScriptBuilder::substitute(std::size_t position, std::string name) {
  step(RewriteStep::substitute(position, std::move(name)));
}

void ScriptBuilder::conjugate_all(std::size_t position, std::size_t length) {
  if (position + length + 2 > word_.size()) throw MatchError("conjugate_all window exceeds the word");
  const Letter x = word_[position];
  if (x.exp != 1 || word_[position + length + 1] != x.inverse()) {
    throw MatchError("conjugate_all expects x W x^-1 at " + std::to_string(position) + ", found '" +
                     window(word_, position, length + 2) + "'");
  }
  for (std::size_t i = 1; i < length; ++i) expand(position + 3 * i - 1, x.inverse());
  const auto& index = RelationIndex::get(script_.ambient.preset, script_.ambient.n, script_.ambient.g);
  for (std::size_t i = length; i >= 1; --i) {
    std::size_t at = position + 3 * (i - 1);
    const Letter h = word_[at + 1];
    const RelationInstance* rule = index.conjugation_rule(x.gen, h.gen);
    if (!rule) {
      throw MatchError("no unique conjugation relation for ^{" + to_string(x.gen) + "}" + to_string(h.gen));
    }
    apply(rule->family, rule->indices, Direction::Forward, at, h.exp < 0);
  }
}

void ScriptBuilder::swap(std::size_t position) {
  if (position + 2 > word_.size()) throw MatchError("swap position exceeds the word");
  const Letter u = word_[position];
  const Letter v = word_[position + 1];
  if (u.exp != 1 || v.exp != 1) throw MatchError("swap expects two positive letters");
  const auto& index = RelationIndex::get(script_.ambient.preset, script_.ambient.n, script_.ambient.g);
  if (const RelationInstance* r = index.conjugation_rule(u.gen, v.gen); r && r->rhs == Word(v.gen)) {
    expand(position + 2, u.inverse());
    apply(r->family, r->indices, Direction::Forward, position);
    return;
  }
  if (const RelationInstance* r = index.conjugation_rule(v.gen, u.gen); r && r->rhs == Word(u.gen)) {
    apply(r->family, r->indices, Direction::Backward, position);
    reduce(position + 2, 2);
    return;
  }
  throw MatchError("no commutation relation between " + to_string(u.gen) + " and " + to_string(v.gen));
}

std::size_t ScriptBuilder::find(std::span<const Letter> pattern, std::size_t from) const {
  for (std::size_t pos = from; pos + pattern.size() <= word_.size(); ++pos) {
    if (std::equal(pattern.begin(), pattern.end(), word_.begin() + static_cast<std::ptrdiff_t>(pos))) return pos;
  }
  throw MatchError("pattern '" + to_string(pattern) + "' not found");
}

DerivationScript ScriptBuilder::finish(RawWord target) && {
  script_.target = std::move(target);
  return std::move(script_);
}

}  // namespace sbraid
