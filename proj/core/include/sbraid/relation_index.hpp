#pragma once

#include <map>
#include <vector>

#include "sbraid/presentation.hpp"

namespace sbraid {

// Relation instances of a pure-closed presentation keyed by their (reduced)
// left-hand side.
class RelationIndex {
 public:
  explicit RelationIndex(Presentation presentation);

  // Process-wide cache; built on first use for each (preset, n, g).
  static const RelationIndex& get(Preset preset, int n, int g);

  const Presentation& presentation() const { return presentation_; }
  const std::vector<RelationInstance>& instances() const { return presentation_.instances; }

  // Instances whose lhs equals `lhs`, in enumeration order.
  std::vector<const RelationInstance*> with_lhs(const Word& lhs) const;

  // The instance of ^{conjugator}target, if exactly one exists.
  const RelationInstance* conjugation_rule(const GeneratorId& conjugator, const GeneratorId& target) const;

 private:
  Presentation presentation_;
  std::map<Word, std::vector<std::size_t>> by_lhs_;
};

}  // namespace sbraid
