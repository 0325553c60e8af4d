#include "sbraid/relation_index.hpp"

#include <memory>
#include <mutex>
#include <tuple>

namespace sbraid {

RelationIndex::RelationIndex(Presentation presentation) : presentation_(std::move(presentation)) {
  for (std::size_t i = 0; i < presentation_.instances.size(); ++i) {
    by_lhs_[presentation_.instances[i].lhs].push_back(i);
  }
}

const RelationIndex& RelationIndex::get(Preset preset, int n, int g) {
  static std::mutex mu;
  static std::map<std::tuple<Preset, int, int>, std::unique_ptr<RelationIndex>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{preset, n, g}];
  if (!slot) slot = std::make_unique<RelationIndex>(build_presentation(preset, n, g));
  return *slot;
}

std::vector<const RelationInstance*> RelationIndex::with_lhs(const Word& lhs) const {
  std::vector<const RelationInstance*> out;
  auto it = by_lhs_.find(lhs);
  if (it == by_lhs_.end()) return out;
  for (std::size_t i : it->second) out.push_back(&presentation_.instances[i]);
  return out;
}

const RelationInstance* RelationIndex::conjugation_rule(const GeneratorId& conjugator,
                                                        const GeneratorId& target) const {
  auto hits = with_lhs(conj_upper(Word(conjugator), Word(target)));
  return hits.size() == 1 ? hits.front() : nullptr;
}

}  // namespace sbraid
