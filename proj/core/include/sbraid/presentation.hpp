#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sbraid/word.hpp"

namespace sbraid {

enum class Preset {
  PureClosedA,    // point-indexed presentation on A[i,j]
  PureClosedAbt,  // strand presentation on a[j,k], b[j,k], t[p,q]
  SurfaceGroup,   // <c_1, d_1, ..., c_g, d_g | prod [c_i^-1, d_i]>
  ArtinBraid,
  ArtinPureBraid,
  Free,           // free group on x[1..n]
};

std::string to_string(Preset preset);
Preset parse_preset(std::string_view name);

// Relation families.  The first seven belong to the point-indexed
// presentation, the rest to the strand presentation.
enum class Family {
  PR1, PR2, PR3, PR4, ER1A, ER2A, TRA,
  Ia, Ib, Itau1, Itau2,
  IIa, IIb, IItau,
  IIIa1, IIIa2, IIIb1, IIIb2, IIItau,
  IVa, IVb, IVtau,
  Va, Vb, Vtau,
  ER1, ER2, TR,
};

std::string to_string(Family family);
Family parse_family(std::string_view name);
const std::vector<Family>& point_families();
const std::vector<Family>& strand_families();
bool is_point_family(Family family);

// Free index names of a family, in enumeration order.  The choice index "c"
// selects the target kind of the I-a/I-b/I-tau1/III-a1/III-b1 families and
// takes the values 1 (a) and 2 (b).
const std::vector<std::string>& family_indices(Family family);

// Human-readable statement of the index ranges the enumeration uses.
std::string family_condition(Family family);

using IndexAssignment = std::map<std::string, int>;

// Whether ER2A admits r = 2g.  Literal keeps the displayed "r < 2g";
// Boundary allows r <= 2g.  Only the point-indexed families look at this.
enum class PointReading { Literal, Boundary };

struct RelationInstance {
  Family family;
  IndexAssignment indices;
  Word lhs;
  Word rhs;

  Word relator() const { return lhs * rhs.inverse(); }
  std::string label() const;  // e.g. "ER2(j=1,k=1,l=2)"
};

struct Presentation {
  Preset preset = Preset::Free;
  int n = 0;
  int g = 0;
  std::vector<GeneratorId> generators;
  std::vector<Word> relators;
  // For the two surface-braid presets: the relation instance behind each
  // relator, in the same order.  Empty for the other presets.
  std::vector<RelationInstance> instances;

  bool contains(const GeneratorId& gen) const;
};

// Throws ParameterError when (n, g) is outside the preset's range:
// pure-closed presets need n >= 2, g >= 1; surface-group g >= 1 (n ignored);
// artin presets n >= 1; free n >= 0.
Presentation build_presentation(Preset preset, int n, int g, PointReading reading = PointReading::Literal);

std::vector<GeneratorId> point_generators(int n, int g);
std::vector<GeneratorId> strand_generators(int n, int g);
bool is_point_generator(const GeneratorId& gen, int n, int g);
bool is_strand_generator(const GeneratorId& gen, int n, int g);

// A[2r-1,2g+j] = a[j,r], A[2r,2g+j] = b[j,r], A[2g+i,2g+j] = t[i,j].
GeneratorId point_to_strand(const GeneratorId& gen, int n, int g);
GeneratorId strand_to_point(const GeneratorId& gen, int n, int g);
Word translate_to_strand(const Word& w, int n, int g);
Word translate_to_point(const Word& w, int n, int g);

// Builds lhs and rhs exactly as displayed for the family.  Throws
// SideConditionError naming the violated condition, or ParameterError for
// missing/unknown index names.
RelationInstance instantiate(Family family, const IndexAssignment& indices, int n, int g,
                             PointReading reading = PointReading::Literal);

// Exhaustive, duplicate-free, lexicographically ordered list of valid
// assignments.
std::vector<RelationInstance> enumerate_instances(Family family, int n, int g,
                                                  PointReading reading = PointReading::Literal);

}  // namespace sbraid
