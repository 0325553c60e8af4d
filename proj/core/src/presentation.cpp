#include "sbraid/presentation.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <utility>

#include "sbraid/error.hpp"

namespace sbraid {

namespace {

Word A(int i, int j) { return Word(GeneratorId::A(i, j)); }
Word a(int j, int k) { return Word(GeneratorId::a(j, k)); }
Word b(int j, int k) { return Word(GeneratorId::b(j, k)); }
Word t(int p, int q) { return Word(GeneratorId::tau(p, q)); }
Word inv(const Word& w) { return w.inverse(); }

// c_{l,m} of the displayed relations: a_{l,m} for choice 1, b_{l,m} for 2.
Word choice(int c, int l, int m) { return c == 1 ? a(l, m) : b(l, m); }

enum class Range { Point, Strand, Genus, Choice };

struct Var {
  const char* name;
  Range range;
};

class Ctx {
 public:
  Ctx(const IndexAssignment& idx, int n, int g, PointReading reading)
      : idx_(idx), n(n), g(g), reading(reading) {}
  int operator()(const char* name) const { return idx_.at(name); }
  const IndexAssignment& idx_;
  int n;
  int g;
  PointReading reading;
};

using Check = std::function<std::optional<std::string>(const Ctx&)>;
using Build = std::function<std::pair<Word, Word>(const Ctx&)>;

struct FamilySpec {
  Family family;
  const char* name;
  std::vector<Var> vars;
  const char* condition;
  Check check;
  Build build;
};

std::optional<std::string> need(bool ok, const char* what) {
  if (ok) return std::nullopt;
  return std::string(what);
}

bool odd(int v) { return v % 2 != 0; }
bool even(int v) { return v % 2 == 0; }

// Point-indexed families, side conditions as displayed.  ER2A's "r even,
// r < 2g" leaves out r = 2g, which is ER2 with k = g after translation; the
// class-2 quotient of the literal presentation is then strictly larger than
// the strand one (already at n=2, g=1).  PointReading::Boundary admits
// r = 2g and the two quotients agree on every grid point tested.  PR1 has
// the same kind of bound in its i = r+1 case, but relaxing it changes
// nothing there, so PR1 is literal under both readings.
std::vector<FamilySpec> make_point_specs() {
  std::vector<FamilySpec> v;
  v.push_back({Family::PR1, "PR1",
               {{"i", Range::Point}, {"j", Range::Point}, {"r", Range::Point}, {"s", Range::Point}},
               "(i<j<r<s) or (r+1<i<j<s) or (i=r+1<j<s with r even, r<2g, or r>2g)",
               [](const Ctx& x) {
                 int i = x("i"), j = x("j"), r = x("r"), s = x("s"), g2 = 2 * x.g;
                 bool c1 = i < j && j < r && r < s;
                 bool c2 = r + 1 < i && i < j && j < s;
                 bool c3 = i == r + 1 && i < j && j < s && ((even(r) && r < g2) || r > g2);
                 return need(c1 || c2 || c3,
                             "requires (i<j<r<s) or (r+1<i<j<s) or (i=r+1<j<s for even r<2g or r>2g)");
               },
               [](const Ctx& x) {
                 int i = x("i"), j = x("j"), r = x("r"), s = x("s");
                 return std::pair{inv(A(i, j)) * A(r, s) * A(i, j), A(r, s)};
               }});
  v.push_back({Family::PR2, "PR2",
               {{"i", Range::Point}, {"j", Range::Point}, {"s", Range::Point}},
               "i<j<s",
               [](const Ctx& x) { return need(x("i") < x("j") && x("j") < x("s"), "requires i<j<s"); },
               [](const Ctx& x) {
                 int i = x("i"), j = x("j"), s = x("s");
                 return std::pair{inv(A(i, j)) * A(j, s) * A(i, j), A(i, s) * A(j, s) * inv(A(i, s))};
               }});
  v.push_back({Family::PR3, "PR3",
               {{"i", Range::Point}, {"j", Range::Point}, {"s", Range::Point}},
               "i<j<s",
               [](const Ctx& x) { return need(x("i") < x("j") && x("j") < x("s"), "requires i<j<s"); },
               [](const Ctx& x) {
                 int i = x("i"), j = x("j"), s = x("s");
                 return std::pair{inv(A(i, j)) * A(i, s) * A(i, j),
                                  A(i, s) * A(j, s) * A(i, s) * inv(A(j, s)) * inv(A(i, s))};
               }});
  v.push_back({Family::PR4, "PR4",
               {{"i", Range::Point}, {"j", Range::Point}, {"r", Range::Point}, {"s", Range::Point}},
               "(i+1<r<j<s) or (i+1=r<j<s with r odd, r<2g, or r>2g)",
               [](const Ctx& x) {
                 int i = x("i"), j = x("j"), r = x("r"), s = x("s"), g2 = 2 * x.g;
                 bool c1 = i + 1 < r && r < j && j < s;
                 bool c2 = i + 1 == r && r < j && j < s && ((odd(r) && r < g2) || r > g2);
                 return need(c1 || c2, "requires (i+1<r<j<s) or (i+1=r<j<s for odd r<2g or r>2g)");
               },
               [](const Ctx& x) {
                 int i = x("i"), j = x("j"), r = x("r"), s = x("s");
                 Word rhs = A(i, s) * A(j, s) * inv(A(i, s)) * inv(A(j, s)) * A(r, s) * A(j, s) * A(i, s) *
                            inv(A(j, s)) * inv(A(i, s));
                 return std::pair{inv(A(i, j)) * A(r, s) * A(i, j), rhs};
               }});
  v.push_back({Family::ER1A, "ER1A",
               {{"r", Range::Point}, {"j", Range::Point}, {"s", Range::Point}},
               "j<s, r odd, r<2g",
               [](const Ctx& x) {
                 return need(x("j") < x("s") && odd(x("r")) && x("r") < 2 * x.g, "requires j<s, r odd and r<2g");
               },
               [](const Ctx& x) {
                 int r = x("r"), j = x("j"), s = x("s");
                 return std::pair{inv(A(r + 1, j)) * A(r, s) * A(r + 1, j),
                                  A(r, s) * A(r + 1, s) * inv(A(j, s)) * inv(A(r + 1, s))};
               }});
  v.push_back({Family::ER2A, "ER2A",
               {{"r", Range::Point}, {"j", Range::Point}, {"s", Range::Point}},
               "j<s, r even, r<2g",
               [](const Ctx& x) {
                 int hi = x.reading == PointReading::Boundary ? 2 * x.g : 2 * x.g - 1;
                 return need(x("j") < x("s") && even(x("r")) && x("r") <= hi,
                             x.reading == PointReading::Boundary ? "requires j<s, r even and r<=2g"
                                                                 : "requires j<s, r even and r<2g");
               },
               [](const Ctx& x) {
                 int r = x("r"), j = x("j"), s = x("s");
                 Word rhs = A(r - 1, s) * A(j, s) * inv(A(r - 1, s)) * A(r, s) * A(j, s) * A(r - 1, s) *
                            inv(A(j, s)) * inv(A(r - 1, s));
                 return std::pair{inv(A(r - 1, j)) * A(r, s) * A(r - 1, j), rhs};
               }});
  v.push_back({Family::TRA, "TRA",
               {{"k", Range::Strand}},
               "1<=k<=n",
               [](const Ctx&) { return std::optional<std::string>{}; },
               [](const Ctx& x) {
                 int k = x("k"), g = x.g, n = x.n;
                 Word prod;
                 for (int i = 1; i <= g; ++i) prod *= commutator(inv(A(2 * i - 1, 2 * g + k)), A(2 * i, 2 * g + k));
                 Word rhs;
                 for (int l = 2 * g + 1; l <= 2 * g + k - 1; ++l) rhs *= A(l, 2 * g + k);
                 for (int j = 2 * g + k + 1; j <= 2 * g + n; ++j) rhs *= A(2 * g + k, j);
                 return std::pair{inv(prod), rhs};
               }});
  return v;
}

std::optional<std::string> chain(std::initializer_list<int> values, const char* what) {
  const int* prev = nullptr;
  for (const int& v : values) {
    if (prev && !(*prev < v)) return std::string("requires ") + what;
    prev = &v;
  }
  return std::nullopt;
}

// Strand families.  Each family uses exactly the chain indices appearing in
// its displayed equation, ordered by 1 <= s < p < j < r < l <= n.
std::vector<FamilySpec> make_strand_specs() {
  std::vector<FamilySpec> v;
  auto conj = [](const Word& x, const Word& y) { return conj_upper(x, y); };

  v.push_back({Family::Ia, "I-a",
               {{"c", Range::Choice}, {"j", Range::Strand}, {"k", Range::Genus}, {"l", Range::Strand},
                {"m", Range::Genus}},
               "j<l, m<k",
               [](const Ctx& x) {
                 if (auto e = chain({x("j"), x("l")}, "j<l")) return e;
                 return need(x("m") < x("k"), "requires m<k");
               },
               [conj](const Ctx& x) {
                 Word cw = choice(x("c"), x("l"), x("m"));
                 return std::pair{conj(a(x("j"), x("k")), cw), cw};
               }});
  v.push_back({Family::Ib, "I-b",
               {{"c", Range::Choice}, {"j", Range::Strand}, {"k", Range::Genus}, {"l", Range::Strand},
                {"m", Range::Genus}},
               "j<l, m<k",
               [](const Ctx& x) {
                 if (auto e = chain({x("j"), x("l")}, "j<l")) return e;
                 return need(x("m") < x("k"), "requires m<k");
               },
               [conj](const Ctx& x) {
                 Word cw = choice(x("c"), x("l"), x("m"));
                 return std::pair{conj(b(x("j"), x("k")), cw), cw};
               }});
  v.push_back({Family::Itau1, "I-tau1",
               {{"c", Range::Choice}, {"s", Range::Strand}, {"j", Range::Strand}, {"l", Range::Strand},
                {"m", Range::Genus}},
               "s<j<l",
               [](const Ctx& x) { return chain({x("s"), x("j"), x("l")}, "s<j<l"); },
               [conj](const Ctx& x) {
                 Word cw = choice(x("c"), x("l"), x("m"));
                 return std::pair{conj(t(x("s"), x("j")), cw), cw};
               }});
  v.push_back({Family::Itau2, "I-tau2",
               {{"s", Range::Strand}, {"p", Range::Strand}, {"j", Range::Strand}, {"l", Range::Strand}},
               "s<p<j<l",
               [](const Ctx& x) { return chain({x("s"), x("p"), x("j"), x("l")}, "s<p<j<l"); },
               [conj](const Ctx& x) {
                 Word tw = t(x("s"), x("l"));
                 return std::pair{conj(t(x("p"), x("j")), tw), tw};
               }});
  v.push_back({Family::IIa, "II-a",
               {{"j", Range::Strand}, {"l", Range::Strand}, {"k", Range::Genus}},
               "j<l",
               [](const Ctx& x) { return chain({x("j"), x("l")}, "j<l"); },
               [conj](const Ctx& x) {
                 int j = x("j"), l = x("l"), k = x("k");
                 return std::pair{conj(a(j, k), a(l, k)), conj_lower(a(l, k), t(j, l))};
               }});
  v.push_back({Family::IIb, "II-b",
               {{"j", Range::Strand}, {"l", Range::Strand}, {"k", Range::Genus}},
               "j<l",
               [](const Ctx& x) { return chain({x("j"), x("l")}, "j<l"); },
               [conj](const Ctx& x) {
                 int j = x("j"), l = x("l"), k = x("k");
                 return std::pair{conj(b(j, k), b(l, k)), conj_lower(b(l, k), t(j, l))};
               }});
  v.push_back({Family::IItau, "II-tau",
               {{"s", Range::Strand}, {"j", Range::Strand}, {"l", Range::Strand}},
               "s<j<l",
               [](const Ctx& x) { return chain({x("s"), x("j"), x("l")}, "s<j<l"); },
               [conj](const Ctx& x) {
                 int s = x("s"), j = x("j"), l = x("l");
                 return std::pair{conj(t(s, j), t(s, l)), conj_lower(t(s, l), t(j, l))};
               }});
  v.push_back({Family::IIIa1, "III-a1",
               {{"c", Range::Choice}, {"j", Range::Strand}, {"l", Range::Strand}, {"k", Range::Genus},
                {"m", Range::Genus}},
               "j<l, k<m",
               [](const Ctx& x) {
                 if (auto e = chain({x("j"), x("l")}, "j<l")) return e;
                 return need(x("k") < x("m"), "requires k<m");
               },
               [conj](const Ctx& x) {
                 int j = x("j"), l = x("l"), k = x("k");
                 Word cw = choice(x("c"), l, x("m"));
                 return std::pair{conj(a(j, k), cw), conj(commutator(t(j, l), a(l, k)), cw)};
               }});
  v.push_back({Family::IIIa2, "III-a2",
               {{"s", Range::Strand}, {"j", Range::Strand}, {"l", Range::Strand}, {"k", Range::Genus}},
               "s<j<l",
               [](const Ctx& x) { return chain({x("s"), x("j"), x("l")}, "s<j<l"); },
               [conj](const Ctx& x) {
                 int s = x("s"), j = x("j"), l = x("l"), k = x("k");
                 return std::pair{conj(a(j, k), t(s, l)), conj(commutator(t(j, l), a(l, k)), t(s, l))};
               }});
  v.push_back({Family::IIIb1, "III-b1",
               {{"c", Range::Choice}, {"j", Range::Strand}, {"l", Range::Strand}, {"k", Range::Genus},
                {"m", Range::Genus}},
               "j<l, k<m",
               [](const Ctx& x) {
                 if (auto e = chain({x("j"), x("l")}, "j<l")) return e;
                 return need(x("k") < x("m"), "requires k<m");
               },
               [conj](const Ctx& x) {
                 int j = x("j"), l = x("l"), k = x("k");
                 Word cw = choice(x("c"), l, x("m"));
                 return std::pair{conj(b(j, k), cw), conj(commutator(t(j, l), b(l, k)), cw)};
               }});
  v.push_back({Family::IIIb2, "III-b2",
               {{"s", Range::Strand}, {"j", Range::Strand}, {"l", Range::Strand}, {"k", Range::Genus}},
               "s<j<l",
               [](const Ctx& x) { return chain({x("s"), x("j"), x("l")}, "s<j<l"); },
               [conj](const Ctx& x) {
                 int s = x("s"), j = x("j"), l = x("l"), k = x("k");
                 return std::pair{conj(b(j, k), t(s, l)), conj(commutator(t(j, l), b(l, k)), t(s, l))};
               }});
  v.push_back({Family::IIItau, "III-tau",
               {{"s", Range::Strand}, {"p", Range::Strand}, {"j", Range::Strand}, {"l", Range::Strand}},
               "s<p<j<l",
               [](const Ctx& x) { return chain({x("s"), x("p"), x("j"), x("l")}, "s<p<j<l"); },
               [conj](const Ctx& x) {
                 int s = x("s"), p = x("p"), j = x("j"), l = x("l");
                 return std::pair{conj(t(s, j), t(p, l)), conj(commutator(t(j, l), t(s, l)), t(p, l))};
               }});
  v.push_back({Family::IVa, "IV-a",
               {{"j", Range::Strand}, {"r", Range::Strand}, {"l", Range::Strand}, {"k", Range::Genus}},
               "j<r<l",
               [](const Ctx& x) { return chain({x("j"), x("r"), x("l")}, "j<r<l"); },
               [conj](const Ctx& x) {
                 Word tw = t(x("r"), x("l"));
                 return std::pair{conj(a(x("j"), x("k")), tw), tw};
               }});
  v.push_back({Family::IVb, "IV-b",
               {{"j", Range::Strand}, {"r", Range::Strand}, {"l", Range::Strand}, {"k", Range::Genus}},
               "j<r<l",
               [](const Ctx& x) { return chain({x("j"), x("r"), x("l")}, "j<r<l"); },
               [conj](const Ctx& x) {
                 Word tw = t(x("r"), x("l"));
                 return std::pair{conj(b(x("j"), x("k")), tw), tw};
               }});
  v.push_back({Family::IVtau, "IV-tau",
               {{"p", Range::Strand}, {"j", Range::Strand}, {"r", Range::Strand}, {"l", Range::Strand}},
               "p<j<r<l",
               [](const Ctx& x) { return chain({x("p"), x("j"), x("r"), x("l")}, "p<j<r<l"); },
               [conj](const Ctx& x) {
                 Word tw = t(x("r"), x("l"));
                 return std::pair{conj(t(x("p"), x("j")), tw), tw};
               }});
  v.push_back({Family::Va, "V-a",
               {{"j", Range::Strand}, {"l", Range::Strand}, {"k", Range::Genus}},
               "j<l",
               [](const Ctx& x) { return chain({x("j"), x("l")}, "j<l"); },
               [conj](const Ctx& x) {
                 int j = x("j"), l = x("l"), k = x("k");
                 return std::pair{conj(a(j, k), t(j, l)), commutator(t(j, l), a(l, k)) * t(j, l)};
               }});
  v.push_back({Family::Vb, "V-b",
               {{"j", Range::Strand}, {"l", Range::Strand}, {"k", Range::Genus}},
               "j<l",
               [](const Ctx& x) { return chain({x("j"), x("l")}, "j<l"); },
               [conj](const Ctx& x) {
                 int j = x("j"), l = x("l"), k = x("k");
                 return std::pair{conj(b(j, k), t(j, l)), commutator(t(j, l), b(l, k)) * t(j, l)};
               }});
  v.push_back({Family::Vtau, "V-tau",
               {{"s", Range::Strand}, {"j", Range::Strand}, {"l", Range::Strand}},
               "s<j<l",
               [](const Ctx& x) { return chain({x("s"), x("j"), x("l")}, "s<j<l"); },
               [conj](const Ctx& x) {
                 int s = x("s"), j = x("j"), l = x("l");
                 return std::pair{conj(t(s, j), t(j, l)), commutator(t(j, l), t(s, l)) * t(j, l)};
               }});
  v.push_back({Family::ER1, "ER1",
               {{"j", Range::Strand}, {"l", Range::Strand}, {"k", Range::Genus}},
               "j<l",
               [](const Ctx& x) { return chain({x("j"), x("l")}, "j<l"); },
               [conj](const Ctx& x) {
                 int j = x("j"), l = x("l"), k = x("k");
                 return std::pair{conj(a(j, k), b(l, k)), inv(t(j, l)) * b(l, k) * commutator(a(l, k), t(j, l))};
               }});
  v.push_back({Family::ER2, "ER2",
               {{"j", Range::Strand}, {"l", Range::Strand}, {"k", Range::Genus}},
               "j<l",
               [](const Ctx& x) { return chain({x("j"), x("l")}, "j<l"); },
               [conj](const Ctx& x) {
                 int j = x("j"), l = x("l"), k = x("k");
                 return std::pair{conj(b(j, k), a(l, k)), a(l, k) * t(j, l)};
               }});
  v.push_back({Family::TR, "TR",
               {{"l", Range::Strand}},
               "1<=l<=n",
               [](const Ctx&) { return std::optional<std::string>{}; },
               [](const Ctx& x) {
                 int l = x("l");
                 Word lhs;
                 for (int i = 1; i <= x.g; ++i) lhs *= commutator(inv(a(l, i)), b(l, i));
                 Word inner;
                 for (int w = 1; w <= l - 1; ++w) inner *= t(w, l);
                 for (int d = l + 1; d <= x.n; ++d) inner *= t(l, d);
                 return std::pair{lhs, inv(inner)};
               }});
  return v;
}

const std::vector<FamilySpec>& all_specs() {
  static const std::vector<FamilySpec> specs = [] {
    auto v = make_point_specs();
    auto w = make_strand_specs();
    v.insert(v.end(), w.begin(), w.end());
    return v;
  }();
  return specs;
}

const FamilySpec& spec_of(Family family) {
  for (const auto& s : all_specs()) {
    if (s.family == family) return s;
  }
  throw ParameterError("unknown relation family");
}

int range_max(Range r, int n, int g) {
  switch (r) {
    case Range::Point: return 2 * g + n;
    case Range::Strand: return n;
    case Range::Genus: return g;
    case Range::Choice: return 2;
  }
  return 0;
}

void check_pure_closed(int n, int g) {
  if (n < 2 || g < 1) {
    throw ParameterError("pure braid presentations of closed surfaces require n >= 2 and g >= 1 (got n=" +
                         std::to_string(n) + ", g=" + std::to_string(g) + ")");
  }
}

RelationInstance build_checked(const FamilySpec& spec, const IndexAssignment& idx, int n, int g,
                               PointReading reading) {
  Ctx ctx(idx, n, g, reading);
  if (auto violation = spec.check(ctx)) {
    throw SideConditionError(std::string(spec.name) + ": " + *violation);
  }
  auto [lhs, rhs] = spec.build(ctx);
  bool point = is_point_family(spec.family);
  for (const Word* w : {&lhs, &rhs}) {
    for (const Letter& l : w->letters()) {
      bool ok = point ? is_point_generator(l.gen, n, g) : is_strand_generator(l.gen, n, g);
      if (!ok) {
        throw SideConditionError(std::string(spec.name) + ": generator " + to_string(l.gen) +
                                 " lies outside the alphabet");
      }
    }
  }
  return RelationInstance{spec.family, idx, std::move(lhs), std::move(rhs)};
}

}  // namespace

std::string to_string(Preset preset) {
  switch (preset) {
    case Preset::PureClosedA: return "pure-closed-A";
    case Preset::PureClosedAbt: return "pure-closed-abt";
    case Preset::SurfaceGroup: return "surface-group";
    case Preset::ArtinBraid: return "artin-braid";
    case Preset::ArtinPureBraid: return "artin-pure-braid";
    case Preset::Free: return "free";
  }
  return "?";
}

Preset parse_preset(std::string_view name) {
  for (Preset p : {Preset::PureClosedA, Preset::PureClosedAbt, Preset::SurfaceGroup, Preset::ArtinBraid,
                   Preset::ArtinPureBraid, Preset::Free}) {
    if (to_string(p) == name) return p;
  }
  throw ParameterError("unknown preset '" + std::string(name) + "'");
}

std::string to_string(Family family) { return spec_of(family).name; }

Family parse_family(std::string_view name) {
  for (const auto& s : all_specs()) {
    if (s.name == name) return s.family;
  }
  throw ParameterError("unknown relation family '" + std::string(name) + "'");
}

const std::vector<Family>& point_families() {
  static const std::vector<Family> v = {Family::PR1, Family::PR2, Family::PR3, Family::PR4,
                                        Family::ER1A, Family::ER2A, Family::TRA};
  return v;
}

const std::vector<Family>& strand_families() {
  static const std::vector<Family> v = [] {
    std::vector<Family> out;
    for (const auto& s : all_specs()) {
      if (!is_point_family(s.family)) out.push_back(s.family);
    }
    return out;
  }();
  return v;
}

bool is_point_family(Family family) {
  switch (family) {
    case Family::PR1:
    case Family::PR2:
    case Family::PR3:
    case Family::PR4:
    case Family::ER1A:
    case Family::ER2A:
    case Family::TRA:
      return true;
    default:
      return false;
  }
}

const std::vector<std::string>& family_indices(Family family) {
  static const std::map<Family, std::vector<std::string>> names = [] {
    std::map<Family, std::vector<std::string>> m;
    for (const auto& s : all_specs()) {
      for (const auto& v : s.vars) m[s.family].push_back(v.name);
    }
    return m;
  }();
  return names.at(family);
}

std::string family_condition(Family family) { return spec_of(family).condition; }

std::string RelationInstance::label() const {
  std::string s = to_string(family) + "(";
  bool first = true;
  for (const auto& [k, v] : indices) {
    if (!first) s += ",";
    first = false;
    s += k + "=" + (k == "c" ? std::string(v == 1 ? "a" : "b") : std::to_string(v));
  }
  return s + ")";
}

bool Presentation::contains(const GeneratorId& gen) const {
  return std::binary_search(generators.begin(), generators.end(), gen);
}

std::vector<GeneratorId> point_generators(int n, int g) {
  std::vector<GeneratorId> out;
  for (int j = 2 * g + 1; j <= 2 * g + n; ++j) {
    for (int i = 1; i < j; ++i) out.push_back(GeneratorId::A(i, j));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GeneratorId> strand_generators(int n, int g) {
  std::vector<GeneratorId> out;
  for (int j = 1; j <= n; ++j) {
    for (int k = 1; k <= g; ++k) {
      out.push_back(GeneratorId::a(j, k));
      out.push_back(GeneratorId::b(j, k));
    }
  }
  for (int p = 1; p <= n; ++p) {
    for (int q = p + 1; q <= n; ++q) out.push_back(GeneratorId::tau(p, q));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_point_generator(const GeneratorId& gen, int n, int g) {
  return gen.kind == Kind::A && gen.first >= 1 && gen.first < gen.second && gen.second >= 2 * g + 1 &&
         gen.second <= 2 * g + n;
}

bool is_strand_generator(const GeneratorId& gen, int n, int g) {
  switch (gen.kind) {
    case Kind::a:
    case Kind::b:
      return gen.first >= 1 && gen.first <= n && gen.second >= 1 && gen.second <= g;
    case Kind::tau:
      return gen.first >= 1 && gen.first < gen.second && gen.second <= n;
    default:
      return false;
  }
}

GeneratorId point_to_strand(const GeneratorId& gen, int n, int g) {
  if (!is_point_generator(gen, n, g)) {
    throw AlphabetError(to_string(gen) + " is not a generator of the point presentation for n=" +
                        std::to_string(n) + ", g=" + std::to_string(g));
  }
  int j = gen.second - 2 * g;
  if (gen.first > 2 * g) return GeneratorId::tau(gen.first - 2 * g, j);
  int r = (gen.first + 1) / 2;
  return gen.first % 2 == 1 ? GeneratorId::a(j, r) : GeneratorId::b(j, r);
}

GeneratorId strand_to_point(const GeneratorId& gen, int n, int g) {
  if (!is_strand_generator(gen, n, g)) {
    throw AlphabetError(to_string(gen) + " is not a generator of the strand presentation for n=" +
                        std::to_string(n) + ", g=" + std::to_string(g));
  }
  switch (gen.kind) {
    case Kind::a: return GeneratorId::A(2 * gen.second - 1, 2 * g + gen.first);
    case Kind::b: return GeneratorId::A(2 * gen.second, 2 * g + gen.first);
    default: return GeneratorId::A(2 * g + gen.first, 2 * g + gen.second);
  }
}

Word translate_to_strand(const Word& w, int n, int g) {
  return substitute(w, [n, g](const GeneratorId& x) { return Word(point_to_strand(x, n, g)); });
}

Word translate_to_point(const Word& w, int n, int g) {
  return substitute(w, [n, g](const GeneratorId& x) { return Word(strand_to_point(x, n, g)); });
}

RelationInstance instantiate(Family family, const IndexAssignment& indices, int n, int g, PointReading reading) {
  check_pure_closed(n, g);
  const FamilySpec& spec = spec_of(family);
  for (const auto& [name, value] : indices) {
    bool known = std::any_of(spec.vars.begin(), spec.vars.end(), [&](const Var& v) { return name == v.name; });
    if (!known) throw ParameterError(std::string(spec.name) + ": unknown index '" + name + "'");
  }
  for (const Var& v : spec.vars) {
    auto it = indices.find(v.name);
    if (it == indices.end()) throw ParameterError(std::string(spec.name) + ": missing index '" + v.name + "'");
    int hi = range_max(v.range, n, g);
    if (it->second < 1 || it->second > hi) {
      throw SideConditionError(std::string(spec.name) + ": index " + v.name + "=" + std::to_string(it->second) +
                               " out of range [1," + std::to_string(hi) + "]");
    }
  }
  return build_checked(spec, indices, n, g, reading);
}

std::vector<RelationInstance> enumerate_instances(Family family, int n, int g, PointReading reading) {
  check_pure_closed(n, g);
  const FamilySpec& spec = spec_of(family);
  std::vector<RelationInstance> out;
  IndexAssignment idx;
  std::function<void(std::size_t)> rec = [&](std::size_t depth) {
    if (depth == spec.vars.size()) {
      try {
        out.push_back(build_checked(spec, idx, n, g, reading));
      } catch (const SideConditionError&) {
      }
      return;
    }
    const Var& v = spec.vars[depth];
    int hi = range_max(v.range, n, g);
    for (int value = 1; value <= hi; ++value) {
      idx[v.name] = value;
      rec(depth + 1);
    }
    idx.erase(v.name);
  };
  rec(0);
  return out;
}

Presentation build_presentation(Preset preset, int n, int g, PointReading reading) {
  Presentation p;
  p.preset = preset;
  p.n = n;
  p.g = g;
  switch (preset) {
    case Preset::PureClosedA:
    case Preset::PureClosedAbt: {
      check_pure_closed(n, g);
      bool point = preset == Preset::PureClosedA;
      p.generators = point ? point_generators(n, g) : strand_generators(n, g);
      for (Family f : point ? point_families() : strand_families()) {
        for (auto& inst : enumerate_instances(f, n, g, reading)) {
          p.relators.push_back(inst.relator());
          p.instances.push_back(std::move(inst));
        }
      }
      break;
    }
    case Preset::SurfaceGroup: {
      if (g < 1) throw ParameterError("surface-group requires g >= 1");
      p.n = 0;
      Word rel;
      for (int k = 1; k <= g; ++k) {
        p.generators.push_back(GeneratorId::c(k));
        rel *= commutator(Word(GeneratorId::c(k)).inverse(), Word(GeneratorId::d(k)));
      }
      for (int k = 1; k <= g; ++k) p.generators.push_back(GeneratorId::d(k));
      p.relators.push_back(rel);
      break;
    }
    case Preset::ArtinBraid: {
      if (n < 1) throw ParameterError("artin-braid requires n >= 1");
      p.g = 0;
      auto s = [](int i) { return Word(GeneratorId::sigma(i)); };
      for (int i = 1; i < n; ++i) p.generators.push_back(GeneratorId::sigma(i));
      for (int i = 1; i + 1 < n; ++i) p.relators.push_back(s(i) * s(i + 1) * s(i) * (s(i + 1) * s(i) * s(i + 1)).inverse());
      for (int i = 1; i < n; ++i) {
        for (int j = i + 2; j < n; ++j) p.relators.push_back(s(i) * s(j) * (s(j) * s(i)).inverse());
      }
      break;
    }
    case Preset::ArtinPureBraid: {
      if (n < 1) throw ParameterError("artin-pure-braid requires n >= 1");
      p.g = 0;
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) p.generators.push_back(GeneratorId::A(i, j));
      }
      for (int r = 1; r <= n; ++r) {
        for (int s = r + 1; s <= n; ++s) {
          for (int i = 1; i <= n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
              Word lhs = A(r, s).inverse() * A(i, j) * A(r, s);
              std::optional<Word> rhs;
              if ((s < i) || (i < r && s < j)) {
                rhs = A(i, j);
              } else if (s == i) {
                rhs = A(r, j) * A(i, j) * A(r, j).inverse();
              } else if (i == r && s < j) {
                rhs = A(r, j) * A(s, j) * A(i, j) * A(s, j).inverse() * A(r, j).inverse();
              } else if (r < i && i < s && s < j) {
                rhs = A(r, j) * A(s, j) * A(r, j).inverse() * A(s, j).inverse() * A(i, j) * A(s, j) * A(r, j) *
                      A(s, j).inverse() * A(r, j).inverse();
              }
              if (rhs && !(lhs * rhs->inverse()).empty()) p.relators.push_back(lhs * rhs->inverse());
            }
          }
        }
      }
      break;
    }
    case Preset::Free: {
      if (n < 0) throw ParameterError("free requires n >= 0");
      p.g = 0;
      for (int i = 1; i <= n; ++i) p.generators.push_back(GeneratorId::x(i));
      break;
    }
  }
  return p;
}

}  // namespace sbraid
