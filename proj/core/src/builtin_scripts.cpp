#include "sbraid/builtin_scripts.hpp"

#include "sbraid/error.hpp"
#include "sbraid/split.hpp"

namespace sbraid {

namespace {

Letter pos_letter(GeneratorId g) { return {g, 1}; }
GeneratorId cgen(int c, int d, int k) { return c == 1 ? GeneratorId::a(d, k) : GeneratorId::b(d, k); }
std::string cname(int c) { return c == 1 ? "a" : "b"; }

void require_grid(int n, int g) {
  if (n < 2 || g < 1) {
    throw ParameterError("built-in suites require n >= 2 and g >= 1 (got n=" + std::to_string(n) +
                         ", g=" + std::to_string(g) + ")");
  }
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ParameterError(what);
}

// Tracks the length of a subword [off, off+len) of the builder's word while
// steps inside it grow or shrink the whole word.
class Window {
 public:
  Window(const ScriptBuilder& b, std::size_t len) : b_(b), total0_(b.word().size()), len0_(len) {}
  std::size_t len() const { return len0_ + b_.word().size() - total0_; }

 private:
  const ScriptBuilder& b_;
  std::size_t total0_;
  std::size_t len0_;
};

// identity (A) at offset: tau_il^-1 C tau_il tau_ij tau_il^-1 C^-1 tau_il -> tau_ij
void inline_identity_a(ScriptBuilder& b, std::size_t off, int i, int l, int j) {
  Window win(b, 7);
  IndexAssignment iit{{"s", i}, {"j", l}, {"l", j}};
  b.apply(Family::IItau, iit, Direction::Forward, off + 2);
  b.conjugate_all(off + 1, 3);
  b.reduce(off, win.len());
  b.apply(Family::IItau, iit, Direction::Backward, off + 1);
  b.reduce(off, win.len());
}

// identity (B) at offset: (c_l ... c_q) tau_lq -> tau_lq (c_l ... c_q)
void inline_identity_b(ScriptBuilder& b, std::size_t off, int l, int q, int k, int c) {
  const Word p = strand_product(c, l, q, k);
  const std::size_t plen = p.size();
  Window win(b, plen + 1);
  b.expand_word(off + plen + 1, p.inverse().letters());
  // c_l (c_{l+1} .. c_q tau_lq c_q^-1 .. c_{l+1}^-1) c_l^-1, one letter at a time
  b.conjugate_all(off, 2 * (plen - 1) + 1);
  b.reduce(off, win.len());
  for (int d = q - 1; d >= l + 1; --d) inline_identity_a(b, off + 3 * static_cast<std::size_t>(d - l - 1), l, d, q);
}

bool is_tau(const Letter& x, int p, int q_min_exclusive) {
  return x.exp == 1 && x.gen.kind == Kind::tau && x.gen.first == p && x.gen.second > q_min_exclusive;
}

// identity 1 at offset: (c_l ... c_q) T_lq -> T_lq (c_l ... c_q)
void inline_lemma1(ScriptBuilder& b, std::size_t off, int l, int q, int k, int c) {
  const std::size_t len = 2 * static_cast<std::size_t>(q - l) + 1;
  const Kind ck = c == 1 ? Kind::a : Kind::b;
  // move tau_{l,d} left past c_{d'} for d' > d
  for (bool moved = true; moved;) {
    moved = false;
    for (std::size_t pos = off; pos + 1 < off + len; ++pos) {
      const Letter& u = b.word()[pos];
      const Letter& v = b.word()[pos + 1];
      if (u.exp == 1 && u.gen.kind == ck && is_tau(v, l, l) && u.gen.first > v.gen.second) {
        b.swap(pos);
        moved = true;
        break;
      }
    }
  }
  for (int qq = l + 1; qq <= q; ++qq) inline_identity_b(b, off + static_cast<std::size_t>(qq - l - 1), l, qq, k, c);
}

// identity 2 at offset: b_lk (a_{l+1,k} .. a_{q,k}) b_lk^-1 -> (a_{l+1,k} .. a_{q,k}) T_lq
void inline_lemma2(ScriptBuilder& b, std::size_t off, int l, int q) {
  const std::size_t plen = static_cast<std::size_t>(q - l);
  b.conjugate_all(off, plen);
  const std::size_t len = 2 * plen;
  for (bool moved = true; moved;) {
    moved = false;
    for (std::size_t pos = off; pos + 1 < off + len; ++pos) {
      const Letter& u = b.word()[pos];
      const Letter& v = b.word()[pos + 1];
      if (is_tau(u, l, l) && v.exp == 1 && v.gen.kind == Kind::a) {
        b.swap(pos);
        moved = true;
        break;
      }
    }
  }
}

Ambient abt(int n, int g) { return Ambient{Preset::PureClosedAbt, n, g}; }

}  // namespace

std::string to_string(Suite suite) {
  switch (suite) {
    case Suite::Lemma41_1: return "lemma41-1";
    case Suite::Lemma41_2: return "lemma41-2";
    case Suite::IdentityA: return "identity-A";
    case Suite::IdentityB: return "identity-B";
    case Suite::TauGamma2: return "tau-gamma2";
    case Suite::Splitting: return "splitting";
  }
  return "?";
}

const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> v = {Suite::Lemma41_1, Suite::Lemma41_2, Suite::IdentityA,
                                       Suite::IdentityB, Suite::TauGamma2, Suite::Splitting};
  return v;
}

Suite parse_suite(std::string_view name) {
  for (Suite s : all_suites()) {
    if (to_string(s) == name) return s;
  }
  throw ParameterError("unknown suite '" + std::string(name) + "'");
}

Word strand_product(int c, int from, int to, int k) {
  Word w;
  for (int d = from; d <= to; ++d) w *= Word(cgen(c, d, k));
  return w;
}

Word tee(int l, int q) {
  Word w;
  for (int d = l + 1; d <= q; ++d) w *= Word(GeneratorId::tau(l, d));
  return w;
}

DerivationScript identity_a_script(int i, int l, int j, int k, int c, int n, int g) {
  require_grid(n, g);
  require(1 <= i && i < l && l < j && j <= n && 1 <= k && k <= g && (c == 1 || c == 2),
          "identity-A needs 1 <= i < l < j <= n, 1 <= k <= g");
  Word til(GeneratorId::tau(i, l));
  Word cc(cgen(c, l, k));
  Word start = til.inverse() * cc * til;
  RawWord s = start.letters();
  s.push_back(pos_letter(GeneratorId::tau(i, j)));
  RawWord back = start.inverse().letters();
  s.insert(s.end(), back.begin(), back.end());
  ScriptBuilder b("identity-A(i=" + std::to_string(i) + ",l=" + std::to_string(l) + ",j=" + std::to_string(j) +
                      ",k=" + std::to_string(k) + ",c=" + cname(c) + ")",
                  abt(n, g), s);
  inline_identity_a(b, 0, i, l, j);
  b.reduce();
  return std::move(b).finish({pos_letter(GeneratorId::tau(i, j))});
}

DerivationScript identity_b_script(int l, int q, int k, int c, int n, int g) {
  require_grid(n, g);
  require(1 <= l && l < q && q <= n && 1 <= k && k <= g && (c == 1 || c == 2),
          "identity-B needs 1 <= l < q <= n, 1 <= k <= g");
  Word p = strand_product(c, l, q, k);
  Word t(GeneratorId::tau(l, q));
  RawWord s = p.letters();
  s.push_back(pos_letter(GeneratorId::tau(l, q)));
  ScriptBuilder b("identity-B(l=" + std::to_string(l) + ",q=" + std::to_string(q) + ",k=" + std::to_string(k) +
                      ",c=" + cname(c) + ")",
                  abt(n, g), s);
  inline_identity_b(b, 0, l, q, k, c);
  b.reduce();
  return std::move(b).finish((t * p).letters());
}

DerivationScript lemma41_1_script(int l, int q, int k, int c, int n, int g) {
  require_grid(n, g);
  require(1 <= l && l < q && q <= n && 1 <= k && k <= g && (c == 1 || c == 2),
          "lemma41-1 needs 1 <= l < q <= n, 1 <= k <= g");
  Word p = strand_product(c, l, q, k);
  Word t = tee(l, q);
  ScriptBuilder b("lemma41-1(l=" + std::to_string(l) + ",q=" + std::to_string(q) + ",k=" + std::to_string(k) +
                      ",c=" + cname(c) + ")",
                  abt(n, g), (p * t).letters());
  inline_lemma1(b, 0, l, q, k, c);
  b.reduce();
  return std::move(b).finish((t * p).letters());
}

DerivationScript lemma41_2_script(int l, int q, int k, int n, int g) {
  require_grid(n, g);
  require(1 <= l && l < q && q <= n && 1 <= k && k <= g, "lemma41-2 needs 1 <= l < q <= n, 1 <= k <= g");
  Word p = strand_product(1, l + 1, q, k);
  Word bl(GeneratorId::b(l, k));
  ScriptBuilder b("lemma41-2(l=" + std::to_string(l) + ",q=" + std::to_string(q) + ",k=" + std::to_string(k) + ")",
                  abt(n, g), conj_upper(bl, p).letters());
  inline_lemma2(b, 0, l, q);
  b.reduce();
  return std::move(b).finish((p * tee(l, q)).letters());
}

Word tau_gamma2_witness(int l, int n, int g) {
  Word w;
  for (int v = 2; v <= l - 1; ++v) w *= commutator(Word(GeneratorId::a(l, g)), Word(GeneratorId::b(v, g)).inverse());
  for (int d = l + 1; d <= n; ++d) w *= commutator(Word(GeneratorId::a(d, g)), Word(GeneratorId::b(l, g)).inverse());
  for (int i = 1; i <= g; ++i) w *= commutator(Word(GeneratorId::a(l, i)).inverse(), Word(GeneratorId::b(l, i)));
  return w;
}

DerivationScript tau_gamma2_script(int l, int n, int g) {
  require_grid(n, g);
  require(2 <= l && l <= n, "tau-gamma2 needs 2 <= l <= n");
  Word x;
  for (int v = 2; v <= l - 1; ++v) x *= Word(GeneratorId::tau(v, l));
  for (int d = l + 1; d <= n; ++d) x *= Word(GeneratorId::tau(l, d));
  ScriptBuilder b("tau-gamma2(l=" + std::to_string(l) + ")", abt(n, g),
                  {Letter{GeneratorId::tau(1, l), -1}});
  b.expand_word(0, x.letters());
  b.apply(Family::TR, {{"l", l}}, Direction::Backward, x.size());
  // tau_{w,l} = [a_{l,g}, b_{w,g}^-1] and tau_{l,d} = [a_{d,g}, b_{l,g}^-1] via ER2
  for (std::size_t i = x.size(); i-- > 0;) {
    const GeneratorId t = x.letters()[i].gen;
    const int j = t.first;
    const int ll = t.second;
    b.expand(i, Letter{GeneratorId::a(ll, g), -1});
    b.apply(Family::ER2, {{"j", j}, {"l", ll}, {"k", g}}, Direction::Backward, i + 1);
  }
  b.reduce();
  return std::move(b).finish(tau_gamma2_witness(l, n, g).letters());
}

RawWord surface_relator_letters(int g) {
  RawWord w;
  for (int i = 1; i <= g; ++i) {
    w.push_back({GeneratorId::c(i), 1});
    w.push_back({GeneratorId::d(i), -1});
    w.push_back({GeneratorId::c(i), -1});
    w.push_back({GeneratorId::d(i), 1});
  }
  return w;
}

DerivationScript splitting_script(int n, int g) {
  require_grid(n, g);
  RawWord start = surface_relator_letters(g);
  ScriptBuilder b("splitting", abt(n, g), start);
  for (std::size_t i = start.size(); i-- > 0;) b.substitute(i, "section");
  b.reduce();
  // T Q T^-1 P T b^-1 T^-1 P^-1 b with Q the first g-1 commutators
  const std::size_t tlen = static_cast<std::size_t>(n - 1);
  const std::size_t qlen = 4 * static_cast<std::size_t>(g - 1);
  const std::size_t p_at = g > 1 ? 2 * tlen + qlen : 0;
  inline_lemma1(b, p_at, 1, n, g, 1);
  b.reduce();
  // T Q P b^-1 T^-1 P^-1 b; split P = a_{1,g} P' and conjugate P' by b
  const std::size_t after_a = tlen + qlen + 1;
  b.expand(after_a, Letter{GeneratorId::b(1, g), -1});
  inline_lemma2(b, after_a + 1, 1, n);
  b.reduce();
  b.apply(Family::TR, {{"l", 1}}, Direction::Forward, tlen);
  b.reduce();
  return std::move(b).finish({});
}

std::vector<SuiteCase> builtin_scripts(Suite suite, int n, int g) {
  require_grid(n, g);
  std::vector<SuiteCase> out;
  auto add = [&out](DerivationScript s) {
    std::string id = s.name;
    out.push_back({std::move(id), std::move(s)});
  };
  switch (suite) {
    case Suite::Lemma41_1:
      for (int l = 1; l <= n; ++l)
        for (int q = l + 1; q <= n; ++q)
          for (int k = 1; k <= g; ++k)
            for (int c = 1; c <= 2; ++c) add(lemma41_1_script(l, q, k, c, n, g));
      break;
    case Suite::Lemma41_2:
      for (int l = 1; l <= n; ++l)
        for (int q = l + 1; q <= n; ++q)
          for (int k = 1; k <= g; ++k) add(lemma41_2_script(l, q, k, n, g));
      break;
    case Suite::IdentityA:
      for (int i = 1; i <= n; ++i)
        for (int l = i + 1; l <= n; ++l)
          for (int j = l + 1; j <= n; ++j)
            for (int k = 1; k <= g; ++k)
              for (int c = 1; c <= 2; ++c) add(identity_a_script(i, l, j, k, c, n, g));
      break;
    case Suite::IdentityB:
      for (int l = 1; l <= n; ++l)
        for (int q = l + 1; q <= n; ++q)
          for (int k = 1; k <= g; ++k)
            for (int c = 1; c <= 2; ++c) add(identity_b_script(l, q, k, c, n, g));
      break;
    case Suite::TauGamma2:
      for (int l = 2; l <= n; ++l) add(tau_gamma2_script(l, n, g));
      break;
    case Suite::Splitting:
      add(splitting_script(n, g));
      break;
  }
  return out;
}

SuiteReport builtin_suite(Suite suite, int n, int g) {
  SuiteReport rep;
  rep.suite = to_string(suite);
  rep.n = n;
  rep.g = g;
  auto cases = builtin_scripts(suite, n, g);
  rep.pass = true;
  for (auto& c : cases) {
    CaseResult r;
    r.id = c.id;
    r.report = check_derivation(c.script);
    r.pass = r.report.pass;
    r.detail = r.report.failure;
    if (r.pass && suite == Suite::TauGamma2) {
      Word rhs(c.script.target);
      auto alphabet = strand_generators(n, g);
      auto ev = exponent_vector(rhs, alphabet);
      bool balanced = std::all_of(ev.begin(), ev.end(), [](long v) { return v == 0; });
      bool off_first = std::all_of(rhs.letters().begin(), rhs.letters().end(),
                                   [](const Letter& x) { return x.gen.first >= 2; });
      if (!balanced || !off_first) {
        r.pass = false;
        r.detail = !balanced ? "witness has nonzero exponent sum" : "witness uses a letter on strand 1";
      } else {
        r.detail = "tau[1," + std::string(c.id.substr(c.id.find('=') + 1, c.id.size() - c.id.find('=') - 2)) +
                   "]^-1 = " + to_string(rhs);
      }
    }
    rep.pass = rep.pass && r.pass;
    rep.cases.push_back(std::move(r));
  }
  return rep;
}

SuiteReport builtin_suite(std::string_view name, int n, int g) { return builtin_suite(parse_suite(name), n, g); }

}  // namespace sbraid
