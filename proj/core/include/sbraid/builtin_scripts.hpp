#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sbraid/derivation.hpp"

namespace sbraid {

enum class Suite { Lemma41_1, Lemma41_2, IdentityA, IdentityB, TauGamma2, Splitting };

std::string to_string(Suite suite);
Suite parse_suite(std::string_view name);  // "lemma41-1", ..., "splitting"
const std::vector<Suite>& all_suites();

// c selects the letter family of the product: 1 for a, 2 for b.
Word strand_product(int kind_choice, int from, int to, int k);  // c_{from,k} ... c_{to,k}
Word tee(int l, int q);                                         // T_{l,q} = tau_{l,l+1} ... tau_{l,q}

// (c_l ... c_q) T_{l,q} => T_{l,q} (c_l ... c_q)
DerivationScript lemma41_1_script(int l, int q, int k, int c, int n, int g);
// ^{b_{l,k}}(a_{l+1,k} ... a_{q,k}) => (a_{l+1,k} ... a_{q,k}) T_{l,q}
DerivationScript lemma41_2_script(int l, int q, int k, int n, int g);
// (tau_{i,l}^-1 c_{l,k} tau_{i,l}) tau_{i,j} (...)^-1 => tau_{i,j}, i < l < j
DerivationScript identity_a_script(int i, int l, int j, int k, int c, int n, int g);
// (c_l ... c_q) tau_{l,q} => tau_{l,q} (c_l ... c_q)
DerivationScript identity_b_script(int l, int q, int k, int c, int n, int g);
// tau_{1,l}^-1 => product of commutators of letters on strands >= 2
DerivationScript tau_gamma2_script(int l, int n, int g);
Word tau_gamma2_witness(int l, int n, int g);
// prod [s(c_i)^-1, s(d_i)] (as c/d word, sections substituted by the script) => 1
DerivationScript splitting_script(int n, int g);
RawWord surface_relator_letters(int g);

struct SuiteCase {
  std::string id;
  DerivationScript script;
};

// Every valid index choice of the suite for (n, g).  Throws ParameterError
// when n < 2 or g < 1.
std::vector<SuiteCase> builtin_scripts(Suite suite, int n, int g);

struct CaseResult {
  std::string id;
  bool pass = false;
  std::string detail;
  DerivationReport report;
};

struct SuiteReport {
  std::string suite;
  int n = 0;
  int g = 0;
  bool pass = false;
  std::vector<CaseResult> cases;
};

SuiteReport builtin_suite(Suite suite, int n, int g);
SuiteReport builtin_suite(std::string_view name, int n, int g);

}  // namespace sbraid
