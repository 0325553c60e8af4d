#include "sbraid/nilpotent.hpp"

#include <mutex>
#include <tuple>

#include "sbraid/error.hpp"

namespace sbraid {

namespace {

std::uint32_t pivot_of(const Exponents& e) { return e.begin()->first; }

}  // namespace

NilpotentQuotient::NilpotentQuotient(const Presentation& p, int nilpotency_class, ResourceLimits limits)
    : generators_(p.generators),
      basis_([&] {
        if (nilpotency_class < 1 || nilpotency_class > 3) {
          throw ParameterError("nilpotency class must be 1, 2 or 3 (got " + std::to_string(nilpotency_class) + ")");
        }
        std::size_t need = HallBasis::count(static_cast<int>(p.generators.size()), nilpotency_class);
        if (need > limits.max_basis) {
          throw ResourceLimitError("Hall basis of size " + std::to_string(need) + " for " +
                                   std::to_string(p.generators.size()) + " generators at class " +
                                   std::to_string(nilpotency_class) + " exceeds the limit " +
                                   std::to_string(limits.max_basis));
        }
        return std::make_unique<HallBasis>(static_cast<int>(p.generators.size()), nilpotency_class);
      }()),
      collector_(*basis_),
      limits_(limits) {
  const int c = nilpotency_class;
  std::vector<Exponents> pending;
  for (const Word& r : p.relators) pending.push_back(collect(r));

  auto drain = [&] {
    while (!pending.empty()) {
      Exponents h = std::move(pending.back());
      pending.pop_back();
      sift_insert(std::move(h), pending);
    }
  };
  drain();

  // Close under commutators with generators (normality) and between rows
  // (subgroup closure) until nothing changes.
  const int m = basis_->generators();
  std::map<std::uint32_t, Exponents> seen;
  for (;;) {
    std::vector<std::pair<std::uint32_t, Exponents>> fresh;
    for (const auto& [piv, row] : rows_) {
      auto it = seen.find(piv);
      if (it == seen.end() || it->second != row) fresh.emplace_back(piv, row);
    }
    if (fresh.empty()) break;
    for (const auto& [piv, row] : fresh) seen[piv] = row;

    for (const auto& [piv, row] : fresh) {
      const int w = basis_->weight(piv);
      if (w + 1 > c) continue;
      for (int k = 0; k < m; ++k) {
        Exponents x;
        x.emplace(static_cast<std::uint32_t>(k), 1);
        pending.push_back(collector_.commutator(row, x));
      }
      for (const auto& [piv2, row2] : seen) {
        if (w + basis_->weight(piv2) > c) continue;
        pending.push_back(collector_.commutator(row, row2));
      }
    }
    drain();
  }
}

void NilpotentQuotient::check_budget() {
  if (++sift_steps_ > limits_.max_sift_steps) {
    throw ResourceLimitError("sifting exceeded " + std::to_string(limits_.max_sift_steps) + " steps with " +
                             std::to_string(rows_.size()) + " rows over a basis of size " +
                             std::to_string(basis_->size()));
  }
}

void NilpotentQuotient::sift_insert(Exponents h, std::vector<Exponents>& pending) {
  while (!h.empty()) {
    check_budget();
    const std::uint32_t p = pivot_of(h);
    auto it = rows_.find(p);
    if (it == rows_.end()) {
      if (h.begin()->second < 0) h = collector_.inverse(h);
      rows_.emplace(p, std::move(h));
      return;
    }
    const Exponents& r = it->second;
    const Integer d = r.begin()->second;
    const Integer hp = h.begin()->second;
    if (mpz_divisible_p(hp.get_mpz_t(), d.get_mpz_t())) {
      Integer q = hp / d;
      h = collector_.multiply(h, collector_.power(r, -q));
      continue;
    }
    // replace the row by h^s r^t with leading entry gcd(hp, d)
    Integer e, s, t;
    mpz_gcdext(e.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), hp.get_mpz_t(), d.get_mpz_t());
    Exponents combined = collector_.multiply(collector_.power(h, s), collector_.power(r, t));
    Exponents old = r;
    it->second = combined;
    pending.push_back(collector_.multiply(old, collector_.power(combined, -(d / e))));
    pending.push_back(collector_.multiply(h, collector_.power(combined, -(hp / e))));
    return;
  }
}

Exponents NilpotentQuotient::collect(const Word& w) const { return collector_.collect(w, generators_); }

CollectedWord NilpotentQuotient::evaluate(const Word& w) const {
  Exponents h = collect(w);
  for (const auto& [p, r] : rows_) {
    auto hit = h.find(p);
    if (hit == h.end()) continue;
    const Integer& d = r.begin()->second;
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), hit->second.get_mpz_t(), d.get_mpz_t());
    if (q != 0) h = collector_.multiply(h, collector_.power(r, -q));
  }
  return {basis_.get(), std::move(h)};
}

LcsQuotients NilpotentQuotient::quotients() const {
  LcsQuotients out;
  const int c = nilpotency_class();
  out.nilpotency_class = c;
  for (int i = 1; i <= c; ++i) {
    const std::size_t lo = basis_->weight_begin(i);
    const std::size_t hi = basis_->weight_end(i);
    std::vector<SparseVector> block;
    for (auto it = rows_.lower_bound(static_cast<std::uint32_t>(lo)); it != rows_.end() && it->first < hi; ++it) {
      SparseVector v;
      for (auto e = it->second.begin(); e != it->second.end() && e->first < hi; ++e) {
        v.emplace(static_cast<std::uint32_t>(e->first - lo), e->second);
      }
      block.push_back(std::move(v));
    }
    AbelianInvariants inv = quotient_invariants(std::move(block), hi - lo);
    out.pieces.push_back({i, inv.rank, inv.torsion});
    out.rational_ranks.push_back(inv.rank);
    if (!out.stabilizes_at && inv.trivial()) out.stabilizes_at = i;
  }
  return out;
}

LcsQuotients lcs_quotients(const Presentation& p, int nilpotency_class, ResourceLimits limits) {
  return NilpotentQuotient(p, nilpotency_class, limits).quotients();
}

AbelianInvariants abelian_invariants(const Presentation& p) {
  std::vector<SparseVector> rows;
  for (const Word& r : p.relators) {
    auto ev = exponent_vector(r, p.generators);
    SparseVector v;
    for (std::size_t i = 0; i < ev.size(); ++i) {
      if (ev[i] != 0) v.emplace(static_cast<std::uint32_t>(i), ev[i]);
    }
    rows.push_back(std::move(v));
  }
  return quotient_invariants(std::move(rows), p.generators.size());
}

Integer witt_rank(int m, int k) {
  if (m < 1 || k < 1) throw ParameterError("witt_rank needs m >= 1 and k >= 1");
  auto mobius = [](int d) {
    int mu = 1;
    for (int p = 2; p * p <= d; ++p) {
      if (d % p) continue;
      d /= p;
      if (d % p == 0) return 0;
      mu = -mu;
    }
    return d > 1 ? -mu : mu;
  };
  Integer sum = 0;
  for (int d = 1; d <= k; ++d) {
    if (k % d) continue;
    Integer term;
    mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(k / d));
    sum += mobius(d) * term;
  }
  return sum / k;
}

const NilpotentQuotient& cached_quotient(Preset preset, int n, int g, int nilpotency_class) {
  static std::mutex mu;
  static std::map<std::tuple<Preset, int, int, int>, std::unique_ptr<NilpotentQuotient>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{preset, n, g, nilpotency_class}];
  if (!slot) slot = std::make_unique<NilpotentQuotient>(build_presentation(preset, n, g), nilpotency_class);
  return *slot;
}

CollectedWord evaluate_in_quotient(const Word& w, const Presentation& p, int nilpotency_class) {
  return cached_quotient(p.preset, p.n, p.g, nilpotency_class).evaluate(w);
}

}  // namespace sbraid
