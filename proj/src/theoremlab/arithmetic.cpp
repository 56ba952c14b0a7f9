#include <bit>

#include "ultrahom/error.hpp"
#include "ultrahom/theorems.hpp"

namespace ultrahom {

namespace {

std::uint64_t largest_prime_factor(std::uint64_t n) {
  std::uint64_t best = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      best = p;
      n /= p;
    }
  return n > 1 ? n : best;
}

template <class LPF>
PeelingTrace peel(std::uint64_t order, LPF&& lpf) {
  if (order == 0) throw InputError("order must be positive");
  if (order > 10'000'000) throw InputError("prime peeling is run for orders up to 10^7");
  PeelingTrace t;
  t.order = order;
  t.l0 = static_cast<std::uint64_t>(std::countr_zero(order));
  t.n0 = order >> t.l0;
  std::uint64_t l = t.l0, n = t.n0, ksum = 0;
  t.step_inequalities = true;
  while (n > 1) {
    PeelingStep s;
    s.p = lpf(n);
    s.k = static_cast<std::uint64_t>(std::countr_zero(s.p - 1));
    s.m = (s.p - 1) >> s.k;
    const std::uint64_t before = n;
    n = s.m * (n / s.p);
    l += s.k;
    s.l = l;
    s.n = n;
    ksum += s.k;
    t.step_inequalities &= (n << (1 + s.k)) >= before;
    t.steps.push_back(s);
  }
  t.terminates = n == 1;
  t.within_log_steps = t.steps.size() <= static_cast<std::size_t>(std::bit_width(order) - 1);
  const std::uint64_t exponent = ksum + t.steps.size();
  t.final_bound = exponent >= 63 || t.n0 <= (std::uint64_t{1} << exponent);
  return t;
}

}  // namespace

PeelingTrace prime_peeling_bound(std::uint64_t order) { return peel(order, largest_prime_factor); }

PeelingTrace prime_peeling_bound(std::uint64_t order, const std::vector<std::uint32_t>& lpf) {
  if (order >= lpf.size()) return prime_peeling_bound(order);
  return peel(order, [&](std::uint64_t n) { return std::uint64_t{lpf[n]}; });
}

std::vector<std::uint32_t> largest_prime_factors(std::uint32_t max) {
  std::vector<std::uint32_t> lpf(static_cast<std::size_t>(max) + 1, 0);
  for (std::uint32_t p = 2; p <= max; ++p)
    if (lpf[p] == 0)
      for (std::uint64_t x = p; x <= max; x += p) lpf[x] = p;
  if (max >= 1) lpf[1] = 1;
  return lpf;
}

VerificationReport finite_exponent_dichotomy_scan(const std::vector<std::vector<std::int64_t>>& groups, int max_K) {
  VerificationReport rep;
  for (const auto& factors : groups) {
    std::uint64_t order = 1, two_exponent = 0, even = 0, largest_two = 0;
    for (std::int64_t d : factors) {
      order *= static_cast<std::uint64_t>(d);
      auto v = static_cast<std::uint64_t>(std::countr_zero(static_cast<std::uint64_t>(d)));
      two_exponent += v;
      even += v > 0;
      largest_two = std::max(largest_two, v);
    }
    nlohmann::json in{{"invariant_factors", factors}};
    bool consistent = true;
    nlohmann::json branches = nlohmann::json::array();
    for (std::uint64_t K = 1; K <= static_cast<std::uint64_t>(max_K); ++K) {
      if (two_exponent <= 2 * K * K) continue;
      bool vector = even >= K + 1, cyclic = largest_two > 2 * K;
      consistent &= vector || cyclic;
      branches.push_back({{"K", K}, {"elementary_abelian", vector}, {"large_cyclic", cyclic}});
    }
    in["branches"] = branches;
    rep.check("2-part bookkeeping " + nlohmann::json(factors).dump(), in, consistent);
    if (order <= 10'000'000)
      rep.check("prime peeling " + std::to_string(order), {{"order", order}}, prime_peeling_bound(order).ok());
  }
  return rep;
}

}  // namespace ultrahom
