#include "brumer/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace brumer {

namespace {

std::vector<Integer> exact_divide(std::vector<Integer> num, const std::vector<Integer>& den) {
  // Both monic, constant term first.
  const std::size_t dn = den.size() - 1;
  std::vector<Integer> q(num.size() - dn);
  for (std::size_t top = num.size(); top-- > dn;) {
    Integer lead = num[top];
    q[top - dn] = lead;
    if (lead == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[top - dn + j] -= lead * den[j];
  }
  return q;
}

}  // namespace

long euler_phi(long m) {
  long r = m;
  for (long p : prime_factors(m)) r = r / p * (p - 1);
  return r;
}

const std::vector<Integer>& cyclotomic_polynomial(long m) {
  static std::mutex mu;
  static std::map<long, std::unique_ptr<std::vector<Integer>>> cache;
  if (m < 1) fail(ErrorCode::kInvalidArgument, "cyclotomic conductor must be positive");
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return *it->second;
  }
  std::vector<Integer> poly(static_cast<std::size_t>(m) + 1);
  poly[0] = -1;
  poly[static_cast<std::size_t>(m)] = 1;
  for (long d = 1; d < m; ++d) {
    if (m % d == 0) poly = exact_divide(std::move(poly), cyclotomic_polynomial(d));
  }
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(m, std::make_unique<std::vector<Integer>>(std::move(poly)));
  return *it->second;
}

CyclotomicRational to_rational(const CyclotomicInteger& x) {
  std::vector<Rational> sums(x.coefficients().begin(), x.coefficients().end());
  return CyclotomicRational::from_power_sums(x.conductor(), std::move(sums));
}

}  // namespace brumer
