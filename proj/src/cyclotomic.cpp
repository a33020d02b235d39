#include "latticebands/cyclotomic.hpp"

#include <algorithm>
#include <stdexcept>

namespace latticebands {

namespace {

using Poly = std::vector<std::int64_t>;  // ascending powers

// Exact division of integer polynomials; num must be divisible by den.
Poly divide_exact(Poly num, const Poly& den) {
  if (den.empty() || den.back() == 0)
    throw std::logic_error("cyclotomic: bad divisor");
  if (num.size() < den.size()) throw std::logic_error("cyclotomic: degree underflow");
  Poly quot(num.size() - den.size() + 1, 0);
  for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
    std::int64_t lead = num[k + den.size() - 1];
    if (lead % den.back() != 0) throw std::logic_error("cyclotomic: inexact division");
    std::int64_t c = lead / den.back();
    quot[k] = c;
    for (std::size_t i = 0; i < den.size(); ++i) num[k + i] -= c * den[i];
  }
  for (std::int64_t c : num)
    if (c != 0) throw std::logic_error("cyclotomic: nonzero remainder");
  return quot;
}

// Phi_n via Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d.
Poly cyclotomic_poly(int n, std::vector<Poly>& cache) {
  if (static_cast<int>(cache.size()) <= n) cache.resize(n + 1);
  if (!cache[n].empty()) return cache[n];
  Poly num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    num = divide_exact(std::move(num), cyclotomic_poly(d, cache));
  }
  cache[n] = num;
  return num;
}

}  // namespace

CyclotomicField::CyclotomicField(int order) : order_(order) {
  if (order < 1) throw std::invalid_argument("CyclotomicField: order must be >= 1");
  std::vector<Poly> cache;
  phi_ = cyclotomic_poly(order, cache);
  const int d = degree();
  power_table_.assign(order_, std::vector<std::int64_t>(d, 0));
  // x^k mod Phi: carry forward, reducing by the (monic) Phi when degree hits d.
  std::vector<std::int64_t> cur(d, 0);
  cur[0] = 1;
  power_table_[0] = cur;
  for (int k = 1; k < order_; ++k) {
    std::int64_t top = cur[d - 1];
    for (int i = d - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (int i = 0; i < d; ++i) cur[i] -= top * phi_[i];
    power_table_[k] = cur;
  }
}

void CyclotomicField::add_root_power(Element& elem, int e, std::int64_t coeff) const {
  e %= order_;
  if (e < 0) e += order_;
  const auto& pw = power_table_[e];
  for (int i = 0; i < degree(); ++i) elem[i] += coeff * pw[i];
}

CyclotomicField::Element CyclotomicField::two_cos(int k) const {
  Element e = zero_element();
  add_root_power(e, k);
  add_root_power(e, -k);
  return e;
}

bool CyclotomicField::is_zero(const Element& e) {
  return std::all_of(e.begin(), e.end(), [](std::int64_t c) { return c == 0; });
}

}  // namespace latticebands
