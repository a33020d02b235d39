#ifndef LATTICEBANDS_CYCLOTOMIC_HPP
#define LATTICEBANDS_CYCLOTOMIC_HPP

#include <cstdint>
#include <vector>

namespace latticebands {

// Exact arithmetic with integer combinations of roots of unity of order M,
// represented in the basis of Z[x]/Phi_M(x). Used to decide, without floating
// comparisons, when sums like 2cos(pi a/N) + 2cos(pi b/N) coincide.
class CyclotomicField {
 public:
  using Element = std::vector<std::int64_t>;  // coordinates, length degree()

  explicit CyclotomicField(int order);

  int order() const { return order_; }
  int degree() const { return static_cast<int>(phi_.size()) - 1; }

  Element zero_element() const { return Element(degree(), 0); }

  // elem += coeff * zeta^e  (zeta a primitive order-M root of unity)
  void add_root_power(Element& elem, int e, std::int64_t coeff = 1) const;

  // 2 cos(2 pi k / M) = zeta^k + zeta^-k as an exact element.
  Element two_cos(int k) const;

  static bool is_zero(const Element& e);

 private:
  int order_;
  std::vector<std::int64_t> phi_;                      // Phi_M, ascending powers
  std::vector<std::vector<std::int64_t>> power_table_;  // x^k mod Phi_M, k < M
};

}  // namespace latticebands

#endif
