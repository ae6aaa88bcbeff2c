#ifndef CASTLEQEC_SEMIGROUP_HPP
#define CASTLEQEC_SEMIGROUP_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace castleqec {

/// A numerical semigroup given by generators with gcd 1.
///
/// Membership below the conductor is tabulated; everything at or above the
/// conductor is an element, so every query is exact for any argument and
/// the object never needs to grow after construction.
class NumericalSemigroup {
public:
  explicit NumericalSemigroup(std::vector<int> generators);

  const std::vector<int>& generators() const { return generators_; }
  const std::vector<int>& gaps() const { return gaps_; }
  int genus() const { return static_cast<int>(gaps_.size()); }
  int conductor() const { return conductor_; }
  /// Least nonzero element (rho_2).
  int multiplicity() const { return multiplicity_; }
  /// Largest gap, -1 when there are none.
  int frobenius_number() const { return conductor_ - 1; }

  bool contains(long long x) const;
  bool is_symmetric() const;

  /// #{s in S : 0 <= s <= m}, i.e. l(mQ).
  long long ell(long long m) const;
  /// rho_r for r >= 1 (rho_1 = 0).
  long long element(long long r) const;
  /// Elements in [0, bound], ascending.
  std::vector<int> elements_up_to(int bound) const;

  /// m_1 < ... < m_n with m_i = min{m : l(m) - l(m - n) >= i}; equals
  /// S \ (n + S) when n is in S.
  std::vector<int> dimension_set(int n) const;

  /// #{(s, t) in S x S : s + t = rho}.
  long long nu_at(long long rho) const;
  /// nu(r) = nu_at(rho_r).
  long long nu(long long r) const { return nu_at(element(r)); }
  /// min{nu(r) : rho_r > m}: lower bound for the dual distance of C(mQ).
  long long order_bound(long long m) const;

  bool operator==(const NumericalSemigroup& o) const { return gaps_ == o.gaps_; }

private:
  std::vector<int> generators_;
  std::vector<int> gaps_;
  std::vector<char> member_;  // indices [0, conductor)
  std::vector<int> prefix_;   // prefix_[x] = #{s in S : s < x}, x <= conductor
  int conductor_ = 0;
  int multiplicity_ = 1;
};

NumericalSemigroup sg_generate(const std::vector<int>& generators);
bool sg_is_symmetric(const NumericalSemigroup& s);
long long sg_ell(const NumericalSemigroup& s, long long m);
std::vector<int> sg_dimension_set(const NumericalSemigroup& s, int n);
long long sg_nu_sequence(const NumericalSemigroup& s, long long r);

}  // namespace castleqec

#endif  // CASTLEQEC_SEMIGROUP_HPP
