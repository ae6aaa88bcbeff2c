#include "castleqec/semigroup.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace castleqec {

NumericalSemigroup::NumericalSemigroup(std::vector<int> generators) : generators_(std::move(generators)) {
  if (generators_.empty()) throw std::invalid_argument("semigroup needs at least one generator");
  int g = 0;
  for (int a : generators_) {
    if (a <= 0) throw std::invalid_argument("semigroup generators must be positive");
    g = std::gcd(g, a);
  }
  if (g != 1) throw std::invalid_argument("generators have gcd " + std::to_string(g) + ", not a numerical semigroup");

  multiplicity_ = *std::min_element(generators_.begin(), generators_.end());
  // Sieve until multiplicity_ consecutive members appear; from there on
  // every integer is reachable by adding the smallest generator.
  std::vector<char> in{1};
  int run = 1;
  int last_gap = -1;
  for (int x = 1; run < multiplicity_; ++x) {
    char hit = 0;
    for (int a : generators_)
      if (x >= a && in[x - a]) {
        hit = 1;
        break;
      }
    in.push_back(hit);
    if (hit) {
      ++run;
    } else {
      run = 0;
      last_gap = x;
    }
  }
  conductor_ = last_gap + 1;
  member_.assign(in.begin(), in.begin() + conductor_);
  prefix_.assign(static_cast<std::size_t>(conductor_) + 1, 0);
  for (int x = 0; x < conductor_; ++x) {
    prefix_[x + 1] = prefix_[x] + (member_[x] ? 1 : 0);
    if (!member_[x]) gaps_.push_back(x);
  }
}

bool NumericalSemigroup::contains(long long x) const {
  if (x < 0) return false;
  if (x >= conductor_) return true;
  return member_[static_cast<std::size_t>(x)] != 0;
}

bool NumericalSemigroup::is_symmetric() const {
  const int g = genus();
  if (g == 0) return true;
  return frobenius_number() == 2 * g - 1;
}

long long NumericalSemigroup::ell(long long m) const {
  if (m < 0) return 0;
  if (m >= conductor_) return m + 1 - genus();
  return prefix_[static_cast<std::size_t>(m) + 1];
}

long long NumericalSemigroup::element(long long r) const {
  if (r < 1) throw std::invalid_argument("semigroup index starts at 1");
  const long long below = prefix_[static_cast<std::size_t>(conductor_)];
  if (r > below) return conductor_ + (r - below - 1);
  for (int x = 0; x < conductor_; ++x)
    if (member_[x] && prefix_[x + 1] == r) return x;
  return -1;  // unreachable
}

std::vector<int> NumericalSemigroup::elements_up_to(int bound) const {
  std::vector<int> out;
  for (int x = 0; x <= bound; ++x)
    if (contains(x)) out.push_back(x);
  return out;
}

std::vector<int> NumericalSemigroup::dimension_set(int n) const {
  if (n < 1) throw std::invalid_argument("length must be positive");
  // m_i = min{m : l(m) - l(m - n) >= i}. This is S \ (n + S) when n is in
  // S; otherwise that difference has more than n elements.
  std::vector<int> out;
  long long reached = 0;
  for (long long m = 0; static_cast<int>(out.size()) < n; ++m) {
    const long long d = ell(m) - ell(m - n);
    while (reached < d && static_cast<int>(out.size()) < n) {
      out.push_back(static_cast<int>(m));
      ++reached;
    }
  }
  return out;
}

long long NumericalSemigroup::nu_at(long long rho) const {
  if (rho < 0 || !contains(rho)) return 0;
  long long count = 0;
  for (long long s = 0; s <= rho; ++s)
    if (contains(s) && contains(rho - s)) ++count;
  return count;
}

long long NumericalSemigroup::order_bound(long long m) const {
  // nu_at(rho) = rho + 1 - 2g once rho >= 2c - 1, increasing from there.
  const long long start = std::max<long long>(m + 1, 0);
  const long long stop = std::max<long long>(start, 2LL * conductor_) + 1;
  long long best = std::numeric_limits<long long>::max();
  for (long long rho = start; rho <= stop; ++rho)
    if (contains(rho)) best = std::min(best, nu_at(rho));
  return best;
}

NumericalSemigroup sg_generate(const std::vector<int>& generators) { return NumericalSemigroup(generators); }
bool sg_is_symmetric(const NumericalSemigroup& s) { return s.is_symmetric(); }
long long sg_ell(const NumericalSemigroup& s, long long m) { return s.ell(m); }
std::vector<int> sg_dimension_set(const NumericalSemigroup& s, int n) { return s.dimension_set(n); }
long long sg_nu_sequence(const NumericalSemigroup& s, long long r) { return s.nu(r); }

}  // namespace castleqec
