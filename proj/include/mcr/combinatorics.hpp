#ifndef MCR_COMBINATORICS_HPP
#define MCR_COMBINATORICS_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace mcr {

using BigInt = boost::multiprecision::cpp_int;

// C(n, i), exact. Throws std::out_of_range unless 0 <= i <= n.
BigInt binom(int n, int i);

// sum_{i=0..k} C(n, i), exact. Throws std::out_of_range unless 0 <= k <= n.
BigInt binom_prefix_sum(int n, int k);

// Whether sum_{i=0..k} C(n, i) <= 2 C(n, k) holds, checked exactly.
bool lemma2_holds(int n, int k);

// The tractability threshold (n+1)/3 and the largest integer strictly
// below it.
struct AlphaThreshold {
  int n = 0;
  int numerator = 1;    // n + 1
  int denominator = 3;
  int alpha_int = 0;    // greatest k with 3k < n + 1

  double alpha_real() const {
    return static_cast<double>(numerator) / denominator;
  }
};

AlphaThreshold alpha_threshold(int n);

}  // namespace mcr

#endif  // MCR_COMBINATORICS_HPP
