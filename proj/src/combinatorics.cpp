#include "mcr/combinatorics.hpp"

#include <stdexcept>
#include <string>

namespace mcr {

namespace {

void check_range(int n, int i, const char* what) {
  if (n < 0 || i < 0 || i > n) {
    throw std::out_of_range(std::string(what) + "(" + std::to_string(n) +
                            ", " + std::to_string(i) + ") out of range");
  }
}

}  // namespace

BigInt binom(int n, int i) {
  check_range(n, i, "binom");
  if (i > n - i) i = n - i;
  BigInt value = 1;
  for (int j = 1; j <= i; ++j) {
    value *= n - i + j;
    value /= j;  // exact: value is C(n - i + j, j) here
  }
  return value;
}

BigInt binom_prefix_sum(int n, int k) {
  check_range(n, k, "binom_prefix_sum");
  BigInt term = 1;
  BigInt sum = 1;
  for (int i = 1; i <= k; ++i) {
    term *= n - i + 1;
    term /= i;
    sum += term;
  }
  return sum;
}

bool lemma2_holds(int n, int k) {
  return binom_prefix_sum(n, k) <= 2 * binom(n, k);
}

AlphaThreshold alpha_threshold(int n) {
  if (n < 0) throw std::out_of_range("alpha_threshold: negative n");
  AlphaThreshold t;
  t.n = n;
  t.numerator = n + 1;
  t.denominator = 3;
  t.alpha_int = n / 3;  // 3k < n + 1  <=>  k <= n / 3
  return t;
}

}  // namespace mcr
