#pragma once

// Arbitrary-precision signed integers and the exact-arithmetic helpers shared
// by every module. All coefficient arithmetic in the kernel is integral;
// division only ever appears where exactness is mathematically guaranteed,
// and every such division is checked at runtime.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace nval {

using Int = boost::multiprecision::cpp_int;

// A ring division that had to be exact left a remainder. This always means an
// upstream computation is wrong, so callers must never swallow it.
class InexactDivision : public std::runtime_error {
 public:
  explicit InexactDivision(const std::string& what) : std::runtime_error(what) {}
};

// Exact quotient a/b; throws InexactDivision when b does not divide a.
inline Int exact_div(const Int& a, const Int& b) {
  if (b == 0) throw InexactDivision("exact_div: division by zero");
  Int q, r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (r != 0) throw InexactDivision("exact_div: nonzero remainder");
  return q;
}

inline Int ipow(Int base, unsigned long e) {
  Int acc(1);
  while (e != 0) {
    if (e & 1UL) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

inline Int factorial(unsigned long n) {
  Int acc(1);
  for (unsigned long i = 2; i <= n; ++i) acc *= i;
  return acc;
}

inline Int binomial(unsigned long n, unsigned long k) {
  if (k > n) return Int(0);
  if (k > n - k) k = n - k;
  Int acc(1);
  for (unsigned long i = 1; i <= k; ++i) {
    acc *= Int(n - k + i);
    acc /= Int(i);  // exact at every step: C(n-k+i, i) is an integer
  }
  return acc;
}

// (sum parts)! / prod(parts!) — the multinomial coefficient.
inline Int multinomial(const std::vector<unsigned long>& parts) {
  unsigned long total = 0;
  Int acc(1);
  for (unsigned long p : parts) {
    for (unsigned long i = 1; i <= p; ++i) {
      ++total;
      acc *= Int(total);
      acc /= Int(i);
    }
  }
  return acc;
}

inline std::string to_string(const Int& v) { return v.str(); }

inline Int parse_int(const std::string& s) { return Int(s); }

// Scalar hooks used by the generic exact linear algebra (found via ADL).
inline bool ring_is_zero(const Int& v) { return v == 0; }
inline Int ring_one(const Int&) { return Int(1); }
inline Int ring_exact_div(const Int& a, const Int& b) { return exact_div(a, b); }

}  // namespace nval
