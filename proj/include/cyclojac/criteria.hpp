#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

#include "cyclojac/integer.hpp"

namespace cyclojac {

/// Parameters of the curve y^q = f(x): deg f = n, q = p^r, p prime not dividing n.
struct CurveParams {
  std::int64_t n = 0;
  std::int64_t p = 0;
  int r = 1;
  std::int64_t q = 0;

  static CurveParams make(std::int64_t n, std::int64_t p, int r) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (r < 1) throw std::invalid_argument("r must be positive");
    if (n < 3) throw std::invalid_argument("degree must be at least 3");
    if (n % p == 0) throw std::invalid_argument("p must not divide n");
    CurveParams c;
    c.n = n;
    c.p = p;
    c.r = r;
    c.q = 1;
    for (int i = 0; i < r; ++i) c.q *= p;
    return c;
  }
};

/// Genus of y^p = f(x) with deg f = n and p not dividing n.
inline std::int64_t genus(std::int64_t n, std::int64_t p) {
  const CurveParams c = CurveParams::make(n, p, 1);
  return (c.n - 1) * (c.p - 1) / 2;
}

/// Dimension of the new part of the jacobian: phi(q)(n-1)/2.
/// For r = 1 this is the full jacobian dimension (the kernel construction is
/// degenerate there).
inline std::int64_t dim_new_part(std::int64_t n, std::int64_t q, std::int64_t p) {
  std::int64_t pr = 1;
  int r = 0;
  while (pr < q) {
    pr *= p;
    ++r;
  }
  if (pr != q) throw std::invalid_argument("q must be a power of p");
  const CurveParams c = CurveParams::make(n, p, std::max(r, 1));
  if (c.r == 1) return (c.n - 1) * (c.p - 1) / 2;
  return (c.n - 1) * (c.q - 1) / 2 - (c.n - 1) * (c.q / c.p - 1) / 2;
}

/// The multiplicities i -> floor(n*i/q) over 0 < i < q with p not dividing i,
/// together with their sum and gcd (zero entries ignored in the gcd).
struct CMProfile {
  std::map<std::int64_t, std::int64_t> entries;
  std::int64_t total = 0;
  std::int64_t gcd = 0;
};

inline CMProfile cm_profile(std::int64_t n, std::int64_t q, std::int64_t p) {
  std::int64_t pr = 1;
  int r = 0;
  while (pr < q) {
    pr *= p;
    ++r;
  }
  if (pr != q) throw std::invalid_argument("q must be a power of p");
  CurveParams::make(n, p, std::max(r, 1));
  CMProfile out;
  for (std::int64_t i = 1; i < q; ++i) {
    if (i % p == 0) continue;
    const std::int64_t v = n * i / q;
    out.entries.emplace(i, v);
    out.total += v;
    out.gcd = std::gcd(out.gcd, v);
  }
  return out;
}

/// d(n,q): gcd of the CM multiplicities.
inline std::int64_t d_nq(std::int64_t n, std::int64_t q, std::int64_t p) {
  const CMProfile prof = cm_profile(n, q, p);
  if (prof.gcd == 0) throw std::logic_error("all multiplicities vanish");
  return prof.gcd;
}

enum class DnqBranch {
  c_equals_1,       // q | n-1: d = k = (n-1)/q
  odd_p,            // p odd, c > 1: d = 1
  p2_decided,       // p = 2, c > 1, k odd or c < q/2: d = 1
  p2_undetermined,  // p = 2, remaining: d in {1, 2}
};

inline const char* dnq_branch_name(DnqBranch b) {
  switch (b) {
    case DnqBranch::c_equals_1: return "2";
    case DnqBranch::odd_p: return "3";
    case DnqBranch::p2_decided: return "4b";
    case DnqBranch::p2_undetermined: return "4a";
  }
  return "?";
}

/// Case analysis for d(n,q) with n = kq + c, 0 < c < q.
struct DnqCase {
  std::int64_t k = 0;
  std::int64_t c = 0;
  DnqBranch branch = DnqBranch::odd_p;
  std::optional<std::int64_t> value;  // empty on the undetermined branch
  bool value_in_one_or_two = false;   // set on the undetermined branch
};

inline DnqCase d_nq_predicted(std::int64_t n, std::int64_t q, std::int64_t p) {
  std::int64_t pr = 1;
  int r = 0;
  while (pr < q) {
    pr *= p;
    ++r;
  }
  if (pr != q) throw std::invalid_argument("q must be a power of p");
  CurveParams::make(n, p, std::max(r, 1));
  DnqCase out;
  out.k = n / q;
  out.c = n - out.k * q;
  if (out.c == 0 || out.c % p == 0) throw std::logic_error("c must be coprime to p");
  if (out.c == 1) {
    out.branch = DnqBranch::c_equals_1;
    out.value = out.k;
  } else if (p != 2) {
    out.branch = DnqBranch::odd_p;
    out.value = 1;
  } else if (out.k % 2 == 1 || 2 * out.c < q) {
    out.branch = DnqBranch::p2_decided;
    out.value = 1;
  } else {
    out.branch = DnqBranch::p2_undetermined;
    out.value_in_one_or_two = true;
  }
  return out;
}

/// Re-runs the arithmetic steps behind the d(n,q) case analysis and throws on
/// any violated inequality.  m is the smallest integer with m*c > q.
inline void check_dnq_proof_steps(std::int64_t n, std::int64_t q, std::int64_t p) {
  const DnqCase cs = d_nq_predicted(n, q, p);
  const std::int64_t k = cs.k, c = cs.c;
  const auto fail = [&](const std::string& what) {
    throw std::logic_error("d(n,q) case analysis failed for n=" + std::to_string(n) +
                           ", q=" + std::to_string(q) + ": " + what);
  };
  if (n * 1 / q != k) fail("[n/q] != k");
  if (c == 1) {
    for (std::int64_t i = 1; i < q; ++i)
      if (i % p != 0 && n * i / q != i * k) fail("[ni/q] != ik on the c=1 branch");
    return;
  }
  const std::int64_t m = q / c + 1;  // smallest m with m*c > q, using p !| c so c !| q
  if (m * c <= q) fail("m*c <= q");
  if ((m - 1) * c >= q) fail("(m-1)*c >= q");
  if (m * c >= 2 * q) fail("m*c >= 2q");
  if (m < 2) fail("m < 2");
  if (m % p != 0) {
    if (n * m / q != k * m + 1) fail("[nm/q] != km+1");
    return;
  }
  // m divisible by p
  if ((m + 1) % p == 0) fail("m+1 divisible by p");
  if (m + 1 >= q) fail("m+1 >= q");
  if (2 * c == q) fail("c == q/2");
  if (2 * c < q) {
    if ((m + 1) * c >= 2 * q) fail("(m+1)c >= 2q");
    if (n * (m + 1) / q != k * m + 1) fail("[n(m+1)/q] != km+1");
    return;
  }
  // c > q/2 forces m = 2
  if (m != 2) fail("c > q/2 but m != 2");
  if (p != 2) {
    if (n * 2 / q != 2 * k + 1) fail("[2n/q] != 2k+1");
    return;
  }
  // p = 2, c > q/2: use i = 3 < q
  if (q < 4) fail("q < 4 with p = 2");
  const std::int64_t t = 3 * c;
  if (q < t && t < 2 * q) {
    if (n * 3 / q != 3 * k + 1) fail("[3n/q] != 3k+1");
  } else if (2 * q < t && t < 3 * q) {
    if (n * 3 / q != 3 * k + 2) fail("[3n/q] != 3k+2");
    if (std::gcd(k, 3 * k + 2) > 2) fail("gcd(k, 3k+2) > 2");
  } else {
    fail("3c hits a multiple of q");
  }
}

/// d_{X,E} for the jacobian with cyclotomic multiplication.
inline std::int64_t relative_dim(std::int64_t n) {
  if (n < 3) throw std::invalid_argument("degree must be at least 3");
  return n - 1;
}

}  // namespace cyclojac
