#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace g2 {

using Int = mpz_class;

inline std::string to_dec(const Int& z) { return z.get_str(10); }
inline Int from_dec(const std::string& s) { return Int(s, 10); }

// Exact square test; sets root to floor(sqrt(n)) when n >= 0.
bool is_square(const Int& n, Int* root = nullptr);

// Valuation of n at p; n must be nonzero.
unsigned valuation(const Int& n, const Int& p);

// Full factorization |n| = prod p^e for n != 0 (Pollard-Brent with Miller-Rabin).
std::map<Int, unsigned> factor(const Int& n);

// Exact determinant of a square integer matrix (fraction-free Bareiss elimination).
Int bareiss_determinant(std::vector<std::vector<Int>> m);

// Fast integer power.
Int ipow(const Int& b, unsigned e);

}  // namespace g2
