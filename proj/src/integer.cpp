#include "g2/integer.hpp"

#include <algorithm>
#include <stdexcept>

namespace g2 {

bool is_square(const Int& n, Int* root) {
    if (n < 0) return false;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) {
        if (root) mpz_sqrt(root->get_mpz_t(), n.get_mpz_t());
        return false;
    }
    if (root) mpz_sqrt(root->get_mpz_t(), n.get_mpz_t());
    return true;
}

unsigned valuation(const Int& n, const Int& p) {
    if (n == 0) throw std::invalid_argument("valuation of zero");
    Int m;
    unsigned v = static_cast<unsigned>(mpz_remove(m.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
    return v;
}

Int ipow(const Int& b, unsigned e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

namespace {

Int pollard_brent(const Int& n, unsigned long seed) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    Int y = seed % 1000 + 2, c = seed % 97 + 1, g = 1, q = 1, x, ys;
    const unsigned long m = 128;
    unsigned long r = 1;
    auto step = [&](const Int& v) {
        Int t = v * v + c;
        mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
        return t;
    };
    while (g == 1) {
        x = y;
        for (unsigned long i = 0; i < r; ++i) y = step(y);
        unsigned long k = 0;
        while (k < r && g == 1) {
            ys = y;
            for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                y = step(y);
                Int d = abs(x - y);
                q = q * d;
                mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            }
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            k += m;
        }
        r *= 2;
    }
    if (g == n) {
        do {
            ys = step(ys);
            Int d = abs(x - ys);
            mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        } while (g == 1);
    }
    return g;
}

void factor_into(const Int& n, std::map<Int, unsigned>& out) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 40) > 0) {
        out[n] += 1;
        return;
    }
    Int s;
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        for (unsigned k = 2;; ++k) {
            if (mpz_root(s.get_mpz_t(), n.get_mpz_t(), k) != 0) {
                std::map<Int, unsigned> sub;
                factor_into(s, sub);
                for (auto& [p, e] : sub) out[p] += e * k;
                return;
            }
        }
    }
    for (unsigned long seed = 1;; ++seed) {
        Int d = pollard_brent(n, seed);
        if (d != n && d != 1) {
            factor_into(d, out);
            Int rest = n / d;
            factor_into(rest, out);
            return;
        }
    }
}

}  // namespace

std::map<Int, unsigned> factor(const Int& n) {
    if (n == 0) throw std::invalid_argument("factor of zero");
    std::map<Int, unsigned> out;
    Int m = abs(n);
    for (unsigned long p = 2; p < 10000 && m > 1; ++p) {
        if (p > 2 && p % 2 == 0) continue;
        if (Int(p) * Int(p) > m) break;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
            out[Int(p)] += 1;
        }
    }
    if (m > 1) factor_into(m, out);
    return out;
}

Int bareiss_determinant(std::vector<std::vector<Int>> m) {
    const size_t n = m.size();
    if (n == 0) return 1;
    int sign = 1;
    Int prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

}  // namespace g2
