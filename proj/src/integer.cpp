#include "csa/integer.hpp"

#include "csa/error.hpp"

namespace csa {

bool is_prime(const Int& n) { return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 64) > 0; }

Int next_prime(const Int& n) {
    Int r;
    mpz_nextprime(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

namespace {

Int rho_divisor(const Int& n) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (unsigned long c = 1;; ++c) {
        Int y = 2, x, q = 1, g = 1, ys;
        Int r = 1;
        const unsigned long m = 64;
        auto f = [&](const Int& v) {
            Int out = v * v + c;
            mpz_mod(out.get_mpz_t(), out.get_mpz_t(), n.get_mpz_t());
            return out;
        };
        do {
            x = y;
            for (Int i = 0; i < r; ++i) y = f(y);
            Int k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < m && k + i < r; ++i) {
                    y = f(y);
                    Int diff = abs(Int(x - y));
                    q = q * diff;
                    mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                Int diff = abs(Int(x - ys));
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_into(Int n, std::map<Int, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    Int d = rho_divisor(n);
    factor_into(d, out);
    factor_into(Int(n / d), out);
}

}  // namespace

std::map<Int, unsigned> factor_integer(const Int& n) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "cannot factor zero");
    std::map<Int, unsigned> out;
    Int m = abs(n);
    for (unsigned long p = 2; p < 10000 && m > 1; p += (p == 2 ? 1 : 2)) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            ++out[Int(p)];
            m /= p;
        }
        if (Int(p) * p > m) break;
    }
    factor_into(m, out);
    return out;
}

}  // namespace csa
