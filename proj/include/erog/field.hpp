#pragma once

#include <cstdint>
#include <vector>

namespace erog {

// GF(q) and its quadratic extension GF(q^2), q prime.
//
// Elements of GF(q^2) are encoded as a + b*omega -> index a + b*q with
// a, b in [0, q).  omega satisfies omega^2 = c1*omega + c0, where the
// reduction polynomial is x^2+x+1 for q=2 and x^2-n (n the smallest
// quadratic non-residue) for odd q.
struct FieldCtx {
    int q = 0;
    int q2 = 0;           // q*q
    int red_c0 = 0;       // omega^2 = c1*omega + c0
    int red_c1 = 0;

    std::vector<uint16_t> inv_tab;   // GF(q^2) inverses; inv_tab[0] unused
    std::vector<uint16_t> norm_tab;  // a^(q+1), landing in GF(q) (returned as [0,q))

    int a_of(int e) const { return e % q; }
    int b_of(int e) const { return e / q; }
    int make(int a, int b) const { return a + b * q; }

    int add(int x, int y) const {
        int a = (a_of(x) + a_of(y)) % q;
        int b = (b_of(x) + b_of(y)) % q;
        return make(a, b);
    }
    int neg(int x) const {
        int a = (q - a_of(x)) % q;
        int b = (q - b_of(x)) % q;
        return make(a, b);
    }
    int sub(int x, int y) const { return add(x, neg(y)); }

    int mul(int x, int y) const {
        // (a+bw)(c+dw) = ac + (ad+bc)w + bd*w^2,  w^2 = c1*w + c0
        int64_t a = a_of(x), b = b_of(x), c = a_of(y), d = b_of(y);
        int64_t bd = b * d;
        int64_t ra = (a * c + bd * red_c0) % q;
        int64_t rb = (a * d + b * c + bd * red_c1) % q;
        return make(static_cast<int>(ra), static_cast<int>(rb));
    }

    int pow(int x, uint64_t e) const {
        int r = 1;
        while (e) {
            if (e & 1) r = mul(r, x);
            x = mul(x, x);
            e >>= 1;
        }
        return r;
    }

    int inv(int x) const { return inv_tab[x]; }

    // a^(q+1); always in the base subfield.
    int norm(int x) const { return norm_tab[x]; }

    // Base-field helpers (GF(q) scalars as ints in [0,q)).
    int base_add(int a, int b) const { return (a + b) % q; }
};

// Throws std::invalid_argument("unsupported order") unless q is prime and
// 2 <= q <= ceiling.
FieldCtx build_field(int q, int ceiling = 37);

bool is_prime(int n);

}  // namespace erog
