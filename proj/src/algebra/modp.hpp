#pragma once

// Dense polynomials over Z/p (p an odd prime below 2^31) and over Z/p^k.
// Coefficients lowest degree first, trimmed.

#include "mvtop/algebra/rat.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace mvtop::modp {

using u64 = std::uint64_t;
using Poly = std::vector<u64>;

u64 inv(u64 a, u64 p);
void trim(Poly& a);
Poly reduce(const std::vector<Int>& f, u64 p);
Poly add(const Poly& a, const Poly& b, u64 p);
Poly sub(const Poly& a, const Poly& b, u64 p);
Poly mul(const Poly& a, const Poly& b, u64 p);
Poly scale(const Poly& a, u64 c, u64 p);
void divmod(const Poly& a, const Poly& b, u64 p, Poly& q, Poly& r);
Poly rem(const Poly& a, const Poly& b, u64 p);
Poly monic(const Poly& a, u64 p);
Poly gcd(Poly a, Poly b, u64 p);
/// s*a + t*b = gcd (monic).
Poly ext_gcd(const Poly& a, const Poly& b, u64 p, Poly& s, Poly& t);
Poly derivative(const Poly& a, u64 p);
Poly powmod(const Poly& base, const Int& e, const Poly& m, u64 p);

/// Monic irreducible factors of a monic squarefree polynomial.
std::vector<Poly> factor_squarefree(const Poly& f, u64 p, std::mt19937_64& rng);

// Arithmetic modulo m = p^k with Int coefficients in [0, m).
using ZPoly = std::vector<Int>;
void ztrim(ZPoly& a);
ZPoly zmod(const ZPoly& a, const Int& m);
ZPoly zmul(const ZPoly& a, const ZPoly& b);
ZPoly zsub(const ZPoly& a, const ZPoly& b);
ZPoly from_small(const Poly& a);

/// Lifts f = lc(f) * prod(factors) mod p to the same identity mod p^k.
/// Factors are monic, pairwise coprime mod p; the results are monic mod p^k.
std::vector<ZPoly> hensel_lift(const std::vector<Int>& f, const std::vector<Poly>& factors, u64 p,
                               unsigned k);

} // namespace mvtop::modp
