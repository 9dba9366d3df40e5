#pragma once

// Exact integer/rational arithmetic helpers shared by every module.
// All field arithmetic in the workbench is exact; there is no floating
// point anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mwb {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const Rational& r) { return boost::multiprecision::denominator(r); }

// a^e mod m, m > 1, e >= 0
std::int64_t mod_pow(std::int64_t a, std::int64_t e, std::int64_t m);

bool is_prime(const BigInt& n);
bool is_prime_i64(std::int64_t n);

// Prime factorization with multiplicities, sorted ascending.  Uses trial
// division followed by Pollard-Brent rho; n may be negative (sign ignored)
// but must be nonzero.
std::vector<std::pair<BigInt, int>> factor(BigInt n);

// Distinct primes dividing n with odd multiplicity, sorted.  The squarefree
// part of n is sign(n) * product of these.
std::vector<std::int64_t> odd_multiplicity_primes(const BigInt& n);

// p-adic valuation of a nonzero rational.
int padic_valuation(const Rational& r, std::int64_t p);

// The unit part r / p^v(r) of a nonzero rational, as a rational.
Rational padic_unit(const Rational& r, std::int64_t p);

// Residue of a p-integral rational mod m (numerator and denominator must be
// prime to m when m is a prime power of interest).  Result in [0, m).
std::int64_t residue_mod(const Rational& r, std::int64_t m);

// Decompose q = p^e with p prime, e >= 1; returns false if q is not a
// prime power.
bool prime_power_decompose(std::int64_t q, std::int64_t& p, int& e);

Rational parse_rational(const std::string& text);

std::int64_t to_int64(const BigInt& n);

}  // namespace mwb
