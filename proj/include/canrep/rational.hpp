#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace canrep {

// Exact rational scalar. mpq_class keeps values canonical (reduced fraction,
// positive denominator), so equality is plain value equality.
using Rat = mpq_class;
using Int = mpz_class;

// "p" when the denominator is 1, otherwise "p/q".
std::string rat_to_string(const Rat& q);

// Accepts an optional leading sign, then digits, then an optional "/digits"
// part. Returns nullopt for anything else, including a zero denominator.
std::optional<Rat> rat_from_string(const std::string& s);

// Integers render plain; proper fractions as \tfrac{p}{q} with the sign in
// front of the fraction.
std::string rat_to_latex(const Rat& q);

// mpq_class's two-argument constructor does not reduce; this one does.
Rat rat_frac(long long num, long long den);

bool rat_is_integer(const Rat& q);

// Sign of |a| - |b|, the comparison used by the pivot rule.
int abs_cmp(const Rat& a, const Rat& b);

}  // namespace canrep
