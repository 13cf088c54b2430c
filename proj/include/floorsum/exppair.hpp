#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "floorsum/errors.hpp"

namespace floorsum::exppair {

// Exact rational arithmetic; stored in lowest terms, denominator > 0.
using Rational = boost::multiprecision::cpp_rational;

Rational make_rational(long long num, long long den);

// Parses "p/q", "p", or a finite decimal like "0.25".
Rational parse_rational(const std::string& s);

std::string format_rational(const Rational& r); // "p/q" or "p"
double to_double(const Rational& r);

// Pair (kappa, lambda) in the admissible region
// 0 <= kappa <= 1/2 <= lambda <= 1.
struct ExponentPair {
    Rational kappa;
    Rational lambda;

    bool operator==(const ExponentPair& other) const = default;
};

bool admissible(const ExponentPair& p);
std::string format_pair(const ExponentPair& p); // "(p/q, r/s)"

// Van der Corput processes. Both map the admissible region into itself;
// inputs and results are checked anyway.
//   A(kappa, lambda) = (kappa/(2kappa+2), (kappa+lambda+1)/(2kappa+2))
//   B(kappa, lambda) = (lambda - 1/2, kappa + 1/2)      (an involution)
ExponentPair process_A(const ExponentPair& p);
ExponentPair process_B(const ExponentPair& p);

// Applies a word over {A, B} with the rightmost letter first, i.e.
// "BABAAB" means B(A(B(A(A(B(start)))))). A domain error names the
// failing position and the pair reached so far.
ExponentPair apply_word(const std::string& word, const ExponentPair& start);

// lambda / (1 + lambda), the error exponent a pair yields for bounded f.
Rational error_exponent(const ExponentPair& p);

// vartheta(a) = (4a+3)/(10a+8); equals error_exponent(BABA(a, a+1/2)).
Rational vartheta(const Rational& a);

// theta_k = (k+1)/(3k+1).
Rational theta_k(int k);

// Exhaustive search over words of length 1..max_len minimizing
// error_exponent; ties break to the shorter, then lexicographically
// smaller word. Inadmissible branches are pruned.
struct OptimizeResult {
    std::string word;
    ExponentPair pair;
    Rational exponent;
};
OptimizeResult optimize_word(int max_len, const ExponentPair& start);

} // namespace floorsum::exppair
