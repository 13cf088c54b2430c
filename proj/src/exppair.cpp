#include "floorsum/exppair.hpp"

namespace floorsum::exppair {

namespace {

const Rational kHalf(1, 2);
const Rational kOne(1);

} // namespace

Rational make_rational(long long num, long long den) {
    if (den == 0) throw UsageError("rational with zero denominator");
    return Rational(num, den);
}

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw UsageError("empty rational");
    auto slash = s.find('/');
    try {
        if (slash != std::string::npos) {
            boost::multiprecision::cpp_int num(s.substr(0, slash));
            boost::multiprecision::cpp_int den(s.substr(slash + 1));
            if (den == 0) throw UsageError("rational with zero denominator");
            return Rational(num, den);
        }
        auto dot = s.find('.');
        if (dot == std::string::npos) return Rational(boost::multiprecision::cpp_int(s));
        // finite decimal: digits / 10^places
        bool neg = s[0] == '-';
        std::string body = (s[0] == '-' || s[0] == '+') ? s.substr(1) : s;
        dot = body.find('.');
        std::string digits = body.substr(0, dot) + body.substr(dot + 1);
        size_t places = body.size() - dot - 1;
        // strip leading zeros: cpp_int would read them as an octal prefix
        size_t first = digits.find_first_not_of('0');
        digits = first == std::string::npos ? "0" : digits.substr(first);
        boost::multiprecision::cpp_int num(digits);
        boost::multiprecision::cpp_int den = 1;
        for (size_t i = 0; i < places; ++i) den *= 10;
        return Rational(neg ? -num : num, den);
    } catch (const std::runtime_error&) {
        throw UsageError("cannot parse rational: " + s);
    }
}

std::string format_rational(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

double to_double(const Rational& r) { return static_cast<double>(r); }

bool admissible(const ExponentPair& p) {
    return p.kappa >= 0 && p.kappa <= kHalf && p.lambda >= kHalf &&
           p.lambda <= kOne;
}

std::string format_pair(const ExponentPair& p) {
    return "(" + format_rational(p.kappa) + ", " + format_rational(p.lambda) + ")";
}

ExponentPair process_A(const ExponentPair& p) {
    if (!admissible(p))
        throw DomainError("process A: inadmissible pair " + format_pair(p));
    Rational den = 2 * p.kappa + 2;
    ExponentPair out{p.kappa / den, (p.kappa + p.lambda + 1) / den};
    if (!admissible(out))
        throw DomainError("process A left the admissible region at " +
                          format_pair(out));
    return out;
}

ExponentPair process_B(const ExponentPair& p) {
    if (!admissible(p))
        throw DomainError("process B: inadmissible pair " + format_pair(p));
    ExponentPair out{p.lambda - kHalf, p.kappa + kHalf};
    if (!admissible(out))
        throw DomainError("process B left the admissible region at " +
                          format_pair(out));
    return out;
}

ExponentPair apply_word(const std::string& word, const ExponentPair& start) {
    if (word.empty()) throw UsageError("apply_word requires a nonempty word");
    for (char c : word)
        if (c != 'A' && c != 'B')
            throw UsageError(std::string("word letter must be A or B, got '") +
                             c + "'");
    if (!admissible(start))
        throw DomainError("apply_word: inadmissible start " + format_pair(start));

    ExponentPair p = start;
    for (size_t i = word.size(); i-- > 0;) {
        try {
            p = word[i] == 'A' ? process_A(p) : process_B(p);
        } catch (const DomainError& e) {
            throw DomainError("applying '" + word + "' failed at position " +
                              std::to_string(i) + " (suffix '" +
                              word.substr(i) + "' from " + format_pair(start) +
                              "): " + e.what());
        }
    }
    return p;
}

Rational error_exponent(const ExponentPair& p) {
    if (!admissible(p))
        throw DomainError("error_exponent: inadmissible pair " +
                          format_pair(p));
    return p.lambda / (1 + p.lambda);
}

Rational vartheta(const Rational& a) {
    ExponentPair base{a, a + kHalf};
    if (!admissible(base))
        throw DomainError("vartheta requires (a, a+1/2) admissible, got " +
                          format_pair(base));
    return (4 * a + 3) / (10 * a + 8);
}

Rational theta_k(int k) {
    if (k < 2) throw UsageError("theta_k requires k >= 2");
    return Rational(k + 1, 3 * k + 1);
}

OptimizeResult optimize_word(int max_len, const ExponentPair& start) {
    if (max_len < 1) throw UsageError("optimize_word requires max_len >= 1");
    if (max_len > 20)
        throw UsageError("optimize_word requires max_len <= 20 (2^L search)");
    if (!admissible(start))
        throw DomainError("optimize_word: inadmissible start " +
                          format_pair(start));

    OptimizeResult best;
    bool have = false;
    auto better = [&](const Rational& e, const std::string& w) {
        if (!have) return true;
        if (e != best.exponent) return e < best.exponent;
        if (w.size() != best.word.size()) return w.size() < best.word.size();
        return w < best.word;
    };

    // Words are enumerated right-to-left: the string built so far is the
    // suffix already applied, and extending it on the left applies one
    // more process to the current pair. Every word of length <= max_len
    // is visited once; inadmissible branches are pruned.
    std::string suffix;
    auto dfs = [&](auto&& self, const ExponentPair& p, int remaining) -> void {
        if (!suffix.empty()) {
            Rational e = error_exponent(p);
            if (better(e, suffix)) {
                have = true;
                best = {suffix, p, e};
            }
        }
        if (remaining == 0) return;
        for (char c : {'A', 'B'}) {
            ExponentPair q;
            try {
                q = c == 'A' ? process_A(p) : process_B(p);
            } catch (const DomainError&) {
                continue; // prune
            }
            suffix.insert(suffix.begin(), c);
            self(self, q, remaining - 1);
            suffix.erase(suffix.begin());
        }
    };
    dfs(dfs, start, max_len);
    return best;
}

} // namespace floorsum::exppair
