#pragma once

#include <array>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "geocount/linalg.hpp"
#include "geocount/rational.hpp"

namespace geocount::testing {

inline Rational Q(const std::string& s) { return Rational::from_string(s); }

inline RationalVector rv(std::initializer_list<const char*> xs) {
    RationalVector v;
    for (const char* x : xs) v.push_back(Q(x));
    return v;
}

inline RationalMatrix columns(std::initializer_list<std::initializer_list<const char*>> cols) {
    std::vector<RationalVector> cs;
    for (auto c : cols) cs.push_back(rv(c));
    return RationalMatrix::from_columns(cs);
}

inline RationalMatrix rows(std::initializer_list<std::initializer_list<const char*>> rs) {
    std::vector<RationalVector> out;
    for (auto r : rs) out.push_back(rv(r));
    return RationalMatrix::from_rows(out);
}

// Deterministic rational samples for property tests.
class RationalSampler {
  public:
    explicit RationalSampler(unsigned seed) : rng_(seed) {}

    Rational next(long num_lo, long num_hi, long den_hi) {
        std::uniform_int_distribution<long> num(num_lo, num_hi);
        std::uniform_int_distribution<long> den(1, den_hi);
        return Rational(Integer(num(rng_)), Integer(den(rng_)));
    }

    RationalVector next_vector(std::size_t n, long num_lo, long num_hi, long den_hi) {
        RationalVector v;
        v.reserve(n);
        for (std::size_t i = 0; i < n; ++i) v.push_back(next(num_lo, num_hi, den_hi));
        return v;
    }

    long next_int(long lo, long hi) {
        std::uniform_int_distribution<long> d(lo, hi);
        return d(rng_);
    }

  private:
    std::mt19937 rng_;
};

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

// Runs a shell command, capturing stdout; stderr is dropped.
inline CommandResult run_command(const std::string& command) {
    CommandResult r;
    FILE* pipe = ::popen((command + " 2>/dev/null").c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), n);
    const int status = ::pclose(pipe);
    if (status >= 0 && (status & 0x7f) == 0) r.exit_code = (status >> 8) & 0xff;
    return r;
}

inline std::size_t count_occurrences(const std::string& text, const std::string& needle) {
    std::size_t count = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size()))
        ++count;
    return count;
}

}  // namespace geocount::testing
