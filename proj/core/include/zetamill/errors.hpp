#pragma once

#include <stdexcept>
#include <string>

namespace zetamill {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside an operation's domain (pole, odd/even mismatch, x <= 1, ...).
struct DomainError : Error {
    using Error::Error;
};

// Two-trial consistency never reached within the allowed escalations.
// Carries the last pair of trial values as decimal strings.
struct PrecisionUnattainable : Error {
    std::string first_trial;
    std::string second_trial;
    PrecisionUnattainable(std::string msg, std::string a, std::string b)
        : Error(std::move(msg)), first_trial(std::move(a)), second_trial(std::move(b)) {}
};

// A spectral-sum request the given cache cannot satisfy; carries a depth estimate.
struct NeedMoreZeros : Error {
    long estimated_count;
    NeedMoreZeros(std::string msg, long estimated)
        : Error(std::move(msg)), estimated_count(estimated) {}
};

// Zero-cache file rejected; line_number is 1-based and names the first offender.
struct CacheParseError : Error {
    long line_number;
    CacheParseError(std::string msg, long line)
        : Error(std::move(msg)), line_number(line) {}
};

// Sign-scan count check failed even after grid refinement.
struct MissedZerosError : Error {
    using Error::Error;
};

}  // namespace zetamill
