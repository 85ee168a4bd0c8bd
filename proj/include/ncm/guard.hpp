#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace ncm {

// Thrown when a combinatorial enumeration would exceed the configured work
// bound.  The CLI maps this to a dedicated exit code so runaway requests are
// distinguishable from genuine verification failures.
class guard_error : public std::runtime_error {
public:
    explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

// Budget for enumerations (words, permutations, spanning-set rows).  The
// default is 10^6 items; the NCM_GUARD environment variable overrides it.
class Guard {
public:
    Guard() : limit_(default_limit()) {}
    explicit Guard(long limit) : limit_(limit) {}

    void count(long n = 1) {
        used_ += n;
        if (used_ > limit_)
            throw guard_error("enumeration guard exceeded (limit " +
                              std::to_string(limit_) +
                              "); set NCM_GUARD to raise it");
    }

    long used() const { return used_; }
    long limit() const { return limit_; }

    static long default_limit() {
        if (const char* env = std::getenv("NCM_GUARD")) {
            char* end = nullptr;
            long v = std::strtol(env, &end, 10);
            if (end != env && v > 0) return v;
        }
        return 1000000L;
    }

private:
    long limit_;
    long used_ = 0;
};

}  // namespace ncm
