#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace trav {

// Raised when an exhaustive search runs past its expansion allowance.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(std::uint64_t limit)
        : std::runtime_error("expansion budget of " + std::to_string(limit) + " exhausted"),
          limit_(limit) {}
    std::uint64_t limit() const { return limit_; }

private:
    std::uint64_t limit_;
};

// Raised when a verified construction contradicts a fact the algorithms rely on.
// Never caught internally; a firing alarm means an input outside the proven
// preconditions or a genuine counterexample, and both must surface loudly.
class FalsificationError : public std::logic_error {
public:
    explicit FalsificationError(const std::string& what) : std::logic_error(what) {}
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Shared counter for DFS node expansions and brute-force probes. One budget is
// threaded through a whole computation so nested enumerations share the cap.
class ExpansionBudget {
public:
    static constexpr std::uint64_t kDefaultLimit = 100'000'000;

    explicit ExpansionBudget(std::uint64_t limit = kDefaultLimit) : limit_(limit) {}

    void tick() {
        if (++used_ > limit_) throw BudgetExceeded(limit_);
    }
    void charge(std::uint64_t amount) {
        used_ += amount;
        if (used_ > limit_) throw BudgetExceeded(limit_);
    }

    std::uint64_t used() const { return used_; }
    std::uint64_t limit() const { return limit_; }

private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
};

}  // namespace trav
