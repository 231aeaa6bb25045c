#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dersyz {

/// Thrown for malformed arguments: dimension mismatches, invalid specs,
/// insufficient windows.
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when a randomized certificate could not be produced within its
/// retry budget. Distinct from a negative answer.
class InconclusiveError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The prime field F_p with residues stored in [0, p).
class PrimeField {
public:
    using value_type = std::uint32_t;

    PrimeField() : p_(2) {}
    explicit PrimeField(std::uint64_t p);

    std::uint32_t p() const { return p_; }

    value_type reduce(std::int64_t v) const
    {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        return static_cast<value_type>(r < 0 ? r + p_ : r);
    }
    value_type add(value_type a, value_type b) const
    {
        std::uint64_t s = std::uint64_t(a) + b;
        return static_cast<value_type>(s >= p_ ? s - p_ : s);
    }
    value_type sub(value_type a, value_type b) const
    {
        return a >= b ? a - b : static_cast<value_type>(std::uint64_t(a) + p_ - b);
    }
    value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
    value_type mul(value_type a, value_type b) const
    {
        return static_cast<value_type>((std::uint64_t(a) * b) % p_);
    }
    value_type pow(value_type a, std::uint64_t e) const;
    value_type inv(value_type a) const;

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }
    bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

private:
    std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace dersyz
