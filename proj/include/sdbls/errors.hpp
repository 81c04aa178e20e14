/*
 * Copyright The sdbls Authors
 * Licensed under the Apache License, Version 2.0, see LICENSE for details.
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef SDBLS_ERRORS_HPP_
#define SDBLS_ERRORS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sdbls {

// Why a byte string failed to decode into a scalar or group element.
enum class DecodeErrc {
    wrong_length,
    non_canonical,
    off_curve,
    wrong_subgroup,
    out_of_range,
    bad_format,
};

class DecodeError : public std::runtime_error {
public:
    DecodeError(DecodeErrc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    DecodeErrc code() const { return code_; }

private:
    DecodeErrc code_;
};

// Raised when a dealer-supplied object fails a receiver-side consistency
// check: a bad revocation signature at issuance, an authentication tag
// failure, or a ciphertext that decrypts to a share inconsistent with the
// published commitments. Carries the complaining participant's index when
// one applies (0 otherwise).
class DealerMisbehavior : public std::runtime_error {
public:
    DealerMisbehavior(std::uint32_t index, const std::string& what)
        : std::runtime_error(what), index_(index) {}
    std::uint32_t index() const { return index_; }

private:
    std::uint32_t index_;
};

// Fewer valid shares than the threshold requires. Shares that failed their
// commitment check are identified by index.
class InsufficientShares : public std::runtime_error {
public:
    InsufficientShares(std::vector<std::uint32_t> cheaters, const std::string& what)
        : std::runtime_error(what), cheaters_(std::move(cheaters)) {}
    const std::vector<std::uint32_t>& cheaters() const { return cheaters_; }

private:
    std::vector<std::uint32_t> cheaters_;
};

class StaleIndex : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace sdbls

#endif
