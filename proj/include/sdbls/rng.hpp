/*
 * Copyright The sdbls Authors
 * Licensed under the Apache License, Version 2.0, see LICENSE for details.
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef SDBLS_RNG_HPP_
#define SDBLS_RNG_HPP_

#include <array>
#include <cstdint>

#include "sdbls/bytes.hpp"

namespace sdbls {

// Deterministic byte stream: SHA-256 over (state, block counter). The
// default constructor seeds from the OS; the seeded constructors make every
// downstream artifact reproducible, which the simulation harness and the
// test suites rely on. Not thread-safe; confine one instance to one caller.
class Rng {
public:
    Rng();
    explicit Rng(std::uint64_t seed);
    explicit Rng(ByteSpan seed);

    void fill(std::span<std::uint8_t> out);
    Bytes bytes(std::size_t n);

    template <std::size_t N>
    std::array<std::uint8_t, N> array() {
        std::array<std::uint8_t, N> out;
        fill(out);
        return out;
    }

private:
    std::array<std::uint8_t, 32> state_{};
    std::uint64_t block_ = 0;
};

}  // namespace sdbls

#endif
