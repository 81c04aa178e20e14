/*
 * Copyright The sdbls Authors
 * Licensed under the Apache License, Version 2.0, see LICENSE for details.
 * SPDX-License-Identifier: Apache-2.0
 */
#include "sdbls/rng.hpp"

#include <algorithm>
#include <cstring>
#include <random>

#include "sdbls/encoding.hpp"

namespace sdbls {

Rng::Rng() {
    std::random_device rd;
    for (std::size_t i = 0; i < state_.size(); i += 4) {
        std::uint32_t w = rd();
        std::memcpy(state_.data() + i, &w, 4);
    }
}

Rng::Rng(std::uint64_t seed) {
    std::array<std::uint8_t, 8> be{};
    for (int i = 0; i < 8; i++) be[i] = static_cast<std::uint8_t>(seed >> (56 - 8 * i));
    state_ = sha256(be);
}

Rng::Rng(ByteSpan seed) { state_ = sha256(seed); }

void Rng::fill(std::span<std::uint8_t> out) {
    std::size_t done = 0;
    while (done < out.size()) {
        Bytes block(state_.begin(), state_.end());
        for (int i = 0; i < 8; i++)
            block.push_back(static_cast<std::uint8_t>(block_ >> (56 - 8 * i)));
        block_++;
        auto digest = sha256(block);
        std::size_t take = std::min(digest.size(), out.size() - done);
        std::copy_n(digest.begin(), take, out.begin() + done);
        done += take;
    }
}

Bytes Rng::bytes(std::size_t n) {
    Bytes out(n);
    fill(out);
    return out;
}

}  // namespace sdbls
