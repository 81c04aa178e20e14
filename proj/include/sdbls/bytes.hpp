/*
 * Copyright The sdbls Authors
 * Licensed under the Apache License, Version 2.0, see LICENSE for details.
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef SDBLS_BYTES_HPP_
#define SDBLS_BYTES_HPP_

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace sdbls {

using Bytes = std::vector<std::uint8_t>;
using ByteSpan = std::span<const std::uint8_t>;

inline ByteSpan as_bytes(std::string_view s) {
    return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

inline Bytes to_bytes(std::string_view s) {
    return Bytes(s.begin(), s.end());
}

inline void append(Bytes& out, ByteSpan more) {
    out.insert(out.end(), more.begin(), more.end());
}

}  // namespace sdbls

#endif
