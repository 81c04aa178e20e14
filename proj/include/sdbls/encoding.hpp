/*
 * Copyright The sdbls Authors
 * Licensed under the Apache License, Version 2.0, see LICENSE for details.
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef SDBLS_ENCODING_HPP_
#define SDBLS_ENCODING_HPP_

#include <array>
#include <string>

#include "sdbls/bytes.hpp"

namespace sdbls {

// RFC 4648 base64url, no padding. Every byte field that crosses a file or
// framing boundary uses this alphabet.
std::string base64url_encode(ByteSpan in);

// Throws DecodeError(bad_format) on characters outside the alphabet or an
// impossible length.
Bytes base64url_decode(std::string_view in);

std::array<std::uint8_t, 32> sha256(ByteSpan in);

std::string hex_encode(ByteSpan in);

}  // namespace sdbls

#endif
