#pragma once

#include <string>

#include "nuc/image.hpp"

namespace nuc {

/// Load a P5 (binary) or P2 (ASCII) PGM with maxval <= 255. Header comments
/// are skipped; 16-bit files and truncated payloads are rejected.
GrayImage read_pgm(const std::string& path);

/// Write binary P5 with maxval 255. read_pgm(write_pgm(img)) is bit-exact.
void write_pgm(const GrayImage& img, const std::string& path);

}  // namespace nuc
