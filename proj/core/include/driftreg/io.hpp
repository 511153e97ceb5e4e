#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>

#include "driftreg/frame.hpp"

namespace driftreg::io {

// Binary PGM (P5). Maxval <= 255 reads one byte per sample, larger maxvals
// two bytes big-endian; samples are scaled to [0,1] by maxval.
Frame read_pgm(const std::filesystem::path& path);

// Writes P5 with the given maxval; samples are clamped to [0,1] first.
void write_pgm(const std::filesystem::path& path, const Frame& frame,
               int maxval = 65535);

// Raw float container, little-endian:
//   "MLRF" | u8 version=1 | u8 dtype (0=f32, 1=f64) | u32 rows | u32 cols |
//   row-major samples
// f32 data is widened to double on read.
enum class MlrfDtype : std::uint8_t { f32 = 0, f64 = 1 };

Frame read_mlrf(const std::filesystem::path& path);
void write_mlrf(const std::filesystem::path& path, const Frame& frame,
                MlrfDtype dtype = MlrfDtype::f64);

// Dispatch on extension: .pgm or .mlrf.
Frame read_frame(const std::filesystem::path& path);
void write_frame(const std::filesystem::path& path, const Frame& frame);

// key=value per line, '#' starts a comment. Writes are sorted by key.
using Manifest = std::map<std::string, std::string>;

Manifest read_manifest(const std::filesystem::path& path);
void write_manifest(const std::filesystem::path& path, const Manifest& manifest);

}  // namespace driftreg::io
