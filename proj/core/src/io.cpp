#include "driftreg/io.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>
#include <vector>

#include "driftreg/errors.hpp"

namespace driftreg::io {

namespace {

[[noreturn]] void fail(const std::filesystem::path& path, const std::string& what) {
  throw DataError(path.string() + ": " + what);
}

// Next whitespace-delimited PNM header token, skipping '#' comments.
std::string next_token(std::istream& in) {
  std::string tok;
  int ch;
  while ((ch = in.get()) != EOF) {
    if (ch == '#') {
      while ((ch = in.get()) != EOF && ch != '\n') {
      }
      continue;
    }
    if (std::isspace(ch)) {
      if (!tok.empty()) return tok;
      continue;
    }
    tok.push_back(static_cast<char>(ch));
  }
  return tok;
}

void put_u32le(std::string& out, std::uint32_t v) {
  out.push_back(static_cast<char>(v & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
  out.push_back(static_cast<char>((v >> 16) & 0xff));
  out.push_back(static_cast<char>((v >> 24) & 0xff));
}

std::uint32_t get_u32le(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) |
         (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint64_t get_u64le(const unsigned char* p) {
  return static_cast<std::uint64_t>(get_u32le(p)) |
         (static_cast<std::uint64_t>(get_u32le(p + 4)) << 32);
}

void put_u64le(std::string& out, std::uint64_t v) {
  put_u32le(out, static_cast<std::uint32_t>(v & 0xffffffffu));
  put_u32le(out, static_cast<std::uint32_t>(v >> 32));
}

std::vector<unsigned char> read_all(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(path, "cannot open for reading");
  std::vector<unsigned char> bytes{std::istreambuf_iterator<char>(in),
                                   std::istreambuf_iterator<char>()};
  return bytes;
}

void write_all(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(path, "cannot open for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) fail(path, "write failed");
}

}  // namespace

Frame read_pgm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(path, "cannot open for reading");
  if (next_token(in) != "P5") fail(path, "not a binary PGM (P5)");
  int cols = 0, rows = 0, maxval = 0;
  try {
    cols = std::stoi(next_token(in));
    rows = std::stoi(next_token(in));
    maxval = std::stoi(next_token(in));
  } catch (const std::exception&) {
    fail(path, "malformed PGM header");
  }
  if (cols <= 0 || rows <= 0 || maxval <= 0 || maxval > 65535)
    fail(path, "bad PGM dimensions or maxval");
  // header tokens are separated by exactly one whitespace byte before data;
  // next_token has already consumed it
  const int bytes_per_sample = maxval > 255 ? 2 : 1;
  const std::size_t count = static_cast<std::size_t>(rows) * cols;
  std::vector<unsigned char> raw(count * bytes_per_sample);
  in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
  if (static_cast<std::size_t>(in.gcount()) != raw.size()) fail(path, "truncated PGM data");

  std::vector<double> data(count);
  if (bytes_per_sample == 1) {
    for (std::size_t i = 0; i < count; ++i) data[i] = raw[i] / static_cast<double>(maxval);
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      const unsigned v = (static_cast<unsigned>(raw[2 * i]) << 8) | raw[2 * i + 1];
      data[i] = v / static_cast<double>(maxval);
    }
  }
  return Frame(rows, cols, std::move(data));
}

void write_pgm(const std::filesystem::path& path, const Frame& frame, int maxval) {
  if (maxval <= 0 || maxval > 65535)
    throw InvalidArgument("write_pgm: maxval out of range");
  std::ostringstream header;
  header << "P5\n" << frame.cols() << " " << frame.rows() << "\n" << maxval << "\n";
  std::string bytes = header.str();
  for (double v : frame.data()) {
    const double clamped = std::clamp(v, 0.0, 1.0);
    const unsigned q = static_cast<unsigned>(std::lround(clamped * maxval));
    if (maxval > 255) bytes.push_back(static_cast<char>((q >> 8) & 0xff));
    bytes.push_back(static_cast<char>(q & 0xff));
  }
  write_all(path, bytes);
}

Frame read_mlrf(const std::filesystem::path& path) {
  const std::vector<unsigned char> bytes = read_all(path);
  if (bytes.size() < 14 || std::memcmp(bytes.data(), "MLRF", 4) != 0)
    fail(path, "not an MLRF file");
  if (bytes[4] != 1) fail(path, "unsupported MLRF version");
  const unsigned dtype = bytes[5];
  if (dtype > 1) fail(path, "unsupported MLRF dtype");
  const std::uint32_t rows = get_u32le(bytes.data() + 6);
  const std::uint32_t cols = get_u32le(bytes.data() + 10);
  if (rows == 0 || cols == 0) fail(path, "empty MLRF grid");
  const std::size_t count = static_cast<std::size_t>(rows) * cols;
  const std::size_t sample_size = dtype == 0 ? 4 : 8;
  if (bytes.size() != 14 + count * sample_size) fail(path, "truncated MLRF data");

  std::vector<double> data(count);
  const unsigned char* p = bytes.data() + 14;
  if (dtype == 0) {
    for (std::size_t i = 0; i < count; ++i, p += 4) {
      const std::uint32_t u = get_u32le(p);
      float f;
      std::memcpy(&f, &u, 4);
      data[i] = static_cast<double>(f);
    }
  } else {
    for (std::size_t i = 0; i < count; ++i, p += 8) {
      const std::uint64_t u = get_u64le(p);
      double d;
      std::memcpy(&d, &u, 8);
      data[i] = d;
    }
  }
  try {
    return Frame(static_cast<int>(rows), static_cast<int>(cols), std::move(data));
  } catch (const InvalidArgument& e) {
    fail(path, e.what());
  }
}

void write_mlrf(const std::filesystem::path& path, const Frame& frame, MlrfDtype dtype) {
  std::string bytes = "MLRF";
  bytes.push_back(1);
  bytes.push_back(static_cast<char>(dtype));
  put_u32le(bytes, static_cast<std::uint32_t>(frame.rows()));
  put_u32le(bytes, static_cast<std::uint32_t>(frame.cols()));
  for (double v : frame.data()) {
    if (dtype == MlrfDtype::f32) {
      const float f = static_cast<float>(v);
      std::uint32_t u;
      std::memcpy(&u, &f, 4);
      put_u32le(bytes, u);
    } else {
      std::uint64_t u;
      std::memcpy(&u, &v, 8);
      put_u64le(bytes, u);
    }
  }
  write_all(path, bytes);
}

Frame read_frame(const std::filesystem::path& path) {
  const std::string ext = path.extension().string();
  if (ext == ".pgm") return read_pgm(path);
  if (ext == ".mlrf") return read_mlrf(path);
  fail(path, "unsupported frame format (expected .pgm or .mlrf)");
}

void write_frame(const std::filesystem::path& path, const Frame& frame) {
  const std::string ext = path.extension().string();
  if (ext == ".pgm") return write_pgm(path, frame);
  if (ext == ".mlrf") return write_mlrf(path, frame);
  fail(path, "unsupported frame format (expected .pgm or .mlrf)");
}

Manifest read_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(path, "cannot open manifest");
  Manifest result;
  std::string line;
  while (std::getline(in, line)) {
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
      line.pop_back();
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) fail(path, "malformed manifest line: " + line);
    result[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return result;
}

void write_manifest(const std::filesystem::path& path, const Manifest& manifest) {
  std::string bytes;
  for (const auto& [key, value] : manifest) {
    bytes += key;
    bytes += '=';
    bytes += value;
    bytes += '\n';
  }
  write_all(path, bytes);
}

}  // namespace driftreg::io
