#include "nuc/pgm_io.hpp"

#include <cctype>
#include <fstream>
#include <stdexcept>

namespace nuc {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& why) {
  throw std::runtime_error("pgm: " + path + ": " + why);
}

// Next header token, skipping whitespace and '#' comments.
std::string next_token(std::istream& in) {
  std::string tok;
  int c;
  while ((c = in.get()) != EOF) {
    if (c == '#') {
      while ((c = in.get()) != EOF && c != '\n') {}
      continue;
    }
    if (std::isspace(c)) {
      if (!tok.empty()) return tok;
      continue;
    }
    tok.push_back(static_cast<char>(c));
  }
  return tok;
}

int parse_int(const std::string& tok, const std::string& path, const char* what) {
  if (tok.empty()) fail(path, std::string("missing ") + what);
  for (char ch : tok)
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      fail(path, std::string("malformed ") + what + " '" + tok + "'");
  long v = 0;
  for (char ch : tok) {
    v = v * 10 + (ch - '0');
    if (v > 1L << 30) fail(path, std::string(what) + " out of range");
  }
  return static_cast<int>(v);
}

}  // namespace

GrayImage read_pgm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(path, "cannot open file");

  const std::string magic = next_token(in);
  if (magic != "P5" && magic != "P2") fail(path, "not a P5/P2 PGM (magic '" + magic + "')");
  const int width = parse_int(next_token(in), path, "width");
  const int height = parse_int(next_token(in), path, "height");
  const int maxval = parse_int(next_token(in), path, "maxval");
  if (width < 1 || height < 1) fail(path, "empty image");
  if (maxval > 255) fail(path, "maxval > 255 (16-bit PGM is not supported)");
  if (maxval < 1) fail(path, "maxval must be >= 1");
  if (static_cast<long long>(width) * height > (1LL << 30)) fail(path, "image too large");

  std::vector<std::uint8_t> pixels(static_cast<std::size_t>(width) * height);
  if (magic == "P5") {
    // exactly one whitespace byte separates the header from the payload
    in.read(reinterpret_cast<char*>(pixels.data()),
            static_cast<std::streamsize>(pixels.size()));
    if (in.gcount() != static_cast<std::streamsize>(pixels.size()))
      fail(path, "truncated pixel data");
  } else {
    for (auto& p : pixels) {
      const std::string tok = next_token(in);
      const int v = parse_int(tok, path, "pixel");
      if (v > maxval) fail(path, "pixel value exceeds maxval");
      p = static_cast<std::uint8_t>(v);
    }
  }
  return GrayImage(width, height, std::move(pixels));
}

void write_pgm(const GrayImage& img, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(path, "cannot open for writing");
  out << "P5\n" << img.width() << " " << img.height() << "\n255\n";
  out.write(reinterpret_cast<const char*>(img.pixels().data()),
            static_cast<std::streamsize>(img.size()));
  if (!out) fail(path, "write failed");
}

}  // namespace nuc
