#pragma once

#include <cstdint>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "beamwalk/error.hpp"

namespace beamwalk {

// Little-endian binary writer. All file formats (BWCH/BWDS/BWCK) go through
// this so the on-disk layout is identical on every platform.
class BinWriter {
 public:
  explicit BinWriter(const std::string& path) : path_(path), out_(path, std::ios::binary) {
    if (!out_) throw IoError("cannot open for writing: " + path);
  }

  void magic(const char tag[4]) { raw(tag, 4); }
  void u8(uint8_t v) { raw(&v, 1); }
  void u32(uint32_t v) {
    unsigned char b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    raw(b, 4);
  }
  void u64(uint64_t v) {
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    raw(b, 8);
  }
  void f32(float v) {
    uint32_t bits;
    std::memcpy(&bits, &v, 4);
    u32(bits);
  }
  void f64(double v) {
    uint64_t bits;
    std::memcpy(&bits, &v, 8);
    u64(bits);
  }
  void str(const std::string& s) {
    u32(static_cast<uint32_t>(s.size()));
    raw(s.data(), s.size());
  }

  void close() {
    out_.close();
    if (!out_) throw IoError("write failed: " + path_);
  }

 private:
  void raw(const void* p, size_t n) {
    out_.write(static_cast<const char*>(p), static_cast<std::streamsize>(n));
    if (!out_) throw IoError("write failed: " + path_);
  }
  std::string path_;
  std::ofstream out_;
};

// Reader with byte-offset tracking; parse failures report where they occurred.
class BinReader {
 public:
  explicit BinReader(const std::string& path) : path_(path), in_(path, std::ios::binary) {
    if (!in_) throw IoError("cannot open for reading: " + path);
  }

  uint64_t offset() const { return offset_; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw DataError(path_ + ": " + msg + " at byte " + std::to_string(offset_));
  }

  void magic(const char expect[4]) {
    char got[4];
    raw(got, 4);
    if (std::memcmp(got, expect, 4) != 0)
      fail("bad magic, expected '" + std::string(expect, 4) + "'");
  }
  uint8_t u8() {
    unsigned char b;
    raw(&b, 1);
    return b;
  }
  uint32_t u32() {
    unsigned char b[4];
    raw(b, 4);
    uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<uint32_t>(b[i]) << (8 * i);
    return v;
  }
  uint64_t u64() {
    unsigned char b[8];
    raw(b, 8);
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(b[i]) << (8 * i);
    return v;
  }
  float f32() {
    uint32_t bits = u32();
    float v;
    std::memcpy(&v, &bits, 4);
    return v;
  }
  double f64() {
    uint64_t bits = u64();
    double v;
    std::memcpy(&v, &bits, 8);
    return v;
  }
  std::string str() {
    uint32_t n = u32();
    if (n > (1u << 20)) fail("string length " + std::to_string(n) + " out of range");
    std::string s(n, '\0');
    raw(s.data(), n);
    return s;
  }

  bool at_eof() {
    return in_.peek() == std::char_traits<char>::eof();
  }

 private:
  void raw(void* p, size_t n) {
    in_.read(static_cast<char*>(p), static_cast<std::streamsize>(n));
    if (static_cast<size_t>(in_.gcount()) != n) fail("unexpected end of file");
    offset_ += n;
  }
  std::string path_;
  std::ifstream in_;
  uint64_t offset_ = 0;
};

// FNV-1a over a byte string; used for config hashes embedded in artifacts.
inline uint64_t fnv1a64(const std::string& s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace beamwalk
