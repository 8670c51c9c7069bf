// Copyright (c) 2026 cdfkit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "util/io.h"

#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "util/error.h"

namespace cdf {

namespace {

void PutBytesLE(std::ostream& os, const void* p, size_t n) {
  // Host is assumed little-endian for the fast path; fall back to a byte
  // swap on big-endian hosts so files stay little-endian.
  const unsigned char* b = static_cast<const unsigned char*>(p);
#if defined(__BYTE_ORDER__) && __BYTE_ORDER__ == __ORDER_BIG_ENDIAN__
  for (size_t i = 0; i < n; ++i) os.put(static_cast<char>(b[n - 1 - i]));
#else
  os.write(reinterpret_cast<const char*>(b), static_cast<std::streamsize>(n));
#endif
}

void GetBytesLE(std::istream& is, void* p, size_t n) {
  unsigned char* b = static_cast<unsigned char*>(p);
#if defined(__BYTE_ORDER__) && __BYTE_ORDER__ == __ORDER_BIG_ENDIAN__
  for (size_t i = 0; i < n; ++i) {
    int c = is.get();
    CDF_CHECK(c != EOF, "unexpected end of stream");
    b[n - 1 - i] = static_cast<unsigned char>(c);
  }
#else
  is.read(reinterpret_cast<char*>(b), static_cast<std::streamsize>(n));
  CDF_CHECK(is.gcount() == static_cast<std::streamsize>(n),
            "unexpected end of stream");
#endif
}

}  // namespace

void WriteU32(std::ostream& os, uint32_t v) { PutBytesLE(os, &v, 4); }
void WriteU64(std::ostream& os, uint64_t v) { PutBytesLE(os, &v, 8); }
void WriteI32(std::ostream& os, int32_t v) {
  uint32_t u;
  std::memcpy(&u, &v, 4);
  WriteU32(os, u);
}
void WriteF32(std::ostream& os, float v) {
  uint32_t u;
  std::memcpy(&u, &v, 4);
  WriteU32(os, u);
}
void WriteF64(std::ostream& os, double v) {
  uint64_t u;
  std::memcpy(&u, &v, 8);
  WriteU64(os, u);
}
void WriteString(std::ostream& os, const std::string& s) {
  WriteU32(os, static_cast<uint32_t>(s.size()));
  os.write(s.data(), static_cast<std::streamsize>(s.size()));
}

uint32_t ReadU32(std::istream& is) {
  uint32_t v;
  GetBytesLE(is, &v, 4);
  return v;
}
uint64_t ReadU64(std::istream& is) {
  uint64_t v;
  GetBytesLE(is, &v, 8);
  return v;
}
int32_t ReadI32(std::istream& is) {
  uint32_t u = ReadU32(is);
  int32_t v;
  std::memcpy(&v, &u, 4);
  return v;
}
float ReadF32(std::istream& is) {
  uint32_t u = ReadU32(is);
  float v;
  std::memcpy(&v, &u, 4);
  return v;
}
double ReadF64(std::istream& is) {
  uint64_t u = ReadU64(is);
  double v;
  std::memcpy(&v, &u, 8);
  return v;
}
std::string ReadString(std::istream& is) {
  uint32_t n = ReadU32(is);
  std::string s(n, '\0');
  if (n > 0) {
    is.read(s.data(), n);
    CDF_CHECK(is.gcount() == static_cast<std::streamsize>(n),
              "unexpected end of stream");
  }
  return s;
}

std::string SlurpFile(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw RuntimeError("cannot open file: " + path);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

void WriteFileAtomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw RuntimeError("write error: cannot open " + tmp);
    os.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!os) throw RuntimeError("write error: " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

bool FileExists(const std::string& path) {
  return std::filesystem::exists(path);
}

uint64_t Fnv1a64(const void* data, size_t n, uint64_t seed) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  uint64_t h = seed;
  for (size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

uint64_t Fnv1a64(const std::string& s, uint64_t seed) {
  return Fnv1a64(s.data(), s.size(), seed);
}

std::string HashHex(uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

std::string FormatDouble(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf);
}

std::string FormatFixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  return std::string(buf);
}

}  // namespace cdf
