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

#ifndef CDF_UTIL_IO_H_
#define CDF_UTIL_IO_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cdf {

// Little-endian primitive readers/writers. All on-disk formats in this
// toolkit are explicitly little-endian regardless of host byte order.
void WriteU32(std::ostream& os, uint32_t v);
void WriteU64(std::ostream& os, uint64_t v);
void WriteI32(std::ostream& os, int32_t v);
void WriteF32(std::ostream& os, float v);
void WriteF64(std::ostream& os, double v);
void WriteString(std::ostream& os, const std::string& s);  // u32 len + bytes

uint32_t ReadU32(std::istream& is);
uint64_t ReadU64(std::istream& is);
int32_t ReadI32(std::istream& is);
float ReadF32(std::istream& is);
double ReadF64(std::istream& is);
std::string ReadString(std::istream& is);

// Whole-file helpers.
std::string SlurpFile(const std::string& path);
void WriteFileAtomic(const std::string& path, const std::string& content);
bool FileExists(const std::string& path);

// FNV-1a 64-bit hash, used for config hashes and sub-seed derivation.
uint64_t Fnv1a64(const void* data, size_t n, uint64_t seed = 0xcbf29ce484222325ULL);
uint64_t Fnv1a64(const std::string& s, uint64_t seed = 0xcbf29ce484222325ULL);
std::string HashHex(uint64_t h);

// Deterministic float formatting (round-trip precision, locale-free).
std::string FormatDouble(double v);
// Fixed decimals, for human-readable tables.
std::string FormatFixed(double v, int decimals);

}  // namespace cdf

#endif  // CDF_UTIL_IO_H_
