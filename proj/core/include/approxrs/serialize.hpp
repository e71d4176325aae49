#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "approxrs/errors.hpp"

namespace approxrs {

// Structure kinds as stored in serialized files and named by the CLI.
enum class StructKind : uint16_t {
    Plain = 1,
    Sparse = 2,
    PartialSums = 3,
    MarkRankSelect = 4,    // block-marked approximate rank/select
    CountRankSelect = 5,   // block-counted approximate rank/select
    MultisetMarked = 6,
    MultisetCounts = 7,
    MultisetBounded = 8,
    Sequence = 9,
};

const char* kind_name(StructKind k);
bool kind_from_name(const std::string& name, StructKind& out);

namespace io {

// All integers little-endian; files start with magic + version + kind.
inline constexpr uint32_t kMagic = 0x53525841u;  // "AXRS"
inline constexpr uint16_t kVersion = 1;

void write_u16(std::ostream& os, uint16_t v);
void write_u32(std::ostream& os, uint32_t v);
void write_u64(std::ostream& os, uint64_t v);
uint16_t read_u16(std::istream& is);
uint32_t read_u32(std::istream& is);
uint64_t read_u64(std::istream& is);

void write_vec_u64(std::ostream& os, const std::vector<uint64_t>& v);
std::vector<uint64_t> read_vec_u64(std::istream& is);

void write_header(std::ostream& os, StructKind kind);
StructKind read_header(std::istream& is);

}  // namespace io
}  // namespace approxrs
