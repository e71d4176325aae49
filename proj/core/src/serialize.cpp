#include "approxrs/serialize.hpp"

#include <istream>
#include <ostream>

namespace approxrs {

const char* kind_name(StructKind k) {
    switch (k) {
        case StructKind::Plain: return "plain";
        case StructKind::Sparse: return "sparse";
        case StructKind::PartialSums: return "psum";
        case StructKind::MarkRankSelect: return "drank-select";
        case StructKind::CountRankSelect: return "rank-dselect";
        case StructKind::MultisetMarked: return "ms-fixed";
        case StructKind::MultisetCounts: return "ms-counts";
        case StructKind::MultisetBounded: return "ms-bounded";
        case StructKind::Sequence: return "seq";
    }
    return "?";
}

bool kind_from_name(const std::string& name, StructKind& out) {
    for (uint16_t k = 1; k <= 9; ++k) {
        if (name == kind_name(static_cast<StructKind>(k))) {
            out = static_cast<StructKind>(k);
            return true;
        }
    }
    return false;
}

namespace io {

static void write_bytes(std::ostream& os, uint64_t v, int nbytes) {
    char buf[8];
    for (int i = 0; i < nbytes; ++i) buf[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    os.write(buf, nbytes);
}

static uint64_t read_bytes(std::istream& is, int nbytes) {
    unsigned char buf[8];
    is.read(reinterpret_cast<char*>(buf), nbytes);
    if (!is) throw ValidationError("serialized stream truncated");
    uint64_t v = 0;
    for (int i = 0; i < nbytes; ++i) v |= static_cast<uint64_t>(buf[i]) << (8 * i);
    return v;
}

void write_u16(std::ostream& os, uint16_t v) { write_bytes(os, v, 2); }
void write_u32(std::ostream& os, uint32_t v) { write_bytes(os, v, 4); }
void write_u64(std::ostream& os, uint64_t v) { write_bytes(os, v, 8); }
uint16_t read_u16(std::istream& is) { return static_cast<uint16_t>(read_bytes(is, 2)); }
uint32_t read_u32(std::istream& is) { return static_cast<uint32_t>(read_bytes(is, 4)); }
uint64_t read_u64(std::istream& is) { return read_bytes(is, 8); }

void write_vec_u64(std::ostream& os, const std::vector<uint64_t>& v) {
    write_u64(os, v.size());
    for (uint64_t w : v) write_u64(os, w);
}

std::vector<uint64_t> read_vec_u64(std::istream& is) {
    uint64_t n = read_u64(is);
    std::vector<uint64_t> v(n);
    for (auto& w : v) w = read_u64(is);
    return v;
}

void write_header(std::ostream& os, StructKind kind) {
    write_u32(os, kMagic);
    write_u16(os, kVersion);
    write_u16(os, static_cast<uint16_t>(kind));
}

StructKind read_header(std::istream& is) {
    if (read_u32(is) != kMagic) throw ValidationError("bad magic; not an approxrs structure file");
    uint16_t ver = read_u16(is);
    if (ver != kVersion) throw ValidationError("unsupported structure file version");
    return static_cast<StructKind>(read_u16(is));
}

}  // namespace io
}  // namespace approxrs
