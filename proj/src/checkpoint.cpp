#include "bonselab/checkpoint.hpp"

#include <array>
#include <bit>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>

namespace bonselab {

namespace {

constexpr char kMagic[8] = {'B', 'N', 'S', 'E', 'S', 'C', 'A', 'N'};
constexpr uint32_t kVersion = 1;

void put_u32(std::vector<uint8_t>& b, uint32_t v) {
    for (int i = 0; i < 4; ++i) b.push_back(uint8_t(v >> (8 * i)));
}
void put_u64(std::vector<uint8_t>& b, uint64_t v) {
    for (int i = 0; i < 8; ++i) b.push_back(uint8_t(v >> (8 * i)));
}
void put_i64(std::vector<uint8_t>& b, int64_t v) { put_u64(b, std::bit_cast<uint64_t>(v)); }
void put_f64(std::vector<uint8_t>& b, double v) { put_u64(b, std::bit_cast<uint64_t>(v)); }

struct Reader {
    const uint8_t* p;
    size_t left;
    uint64_t u64() {
        if (left < 8) throw CheckpointTruncated("checkpoint file ends mid-field");
        uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= uint64_t(p[i]) << (8 * i);
        p += 8;
        left -= 8;
        return v;
    }
    uint32_t u32() {
        if (left < 4) throw CheckpointTruncated("checkpoint file ends mid-field");
        uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= uint32_t(p[i]) << (8 * i);
        p += 4;
        left -= 4;
        return v;
    }
    int64_t i64() { return std::bit_cast<int64_t>(u64()); }
    double f64() { return std::bit_cast<double>(u64()); }
    std::string bytes(size_t n) {
        if (left < n) throw CheckpointTruncated("checkpoint file ends mid-field");
        std::string s(reinterpret_cast<const char*>(p), n);
        p += n;
        left -= n;
        return s;
    }
};

}  // namespace

uint32_t crc32c(const uint8_t* data, size_t len) {
    static const auto table = [] {
        std::array<uint32_t, 256> t{};
        for (uint32_t i = 0; i < 256; ++i) {
            uint32_t c = i;
            for (int k = 0; k < 8; ++k) c = (c & 1) ? 0x82F63B78u ^ (c >> 1) : c >> 1;
            t[i] = c;
        }
        return t;
    }();
    uint32_t c = ~uint32_t(0);
    for (size_t i = 0; i < len; ++i) c = table[(c ^ data[i]) & 0xFF] ^ (c >> 8);
    return ~c;
}

void checkpoint_save(const ScanSnapshot& s, const std::string& path) {
    std::vector<uint8_t> buf;
    buf.reserve(256 + s.hp_theta_digits.size());
    buf.insert(buf.end(), kMagic, kMagic + 8);
    put_u32(buf, kVersion);
    put_u64(buf, s.n);
    put_u64(buf, s.p_n);
    put_u64(buf, s.p_next);
    put_f64(buf, s.theta_hi);
    put_f64(buf, s.theta_lo);
    put_f64(buf, s.theta_radius);
    put_u64(buf, s.theta_count);
    put_u64(buf, s.pi_n);
    put_u64(buf, s.pi_log_n);
    put_u64(buf, s.pi_pi_n);
    put_u64(buf, s.xs.size());
    for (const auto& e : s.xs) {
        put_i64(buf, e.x_num);
        put_u64(buf, e.x_den);
        put_i64(buf, e.last_nonpositive);
    }
    put_u64(buf, s.hp_theta_digits.size());
    buf.insert(buf.end(), s.hp_theta_digits.begin(), s.hp_theta_digits.end());
    put_u32(buf, crc32c(buf.data(), buf.size()));

    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw CheckpointError("cannot open '" + tmp + "' for writing");
        out.write(reinterpret_cast<const char*>(buf.data()),
                  static_cast<std::streamsize>(buf.size()));
        if (!out) throw CheckpointError("short write to '" + tmp + "'");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw CheckpointError("cannot move checkpoint into place: " + ec.message());
}

ScanSnapshot checkpoint_load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CheckpointError("cannot open checkpoint '" + path + "'");
    std::vector<uint8_t> buf((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());

    if (buf.size() < 8 + 4 + 4) throw CheckpointTruncated("checkpoint smaller than its header");
    if (std::memcmp(buf.data(), kMagic, 8) != 0)
        throw CheckpointFormatError("bad magic; not a scan checkpoint");

    // checksum covers everything up to the trailing CRC
    Reader r{buf.data() + 8, buf.size() - 8 - 4};
    uint32_t version = r.u32();
    if (version != kVersion)
        throw CheckpointVersionMismatch("checkpoint version " + std::to_string(version) +
                                        ", expected " + std::to_string(kVersion));

    ScanSnapshot s;
    s.n = r.u64();
    s.p_n = r.u64();
    s.p_next = r.u64();
    s.theta_hi = r.f64();
    s.theta_lo = r.f64();
    s.theta_radius = r.f64();
    s.theta_count = r.u64();
    s.pi_n = r.u64();
    s.pi_log_n = r.u64();
    s.pi_pi_n = r.u64();
    uint64_t nx = r.u64();
    if (nx > 1'000'000) throw CheckpointFormatError("implausible x-tracker count");
    s.xs.resize(nx);
    for (auto& e : s.xs) {
        e.x_num = r.i64();
        e.x_den = r.u64();
        e.last_nonpositive = r.i64();
    }
    uint64_t hp_len = r.u64();
    s.hp_theta_digits = r.bytes(hp_len);
    if (r.left != 0) throw CheckpointFormatError("trailing bytes after snapshot payload");

    uint32_t stored = 0;
    for (int i = 0; i < 4; ++i) stored |= uint32_t(buf[buf.size() - 4 + i]) << (8 * i);
    uint32_t actual = crc32c(buf.data(), buf.size() - 4);
    if (stored != actual) throw CheckpointChecksumMismatch("checkpoint CRC-32C mismatch");

    return s;
}

}  // namespace bonselab
