#pragma once

// Resumable-scan checkpoint file:
//   magic "BNSESCAN" | version u32 LE | n, p_n, p_next (u64) |
//   theta hi, lo, radius (f64) | count u64 | pi_n, pi_log_n, pi_pi_n (u64) |
//   x-tracker count u64, then per entry num i64 / den u64 /
//   last_nonpositive i64 (-1 = none) |
//   length-prefixed decimal high-precision theta snapshot (len 0 = absent) |
//   CRC-32C of all preceding bytes (u32 LE)
// All integers little-endian; doubles as IEEE-754 bit patterns.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bonselab {

class CheckpointError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
class CheckpointTruncated : public CheckpointError {
public:
    using CheckpointError::CheckpointError;
};
class CheckpointChecksumMismatch : public CheckpointError {
public:
    using CheckpointError::CheckpointError;
};
class CheckpointVersionMismatch : public CheckpointError {
public:
    using CheckpointError::CheckpointError;
};
class CheckpointFormatError : public CheckpointError {
public:
    using CheckpointError::CheckpointError;
};

struct ScanSnapshot {
    uint64_t n = 0;
    uint64_t p_n = 0;
    uint64_t p_next = 0;
    double theta_hi = 0.0;
    double theta_lo = 0.0;
    double theta_radius = 0.0;
    uint64_t theta_count = 0;
    uint64_t pi_n = 0;
    uint64_t pi_log_n = 0;
    uint64_t pi_pi_n = 0;

    struct XEntry {
        int64_t x_num = 0;
        uint64_t x_den = 1;
        int64_t last_nonpositive = -1;  // -1 = none
        bool operator==(const XEntry&) const = default;
    };
    std::vector<XEntry> xs;

    std::string hp_theta_digits;  // empty = absent

    bool operator==(const ScanSnapshot&) const = default;
};

void checkpoint_save(const ScanSnapshot& s, const std::string& path);
ScanSnapshot checkpoint_load(const std::string& path);

uint32_t crc32c(const uint8_t* data, size_t len);

}  // namespace bonselab
