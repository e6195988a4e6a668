#pragma once

// The main certified sweep. One pass over n = 8..N serves every registered x
// at once, because E_n(x) is affine in x: each step computes (a_n, b_n) once.
// Sign decisions that the working-precision enclosure cannot settle escalate
// to the 192-bit path, driven from the rolling high-precision theta snapshot.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bonselab/bounds.hpp"
#include "bonselab/certified.hpp"
#include "bonselab/checkpoint.hpp"
#include "bonselab/counters.hpp"
#include "bonselab/error_term.hpp"
#include "bonselab/highprec.hpp"
#include "bonselab/rational.hpp"
#include "bonselab/sieve.hpp"

namespace bonselab {

struct PsiResult {
    Rational x;
    uint64_t psi = 8;
    std::optional<uint64_t> last_nonpositive;
    uint64_t n_upper_used = 0;
    std::vector<uint64_t> indeterminate_ns;  // residual after escalation
    bool certified = false;
    uint64_t escalations = 0;  // working-precision indeterminates that were escalated
    double runtime_ms = 0.0;
    double theta_radius = 0.0;  // accumulated theta error bound at the end of the pass
};

struct ScanOptions {
    std::optional<uint64_t> n_ceiling;  // cap the pass; results become uncertified
    std::string checkpoint_path;        // empty = no checkpointing
    bool resume = false;
    uint64_t checkpoint_every = 1'000'000;
    uint64_t report_every = 0;  // progress lines to stderr every N steps; 0 = quiet
    SieveConfig sieve;
    bool hp_snapshots = true;
    EffectiveConstants constants;
};

std::vector<PsiResult> scan_psi(const std::vector<Rational>& xs, const ScanOptions& opts = {});

struct EnvelopeSummary {
    uint64_t argmax_n = 0;
    double max_alpha_hi = -HUGE_VAL;
    uint64_t records = 0;
};

EnvelopeSummary scan_alpha_envelope(uint64_t n_from, uint64_t n_to,
                                    const std::function<void(const AlphaRecord&)>& sink,
                                    const SieveConfig& cfg = {});

struct TailSup {
    uint64_t m = 0;
    double lo = -HUGE_VAL;  // sup of alpha_lo over scanned n >= m
    double hi = -HUGE_VAL;  // sup of alpha_hi over scanned n >= m
    uint64_t argmax_n = 0;  // where alpha_hi peaks
    bool certified = false;
    uint64_t scanned_to = 0;
    std::optional<std::string> hp_digits;  // 192-bit refinement of the attained sup
};

struct TailOptions {
    std::optional<uint64_t> scan_to;
    uint64_t n_cap = 10'000'000;  // give up (uncertified) beyond this
    bool hp_refine = false;
    SieveConfig sieve;
    EffectiveConstants constants;
};

std::vector<TailSup> tail_sups(const std::vector<uint64_t>& ms, const TailOptions& opts = {});
TailSup tail_sup(uint64_t m, const TailOptions& opts = {});

// certified lower bound max(0, A_m^- - A_{m+1}^+) for the plateau at level
// m+1; throws if either tail is uncertified
double plateau_gap(uint64_t m, const TailOptions& opts = {});

struct ConstancyResult {
    bool constant = false;  // equal certified psi at both endpoints
    uint64_t psi_a = 0;
    uint64_t psi_b = 0;
    bool certified = false;
};

ConstancyResult verify_interval_constancy(const Rational& a, const Rational& b,
                                          const ScanOptions& opts = {});

struct PlateauScaleRow {
    uint64_t m = 0;
    double gap = 0.0;
    double normalized = 0.0;  // gap * m * log^2 m
};

std::vector<PlateauScaleRow> plateau_scale_report(const std::vector<uint64_t>& ms,
                                                  const TailOptions& opts = {});

// -- the sweep driver ---------------------------------------------------------

class Sweep {
public:
    struct Config {
        SieveConfig sieve;
        bool hp_snapshots = true;
        uint64_t snapshot_every = 1'000'000;
    };

    // fresh sweep positioned at n = 8
    Sweep(uint64_t expected_n_max, const Config& cfg);
    // resume from a checkpoint snapshot (trackers are the caller's business)
    Sweep(const ScanSnapshot& snap, uint64_t expected_n_max, const Config& cfg);

    void step();

    uint64_t n() const { return n_; }
    uint64_t p_n() const { return p_n_; }
    uint64_t p_next() const { return p_next_; }
    CountsView counts() const { return counts_.view(); }
    const ThetaAccumulator& theta() const { return theta_; }
    CertifiedReal log_p_next() const { return log_next_; }

    const std::pair<CertifiedReal, CertifiedReal>& affine();  // cached per n

    struct SignDecision {
        Sign working;
        Sign final_sign;
        bool escalated = false;
    };
    SignDecision decide(const Rational& x);

    // high-precision alpha_n at the current position (escalation-grade)
    HpReal alpha_hp();

    // advance the high-precision theta snapshot to the current n
    void sync_hp();

    ScanSnapshot snapshot();  // syncs hp first

private:
    void escalate_prepare();

    Config cfg_;
    PrimeCursor cursor_;
    CountingCursor counts_;
    ThetaAccumulator theta_;
    uint64_t n_ = 0;
    uint64_t p_n_ = 0;
    uint64_t p_next_ = 0;
    CertifiedReal log_next_;

    bool hp_enabled_ = true;
    HpTheta hp_theta_;
    uint64_t hp_snap_n_ = 0;
    std::vector<uint64_t> hp_buffer_;  // primes p_{hp_snap_n + 1} .. p_n

    uint64_t affine_n_ = 0;
    std::pair<CertifiedReal, CertifiedReal> affine_cache_;
};

}  // namespace bonselab
