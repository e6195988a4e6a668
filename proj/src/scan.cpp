#include "bonselab/scan.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace bonselab {

// -- Sweep --------------------------------------------------------------------

Sweep::Sweep(uint64_t expected_n_max, const Config& cfg)
    : cfg_(cfg),
      cursor_(sieve_limit_for(std::max<uint64_t>(expected_n_max, 8)), cfg.sieve),
      counts_(CountingCursor::at(8, cfg.sieve)),
      hp_enabled_(cfg.hp_snapshots) {
    for (int i = 0; i < 8; ++i) {
        uint64_t p = cursor_.next_prime();
        theta_.add(cert_log(p));
        if (hp_enabled_) hp_buffer_.push_back(p);
        p_n_ = p;
    }
    n_ = 8;
    p_next_ = cursor_.next_prime();
    log_next_ = cert_log(p_next_);
    hp_snap_n_ = 0;
}

Sweep::Sweep(const ScanSnapshot& snap, uint64_t expected_n_max, const Config& cfg)
    : cfg_(cfg),
      cursor_(sieve_limit_for(std::max<uint64_t>(expected_n_max, snap.n + 2)), cfg.sieve),
      counts_(CountingCursor::at(snap.n, cfg.sieve)),
      hp_enabled_(cfg.hp_snapshots) {
    n_ = snap.n;
    p_n_ = snap.p_n;
    p_next_ = snap.p_next;
    theta_.hi = snap.theta_hi;
    theta_.lo = snap.theta_lo;
    theta_.radius = snap.theta_radius;
    theta_.count = snap.theta_count;

    // cross-check the stored stream position against the sieve and the
    // recounted pi values; a mismatch means the file lies about its state
    cursor_.skip_to_index(n_);
    if (cursor_.next_prime() != p_n_ || cursor_.next_prime() != p_next_)
        throw CheckpointFormatError("checkpoint prime indices disagree with the sieve");
    if (counts_.pi_n() != snap.pi_n || counts_.pi_log_n() != snap.pi_log_n ||
        counts_.pi_pi_n() != snap.pi_pi_n)
        throw CheckpointFormatError("checkpoint counters disagree with a recount");
    if (theta_.count != n_)
        throw CheckpointFormatError("checkpoint theta term count disagrees with n");

    log_next_ = cert_log(p_next_);
    if (hp_enabled_) {
        if (snap.hp_theta_digits.empty())
            throw CheckpointFormatError("checkpoint lacks the high-precision theta snapshot");
        hp_theta_.restore(snap.hp_theta_digits, n_);
        hp_snap_n_ = n_;
    }
}

void Sweep::step() {
    theta_.add(log_next_);
    p_n_ = p_next_;
    if (hp_enabled_) hp_buffer_.push_back(p_n_);
    p_next_ = cursor_.next_prime();
    log_next_ = cert_log(p_next_);
    counts_.advance();
    ++n_;
    if (hp_enabled_ && cfg_.snapshot_every != 0 && n_ % cfg_.snapshot_every == 0) sync_hp();
}

void Sweep::sync_hp() {
    if (!hp_enabled_) return;
    for (uint64_t p : hp_buffer_) hp_theta_.add_prime(p);
    hp_theta_.flush();
    hp_buffer_.clear();
    hp_snap_n_ = n_;
}

const std::pair<CertifiedReal, CertifiedReal>& Sweep::affine() {
    if (affine_n_ != n_) {
        affine_cache_ = affine_coeffs(counts_.view(), theta_, log_next_);
        affine_n_ = n_;
    }
    return affine_cache_;
}

void Sweep::escalate_prepare() {
    if (!hp_enabled_)
        throw std::logic_error("escalation requested on a sweep without hp snapshots");
    sync_hp();
}

Sweep::SignDecision Sweep::decide(const Rational& x) {
    const auto& [a, b] = affine();
    SignDecision d{};
    d.working = cert_sign(e_n(a, b, x));
    d.final_sign = d.working;
    if (d.working == Sign::Indeterminate) {
        d.escalated = true;
        escalate_prepare();
        d.final_sign = hp_e_sign(hp_theta_, counts_.view(), x, p_next_).sign;
    }
    return d;
}

HpReal Sweep::alpha_hp() {
    escalate_prepare();
    return hp_alpha(hp_theta_, counts_.view(), p_next_);
}

ScanSnapshot Sweep::snapshot() {
    ScanSnapshot s;
    s.n = n_;
    s.p_n = p_n_;
    s.p_next = p_next_;
    s.theta_hi = theta_.hi;
    s.theta_lo = theta_.lo;
    s.theta_radius = theta_.radius;
    s.theta_count = theta_.count;
    auto c = counts_.view();
    s.pi_n = c.pi_n;
    s.pi_log_n = c.pi_log_n;
    s.pi_pi_n = c.pi_pi_n;
    if (hp_enabled_) {
        sync_hp();
        s.hp_theta_digits = hp_theta_.digits();
    }
    return s;
}

// -- scan_psi -----------------------------------------------------------------

namespace {

struct Tracker {
    Rational x;
    uint64_t n_upper = 0;
    std::optional<uint64_t> last_nonpositive;
    std::vector<uint64_t> residual_indeterminate;
    uint64_t escalations = 0;
};

void require_scan_domain(const Rational& x) {
    if (!(Rational{-2, 1} < x && x < Rational{2, 1}))
        throw std::domain_error("scan_psi requires x in (-2, 2), got " + x.str());
}

}  // namespace

std::vector<PsiResult> scan_psi(const std::vector<Rational>& xs, const ScanOptions& opts) {
    if (xs.empty()) throw std::invalid_argument("scan_psi needs at least one x");

    auto t0 = std::chrono::steady_clock::now();

    std::vector<Tracker> trackers;
    trackers.reserve(xs.size());
    uint64_t n_target = 0;
    for (const auto& x : xs) {
        require_scan_domain(x);
        Tracker t;
        t.x = x;
        t.n_upper = n_upper(x, opts.constants);
        n_target = std::max(n_target, t.n_upper);
        trackers.push_back(std::move(t));
    }
    uint64_t n_stop = n_target;
    if (opts.n_ceiling) n_stop = std::min(n_stop, *opts.n_ceiling);

    Sweep::Config scfg;
    scfg.sieve = opts.sieve;
    scfg.hp_snapshots = opts.hp_snapshots;
    scfg.snapshot_every = opts.checkpoint_every;

    std::optional<Sweep> sweep;
    uint64_t resumed_from = 0;
    if (opts.resume) {
        if (opts.checkpoint_path.empty())
            throw std::invalid_argument("resume requested without a checkpoint path");
        ScanSnapshot snap = checkpoint_load(opts.checkpoint_path);
        if (snap.xs.size() != trackers.size())
            throw CheckpointFormatError("checkpoint tracks a different x set");
        for (size_t i = 0; i < trackers.size(); ++i) {
            if (snap.xs[i].x_num != trackers[i].x.num ||
                snap.xs[i].x_den != uint64_t(trackers[i].x.den))
                throw CheckpointFormatError("checkpoint tracks a different x set");
            if (snap.xs[i].last_nonpositive >= 0)
                trackers[i].last_nonpositive = uint64_t(snap.xs[i].last_nonpositive);
        }
        sweep.emplace(snap, n_stop, scfg);
        resumed_from = snap.n;
        if (sweep->n() >= n_stop)
            throw std::invalid_argument("checkpoint is already past the requested scan range");
        sweep->step();  // the checkpointed n was already evaluated
    } else {
        sweep.emplace(n_stop, scfg);
    }

    for (;;) {
        uint64_t n = sweep->n();
        for (auto& t : trackers) {
            if (n > t.n_upper) continue;
            auto d = sweep->decide(t.x);
            if (d.escalated) ++t.escalations;
            if (d.final_sign != Sign::Positive) {
                t.last_nonpositive = n;
                if (d.final_sign == Sign::Indeterminate) t.residual_indeterminate.push_back(n);
            }
        }
        if (!opts.checkpoint_path.empty() && opts.checkpoint_every != 0 &&
            n % opts.checkpoint_every == 0 && n != resumed_from && n < n_stop) {
            ScanSnapshot s = sweep->snapshot();
            s.xs.reserve(trackers.size());
            for (const auto& t : trackers)
                s.xs.push_back({t.x.num, uint64_t(t.x.den),
                                t.last_nonpositive ? int64_t(*t.last_nonpositive) : -1});
            checkpoint_save(s, opts.checkpoint_path);
        }
        if (opts.report_every != 0 && n % opts.report_every == 0)
            std::fprintf(stderr, "scan: n = %llu / %llu\n", (unsigned long long)n,
                         (unsigned long long)n_stop);
        if (n >= n_stop) break;
        sweep->step();
    }

    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();

    std::vector<PsiResult> results;
    results.reserve(trackers.size());
    for (auto& t : trackers) {
        PsiResult r;
        r.x = t.x;
        r.last_nonpositive = t.last_nonpositive;
        r.psi = t.last_nonpositive ? *t.last_nonpositive + 1 : 8;
        r.n_upper_used = t.n_upper;
        r.indeterminate_ns = std::move(t.residual_indeterminate);
        r.escalations = t.escalations;
        r.certified = r.indeterminate_ns.empty() && n_stop >= t.n_upper;
        r.runtime_ms = ms;
        r.theta_radius = sweep->theta().radius;
        results.push_back(std::move(r));
    }
    return results;
}

// -- alpha envelope and tail suprema -------------------------------------------

EnvelopeSummary scan_alpha_envelope(uint64_t n_from, uint64_t n_to,
                                    const std::function<void(const AlphaRecord&)>& sink,
                                    const SieveConfig& cfg) {
    if (n_from < 8 || n_from > n_to)
        throw std::domain_error("scan_alpha_envelope requires 8 <= n_from <= n_to");
    Sweep::Config scfg;
    scfg.sieve = cfg;
    scfg.hp_snapshots = false;
    Sweep sweep(n_to, scfg);
    while (sweep.n() < n_from) sweep.step();

    EnvelopeSummary summary;
    for (;;) {
        const auto& [a, b] = sweep.affine();
        auto [lo, hi] = alpha_n(a, b);
        AlphaRecord rec{sweep.n(), a, b, lo, hi};
        if (sink) sink(rec);
        ++summary.records;
        if (hi > summary.max_alpha_hi) {
            summary.max_alpha_hi = hi;
            summary.argmax_n = rec.n;
        }
        if (sweep.n() >= n_to) break;
        sweep.step();
    }
    return summary;
}

namespace {

struct TailTracker {
    uint64_t m;
    double best_lo = -HUGE_VAL;
    double best_hi = -HUGE_VAL;
    uint64_t argmax = 0;
    double second_hi = -HUGE_VAL;  // separation check for the hp refinement
    uint64_t argmax_counts_n = 0;
};

}  // namespace

std::vector<TailSup> tail_sups(const std::vector<uint64_t>& ms, const TailOptions& opts) {
    if (ms.empty()) return {};
    for (uint64_t m : ms)
        if (m < 8) throw std::domain_error("tail_sup requires m >= 8");

    std::vector<TailTracker> tr;
    tr.reserve(ms.size());
    for (uint64_t m : ms) tr.push_back({m});
    uint64_t m_min = *std::min_element(ms.begin(), ms.end());
    uint64_t m_max = *std::max_element(ms.begin(), ms.end());

    Sweep::Config scfg;
    scfg.sieve = opts.sieve;
    scfg.hp_snapshots = false;
    Sweep sweep(std::max<uint64_t>(m_max + 1000, 8), scfg);
    while (sweep.n() < m_min) sweep.step();

    uint64_t floor_n = std::max<uint64_t>(opts.constants.n_floor, m_max);
    if (opts.scan_to) floor_n = std::max(floor_n, *opts.scan_to);

    uint64_t n_final = 0;
    for (;;) {
        uint64_t n = sweep.n();
        const auto& [a, b] = sweep.affine();
        auto [lo, hi] = alpha_n(a, b);
        for (auto& t : tr) {
            if (n < t.m) continue;
            if (lo > t.best_lo) t.best_lo = lo;
            if (hi > t.best_hi) {
                t.second_hi = t.best_hi;
                t.best_hi = hi;
                t.argmax = n;
            } else if (hi > t.second_hi) {
                t.second_hi = hi;
            }
        }
        bool done = false;
        if (n >= floor_n) {
            double bound = alpha_tail_bound(n, opts.constants);
            done = true;
            for (const auto& t : tr)
                if (!(bound < t.best_lo)) {
                    done = false;
                    break;
                }
        }
        if (done || n >= opts.n_cap) {
            n_final = n;
            break;
        }
        sweep.step();
    }

    double final_bound =
        n_final >= opts.constants.n_floor ? alpha_tail_bound(n_final, opts.constants) : HUGE_VAL;

    std::vector<TailSup> out;
    out.reserve(tr.size());
    for (const auto& t : tr) {
        TailSup s;
        s.m = t.m;
        s.lo = t.best_lo;
        s.hi = t.best_hi;
        s.argmax_n = t.argmax;
        s.scanned_to = n_final;
        s.certified = final_bound < t.best_lo;
        out.push_back(std::move(s));
    }

    if (opts.hp_refine) {
        for (auto& s : out) {
            const TailTracker& t = *std::find_if(tr.begin(), tr.end(),
                                                 [&](const auto& q) { return q.m == s.m; });
            // the refinement stands for A_m only if the argmax is isolated
            if (!s.certified || !(t.best_lo > t.second_hi)) continue;
            HpTheta th = hp_theta_up_to(s.argmax_n, opts.sieve);
            CountingCursor cc = CountingCursor::at(s.argmax_n, opts.sieve);
            PrimeCursor pc(sieve_limit_for(s.argmax_n + 1), opts.sieve);
            pc.skip_to_index(s.argmax_n + 1);
            uint64_t p_next = pc.next_prime();
            s.hp_digits = hp_alpha(th, cc.view(), p_next).to_string();
        }
    }
    return out;
}

TailSup tail_sup(uint64_t m, const TailOptions& opts) { return tail_sups({m}, opts)[0]; }

double plateau_gap(uint64_t m, const TailOptions& opts) {
    auto sups = tail_sups({m, m + 1}, opts);
    if (!sups[0].certified || !sups[1].certified)
        throw std::runtime_error("plateau_gap(" + std::to_string(m) +
                                 "): tail suprema not certified within the scan cap");
    return std::max(0.0, sups[0].lo - sups[1].hi);
}

ConstancyResult verify_interval_constancy(const Rational& a, const Rational& b,
                                          const ScanOptions& opts) {
    if (!(Rational{-2, 1} < a && a <= b && b < Rational{2, 1}))
        throw std::domain_error("verify_interval_constancy requires -2 < a <= b < 2");
    auto res = scan_psi({a, b}, opts);
    ConstancyResult c;
    c.psi_a = res[0].psi;
    c.psi_b = res[1].psi;
    c.certified = res[0].certified && res[1].certified;
    c.constant = c.certified && res[0].psi == res[1].psi;
    return c;
}

std::vector<PlateauScaleRow> plateau_scale_report(const std::vector<uint64_t>& ms,
                                                  const TailOptions& opts) {
    // one shared pass over m and m+1 for every requested level
    std::vector<uint64_t> all;
    for (uint64_t m : ms) {
        all.push_back(m);
        all.push_back(m + 1);
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    auto sups = tail_sups(all, opts);
    auto find = [&](uint64_t m) -> const TailSup& {
        return *std::find_if(sups.begin(), sups.end(), [&](const auto& s) { return s.m == m; });
    };
    std::vector<PlateauScaleRow> rows;
    rows.reserve(ms.size());
    for (uint64_t m : ms) {
        const TailSup& sm = find(m);
        const TailSup& sm1 = find(m + 1);
        if (!sm.certified || !sm1.certified)
            throw std::runtime_error("plateau_scale_report: uncertified tail at m = " +
                                     std::to_string(m));
        double gap = std::max(0.0, sm.lo - sm1.hi);
        double md = static_cast<double>(m);
        double lg = std::log(md);
        rows.push_back({m, gap, gap * md * lg * lg});
    }
    return rows;
}

}  // namespace bonselab
