#pragma once

#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "spawit/json_io.hpp"
#include "spawit/optimality.hpp"
#include "spawit/realignment.hpp"
#include "spawit/witness.hpp"

namespace spawit::cli {

// Exit code contract: 0 success, 1 internal/IO failure, 2 invalid
// arguments, 3 certification/verification failure.
inline constexpr int kOk = 0;
inline constexpr int kInternalError = 1;
inline constexpr int kInvalidArguments = 2;
inline constexpr int kVerificationFailure = 3;

struct ScanConfig {
    double gamma_from = 0.01;
    double gamma_to = 0.99;
    int steps = 99;
    std::string out_path;  // empty -> stdout
    unsigned seed = 1u;    // reserved for randomized subroutines; the scan itself is deterministic
};

namespace detail {

inline bool write_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return true;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) return false;
    out << text;
    return static_cast<bool>(out);
}

inline std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct ScanRow {
    double gamma, lambda_min, p_star, margin, trace_norm_numeric, trace_norm_analytic, lambda0;
};

inline ScanRow scan_row(double gamma) {
    const ComplexMatrix w = build_witness({gamma});
    const SpectrumCheck check = witness_spectrum_check(w);
    const SpaResult sr = spa(w, gamma);
    const RealignmentReport rr = entanglement_margin(sr);
    return ScanRow{gamma,     check.lambda_min,      sr.p_star,
                   rr.margin, rr.trace_norm_numeric, rr.trace_norm_analytic,
                   lambda0_threshold(gamma)};
}

}  // namespace detail

/// One-gamma JSON bundle: SPA result + realignment verdict + degeneracy.
inline int run_report(double gamma, const std::string& out_path = {}) {
    if (!(gamma > 0.0 && gamma < 1.0)) {
        std::cerr << "report: gamma must lie in (0,1)\n";
        return kInvalidArguments;
    }
    try {
        const ComplexMatrix w = build_witness({gamma});
        const SpectrumCheck check = witness_spectrum_check(w);
        const SpaResult sr = spa(w, gamma);
        const RealignmentReport rr = entanglement_margin(sr);
        json bundle{{"gamma", gamma},
                    {"spa", spa_to_json(sr)},
                    {"realignment", realignment_to_json(rr)},
                    {"spectrum", {{"lambda_min", check.lambda_min}, {"degeneracy", check.degeneracy}}}};
        if (!detail::write_text(out_path, bundle.dump(2) + "\n")) {
            std::cerr << "report: cannot write " << out_path << "\n";
            return kInternalError;
        }
        return kOk;
    } catch (const std::exception& e) {
        std::cerr << "report: " << e.what() << "\n";
        return kInternalError;
    }
}

/// Gamma scan to CSV, rows in ascending gamma regardless of worker order.
inline int run_scan(const ScanConfig& cfg) {
    if (!(cfg.gamma_from > 0.0 && cfg.gamma_to < 1.0 && cfg.gamma_from < cfg.gamma_to) ||
        cfg.steps < 2) {
        std::cerr << "scan: need 0 < from < to < 1 and steps >= 2\n";
        return kInvalidArguments;
    }
    try {
        std::vector<double> gammas(cfg.steps);
        for (int i = 0; i < cfg.steps; ++i)
            gammas[i] = cfg.gamma_from +
                        (cfg.gamma_to - cfg.gamma_from) * static_cast<double>(i) / (cfg.steps - 1);

        std::vector<detail::ScanRow> rows(cfg.steps);
        const unsigned workers =
            std::max(1u, std::min(std::thread::hardware_concurrency(), 8u));
        std::vector<std::future<void>> futures;
        for (unsigned wkr = 0; wkr < workers; ++wkr) {
            futures.push_back(std::async(std::launch::async, [&, wkr]() {
                for (int i = static_cast<int>(wkr); i < cfg.steps; i += workers)
                    rows[i] = detail::scan_row(gammas[i]);
            }));
        }
        for (auto& f : futures) f.get();

        std::string csv =
            "gamma,lambda_min,p_star,margin,trace_norm_numeric,trace_norm_analytic,lambda0\n";
        for (const detail::ScanRow& r : rows) {
            csv += detail::format_double(r.gamma) + "," + detail::format_double(r.lambda_min) +
                   "," + detail::format_double(r.p_star) + "," + detail::format_double(r.margin) +
                   "," + detail::format_double(r.trace_norm_numeric) + "," +
                   detail::format_double(r.trace_norm_analytic) + "," +
                   detail::format_double(r.lambda0) + "\n";
        }
        if (!detail::write_text(cfg.out_path, csv)) {
            std::cerr << "scan: cannot write " << cfg.out_path << "\n";
            return kInternalError;
        }
        return kOk;
    } catch (const std::exception& e) {
        std::cerr << "scan: " << e.what() << "\n";
        return kInternalError;
    }
}

/// Span ranks of the two zero-set vector families plus the see-saw value
/// for the family's Bell-span subspace. Exit 0 only for ranks (6, 9).
inline int run_optimality(double gamma, int samples, unsigned seed,
                          const std::string& out_path = {}) {
    if (!(gamma > 0.0 && gamma < 1.0)) {
        std::cerr << "optimality: gamma must lie in (0,1)\n";
        return kInvalidArguments;
    }
    if (samples < 12) {
        std::cerr << "optimality: need samples >= 12 to certify the spans\n";
        return kInvalidArguments;
    }
    try {
        const BellFamilyParams params{gamma};
        const ComplexMatrix b = build_b(params);
        const ComplexMatrix w = build_witness(params);

        std::vector<std::vector<cplx>> xy, xyc;
        double residual_b = 0.0, residual_w = 0.0;
        for (const cplx& t : sample_parameters(samples, 1.0, seed)) {
            for (const ConstraintSolution& sol : solve_constraint(t)) {
                const std::vector<cplx> v = product_vector(sol);
                const std::vector<cplx> vc = product_vector_conj(sol);
                residual_b = std::max(residual_b, std::abs(b.quadratic_form(v)));
                residual_w = std::max(residual_w, std::abs(w.quadratic_form(vc)));
                xy.push_back(v);
                xyc.push_back(vc);
            }
        }
        const SpanCertificate span_b = span_rank(xy);
        const SpanCertificate span_w = span_rank(xyc);

        std::vector<WeylIndex> trio;
        for (const auto& [idx, wt] : params.weights()) trio.push_back(idx);
        const double ces = ces_overlap(bell_span_projector(trio), 16, 250, seed);

        const bool ranks_ok = span_b.numeric_rank == 6 && span_w.numeric_rank == 9;
        json out{{"gamma", gamma},
                 {"samples", samples},
                 {"seed", seed},
                 {"b_span", span_certificate_to_json(span_b)},
                 {"w_span", span_certificate_to_json(span_w)},
                 {"max_residual_b", residual_b},
                 {"max_residual_w", residual_w},
                 {"ces_overlap", ces},
                 {"ranks_ok", ranks_ok}};
        if (!detail::write_text(out_path, out.dump(2) + "\n")) {
            std::cerr << "optimality: cannot write " << out_path << "\n";
            return kInternalError;
        }
        return ranks_ok ? kOk : kVerificationFailure;
    } catch (const std::exception& e) {
        std::cerr << "optimality: " << e.what() << "\n";
        return kInternalError;
    }
}

/// Exact certificate for gamma = 3/4. Exit 0 only on verdict true.
inline int run_certify(const std::string& out_path = {},
                       std::optional<exact::Rational> lambda_prime_override = std::nullopt) {
    try {
        const exact::CertificateReport rep =
            lambda_prime_override ? exact::certify_gamma_three_quarters(*lambda_prime_override)
                                  : exact::certify_gamma_three_quarters();
        if (!detail::write_text(out_path, exact::certificate_to_json(rep).dump(2) + "\n")) {
            std::cerr << "certify: cannot write " << out_path << "\n";
            return kInternalError;
        }
        return rep.verdict ? kOk : kVerificationFailure;
    } catch (const std::exception& e) {
        std::cerr << "certify: " << e.what() << "\n";
        return kInternalError;
    }
}

}  // namespace spawit::cli
