#include "minkowski/fourier.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <unordered_map>

#include "compensated_sum.hpp"
#include "farey64.hpp"
#include "minkowski/errors.hpp"

namespace minkowski {

namespace {

using detail::Cell64;
using detail::CompensatedSum;

constexpr double kPi = std::numbers::pi;
// Covers rounding in diam = 1/(qQ), pi * n * diam and the bound sums.
constexpr double kBoundInflation = 1.0 + 1e-12;

double cell_bound(const Cell64& c, double n_abs) {
    return c.mass() * std::min(2.0, kPi * n_abs * c.diameter());
}

// Depth-first walk over the leaves of the threshold partition, left to right.
// A cell is split when its bound at n_max exceeds delta.
template <class Visit>
bool for_each_leaf(double n_max, double delta, Visit&& visit) {
    std::vector<Cell64> stack;
    stack.reserve(256);
    stack.push_back(Cell64{});
    while (!stack.empty()) {
        const Cell64 c = stack.back();
        stack.pop_back();
        if (cell_bound(c, n_max) > delta) {
            if (!c.splittable()) detail::throw_precision_exhausted();
            stack.push_back(c.right_child());
            stack.push_back(c.left_child());
            continue;
        }
        if (!visit(c)) return false;
    }
    return true;
}

struct PassSummary {
    std::uint64_t cells = 0;
    double bound = 0.0;  // summed bound at n_max
    bool over_budget = false;
};

PassSummary count_pass(double n_max, double delta, std::uint64_t budget) {
    PassSummary s;
    s.over_budget = !for_each_leaf(n_max, delta, [&](const Cell64& c) {
        if (++s.cells > budget) return false;
        s.bound += cell_bound(c, n_max);
        return true;
    });
    s.bound *= kBoundInflation;
    return s;
}

struct Threshold {
    double delta;
    std::uint64_t cells;
    bool meets_tol;
};

// Largest threshold whose partition meets tol within budget, or, failing that,
// the finest partition that fits the budget.
Threshold choose_threshold(double n_max, double tol, std::uint64_t budget) {
    std::optional<Threshold> feasible;   // meets tol; want the largest delta
    std::optional<Threshold> partial;    // misses tol but fits; want the smallest delta
    std::optional<double> too_fine;      // over budget; delta below this is pointless
    double delta = tol / 8.0;
    for (int iter = 0; iter < 80; ++iter) {
        const auto s = count_pass(n_max, delta, budget);
        if (s.over_budget) {
            too_fine = delta;
        } else if (s.bound <= tol) {
            if (!feasible || delta > feasible->delta) feasible = Threshold{delta, s.cells, true};
            if (s.bound >= 0.6 * tol) break;
        } else {
            if (!partial || delta < partial->delta) partial = Threshold{delta, s.cells, false};
        }

        // Bracket: lower end is feasible or over budget, upper end misses tol.
        std::optional<double> lower;
        if (feasible) lower = feasible->delta;
        if (too_fine && (!lower || *too_fine > *lower)) lower = too_fine;
        const std::optional<double> upper = partial ? std::optional<double>(partial->delta) : std::nullopt;

        if (lower && upper) {
            if (*upper / *lower < 1.05) break;
            delta = std::sqrt(*lower * *upper);
        } else if (upper) {
            // Summed bounds shrink roughly like sqrt(delta).
            const double ratio = 0.8 * tol / s.bound;
            delta *= std::clamp(ratio * ratio, 1e-4, 0.5);
        } else {
            delta *= 4.0;  // only feasible so far: coarsen
        }
        if (delta < 1e-300) break;
    }
    if (feasible) return *feasible;
    if (partial) return *partial;
    return Threshold{1e300, 1, false};  // budget below one cell cannot happen; root only
}

// Frequencies sharing one partition: up to two contiguous runs (negative and positive).
struct Run {
    std::int64_t first;
    std::int64_t last;
};

struct Block {
    std::uint64_t abs_lo;  // smallest |n| present
    std::uint64_t abs_hi;  // largest |n| present
    std::vector<Run> runs;
};

std::vector<Block> group_blocks(std::int64_t first, std::int64_t last) {
    std::vector<Block> blocks;
    for (int j = 0; j < 62; ++j) {
        const std::int64_t lo = std::int64_t{1} << j, hi = (std::int64_t{1} << (j + 1)) - 1;
        Block b{std::numeric_limits<std::uint64_t>::max(), 0, {}};
        auto add = [&](std::int64_t a, std::int64_t c) {
            if (a > c) return;
            b.runs.push_back({a, c});
            for (auto n : {a, c}) {
                const auto m = static_cast<std::uint64_t>(n < 0 ? -n : n);
                b.abs_lo = std::min(b.abs_lo, m);
                b.abs_hi = std::max(b.abs_hi, m);
            }
        };
        add(std::max(first, -hi), std::min(last, -lo));
        add(std::max(first, lo), std::min(last, hi));
        if (!b.runs.empty()) blocks.push_back(std::move(b));
    }
    return blocks;
}

void evaluate_block(const Block& block, const FourierOptions& opts, kernels::PhaseAccumulateFn kernel,
                    std::vector<CoefficientRow>& out) {
    const double n_max = static_cast<double>(block.abs_hi);
    const Threshold th = choose_threshold(n_max, opts.tol, opts.budget);

    struct RunSums {
        Run run;
        std::vector<CompensatedSum> re, im;
        std::vector<double> batch_re, batch_im;
    };
    std::vector<RunSums> runs;
    for (const auto& r : block.runs) {
        const auto len = static_cast<std::size_t>(r.last - r.first + 1);
        runs.push_back({r, std::vector<CompensatedSum>(len), std::vector<CompensatedSum>(len), std::vector<double>(len),
                        std::vector<double>(len)});
    }

    // Per |n| in [abs_lo, abs_hi]: bound = pi |n| * lin + 2 * cap, where a cell is on the
    // linear branch while |n| < 2/(pi diam) and capped at 2 beyond.
    const auto span_len = static_cast<std::size_t>(block.abs_hi - block.abs_lo + 1);
    std::vector<CompensatedSum> lin_at(span_len + 1), cap_at(span_len + 1);

    std::vector<double> xs, ws;
    xs.reserve(kernels::kMaxBatch);
    ws.reserve(kernels::kMaxBatch);
    auto flush = [&]() {
        if (xs.empty()) return;
        for (auto& rs : runs) {
            std::fill(rs.batch_re.begin(), rs.batch_re.end(), 0.0);
            std::fill(rs.batch_im.begin(), rs.batch_im.end(), 0.0);
            kernel(xs, ws, rs.run.first, rs.batch_re, rs.batch_im);
            for (std::size_t k = 0; k < rs.batch_re.size(); ++k) {
                rs.re[k].add(rs.batch_re[k]);
                rs.im[k].add(rs.batch_im[k]);
            }
        }
        xs.clear();
        ws.clear();
    };

    for_each_leaf(n_max, th.delta, [&](const Cell64& c) {
        const double w = c.mass(), d = c.diameter();
        xs.push_back(c.midpoint());
        ws.push_back(w);

        const double switch_at = std::ceil(2.0 / (kPi * d));  // first |n| on the capped branch
        const double offset = switch_at - static_cast<double>(block.abs_lo);
        const auto idx = offset <= 0.0 ? std::size_t{0}
                         : offset >= static_cast<double>(span_len) ? span_len
                                                                   : static_cast<std::size_t>(offset);
        lin_at[idx].add(w * d);
        cap_at[idx].add(w);

        if (xs.size() == kernels::kMaxBatch) flush();
        return true;
    });
    flush();

    // lin[k] = sum of lin_at[c] for c > k; cap[k] = sum of cap_at[c] for c <= k.
    std::vector<double> lin(span_len), cap(span_len);
    {
        double suffix = 0.0;
        for (std::size_t k = span_len; k-- > 0;) {
            suffix += lin_at[k + 1].value();
            lin[k] = suffix;
        }
        double prefix = 0.0;
        for (std::size_t k = 0; k < span_len; ++k) {
            prefix += cap_at[k].value();
            cap[k] = prefix;
        }
    }

    for (auto& rs : runs) {
        for (std::size_t k = 0; k < rs.re.size(); ++k) {
            const std::int64_t n = rs.run.first + static_cast<std::int64_t>(k);
            const auto a = static_cast<std::uint64_t>(n < 0 ? -n : n);
            const std::size_t idx = a - block.abs_lo;
            const double measure_side = (kPi * static_cast<double>(a) * lin[idx] + 2.0 * cap[idx]) * kBoundInflation;
            const double bound = measure_side + kernels::rounding_slack(a);
            CoefficientRow row;
            row.coeff = FourierCoefficient{n, rs.re[k].value(), rs.im[k].value(), bound};
            row.cells_used = th.cells;
            row.budget_exhausted = measure_side > opts.tol;
            out.push_back(row);
        }
    }
}

void require_tol(double tol, const char* who) {
    if (!(tol > 0.0) || !std::isfinite(tol)) throw DomainError(std::string(who) + ": tol must be positive and finite");
}

}  // namespace

std::vector<CoefficientRow> coeff_range(std::int64_t first, std::int64_t last, const FourierOptions& opts) {
    require_tol(opts.tol, "coeff_range");
    if (first > last) throw DomainError("coeff_range: empty frequency range");
    constexpr std::int64_t kMaxFrequency = std::int64_t{1} << 40;
    if (first < -kMaxFrequency || last > kMaxFrequency) throw DomainError("coeff_range: |n| above 2^40 is not supported");
    if (opts.budget < 1) throw DomainError("coeff_range: budget must allow at least one cell");
    const auto kernel = opts.kernel ? opts.kernel : kernels::best();

    std::vector<CoefficientRow> out;
    out.reserve(static_cast<std::size_t>(last - first + 1));
    if (first <= 0 && 0 <= last) out.push_back(CoefficientRow{FourierCoefficient{0, 1.0, 0.0, 0.0}, false, 1});
    for (const auto& block : group_blocks(first, last)) evaluate_block(block, opts, kernel, out);
    std::sort(out.begin(), out.end(), [](const CoefficientRow& a, const CoefficientRow& b) { return a.coeff.n < b.coeff.n; });
    return out;
}

std::vector<CoefficientRow> coeff_table(std::int64_t n_min, std::int64_t n_max, double tol, std::uint64_t budget) {
    if (n_min < 0 || n_max < n_min) throw DomainError("coeff_table: need 0 <= n_min <= n_max");
    return coeff_range(n_min, n_max, FourierOptions{tol, budget, nullptr});
}

FourierCoefficient fourier_coeff(std::int64_t n, double tol, std::uint64_t budget) {
    const auto rows = coeff_range(n, n, FourierOptions{tol, budget, nullptr});
    const auto& row = rows.front();
    if (row.budget_exhausted)
        throw BudgetExhausted<FourierCoefficient>("fourier_coeff: cell budget of " + std::to_string(budget) +
                                                      " exhausted for n = " + std::to_string(n),
                                                  row.coeff);
    return row.coeff;
}

DecayEstimate fit_decay(std::span<const FourierCoefficient> table, int j_min, int j_max) {
    if (j_min < 0 || j_max < j_min || j_max > 40) throw DomainError("fit_decay: need 0 <= j_min <= j_max <= 40");
    if (j_max == j_min) throw DomainError("fit_decay: need at least two blocks");

    std::unordered_map<std::int64_t, const FourierCoefficient*> by_n;
    for (const auto& c : table) by_n.emplace(c.n, &c);

    DecayEstimate est;
    for (int j = j_min; j <= j_max; ++j) {
        BlockMaximum m{j, 0, -1.0, 0.0};
        for (std::int64_t n = std::int64_t{1} << j; n < (std::int64_t{1} << (j + 1)); ++n) {
            const auto it = by_n.find(n);
            if (it == by_n.end()) throw DomainError("fit_decay: table is missing n = " + std::to_string(n));
            const double v = it->second->abs();
            if (v > m.value) m = BlockMaximum{j, n, v, it->second->err_bound};
        }
        if (!(m.value > 0.0) || m.value <= m.err_bound)
            throw IllConditionedFit("fit_decay: block " + std::to_string(j) + " maximum " + std::to_string(m.value) +
                                    " is not above its error bound " + std::to_string(m.err_bound));
        est.block_maxima.push_back(m);
    }

    const double count = static_cast<double>(est.block_maxima.size());
    double sx = 0.0, sy = 0.0;
    for (const auto& m : est.block_maxima) {
        sx += m.j * std::numbers::ln2;
        sy += std::log(m.value);
    }
    const double mx = sx / count, my = sy / count;
    double sxx = 0.0, sxy = 0.0;
    for (const auto& m : est.block_maxima) {
        const double dx = m.j * std::numbers::ln2 - mx;
        sxx += dx * dx;
        sxy += dx * (std::log(m.value) - my);
    }
    const double slope = sxy / sxx;
    est.eta = -slope;
    est.intercept = my - slope * mx;
    double ss = 0.0;
    for (const auto& m : est.block_maxima) {
        const double r = std::log(m.value) - (est.intercept + slope * m.j * std::numbers::ln2);
        ss += r * r;
    }
    est.residual = std::sqrt(ss / count);
    return est;
}

}  // namespace minkowski
