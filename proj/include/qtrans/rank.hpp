#ifndef QTRANS_RANK_HPP
#define QTRANS_RANK_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "poly_matrix.hpp"

namespace qtrans {

enum class RankMode { randomized, certified };

inline std::string_view to_string(RankMode m) { return m == RankMode::randomized ? "randomized" : "certified"; }

struct RankOptions
{
    std::uint64_t seed = 0;
    int trials = 3;
    // Evaluation points are drawn uniformly from [-bound, bound]^n.
    long bound = 1'000'000;
};

struct RankResult
{
    int rank = 0;
    RankMode mode = RankMode::randomized;
    // Row and column indices of an r x r minor that is not identically zero.
    std::vector<int> minor_rows;
    std::vector<int> minor_cols;
    // Upper bound on the probability that `rank` underestimates the true rank
    // (randomized mode); zero in certified mode.
    Rat failure_bound = 0;
    // Certified mode: the minor itself, and whether every bordering
    // (r+1) x (r+1) minor was verified to vanish identically.
    std::optional<Poly> minor;
    bool certified = false;
};

inline std::vector<Rat> random_point(std::mt19937_64& rng, int arity, long bound)
{
    std::vector<Rat> p;
    const std::uint64_t span = 2 * static_cast<std::uint64_t>(bound) + 1;
    for (int i = 0; i < arity; ++i) p.emplace_back(static_cast<long>(rng() % span) - bound);
    return p;
}

namespace detail {

inline RankResult randomized_rank(const PolyMatrix& m, const RankOptions& opt)
{
    RankResult best;
    best.mode = RankMode::randomized;
    std::mt19937_64 rng(opt.seed);
    for (int trial = 0; trial < opt.trials; ++trial) {
        auto point = random_point(rng, m.arity(), opt.bound);
        PivotedRank pr = pivoted_rank(m.evaluate(point));
        if (trial == 0 || pr.rank > best.rank) {
            best.rank = pr.rank;
            best.minor_rows = pr.rows;
            best.minor_cols = pr.cols;
        }
    }
    // A nonzero minor has degree at most min(rows, cols) * maxdeg; by
    // Schwartz-Zippel it vanishes at one random point with probability at
    // most D / (2B + 1), independently across trials.
    const int maxdeg = std::max(0, m.max_degree());
    const long d = static_cast<long>(std::min(m.rows(), m.cols())) * maxdeg;
    Rat single(d, 2 * opt.bound + 1);
    single.canonicalize();
    if (single > 1) single = 1;
    Rat bound = 1;
    for (int t = 0; t < opt.trials; ++t) bound *= single;
    best.failure_bound = best.rank == std::min(m.rows(), m.cols()) ? Rat(0) : bound;
    return best;
}

// Fraction-free elimination guided by the numeric pivots. After r steps the
// pivot is the leading r x r minor and the remaining block holds exactly the
// (r+1) x (r+1) minors bordering it; all of them vanishing proves rank r.
inline RankResult certified_rank(const PolyMatrix& input, const RankOptions& opt)
{
    RankResult guess = randomized_rank(input, opt);
    std::vector<int> row_order = guess.minor_rows, col_order = guess.minor_cols;
    for (int i = 0; i < input.rows(); ++i)
        if (std::find(row_order.begin(), row_order.end(), i) == row_order.end()) row_order.push_back(i);
    for (int j = 0; j < input.cols(); ++j)
        if (std::find(col_order.begin(), col_order.end(), j) == col_order.end()) col_order.push_back(j);
    PolyMatrix m = input.submatrix(row_order, col_order);

    Poly prev = Poly::constant(m.arity(), 1);
    int k = 0;
    const int limit = std::min(m.rows(), m.cols());
    for (; k < limit; ++k) {
        if (m(k, k).is_zero()) {
            int pr = -1, pc = -1;
            for (int i = k; i < m.rows() && pr < 0; ++i)
                for (int j = k; j < m.cols(); ++j)
                    if (!m(i, j).is_zero()) {
                        pr = i;
                        pc = j;
                        break;
                    }
            if (pr < 0) break;
            for (int j = 0; j < m.cols(); ++j) std::swap(m(k, j), m(pr, j));
            std::swap(row_order[std::size_t(k)], row_order[std::size_t(pr)]);
            for (int i = 0; i < m.rows(); ++i) std::swap(m(i, k), m(i, pc));
            std::swap(col_order[std::size_t(k)], col_order[std::size_t(pc)]);
        }
        for (int i = k + 1; i < m.rows(); ++i)
            for (int j = k + 1; j < m.cols(); ++j) {
                Poly num = m(k, k) * m(i, j) - m(i, k) * m(k, j);
                m(i, j) = prev.is_constant() ? num * (1 / prev.leading_coefficient()) : *divide_exact(num, prev);
            }
        prev = m(k, k);
    }

    RankResult out;
    out.mode = RankMode::certified;
    out.rank = k;
    out.minor_rows.assign(row_order.begin(), row_order.begin() + k);
    out.minor_cols.assign(col_order.begin(), col_order.begin() + k);
    out.minor = k == 0 ? Poly::constant(m.arity(), 1) : prev;
    out.certified = true;
    return out;
}

} // namespace detail

// Rank of m over the rational function field Q(x).
inline RankResult rank(const PolyMatrix& m, RankMode mode, const RankOptions& opt = {})
{
    if (m.rows() == 0 || m.cols() == 0 || m.is_zero()) {
        RankResult r;
        r.mode = mode;
        r.certified = mode == RankMode::certified;
        if (r.certified) r.minor = Poly::constant(m.arity(), 1);
        return r;
    }
    return mode == RankMode::randomized ? detail::randomized_rank(m, opt) : detail::certified_rank(m, opt);
}

inline int jacobian_rank(const PolyMap& h, RankMode mode = RankMode::certified, const RankOptions& opt = {})
{
    return rank(jacobian(h), mode, opt).rank;
}

} // namespace qtrans

#endif
