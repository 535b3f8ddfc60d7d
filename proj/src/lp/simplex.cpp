#include <algorithm>
#include <limits>

#include "subtropical/lp.hpp"

namespace subtropical {

namespace {

// Consecutive degenerate pivots tolerated under Dantzig pricing before
// switching to Bland's rule.
constexpr std::size_t kDegenerateStreak = 50;

std::size_t bit_length(const Integer &x) { return x == 0 ? 0 : mpz_sizeinbase(x.get_mpz_t(), 2); }

std::size_t bit_length(std::int64_t x) {
    std::uint64_t u = x < 0 ? static_cast<std::uint64_t>(-(x + 1)) + 1 : static_cast<std::uint64_t>(x);
    return u == 0 ? 0 : 64 - static_cast<std::size_t>(__builtin_clzll(u));
}

// Requires |x| < 2^127.
__int128 to_i128(const Integer &x) {
    std::uint64_t words[2] = {0, 0};
    std::size_t count = 0;
    mpz_export(words, &count, -1, sizeof(std::uint64_t), 0, 0, x.get_mpz_t());
    auto mag = static_cast<__int128>((static_cast<unsigned __int128>(words[1]) << 64) | words[0]);
    return sgn(x) < 0 ? -mag : mag;
}

// Phase-one revised simplex over the Farkas alternative. Columns 0..m-1 are
// the y variables with column j = (row_j, 1); columns m..m+k-1 are the
// artificial variables of the k = num_vars + 1 equality rows.
class FarkasSimplex {
  public:
    explicit FarkasSimplex(const ConstraintSystem &sys)
        : sys_(sys), m_(sys.num_rows()), k_(sys.num_vars() + 1), basis_(k_), in_basis_(m_, false),
          binv_(k_, std::vector<Rational>(k_)), xb_(k_) {
        for (std::size_t i = 0; i < k_; ++i) {
            basis_[i] = m_ + i;
            binv_[i][i] = 1;
        }
        xb_[k_ - 1] = 1;
    }

    LpOutcome run(SimplexStats *stats) {
        std::size_t streak = 0;
        bool bland = false;
        for (;;) {
            compute_multipliers();
            auto entering = price(bland);
            if (!entering) break;
            bool degenerate = pivot(*entering, bland);
            if (stats) {
                ++stats->pivots;
                if (degenerate) ++stats->degenerate_pivots;
            }
            if (degenerate) {
                if (++streak > kDegenerateStreak) bland = true;
            } else {
                streak = 0;
                bland = false;
            }
        }

        // Objective value equals the multiplier of the normalization row.
        const Rational &objective = pi_[k_ - 1];
        if (sgn(objective) == 0) return {};
        std::vector<Rational> v(k_ - 1);
        for (std::size_t i = 0; i + 1 < k_; ++i) v[i] = pi_[i] / objective;
        if (!satisfies(sys_, v)) throw std::logic_error("simplex returned a point violating its system");
        return {std::move(v)};
    }

  private:
    void compute_multipliers() {
        pi_.assign(k_, Rational(0));
        for (std::size_t i = 0; i < k_; ++i) {
            if (basis_[i] < m_) continue; // zero cost
            for (std::size_t j = 0; j < k_; ++j) pi_[j] += binv_[i][j];
        }
        Integer den(1);
        for (const auto &x : pi_) den = lcm(den, x.get_den());
        scaled_pi_.resize(k_);
        std::size_t bits = 0;
        for (std::size_t j = 0; j < k_; ++j) {
            scaled_pi_[j] = Rational(pi_[j] * den).get_num();
            bits = std::max(bits, bit_length(scaled_pi_[j]));
        }
        // Worst case |score| < 2^(bits + entry_bits + log2 k).
        std::size_t bound_bits = bits + bit_length(std::max<std::int64_t>(sys_.max_abs_entry(), 1)) +
                                 bit_length(static_cast<std::int64_t>(k_)) + 1;
        if (bound_bits < 63) {
            width_ = Width::i64;
            pi64_.resize(k_);
            for (std::size_t j = 0; j < k_; ++j) pi64_[j] = scaled_pi_[j].get_si();
        } else if (bound_bits < 127) {
            width_ = Width::i128;
            pi128_.resize(k_);
            for (std::size_t j = 0; j < k_; ++j) pi128_[j] = to_i128(scaled_pi_[j]);
        } else {
            width_ = Width::big;
        }
    }

    // Entering column with negative reduced cost, i.e. positive score
    // pi . (row_j, 1). Dantzig picks the largest score, Bland the first index.
    std::optional<std::size_t> price(bool bland) {
        switch (width_) {
        case Width::i64:
            return price_with<std::int64_t>(pi64_, bland);
        case Width::i128:
            return price_with<__int128>(pi128_, bland);
        case Width::big:
            break;
        }
        std::optional<std::size_t> best;
        Integer best_score(0), score;
        for (std::size_t j = 0; j < m_; ++j) {
            if (in_basis_[j]) continue;
            auto row = sys_.row(j);
            score = scaled_pi_[k_ - 1];
            for (std::size_t i = 0; i + 1 < k_; ++i)
                if (row[i] != 0) score += scaled_pi_[i] * static_cast<long>(row[i]);
            if (score > best_score) {
                best = j;
                if (bland) break;
                best_score = score;
            }
        }
        return best;
    }

    template <typename T> std::optional<std::size_t> price_with(const std::vector<T> &pi, bool bland) const {
        std::optional<std::size_t> best;
        T best_score = 0;
        const std::size_t nv = k_ - 1;
        for (std::size_t j = 0; j < m_; ++j) {
            if (in_basis_[j]) continue;
            auto row = sys_.row(j);
            T score = pi[nv];
            for (std::size_t i = 0; i < nv; ++i) score += pi[i] * static_cast<T>(row[i]);
            if (score > best_score) {
                best = j;
                if (bland) break;
                best_score = score;
            }
        }
        return best;
    }

    // Returns true for a degenerate pivot.
    bool pivot(std::size_t entering, bool bland) {
        auto row = sys_.row(entering);
        std::vector<Rational> u(k_);
        for (std::size_t i = 0; i < k_; ++i) {
            Rational acc = binv_[i][k_ - 1];
            for (std::size_t j = 0; j + 1 < k_; ++j)
                if (row[j] != 0) acc += binv_[i][j] * static_cast<long>(row[j]);
            u[i] = std::move(acc);
        }

        std::optional<std::size_t> leave;
        Rational best_ratio;
        for (std::size_t i = 0; i < k_; ++i) {
            if (sgn(u[i]) <= 0) continue;
            Rational ratio = xb_[i] / u[i];
            bool take = false;
            if (!leave || ratio < best_ratio) {
                take = true;
            } else if (ratio == best_ratio) {
                if (bland) {
                    take = basis_[i] < basis_[*leave];
                } else {
                    // Prefer driving out artificials, then the larger pivot.
                    bool art_i = basis_[i] >= m_, art_l = basis_[*leave] >= m_;
                    take = (art_i && !art_l) || (art_i == art_l && u[i] > u[*leave]);
                }
            }
            if (take) {
                leave = i;
                best_ratio = ratio;
            }
        }
        // Phase one is bounded below, and an improving column always has a
        // positive entry in its tableau column.
        if (!leave) throw std::logic_error("unbounded phase-one simplex");

        const std::size_t r = *leave;
        const Rational piv = u[r];
        for (auto &x : binv_[r]) x /= piv;
        xb_[r] /= piv;
        for (std::size_t i = 0; i < k_; ++i) {
            if (i == r || sgn(u[i]) == 0) continue;
            const Rational factor = u[i];
            for (std::size_t j = 0; j < k_; ++j) binv_[i][j] -= factor * binv_[r][j];
            xb_[i] -= factor * xb_[r];
        }
        if (basis_[r] < m_) in_basis_[basis_[r]] = false;
        basis_[r] = entering;
        in_basis_[entering] = true;
        return sgn(best_ratio) == 0;
    }

    enum class Width { i64, i128, big };

    const ConstraintSystem &sys_;
    std::size_t m_, k_;
    std::vector<std::size_t> basis_;
    std::vector<bool> in_basis_;
    std::vector<std::vector<Rational>> binv_;
    std::vector<Rational> xb_;
    std::vector<Rational> pi_;
    std::vector<Integer> scaled_pi_;
    Width width_ = Width::big;
    std::vector<std::int64_t> pi64_;
    std::vector<__int128> pi128_;
};

} // namespace

LpOutcome simplex_feasible(const ConstraintSystem &sys, SimplexStats *stats) {
    if (sys.num_rows() == 0) return {std::vector<Rational>(sys.num_vars())};
    if (sys.num_vars() == 0) return {};
    return FarkasSimplex(sys).run(stats);
}

} // namespace subtropical
