#include "bbwlab/schur.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace bbwlab {

void WeightMultiset::add(const Weight& w, std::int64_t mult) {
    if (w.length() != rank_)
        throw std::invalid_argument("WeightMultiset::add: weight " + w.str() +
                                    " has wrong length for rank " + std::to_string(rank_));
    if (mult <= 0) throw std::invalid_argument("WeightMultiset::add: multiplicity must be >= 1");
    items_[w] += mult;
}

std::int64_t WeightMultiset::count(const Weight& w) const {
    auto it = items_.find(w);
    return it == items_.end() ? 0 : it->second;
}

std::string WeightMultiset::str() const {
    std::string out = "{";
    bool first = true;
    for (const auto& [w, m] : items_) {
        if (!first) out += ", ";
        first = false;
        out += w.str();
        if (m != 1) out += ":" + std::to_string(m);
    }
    return out + "}";
}

WeightMultiset pieri_row(const Weight& lambda, int k) {
    const int n = lambda.length();
    WeightMultiset out(n);
    if (k < 0) throw std::invalid_argument("pieri_row: negative k");
    if (k == 0) {
        out.add(lambda);
        return out;
    }
    if (n == 0) return out;
    std::vector<int> mu(static_cast<std::size_t>(n), 0);
    // mu_i ranges over [lambda_i, lambda_{i-1}] (row 0: lambda_0 + remaining).
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == n) {
            if (left == 0) out.add(Weight(mu));
            return;
        }
        const int lo = lambda[i];
        const int hi = i == 0 ? lambda[0] + left : std::min(lambda[i - 1], lambda[i] + left);
        for (int v = lo; v <= hi; ++v) {
            mu[static_cast<std::size_t>(i)] = v;
            rec(i + 1, left - (v - lo));
        }
    };
    rec(0, k);
    return out;
}

WeightMultiset pieri_col(const Weight& lambda, int k) {
    const int n = lambda.length();
    WeightMultiset out(n);
    if (k < 0) throw std::invalid_argument("pieri_col: negative k");
    if (k > n) return out;  // Lambda^k of a rank-n bundle vanishes
    if (k == 0) {
        out.add(lambda);
        return out;
    }
    std::vector<int> mu(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == n) {
            if (left == 0) out.add(Weight(mu));
            return;
        }
        if (left > n - i) return;
        for (int add = 0; add <= std::min(left, 1); ++add) {
            const int v = lambda[i] + add;
            if (i > 0 && v > mu[static_cast<std::size_t>(i - 1)]) continue;
            mu[static_cast<std::size_t>(i)] = v;
            rec(i + 1, left - add);
        }
    };
    rec(0, k);
    return out;
}

Weight det_shift(const Weight& w, int t) {
    std::vector<int> e = w.entries();
    for (int& x : e) x += t;
    return Weight(std::move(e));
}

namespace {

// Enumerates Littlewood-Richardson fillings of nu/lambda with content mu by
// adding one horizontal strip per letter, subject to the lattice condition
//   sum_{r<=j} m_{i,r} <= sum_{r<=j-1} m_{i-1,r}
// on the per-row letter counts.  Each completed filling contributes 1 to the
// multiplicity of its final shape.  Shapes are capped at n rows.
struct LrEnumerator {
    int n;
    std::vector<int> shape;  // current nu, length n
    std::vector<int> mu;     // strip sizes (letters), positive entries only
    WeightMultiset* out;
    int shift_back;

    void run(const std::vector<int>& lambda) {
        shape = lambda;
        letter(0, shape, std::vector<int>(static_cast<std::size_t>(n), 0));
    }

    // prev_shape / prev_cum are taken by value: they freeze the state before
    // this strip while `shape` keeps mutating underneath.
    void letter(std::size_t li, std::vector<int> prev_shape, std::vector<int> prev_cum) {
        if (li == mu.size()) {
            out->add(det_shift(Weight(shape), shift_back));
            return;
        }
        std::vector<int> cum(static_cast<std::size_t>(n), 0);
        row(li, 0, mu[li], prev_shape, prev_cum, cum);
    }

    void row(std::size_t li, int j, int left, const std::vector<int>& prev_shape,
             const std::vector<int>& prev_cum, std::vector<int>& cum) {
        if (j == n) {
            if (left == 0) letter(li + 1, shape, cum);
            return;
        }
        const std::size_t sj = static_cast<std::size_t>(j);
        const int prefix = j == 0 ? 0 : cum[sj - 1];
        int maxc = left;
        if (j > 0) maxc = std::min(maxc, prev_shape[sj - 1] - shape[sj]);
        if (li > 0) {
            const int allowance = (j == 0 ? 0 : prev_cum[sj - 1]) - prefix;
            maxc = std::min(maxc, allowance);
        }
        for (int c = 0; c <= maxc; ++c) {
            shape[sj] += c;
            cum[sj] = prefix + c;
            row(li, j + 1, left - c, prev_shape, prev_cum, cum);
            shape[sj] -= c;
        }
        cum[sj] = prefix;
    }
};

}  // namespace

WeightMultiset lr_tensor(const Weight& lambda, const Weight& mu) {
    const int n = lambda.length();
    if (mu.length() != n) throw std::invalid_argument("lr_tensor: length mismatch");
    if (!mu.is_diagram())
        throw std::invalid_argument("lr_tensor: mu " + mu.str() + " must be a Young diagram");
    int t = 0;
    if (n > 0 && lambda[n - 1] < 0) t = -lambda[n - 1];
    const Weight base = det_shift(lambda, t);

    WeightMultiset out(n);
    std::vector<int> strips;
    for (int i = 0; i < n && mu[i] > 0; ++i) strips.push_back(mu[i]);

    LrEnumerator en{n, {}, strips, &out, -t};
    en.run(base.entries());
    return out;
}

WeightMultiset tensor_product(const Weight& a, const Weight& b) {
    const int n = a.length();
    if (b.length() != n) throw std::invalid_argument("tensor_product: length mismatch");
    int tb = 0;
    if (n > 0 && b[n - 1] < 0) tb = -b[n - 1];
    WeightMultiset raw = lr_tensor(a, det_shift(b, tb));
    if (tb == 0) return raw;
    WeightMultiset out(n);
    for (const auto& [w, m] : raw.items()) out.add(det_shift(w, -tb), m);
    return out;
}

WeightMultiset wedge_of_wedge_square(int k, int n) {
    if (k < 0 || n < 0) throw std::invalid_argument("wedge_of_wedge_square: negative argument");
    WeightMultiset out(n);
    if (2 * k > n * (n - 1)) return out;  // beyond the top exterior power
    const int boxes = 2 * k;
    std::vector<int> part;
    std::function<void(int, int)> rec = [&](int left, int maxpart) {
        if (left == 0) {
            YoungDiagram diagram{padded(Weight(std::vector<int>(part)), n)};
            if (is_almost_symmetric(diagram)) out.add(diagram);
            return;
        }
        if (static_cast<int>(part.size()) == n) return;
        for (int p = std::min(left, maxpart); p >= 1; --p) {
            part.push_back(p);
            rec(left - p, p);
            part.pop_back();
        }
    };
    rec(boxes, boxes);
    return out;
}

std::int64_t weyl_dimension(const Weight& gamma, int N) {
    if (gamma.length() != N)
        throw std::invalid_argument("weyl_dimension: weight length must equal the rank");
    // dim = prod_{i<j} (gamma_i - gamma_j + j - i) / (j - i).  Pairs are grouped
    // by the larger index j; after each group the accumulator equals the
    // dimension of the leading GL_{j+1} truncation, so division stays exact.
    __int128 acc = 1;
    for (int j = 1; j < N; ++j) {
        __int128 numer = 1;
        long long denom = 1;
        for (int i = 0; i < j; ++i) {
            numer *= gamma[i] - gamma[j] + (j - i);
            denom *= j - i;
        }
        acc *= numer;
        acc /= denom;
        if (acc <= 0 || acc > (static_cast<__int128>(1) << 62))
            throw std::overflow_error("weyl_dimension: out of range");
    }
    return static_cast<std::int64_t>(acc);
}

}  // namespace bbwlab
