#include "bbwlab/bbw.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace bbwlab {

GrassmannianSpec GrassmannianSpec::gr(int k, int n) {
    if (k < 1 || k > n) throw std::invalid_argument("Gr(k,n): need 1 <= k <= n");
    return {Family::GrA, k, n};
}

GrassmannianSpec GrassmannianSpec::igr(int k, int ambient) {
    const int n = ambient / 2;
    if (k < 1 || k > n)
        throw std::invalid_argument("IGr(k,N): need 1 <= k <= floor(N/2)");
    return {ambient % 2 == 0 ? Family::IGrEven : Family::IGrOdd, k, ambient};
}

int GrassmannianSpec::dim() const {
    const int base = k * (ambient - k);
    if (family == Family::GrA) return base;
    return base - k * (k - 1) / 2;  // cut by a regular section of Lambda^2 U*
}

int GrassmannianSpec::index() const {
    switch (family) {
        case Family::GrA: return ambient;
        case Family::IGrEven: return 2 * half() - k + 1;
        case Family::IGrOdd: return 2 * half() - k + 2;
    }
    return 0;
}

std::string GrassmannianSpec::str() const {
    const char* name = family == Family::GrA ? "Gr" : "IGr";
    return std::string(name) + "(" + std::to_string(k) + "," + std::to_string(ambient) + ")";
}

int CohomologyOutcome::sole_degree() const {
    if (graded.size() != 1)
        throw std::logic_error("CohomologyOutcome::sole_degree: not a single degree");
    return graded.begin()->first;
}

std::int64_t CohomologyOutcome::dim_at(int degree) const {
    auto it = graded.find(degree);
    if (it == graded.end()) return 0;
    std::int64_t total = 0;
    for (const auto& p : it->second) total += p.dim;
    return total;
}

std::int64_t CohomologyOutcome::euler() const {
    std::int64_t chi = 0;
    for (const auto& [deg, pieces] : graded)
        for (const auto& p : pieces) chi += (deg % 2 == 0 ? p.dim : -p.dim);
    return chi;
}

std::string CohomologyOutcome::str() const {
    switch (kind) {
        case Kind::Acyclic: return "acyclic";
        case Kind::CertifiedAcyclic: return "certified-acyclic";
        case Kind::Unknown: return "unknown";
        case Kind::Determined: {
            std::string out = "H = {";
            bool first = true;
            for (const auto& [deg, pieces] : graded) {
                if (!first) out += ", ";
                first = false;
                std::int64_t d = 0;
                for (const auto& p : pieces) d += p.dim;
                out += std::to_string(deg) + " -> dim " + std::to_string(d);
            }
            return out + "}";
        }
    }
    return "?";
}

CohomologyOutcome bbw_gr(const GrassmannianSpec& X, const Weight& lambda_u_dual,
                         const Weight& mu_q_dual) {
    if (X.family != Family::GrA) throw std::invalid_argument("bbw_gr: type-A spec required");
    const int n = X.ambient;
    const int k = X.k;
    if (lambda_u_dual.length() != k || mu_q_dual.length() != n - k)
        throw std::invalid_argument("bbw_gr: weight lengths must be (k, n-k)");

    CohomologyOutcome out;
    std::vector<int>& alpha = out.alpha;
    alpha.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < k; ++i) alpha[static_cast<std::size_t>(i)] = (n - i) + lambda_u_dual[i];
    for (int j = 0; j < n - k; ++j)
        alpha[static_cast<std::size_t>(k + j)] = (n - k - j) + mu_q_dual[j];

    std::vector<int> sorted = alpha;
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i - 1] == sorted[i]) {
            out.kind = CohomologyOutcome::Kind::Acyclic;
            return out;
        }

    int ell = 0;
    for (std::size_t p = 0; p < alpha.size(); ++p)
        for (std::size_t q = p + 1; q < alpha.size(); ++q)
            if (alpha[p] < alpha[q]) ++ell;

    std::vector<int> gamma_e(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) gamma_e[static_cast<std::size_t>(i)] = sorted[static_cast<std::size_t>(i)] - (n - i);
    Weight gamma(std::move(gamma_e));

    out.kind = CohomologyOutcome::Kind::Determined;
    out.inversions = ell;
    out.graded[ell].push_back({gamma, weyl_dimension(gamma, n)});
    return out;
}

CohomologyOutcome kapranov_pairing(const GrassmannianSpec& X, const Weight& lambda_u,
                                   const Weight& mu_q_dual) {
    if (X.family != Family::GrA) throw std::invalid_argument("kapranov_pairing: type-A only");
    const int k = X.k;
    const int q = X.quotient_rank();
    if (lambda_u.length() != k || mu_q_dual.length() != q)
        throw std::invalid_argument("kapranov_pairing: weight lengths must be (k, n-k)");
    if (!lambda_u.is_diagram() || (k > 0 && lambda_u[0] > q))
        throw std::invalid_argument("kapranov_pairing: lambda " + lambda_u.str() +
                                    " outside the (n-k)^k box");
    if (!mu_q_dual.is_diagram() || (q > 0 && mu_q_dual[0] > k))
        throw std::invalid_argument("kapranov_pairing: mu " + mu_q_dual.str() +
                                    " outside the k^(n-k) box");
    return bbw_gr(X, dual_negate(lambda_u), mu_q_dual);
}

VanishVerdict kap_gen_vanishes(const GrassmannianSpec& X, const Weight& lambda_u,
                               const Weight& mu_q_dual, int p, int q) {
    if (X.family != Family::GrA) throw std::invalid_argument("kap_gen_vanishes: type-A only");
    const int k = X.k;
    const int qr = X.quotient_rank();
    if (lambda_u.length() != k || mu_q_dual.length() != qr)
        throw std::invalid_argument("kap_gen_vanishes: weight lengths must be (k, n-k)");
    if (p < 1 || p > k || q < 1 || q > qr)
        throw std::invalid_argument("kap_gen_vanishes: need 1 <= p <= k, 1 <= q <= n-k");
    if (lambda_u[0] > q || lambda_u[p - 1] < 0)
        throw std::invalid_argument("kap_gen_vanishes: leading p entries of lambda not in [0,q]");
    if (mu_q_dual[0] > p || mu_q_dual[q - 1] < 0)
        throw std::invalid_argument("kap_gen_vanishes: leading q entries of mu not in [0,p]");

    std::vector<int> lam_head(lambda_u.entries().begin(), lambda_u.entries().begin() + p);
    std::vector<int> mu_head(mu_q_dual.entries().begin(), mu_q_dual.entries().begin() + q);
    Weight mu_t = padded(transpose(YoungDiagram(std::move(mu_head))), p);
    return Weight(std::move(lam_head)) == mu_t ? VanishVerdict::NoConclusion
                                               : VanishVerdict::Vanishes;
}

CohomologyOutcome sp_acyclic(const GrassmannianSpec& X, const Weight& lambda_u_dual) {
    if (X.family != Family::IGrEven)
        throw std::invalid_argument("sp_acyclic: even isotropic spec required");
    const int n = X.half();
    const int k = X.k;
    if (lambda_u_dual.length() != k)
        throw std::invalid_argument("sp_acyclic: weight length must equal k");

    CohomologyOutcome out;
    out.criterion = "zero-or-collision";
    std::vector<int>& alpha = out.alpha;
    for (int i = 0; i < k; ++i) alpha.push_back((n - i) + lambda_u_dual[i]);
    for (int v = n - k; v >= 1; --v) alpha.push_back(v);

    std::vector<int> abs_sorted;
    abs_sorted.reserve(alpha.size());
    bool zero = false;
    for (int a : alpha) {
        if (a == 0) zero = true;
        abs_sorted.push_back(std::abs(a));
    }
    std::sort(abs_sorted.begin(), abs_sorted.end());
    const bool collision =
        std::adjacent_find(abs_sorted.begin(), abs_sorted.end()) != abs_sorted.end();

    out.kind = (zero || collision) ? CohomologyOutcome::Kind::CertifiedAcyclic
                                   : CohomologyOutcome::Kind::Unknown;
    return out;
}

}  // namespace bbwlab
