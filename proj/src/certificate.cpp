#include "bbwlab/certificate.hpp"

namespace bbwlab {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Acyclic: return "acyclic";
        case Verdict::Determined: return "determined";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

std::int64_t Certificate::dim_at(int degree) const {
    auto it = graded.find(degree);
    if (it == graded.end()) return 0;
    std::int64_t total = 0;
    for (const auto& p : it->second) total += p.dim;
    return total;
}

bool Certificate::single_unit_in_degree_zero() const {
    return verdict == Verdict::Determined && graded.size() == 1 && dim_at(0) == 1;
}

std::string Certificate::summary() const {
    std::string out = claim + ": " + verdict_name(verdict);
    if (verdict == Verdict::Determined) {
        out += " {";
        bool first = true;
        for (const auto& [deg, pieces] : graded) {
            if (!first) out += ", ";
            first = false;
            std::int64_t d = 0;
            for (const auto& p : pieces) d += p.dim;
            out += "H^" + std::to_string(deg) + " dim " + std::to_string(d);
        }
        out += "}";
    }
    out += " (chi = " + std::to_string(euler) + ")";
    return out;
}

}  // namespace bbwlab
