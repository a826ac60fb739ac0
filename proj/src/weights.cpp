#include "bbwlab/weights.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bbwlab {

Weight::Weight(std::vector<int> entries) : entries_(std::move(entries)) {
    for (std::size_t i = 1; i < entries_.size(); ++i)
        if (entries_[i - 1] < entries_[i])
            throw std::invalid_argument("Weight: entries must be weakly decreasing, got " + str());
}

Weight Weight::zero(int n) {
    if (n < 0) throw std::invalid_argument("Weight::zero: negative length");
    return Weight(std::vector<int>(static_cast<std::size_t>(n), 0));
}

bool Weight::is_diagram() const { return entries_.empty() || entries_.back() >= 0; }

bool Weight::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](int e) { return e == 0; });
}

long long Weight::box_count() const {
    return std::accumulate(entries_.begin(), entries_.end(), 0LL);
}

std::string Weight::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(entries_[i]);
    }
    return out + ")";
}

YoungDiagram::YoungDiagram(Weight w) : weight_(std::move(w)) {
    if (!weight_.is_diagram())
        throw std::invalid_argument("YoungDiagram: " + weight_.str() + " has negative entries");
}

Weight dual_negate(const Weight& w) {
    std::vector<int> e(w.entries().rbegin(), w.entries().rend());
    for (int& x : e) x = -x;
    return Weight(std::move(e));
}

YoungDiagram transpose(const YoungDiagram& diagram) {
    const int cols = diagram.length() > 0 ? diagram[0] : 0;
    std::vector<int> t(static_cast<std::size_t>(cols), 0);
    for (int j = 1; j <= cols; ++j) {
        int count = 0;
        for (int i = 0; i < diagram.length(); ++i)
            if (diagram[i] >= j) ++count;
        t[static_cast<std::size_t>(j - 1)] = count;
    }
    return YoungDiagram(std::move(t));
}

int diagonal_length(const YoungDiagram& diagram) {
    int d = 0;
    for (int i = 0; i < diagram.length(); ++i)
        if (diagram[i] >= i + 1) d = i + 1;
    return d;
}

namespace {

std::vector<int> trimmed(std::vector<int> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

bool is_symmetric_diagram(const YoungDiagram& d) {
    return trimmed(d.weight().entries()) == trimmed(transpose(d).weight().entries());
}

}  // namespace

bool is_almost_symmetric(const YoungDiagram& diagram) {
    const int d = diagonal_length(diagram);
    std::vector<int> t = transpose(diagram).weight().entries();
    for (int i = 0; i < d; ++i) t[static_cast<std::size_t>(i)] -= 1;
    for (std::size_t i = 1; i < t.size(); ++i)
        if (t[i - 1] < t[i]) return false;  // subtracting 1 broke weak decrease
    return is_symmetric_diagram(YoungDiagram(std::move(t)));
}

Weight padded(const Weight& w, int n) {
    if (n < w.length()) throw std::invalid_argument("padded: target length too small");
    if (!w.is_diagram() && w.length() > 0)
        throw std::invalid_argument("padded: zero-padding a weight with negative entries");
    std::vector<int> e = w.entries();
    e.resize(static_cast<std::size_t>(n), 0);
    return Weight(std::move(e));
}

bool contains(const Weight& outer, const Weight& inner) {
    if (outer.length() != inner.length())
        throw std::invalid_argument("contains: length mismatch");
    for (int i = 0; i < outer.length(); ++i)
        if (inner[i] > outer[i]) return false;
    return true;
}

}  // namespace bbwlab
