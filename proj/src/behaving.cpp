#include "zfseq/behaving.hpp"

#include <algorithm>

namespace zfseq {

bool is_behaving_ints(const std::vector<int>& s) {
    if (s.empty())
        throw std::invalid_argument("is_behaving_ints: empty sequence");
    for (int v : s)
        if (v < 1)
            throw std::invalid_argument("is_behaving_ints: terms must be positive");
    std::vector<int> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    if (sorted[0] != 1) return false;
    long long prefix = 0;
    for (size_t i = 0; i + 1 < sorted.size(); ++i) {
        prefix += sorted[i];
        if (sorted[i + 1] > 1 + prefix) return false;
    }
    return true;
}

std::optional<std::vector<int>> g_behaving_decomposition(
    const GroupSequence& alpha, int a) {
    const int n = alpha.n;
    int am = ((a % n) + n) % n;
    if (am == 0)
        throw std::invalid_argument("g_behaving_decomposition: base must be nonzero");
    const int d = gcd_int(am, n);
    const int ord = n / d;
    // <a> is the set of multiples of d; within it, division by a is
    // division by a/d in Z_{ord}.
    const int inv = mod_inverse(am / d, ord);
    std::vector<int> s;
    s.reserve(alpha.terms.size());
    long long total = 0;
    for (int t : alpha.terms) {
        if (t % d != 0) return std::nullopt;  // t outside <a>
        int sv = static_cast<int>(
            (static_cast<long long>(t / d) * inv) % ord);
        if (sv == 0) return std::nullopt;  // t = 0 has no s in [1, ord)
        s.push_back(sv);
        total += sv;
    }
    if (s.empty()) return std::nullopt;
    if (total >= ord) return std::nullopt;
    if (!is_behaving_ints(s)) return std::nullopt;
    return s;
}

}  // namespace zfseq
