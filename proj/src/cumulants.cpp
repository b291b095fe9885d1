#include "freespec/cumulants.hpp"

#include <algorithm>
#include <map>

#include "freespec/errors.hpp"

namespace freespec {

namespace {

bool is_noncrossing(const SetPartition& p) {
    const int n = static_cast<int>(p.size());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (p[b] == p[a]) continue;
            for (int c = b + 1; c < n; ++c) {
                if (p[c] != p[a]) continue;
                for (int d = c + 1; d < n; ++d)
                    if (p[d] == p[b]) return false;
            }
        }
    return true;
}

void grow(SetPartition& cur, int next_label, int n, std::vector<SetPartition>& out) {
    if (static_cast<int>(cur.size()) == n) {
        if (is_noncrossing(cur)) out.push_back(cur);
        return;
    }
    for (int label = 0; label <= next_label; ++label) {
        cur.push_back(label);
        grow(cur, std::max(next_label, label + 1), n, out);
        cur.pop_back();
    }
}

class CumulantTable {
public:
    explicit CumulantTable(std::function<cplx(const std::vector<bool>&)> moment) : moment_(std::move(moment)) {}

    cplx kappa(const std::vector<bool>& pattern) {
        if (auto it = memo_.find(pattern); it != memo_.end()) return it->second;
        const int n = static_cast<int>(pattern.size());
        cplx value = moment_(pattern);
        for (const auto& part : partitions(n)) {
            const int blocks = *std::max_element(part.begin(), part.end()) + 1;
            if (blocks == 1) continue;
            cplx prod = 1.0;
            for (int blk = 0; blk < blocks && prod != cplx(0.0); ++blk) {
                std::vector<bool> sub;
                for (int i = 0; i < n; ++i)
                    if (part[static_cast<std::size_t>(i)] == blk) sub.push_back(pattern[static_cast<std::size_t>(i)]);
                prod *= kappa(sub);
            }
            value -= prod;
        }
        memo_.emplace(pattern, value);
        return value;
    }

private:
    const std::vector<SetPartition>& partitions(int n) {
        auto it = nc_.find(n);
        if (it == nc_.end()) it = nc_.emplace(n, noncrossing_partitions(n)).first;
        return it->second;
    }

    std::function<cplx(const std::vector<bool>&)> moment_;
    std::map<std::vector<bool>, cplx> memo_;
    std::map<int, std::vector<SetPartition>> nc_;
};

bool alternating(const std::vector<bool>& p) {
    if (p.size() % 2 != 0) return false;
    for (std::size_t i = 1; i < p.size(); ++i)
        if (p[i] == p[i - 1]) return false;
    return true;
}

}  // namespace

std::vector<SetPartition> noncrossing_partitions(int n) {
    if (n < 1) throw PreconditionError("partition size must be positive");
    if (n > 10) throw ResourceError("non-crossing partitions limited to n <= 10");
    std::vector<SetPartition> out;
    SetPartition cur{0};
    grow(cur, 1, n, out);
    return out;
}

cplx free_cumulant(const std::vector<bool>& pattern,
                   const std::function<cplx(const std::vector<bool>&)>& moment) {
    if (pattern.empty()) throw PreconditionError("cumulant needs at least one argument");
    CumulantTable table(moment);
    return table.kappa(pattern);
}

bool r_diagonal_by_cumulants(Kind kind, const Mat2& a, const Mat2& b, int max_order, double tol) {
    CumulantTable table([&](const std::vector<bool>& p) { return star_moment(kind, a, b, p); });
    for (int n = 1; n <= max_order; ++n)
        for (unsigned bits = 0; bits < (1U << n); ++bits) {
            std::vector<bool> p(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = (bits >> i) & 1U;
            if (alternating(p)) continue;
            if (std::abs(table.kappa(p)) > tol) return false;
        }
    return true;
}

}  // namespace freespec
