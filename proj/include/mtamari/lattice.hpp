#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "errors.hpp"
#include "paths.hpp"
#include "step_path.hpp"

namespace mtamari {

// Tamari covers of p: for each factor "du", swap the d with the excursion S
// of the u.
inline std::vector<step_path> covers(const step_path& p)
{
    std::vector<step_path> out;
    const auto match = match_positions(p);
    for (int i = 0; i + 1 < p.length(); ++i) {
        if (p.is_up(i) || !p.is_up(i + 1)) {
            continue;
        }
        const int s_begin = i + 1;
        const int s_end = match[static_cast<std::size_t>(s_begin)]; // inclusive
        const int s_len = s_end - s_begin + 1;
        const step_path::word_type low = p.bits() & ((step_path::word_type{1} << i) - 1);
        const step_path::word_type excursion = (p.bits() >> s_begin) & ((step_path::word_type{1} << s_len) - 1);
        const step_path::word_type high = s_end + 1 < 64 ? (p.bits() >> (s_end + 1)) << (s_end + 1) : 0;
        // New layout: [0, i) unchanged, S at [i, i + s_len), d at i + s_len, rest unchanged.
        out.push_back(step_path::from_bits(low | (excursion << i) | high, p.length()));
    }
    return out;
}

inline bool leq(const step_path& p, const step_path& q)
{
    if (p.size() != q.size()) {
        throw size_mismatch("cannot compare paths of sizes " + std::to_string(p.size()) + " and "
                            + std::to_string(q.size()));
    }
    return distance_vector(p).dominated_by(distance_vector(q));
}

// Pointwise ordinate comparison.
inline bool is_below(const step_path& p, const step_path& q)
{
    if (p.size() != q.size()) {
        throw size_mismatch("cannot compare paths of different sizes");
    }
    const auto hp = heights(p);
    const auto hq = heights(q);
    for (std::size_t i = 0; i < hp.size(); ++i) {
        if (hp[i] > hq[i]) {
            return false;
        }
    }
    return true;
}

/// The m-Tamari lattice of size n as an explicit cover DAG over all m-Dyck
/// paths of size mn. Nodes are indexed in lexicographic path order.
class hasse_diagram {
public:
    static constexpr std::size_t default_node_cap = 100000;

    int m() const noexcept { return m_; }
    int n() const noexcept { return n_; }
    std::size_t node_count() const noexcept { return nodes_.size(); }
    std::size_t edge_count() const noexcept
    {
        std::size_t e = 0;
        for (const auto& c : covers_) {
            e += c.size();
        }
        return e;
    }

    const std::vector<step_path>& nodes() const noexcept { return nodes_; }
    const step_path& node(std::size_t i) const { return nodes_.at(i); }
    const std::vector<std::size_t>& covers_of(std::size_t i) const { return covers_.at(i); }
    const distance_function& distances(std::size_t i) const { return distances_.at(i); }

    // Indices sorted so that every cover edge goes forward.
    const std::vector<std::size_t>& topological_order() const noexcept { return topo_; }

    std::size_t index_of(const step_path& p) const
    {
        const auto it = index_.find(p);
        if (it == index_.end()) {
            throw invalid_input("'" + p.to_string() + "' is not a node of this diagram");
        }
        return it->second;
    }

    // Order test through distance vectors.
    bool leq(std::size_t a, std::size_t b) const { return distances_.at(a).dominated_by(distances_.at(b)); }

    std::size_t minimum() const { return topo_.front(); }
    std::size_t maximum() const { return topo_.back(); }

    friend hasse_diagram build_hasse(int m, int n, std::size_t node_cap);

private:
    int m_ = 1;
    int n_ = 0;
    std::vector<step_path> nodes_;
    std::vector<std::vector<std::size_t>> covers_;
    std::vector<distance_function> distances_;
    std::vector<std::size_t> topo_;
    std::unordered_map<step_path, std::size_t> index_;
};

inline hasse_diagram build_hasse(int m, int n, std::size_t node_cap = hasse_diagram::default_node_cap)
{
    if (m < 1 || n < 0) {
        throw invalid_input("need m >= 1 and n >= 0");
    }
    hasse_diagram h;
    h.m_ = m;
    h.n_ = n;
    for_each_m_dyck(m, n, [&](const step_path& p) {
        if (h.nodes_.size() >= node_cap) {
            throw resource_limit("more than " + std::to_string(node_cap) + " nodes");
        }
        h.nodes_.push_back(p);
    });
    h.index_.reserve(h.nodes_.size());
    for (std::size_t i = 0; i < h.nodes_.size(); ++i) {
        h.index_.emplace(h.nodes_[i], i);
        h.distances_.push_back(distance_vector(h.nodes_[i]));
    }
    h.covers_.resize(h.nodes_.size());
    for (std::size_t i = 0; i < h.nodes_.size(); ++i) {
        for (const auto& q : covers(h.nodes_[i])) {
            const auto it = h.index_.find(q);
            if (it == h.index_.end()) {
                throw check_failure("cover '" + q.to_string() + "' of '" + h.nodes_[i].to_string()
                                    + "' is not an m-Dyck path");
            }
            h.covers_[i].push_back(it->second);
        }
    }
    // A cover strictly increases the sum of the distance vector.
    h.topo_.resize(h.nodes_.size());
    std::iota(h.topo_.begin(), h.topo_.end(), std::size_t{0});
    std::stable_sort(h.topo_.begin(), h.topo_.end(), [&](std::size_t a, std::size_t b) {
        return h.distances_[a].sum() < h.distances_[b].sum();
    });
    return h;
}

/// Transitive closure of the cover relation, one bitset row per node. This is
/// the graph-reachability view of the order, kept independent of distance
/// vectors.
class reachability {
public:
    explicit reachability(const hasse_diagram& h) : n_(h.node_count()), words_((n_ + 63) / 64), rows_(n_ * words_, 0)
    {
        const auto& topo = h.topological_order();
        for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
            const std::size_t v = *it;
            set(v, v);
            for (std::size_t c : h.covers_of(v)) {
                for (std::size_t w = 0; w < words_; ++w) {
                    rows_[v * words_ + w] |= rows_[c * words_ + w];
                }
            }
        }
    }

    std::size_t size() const noexcept { return n_; }

    bool reaches(std::size_t a, std::size_t b) const
    {
        return (rows_[a * words_ + b / 64] >> (b % 64)) & 1u;
    }

private:
    void set(std::size_t a, std::size_t b) { rows_[a * words_ + b / 64] |= std::uint64_t{1} << (b % 64); }

    std::size_t n_;
    std::size_t words_;
    std::vector<std::uint64_t> rows_;
};

// Greatest lower bound computed from the reachability relation only.
inline std::size_t meet(const reachability& r, std::size_t a, std::size_t b)
{
    std::vector<std::size_t> lower;
    for (std::size_t c = 0; c < r.size(); ++c) {
        if (r.reaches(c, a) && r.reaches(c, b)) {
            lower.push_back(c);
        }
    }
    for (std::size_t g : lower) {
        if (std::all_of(lower.begin(), lower.end(), [&](std::size_t c) { return r.reaches(c, g); })) {
            return g;
        }
    }
    throw not_a_lattice("nodes " + std::to_string(a) + " and " + std::to_string(b) + " have no meet");
}

inline std::size_t join(const reachability& r, std::size_t a, std::size_t b)
{
    std::vector<std::size_t> upper;
    for (std::size_t c = 0; c < r.size(); ++c) {
        if (r.reaches(a, c) && r.reaches(b, c)) {
            upper.push_back(c);
        }
    }
    for (std::size_t g : upper) {
        if (std::all_of(upper.begin(), upper.end(), [&](std::size_t c) { return r.reaches(g, c); })) {
            return g;
        }
    }
    throw not_a_lattice("nodes " + std::to_string(a) + " and " + std::to_string(b) + " have no join");
}

inline std::size_t meet(const hasse_diagram& h, std::size_t a, std::size_t b) { return meet(reachability(h), a, b); }
inline std::size_t join(const hasse_diagram& h, std::size_t a, std::size_t b) { return join(reachability(h), a, b); }

struct interval_record {
    std::size_t lower = 0;
    std::size_t upper = 0;
    int contacts_lower = 0;
    int initial_rise_upper = 0;
    int longest_chain = 0;
};

// Longest cover-chain length from `lower` to every node (-1 if unreachable).
inline std::vector<int> longest_chains_from(const hasse_diagram& h, std::size_t lower)
{
    std::vector<int> best(h.node_count(), -1);
    best[lower] = 0;
    for (std::size_t v : h.topological_order()) {
        if (best[v] < 0) {
            continue;
        }
        for (std::size_t c : h.covers_of(v)) {
            best[c] = std::max(best[c], best[v] + 1);
        }
    }
    return best;
}

// Streams every interval exactly once, grouped by lower endpoint.
template <class Visitor>
void for_each_interval(const hasse_diagram& h, Visitor&& visit)
{
    const std::size_t count = h.node_count();
    std::vector<int> contact_count(count);
    std::vector<int> rise(count);
    for (std::size_t i = 0; i < count; ++i) {
        contact_count[i] = contacts(h.node(i));
        rise[i] = initial_rise(h.node(i), h.m());
    }
    for (std::size_t a = 0; a < count; ++a) {
        const auto chains = longest_chains_from(h, a);
        for (std::size_t b = 0; b < count; ++b) {
            if (!h.leq(a, b)) {
                continue;
            }
            if (chains[b] < 0) {
                throw check_failure("distance order and cover reachability disagree");
            }
            visit(interval_record{a, b, contact_count[a], rise[b], chains[b]});
        }
    }
}

inline std::vector<interval_record> enumerate_intervals(const hasse_diagram& h)
{
    std::vector<interval_record> out;
    for_each_interval(h, [&](const interval_record& r) { out.push_back(r); });
    return out;
}

struct pointed_interval {
    pointed_path lower;
    pointed_path upper;
    int active_contacts = 0;
    int initial_rise = 0;
};

namespace detail {

// All weakly increasing k-tuples from `choices`, each entry >= the matching
// entry of `floor` (when floor is nonempty).
inline void weak_tuples(const std::vector<int>& choices, std::size_t k, const std::vector<int>& floor,
                        std::vector<int>& current, std::vector<std::vector<int>>& out)
{
    if (current.size() == k) {
        out.push_back(current);
        return;
    }
    const int prev = current.empty() ? choices.front() : current.back();
    const int lo = floor.empty() ? prev : std::max(prev, floor[current.size()]);
    for (int c : choices) {
        if (c < lo) {
            continue;
        }
        current.push_back(c);
        weak_tuples(choices, k, floor, current, out);
        current.pop_back();
    }
}

} // namespace detail

// k-pointed intervals over the diagram: both endpoints carry k weakly
// increasing contacts, each upper point weakly right of its lower point.
// The initial rise of a pointed interval is that of the upper path, or 0
// when the upper path's first point is the origin.
template <class Visitor>
void for_each_pointed_interval(const hasse_diagram& h, int k, Visitor&& visit)
{
    if (k < 0 || k > h.m()) {
        throw out_of_range("pointing count k must satisfy 0 <= k <= m");
    }
    const std::size_t kk = static_cast<std::size_t>(k);
    for_each_interval(h, [&](const interval_record& r) {
        const auto& p = h.node(r.lower);
        const auto& q = h.node(r.upper);
        const auto pc = contact_abscissas(p);
        const auto qc = contact_abscissas(q);
        std::vector<std::vector<int>> lower_tuples;
        std::vector<int> scratch;
        detail::weak_tuples(pc, kk, {}, scratch, lower_tuples);
        for (const auto& lt : lower_tuples) {
            std::vector<std::vector<int>> upper_tuples;
            detail::weak_tuples(qc, kk, lt, scratch, upper_tuples);
            const int last = lt.empty() ? 0 : lt.back();
            const int active
                = static_cast<int>(std::count_if(pc.begin(), pc.end(), [&](int c) { return c >= last; }));
            for (const auto& ut : upper_tuples) {
                // A first point at the origin cuts the initial run of the upper path.
                const int rise = !ut.empty() && ut.front() == 0 ? 0 : r.initial_rise_upper;
                visit(pointed_interval{{p, lt}, {q, ut}, active, rise});
            }
        }
    });
}

inline std::vector<pointed_interval> enumerate_pointed_intervals(const hasse_diagram& h, int k)
{
    std::vector<pointed_interval> out;
    for_each_pointed_interval(h, k, [&](const pointed_interval& pi) { out.push_back(pi); });
    return out;
}

inline std::string export_dot(const hasse_diagram& h)
{
    std::ostringstream os;
    os << "digraph tamari_m" << h.m() << "_n" << h.n() << " {\n";
    for (std::size_t i = 0; i < h.node_count(); ++i) {
        os << "  n" << i << " [label=\"" << h.node(i).to_string() << "\"];\n";
    }
    for (std::size_t i = 0; i < h.node_count(); ++i) {
        for (std::size_t c : h.covers_of(i)) {
            os << "  n" << i << " -> n" << c << ";\n";
        }
    }
    os << "}\n";
    return os.str();
}

// Joint statistics over (contacts_lower - 1, initial_rise_upper, longest_chain).
struct interval_statistics {
    int m = 1;
    int n = 0;
    std::uint64_t intervals = 0;
    std::map<int, std::uint64_t> by_contacts;
    std::map<std::tuple<int, int, int>, std::uint64_t> joint;

    // Marginal over the chain length.
    std::map<std::pair<int, int>, std::uint64_t> contacts_rise() const
    {
        std::map<std::pair<int, int>, std::uint64_t> out;
        for (const auto& [key, count] : joint) {
            out[{std::get<0>(key), std::get<1>(key)}] += count;
        }
        return out;
    }

    void merge(const interval_statistics& other)
    {
        intervals += other.intervals;
        for (const auto& [k, v] : other.by_contacts) {
            by_contacts[k] += v;
        }
        for (const auto& [k, v] : other.joint) {
            joint[k] += v;
        }
    }
};

inline interval_statistics interval_table(const hasse_diagram& h)
{
    interval_statistics s;
    s.m = h.m();
    s.n = h.n();
    for_each_interval(h, [&](const interval_record& r) {
        ++s.intervals;
        ++s.by_contacts[r.contacts_lower];
        ++s.joint[{r.contacts_lower - 1, r.initial_rise_upper, r.longest_chain}];
    });
    return s;
}

} // namespace mtamari
