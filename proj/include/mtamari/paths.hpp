#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "step_path.hpp"

namespace mtamari {

// D_P: entry i is the size of the excursion of the (i+1)-th up step.
struct distance_function {
    std::vector<int> entries;

    std::size_t size() const noexcept { return entries.size(); }

    // Componentwise comparison; vectors of different length never compare.
    bool dominated_by(const distance_function& other) const
    {
        if (entries.size() != other.entries.size()) {
            throw size_mismatch("distance vectors have different lengths");
        }
        for (std::size_t i = 0; i < entries.size(); ++i) {
            if (entries[i] > other.entries[i]) {
                return false;
            }
        }
        return true;
    }

    int sum() const
    {
        int s = 0;
        for (int e : entries) {
            s += e;
        }
        return s;
    }

    friend bool operator==(const distance_function&, const distance_function&) = default;
};

// A Dyck path with k marked contacts, stored by abscissa and weakly increasing.
struct pointed_path {
    step_path path;
    std::vector<int> points;

    friend bool operator==(const pointed_path&, const pointed_path&) = default;
};

// Position of the down step matched with each step; entry is -1 for down steps.
inline std::vector<int> match_positions(const step_path& p)
{
    std::vector<int> match(static_cast<std::size_t>(p.length()), -1);
    std::vector<int> open;
    open.reserve(static_cast<std::size_t>(p.size()));
    for (int i = 0; i < p.length(); ++i) {
        if (p.is_up(i)) {
            open.push_back(i);
        } else {
            match[static_cast<std::size_t>(open.back())] = i;
            open.pop_back();
        }
    }
    return match;
}

// 0-based step positions of the up steps, in rank order.
inline std::vector<int> up_positions(const step_path& p)
{
    std::vector<int> ups;
    ups.reserve(static_cast<std::size_t>(p.size()));
    for (int i = 0; i < p.length(); ++i) {
        if (p.is_up(i)) {
            ups.push_back(i);
        }
    }
    return ups;
}

// Ordinate of every vertex, abscissa 0..2N.
inline std::vector<int> heights(const step_path& p)
{
    std::vector<int> h(static_cast<std::size_t>(p.length()) + 1, 0);
    for (int i = 0; i < p.length(); ++i) {
        h[static_cast<std::size_t>(i) + 1] = h[static_cast<std::size_t>(i)] + (p.is_up(i) ? 1 : -1);
    }
    return h;
}

inline distance_function distance_vector(const step_path& p)
{
    const auto match = match_positions(p);
    distance_function d;
    d.entries.reserve(static_cast<std::size_t>(p.size()));
    for (int i = 0; i < p.length(); ++i) {
        if (p.is_up(i)) {
            d.entries.push_back((match[static_cast<std::size_t>(i)] - i + 1) / 2);
        }
    }
    return d;
}

// 1-based index of the down step closing the excursion of the rank-th up step.
inline int match_of_up(const step_path& p, int rank)
{
    if (rank < 1 || rank > p.size()) {
        throw out_of_range("up-step rank " + std::to_string(rank) + " outside 1.." + std::to_string(p.size()));
    }
    const auto ups = up_positions(p);
    const auto match = match_positions(p);
    return match[static_cast<std::size_t>(ups[static_cast<std::size_t>(rank - 1)])] + 1;
}

// Abscissas of the vertices on the x-axis, increasing.
inline std::vector<int> contact_abscissas(const step_path& p)
{
    std::vector<int> result{0};
    int h = 0;
    for (int i = 0; i < p.length(); ++i) {
        h += p.is_up(i) ? 1 : -1;
        if (h == 0) {
            result.push_back(i + 1);
        }
    }
    return result;
}

inline int contacts(const step_path& p) { return static_cast<int>(contact_abscissas(p).size()); }

inline bool is_m_dyck(const step_path& p, int m)
{
    if (m < 1) {
        throw invalid_input("m must be positive");
    }
    if (p.size() % m != 0) {
        return false;
    }
    const auto ups = up_positions(p);
    for (std::size_t block = 0; block < ups.size(); block += static_cast<std::size_t>(m)) {
        for (std::size_t j = 1; j < static_cast<std::size_t>(m); ++j) {
            if (ups[block + j] != ups[block + j - 1] + 1) {
                return false;
            }
        }
    }
    return true;
}

inline void require_m_dyck(const step_path& p, int m)
{
    if (!is_m_dyck(p, m)) {
        throw not_m_dyck("'" + p.to_string() + "' is not a " + std::to_string(m) + "-Dyck path");
    }
}

inline int initial_rise(const step_path& p, int m)
{
    require_m_dyck(p, m);
    int run = 0;
    while (run < p.length() && p.is_up(run)) {
        ++run;
    }
    return run / m;
}

// North/East path from (0,0) to (mn,n) that never crosses below {x = m y}.
class ballot_path {
public:
    // Validity is established by converting to the Dyck picture.
    static ballot_path parse(int m, std::string_view steps);

    int m() const noexcept { return m_; }
    int size() const noexcept { return static_cast<int>(std::count(steps_.begin(), steps_.end(), 'N')); }
    const std::string& steps() const noexcept { return steps_; }

    friend bool operator==(const ballot_path&, const ballot_path&) = default;

private:
    friend step_path ballot_to_dyck(const ballot_path& b);

    ballot_path(int m, std::string steps) : m_(m), steps_(std::move(steps)) {}

    int m_ = 1;
    std::string steps_;
};

// Each North step becomes m up steps, each East step a down step.
inline step_path ballot_to_dyck(const ballot_path& b)
{
    step_path::word_type bits = 0;
    int pos = 0;
    for (char c : b.steps_) {
        if (c == 'N') {
            for (int j = 0; j < b.m_; ++j) {
                if (pos >= 2 * step_path::max_size) {
                    throw invalid_input("ballot path too long");
                }
                bits |= step_path::word_type{1} << pos;
                ++pos;
            }
        } else {
            if (pos >= 2 * step_path::max_size) {
                throw invalid_input("ballot path too long");
            }
            ++pos;
        }
    }
    return step_path::from_bits(bits, pos);
}

inline ballot_path ballot_path::parse(int m, std::string_view steps)
{
    if (m < 1) {
        throw invalid_input("m must be positive");
    }
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (steps[i] != 'N' && steps[i] != 'E') {
            throw bad_character(std::string("unexpected character '") + steps[i] + "' in ballot path");
        }
    }
    ballot_path b(m, std::string(steps));
    (void)ballot_to_dyck(b);
    return b;
}

inline ballot_path dyck_to_ballot(const step_path& p, int m)
{
    require_m_dyck(p, m);
    std::string steps;
    int i = 0;
    while (i < p.length()) {
        if (p.is_up(i)) {
            steps.push_back('N');
            i += m;
        } else {
            steps.push_back('E');
            ++i;
        }
    }
    return ballot_path::parse(m, steps);
}

// Contracts the m initial up steps and their matching down steps. Points are
// reported weakly increasing, so points[m-1] comes from the down step matched
// with the first up step and points[0] from the one matched with the m-th.
inline pointed_path m_reduction(const step_path& p, int m)
{
    require_m_dyck(p, m);
    if (p.empty()) {
        throw empty_path("the empty path has no m-reduction");
    }
    const auto match = match_positions(p);
    std::vector<bool> removed(static_cast<std::size_t>(p.length()), false);
    std::vector<int> closing;
    for (int j = 0; j < m; ++j) {
        removed[static_cast<std::size_t>(j)] = true;
        const int d = match[static_cast<std::size_t>(j)];
        removed[static_cast<std::size_t>(d)] = true;
        closing.push_back(d);
    }
    step_path::word_type bits = 0;
    int kept = 0;
    std::vector<int> kept_before(static_cast<std::size_t>(p.length()) + 1, 0);
    for (int i = 0; i < p.length(); ++i) {
        kept_before[static_cast<std::size_t>(i)] = kept;
        if (!removed[static_cast<std::size_t>(i)]) {
            if (p.is_up(i)) {
                bits |= step_path::word_type{1} << kept;
            }
            ++kept;
        }
    }
    pointed_path result{step_path::from_bits(bits, kept), {}};
    for (int d : closing) {
        result.points.push_back(kept_before[static_cast<std::size_t>(d)]);
    }
    std::sort(result.points.begin(), result.points.end());
    return result;
}

inline void require_pointed(const pointed_path& pp)
{
    const auto cs = contact_abscissas(pp.path);
    for (std::size_t i = 0; i < pp.points.size(); ++i) {
        if (!std::binary_search(cs.begin(), cs.end(), pp.points[i])) {
            throw invalid_input("marked point " + std::to_string(pp.points[i]) + " is not a contact of '"
                                + pp.path.to_string() + "'");
        }
        if (i > 0 && pp.points[i] < pp.points[i - 1]) {
            throw invalid_input("marked points must be weakly increasing");
        }
    }
}

// Inverse of m_reduction: m = number of marked points.
inline step_path m_expansion(const pointed_path& pp)
{
    require_pointed(pp);
    const int m = static_cast<int>(pp.points.size());
    if (m < 1) {
        throw invalid_input("m-expansion needs at least one marked point");
    }
    if (pp.path.size() + m > step_path::max_size) {
        throw invalid_input("expanded path exceeds the supported size");
    }
    step_path::word_type bits = 0;
    int pos = 0;
    for (; pos < m; ++pos) {
        bits |= step_path::word_type{1} << pos;
    }
    std::size_t next_point = 0;
    for (int i = 0; i <= pp.path.length(); ++i) {
        // Down steps inserted at the same vertex: innermost (smallest index) first.
        while (next_point < pp.points.size() && pp.points[next_point] == i) {
            ++pos;
            ++next_point;
        }
        if (i < pp.path.length()) {
            if (pp.path.is_up(i)) {
                bits |= step_path::word_type{1} << pos;
            }
            ++pos;
        }
    }
    return step_path::from_bits(bits, pos);
}

// D_P from D_{P'} and the marked contacts (2x_1, ..., 2x_m):
// prepend (x_m + m, x_{m-1} + m - 1, ..., x_1 + 1).
inline distance_function prepend_distance(const distance_function& reduced, const std::vector<int>& points)
{
    distance_function d;
    const int m = static_cast<int>(points.size());
    for (int j = m; j >= 1; --j) {
        const int abscissa = points[static_cast<std::size_t>(j - 1)];
        if (abscissa % 2 != 0) {
            throw invalid_input("contact abscissas are even");
        }
        d.entries.push_back(abscissa / 2 + j);
    }
    d.entries.insert(d.entries.end(), reduced.entries.begin(), reduced.entries.end());
    return d;
}

namespace detail {

template <class Visitor>
void generate_m_dyck_rec(int m, int ups_left, int height, int pos, step_path::word_type bits, Visitor& visit)
{
    if (ups_left == 0 && height == 0) {
        visit(step_path::from_bits(bits, pos));
        return;
    }
    if (ups_left > 0) {
        step_path::word_type b = bits;
        for (int j = 0; j < m; ++j) {
            b |= step_path::word_type{1} << (pos + j);
        }
        generate_m_dyck_rec(m, ups_left - m, height + m, pos + m, b, visit);
    }
    if (height > 0) {
        generate_m_dyck_rec(m, ups_left, height - 1, pos + 1, bits, visit);
    }
}

} // namespace detail

// Visits every m-Dyck path of size mn in lexicographic order (Up < Down).
template <class Visitor>
void for_each_m_dyck(int m, int n, Visitor&& visit)
{
    if (m < 1 || n < 0) {
        throw invalid_input("need m >= 1 and n >= 0");
    }
    if (m * n > step_path::max_size) {
        throw resource_limit("paths of size " + std::to_string(m * n) + " exceed the supported maximum of "
                             + std::to_string(step_path::max_size));
    }
    detail::generate_m_dyck_rec(m, m * n, 0, 0, step_path::word_type{0}, visit);
}

inline std::vector<step_path> generate_m_dyck(int m, int n)
{
    std::vector<step_path> out;
    for_each_m_dyck(m, n, [&](const step_path& p) { out.push_back(p); });
    return out;
}

} // namespace mtamari
