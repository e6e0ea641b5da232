#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sideinfo/errors.hpp"

namespace sideinfo {

/// Sum-to-one tolerance applied to every probability vector on input.
/// Inputs outside tolerance are rejected; nothing is renormalized silently.
inline constexpr double kMassTol = 1e-9;

/// A named finite alphabet. Symbols are the indices 0..size-1.
struct Alphabet {
    std::string name;
    int size = 0;
};

inline bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.name == b.name && a.size == b.size;
}

/// Probability mass function over one alphabet. Immutable once constructed;
/// construction validates nonnegativity and normalization.
class Dist {
public:
    Dist(Alphabet alphabet, std::vector<double> mass);

    static Dist uniform(Alphabet alphabet);
    static Dist point_mass(Alphabet alphabet, int symbol);

    const Alphabet& alphabet() const { return alphabet_; }
    int size() const { return alphabet_.size; }
    double operator[](int i) const { return mass_[static_cast<std::size_t>(i)]; }
    std::span<const double> mass() const { return mass_; }

private:
    Alphabet alphabet_;
    std::vector<double> mass_;
};

/// Joint probability mass over an ordered list of alphabets, stored row-major
/// (last axis fastest). Axis names must be distinct so kernels can be matched
/// by name.
class JointDist {
public:
    JointDist(std::vector<Alphabet> axes, std::vector<double> mass);

    int rank() const { return static_cast<int>(axes_.size()); }
    const std::vector<Alphabet>& axes() const { return axes_; }
    const Alphabet& axis(int i) const { return axes_[static_cast<std::size_t>(i)]; }
    std::size_t size() const { return mass_.size(); }
    const std::vector<double>& mass() const { return mass_; }
    double operator[](std::size_t flat) const { return mass_[flat]; }
    const std::vector<std::size_t>& strides() const { return strides_; }

    std::size_t flat_index(std::span<const int> idx) const;
    double at(std::span<const int> idx) const { return mass_[flat_index(idx)]; }
    /// Index of the axis with the given name, or -1.
    int axis_index(std::string_view name) const;

private:
    std::vector<Alphabet> axes_;
    std::vector<double> mass_;
    std::vector<std::size_t> strides_;
};

/// Row-stochastic map from tuples over from_axes to a distribution on
/// to_axis. Rows are indexed row-major over the conditioning tuple.
class ConditionalKernel {
public:
    ConditionalKernel(std::vector<Alphabet> from_axes, Alphabet to_axis,
                      std::vector<double> rows);

    static ConditionalKernel uniform(std::vector<Alphabet> from_axes, Alphabet to_axis);

    const std::vector<Alphabet>& from_axes() const { return from_axes_; }
    const Alphabet& to_axis() const { return to_axis_; }
    int num_rows() const { return num_rows_; }
    std::span<const double> row(int r) const {
        return {rows_.data() + static_cast<std::size_t>(r) * to_axis_.size,
                static_cast<std::size_t>(to_axis_.size)};
    }
    const std::vector<double>& rows() const { return rows_; }
    std::size_t row_index(std::span<const int> from) const;
    double prob(std::span<const int> from, int to) const {
        return rows_[row_index(from) * to_axis_.size + static_cast<std::size_t>(to)];
    }

private:
    std::vector<Alphabet> from_axes_;
    Alphabet to_axis_;
    int num_rows_;
    std::vector<double> rows_;
};

/// Deterministic function from tuples over from_axes to a symbol of to_axis,
/// stored as a table indexed row-major over the conditioning tuple.
class DeterministicMap {
public:
    DeterministicMap(std::vector<Alphabet> from_axes, Alphabet to_axis,
                     std::vector<int> table);

    const std::vector<Alphabet>& from_axes() const { return from_axes_; }
    const Alphabet& to_axis() const { return to_axis_; }
    const std::vector<int>& table() const { return table_; }
    int at_row(std::size_t flat_row) const { return table_[flat_row]; }
    int operator()(std::span<const int> from) const;

    /// Equivalent kernel: one unit entry per row.
    ConditionalKernel as_kernel() const;

private:
    std::vector<Alphabet> from_axes_;
    Alphabet to_axis_;
    std::vector<int> table_;
};

// ---- Functionals (bits, base-2 logs; 0 log 0 = 0) ----

double entropy(const Dist& p);
double entropy(const JointDist& j);

/// I(A;B) of a 2-axis joint.
double mutual_information(const JointDist& j);

/// I(A;B|C) of a 3-axis joint; cond_axis designates C.
double conditional_mutual_information(const JointDist& j, int cond_axis = 2);

/// I(group_a; group_b) for disjoint axis-index groups of any joint.
double mutual_information_groups(const JointDist& j, std::span<const int> group_a,
                                 std::span<const int> group_b);

// ---- Structural operations ----

/// Joint over base axes plus k's output axis: out = base(.) * k(to|from).
/// k's from_axes must match base axes by name and size.
JointDist compose_joint(const JointDist& base, const ConditionalKernel& k);
JointDist compose_joint(const JointDist& base, const DeterministicMap& m);

/// Sums out all axes not listed; keep_axes must be nonempty and strictly
/// increasing.
JointDist marginalize(const JointDist& j, std::span<const int> keep_axes);

/// Single-axis marginal as a Dist.
Dist marginal(const JointDist& j, int axis);

/// Axis reordering: out axis i is input axis perm[i].
JointDist transpose(const JointDist& j, std::span<const int> perm);

}  // namespace sideinfo
