#include "sideinfo/prob.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace sideinfo {

namespace {

void check_alphabet(const Alphabet& a) {
    if (a.size < 1) throw ValidationError("alphabet '" + a.name + "' must have size >= 1");
}

void check_mass(std::span<const double> mass, const char* what) {
    long double total = 0.0L;
    for (double v : mass) {
        if (!(v >= 0.0)) throw ValidationError(std::string(what) + ": negative or NaN mass entry");
        total += v;
    }
    if (std::fabs(static_cast<double>(total) - 1.0) > kMassTol)
        throw ValidationError(std::string(what) + ": mass sums to " +
                              std::to_string(static_cast<double>(total)) + ", not 1 within 1e-9");
}

std::vector<std::size_t> make_strides(const std::vector<Alphabet>& axes) {
    std::vector<std::size_t> strides(axes.size());
    std::size_t s = 1;
    for (std::size_t i = axes.size(); i-- > 0;) {
        strides[i] = s;
        s *= static_cast<std::size_t>(axes[i].size);
    }
    return strides;
}

std::size_t total_size(const std::vector<Alphabet>& axes) {
    std::size_t s = 1;
    for (const auto& a : axes) s *= static_cast<std::size_t>(a.size);
    return s;
}

constexpr double kLog2E = 1.4426950408889634;  // 1/ln(2)

double to_bits(long double nats) { return static_cast<double>(nats) * kLog2E; }

long double neg_sum_p_log_p(std::span<const double> mass) {
    long double acc = 0.0L;
    for (double p : mass) {
        if (p > 0.0) acc -= static_cast<long double>(p) * std::log(p);
    }
    return acc;
}

}  // namespace

// ---- Dist ----

Dist::Dist(Alphabet alphabet, std::vector<double> mass)
    : alphabet_(std::move(alphabet)), mass_(std::move(mass)) {
    check_alphabet(alphabet_);
    if (mass_.size() != static_cast<std::size_t>(alphabet_.size))
        throw ValidationError("dist over '" + alphabet_.name + "': mass length mismatch");
    check_mass(mass_, "dist");
}

Dist Dist::uniform(Alphabet alphabet) {
    check_alphabet(alphabet);
    int n = alphabet.size;
    return Dist(std::move(alphabet), std::vector<double>(static_cast<std::size_t>(n), 1.0 / n));
}

Dist Dist::point_mass(Alphabet alphabet, int symbol) {
    check_alphabet(alphabet);
    if (symbol < 0 || symbol >= alphabet.size)
        throw ValidationError("point mass symbol out of range");
    std::vector<double> m(static_cast<std::size_t>(alphabet.size), 0.0);
    m[static_cast<std::size_t>(symbol)] = 1.0;
    return Dist(std::move(alphabet), std::move(m));
}

// ---- JointDist ----

JointDist::JointDist(std::vector<Alphabet> axes, std::vector<double> mass)
    : axes_(std::move(axes)), mass_(std::move(mass)) {
    if (axes_.empty() || axes_.size() > 5)
        throw ValidationError("joint must have between 1 and 5 axes");
    std::set<std::string> names;
    for (const auto& a : axes_) {
        check_alphabet(a);
        if (!names.insert(a.name).second)
            throw ValidationError("joint axis name '" + a.name + "' repeated");
    }
    if (mass_.size() != total_size(axes_))
        throw ValidationError("joint mass length does not match axis sizes");
    check_mass(mass_, "joint");
    strides_ = make_strides(axes_);
}

std::size_t JointDist::flat_index(std::span<const int> idx) const {
    if (idx.size() != axes_.size()) throw ValidationError("joint index rank mismatch");
    std::size_t flat = 0;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] < 0 || idx[i] >= axes_[i].size)
            throw ValidationError("joint index out of range on axis '" + axes_[i].name + "'");
        flat += static_cast<std::size_t>(idx[i]) * strides_[i];
    }
    return flat;
}

int JointDist::axis_index(std::string_view name) const {
    for (std::size_t i = 0; i < axes_.size(); ++i) {
        if (axes_[i].name == name) return static_cast<int>(i);
    }
    return -1;
}

// ---- ConditionalKernel ----

ConditionalKernel::ConditionalKernel(std::vector<Alphabet> from_axes, Alphabet to_axis,
                                     std::vector<double> rows)
    : from_axes_(std::move(from_axes)), to_axis_(std::move(to_axis)), rows_(std::move(rows)) {
    if (from_axes_.empty()) throw ValidationError("kernel needs at least one conditioning axis");
    for (const auto& a : from_axes_) check_alphabet(a);
    check_alphabet(to_axis_);
    std::size_t nr = total_size(from_axes_);
    num_rows_ = static_cast<int>(nr);
    if (rows_.size() != nr * static_cast<std::size_t>(to_axis_.size))
        throw ValidationError("kernel row data length mismatch");
    for (std::size_t r = 0; r < nr; ++r) {
        check_mass({rows_.data() + r * to_axis_.size, static_cast<std::size_t>(to_axis_.size)},
                   "kernel row");
    }
}

ConditionalKernel ConditionalKernel::uniform(std::vector<Alphabet> from_axes, Alphabet to_axis) {
    std::size_t nr = total_size(from_axes);
    std::vector<double> rows(nr * static_cast<std::size_t>(to_axis.size), 1.0 / to_axis.size);
    return ConditionalKernel(std::move(from_axes), std::move(to_axis), std::move(rows));
}

std::size_t ConditionalKernel::row_index(std::span<const int> from) const {
    if (from.size() != from_axes_.size()) throw ValidationError("kernel index rank mismatch");
    std::size_t flat = 0;
    for (std::size_t i = 0; i < from.size(); ++i) {
        if (from[i] < 0 || from[i] >= from_axes_[i].size)
            throw ValidationError("kernel index out of range on axis '" + from_axes_[i].name + "'");
        flat = flat * static_cast<std::size_t>(from_axes_[i].size) + static_cast<std::size_t>(from[i]);
    }
    return flat;
}

// ---- DeterministicMap ----

DeterministicMap::DeterministicMap(std::vector<Alphabet> from_axes, Alphabet to_axis,
                                   std::vector<int> table)
    : from_axes_(std::move(from_axes)), to_axis_(std::move(to_axis)), table_(std::move(table)) {
    if (from_axes_.empty()) throw ValidationError("map needs at least one conditioning axis");
    for (const auto& a : from_axes_) check_alphabet(a);
    check_alphabet(to_axis_);
    if (table_.size() != total_size(from_axes_))
        throw ValidationError("map table length does not cover the conditioning tuples");
    for (int v : table_) {
        if (v < 0 || v >= to_axis_.size) throw ValidationError("map table entry out of range");
    }
}

int DeterministicMap::operator()(std::span<const int> from) const {
    if (from.size() != from_axes_.size()) throw ValidationError("map index rank mismatch");
    std::size_t flat = 0;
    for (std::size_t i = 0; i < from.size(); ++i) {
        if (from[i] < 0 || from[i] >= from_axes_[i].size)
            throw ValidationError("map index out of range on axis '" + from_axes_[i].name + "'");
        flat = flat * static_cast<std::size_t>(from_axes_[i].size) + static_cast<std::size_t>(from[i]);
    }
    return table_[flat];
}

ConditionalKernel DeterministicMap::as_kernel() const {
    std::vector<double> rows(table_.size() * static_cast<std::size_t>(to_axis_.size), 0.0);
    for (std::size_t r = 0; r < table_.size(); ++r) {
        rows[r * to_axis_.size + static_cast<std::size_t>(table_[r])] = 1.0;
    }
    return ConditionalKernel(from_axes_, to_axis_, std::move(rows));
}

// ---- Functionals ----

double entropy(const Dist& p) { return to_bits(neg_sum_p_log_p(p.mass())); }

double entropy(const JointDist& j) { return to_bits(neg_sum_p_log_p(j.mass())); }

double mutual_information(const JointDist& j) {
    if (j.rank() != 2) throw ValidationError("mutual_information requires exactly 2 axes");
    const Dist a = marginal(j, 0), b = marginal(j, 1);
    return entropy(a) + entropy(b) - entropy(j);
}

double conditional_mutual_information(const JointDist& j, int cond_axis) {
    if (j.rank() != 3) throw ValidationError("conditional MI requires exactly 3 axes");
    if (cond_axis < 0 || cond_axis > 2) throw ValidationError("conditioning axis out of range");
    int a = (cond_axis == 0) ? 1 : 0;
    int b = (cond_axis == 2) ? 1 : 2;
    // I(A;B|C) = H(A,C) + H(B,C) - H(A,B,C) - H(C)
    const int ac[] = {std::min(a, cond_axis), std::max(a, cond_axis)};
    const int bc[] = {std::min(b, cond_axis), std::max(b, cond_axis)};
    return entropy(marginalize(j, ac)) + entropy(marginalize(j, bc)) - entropy(j) -
           entropy(marginal(j, cond_axis));
}

double mutual_information_groups(const JointDist& j, std::span<const int> group_a,
                                 std::span<const int> group_b) {
    if (group_a.empty() || group_b.empty())
        throw ValidationError("mutual information groups must be nonempty");
    std::vector<int> a(group_a.begin(), group_a.end());
    std::vector<int> b(group_b.begin(), group_b.end());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::vector<int> ab;
    ab.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(ab));
    for (std::size_t i = 0; i + 1 < ab.size(); ++i) {
        if (ab[i] == ab[i + 1]) throw ValidationError("mutual information groups must be disjoint");
    }
    return entropy(marginalize(j, a)) + entropy(marginalize(j, b)) - entropy(marginalize(j, ab));
}

// ---- Structural operations ----

JointDist compose_joint(const JointDist& base, const ConditionalKernel& k) {
    const auto& from = k.from_axes();
    std::vector<int> positions(from.size());
    for (std::size_t i = 0; i < from.size(); ++i) {
        int pos = base.axis_index(from[i].name);
        if (pos < 0 || !(base.axis(pos) == from[i]))
            throw ValidationError("compose: kernel axis '" + from[i].name +
                                  "' not found in base joint");
        positions[i] = pos;
    }
    std::vector<Alphabet> out_axes = base.axes();
    out_axes.push_back(k.to_axis());
    const int nt = k.to_axis().size;
    std::vector<double> out(base.size() * static_cast<std::size_t>(nt), 0.0);

    const int rank = base.rank();
    std::vector<int> idx(static_cast<std::size_t>(rank), 0);
    for (std::size_t flat = 0; flat < base.size(); ++flat) {
        double bm = base[flat];
        std::size_t row = 0;
        for (std::size_t i = 0; i < positions.size(); ++i) {
            row = row * static_cast<std::size_t>(from[i].size) +
                  static_cast<std::size_t>(idx[static_cast<std::size_t>(positions[i])]);
        }
        auto krow = k.row(static_cast<int>(row));
        for (int t = 0; t < nt; ++t) out[flat * nt + static_cast<std::size_t>(t)] = bm * krow[t];
        for (int ax = rank - 1; ax >= 0; --ax) {
            if (++idx[static_cast<std::size_t>(ax)] < base.axis(ax).size) break;
            idx[static_cast<std::size_t>(ax)] = 0;
        }
    }
    return JointDist(std::move(out_axes), std::move(out));
}

JointDist compose_joint(const JointDist& base, const DeterministicMap& m) {
    return compose_joint(base, m.as_kernel());
}

JointDist marginalize(const JointDist& j, std::span<const int> keep_axes) {
    if (keep_axes.empty()) throw ValidationError("marginalize: keep set must be nonempty");
    for (std::size_t i = 0; i < keep_axes.size(); ++i) {
        if (keep_axes[i] < 0 || keep_axes[i] >= j.rank())
            throw ValidationError("marginalize: axis index out of range");
        if (i > 0 && keep_axes[i] <= keep_axes[i - 1])
            throw ValidationError("marginalize: keep axes must be strictly increasing");
    }
    std::vector<Alphabet> out_axes;
    out_axes.reserve(keep_axes.size());
    for (int a : keep_axes) out_axes.push_back(j.axis(a));
    std::vector<std::size_t> out_strides = make_strides(out_axes);
    std::vector<double> out(total_size(out_axes), 0.0);

    const int rank = j.rank();
    std::vector<int> idx(static_cast<std::size_t>(rank), 0);
    for (std::size_t flat = 0; flat < j.size(); ++flat) {
        std::size_t oflat = 0;
        for (std::size_t i = 0; i < keep_axes.size(); ++i) {
            oflat += static_cast<std::size_t>(idx[static_cast<std::size_t>(keep_axes[i])]) *
                     out_strides[i];
        }
        out[oflat] += j[flat];
        for (int ax = rank - 1; ax >= 0; --ax) {
            if (++idx[static_cast<std::size_t>(ax)] < j.axis(ax).size) break;
            idx[static_cast<std::size_t>(ax)] = 0;
        }
    }
    return JointDist(std::move(out_axes), std::move(out));
}

Dist marginal(const JointDist& j, int axis) {
    if (axis < 0 || axis >= j.rank()) throw ValidationError("marginal: axis out of range");
    std::vector<double> m(static_cast<std::size_t>(j.axis(axis).size), 0.0);
    const int rank = j.rank();
    std::vector<int> idx(static_cast<std::size_t>(rank), 0);
    for (std::size_t flat = 0; flat < j.size(); ++flat) {
        m[static_cast<std::size_t>(idx[static_cast<std::size_t>(axis)])] += j[flat];
        for (int ax = rank - 1; ax >= 0; --ax) {
            if (++idx[static_cast<std::size_t>(ax)] < j.axis(ax).size) break;
            idx[static_cast<std::size_t>(ax)] = 0;
        }
    }
    return Dist(j.axis(axis), std::move(m));
}

JointDist transpose(const JointDist& j, std::span<const int> perm) {
    if (static_cast<int>(perm.size()) != j.rank())
        throw ValidationError("transpose: permutation rank mismatch");
    std::vector<bool> seen(perm.size(), false);
    for (int p : perm) {
        if (p < 0 || p >= j.rank() || seen[static_cast<std::size_t>(p)])
            throw ValidationError("transpose: not a permutation");
        seen[static_cast<std::size_t>(p)] = true;
    }
    std::vector<Alphabet> out_axes;
    out_axes.reserve(perm.size());
    for (int p : perm) out_axes.push_back(j.axis(p));
    std::vector<std::size_t> out_strides = make_strides(out_axes);
    std::vector<double> out(j.size());

    const int rank = j.rank();
    std::vector<int> idx(static_cast<std::size_t>(rank), 0);
    for (std::size_t flat = 0; flat < j.size(); ++flat) {
        std::size_t oflat = 0;
        for (std::size_t i = 0; i < perm.size(); ++i) {
            oflat += static_cast<std::size_t>(idx[static_cast<std::size_t>(perm[i])]) *
                     out_strides[i];
        }
        out[oflat] = j[flat];
        for (int ax = rank - 1; ax >= 0; --ax) {
            if (++idx[static_cast<std::size_t>(ax)] < j.axis(ax).size) break;
            idx[static_cast<std::size_t>(ax)] = 0;
        }
    }
    return JointDist(std::move(out_axes), std::move(out));
}

}  // namespace sideinfo
