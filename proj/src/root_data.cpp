#include <tatek/root_data.hpp>

#include <tatek/intlinalg.hpp>

#include <boost/rational.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace tatek {

namespace {

using Rat = boost::rational<i64>;

struct TypeEntry {
    IntMat cartan;
    i64 h_dual;
    i64 n_positive;
    std::size_t weyl_order;
};

IntMat make_mat(std::initializer_list<std::initializer_list<i64>> rows) {
    IntMat m(static_cast<Eigen::Index>(rows.size()),
             static_cast<Eigen::Index>(rows.begin()->size()));
    Eigen::Index i = 0;
    for (const auto& r : rows) {
        Eigen::Index j = 0;
        for (i64 v : r) m(i, j++) = v;
        ++i;
    }
    return m;
}

IntMat type_a_cartan(i64 n) {
    IntMat c = IntMat::Zero(n, n);
    for (i64 i = 0; i < n; ++i) {
        c(i, i) = 2;
        if (i + 1 < n) { c(i, i + 1) = -1; c(i + 1, i) = -1; }
    }
    return c;
}

// classical table; the computed values are asserted against it
const std::map<std::string, TypeEntry>& type_table() {
    static const std::map<std::string, TypeEntry> table = {
        {"A1", {type_a_cartan(1), 2, 1, 2}},
        {"A2", {type_a_cartan(2), 3, 3, 6}},
        {"A3", {type_a_cartan(3), 4, 6, 24}},
        {"A4", {type_a_cartan(4), 5, 10, 120}},
        {"C2", {make_mat({{2, -1}, {-2, 2}}), 3, 4, 8}},
        {"G2", {make_mat({{2, -3}, {-1, 2}}), 4, 6, 12}},
    };
    return table;
}

void validate_cartan(const IntMat& c) {
    if (c.rows() != c.cols() || c.rows() == 0)
        throw NotFiniteType("Cartan matrix must be square and nonempty");
    Eigen::Index r = c.rows();
    for (Eigen::Index i = 0; i < r; ++i) {
        if (c(i, i) != 2) throw NotFiniteType("diagonal entries must equal 2");
        for (Eigen::Index j = 0; j < r; ++j) {
            if (i == j) continue;
            if (c(i, j) > 0) throw NotFiniteType("off-diagonal entries must be <= 0");
            if ((c(i, j) == 0) != (c(j, i) == 0))
                throw NotFiniteType("zero pattern must be symmetric");
        }
    }
}

// symmetrizers d_i > 0 with C_ij / d_i symmetric, scaled so max d_i = 1
std::vector<Rat> symmetrizers(const IntMat& c) {
    Eigen::Index r = c.rows();
    std::vector<Rat> d(static_cast<std::size_t>(r), Rat(0));
    std::vector<bool> known(static_cast<std::size_t>(r), false);
    for (Eigen::Index seed = 0; seed < r; ++seed) {
        if (known[static_cast<std::size_t>(seed)]) continue;
        d[static_cast<std::size_t>(seed)] = Rat(1);
        known[static_cast<std::size_t>(seed)] = true;
        bool changed = true;
        while (changed) {
            changed = false;
            for (Eigen::Index i = 0; i < r; ++i)
                for (Eigen::Index j = 0; j < r; ++j)
                    if (c(i, j) != 0 && known[static_cast<std::size_t>(i)] &&
                        !known[static_cast<std::size_t>(j)]) {
                        d[static_cast<std::size_t>(j)] =
                            d[static_cast<std::size_t>(i)] * Rat(c(j, i), c(i, j));
                        known[static_cast<std::size_t>(j)] = true;
                        changed = true;
                    }
        }
    }
    Rat mx = *std::max_element(d.begin(), d.end());
    for (auto& x : d) x /= mx;
    return d;
}

IntMat compute_basic_form(const IntMat& c) {
    auto d = symmetrizers(c);
    Eigen::Index r = c.rows();
    IntMat b(r, r);
    for (Eigen::Index i = 0; i < r; ++i)
        for (Eigen::Index j = 0; j < r; ++j) {
            Rat v = Rat(c(i, j)) / d[static_cast<std::size_t>(i)];
            if (v.denominator() != 1)
                throw NotFiniteType("Cartan matrix is not symmetrizable over Z");
            b(i, j) = v.numerator();
        }
    for (Eigen::Index i = 0; i < r; ++i)
        for (Eigen::Index j = 0; j < r; ++j)
            if (b(i, j) != b(j, i)) throw NotFiniteType("symmetrization failed");
    return b;
}

std::vector<i64> to_key(const Root& rt) {
    std::vector<i64> k;
    for (Eigen::Index i = 0; i < rt.weight.size(); ++i) k.push_back(rt.weight[i]);
    return k;
}

// full root system with coroots, generated by simple reflections
std::vector<Root> generate_roots(const IntMat& c) {
    Eigen::Index r = c.rows();
    std::vector<Root> frontier;
    std::set<std::vector<i64>> seen;
    for (Eigen::Index i = 0; i < r; ++i) {
        Root rt;
        rt.weight = c.row(i).transpose();
        rt.simple_coords = IntVec::Zero(r);
        rt.simple_coords[i] = 1;
        rt.coroot = IntVec::Zero(r);
        rt.coroot[i] = 1;
        seen.insert(to_key(rt));
        frontier.push_back(rt);
    }
    std::vector<Root> all = frontier;
    std::size_t guard = 0;
    while (!frontier.empty()) {
        if (++guard > 64) throw NotFiniteType("root generation did not terminate");
        std::vector<Root> next;
        for (const Root& rt : frontier) {
            for (Eigen::Index i = 0; i < r; ++i) {
                Root img;
                i64 pair_wt = rt.weight[i];  // <beta, alpha_i^vee>
                img.weight = rt.weight - pair_wt * IntVec(c.row(i).transpose());
                img.simple_coords = rt.simple_coords;
                img.simple_coords[i] -= pair_wt;
                i64 pair_co = c.row(i).dot(rt.coroot);  // <alpha_i, beta^vee>
                img.coroot = rt.coroot;
                img.coroot[i] -= pair_co;
                if (seen.insert(to_key(img)).second) {
                    next.push_back(img);
                    all.push_back(img);
                }
            }
        }
        frontier = std::move(next);
        if (all.size() > 4096) throw NotFiniteType("root system is not finite");
    }
    std::vector<Root> pos;
    for (const Root& rt : all)
        if ((rt.simple_coords.array() >= 0).all()) pos.push_back(rt);
    std::sort(pos.begin(), pos.end(), [](const Root& a, const Root& b) {
        i64 ha = a.simple_coords.sum(), hb = b.simple_coords.sum();
        if (ha != hb) return ha < hb;
        return LexLess{}(a.weight, b.weight);
    });
    return pos;
}

RootDatum build(const std::string& label, const IntMat& cartan) {
    validate_cartan(cartan);
    IntMat basic = compute_basic_form(cartan);
    if (!is_positive_definite(basic))
        throw NotFiniteType("symmetrized Cartan matrix is not positive definite");

    RootDatum rd;
    rd.label = label;
    rd.rank = cartan.rows();
    rd.cartan = cartan;
    rd.basic_form = basic;
    rd.positive_roots = generate_roots(cartan);
    rd.highest_root = rd.positive_roots.back();
    rd.rho = IntVec::Ones(rd.rank);
    rd.h_dual = 1 + pairing(rd.rho, rd.highest_root.coroot);

    BigMat adj = int_adjugate(cartan);
    rd.height_coweight.resize(rd.rank);
    for (Eigen::Index i = 0; i < rd.rank; ++i) {
        Int s = 0;
        for (Eigen::Index j = 0; j < rd.rank; ++j) s += adj(i, j);
        rd.height_coweight[i] = static_cast<i64>(s);
    }

    auto it = type_table().find(label);
    if (it != type_table().end()) {
        if (rd.h_dual != it->second.h_dual ||
            static_cast<i64>(rd.positive_roots.size()) != it->second.n_positive)
            throw NotFiniteType("computed invariants disagree with the type table");
    }
    return rd;
}

}  // namespace

RootDatum load_root_datum(const std::string& type_label) {
    auto it = type_table().find(type_label);
    if (it == type_table().end())
        throw NotFiniteType("unknown type label '" + type_label + "'");
    return build(type_label, it->second.cartan);
}

RootDatum load_root_datum(const IntMat& cartan) {
    // recognize table types so the label round-trips
    for (const auto& [label, entry] : type_table())
        if (entry.cartan.rows() == cartan.rows() && entry.cartan == cartan)
            return build(label, cartan);
    return build("custom", cartan);
}

std::vector<WeylElement> weyl_elements(const RootDatum& rd, std::size_t bound) {
    Eigen::Index r = rd.rank;
    std::vector<WeylElement> gens;
    for (Eigen::Index i = 0; i < r; ++i) {
        WeylElement s;
        s.on_weights = IntMat::Identity(r, r);
        for (Eigen::Index j = 0; j < r; ++j) s.on_weights(j, i) -= rd.cartan(i, j);
        s.on_coweights = IntMat::Identity(r, r);
        for (Eigen::Index j = 0; j < r; ++j) s.on_coweights(i, j) -= rd.cartan(i, j);
        s.sign = -1;
        gens.push_back(s);
    }
    auto key = [r](const IntMat& m) {
        std::vector<i64> k;
        for (Eigen::Index i = 0; i < r; ++i)
            for (Eigen::Index j = 0; j < r; ++j) k.push_back(m(i, j));
        return k;
    };
    WeylElement id{IntMat::Identity(r, r), IntMat::Identity(r, r), 1};
    std::vector<WeylElement> out{id};
    std::set<std::vector<i64>> seen{key(id.on_weights)};
    std::size_t head = 0;
    while (head < out.size()) {
        WeylElement w = out[head++];
        for (const WeylElement& g : gens) {
            WeylElement m;
            m.on_weights = g.on_weights * w.on_weights;
            m.on_coweights = g.on_coweights * w.on_coweights;
            m.sign = g.sign * w.sign;
            if (seen.insert(key(m.on_weights)).second) {
                out.push_back(m);
                if (out.size() > bound) throw WeylGroupTooLarge();
            }
        }
    }
    auto it = type_table().find(rd.label);
    if (it != type_table().end() && out.size() != it->second.weyl_order)
        throw NotFiniteType("Weyl group order disagrees with the type table");
    return out;
}

Int weyl_dim(const RootDatum& rd, const Weight& lam) {
    if (!is_dominant(lam)) throw NotDominant();
    Int num = 1, den = 1;
    Weight shifted = lam + rd.rho;
    for (const Root& a : rd.positive_roots) {
        num *= Int(pairing(shifted, a.coroot));
        den *= Int(pairing(rd.rho, a.coroot));
    }
    if (num % den != 0) throw NotDominant("Weyl dimension is not integral");
    return num / den;
}

}  // namespace tatek
