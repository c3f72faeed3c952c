#include <tatek/affine_weyl.hpp>

#include <tatek/intlinalg.hpp>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace tatek {

namespace {

void require_definite(const IntMat& form) {
    if (form.rows() != form.cols())
        throw NotPositive("form must be square");
    if (form != form.transpose())
        throw NotPositive("form must be symmetric");
    IntMat neg = -form;
    if (!is_positive_definite(form) && !is_positive_definite(neg))
        throw NotPositive("form must be definite");
}

// enumerate dominant weights with lam(theta_vee) <= k, lex order
std::vector<Weight> alcove_points(const RootDatum& rd, i64 k) {
    const Coweight& tv = rd.highest_root.coroot;
    std::vector<Weight> out;
    // each coordinate of theta_vee is >= 1, so lam_i <= k on the alcove
    Weight lam = Weight::Zero(rd.rank);
    while (true) {
        if (pairing(lam, tv) <= k) out.push_back(lam);
        Eigen::Index i = rd.rank - 1;
        while (i >= 0) {
            if (++lam[i] <= k) break;
            lam[i] = 0;
            --i;
        }
        if (i < 0) break;
    }
    std::sort(out.begin(), out.end(), LexLess{});
    return out;
}

Weight torus_box_reduce(const IntMat& form, Weight lam) {
    IntMat h = hermite_normal_form(form);
    // h is lower triangular; fix coordinates top-down using its columns
    for (Eigen::Index i = 0; i < h.rows(); ++i) {
        i64 d = h(i, i);
        i64 q = lam[i] / d;
        if (lam[i] - q * d < 0) --q;
        lam -= q * IntVec(h.col(i));
    }
    return lam;
}

}  // namespace

Twisting level_twisting(const RootDatum& rd, i64 k) {
    if (k == 0) throw NotPositive("level must be nonzero");
    Twisting tw;
    tw.base = rd;
    tw.level = std::abs(k);
    tw.form = tw.level * rd.basic_form;
    tw.sign = k > 0 ? FormSign::positive : FormSign::negative;
    return tw;
}

Twisting torus_twisting(const IntMat& form) {
    require_definite(form);
    Twisting tw;
    TorusDatum td;
    td.rank = form.rows();
    tw.base = td;
    if (is_positive_definite(form)) {
        tw.form = form;
        tw.sign = FormSign::positive;
    } else {
        tw.form = -form;
        tw.sign = FormSign::negative;
    }
    return tw;
}

Weight kappa_tau(const Twisting& tw, const Coweight& p) { return tw.form * p; }

LambdaTauPoint pi1_act(const Twisting& tw, const Coweight& p, const LambdaTauPoint& x) {
    LambdaTauPoint y;
    y.lambda = x.lambda - kappa_tau(tw, p);
    y.n = x.n + p.dot(IntVec(tw.form * p)) - 2 * x.lambda.dot(p);
    return y;
}

Weight canonicalize(const Twisting& tw, Weight lam) {
    if (!tw.is_root_datum()) return torus_box_reduce(tw.form, lam);
    const RootDatum& rd = tw.root_datum();
    i64 k = tw.level;
    const Weight& theta = rd.highest_root.weight;
    const Coweight& tv = rd.highest_root.coroot;
    std::size_t guard = 0;
    while (true) {
        if (++guard > 1u << 24) throw NotFiniteType("canonicalize did not terminate");
        Eigen::Index neg = -1;
        for (Eigen::Index i = 0; i < rd.rank; ++i)
            if (lam[i] < 0) { neg = i; break; }
        if (neg >= 0) {
            // simple reflection s_i
            lam -= lam[neg] * IntVec(rd.cartan.row(neg).transpose());
            continue;
        }
        i64 level_coord = pairing(lam, tv);
        if (level_coord > k) {
            // affine reflection in the wall lam(theta_vee) = k
            lam += (k - level_coord) * theta;
            continue;
        }
        return lam;
    }
}

i64 stabilizer_order(const Twisting& tw, const Weight& lam) {
    if (!tw.is_root_datum()) return 1;
    i64 count = 0;
    IntVec sol;
    for (const WeylElement& w : weyl_elements(tw.root_datum())) {
        IntVec diff = lam - IntVec(w.on_weights * lam);
        if (solve_integral(tw.form, diff, sol)) ++count;
    }
    return count;
}

std::vector<AffineOrbitRep> affine_orbit_reps(const Twisting& tw) {
    if (tw.sign != FormSign::positive)
        throw NotPositive("orbit enumeration needs a positive twisting");
    std::vector<AffineOrbitRep> out;
    if (tw.is_root_datum()) {
        for (const Weight& lam : alcove_points(tw.root_datum(), tw.level)) {
            AffineOrbitRep r;
            r.rep = lam;
            r.stabilizer_order = stabilizer_order(tw, lam);
            r.regular = r.stabilizer_order == 1;
            out.push_back(r);
        }
    } else {
        IntMat h = hermite_normal_form(tw.form);
        Eigen::Index n = h.rows();
        Weight lam = Weight::Zero(n);
        while (true) {
            AffineOrbitRep r;
            r.rep = torus_box_reduce(tw.form, lam);
            out.push_back(r);
            Eigen::Index i = n - 1;
            while (i >= 0) {
                ++lam[i];
                if (lam[i] < h(i, i)) break;
                lam[i] = 0;
                --i;
            }
            if (i < 0) break;
        }
        std::sort(out.begin(), out.end(),
                  [](const AffineOrbitRep& a, const AffineOrbitRep& b) {
                      return LexLess{}(a.rep, b.rep);
                  });
        out.erase(std::unique(out.begin(), out.end(),
                              [](const AffineOrbitRep& a, const AffineOrbitRep& b) {
                                  return lex_eq(a.rep, b.rep);
                              }),
                  out.end());
    }
    return out;
}

std::vector<AffineOrbitRep> negative_level_basis(const RootDatum& rd, i64 k) {
    if (k < 1) throw NotPositive("level must be >= 1");
    Twisting shifted = level_twisting(rd, k + rd.h_dual);
    std::vector<AffineOrbitRep> out;
    for (const AffineOrbitRep& r : affine_orbit_reps(shifted))
        if (r.regular) out.push_back(r);
    return out;
}

bool check_tempered(const GrowthDescriptor& d) { return d.c == Rat(0) || d.a < Rat(1); }

bool check_star(const GrowthDescriptor& d) { return check_tempered(d); }

Twisting shift_by_sigma(const Twisting& tw) {
    if (!tw.is_root_datum()) throw TorusHasNoSigma();
    const RootDatum& rd = tw.root_datum();
    i64 k = tw.sign == FormSign::positive ? tw.level : -tw.level;
    return level_twisting(rd, k + rd.h_dual);
}

std::vector<Coweight> translation_points(const IntMat& form, const Weight& nu, i64 order) {
    Eigen::Index r = form.rows();
    Eigen::MatrixXd fd = form.cast<double>();
    Eigen::VectorXd nud = nu.cast<double>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(fd);
    double lam_min = es.eigenvalues().minCoeff();
    Eigen::VectorXd center = fd.ldlt().solve(nud);
    // n(p) = (p - center)^T F (p - center) - nu^T center >= lam_min |p - center|^2 - nu^T center
    double slack = static_cast<double>(order) + nud.dot(center);
    double radius = slack > 0 ? std::sqrt(slack / lam_min) : 0.0;
    radius += 1.5;  // float safety margin; membership is re-checked exactly

    std::vector<i64> lo(static_cast<std::size_t>(r)), hi(static_cast<std::size_t>(r));
    for (Eigen::Index i = 0; i < r; ++i) {
        lo[static_cast<std::size_t>(i)] = static_cast<i64>(std::floor(center[i] - radius));
        hi[static_cast<std::size_t>(i)] = static_cast<i64>(std::ceil(center[i] + radius));
    }
    std::vector<Coweight> out;
    Coweight p(r);
    for (Eigen::Index i = 0; i < r; ++i) p[i] = lo[static_cast<std::size_t>(i)];
    while (true) {
        i64 n = p.dot(IntVec(form * p)) - 2 * nu.dot(p);
        if (n <= order) out.push_back(p);
        Eigen::Index i = r - 1;
        while (i >= 0) {
            if (++p[i] <= hi[static_cast<std::size_t>(i)]) break;
            p[i] = lo[static_cast<std::size_t>(i)];
            --i;
        }
        if (i < 0) break;
    }
    return out;
}

}  // namespace tatek
