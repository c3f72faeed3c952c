#include <tatek/verify.hpp>

#include <tatek/intlinalg.hpp>

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <thread>

namespace tatek {

namespace {

i64 rnd(std::mt19937_64& g, i64 lo, i64 hi) {
    return lo + static_cast<i64>(g() % static_cast<std::uint64_t>(hi - lo + 1));
}

Weight random_vec(std::mt19937_64& g, i64 rank, i64 lo, i64 hi) {
    Weight v(rank);
    for (Eigen::Index i = 0; i < rank; ++i) v[i] = rnd(g, lo, hi);
    return v;
}

IntMat random_posdef_form(std::mt19937_64& g, i64 rank) {
    while (true) {
        IntMat m(rank, rank);
        for (Eigen::Index i = 0; i < rank; ++i)
            for (Eigen::Index j = i; j < rank; ++j) {
                i64 v = i == j ? rnd(g, 1, 4) : rnd(g, -2, 2);
                m(i, j) = v;
                m(j, i) = v;
            }
        if (is_positive_definite(m)) return m;
    }
}

IntMat random_symmetric(std::mt19937_64& g, i64 rank) {
    IntMat m(rank, rank);
    for (Eigen::Index i = 0; i < rank; ++i)
        for (Eigen::Index j = i; j < rank; ++j) {
            i64 v = rnd(g, -4, 4);
            m(i, j) = v;
            m(j, i) = v;
        }
    return m;
}

QSeries random_qseries(std::mt19937_64& g, i64 order) {
    i64 lo = rnd(g, -3, 2);
    std::vector<Int> c;
    for (i64 n = lo; n <= order; ++n) c.push_back(rnd(g, -5, 5));
    return QSeries(lo, std::move(c), order);
}

bool unit_leading(const QSeries& s) {
    return s.leading_coeff() == 1 || s.leading_coeff() == -1;
}

std::string vec_str(const IntVec& v) {
    std::ostringstream os;
    os << "(";
    for (Eigen::Index i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

// ---- individual checks -----------------------------------------------------

bool check_qseries_ring(std::mt19937_64& g, i64 order, std::string& detail) {
    for (int it = 0; it < 25; ++it) {
        QSeries a = random_qseries(g, order), b = random_qseries(g, order),
                c = random_qseries(g, order);
        if (!(qs_add(a, b) == qs_add(b, a))) { detail = "add not commutative"; return false; }
        QSeries lhs = qs_mul(qs_add(a, b), c);
        QSeries rhs = qs_add(qs_mul(a, c), qs_mul(b, c));
        // compare on the common known window
        i64 w = std::min(lhs.trunc_order(), rhs.trunc_order());
        for (i64 n = std::min(lhs.min_exp(), rhs.min_exp()); n <= w; ++n)
            if (lhs.coeff(n) != rhs.coeff(n)) { detail = "distributivity"; return false; }
        QSeries u = qs_add(QSeries::one(order), QSeries::monomial(rnd(g, -5, 5), 1, order));
        QSeries prod = qs_mul(u, qs_invert(u));
        for (i64 n = prod.min_exp(); n <= prod.trunc_order(); ++n)
            if (prod.coeff(n) != (n == 0 ? 1 : 0)) { detail = "inverse"; return false; }
    }
    return true;
}

bool check_root_data(std::mt19937_64& g, std::string& detail) {
    for (const std::string& label : {"A1", "A2", "A3", "C2", "G2"}) {
        RootDatum rd = load_root_datum(label);
        i64 min_norm = 0;
        for (const Root& r : rd.positive_roots) {
            i64 norm = r.coroot.dot(IntVec(rd.basic_form * r.coroot));
            if (min_norm == 0 || norm < min_norm) min_norm = norm;
        }
        if (min_norm != 2) { detail = label + ": short coroot norm " + std::to_string(min_norm); return false; }
        std::vector<WeylElement> w = weyl_elements(rd);
        for (int it = 0; it < 20; ++it) {
            const WeylElement& e = w[static_cast<std::size_t>(rnd(g, 0, static_cast<i64>(w.size()) - 1))];
            Coweight p1 = random_vec(g, rd.rank, -3, 3), p2 = random_vec(g, rd.rank, -3, 3);
            IntVec q1 = e.on_coweights * p1, q2 = e.on_coweights * p2;
            if (q1.dot(IntVec(rd.basic_form * q2)) != p1.dot(IntVec(rd.basic_form * p2))) {
                detail = label + ": Weyl action does not preserve the form";
                return false;
            }
            Weight lam = random_vec(g, rd.rank, -3, 3);
            if (pairing(e.on_weights * lam, q1) != pairing(lam, p1)) {
                detail = label + ": pairing not invariant";
                return false;
            }
        }
    }
    return true;
}

bool check_orbit_partition(std::mt19937_64&, std::string& detail) {
    struct Case { const char* label; i64 k; } cases[] = {{"A1", 2}, {"A2", 1}, {"C2", 1}};
    for (const auto& cs : cases) {
        RootDatum rd = load_root_datum(cs.label);
        Twisting tw = level_twisting(rd, cs.k);
        std::vector<AffineOrbitRep> reps = affine_orbit_reps(tw);
        std::set<IntVec, LexLess> repset;
        for (const AffineOrbitRep& r : reps) {
            if (!lex_eq(canonicalize(tw, r.rep), r.rep)) { detail = "rep not canonical"; return false; }
            if (!repset.insert(r.rep).second) { detail = "duplicate rep"; return false; }
        }
        // every box point lands on exactly one listed representative
        Weight lam(rd.rank);
        std::function<bool(Eigen::Index)> walk = [&](Eigen::Index i) -> bool {
            if (i == rd.rank) return repset.count(canonicalize(tw, lam)) == 1;
            for (i64 v = -4; v <= 4; ++v) {
                lam[i] = v;
                if (!walk(i + 1)) return false;
            }
            return true;
        };
        if (!walk(0)) { detail = std::string(cs.label) + ": box point misses the rep set"; return false; }
    }
    return true;
}

bool check_waff_invariance(std::mt19937_64& g, std::string& detail) {
    RootDatum rd = load_root_datum("A2");
    Twisting tw = level_twisting(rd, 2);
    std::vector<WeylElement> w = weyl_elements(rd);
    for (const AffineOrbitRep& r : affine_orbit_reps(tw))
        for (int it = 0; it < 50; ++it) {
            const WeylElement& e = w[static_cast<std::size_t>(rnd(g, 0, static_cast<i64>(w.size()) - 1))];
            Coweight p = random_vec(g, rd.rank, -4, 4);
            Weight moved = IntVec(e.on_weights * r.rep) + kappa_tau(tw, p);
            if (!lex_eq(canonicalize(tw, moved), r.rep)) {
                detail = "orbit point " + vec_str(moved) + " not canonicalized to " + vec_str(r.rep);
                return false;
            }
        }
    return true;
}

bool check_count_duality(std::mt19937_64&, std::string& detail) {
    for (const std::string& label : {"A1", "A2", "C2"})
        for (i64 k = 1; k <= 4; ++k) {
            RootDatum rd = load_root_datum(label);
            std::size_t pos = affine_orbit_reps(level_twisting(rd, k)).size();
            std::size_t neg = negative_level_basis(rd, k).size();
            if (pos != neg) {
                detail = label + " k=" + std::to_string(k) + ": " + std::to_string(pos) +
                         " vs " + std::to_string(neg);
                return false;
            }
        }
    return true;
}

bool check_action_composition(std::mt19937_64& g, std::string& detail) {
    RootDatum rd = load_root_datum("C2");
    Twisting tws[] = {level_twisting(rd, 2), torus_twisting(random_posdef_form(g, 2))};
    for (const Twisting& tw : tws)
        for (int it = 0; it < 100; ++it) {
            LambdaTauPoint x{random_vec(g, 2, -5, 5), rnd(g, -3, 3)};
            Coweight p = random_vec(g, 2, -4, 4), q = random_vec(g, 2, -4, 4);
            LambdaTauPoint two = pi1_act(tw, q, pi1_act(tw, p, x));
            LambdaTauPoint one = pi1_act(tw, IntVec(p + q), x);
            if (!lex_eq(two.lambda, one.lambda) || two.n != one.n) { detail = "composition law"; return false; }
            LambdaTauPoint id = pi1_act(tw, IntVec(IntVec::Zero(2)), x);
            if (!lex_eq(id.lambda, x.lambda) || id.n != x.n) { detail = "identity"; return false; }
        }
    return true;
}

bool check_tempered_star(std::mt19937_64&, std::string& detail) {
    const Rat as[] = {Rat(0), Rat(1, 2), Rat(1), Rat(2)};
    const Rat cs[] = {Rat(0), Rat(1), Rat(10)};
    int cases = 0;
    for (const Rat& a : as)
        for (const Rat& c : cs)
            for (bool b : {true, false}) {
                GrowthDescriptor d{a, c, b};
                bool expect = c == Rat(0) || a < Rat(1);  // the limit c*n^a / n -> 0
                if (check_tempered(d) != expect || check_star(d) != check_tempered(d)) {
                    detail = "descriptor disagreement";
                    return false;
                }
                ++cases;
            }
    return cases >= 24;
}

bool check_theta_counts(std::mt19937_64& g, i64 order, std::string& detail) {
    for (int it = 0; it < 10; ++it) {
        i64 rank = rnd(g, 1, 3);
        IntMat form = random_posdef_form(g, rank);
        Twisting tw = torus_twisting(form);
        std::vector<WeightedQSeries> basis = theta_basis(tw, std::max<i64>(order, 15));
        Int det = int_det(form);
        if (Int(static_cast<i64>(basis.size())) != det) {
            detail = "count " + std::to_string(basis.size()) + " != det " + det.str();
            return false;
        }
        for (const WeightedQSeries& f : basis)
            for (Eigen::Index i = 0; i < rank; ++i) {
                Coweight p = IntVec::Zero(rank);
                p[i] = 1;
                if (!check_theta_invariance(tw, f, p)) { detail = "invariance failed"; return false; }
            }
    }
    return true;
}

bool check_classify(std::mt19937_64& g, std::string& detail) {
    for (int it = 0; it < 100; ++it) {
        i64 rank = rnd(g, 1, 3);
        IntMat m = random_symmetric(g, rank);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.cast<double>());
        // numerical zeros of exact singular matrices sit far below eps,
        // genuine nonzero integer-matrix eigenvalues far above
        const double eps = 1e-8;
        bool pos = (es.eigenvalues().array() > eps).all();
        bool neg = (es.eigenvalues().array() < -eps).all();
        LineBundleClass expect = pos ? LineBundleClass::ample
                               : neg ? LineBundleClass::anti_ample
                                     : LineBundleClass::rejected;
        if (classify_line_bundle(m) != expect) { detail = "classification mismatch"; return false; }
    }
    return true;
}

bool check_theta_pairing(std::mt19937_64&, std::string& detail) {
    for (i64 m = 1; m <= 3; ++m) {
        IntMat form(1, 1);
        form(0, 0) = m;
        ThetaPairing tp = theta_pairing_matrix(torus_twisting(form), 12);
        if (!unit_leading(tp.det)) { detail = "m=" + std::to_string(m) + ": non-unit det"; return false; }
    }
    return true;
}

bool check_abelian_ranks(std::mt19937_64&, std::string& detail) {
    for (i64 m = 1; m <= 3; ++m) {
        IntMat form(1, 1);
        form(0, 0) = m;
        auto [pos, neg] = abelian_duality_ranks(torus_twisting(form), 8, 12);
        if (pos != neg || pos != m) {
            detail = "m=" + std::to_string(m) + ": (" + std::to_string(pos) + "," +
                     std::to_string(neg) + ")";
            return false;
        }
    }
    return true;
}

std::vector<std::pair<RootDatum, i64>> character_matrix() {
    std::vector<std::pair<RootDatum, i64>> out;
    RootDatum a1 = load_root_datum("A1");
    for (i64 k = 1; k <= 3; ++k) out.emplace_back(a1, k);
    out.emplace_back(load_root_datum("A2"), 1);
    return out;
}

bool check_characters(std::mt19937_64&, i64 order, std::string& detail) {
    for (const auto& [rd, k] : character_matrix()) {
        WeightedQSeries den = affine_numerator(rd, rd.rho, rd.h_dual, order);
        std::vector<WeylElement> w = weyl_elements(rd);
        for (const AffineOrbitRep& r : affine_orbit_reps(level_twisting(rd, k))) {
            WeightedQSeries num = affine_numerator(rd, r.rep + rd.rho, k + rd.h_dual, order);
            // numerator anti-invariance
            for (const WeylElement& e : w) {
                WeightedQSeries mapped = wq_map_weights(num, e.on_weights);
                if (!wq_equal_up_to(mapped, wq_scale(num, e.sign), order)) {
                    detail = rd.label + ": numerator not anti-invariant";
                    return false;
                }
            }
            KacCharacter ch = kac_character(rd, r.rep, k, order);
            // exact re-multiplication on the fully determined window
            WeightedQSeries back = wq_mul(den, ch.ch);
            i64 safe = std::min(back.trunc_order(), num.trunc_order());
            if (!wq_equal_up_to(back, num, safe)) {
                detail = rd.label + " k=" + std::to_string(k) + ": re-multiplication failed";
                return false;
            }
            // positivity and per-layer W-invariance
            for (const auto& [n, layer] : ch.ch.layers())
                for (const auto& [mu, c] : layer) {
                    if (c < 0) { detail = "negative multiplicity"; return false; }
                    for (const WeylElement& e : w)
                        if (ch.ch.coeff(n, e.on_weights * mu) != c) {
                            detail = "layer not W-invariant";
                            return false;
                        }
                }
            // q^0 layer against the finite-module oracle
            auto fin = finite_character(rd, r.rep);
            Int dim = 0;
            for (const auto& [mu, c] : fin) dim += c;
            if (dim != weyl_dim(rd, r.rep)) { detail = "oracle dimension mismatch"; return false; }
            auto it = ch.ch.layers().find(0);
            std::size_t got = it == ch.ch.layers().end() ? 0 : it->second.size();
            if (got != fin.size()) { detail = "q^0 support mismatch"; return false; }
            for (const auto& [mu, c] : fin)
                if (ch.ch.coeff(0, mu) != c) {
                    detail = rd.label + ": q^0 mult mismatch at " + vec_str(mu);
                    return false;
                }
        }
    }
    return true;
}

bool check_duality_bijection(std::mt19937_64&, std::string& detail) {
    for (const std::string& label : {"A1", "A2", "C2"})
        for (i64 k = 1; k <= 3; ++k) {
            RootDatum rd = load_root_datum(label);
            auto pairs = duality_bijection(rd, k);
            std::set<IntVec, LexLess> images;
            for (const auto& [a, b] : pairs) {
                if (!lex_eq(IntVec(a.rep + rd.rho), b.rep)) { detail = "pair shape"; return false; }
                if (!images.insert(b.rep).second) { detail = "image collision"; return false; }
            }
            if (images.size() != negative_level_basis(rd, k).size()) {
                detail = "image set incomplete";
                return false;
            }
        }
    return true;
}

bool check_duality_pairing(std::mt19937_64&, i64 order, std::string& detail) {
    RootDatum rd = load_root_datum("A1");
    for (i64 k = 1; k <= 3; ++k) {
        DualityPairing dp = duality_pairing(rd, k, order);
        if (!unit_leading(dp.det)) {
            detail = "k=" + std::to_string(k) + ": det leading coeff not a unit";
            return false;
        }
    }
    return true;
}

}  // namespace

std::map<IntVec, Int, LexLess> finite_character(const RootDatum& rd, const Weight& lambda) {
    if (!is_dominant(lambda)) throw NotDominant();
    BigMat A = int_adjugate(rd.basic_form);  // scaled inverse form on weights
    auto ip = [&](const Weight& x, const Weight& y) {
        Int s = 0;
        for (Eigen::Index i = 0; i < x.size(); ++i)
            for (Eigen::Index j = 0; j < y.size(); ++j)
                s += Int(x[i]) * A(i, j) * Int(y[j]);
        return s;
    };
    i64 top_height = lambda.dot(rd.height_coweight);
    Int norm_top = ip(lambda + rd.rho, lambda + rd.rho);

    std::map<IntVec, Int, LexLess> mult;
    mult[lambda] = 1;
    // candidates processed by strictly decreasing height, so every recursive
    // lookup is already resolved
    std::map<i64, std::set<IntVec, LexLess>, std::greater<i64>> queue;
    auto push_successors = [&](const Weight& mu) {
        for (Eigen::Index i = 0; i < rd.rank; ++i) {
            Weight nu = mu - IntVec(rd.cartan.row(i).transpose());
            queue[nu.dot(rd.height_coweight)].insert(nu);
        }
    };
    push_successors(lambda);
    while (!queue.empty()) {
        auto level = queue.begin();
        std::set<IntVec, LexLess> batch = std::move(level->second);
        queue.erase(level);
        for (const IntVec& mu : batch) {
            if (mult.count(mu)) continue;
            Int num = 0;
            for (const Root& alpha : rd.positive_roots) {
                i64 step = alpha.weight.dot(rd.height_coweight);
                for (i64 j = 1;; ++j) {
                    Weight up = mu + j * alpha.weight;
                    if (up.dot(rd.height_coweight) > top_height) break;
                    auto it = mult.find(up);
                    if (it != mult.end() && it->second != 0)
                        num += 2 * ip(up, alpha.weight) * it->second;
                    if (step <= 0) break;  // defensive; positive roots have positive height
                }
            }
            Int den = norm_top - ip(mu + rd.rho, mu + rd.rho);
            if (den <= 0 || num == 0) continue;  // not a weight of the module
            if (num % den != 0) throw NotFiniteType("multiplicity recursion not integral");
            Int m = num / den;
            if (m > 0) {
                mult[mu] = m;
                push_successors(mu);
            }
        }
    }
    return mult;
}

std::vector<CheckResult> run_verify(const VerifyOptions& opt) {
    using CheckFn = std::function<bool(std::mt19937_64&, std::string&)>;
    std::vector<std::pair<std::string, CheckFn>> checks;
    i64 order = opt.order;
    checks.emplace_back("qseries/ring-identities", [order](std::mt19937_64& g, std::string& d) {
        return check_qseries_ring(g, order, d);
    });
    checks.emplace_back("root_data/form-and-pairing", [](std::mt19937_64& g, std::string& d) {
        return check_root_data(g, d);
    });
    checks.emplace_back("affine_weyl/orbit-partition", [](std::mt19937_64& g, std::string& d) {
        return check_orbit_partition(g, d);
    });
    checks.emplace_back("affine_weyl/waff-invariance", [](std::mt19937_64& g, std::string& d) {
        return check_waff_invariance(g, d);
    });
    checks.emplace_back("affine_weyl/count-duality", [](std::mt19937_64& g, std::string& d) {
        return check_count_duality(g, d);
    });
    checks.emplace_back("affine_weyl/action-composition", [](std::mt19937_64& g, std::string& d) {
        return check_action_composition(g, d);
    });
    checks.emplace_back("affine_weyl/tempered-star", [](std::mt19937_64& g, std::string& d) {
        return check_tempered_star(g, d);
    });
    checks.emplace_back("theta_torus/count-and-invariance", [order](std::mt19937_64& g, std::string& d) {
        return check_theta_counts(g, order, d);
    });
    checks.emplace_back("theta_torus/classify", [](std::mt19937_64& g, std::string& d) {
        return check_classify(g, d);
    });
    checks.emplace_back("theta_torus/pairing-unit-det", [](std::mt19937_64& g, std::string& d) {
        return check_theta_pairing(g, d);
    });
    checks.emplace_back("theta_torus/abelian-ranks", [](std::mt19937_64& g, std::string& d) {
        return check_abelian_ranks(g, d);
    });
    checks.emplace_back("kac_characters/character-contract", [order](std::mt19937_64& g, std::string& d) {
        return check_characters(g, order, d);
    });
    checks.emplace_back("kac_characters/duality-bijection", [](std::mt19937_64& g, std::string& d) {
        return check_duality_bijection(g, d);
    });
    checks.emplace_back("kac_characters/pairing-unit-det", [order](std::mt19937_64& g, std::string& d) {
        return check_duality_pairing(g, order, d);
    });

    std::vector<CheckResult> results(checks.size());
    auto work = [&](std::size_t i) {
        std::mt19937_64 g(opt.seed * 1000003ULL + i);  // per-check seed
        CheckResult r;
        r.name = checks[i].first;
        try {
            r.pass = checks[i].second(g, r.detail);
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = e.what();
        }
        results[i] = std::move(r);
    };
    std::size_t n = checks.size();
    if (opt.jobs <= 1) {
        for (std::size_t i = 0; i < n; ++i) work(i);
    } else {
        std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(opt.jobs), n);
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < workers; ++t)
            pool.emplace_back([&, t] {
                for (std::size_t i = t; i < n; i += workers) work(i);
            });
        for (auto& th : pool) th.join();
    }
    return results;
}

}  // namespace tatek
