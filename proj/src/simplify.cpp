#include "dgaw/simplify.h"

#include <algorithm>
#include <set>
#include <sstream>

namespace dgaw {

int name_gap(const std::string& name) {
    auto lb = name.find("^{");
    if (lb == std::string::npos) return 0;
    auto comma = name.find(',', lb);
    auto rb = name.find('}', lb);
    if (comma == std::string::npos || rb == std::string::npos || comma > rb) return 0;
    try {
        int m = std::stoi(name.substr(lb + 2, comma - lb - 2));
        int n = std::stoi(name.substr(comma + 1, rb - comma - 1));
        return n - m;
    } catch (...) {
        return 0;
    }
}

StrategyKey default_strategy() {
    return [](const DgaPresentation& pres, int i) {
        return std::tuple<int, int, int>(0, name_gap(pres.gens()[i].name), i);
    };
}

StrategyKey gap_first_strategy() {
    return [](const DgaPresentation& pres, int i) {
        return std::tuple<int, int, int>(pres.gens()[i].deg, name_gap(pres.gens()[i].name), i);
    };
}

namespace {

// bare a_j candidates within d(a_i): length-1 words with unit coefficient
// such that neither a_i nor a_j recurs inside longer words
template <typename DiffOf, typename Emit>
void candidates_for(const DiffOf& diff_of, int i, const Emit& emit) {
    const NCPoly& di = diff_of(i);
    for (const auto& [w, c] : di.terms())
        for (int g : w.factors)
            if (g == i) return;
    for (const auto& [w, c] : di.terms()) {
        if (w.length() != 1 || !c.is_unit()) continue;
        int j = w.factors[0];
        if (j == i) continue;
        bool standalone = true;
        for (const auto& [w2, c2] : di.terms()) {
            if (w2.length() <= 1) continue;
            for (int g : w2.factors)
                if (g == j) standalone = false;
        }
        if (standalone) emit(CancellablePair{i, j, c});
    }
}

}  // namespace

std::optional<CancellablePair> find_cancellable_pair(const DgaPresentation& pres,
                                                     const StrategyKey& key) {
    std::optional<CancellablePair> best;
    std::tuple<int, int, int, int> best_key{};
    auto diff_of = [&](int g) -> const NCPoly& { return pres.diff(g); };
    for (int i = 0; i < pres.gens().size(); ++i) {
        candidates_for(diff_of, i, [&](const CancellablePair& cand) {
            auto ki = key(pres, cand.i);
            auto kj = key(pres, cand.j);
            // pairs compete by (max gap, key of the cancelled generator,
            // declaration of the partner)
            std::tuple<int, int, int, int> k(std::max(std::get<1>(ki), std::get<1>(kj)),
                                             std::get<0>(ki), std::get<2>(ki), std::get<2>(kj));
            if (!best || k < best_key) {
                best = cand;
                best_key = k;
            }
        });
    }
    return best;
}

CancelResult cancel_pair(const DgaPresentation& pres, int i, int j, const Scalar& unit,
                         const StrategyKey& key, bool assert_d2) {
    const GenSet& old = pres.gens();
    Field f = pres.field();
    // rho = -u^{-1} (d a_i - u a_j), the replacement value of a_j
    NCPoly v = pres.diff(i);
    v.add_term(Word::gen(j), -unit);
    NCPoly rho = v * (-unit.inverse());
    for (const auto& [w, c] : rho.terms())
        for (int g : w.factors)
            if (g == i || g == j)
                throw error("cancel_pair: substitution re-introduces the cancelled pair");

    GenSet ng(old.base());
    std::vector<int> old2new(static_cast<size_t>(old.size()), -1);
    for (int g = 0; g < old.size(); ++g) {
        if (g == i || g == j) continue;
        old2new[static_cast<size_t>(g)] =
            ng.add(old[g].name, old[g].src, old[g].tgt, old[g].deg, old[g].adams);
    }
    // quotient map on generators: a_i -> 0, a_j -> rho, others to themselves
    auto push_word = [&](const Word& w, const Scalar& c, NCPoly& out) {
        // substitute letter by letter
        NCPoly acc(f);
        bool started = false;
        for (int g : w.factors) {
            NCPoly factor(f);
            if (g == i) {
                out += NCPoly(f);  // zero
                return;
            } else if (g == j) {
                for (const auto& [rw, rc] : rho.terms()) {
                    Word mapped;
                    mapped.vertex = rw.vertex;
                    for (int rg : rw.factors) mapped.factors.push_back(old2new[static_cast<size_t>(rg)]);
                    factor.add_term(mapped, rc);
                }
            } else {
                factor = NCPoly::gen(f, old2new[static_cast<size_t>(g)]);
            }
            if (!started) {
                acc = factor;
                started = true;
            } else {
                acc = mul(ng, acc, factor);
            }
        }
        if (!started) acc = NCPoly::idem(f, w.vertex);
        out += acc * c;
    };
    auto map_poly = [&](const NCPoly& p) {
        NCPoly out(f);
        for (const auto& [w, c] : p.terms()) push_word(w, c, out);
        return out;
    };

    DgaPresentation np(ng, f);
    for (int g = 0; g < old.size(); ++g) {
        if (g == i || g == j) continue;
        np.set_diff(old2new[static_cast<size_t>(g)], map_poly(pres.diff(g)));
    }
    if (assert_d2) {
        auto bad = np.check_d_squared();
        if (!bad.empty())
            throw error("cancel_pair: d^2 != 0 after cancelling (" + old[i].name + ", " + old[j].name +
                        ") at generator " + ng[bad[0]].name);
    }

    CancelResult res{std::move(np), CancelStep{}, {}};
    res.step.cancelled = old[i].name;
    res.step.partner = old[j].name;
    res.step.unit = unit;
    res.step.substitution = rho.str(old);
    res.step.filtration = std::get<1>(key(pres, i));
    res.images.reserve(static_cast<size_t>(old.size()));
    for (int g = 0; g < old.size(); ++g) {
        if (g == i)
            res.images.push_back(NCPoly::zero(f));
        else if (g == j)
            res.images.push_back(map_poly(NCPoly::gen(f, j)));
        else
            res.images.push_back(NCPoly::gen(f, old2new[static_cast<size_t>(g)]));
    }
    return res;
}

namespace {

// in-place cancellation engine over stable generator ids; presentations
// are materialized once at the end
struct SimplifyEngine {
    const DgaPresentation& input;
    const StrategyKey& key;
    Field f;
    std::vector<char> alive;
    std::vector<NCPoly> diff;
    std::vector<NCPoly> images;  // over stable ids, tracked on demand
    bool track;

    SimplifyEngine(const DgaPresentation& pres, const StrategyKey& k, bool track_images)
        : input(pres), key(k), f(pres.field()), alive(static_cast<size_t>(pres.gens().size()), 1),
          track(track_images) {
        for (int g = 0; g < pres.gens().size(); ++g) {
            diff.push_back(pres.diff(g));
            if (track) images.push_back(NCPoly::gen(f, g));
        }
    }

    // substitute i -> 0, j -> rho inside p (single pass; rho avoids i, j)
    NCPoly substitute(const NCPoly& p, int i, int j, const NCPoly& rho) const {
        bool touched = false;
        for (const auto& [w, c] : p.terms())
            for (int g : w.factors)
                if (g == i || g == j) touched = true;
        if (!touched) return p;
        const GenSet& gs = input.gens();
        NCPoly out(f);
        for (const auto& [w, c] : p.terms()) {
            bool kill = false, has_j = false;
            for (int g : w.factors) {
                if (g == i) kill = true;
                if (g == j) has_j = true;
            }
            if (kill) continue;
            if (!has_j) {
                out.add_term(w, c);
                continue;
            }
            NCPoly acc(f);
            bool started = false;
            for (int g : w.factors) {
                const NCPoly* factor;
                NCPoly single(f);
                if (g == j) {
                    factor = &rho;
                } else {
                    single = NCPoly::gen(f, g);
                    factor = &single;
                }
                if (!started) {
                    acc = *factor;
                    started = true;
                } else {
                    acc = mul(gs, acc, *factor);
                }
            }
            out += acc * c;
        }
        return out;
    }

    std::optional<CancellablePair> find() const {
        std::optional<CancellablePair> best;
        std::tuple<int, int, int, int> best_key{};
        auto diff_of = [&](int g) -> const NCPoly& { return diff[static_cast<size_t>(g)]; };
        for (int i = 0; i < input.gens().size(); ++i) {
            if (!alive[static_cast<size_t>(i)]) continue;
            candidates_for(diff_of, i, [&](const CancellablePair& cand) {
                auto ki = key(input, cand.i);
                auto kj = key(input, cand.j);
                std::tuple<int, int, int, int> k(std::max(std::get<1>(ki), std::get<1>(kj)),
                                                 std::get<0>(ki), std::get<2>(ki), std::get<2>(kj));
                if (!best || k < best_key) {
                    best = cand;
                    best_key = k;
                }
            });
        }
        return best;
    }

    CancelStep cancel(const CancellablePair& c) {
        const GenSet& gs = input.gens();
        NCPoly v = diff[static_cast<size_t>(c.i)];
        v.add_term(Word::gen(c.j), -c.unit);
        NCPoly rho = v * (-c.unit.inverse());
        for (const auto& [w, cc] : rho.terms())
            for (int g : w.factors)
                if (g == c.i || g == c.j)
                    throw error("simplify: substitution re-introduces the cancelled pair");
        alive[static_cast<size_t>(c.i)] = alive[static_cast<size_t>(c.j)] = 0;
        for (int g = 0; g < gs.size(); ++g)
            if (alive[static_cast<size_t>(g)])
                diff[static_cast<size_t>(g)] = substitute(diff[static_cast<size_t>(g)], c.i, c.j, rho);
        if (track)
            for (auto& img : images) img = substitute(img, c.i, c.j, rho);
        CancelStep step;
        step.cancelled = gs[c.i].name;
        step.partner = gs[c.j].name;
        step.unit = c.unit;
        step.substitution = rho.str(gs);
        step.filtration = std::get<1>(key(input, c.i));
        diff[static_cast<size_t>(c.i)] = NCPoly(f);
        diff[static_cast<size_t>(c.j)] = NCPoly(f);
        return step;
    }

    std::pair<DgaPresentation, std::vector<NCPoly>> materialize() const {
        const GenSet& gs = input.gens();
        GenSet ng(gs.base());
        std::vector<int> old2new(static_cast<size_t>(gs.size()), -1);
        for (int g = 0; g < gs.size(); ++g)
            if (alive[static_cast<size_t>(g)])
                old2new[static_cast<size_t>(g)] = ng.add(gs[g].name, gs[g].src, gs[g].tgt, gs[g].deg, gs[g].adams);
        auto reindex = [&](const NCPoly& p) {
            NCPoly out(f);
            for (const auto& [w, c] : p.terms()) {
                Word nw;
                nw.vertex = w.vertex;
                for (int g : w.factors) {
                    int m = old2new[static_cast<size_t>(g)];
                    if (m < 0) throw error("simplify: dead generator survived in a differential");
                    nw.factors.push_back(m);
                }
                out.add_term(nw, c);
            }
            return out;
        };
        DgaPresentation np(ng, f);
        for (int g = 0; g < gs.size(); ++g)
            if (alive[static_cast<size_t>(g)]) np.set_diff(old2new[static_cast<size_t>(g)], reindex(diff[static_cast<size_t>(g)]));
        std::vector<NCPoly> imgs;
        if (track)
            for (const auto& img : images) imgs.push_back(reindex(img));
        return {std::move(np), std::move(imgs)};
    }
};

}  // namespace

SimplifyResult simplify(const DgaPresentation& pres, const StrategyKey& key, bool assert_each_step,
                        bool track_images) {
    SimplifyEngine eng(pres, key, track_images);
    CancellationTrace trace;
    while (auto cand = eng.find()) {
        trace.steps.push_back(eng.cancel(*cand));
        if (assert_each_step) {
            auto [cur, imgs] = eng.materialize();
            auto bad = cur.check_d_squared();
            if (!bad.empty())
                throw error("simplify: d^2 != 0 after cancelling " + trace.steps.back().cancelled);
        }
    }
    auto [fin, imgs] = eng.materialize();
    auto bad = fin.check_d_squared();
    if (!bad.empty()) throw error("simplify: d^2 != 0 on the terminal presentation");
    return SimplifyResult{std::move(fin), std::move(trace), std::move(imgs)};
}

std::string CancellationTrace::serialize() const {
    std::ostringstream os;
    for (const auto& s : steps)
        os << s.cancelled << "\t" << s.partner << "\t" << s.unit.str() << "\t" << s.substitution
           << "\t" << s.filtration << "\n";
    return os.str();
}

CancellationTrace CancellationTrace::parse(const std::string& text) {
    CancellationTrace t;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        CancelStep s;
        std::vector<std::string> parts;
        size_t pos = 0;
        while (true) {
            auto tab = line.find('\t', pos);
            if (tab == std::string::npos) {
                parts.push_back(line.substr(pos));
                break;
            }
            parts.push_back(line.substr(pos, tab - pos));
            pos = tab + 1;
        }
        if (parts.size() != 5) throw error("trace: malformed line: " + line);
        s.cancelled = parts[0];
        s.partner = parts[1];
        s.unit_text = parts[2];  // interpreted at replay time against the field
        s.substitution = parts[3];
        s.filtration = std::stoi(parts[4]);
        t.steps.push_back(s);
    }
    return t;
}

DgaPresentation replay_trace(const DgaPresentation& pres, const CancellationTrace& trace) {
    DgaPresentation cur = pres;
    auto key = default_strategy();
    for (const auto& s : trace.steps) {
        int i = cur.gens().index(s.cancelled);
        int j = cur.gens().index(s.partner);
        if (i < 0 || j < 0) throw error("replay: generator missing for step " + s.cancelled);
        Scalar u = cur.diff(i).coeff(Word::gen(j));
        if (!u.is_unit()) throw error("replay: stale trace at step " + s.cancelled);
        std::string want = s.unit_text.empty() ? s.unit.str() : s.unit_text;
        if (u.str() != want) throw error("replay: unit mismatch at step " + s.cancelled);
        cur = cancel_pair(cur, i, j, u, key, false).pres;
    }
    auto bad = cur.check_d_squared();
    if (!bad.empty()) throw error("replay: d^2 check failed");
    return cur;
}

DgaPresentation stabilize(const DgaPresentation& pres, int deg, int vertex) {
    GenSet ng(pres.gens().base());
    for (int g = 0; g < pres.gens().size(); ++g) {
        const GenInfo& gi = pres.gens()[g];
        ng.add(gi.name, gi.src, gi.tgt, gi.deg, gi.adams);
    }
    int k = 0;
    std::string an, bn;
    do {
        an = "st" + std::to_string(k) + "a";
        bn = "st" + std::to_string(k) + "b";
        ++k;
    } while (ng.has(an) || ng.has(bn));
    int a = ng.add(an, vertex, vertex, deg);
    int b = ng.add(bn, vertex, vertex, deg - 1);
    DgaPresentation np(ng, pres.field());
    for (int g = 0; g < pres.gens().size(); ++g) np.set_diff(g, pres.diff(g));
    np.set_diff(a, NCPoly::gen(pres.field(), b));
    static_cast<void>(b);
    return np;
}

std::pair<DgaPresentation, std::vector<NCPoly>> apply_elementary_automorphism(
    const DgaPresentation& pres, int gen, const NCPoly& v) {
    const GenSet& gs = pres.gens();
    Field f = pres.field();
    for (const auto& [w, c] : v.terms())
        for (int g : w.factors)
            if (g == gen) throw error("elementary automorphism: v must avoid the twisted generator");
    if (!v.is_zero()) {
        if (!v.endpoints_are(gs, gs[gen].src, gs[gen].tgt))
            throw error("elementary automorphism: endpoint mismatch");
        auto hd = v.homogeneous_deg(gs);
        if (!hd || *hd != gs[gen].deg) throw error("elementary automorphism: degree mismatch");
    }
    // psi(g) = g + v; transport of the differential: d' = psi^{-1} d psi
    std::vector<NCPoly> psis;
    std::vector<NCPoly> psi_inv;
    for (int g = 0; g < gs.size(); ++g) {
        NCPoly img = NCPoly::gen(f, g);
        NCPoly inv = NCPoly::gen(f, g);
        if (g == gen) {
            img += v;
            inv += -v;
        }
        psis.push_back(img);
        psi_inv.push_back(inv);
    }
    auto apply_map = [&](const std::vector<NCPoly>& imgs, const NCPoly& p) {
        NCPoly out(f);
        for (const auto& [w, c] : p.terms()) {
            if (w.is_idem()) {
                out.add_term(w, c);
                continue;
            }
            NCPoly acc = imgs[static_cast<size_t>(w.factors[0])];
            for (size_t k = 1; k < w.factors.size(); ++k)
                acc = mul(gs, acc, imgs[static_cast<size_t>(w.factors[k])]);
            out += acc * c;
        }
        return out;
    };
    DgaPresentation np(gs, f);
    for (int g = 0; g < gs.size(); ++g)
        np.set_diff(g, apply_map(psi_inv, pres.d(psis[static_cast<size_t>(g)])));
    auto bad = np.check_d_squared();
    if (!bad.empty()) throw error("elementary automorphism broke d^2 = 0");
    return {std::move(np), std::move(psis)};
}

namespace {

// formal inverse of the candidate on generators, by linear solve on the
// length-1 parts plus bounded substitution
std::optional<std::vector<NCPoly>> invert_on_generators(const DgaMorphism& f) {
    const GenSet& sg = f.source->gens();
    const GenSet& tg = f.target->gens();
    Field fld = f.source->field();
    int n = sg.size();
    if (tg.size() != n) return std::nullopt;

    // linear part L: matrix over target gens x source gens
    std::vector<std::vector<Scalar>> L(static_cast<size_t>(n),
                                       std::vector<Scalar>(static_cast<size_t>(n), Scalar::zero(fld)));
    for (int s = 0; s < n; ++s)
        for (const auto& [w, c] : f.images[static_cast<size_t>(s)].terms())
            if (w.length() == 1) L[static_cast<size_t>(w.factors[0])][static_cast<size_t>(s)] = c;

    // invert L by Gaussian elimination, tracking the inverse matrix
    std::vector<std::vector<Scalar>> A = L;
    std::vector<std::vector<Scalar>> Inv(static_cast<size_t>(n),
                                         std::vector<Scalar>(static_cast<size_t>(n), Scalar::zero(fld)));
    for (int i = 0; i < n; ++i) Inv[static_cast<size_t>(i)][static_cast<size_t>(i)] = Scalar::one(fld);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int row = col; row < n; ++row)
            if (!A[static_cast<size_t>(row)][static_cast<size_t>(col)].is_zero()) {
                piv = row;
                break;
            }
        if (piv < 0) return std::nullopt;
        std::swap(A[static_cast<size_t>(piv)], A[static_cast<size_t>(col)]);
        std::swap(Inv[static_cast<size_t>(piv)], Inv[static_cast<size_t>(col)]);
        Scalar d = A[static_cast<size_t>(col)][static_cast<size_t>(col)].inverse();
        for (int k = 0; k < n; ++k) {
            A[static_cast<size_t>(col)][static_cast<size_t>(k)] *= d;
            Inv[static_cast<size_t>(col)][static_cast<size_t>(k)] *= d;
        }
        for (int row = 0; row < n; ++row) {
            if (row == col) continue;
            Scalar m = A[static_cast<size_t>(row)][static_cast<size_t>(col)];
            if (m.is_zero()) continue;
            for (int k = 0; k < n; ++k) {
                A[static_cast<size_t>(row)][static_cast<size_t>(k)] =
                    A[static_cast<size_t>(row)][static_cast<size_t>(k)] -
                    m * A[static_cast<size_t>(col)][static_cast<size_t>(k)];
                Inv[static_cast<size_t>(row)][static_cast<size_t>(k)] =
                    Inv[static_cast<size_t>(row)][static_cast<size_t>(k)] -
                    m * Inv[static_cast<size_t>(col)][static_cast<size_t>(k)];
            }
        }
    }
    // Linv as generator-level map: target gen t -> sum_s Inv[s][t] s
    auto linv_of = [&](int t) {
        NCPoly out(fld);
        for (int s = 0; s < n; ++s) {
            Scalar c = Inv[static_cast<size_t>(s)][static_cast<size_t>(t)];
            if (!c.is_zero()) out.add_term(Word::gen(s), c);
        }
        return out;
    };
    auto linv_apply = [&](const NCPoly& p) {
        NCPoly out(fld);
        for (const auto& [w, c] : p.terms()) {
            if (w.is_idem()) {
                out.add_term(w, c);
                continue;
            }
            NCPoly acc = linv_of(w.factors[0]);
            for (size_t k = 1; k < w.factors.size(); ++k) acc = mul(sg, acc, linv_of(w.factors[k]));
            out += acc * c;
        }
        return out;
    };
    auto f_apply = [&](const NCPoly& p) {
        NCPoly out(fld);
        for (const auto& [w, c] : p.terms()) {
            if (w.is_idem()) {
                out.add_term(w, c);
                continue;
            }
            NCPoly acc = f.images[static_cast<size_t>(w.factors[0])];
            for (size_t k = 1; k < w.factors.size(); ++k)
                acc = mul(tg, acc, f.images[static_cast<size_t>(w.factors[k])]);
            out += acc * c;
        }
        return out;
    };

    std::vector<NCPoly> g;
    for (int t = 0; t < n; ++t) {
        NCPoly x = linv_of(t);  // first approximation
        for (int iter = 0; iter < 64; ++iter) {
            NCPoly err = f_apply(x);
            err.add_term(Word::gen(t), -Scalar::one(fld));
            if (err.is_zero()) break;
            x += -linv_apply(err);
            if (iter == 63) return std::nullopt;
        }
        g.push_back(x);
    }
    return g;
}

}  // namespace

bool verify_iso(const DgaPresentation& pres1, const DgaPresentation& pres2,
                const DgaMorphism& candidate) {
    if (candidate.source != &pres1 || candidate.target != &pres2) return false;
    if (!check_morphism(candidate)) return false;
    auto inv = invert_on_generators(candidate);
    if (!inv) return false;
    DgaMorphism g;
    g.source = &pres2;
    g.target = &pres1;
    g.images = *inv;
    if (!check_morphism(g)) return false;
    // two-sided identities on generators
    for (int t = 0; t < pres2.gens().size(); ++t) {
        NCPoly r = candidate.apply(g.images[static_cast<size_t>(t)]);
        if (r != NCPoly::gen(pres2.field(), t)) return false;
    }
    for (int s = 0; s < pres1.gens().size(); ++s) {
        NCPoly r = g.apply(candidate.images[static_cast<size_t>(s)]);
        if (r != NCPoly::gen(pres1.field(), s)) return false;
    }
    return true;
}

std::optional<GaugeAssignment> sign_gauge_solve(const DgaPresentation& pres1,
                                                const DgaPresentation& pres2) {
    const GenSet& g1 = pres1.gens();
    const GenSet& g2 = pres2.gens();
    if (g1.size() != g2.size()) throw error("sign_gauge_solve: generator sets differ");
    Field f = pres1.field();
    int n = g1.size();
    for (int g = 0; g < n; ++g)
        if (g1[g].name != g2[g].name || g1[g].deg != g2[g].deg)
            throw error("sign_gauge_solve: generator sets differ");

    // one GF(2) equation per monomial: x_g + sum_i x_{g_i} = log(c2/c1)
    std::vector<std::vector<uint8_t>> rows;
    std::vector<uint8_t> rhs;
    for (int g = 0; g < n; ++g) {
        const NCPoly& d1 = pres1.diff(g);
        const NCPoly& d2 = pres2.diff(g);
        if (d1.term_count() != d2.term_count()) throw error("sign_gauge_solve: support mismatch");
        for (const auto& [w, c1] : d1.terms()) {
            Scalar c2 = d2.coeff(w);
            if (c2.is_zero()) throw error("sign_gauge_solve: support mismatch");
            Scalar ratio = c2 * c1.inverse();
            uint8_t b;
            if (ratio.is_one())
                b = 0;
            else if ((-ratio).is_one())
                b = 1;
            else
                throw error("sign_gauge_solve: coefficient ratio is not +-1");
            std::vector<uint8_t> row(static_cast<size_t>(n), 0);
            row[static_cast<size_t>(g)] ^= 1;
            for (int x : w.factors) row[static_cast<size_t>(x)] ^= 1;
            rows.push_back(std::move(row));
            rhs.push_back(b);
        }
    }
    // GF(2) elimination
    int m = static_cast<int>(rows.size());
    std::vector<int> pivot_col;
    int r = 0;
    for (int col = 0; col < n && r < m; ++col) {
        int piv = -1;
        for (int row = r; row < m; ++row)
            if (rows[static_cast<size_t>(row)][static_cast<size_t>(col)]) {
                piv = row;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[static_cast<size_t>(piv)], rows[static_cast<size_t>(r)]);
        std::swap(rhs[static_cast<size_t>(piv)], rhs[static_cast<size_t>(r)]);
        for (int row = 0; row < m; ++row) {
            if (row != r && rows[static_cast<size_t>(row)][static_cast<size_t>(col)]) {
                for (int k = col; k < n; ++k)
                    rows[static_cast<size_t>(row)][static_cast<size_t>(k)] ^=
                        rows[static_cast<size_t>(r)][static_cast<size_t>(k)];
                rhs[static_cast<size_t>(row)] ^= rhs[static_cast<size_t>(r)];
            }
        }
        pivot_col.push_back(col);
        ++r;
    }
    for (int row = r; row < m; ++row)
        if (rhs[static_cast<size_t>(row)]) return std::nullopt;  // inconsistent

    std::vector<uint8_t> x(static_cast<size_t>(n), 0);
    for (int k = 0; k < r; ++k) x[static_cast<size_t>(pivot_col[static_cast<size_t>(k)])] = rhs[static_cast<size_t>(k)];

    GaugeAssignment out;
    for (int g = 0; g < n; ++g)
        out.lambda[g1[g].name] = x[static_cast<size_t>(g)] ? -Scalar::one(f) : Scalar::one(f);
    return out;
}

}  // namespace dgaw
