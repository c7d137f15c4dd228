#include "dgaw/homology.h"

#include <algorithm>
#include <functional>
#include <sstream>

namespace dgaw {

namespace {

// ---- exact rank computations ----

int rank_gf2(std::vector<std::vector<uint64_t>> rows, int ncols) {
    int rank = 0;
    size_t nw = static_cast<size_t>((ncols + 63) / 64);
    for (int col = 0; col < ncols && rank < static_cast<int>(rows.size()); ++col) {
        size_t w = static_cast<size_t>(col) / 64;
        uint64_t bit = 1ull << (col % 64);
        int piv = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[static_cast<size_t>(r)][w] & bit) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[static_cast<size_t>(piv)], rows[static_cast<size_t>(rank)]);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r != rank && (rows[static_cast<size_t>(r)][w] & bit))
                for (size_t k = w; k < nw; ++k) rows[static_cast<size_t>(r)][k] ^= rows[static_cast<size_t>(rank)][k];
        }
        ++rank;
    }
    return rank;
}

int rank_dense(std::vector<std::vector<Scalar>> M, Field f) {
    if (M.empty()) return 0;
    int nr = static_cast<int>(M.size());
    int nc = static_cast<int>(M[0].size());
    int rank = 0;
    for (int col = 0; col < nc && rank < nr; ++col) {
        int piv = -1;
        for (int r = rank; r < nr; ++r)
            if (!M[static_cast<size_t>(r)][static_cast<size_t>(col)].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(M[static_cast<size_t>(piv)], M[static_cast<size_t>(rank)]);
        Scalar inv = M[static_cast<size_t>(rank)][static_cast<size_t>(col)].inverse();
        for (int k = col; k < nc; ++k) M[static_cast<size_t>(rank)][static_cast<size_t>(k)] *= inv;
        for (int r = 0; r < nr; ++r) {
            if (r == rank) continue;
            Scalar m = M[static_cast<size_t>(r)][static_cast<size_t>(col)];
            if (m.is_zero()) continue;
            for (int k = col; k < nc; ++k)
                M[static_cast<size_t>(r)][static_cast<size_t>(k)] =
                    M[static_cast<size_t>(r)][static_cast<size_t>(k)] - m * M[static_cast<size_t>(rank)][static_cast<size_t>(k)];
        }
        ++rank;
    }
    return rank;
}

// sparse rows as (column, coeff) lists, dispatched by field
int rank_sparse(const std::vector<std::map<int, Scalar>>& rows, int ncols, Field f) {
    if (rows.empty() || ncols == 0) return 0;
    if (f.kind == FieldKind::GF2) {
        std::vector<std::vector<uint64_t>> packed;
        packed.reserve(rows.size());
        size_t nw = static_cast<size_t>((ncols + 63) / 64);
        for (const auto& r : rows) {
            std::vector<uint64_t> row(nw, 0);
            for (const auto& [c, v] : r)
                if (!v.is_zero()) row[static_cast<size_t>(c) / 64] ^= 1ull << (c % 64);
            packed.push_back(std::move(row));
        }
        return rank_gf2(std::move(packed), ncols);
    }
    std::vector<std::vector<Scalar>> M;
    M.reserve(rows.size());
    for (const auto& r : rows) {
        std::vector<Scalar> row(static_cast<size_t>(ncols), Scalar::zero(f));
        for (const auto& [c, v] : r) row[static_cast<size_t>(c)] = v;
        M.push_back(std::move(row));
    }
    return rank_dense(std::move(M), f);
}

// ---- word bases ----

struct WordBasis {
    std::vector<Word> words;
    std::map<Word, int> index;

    void add(const Word& w) {
        if (index.count(w)) return;
        index[w] = static_cast<int>(words.size());
        words.push_back(w);
    }
};

// all composable words with length <= max_len (length truncation) or
// |adams| <= bound (Adams truncation; every generator needs a nonzero
// Adams degree of uniform sign)
WordBasis enumerate_words(const GenSet& gs, int max_len, std::optional<int> adams_bound) {
    WordBasis wb;
    for (int v = 0; v < gs.base().size(); ++v) wb.add(Word::idem(v));
    int sgn = 0;
    if (adams_bound) {
        for (int g = 0; g < gs.size(); ++g) {
            if (!gs[g].adams || *gs[g].adams == 0)
                throw error("adams truncation requires nonzero Adams degrees on all generators");
            int s = *gs[g].adams > 0 ? 1 : -1;
            if (sgn == 0) sgn = s;
            if (s != sgn) throw error("adams truncation requires a uniform Adams sign");
        }
    }
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int len, int adams) {
        if (!cur.empty()) {
            Word w;
            w.factors = cur;
            wb.add(w);
        }
        if (max_len > 0 && len >= max_len) return;
        for (int g = 0; g < gs.size(); ++g) {
            // extend on the right: g applied before the current word
            if (!cur.empty() && gs[cur.back()].src != gs[g].tgt) continue;
            int na = adams + (gs[g].adams ? *gs[g].adams : 0);
            if (adams_bound && std::abs(na) > *adams_bound) continue;
            cur.push_back(g);
            rec(len + 1, na);
            cur.pop_back();
        }
    };
    rec(0, 0);
    return wb;
}

struct Block {
    std::vector<int> ids;  // indices into the WordBasis
};

}  // namespace

std::string BettiTable::to_tsv() const {
    std::ostringstream os;
    os << "# betti\tstratum=" << stratum_kind << "\tbound=" << bound << "\tdegrees=" << deg_lo << ".."
       << deg_hi << "\texact_strata=" << (exact_strata ? 1 : 0) << "\n";
    os << "deg\tstratum\tdim\n";
    for (const auto& [ds, v] : strata) os << ds.first << "\t" << ds.second << "\t" << v << "\n";
    os << "deg\ttotal\n";
    for (const auto& [d, v] : totals) os << d << "\t" << v << "\n";
    return os.str();
}

BettiTable BettiTable::from_tsv(const std::string& text) {
    BettiTable t;
    std::istringstream is(text);
    std::string line;
    int mode = 0;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            auto grab = [&](const std::string& k) {
                auto p = line.find(k + "=");
                if (p == std::string::npos) return std::string();
                auto e = line.find('\t', p);
                return line.substr(p + k.size() + 1, e - p - k.size() - 1);
            };
            t.stratum_kind = grab("stratum");
            t.bound = std::stoi(grab("bound"));
            t.exact_strata = grab("exact_strata") == "1";
            auto degs = grab("degrees");
            auto dd = degs.find("..");
            t.deg_lo = std::stoi(degs.substr(0, dd));
            t.deg_hi = std::stoi(degs.substr(dd + 2));
            continue;
        }
        if (line == "deg\tstratum\tdim") {
            mode = 1;
            continue;
        }
        if (line == "deg\ttotal") {
            mode = 2;
            continue;
        }
        std::istringstream ls(line);
        if (mode == 1) {
            int d, s, v;
            ls >> d >> s >> v;
            t.strata[{d, s}] = v;
        } else if (mode == 2) {
            int d, v;
            ls >> d >> v;
            t.totals[d] = v;
        }
    }
    return t;
}

namespace {

BettiTable cohomology_core(const DgaPresentation& pres, int max_len, std::optional<int> adams_bound,
                           int deg_lo, int deg_hi) {
    const GenSet& gs = pres.gens();
    Field f = pres.field();
    WordBasis wb = enumerate_words(gs, max_len, adams_bound);

    auto stratum_of = [&](const Word& w) {
        return adams_bound ? std::abs(w.adams(gs).value_or(0)) : static_cast<int>(w.length());
    };
    // homogeneity detection: +1 in length, or Adams-preserving (always)
    bool exact = true;
    if (!adams_bound) {
        for (int g = 0; g < gs.size(); ++g)
            for (const auto& [w, c] : pres.diff(g).terms())
                if (w.length() != 2) exact = false;
    }

    std::map<std::pair<int, int>, Block> blocks;  // (deg, stratum)
    std::map<int, Block> deg_blocks;
    for (int i = 0; i < static_cast<int>(wb.words.size()); ++i) {
        const Word& w = wb.words[static_cast<size_t>(i)];
        int d = w.deg(gs);
        if (d < deg_lo - 1 || d > deg_hi + 1) continue;
        blocks[{d, stratum_of(w)}].ids.push_back(i);
        deg_blocks[d].ids.push_back(i);
    }

    // truncated differential of a basis word
    auto d_of = [&](const Word& w) {
        NCPoly dw = pres.d(NCPoly(f).added(w, Scalar::one(f)));
        NCPoly out(f);
        for (const auto& [t, c] : dw.terms()) {
            if (!adams_bound && static_cast<int>(t.length()) > max_len) continue;
            if (adams_bound && std::abs(t.adams(gs).value_or(0)) > *adams_bound)
                throw error("cohomology: differential does not preserve the Adams grading");
            out.add_term(t, c);
        }
        return out;
    };

    auto block_rank = [&](const Block& src, const Block& dst) {
        if (src.ids.empty() || dst.ids.empty()) return 0;
        std::map<int, int> col;
        for (int i = 0; i < static_cast<int>(dst.ids.size()); ++i) col[dst.ids[static_cast<size_t>(i)]] = i;
        std::vector<std::map<int, Scalar>> rows;
        for (int id : src.ids) {
            NCPoly dw = d_of(wb.words[static_cast<size_t>(id)]);
            std::map<int, Scalar> row;
            for (const auto& [t, c] : dw.terms()) {
                auto it = wb.index.find(t);
                if (it == wb.index.end()) throw error("cohomology: basis misses a differential image");
                auto ct = col.find(it->second);
                if (ct == col.end()) throw error("cohomology: block structure violated");
                row[ct->second] = c;
            }
            if (!row.empty()) rows.push_back(std::move(row));
        }
        return rank_sparse(rows, static_cast<int>(dst.ids.size()), f);
    };

    BettiTable out;
    out.bound = adams_bound ? *adams_bound : max_len;
    out.deg_lo = deg_lo;
    out.deg_hi = deg_hi;
    out.exact_strata = adams_bound ? true : exact;
    out.stratum_kind = adams_bound ? "adams" : "length";

    if (out.exact_strata) {
        int shift = adams_bound ? 0 : 1;  // length strata shift by one under d
        std::map<std::pair<int, int>, int> ranks;
        for (const auto& [key, blk] : blocks) {
            auto dst = blocks.find({key.first + 1, key.second + shift});
            ranks[key] = dst == blocks.end() ? block_rank(blk, Block{})
                                             : block_rank(blk, dst->second);
        }
        for (const auto& [key, blk] : blocks) {
            if (key.first < deg_lo || key.first > deg_hi) continue;
            int rk_out = ranks.count(key) ? ranks[key] : 0;
            int rk_in = 0;
            auto prev = blocks.find({key.first - 1, key.second - shift});
            if (prev != blocks.end()) rk_in = ranks[{key.first - 1, key.second - shift}];
            int betti = static_cast<int>(blk.ids.size()) - rk_out - rk_in;
            out.strata[key] = betti;
            out.totals[key.first] += betti;
        }
    } else {
        std::map<int, int> ranks;
        for (const auto& [d, blk] : deg_blocks) {
            auto dst = deg_blocks.find(d + 1);
            ranks[d] = dst == deg_blocks.end() ? block_rank(blk, Block{}) : block_rank(blk, dst->second);
        }
        for (const auto& [d, blk] : deg_blocks) {
            if (d < deg_lo || d > deg_hi) continue;
            int rk_in = ranks.count(d - 1) ? ranks[d - 1] : 0;
            out.totals[d] = static_cast<int>(blk.ids.size()) - ranks[d] - rk_in;
        }
    }
    return out;
}

}  // namespace

BettiTable truncated_cohomology(const DgaPresentation& pres, int max_len, int deg_lo, int deg_hi) {
    const GenSet& gs = pres.gens();
    for (int g = 0; g < gs.size(); ++g)
        for (const auto& [w, c] : pres.diff(g).terms())
            if (w.length() < 1)
                throw error("truncated_cohomology: length-decreasing differential at " + gs[g].name);
    return cohomology_core(pres, max_len, std::nullopt, deg_lo, deg_hi);
}

BettiTable bigraded_cohomology(const DgaPresentation& pres, int adams_bound, int deg_lo, int deg_hi) {
    return cohomology_core(pres, 0, adams_bound, deg_lo, deg_hi);
}

std::optional<NCPoly> solve_primitive(const DgaPresentation& pres, const NCPoly& elt, int bound) {
    if (elt.is_zero()) return NCPoly(pres.field());
    const GenSet& gs = pres.gens();
    Field f = pres.field();
    auto hd = elt.homogeneous_deg(gs);
    if (!hd) throw error("solve_primitive: element is not homogeneous");
    int src = elt.terms().begin()->first.src(gs);
    int tgt = elt.terms().begin()->first.tgt(gs);
    if (!elt.endpoints_are(gs, src, tgt)) throw error("solve_primitive: mixed endpoints");
    // candidate words of degree deg-1 with the same endpoints
    std::vector<Word> cands;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int len) {
        if (!cur.empty()) {
            Word w;
            w.factors = cur;
            if (w.deg(gs) == *hd - 1 && w.src(gs) == src && w.tgt(gs) == tgt) cands.push_back(w);
        }
        if (len >= bound) return;
        for (int g = 0; g < gs.size(); ++g) {
            if (!cur.empty() && gs[cur.back()].src != gs[g].tgt) continue;
            if (!cur.empty() && gs[g].tgt != gs[cur.front()].tgt && true) {
                // keep only words whose target already matches
            }
            cur.push_back(g);
            rec(len + 1);
            cur.pop_back();
        }
    };
    rec(0);
    // columns of the linear system: target words
    std::map<Word, int> col;
    std::vector<std::map<int, Scalar>> rows;
    for (const auto& w : cands) {
        NCPoly dw = pres.d(NCPoly(f).added(w, Scalar::one(f)));
        std::map<int, Scalar> row;
        for (const auto& [t, c] : dw.terms()) {
            auto [it, fresh] = col.try_emplace(t, static_cast<int>(col.size()));
            row[it->second] = c;
        }
        rows.push_back(std::move(row));
    }
    std::map<int, Scalar> rhs;
    for (const auto& [t, c] : elt.terms()) {
        auto it = col.find(t);
        if (it == col.end()) return std::nullopt;  // unreachable target word
        rhs[it->second] = c;
    }
    int nc = static_cast<int>(col.size());
    int nr = static_cast<int>(rows.size());
    std::vector<std::vector<Scalar>> M(static_cast<size_t>(nc),
                                       std::vector<Scalar>(static_cast<size_t>(nr) + 1, Scalar::zero(f)));
    for (int r = 0; r < nr; ++r)
        for (const auto& [c, v] : rows[static_cast<size_t>(r)]) M[static_cast<size_t>(c)][static_cast<size_t>(r)] = v;
    for (const auto& [c, v] : rhs) M[static_cast<size_t>(c)][static_cast<size_t>(nr)] = v;
    std::vector<int> pivots;
    int rank = 0;
    for (int c2 = 0; c2 < nr && rank < nc; ++c2) {
        int piv = -1;
        for (int r = rank; r < nc; ++r)
            if (!M[static_cast<size_t>(r)][static_cast<size_t>(c2)].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(M[static_cast<size_t>(piv)], M[static_cast<size_t>(rank)]);
        Scalar inv = M[static_cast<size_t>(rank)][static_cast<size_t>(c2)].inverse();
        for (int k = 0; k <= nr; ++k) M[static_cast<size_t>(rank)][static_cast<size_t>(k)] *= inv;
        for (int r = 0; r < nc; ++r) {
            if (r == rank) continue;
            Scalar m = M[static_cast<size_t>(r)][static_cast<size_t>(c2)];
            if (m.is_zero()) continue;
            for (int k = 0; k <= nr; ++k)
                M[static_cast<size_t>(r)][static_cast<size_t>(k)] =
                    M[static_cast<size_t>(r)][static_cast<size_t>(k)] - m * M[static_cast<size_t>(rank)][static_cast<size_t>(k)];
        }
        pivots.push_back(c2);
        ++rank;
    }
    for (int r = rank; r < nc; ++r)
        if (!M[static_cast<size_t>(r)][static_cast<size_t>(nr)].is_zero()) return std::nullopt;
    NCPoly x(f);
    for (int r = 0; r < rank; ++r) {
        Scalar v = M[static_cast<size_t>(r)][static_cast<size_t>(nr)];
        if (!v.is_zero()) x.add_term(cands[static_cast<size_t>(pivots[static_cast<size_t>(r)])], v);
    }
    return x;
}

std::vector<H0Certificate> h0_relations_check(const DgaPresentation& pres,
                                              const std::vector<NCPoly>& elements, int bound) {
    const GenSet& gs = pres.gens();
    Field f = pres.field();
    for (const auto& e : elements) {
        auto hd = e.homogeneous_deg(gs);
        if (!hd || *hd != 0) throw error("h0_relations_check: element is not of degree 0");
        if (!pres.d(e).is_zero()) throw error("h0_relations_check: element is not closed");
    }
    // candidate primitives: degree -1 words of length <= bound
    WordBasis all = enumerate_words(gs, bound + 2, std::nullopt);
    std::vector<int> srcs;
    std::map<int, int> col;  // target word -> column
    std::vector<Word> targets;
    auto target_col = [&](const Word& w) {
        auto it = all.index.find(w);
        if (it == all.index.end()) {
            all.add(w);
            it = all.index.find(w);
        }
        auto ct = col.find(it->second);
        if (ct != col.end()) return ct->second;
        int c = static_cast<int>(targets.size());
        col[it->second] = c;
        targets.push_back(w);
        return c;
    };
    std::vector<std::map<int, Scalar>> rows;  // one per candidate primitive
    std::vector<Word> cands;
    for (const auto& w : all.words) {
        if (static_cast<int>(w.length()) > bound || w.deg(gs) != -1) continue;
        NCPoly dw = pres.d(NCPoly(f).added(w, Scalar::one(f)));
        std::map<int, Scalar> row;
        for (const auto& [t, c] : dw.terms()) row[target_col(t)] = c;
        rows.push_back(std::move(row));
        cands.push_back(w);
    }
    std::vector<H0Certificate> out;
    for (const auto& e : elements) {
        std::map<int, Scalar> rhs;
        for (const auto& [t, c] : e.terms()) rhs[target_col(t)] = c;
        // solve sum_i x_i rows_i = rhs by dense elimination over candidates
        int nc = static_cast<int>(targets.size());
        int nr = static_cast<int>(rows.size());
        std::vector<std::vector<Scalar>> M(static_cast<size_t>(nc),
                                           std::vector<Scalar>(static_cast<size_t>(nr) + 1, Scalar::zero(f)));
        for (int r = 0; r < nr; ++r)
            for (const auto& [c, v] : rows[static_cast<size_t>(r)]) M[static_cast<size_t>(c)][static_cast<size_t>(r)] = v;
        for (const auto& [c, v] : rhs) M[static_cast<size_t>(c)][static_cast<size_t>(nr)] = v;
        // eliminate
        std::vector<int> pivots;
        int rank = 0;
        for (int c2 = 0; c2 < nr && rank < nc; ++c2) {
            int piv = -1;
            for (int r = rank; r < nc; ++r)
                if (!M[static_cast<size_t>(r)][static_cast<size_t>(c2)].is_zero()) {
                    piv = r;
                    break;
                }
            if (piv < 0) continue;
            std::swap(M[static_cast<size_t>(piv)], M[static_cast<size_t>(rank)]);
            Scalar inv = M[static_cast<size_t>(rank)][static_cast<size_t>(c2)].inverse();
            for (int k = 0; k <= nr; ++k) M[static_cast<size_t>(rank)][static_cast<size_t>(k)] *= inv;
            for (int r = 0; r < nc; ++r) {
                if (r == rank) continue;
                Scalar m = M[static_cast<size_t>(r)][static_cast<size_t>(c2)];
                if (m.is_zero()) continue;
                for (int k = 0; k <= nr; ++k)
                    M[static_cast<size_t>(r)][static_cast<size_t>(k)] =
                        M[static_cast<size_t>(r)][static_cast<size_t>(k)] - m * M[static_cast<size_t>(rank)][static_cast<size_t>(k)];
            }
            pivots.push_back(c2);
            ++rank;
        }
        // consistency: any row with zero coefficients but nonzero rhs?
        bool ok = true;
        for (int r = rank; r < nc; ++r)
            if (!M[static_cast<size_t>(r)][static_cast<size_t>(nr)].is_zero()) ok = false;
        H0Certificate cert{e, std::nullopt};
        if (ok) {
            NCPoly x(f);
            for (int r = 0; r < rank; ++r) {
                Scalar v = M[static_cast<size_t>(r)][static_cast<size_t>(nr)];
                if (!v.is_zero()) x.add_term(cands[static_cast<size_t>(pivots[static_cast<size_t>(r)])], v);
            }
            cert.primitive = x;
        }
        out.push_back(std::move(cert));
    }
    return out;
}

namespace {

std::string xi_name(const std::string& base) { return "~" + base; }

// shared assembly: generators are duals of the listed basis "cells"
// (either algebra basis elements or dga words), differential from the
// arity-1 and arity-2 coefficient tables
struct DualGen {
    std::string name;
    int deg, adams, src, tgt;
};

}  // namespace

BarDual bar_dual(const AinfAlgebra& A, int adams_bound, int length_bound) {
    // the projection killing non-units must be an algebra map: products of
    // augmentation-ideal elements may not have unit components
    for (const auto& [key, val] : A.ops) {
        bool unit_in = false;
        for (int x : key)
            if (A.basis[static_cast<size_t>(x)].is_unit) unit_in = true;
        if (unit_in) continue;
        for (const auto& [b, c] : val)
            if (A.basis[static_cast<size_t>(b)].is_unit)
                throw error("bar_dual: input is not augmented (unit component in a product of "
                            "augmentation-ideal elements)");
    }
    Field f = A.field;
    GenSet gs(A.base);
    std::vector<int> dual_id(A.basis.size(), -1);
    for (int b = 0; b < static_cast<int>(A.basis.size()); ++b) {
        const auto& e = A.basis[static_cast<size_t>(b)];
        if (e.is_unit) continue;
        dual_id[static_cast<size_t>(b)] =
            gs.add(xi_name(e.name), e.src, e.tgt, 1 - e.deg, -e.adams);
    }
    DgaPresentation pres(gs, f);
    std::vector<NCPoly> diffs(static_cast<size_t>(gs.size()), NCPoly(f));
    for (const auto& [key, val] : A.ops) {
        int k = static_cast<int>(key.size());
        if (k > length_bound && length_bound > 0) continue;
        bool unit_in = false;
        for (int x : key)
            if (A.basis[static_cast<size_t>(x)].is_unit) unit_in = true;
        if (unit_in) continue;  // reduced bar construction
        // suspension sign of the operation, matching the Stasheff checker
        int expo = 0;
        if (k == 1) {
            expo = A.basis[static_cast<size_t>(key[0])].deg;
        } else {
            for (int t = 1; t <= k; ++t)
                expo += (k - t) * (A.basis[static_cast<size_t>(key[static_cast<size_t>(k - t)])].deg - 1);
        }
        Word w;
        for (int x : key) w.factors.push_back(dual_id[static_cast<size_t>(x)]);
        for (const auto& [b, c] : val) {
            if (A.basis[static_cast<size_t>(b)].is_unit) continue;
            Scalar v = (expo % 2 != 0) ? -c : c;
            diffs[static_cast<size_t>(dual_id[static_cast<size_t>(b)])].add_term(w, v);
        }
    }
    for (int g = 0; g < gs.size(); ++g) pres.set_diff(g, diffs[static_cast<size_t>(g)]);
    auto bad = pres.check_degrees();
    if (!bad.empty()) throw error("bar_dual: inconsistent degrees at " + gs[bad[0]].name);
    return BarDual{std::move(pres), adams_bound};
}

BarDual bar_dual_of_dga(const DgaPresentation& in, int adams_bound) {
    const GenSet& gs = in.gens();
    Field f = in.field();
    WordBasis wb = enumerate_words(gs, 0, adams_bound);
    GenSet ng(gs.base());
    std::map<Word, int> dual_id;
    for (const auto& w : wb.words) {
        if (w.is_idem()) continue;
        std::string nm = "~[";
        for (size_t i = 0; i < w.factors.size(); ++i) {
            if (i) nm += ' ';
            nm += gs[w.factors[i]].name;
        }
        nm += "]";
        dual_id[w] = ng.add(nm, w.src(gs), w.tgt(gs), 1 - w.deg(gs), -w.adams(gs).value_or(0));
    }
    DgaPresentation pres(ng, f);
    std::vector<NCPoly> diffs(static_cast<size_t>(ng.size()), NCPoly(f));
    // arity 1: the dual of the inner differential
    for (const auto& [w, wid] : dual_id) {
        NCPoly dw = in.d(NCPoly(f).added(w, Scalar::one(f)));
        for (const auto& [t, c] : dw.terms()) {
            auto it = dual_id.find(t);
            if (it == dual_id.end()) continue;  // outside the Adams window
            diffs[static_cast<size_t>(it->second)].add_term(Word::gen(wid), c);
        }
    }
    // arity 2: duals of the concatenation products w = w2 * w1
    for (const auto& [w, wid] : dual_id) {
        if (w.length() < 2) continue;
        for (size_t cut = 1; cut < w.factors.size(); ++cut) {
            Word w2{std::vector<int>(w.factors.begin(), w.factors.begin() + static_cast<long>(cut)), -1};
            Word w1{std::vector<int>(w.factors.begin() + static_cast<long>(cut), w.factors.end()), -1};
            auto i2 = dual_id.find(w2);
            auto i1 = dual_id.find(w1);
            if (i2 == dual_id.end() || i1 == dual_id.end())
                throw error("bar_dual_of_dga: factor outside the Adams window");
            // cobar sign: (-1)^{|left factor|}
            int expo = w2.deg(gs);
            Scalar v = (expo % 2 != 0) ? -Scalar::one(f) : Scalar::one(f);
            Word prod{{i2->second, i1->second}, -1};
            diffs[static_cast<size_t>(wid)].add_term(prod, v);
        }
    }
    for (int g = 0; g < ng.size(); ++g) pres.set_diff(g, diffs[static_cast<size_t>(g)]);
    return BarDual{std::move(pres), adams_bound};
}

DoubleDualReport double_dual_check(const AinfAlgebra& A, int adams_bound, int deg_lo, int deg_hi) {
    BarDual E1 = bar_dual(A, adams_bound, 8);
    BarDual E2 = bar_dual_of_dga(E1.pres, adams_bound);
    BettiTable betti = bigraded_cohomology(E2.pres, adams_bound, deg_lo, deg_hi);
    // the reference table: dimensions of A per (deg, |adams|)
    std::map<std::pair<int, int>, int> want;
    for (const auto& b : A.basis) {
        if (b.deg < deg_lo || b.deg > deg_hi) continue;
        if (std::abs(b.adams) > adams_bound) continue;
        want[{b.deg, std::abs(b.adams)}]++;
    }
    DoubleDualReport rep;
    rep.match = true;
    std::ostringstream os;
    std::map<std::pair<int, int>, int> got;
    for (const auto& [k, v] : betti.strata)
        if (v != 0) got[k] = v;
    for (auto* side : {&want, &got}) {
        for (const auto& [k, v] : *side) {
            int a = want.count(k) ? want[k] : 0;
            int b = got.count(k) ? got[k] : 0;
            if (a != b) {
                rep.match = false;
                os << "(" << k.first << "," << k.second << "): expected " << a << " got " << b << "; ";
            }
        }
    }
    rep.detail = os.str();
    return rep;
}

}  // namespace dgaw
