#include "dgaw/ainf.h"

#include <algorithm>
#include <functional>
#include <set>

#include <nlohmann/json.hpp>

namespace dgaw {

int AinfAlgebra::index(const std::string& name) const {
    for (size_t i = 0; i < basis.size(); ++i)
        if (basis[i].name == name) return static_cast<int>(i);
    return -1;
}

int AinfAlgebra::unit_at(int vertex) const {
    for (size_t i = 0; i < basis.size(); ++i)
        if (basis[i].is_unit && basis[i].src == vertex) return static_cast<int>(i);
    throw error("ainf: missing unit idempotent");
}

LinComb AinfAlgebra::mu(const std::vector<int>& inputs) const {
    auto it = ops.find(inputs);
    return it == ops.end() ? LinComb{} : it->second;
}

LinComb AinfAlgebra::mu_lin(const std::vector<LinComb>& inputs) const {
    // expand multilinearly over the sparse tables
    LinComb out;
    std::vector<int> tuple(inputs.size(), 0);
    std::function<void(size_t, Scalar)> rec = [&](size_t slot, Scalar coeff) {
        if (slot == inputs.size()) {
            for (const auto& [b, c] : mu(tuple)) {
                auto [it, fresh] = out.try_emplace(b, Scalar::zero(field));
                it->second += c * coeff;
                if (it->second.is_zero()) out.erase(it);
            }
            return;
        }
        for (const auto& [b, c] : inputs[slot]) {
            tuple[slot] = b;
            rec(slot + 1, coeff * c);
        }
    };
    rec(0, Scalar::one(field));
    return out;
}

void AinfAlgebra::add_op(std::vector<int> inputs, int out, const Scalar& c) {
    if (c.is_zero()) return;
    auto& lc = ops[std::move(inputs)];
    auto [it, fresh] = lc.try_emplace(out, Scalar::zero(field));
    it->second += c;
    if (it->second.is_zero()) lc.erase(it);
}

void AinfAlgebra::install_units() {
    Scalar one = Scalar::one(field);
    for (int e = 0; e < static_cast<int>(basis.size()); ++e) {
        if (!basis[static_cast<size_t>(e)].is_unit) continue;
        int v = basis[static_cast<size_t>(e)].src;
        for (int x = 0; x < static_cast<int>(basis.size()); ++x) {
            if (basis[static_cast<size_t>(x)].is_unit && x != e) continue;
            if (basis[static_cast<size_t>(x)].src == v && !(x == e)) add_op({x, e}, x, one);
            if (basis[static_cast<size_t>(x)].tgt == v && !(x == e)) add_op({e, x}, x, one);
        }
        add_op({e, e}, e, one);
    }
    // clean empty entries
    for (auto it = ops.begin(); it != ops.end();)
        it = it->second.empty() ? ops.erase(it) : std::next(it);
}

Scalar PairingForm::at(const AinfAlgebra& A, int i, int j) const { return at(A.field, i, j); }

Scalar PairingForm::at(Field f, int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? Scalar::zero(f) : it->second;
}

bool PairingForm::nondegenerate(const AinfAlgebra& A) const {
    int n = static_cast<int>(A.basis.size());
    std::vector<std::vector<Scalar>> M(static_cast<size_t>(n),
                                       std::vector<Scalar>(static_cast<size_t>(n), Scalar::zero(A.field)));
    for (const auto& [ij, c] : entries) M[static_cast<size_t>(ij.first)][static_cast<size_t>(ij.second)] = c;
    // rank by Gaussian elimination
    int rank = 0;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int row = rank; row < n; ++row)
            if (!M[static_cast<size_t>(row)][static_cast<size_t>(col)].is_zero()) {
                piv = row;
                break;
            }
        if (piv < 0) continue;
        std::swap(M[static_cast<size_t>(piv)], M[static_cast<size_t>(rank)]);
        Scalar d = M[static_cast<size_t>(rank)][static_cast<size_t>(col)].inverse();
        for (int k = 0; k < n; ++k) M[static_cast<size_t>(rank)][static_cast<size_t>(k)] *= d;
        for (int row = 0; row < n; ++row) {
            if (row == rank) continue;
            Scalar m = M[static_cast<size_t>(row)][static_cast<size_t>(col)];
            if (m.is_zero()) continue;
            for (int k = 0; k < n; ++k)
                M[static_cast<size_t>(row)][static_cast<size_t>(k)] =
                    M[static_cast<size_t>(row)][static_cast<size_t>(k)] - m * M[static_cast<size_t>(rank)][static_cast<size_t>(k)];
        }
        ++rank;
    }
    return rank == n;
}

std::pair<AinfAlgebra, PairingForm> cyclic_from_potential(const Quiver& q, const Potential& w,
                                                          Field f) {
    if (!potential_is_reduced(w)) throw error("cyclic_from_potential: potential is not reduced");
    DgaPresentation G = ginzburg(q, w, f);
    const GenSet& gs = G.gens();
    int n_arrows = static_cast<int>(q.arrows.size());
    int n_verts = static_cast<int>(q.vertices.size());

    AinfAlgebra B;
    B.base = BaseRing{q.vertices};
    B.field = f;
    B.max_arity = 2;
    // basis: units e_v, arrow duals (deg 1), reversed duals (deg 2),
    // vertex duals (deg 3); Adams grading = total grading
    for (int v = 0; v < n_verts; ++v)
        B.basis.push_back(AinfBasisEl{"e" + q.vertices[static_cast<size_t>(v)], 0, 0, v, v, true});
    for (int a = 0; a < n_arrows; ++a) {
        const GenInfo& gi = gs[a];
        B.basis.push_back(AinfBasisEl{gi.name + "^", 1, 1, gi.src, gi.tgt, false});
    }
    for (int a = 0; a < n_arrows; ++a) {
        const GenInfo& gi = gs[n_arrows + a];
        B.basis.push_back(AinfBasisEl{gi.name + "^", 2, 2, gi.src, gi.tgt, false});
    }
    for (int v = 0; v < n_verts; ++v) {
        const GenInfo& gi = gs[2 * n_arrows + v];
        B.basis.push_back(AinfBasisEl{gi.name + "^", 3, 3, gi.src, gi.tgt, false});
    }
    auto dual_of = [&](int ginzburg_gen) { return n_verts + ginzburg_gen; };

    // mu^k(g_k^, ..., g_1^) = (-1)^{(k-1)|g_k^|+...+|g_2^|} sum_g
    // Coeff_{g_k...g_1}(dg) g^; cubic potentials stop at k = 2
    for (int g = 0; g < gs.size(); ++g) {
        for (const auto& [word, c] : G.diff(g).terms()) {
            int k = static_cast<int>(word.length());
            if (k < 1) continue;
            std::vector<int> inputs;
            for (int x : word.factors) inputs.push_back(dual_of(x));
            int expo = 0;
            for (int t = 2; t <= k; ++t)
                expo += (t - 1) * B.basis[static_cast<size_t>(inputs[static_cast<size_t>(k - t)])].deg;
            Scalar coeff = (expo % 2 != 0) ? -c : c;
            B.add_op(std::move(inputs), dual_of(g), coeff);
            B.max_arity = std::max(B.max_arity, k);
        }
    }
    B.install_units();

    // pairing <.,.>_B dual to (a, a*) = 1 = -(a*, a), twisted by
    // (-1)^{|g_1^|}; the unit/loop block is +1 and the arrow/dual block
    // -1, the unique choice (up to a global sign) cyclic for mu_B
    PairingForm P;
    Scalar one = Scalar::one(f);
    for (int a = 0; a < n_arrows; ++a) {
        P.entries[{dual_of(a), dual_of(n_arrows + a)}] = -one;
        P.entries[{dual_of(n_arrows + a), dual_of(a)}] = -one;
    }
    for (int v = 0; v < n_verts; ++v) {
        P.entries[{v, dual_of(2 * n_arrows + v)}] = one;
        P.entries[{dual_of(2 * n_arrows + v), v}] = one;
    }
    return {std::move(B), std::move(P)};
}

// ---- quadratic quotient algebra ----

namespace {

struct PathBasis {
    // paths in print order (first applied last); index 0..n-1; the empty
    // paths are the idempotents, listed first
    std::vector<std::vector<int>> paths;  // arrow ids; empty => idempotent
    std::vector<int> path_vertex;         // vertex for idempotents, -1 otherwise
    std::map<std::vector<int>, int> index;

    int find(const std::vector<int>& p) const {
        auto it = index.find(p);
        return it == index.end() ? -1 : it->second;
    }
};

}  // namespace

AssocAlgebra quadratic_quotient_algebra(const QuadraticPresentation& pres, int grading) {
    const Quiver& Q = pres.quiver;
    Field f = pres.field;
    int nv = static_cast<int>(Q.vertices.size());
    auto vid = [&](const std::string& v) {
        for (int i = 0; i < nv; ++i)
            if (Q.vertices[static_cast<size_t>(i)] == v) return i;
        throw error("quotient: unknown vertex");
    };
    // acyclicity via DFS over arrows
    {
        std::vector<std::vector<int>> adj(static_cast<size_t>(nv));
        for (const auto& a : Q.arrows) adj[static_cast<size_t>(vid(a.src))].push_back(vid(a.tgt));
        std::vector<int> state(static_cast<size_t>(nv), 0);
        std::function<void(int)> dfs = [&](int v) {
            state[static_cast<size_t>(v)] = 1;
            for (int w : adj[static_cast<size_t>(v)]) {
                if (state[static_cast<size_t>(w)] == 1) throw error("quotient: quiver has a directed cycle");
                if (!state[static_cast<size_t>(w)]) dfs(w);
            }
            state[static_cast<size_t>(v)] = 2;
        };
        for (int v = 0; v < nv; ++v)
            if (!state[static_cast<size_t>(v)]) dfs(v);
    }
    // all paths by BFS on length
    PathBasis pb;
    for (int v = 0; v < nv; ++v) {
        pb.index[{}];  // placeholder to keep map usable; idempotents handled via path_vertex
    }
    pb.index.clear();
    for (int v = 0; v < nv; ++v) {
        pb.paths.push_back({});
        pb.path_vertex.push_back(v);
    }
    std::vector<std::vector<int>> frontier;
    for (int a = 0; a < static_cast<int>(Q.arrows.size()); ++a) frontier.push_back({a});
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (auto& p : frontier) {
            pb.index[p] = static_cast<int>(pb.paths.size());
            pb.paths.push_back(p);
            pb.path_vertex.push_back(-1);
            for (int a = 0; a < static_cast<int>(Q.arrows.size()); ++a) {
                // extend on the left: a applied after p
                if (Q.arrows[static_cast<size_t>(a)].src == Q.arrows[static_cast<size_t>(p.front())].tgt) {
                    std::vector<int> np = {a};
                    np.insert(np.end(), p.begin(), p.end());
                    next.push_back(std::move(np));
                }
            }
        }
        frontier = std::move(next);
    }
    int N = static_cast<int>(pb.paths.size());
    auto path_src = [&](int i) {
        return pb.path_vertex[static_cast<size_t>(i)] >= 0
                   ? pb.path_vertex[static_cast<size_t>(i)]
                   : vid(Q.arrows[static_cast<size_t>(pb.paths[static_cast<size_t>(i)].back())].src);
    };
    auto path_tgt = [&](int i) {
        return pb.path_vertex[static_cast<size_t>(i)] >= 0
                   ? pb.path_vertex[static_cast<size_t>(i)]
                   : vid(Q.arrows[static_cast<size_t>(pb.paths[static_cast<size_t>(i)].front())].tgt);
    };

    // two-sided ideal span: u * rho * v over all composable path pairs
    std::vector<std::map<int, Scalar>> ideal_rows;
    for (const auto& rel : pres.relations) {
        std::vector<std::pair<Scalar, std::vector<int>>> rho;
        for (const auto& [c, pairw] : rel.terms) {
            int hi = Q.arrow_index(pairw[0]);
            int lo = Q.arrow_index(pairw[1]);
            rho.push_back({c, {hi, lo}});
        }
        int rs = vid(Q.arrows[static_cast<size_t>(rho[0].second[1])].src);
        int rt = vid(Q.arrows[static_cast<size_t>(rho[0].second[0])].tgt);
        for (int u = 0; u < N; ++u) {
            if (path_src(u) != rt) continue;
            for (int v = 0; v < N; ++v) {
                if (path_tgt(v) != rs) continue;
                std::map<int, Scalar> row;
                for (const auto& [c, mid] : rho) {
                    std::vector<int> word = pb.paths[static_cast<size_t>(u)];
                    word.insert(word.end(), mid.begin(), mid.end());
                    word.insert(word.end(), pb.paths[static_cast<size_t>(v)].begin(),
                                pb.paths[static_cast<size_t>(v)].end());
                    int idx = pb.find(word);
                    if (idx < 0) throw error("quotient: path table incomplete");
                    auto [it, fresh] = row.try_emplace(idx, Scalar::zero(f));
                    it->second += c;
                    if (it->second.is_zero()) row.erase(it);
                }
                if (!row.empty()) ideal_rows.push_back(std::move(row));
            }
        }
    }
    // row echelon form over the path coordinates, pivot = largest index
    // (so longer paths reduce to shorter ones)
    std::map<int, std::map<int, Scalar>> rref;  // pivot -> row
    auto reduce = [&](std::map<int, Scalar> row) {
        while (!row.empty()) {
            int piv = row.rbegin()->first;
            auto it = rref.find(piv);
            if (it == rref.end()) return row;
            Scalar c = row.rbegin()->second * it->second.rbegin()->second.inverse();
            for (const auto& [k, v] : it->second) {
                auto [jt, fresh] = row.try_emplace(k, Scalar::zero(f));
                jt->second = jt->second - c * v;
                if (jt->second.is_zero()) row.erase(jt);
            }
        }
        return row;
    };
    for (auto& r : ideal_rows) {
        auto red = reduce(std::move(r));
        if (!red.empty()) rref[red.rbegin()->first] = std::move(red);
    }
    auto normal_form = [&](std::map<int, Scalar> vec) {
        // eliminate pivot coordinates
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto it = vec.rbegin(); it != vec.rend(); ++it) {
                auto rt = rref.find(it->first);
                if (rt == rref.end()) continue;
                Scalar c = it->second * rt->second.rbegin()->second.inverse();
                for (const auto& [k, v] : rt->second) {
                    auto [jt, fresh] = vec.try_emplace(k, Scalar::zero(f));
                    jt->second = jt->second - c * v;
                    if (jt->second.is_zero()) vec.erase(jt);
                }
                changed = true;
                break;
            }
        }
        return vec;
    };

    // quotient basis: non-pivot paths
    AssocAlgebra A;
    A.base = BaseRing{Q.vertices};
    A.field = f;
    std::vector<int> path2basis(static_cast<size_t>(N), -1);
    for (int i = 0; i < N; ++i) {
        if (rref.count(i)) continue;
        int deg = grading == 0 ? 0 : static_cast<int>(pb.paths[static_cast<size_t>(i)].size());
        std::string name;
        if (pb.path_vertex[static_cast<size_t>(i)] >= 0) {
            name = "e" + Q.vertices[static_cast<size_t>(pb.path_vertex[static_cast<size_t>(i)])];
        } else {
            for (int a : pb.paths[static_cast<size_t>(i)]) {
                if (!name.empty()) name += ".";
                name += Q.arrows[static_cast<size_t>(a)].id;
            }
        }
        path2basis[static_cast<size_t>(i)] = static_cast<int>(A.basis.size());
        A.basis.push_back(AinfBasisEl{name, deg, 0, path_src(i), path_tgt(i),
                                      pb.path_vertex[static_cast<size_t>(i)] >= 0});
    }
    // structure constants: concatenate then reduce to normal form
    for (int i = 0; i < N; ++i) {
        if (path2basis[static_cast<size_t>(i)] < 0) continue;
        for (int j = 0; j < N; ++j) {
            if (path2basis[static_cast<size_t>(j)] < 0) continue;
            // product i * j, j applied first: tgt(j) must equal src(i)
            if (path_tgt(j) != path_src(i)) continue;
            std::vector<int> word;
            if (pb.path_vertex[static_cast<size_t>(i)] < 0)
                word.insert(word.end(), pb.paths[static_cast<size_t>(i)].begin(), pb.paths[static_cast<size_t>(i)].end());
            if (pb.path_vertex[static_cast<size_t>(j)] < 0)
                word.insert(word.end(), pb.paths[static_cast<size_t>(j)].begin(), pb.paths[static_cast<size_t>(j)].end());
            int idx;
            if (word.empty())
                idx = i;  // both idempotents at the same vertex
            else {
                idx = pb.find(word);
                if (idx < 0 && pb.path_vertex[static_cast<size_t>(i)] >= 0) idx = j;
                if (idx < 0 && pb.path_vertex[static_cast<size_t>(j)] >= 0) idx = i;
                if (idx < 0) throw error("quotient: missing concatenated path");
            }
            std::map<int, Scalar> vec{{idx, Scalar::one(f)}};
            vec = normal_form(std::move(vec));
            LinComb out;
            for (const auto& [k, c] : vec) {
                if (path2basis[static_cast<size_t>(k)] < 0) throw error("quotient: normal form hit a pivot path");
                out[path2basis[static_cast<size_t>(k)]] = c;
            }
            if (!out.empty()) A.mult[{path2basis[static_cast<size_t>(i)], path2basis[static_cast<size_t>(j)]}] = out;
        }
    }
    if (!A.is_associative()) throw error("quotient: product is not associative");
    return A;
}

bool AssocAlgebra::is_associative() const {
    int n = static_cast<int>(basis.size());
    auto prod = [&](int i, int j) -> LinComb {
        auto it = mult.find({i, j});
        return it == mult.end() ? LinComb{} : it->second;
    };
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                LinComb lhs, rhs;
                for (const auto& [m, c] : prod(x, y))
                    for (const auto& [o, d] : prod(m, z)) {
                        auto [it, fresh] = lhs.try_emplace(o, Scalar::zero(field));
                        it->second += c * d;
                        if (it->second.is_zero()) lhs.erase(it);
                    }
                for (const auto& [m, c] : prod(y, z))
                    for (const auto& [o, d] : prod(x, m)) {
                        auto [it, fresh] = rhs.try_emplace(o, Scalar::zero(field));
                        it->second += c * d;
                        if (it->second.is_zero()) rhs.erase(it);
                    }
                if (lhs != rhs) return false;
            }
    return true;
}

int AssocAlgebra::unit_at(int vertex) const {
    for (size_t i = 0; i < basis.size(); ++i)
        if (basis[i].is_unit && basis[i].src == vertex) return static_cast<int>(i);
    throw error("assoc: missing unit idempotent");
}

AinfAlgebra trivial_extension(const AssocAlgebra& A, int n) {
    for (const auto& b : A.basis)
        if (b.is_unit && b.src != b.tgt) throw error("trivial_extension: bad unit");
    AinfAlgebra B;
    B.base = A.base;
    B.field = A.field;
    B.max_arity = 2;
    int na = static_cast<int>(A.basis.size());
    for (const auto& b : A.basis) B.basis.push_back(AinfBasisEl{b.name, b.deg, b.deg, b.src, b.tgt, b.is_unit});
    for (const auto& b : A.basis)
        B.basis.push_back(AinfBasisEl{b.name + "^v", n - b.deg, n - b.deg, b.tgt, b.src, false});
    Scalar one = Scalar::one(A.field);
    auto prod = [&](int i, int j) -> LinComb {
        auto it = A.mult.find({i, j});
        return it == A.mult.end() ? LinComb{} : it->second;
    };
    // (a,0)(b,0) = (ab, 0)
    for (const auto& [ij, out] : A.mult) {
        for (const auto& [o, c] : out) B.add_op({ij.first, ij.second}, o, c);
    }
    // a . phi_b = sum_x (-1)^{|a|(|phi_b|+|x|)} Coeff_b(x a) phi_x
    // phi_b . a = sum_x Coeff_b(a x) phi_x
    for (int a = 0; a < na; ++a)
        for (int b = 0; b < na; ++b) {
            int phib = na + b;
            for (int x = 0; x < na; ++x) {
                auto lc1 = prod(x, a);
                auto it1 = lc1.find(b);
                if (it1 != lc1.end()) {
                    int expo = A.basis[static_cast<size_t>(a)].deg *
                               ((n - A.basis[static_cast<size_t>(b)].deg) + A.basis[static_cast<size_t>(x)].deg);
                    Scalar c = (expo % 2 != 0) ? -it1->second : it1->second;
                    B.add_op({a, phib}, na + x, c);
                }
                auto lc2 = prod(a, x);
                auto it2 = lc2.find(b);
                if (it2 != lc2.end()) B.add_op({phib, a}, na + x, it2->second);
            }
        }
    return B;
}

PairingForm trivial_extension_pairing(const AinfAlgebra& B) {
    PairingForm P;
    int n2 = static_cast<int>(B.basis.size());
    int na = n2 / 2;
    Scalar one = Scalar::one(B.field);
    for (int a = 0; a < na; ++a) {
        P.entries[{a, na + a}] = one;  // <(a,0),(0,a^v)> = a^v(a) = 1
        P.entries[{na + a, a}] = one;
    }
    return P;
}

std::vector<std::string> check_ainf_relations(const AinfAlgebra& A, int max_arity) {
    std::vector<std::string> violations;
    int n = static_cast<int>(A.basis.size());
    Scalar one = Scalar::one(A.field);
    auto red = [&](int b) { return A.basis[static_cast<size_t>(b)].deg - 1; };
    // twisted operations per the fixed suspension dictionary: mu~^1(a) =
    // (-1)^{|a|} mu^1(a), mu~^2(a2,a1) = (-1)^{|a1|-1} mu^2(a2,a1);
    // higher arities carry (-1)^{sum (k-t)||a_t||} (only mu^1, mu^2 are
    // nonzero for the catalog algebras)
    auto twisted_mu = [&](const std::vector<int>& inputs) -> LinComb {
        LinComb raw = A.mu(inputs);
        if (raw.empty()) return raw;
        int k = static_cast<int>(inputs.size());
        int expo = 0;
        if (k == 1)
            expo = A.basis[static_cast<size_t>(inputs[0])].deg;
        else
            for (int t = 1; t <= k; ++t) expo += (k - t) * red(inputs[static_cast<size_t>(k - t)]);
        if (expo % 2 == 0) return raw;
        LinComb out;
        for (const auto& [b, c] : raw) out[b] = -c;
        return out;
    };

    // enumerate only tuples supported on the sparse tables: inputs drawn
    // from stored op keys padded by arbitrary basis elements would blow
    // up; instead iterate all tuples over the union of letters seen in
    // ops plus units, bounded by arity
    std::set<int> letters;
    for (const auto& [k, v] : A.ops) {
        for (int x : k) letters.insert(x);
        for (const auto& [b, c] : v) letters.insert(b);
    }
    for (int b = 0; b < n; ++b)
        if (A.basis[static_cast<size_t>(b)].is_unit) letters.insert(b);
    std::vector<int> alphabet(letters.begin(), letters.end());

    std::vector<int> tuple;
    std::function<void(int)> rec = [&](int k) {
        if (static_cast<int>(tuple.size()) == k) {
            // sum over p, q of (-1)^{||a_1||+...+||a_p||} mu(..., mu(...), ...)
            LinComb total;
            for (int q = 1; q <= k; ++q)
                for (int p = 0; p + q <= k; ++p) {
                    // ops take (g_q, ..., g_1): reverse the ascending slice
                    std::vector<int> inner(tuple.begin() + p, tuple.begin() + p + q);
                    std::reverse(inner.begin(), inner.end());
                    LinComb innr = twisted_mu(inner);
                    if (innr.empty()) continue;
                    int expo = 0;
                    for (int t = 0; t < p; ++t) expo += red(tuple[static_cast<size_t>(t)]);
                    for (const auto& [m, cm] : innr) {
                        std::vector<LinComb> outer;
                        for (int t = 0; t < p; ++t) outer.push_back(LinComb{{tuple[static_cast<size_t>(t)], one}});
                        outer.push_back(LinComb{{m, cm}});
                        for (int t = p + q; t < k; ++t) outer.push_back(LinComb{{tuple[static_cast<size_t>(t)], one}});
                        std::reverse(outer.begin(), outer.end());  // ops take (g_k, ..., g_1)
                        LinComb term = A.mu_lin(outer);
                        // apply the twist of the outer operation
                        int ko = k - q + 1;
                        // twist depends only on degrees; rebuild input degree list
                        std::vector<int> degs;
                        for (int t = 0; t < p; ++t) degs.push_back(A.basis[static_cast<size_t>(tuple[static_cast<size_t>(t)])].deg);
                        int inner_deg = 2 - q;
                        for (int x : inner) inner_deg += A.basis[static_cast<size_t>(x)].deg;
                        degs.push_back(inner_deg);
                        for (int t = p + q; t < k; ++t) degs.push_back(A.basis[static_cast<size_t>(tuple[static_cast<size_t>(t)])].deg);
                        int texpo = 0;
                        if (ko == 1)
                            texpo = degs[0];
                        else
                            for (int t = 1; t <= ko; ++t) texpo += (ko - t) * (degs[static_cast<size_t>(t - 1)] - 1);
                        int sgn = (expo + texpo) % 2;
                        for (const auto& [b, c] : term) {
                            Scalar v = sgn ? -c : c;
                            auto [it, fresh] = total.try_emplace(b, Scalar::zero(A.field));
                            it->second += v;
                            if (it->second.is_zero()) total.erase(it);
                        }
                    }
                }
            if (!total.empty()) {
                std::string s = "arity " + std::to_string(k) + " at (";
                for (size_t t = 0; t < tuple.size(); ++t) {
                    if (t) s += ",";
                    s += A.basis[static_cast<size_t>(tuple[t])].name;
                }
                s += ")";
                violations.push_back(s);
            }
            return;
        }
        for (int x : alphabet) {
            // composable ascending tuples only: src(a_{t+1}) = tgt(a_t)
            if (!tuple.empty() &&
                A.basis[static_cast<size_t>(x)].src != A.basis[static_cast<size_t>(tuple.back())].tgt)
                continue;
            tuple.push_back(x);
            rec(k);
            tuple.pop_back();
        }
    };
    for (int k = 1; k <= max_arity && violations.size() < 16; ++k) {
        // skip arities whose identity is vacuous: every term needs some
        // mu^q and mu^{k-q+1} nonzero with q <= stored arity
        bool any = false;
        for (int q = 1; q <= k && !any; ++q)
            if (q <= A.max_arity && (k - q + 1) <= A.max_arity) any = true;
        if (!any) continue;
        if (static_cast<int>(alphabet.size()) == 0) continue;
        tuple.clear();
        rec(k);
    }
    return violations;
}

bool check_cyclic(const AinfAlgebra& A, const PairingForm& P, int max_arity) {
    if (!P.nondegenerate(A)) throw error("check_cyclic: degenerate pairing");
    int n = static_cast<int>(A.basis.size());
    auto pair_with = [&](const LinComb& lc, int g0) {
        Scalar s = Scalar::zero(A.field);
        for (const auto& [b, c] : lc) s += c * P.at(A, b, g0);
        return s;
    };
    for (int k = 1; k <= max_arity; ++k) {
        // tuples (g_k, ..., g_1; g_0) with either side potentially nonzero
        std::set<std::vector<int>> tuples;
        for (const auto& [key, val] : A.ops) {
            if (static_cast<int>(key.size()) != k) continue;
            for (int g0 = 0; g0 < n; ++g0) {
                std::vector<int> t = key;
                t.push_back(g0);  // (g_k, ..., g_1; g_0)
                tuples.insert(t);
                // tuple whose rotated operation is this op: mu(g_{k-1},...,g_0)
                // = key means the tuple is (g0', key[0..k-2]; key[k-1])
                std::vector<int> pre;
                pre.push_back(g0);
                pre.insert(pre.end(), key.begin(), key.end() - 1);
                pre.push_back(key.back());
                tuples.insert(pre);
            }
        }
        for (const auto& t : tuples) {
            std::vector<int> gk(t.begin(), t.end() - 1);
            int g0 = t.back();
            Scalar lhs = pair_with(A.mu(gk), g0);
            // rotated operation mu^k(g_{k-1}, ..., g_0)
            std::vector<int> rot(gk.begin() + 1, gk.end());
            rot.push_back(g0);
            Scalar rhs = pair_with(A.mu(rot), gk.front());
            int dsum = A.basis[static_cast<size_t>(g0)].deg;
            for (size_t i = 1; i < gk.size(); ++i) dsum += A.basis[static_cast<size_t>(gk[i])].deg;
            int expo = k + A.basis[static_cast<size_t>(gk.front())].deg * dsum;
            if (expo % 2 != 0) rhs = -rhs;
            if (lhs != rhs) return false;
        }
    }
    return true;
}

AinfAlgebra directed_subalgebra(const AinfAlgebra& A, const std::vector<std::string>& ordering) {
    if (ordering.size() != A.base.vertices.size())
        throw error("directed_subalgebra: ordering must permute the vertex labels");
    std::map<std::string, int> pos;
    for (size_t i = 0; i < ordering.size(); ++i) {
        if (pos.count(ordering[i])) throw error("directed_subalgebra: duplicate label");
        pos[ordering[i]] = static_cast<int>(i);
    }
    for (const auto& v : A.base.vertices)
        if (!pos.count(v)) throw error("directed_subalgebra: ordering must permute the vertex labels");
    auto keep = [&](int b) {
        const AinfBasisEl& e = A.basis[static_cast<size_t>(b)];
        if (e.is_unit) return true;
        return pos.at(A.base.vertices[static_cast<size_t>(e.src)]) <
               pos.at(A.base.vertices[static_cast<size_t>(e.tgt)]);
    };
    AinfAlgebra D;
    D.base = A.base;
    D.field = A.field;
    D.max_arity = A.max_arity;
    std::vector<int> old2new(A.basis.size(), -1);
    for (int b = 0; b < static_cast<int>(A.basis.size()); ++b)
        if (keep(b)) {
            old2new[static_cast<size_t>(b)] = static_cast<int>(D.basis.size());
            D.basis.push_back(A.basis[static_cast<size_t>(b)]);
        }
    for (const auto& [key, val] : A.ops) {
        bool ok = true;
        std::vector<int> nk;
        for (int x : key) {
            if (old2new[static_cast<size_t>(x)] < 0) ok = false;
            else nk.push_back(old2new[static_cast<size_t>(x)]);
        }
        if (!ok) continue;
        LinComb out;
        for (const auto& [b, c] : val)
            if (old2new[static_cast<size_t>(b)] >= 0) out[old2new[static_cast<size_t>(b)]] = c;
        if (!out.empty()) D.ops[nk] = out;
    }
    return D;
}

bool one_way_check(const OneWayAlgebra& A) {
    const AssocAlgebra& a = A.algebra;
    int r = a.base.size();
    if (r <= 1) return false;
    // dimension of e_i A e_j per vertex pair
    std::vector<std::vector<int>> dim(static_cast<size_t>(r), std::vector<int>(static_cast<size_t>(r), 0));
    for (const auto& b : a.basis) dim[static_cast<size_t>(b.tgt)][static_cast<size_t>(b.src)]++;
    for (int i = 0; i < r; ++i)
        if (dim[static_cast<size_t>(i)][static_cast<size_t>(i)] != 1) return false;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            if (i != j && dim[static_cast<size_t>(i)][static_cast<size_t>(j)] > 0 &&
                dim[static_cast<size_t>(j)][static_cast<size_t>(i)] > 0)
                return false;
    // indecomposability: connectivity of the support graph
    std::vector<int> comp(static_cast<size_t>(r), -1);
    std::function<void(int, int)> dfs = [&](int v, int c) {
        comp[static_cast<size_t>(v)] = c;
        for (int w = 0; w < r; ++w)
            if (comp[static_cast<size_t>(w)] < 0 &&
                (dim[static_cast<size_t>(v)][static_cast<size_t>(w)] || dim[static_cast<size_t>(w)][static_cast<size_t>(v)]))
                dfs(w, c);
    };
    dfs(0, 0);
    for (int v = 0; v < r; ++v)
        if (comp[static_cast<size_t>(v)] < 0) return false;
    return true;
}

std::string ainf_to_json(const AinfAlgebra& A) {
    nlohmann::json j;
    j["base"] = A.base.vertices;
    j["field"] = A.field.str();
    j["basis"] = nlohmann::json::array();
    for (const auto& b : A.basis)
        j["basis"].push_back({{"id", b.name},
                              {"deg", b.deg},
                              {"adams", b.adams},
                              {"src", A.base.vertices[static_cast<size_t>(b.src)]},
                              {"tgt", A.base.vertices[static_cast<size_t>(b.tgt)]},
                              {"unit", b.is_unit}});
    j["ops"] = nlohmann::json::array();
    for (const auto& [key, val] : A.ops) {
        nlohmann::json op;
        op["arity"] = key.size();
        op["inputs"] = nlohmann::json::array();
        for (int x : key) op["inputs"].push_back(A.basis[static_cast<size_t>(x)].name);
        op["output"] = nlohmann::json::array();
        for (const auto& [b, c] : val)
            op["output"].push_back({{"id", A.basis[static_cast<size_t>(b)].name}, {"coeff", c.str()}});
        j["ops"].push_back(op);
    }
    return j.dump(2);
}

AinfAlgebra ainf_from_json(const std::string& text, Field f) {
    auto j = nlohmann::json::parse(text, nullptr, true, true);
    AinfAlgebra A;
    A.field = f;
    for (const auto& v : j.at("base")) A.base.vertices.push_back(v.get<std::string>());
    for (const auto& b : j.at("basis"))
        A.basis.push_back(AinfBasisEl{b.at("id").get<std::string>(), b.at("deg").get<int>(),
                                      b.at("adams").get<int>(), A.base.index(b.at("src").get<std::string>()),
                                      A.base.index(b.at("tgt").get<std::string>()), b.at("unit").get<bool>()});
    for (const auto& op : j.at("ops")) {
        std::vector<int> key;
        for (const auto& s : op.at("inputs")) key.push_back(A.index(s.get<std::string>()));
        LinComb out;
        for (const auto& o : op.at("output"))
            out[A.index(o.at("id").get<std::string>())] = Scalar::parse(f, o.at("coeff").get<std::string>());
        A.ops[key] = out;
        A.max_arity = std::max(A.max_arity, static_cast<int>(key.size()));
    }
    return A;
}

}  // namespace dgaw
