#include "dgaw/front.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include <nlohmann/json.hpp>

#include "dgaw/cellmatrix.h"

namespace dgaw {

namespace {

const FrontCell* find_cell(const std::vector<FrontCell>& cells, const std::string& id) {
    for (const auto& c : cells)
        if (c.id == id) return &c;
    return nullptr;
}

bool has_crossing(const FrontCell& c, const std::string& a, const std::string& b) {
    for (const auto& [x, y] : c.crossings)
        if ((x == a && y == b) || (x == b && y == a)) return true;
    return false;
}

int sheet_pos(const FrontCell& c, const std::string& name) {
    for (size_t i = 0; i < c.sheets.size(); ++i)
        if (c.sheets[i].name == name) return static_cast<int>(i);
    return -1;
}

// frame diagonal: component index per sheet
std::vector<int> frame_diag(const GenSet& gs, const FrontCell& frame) {
    std::vector<int> diag;
    for (const auto& sh : frame.sheets) diag.push_back(gs.base().index(sh.component));
    return diag;
}

}  // namespace

std::string cell_gen_name(const FrontCell& c, int m, int n) {
    char species = "abc"[c.dim];
    std::string num = c.id.substr(1);
    return std::string(1, species) + num + "^{" + std::to_string(m) + "," + std::to_string(n) + "}";
}

const FrontCell& FrontComplex::cell(const std::string& id) const {
    const FrontCell* c = find_cell(cells, id);
    if (!c) throw error("front: unknown cell " + id);
    return *c;
}

const FrontCell& ArcFront::cell(const std::string& id) const {
    const FrontCell* c = find_cell(cells, id);
    if (!c) throw error("front: unknown cell " + id);
    return *c;
}

namespace {

void validate_cells(const std::vector<std::string>& components, const std::vector<FrontCell>& cells,
                    int max_dim) {
    std::set<std::string> comp_set(components.begin(), components.end());
    if (comp_set.size() != components.size()) throw error("front: duplicate component labels");
    std::set<std::string> ids;
    for (const auto& c : cells) {
        if (!ids.insert(c.id).second) throw error("front: duplicate cell id " + c.id);
        if (c.dim < 0 || c.dim > max_dim) throw error("front: bad dimension for cell " + c.id);
        std::set<std::string> names;
        for (const auto& s : c.sheets) {
            if (!names.insert(s.name).second)
                throw error("front: duplicate sheet " + s.name + " in cell " + c.id);
            if (!comp_set.count(s.component))
                throw error("front: sheet " + s.name + " names unknown component " + s.component);
        }
        for (const auto& [x, y] : c.crossings) {
            int px = sheet_pos(c, x), py = sheet_pos(c, y);
            if (px < 0 || py < 0)
                throw error("front: crossing names unknown sheet in cell " + c.id);
        }
    }
    // 1-cell endpoints exist and are 0-cells; 2-cell boundary words compose
    for (const auto& c : cells) {
        if (c.dim == 1) {
            for (const std::string* v : {&c.vminus, &c.vplus}) {
                const FrontCell* vc = find_cell(cells, *v);
                if (!vc || vc->dim != 0)
                    throw error("front: 1-cell " + c.id + " has bad endpoint " + *v);
            }
        }
        if (c.dim == 2) {
            for (const std::string* v : {&c.wminus, &c.wplus}) {
                const FrontCell* vc = find_cell(cells, *v);
                if (!vc || vc->dim != 0)
                    throw error("front: 2-cell " + c.id + " has bad vertex " + *v);
            }
            for (const auto* word : {&c.gamma_plus, &c.gamma_minus}) {
                std::string cur = c.wminus;
                for (const auto& [eid, eps] : *word) {
                    const FrontCell* ec = find_cell(cells, eid);
                    if (!ec || ec->dim != 1)
                        throw error("front: boundary word of " + c.id + " names bad edge " + eid);
                    std::string from = eps > 0 ? ec->vminus : ec->vplus;
                    std::string to = eps > 0 ? ec->vplus : ec->vminus;
                    if (from != cur)
                        throw error("front: boundary word of " + c.id + " does not compose at " + eid);
                    cur = to;
                }
                if (cur != c.wplus)
                    throw error("front: boundary word of " + c.id + " does not reach the terminal vertex");
            }
        }
    }
}

}  // namespace

void FrontComplex::validate() const { validate_cells(components, cells, 2); }

void ArcFront::validate() const {
    validate_cells(components, cells, 1);
    if (!origin.empty()) {
        const FrontCell* o = find_cell(cells, origin);
        if (!o || o->dim != 0) throw error("arc front: origin must name a 0-cell");
        for (const auto& c : cells) {
            if (c.dim != 0) continue;
            if (c.id == origin) break;
            throw error("arc front: origin must be the leftmost 0-cell");
        }
    }
    if (cone_k && origin.empty()) throw error("arc front: cone data without an origin cell");
}

namespace {

struct DgaBuilder {
    Field f;
    GenSet gs;
    std::map<std::string, int> gen_ids;

    explicit DgaBuilder(const std::vector<std::string>& components, Field field)
        : f(field), gs(BaseRing{components}) {}

    // declare generators of one cell: comparable pairs by (gap, m)
    void declare(const FrontCell& c) {
        int r = static_cast<int>(c.sheets.size());
        for (int gap = 1; gap < r; ++gap)
            for (int m = 0; m + gap < r; ++m) {
                int n = m + gap;
                const SheetDecl& sm = c.sheets[static_cast<size_t>(m)];
                const SheetDecl& sn = c.sheets[static_cast<size_t>(n)];
                if (has_crossing(c, sm.name, sn.name)) continue;
                int deg = sn.maslov - sm.maslov + 1 - c.dim;
                std::string name = cell_gen_name(c, m + 1, n + 1);
                gen_ids[name] = gs.add(name, sm.component, sn.component, deg);
            }
    }

    // the matrix of boundary cell Y written in the frame of cell X
    CellMatrix boundary_matrix(const FrontCell& X, const FrontCell& Y) const {
        int r = static_cast<int>(X.sheets.size());
        CellMatrix M(frame_diag(gs, X), f);
        // absent sheets must die in adjacent same-component pairs
        std::vector<int> dying(static_cast<size_t>(r), 0);
        for (int i = 0; i < r; ++i) {
            if (sheet_pos(Y, X.sheets[static_cast<size_t>(i)].name) >= 0) continue;
            if (dying[static_cast<size_t>(i)]) continue;  // second of a pair
            const SheetDecl& up = X.sheets[static_cast<size_t>(i)];
            if (i + 1 >= r) throw error("front: unpaired dying sheet " + up.name + " at " + Y.id);
            const SheetDecl& lo = X.sheets[static_cast<size_t>(i + 1)];
            if (sheet_pos(Y, lo.name) >= 0 || lo.component != up.component)
                throw error("front: dying sheets " + up.name + "/" + lo.name +
                            " do not form a cusp pair at " + Y.id);
            if (up.maslov != lo.maslov + 1)
                throw error("front: Maslov potential inconsistent at the cusp of " + up.name);
            dying[static_cast<size_t>(i)] = 1;
            dying[static_cast<size_t>(i + 1)] = 2;
            if (Y.dim == 0)  // N block; O block for an edge stays zero
                M.at(i, i + 1) = NCPoly::idem(f, gs.base().index(up.component));
        }
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j) {
                const std::string& x = X.sheets[static_cast<size_t>(i)].name;
                const std::string& y = X.sheets[static_cast<size_t>(j)].name;
                int pi = sheet_pos(Y, x), pj = sheet_pos(Y, y);
                if (pi < 0 || pj < 0) continue;  // O / N blocks handled above
                if (pi > pj) {
                    if (!has_crossing(Y, x, y))
                        throw error("front: sheets " + x + "," + y + " reorder across " + Y.id +
                                    " without a declared crossing");
                    continue;
                }
                if (has_crossing(Y, x, y)) continue;
                auto it = gen_ids.find(cell_gen_name(Y, pi + 1, pj + 1));
                if (it == gen_ids.end()) throw error("front: missing generator for " + Y.id);
                M.at(i, j) = NCPoly::gen(f, it->second);
            }
        return M;
    }

    CellMatrix own_matrix(const FrontCell& X) const { return boundary_matrix(X, X); }

    void assign_from_matrix(DgaPresentation& pres, const FrontCell& X, const CellMatrix& D) const {
        int r = static_cast<int>(X.sheets.size());
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j) {
                auto it = gen_ids.find(cell_gen_name(X, i + 1, j + 1));
                if (it == gen_ids.end()) {
                    if (!D.at(i, j).is_zero())
                        throw error("front: nonzero differential at the incomparable pair " +
                                    cell_gen_name(X, i + 1, j + 1));
                    continue;
                }
                pres.set_diff(it->second, D.at(i, j));
            }
        for (int i = 0; i < r; ++i)
            for (int j = 0; j <= i; ++j)
                if (!D.at(i, j).is_zero())
                    throw error("front: differential matrix of " + X.id + " is not strictly upper");
    }
};

DgaPresentation build_dga(const std::vector<std::string>& components,
                          const std::vector<FrontCell>& cells, Field f, const std::string& label) {
    if (f.kind != FieldKind::GF2)
        throw error("cellular dg algebras are defined over GF(2) only; the sign-gauge route "
                    "produces general-field output");
    DgaBuilder b(components, f);
    for (int dim = 0; dim <= 2; ++dim)
        for (const auto& c : cells)
            if (c.dim == dim) b.declare(c);

    DgaPresentation pres(b.gs, f);
    for (const auto& c : cells) {
        if (c.sheets.empty()) continue;
        std::vector<int> diag = frame_diag(b.gs, c);
        if (c.dim == 0) {
            CellMatrix A = b.own_matrix(c);
            b.assign_from_matrix(pres, c, mat_mul(b.gs, A, A));
        } else if (c.dim == 1) {
            CellMatrix B = b.own_matrix(c);
            CellMatrix EB = mat_add(unit_matrix(b.gs, diag, f), B);
            CellMatrix Ap = b.boundary_matrix(c, *find_cell(cells, c.vplus));
            CellMatrix Am = b.boundary_matrix(c, *find_cell(cells, c.vminus));
            b.assign_from_matrix(pres, c, mat_add(mat_mul(b.gs, Ap, EB), mat_mul(b.gs, EB, Am)));
        } else {
            CellMatrix C = b.own_matrix(c);
            CellMatrix Ap = b.boundary_matrix(c, *find_cell(cells, c.wplus));
            CellMatrix Am = b.boundary_matrix(c, *find_cell(cells, c.wminus));
            CellMatrix D = mat_add(mat_mul(b.gs, Ap, C), mat_mul(b.gs, C, Am));
            for (const auto* word : {&c.gamma_plus, &c.gamma_minus}) {
                CellMatrix P = unit_matrix(b.gs, diag, f);
                for (const auto& [eid, eps] : *word) {
                    CellMatrix B = b.boundary_matrix(c, *find_cell(cells, eid));
                    CellMatrix T = eps > 0 ? mat_add(unit_matrix(b.gs, diag, f), B)
                                           : unitri_inverse(b.gs, B, f);
                    P = mat_mul(b.gs, T, P);
                }
                D = mat_add(D, P);
            }
            b.assign_from_matrix(pres, c, D);
        }
    }
    auto bad_deg = pres.check_degrees();
    if (!bad_deg.empty())
        throw error(label + ": degree/endpoint check failed at " + pres.gens()[bad_deg[0]].name);
    auto bad = pres.check_d_squared();
    if (!bad.empty())
        throw error(label + ": d^2 != 0 at generator " + pres.gens()[bad[0]].name);
    return pres;
}

}  // namespace

DgaPresentation cellular_dga(const FrontComplex& front, Field f) {
    front.validate();
    return build_dga(front.components, front.cells, f, "cellular_dga(" + front.name + ")");
}

DgaPresentation arc_dga(const ArcFront& front, Field f) {
    front.validate();
    return build_dga(front.components, front.cells, f, "arc_dga(" + front.name + ")");
}

namespace {

// the larger sheet index of a name like a3^{2,5}
int name_top_index(const std::string& name) {
    auto comma = name.rfind(',');
    auto rb = name.rfind('}');
    if (comma == std::string::npos || rb == std::string::npos) return 0;
    return std::stoi(name.substr(comma + 1, rb - comma - 1));
}

std::string check_name(const GenSet& gs, const std::string& name) {
    std::string cand = name;
    if (!cand.empty() && std::islower(static_cast<unsigned char>(cand[0])))
        cand[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(cand[0])));
    else
        cand = "V" + cand;
    while (gs.index(cand) >= 0) cand = "V" + cand;
    return cand;
}

}  // namespace

DgaPresentation suspend_dga(const DgaPresentation& pres, const std::vector<std::string>& relative,
                            const std::optional<ConeData>& cone) {
    const GenSet& old = pres.gens();
    Field f = pres.field();
    // triangularity of d with respect to the declaration order
    for (int g = 0; g < old.size(); ++g)
        for (const auto& [w, c] : pres.diff(g).terms())
            for (int x : w.factors)
                if (x >= g)
                    throw error("suspend_dga: differential not triangular at " + old[g].name);

    std::set<std::string> rel(relative.begin(), relative.end());
    GenSet ng(old.base());
    std::vector<int> base_id(static_cast<size_t>(old.size()), -1);
    std::vector<int> check_id(static_cast<size_t>(old.size()), -1);
    for (int g = 0; g < old.size(); ++g) {
        const GenInfo& gi = old[g];
        base_id[static_cast<size_t>(g)] = ng.add(gi.name, gi.src, gi.tgt, gi.deg, gi.adams);
        if (!rel.count(gi.name))
            check_id[static_cast<size_t>(g)] =
                ng.add(check_name(ng, gi.name), gi.src, gi.tgt, gi.deg - 1, std::nullopt);
    }

    DgaPresentation np(ng, f);
    auto reindex = [&](const NCPoly& p) {
        NCPoly out(f);
        for (const auto& [w, c] : p.terms()) {
            Word nw;
            nw.vertex = w.vertex;
            for (int g : w.factors) nw.factors.push_back(base_id[static_cast<size_t>(g)]);
            out.add_term(nw, c);
        }
        return out;
    };

    // the suspension derivation D: base generators to their checks, the
    // relative set to zero, modified on the cone cell
    Derivation D(ng, f, -1);
    for (int g = 0; g < old.size(); ++g)
        if (check_id[static_cast<size_t>(g)] >= 0)
            D.set_image(base_id[static_cast<size_t>(g)], NCPoly::gen(f, check_id[static_cast<size_t>(g)]));
    if (cone) {
        int k = cone->k;
        std::string prefix = "a" + cone->cell.substr(1) + "^{";
        auto id_of = [&](int m, int n) {
            return ng.index(prefix + std::to_string(m) + "," + std::to_string(n) + "}");
        };
        // sheet count of the cone cell, from the generator names present
        int size = 0;
        for (int g = 0; g < ng.size(); ++g) {
            const std::string& nm = ng[g].name;
            if (nm.rfind(prefix, 0) != 0) continue;
            size = std::max(size, name_top_index(nm));
        }
        // D(A_o) = sum_{m<k} a_o^{m,k+1} Delta_{m,k} + sum_{k+1<n} a_o^{k,n} Delta_{k+1,n}
        for (int m = 1; m < k; ++m) {
            int src = id_of(m, k), img = id_of(m, k + 1);
            if (src < 0) continue;
            if (img < 0) throw error("suspend_dga: cone image generator missing");
            D.set_image(src, NCPoly::gen(f, img));
        }
        for (int n = k + 2; n <= size; ++n) {
            int src = id_of(k + 1, n), img = id_of(k, n);
            if (src < 0) continue;
            if (img < 0) throw error("suspend_dga: cone image generator missing");
            D.set_image(src, NCPoly::gen(f, img));
        }
    }

    for (int g = 0; g < old.size(); ++g) {
        NCPoly dg = reindex(pres.diff(g));
        np.set_diff(base_id[static_cast<size_t>(g)], dg);
        if (check_id[static_cast<size_t>(g)] >= 0) np.set_diff(check_id[static_cast<size_t>(g)], D.apply(dg));
    }
    auto bad = np.check_d_squared();
    if (!bad.empty())
        throw error("suspend_dga: d^2 != 0 at " + np.gens()[bad[0]].name);
    return np;
}

DgaPresentation front_spin(const ArcFront& arc, Field f) {
    DgaPresentation ck = arc_dga(arc, f);
    std::vector<std::string> relative;
    if (!arc.origin.empty()) {
        const FrontCell& o = arc.cell(arc.origin);
        for (int g = 0; g < ck.gens().size(); ++g) {
            const std::string& nm = ck.gens()[g].name;
            std::string prefix = "a" + o.id.substr(1) + "^";
            if (nm.rfind(prefix, 0) == 0) relative.push_back(nm);
        }
    }
    std::optional<ConeData> cone;
    if (arc.cone_k) cone = ConeData{arc.origin, *arc.cone_k};
    return suspend_dga(ck, relative, cone);
}

// ---- builtin fronts ----

ArcFront builtin_arc_Kr(int r) {
    if (r < 1) throw error("builtin_arc_Kr: r must be >= 1");
    ArcFront a;
    a.name = "K_" + std::to_string(r);
    for (int i = 1; i <= r; ++i) a.components.push_back(std::to_string(i));
    auto sheet = [&](int t) {
        SheetDecl s;
        s.name = "T" + std::to_string(t);
        s.component = std::to_string((t + 1) / 2);
        if (t == 1)
            s.maslov = r;
        else if (t == 2 * r)
            s.maslov = 0;
        else
            s.maslov = r - t / 2;
        return s;
    };
    std::vector<SheetDecl> tframe;
    for (int t = 1; t <= 2 * r; ++t) tframe.push_back(sheet(t));
    // the crossed frame on the axis side: apply (2,3)(4,5)...
    std::vector<SheetDecl> sframe = tframe;
    for (int i = 1; i + 1 < 2 * r; i += 2) std::swap(sframe[static_cast<size_t>(i)], sframe[static_cast<size_t>(i + 1)]);
    std::vector<std::pair<std::string, std::string>> cross;
    for (int i = 1; i + 1 < 2 * r; i += 2)
        cross.push_back({tframe[static_cast<size_t>(i)].name, tframe[static_cast<size_t>(i + 1)].name});

    FrontCell A3{"A3", 0, sframe, {}, "", "", "", "", {}, {}};
    FrontCell B3{"B3", 1, sframe, {}, "A2", "A3", "", "", {}, {}};
    FrontCell A2{"A2", 0, tframe, cross, "", "", "", "", {}, {}};
    FrontCell B2{"B2", 1, tframe, {}, "A1", "A2", "", "", {}, {}};
    FrontCell A1{"A1", 0, {}, {}, "", "", "", "", {}, {}};
    a.cells = {A3, B3, A2, B2, A1};
    a.origin = "A3";
    a.validate();
    return a;
}

ArcFront builtin_arc_trefoil() {
    ArcFront a;
    a.name = "K_{1,1,0}";
    a.components = {"L"};
    auto sh = [&](const char* n, int mu) { return SheetDecl{n, "L", mu}; };
    std::vector<SheetDecl> f1 = {sh("T1", 2), sh("T2", 1), sh("T3", 1), sh("T4", 0)};
    std::vector<SheetDecl> f2 = {sh("T2", 1), sh("T1", 2), sh("T3", 1), sh("T4", 0)};
    std::vector<SheetDecl> f3 = {sh("T2", 1), sh("T4", 0)};
    FrontCell O{"A1", 0, f1, {{"T3", "T4"}}, "", "", "", "", {}, {}};
    FrontCell B1{"B1", 1, f1, {}, "A2", "A1", "", "", {}, {}};
    FrontCell A2{"A2", 0, f1, {{"T1", "T2"}}, "", "", "", "", {}, {}};
    FrontCell B2{"B2", 1, f2, {}, "A3", "A2", "", "", {}, {}};
    FrontCell A3{"A3", 0, f3, {}, "", "", "", "", {}, {}};
    FrontCell B3{"B3", 1, f3, {}, "A4", "A3", "", "", {}, {}};
    FrontCell A4{"A4", 0, {}, {}, "", "", "", "", {}, {}};
    a.cells = {O, B1, A2, B2, A3, B3, A4};
    a.origin = "A1";
    a.cone_k = 3;
    a.validate();
    return a;
}

FrontComplex builtin_front_pqr(int p, int q, int r) {
    if (p < 2 || q < 2 || r < 2) throw error("builtin_front_pqr: parameters must be >= 2");
    FrontComplex fc;
    fc.name = "Lambda_{" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) + "}";
    fc.components = {"A", "B"};
    for (int i = 1; i <= p - 1; ++i) fc.components.push_back("P" + std::to_string(i));
    for (int j = 1; j <= q - 1; ++j) fc.components.push_back("Q" + std::to_string(j));
    for (int k = 1; k <= r - 1; ++k) fc.components.push_back("R" + std::to_string(k));

    auto sh = [](const std::string& n, const std::string& comp, int mu) {
        return SheetDecl{n, comp, mu};
    };
    SheetDecl Bp = sh("Bp", "B", 1), Bm = sh("Bm", "B", 0);
    SheetDecl Rp = sh("R1p", "R1", 0), Rm = sh("R1m", "R1", -1);
    SheetDecl Ap = sh("Ap", "A", -1), Am = sh("Am", "A", -2);

    // chains of parallel unknots, in the cusp-side order
    auto chain = [&](char letter, int count) {
        std::vector<SheetDecl> out;
        for (int i = 1; i <= count; ++i) {
            std::string comp = std::string(1, letter) + std::to_string(i);
            out.push_back(sh(comp + "p", comp, 1 - i));
            out.push_back(sh(comp + "m", comp, -i));
        }
        return out;
    };
    auto crossed = [](std::vector<SheetDecl> v) {
        for (size_t i = 1; i + 1 < v.size(); i += 2) std::swap(v[i], v[i + 1]);
        return v;
    };
    std::vector<SheetDecl> pch = chain('P', p - 1);
    std::vector<SheetDecl> qch = chain('Q', q - 1);
    std::vector<SheetDecl> rch = chain('R', r - 1);
    std::vector<SheetDecl> rtail(rch.begin() + 2, rch.end());  // deep R sheets

    auto cat = [](std::initializer_list<std::vector<SheetDecl>> parts) {
        std::vector<SheetDecl> out;
        for (const auto& v : parts) out.insert(out.end(), v.begin(), v.end());
        return out;
    };
    std::vector<SheetDecl> reg1 = cat({{Bp, Bm}, rch, {Ap, Am}});
    std::vector<SheetDecl> reg2 = cat({{Bp, Bm, Rp, Ap, Rm}, rtail, {Am}});
    std::vector<SheetDecl> reg3 = cat({{Bp, Rp, Bm, Ap, Rm}, rtail, {Am}});
    // the disk inside the central chain-crossing circle
    std::vector<SheetDecl> xrch = crossed(rch);
    std::vector<SheetDecl> regC12 = cat({{Bp, Rp, Bm, Ap},
                                         std::vector<SheetDecl>(xrch.begin() + 1, xrch.end()),
                                         {Am}});
    // eye regions: chain head interacts with B and A, the tail sits
    // between the A top sheet and the R1 bottom sheet
    auto eye_regs = [&](const std::vector<SheetDecl>& ch) {
        std::vector<SheetDecl> head = {ch[0], ch[1]};  // X1p, X1m
        std::vector<SheetDecl> tail(ch.begin() + 2, ch.end());
        std::vector<SheetDecl> xch = crossed(ch);
        std::vector<SheetDecl> xtail(xch.begin() + 1, xch.end());
        std::vector<SheetDecl> r4 = cat({{Bp, Rp, Bm}, head, {Ap}, tail, {Rm}, rtail, {Am}});
        std::vector<SheetDecl> r5 = cat({{Bp, Rp, Bm, ch[0], Ap, ch[1]}, tail, {Rm}, rtail, {Am}});
        std::vector<SheetDecl> r6 = cat({{Bp, Rp, ch[0], Bm, Ap, ch[1]}, tail, {Rm}, rtail, {Am}});
        std::vector<SheetDecl> r7 = cat({{Bp, Rp, ch[0], Ap, Bm}, xtail, {Rm}, rtail, {Am}});
        return std::array<std::vector<SheetDecl>, 4>{r4, r5, r6, r7};
    };
    auto [reg4L, reg5L, reg6L, reg7L] = eye_regs(pch);
    auto [reg4R, reg5R, reg6R, reg7R] = eye_regs(qch);

    using XP = std::vector<std::pair<std::string, std::string>>;
    // at the A-R circle the top A sheet passes the R1 bottom sheet and,
    // non-generically, the whole deep part of the R chain
    XP xB21 = {{"R1m", "Ap"}};
    for (const auto& shd : rtail) xB21.push_back({shd.name, "Ap"});
    XP x2875 = {{"Bm", "R1p"}};
    XP xB23;
    for (int k = 1; k + 1 <= r - 1; ++k)
        xB23.push_back({"R" + std::to_string(k) + "m", "R" + std::to_string(k + 1) + "p"});
    auto eye_cross = [&](char letter, int count) {
        XP inner = {{"Bm", "Ap"}};
        for (int i = 1; i <= count - 1; ++i)
            inner.push_back({std::string(1, letter) + std::to_string(i) + "m",
                             std::string(1, letter) + std::to_string(i + 1) + "p"});
        XP b14 = {{std::string(1, letter) + "1m", "Ap"}};
        XP b13 = {{"Bm", std::string(1, letter) + "1p"}};
        return std::array<XP, 3>{inner, b14, b13};
    };
    auto [xB1, xB14, xB13] = eye_cross('P', p - 1);
    auto [xB8, xB17, xB16] = eye_cross('Q', q - 1);

    auto v0 = [&](const std::string& id, std::vector<SheetDecl> sheets, XP cross) {
        FrontCell c;
        c.id = id;
        c.dim = 0;
        c.sheets = std::move(sheets);
        c.crossings = std::move(cross);
        return c;
    };
    auto e1 = [&](const std::string& id, std::vector<SheetDecl> sheets, XP cross,
                  const std::string& vm, const std::string& vp) {
        FrontCell c;
        c.id = id;
        c.dim = 1;
        c.sheets = std::move(sheets);
        c.crossings = std::move(cross);
        c.vminus = vm;
        c.vplus = vp;
        return c;
    };
    auto f2c = [&](const std::string& id, std::vector<SheetDecl> sheets, const std::string& wm,
                   const std::string& wp, std::vector<std::pair<std::string, int>> gp,
                   std::vector<std::pair<std::string, int>> gm) {
        FrontCell c;
        c.id = id;
        c.dim = 2;
        c.sheets = std::move(sheets);
        c.wminus = wm;
        c.wplus = wp;
        c.gamma_plus = std::move(gp);
        c.gamma_minus = std::move(gm);
        return c;
    };

    bool deep = r > 2;
    fc.cells = {
        v0("A1", {}, {}),
        v0("A2", reg1, xB21),
        v0("A3", reg2, x2875),
        v0("A4", reg3, {}),
        v0("A5", reg4L, xB14),
        v0("A6", reg5L, xB13),
        v0("A7", reg6L, xB1),
        v0("A8", reg2, x2875),
        v0("A9", reg3, {}),
        v0("A10", reg4R, xB17),
        v0("A11", reg5R, xB16),
        v0("A12", reg6R, xB8),
    };
    if (deep) {
        // deeper R chains split the lower outer arc at a new vertex and
        // hang a crossing circle for the chain at the centre
        fc.cells.push_back(v0("A13", reg2, x2875));
        fc.cells.push_back(v0("A14", reg3, xB23));
    }
    std::vector<FrontCell> edges = {
        e1("B0", {}, {}, "A1", "A1"),
        e1("B1", reg6L, xB1, "A7", "A7"),
        e1("B2", reg1, {}, "A1", "A2"),
        e1("B3", reg2, {}, "A2", "A3"),
        e1("B4", reg3, {}, "A3", "A4"),
        e1("B5", reg4L, {}, "A4", "A5"),
        e1("B6", reg5L, {}, "A5", "A6"),
        e1("B7", reg6L, {}, "A6", "A7"),
        e1("B8", reg6R, xB8, "A12", "A12"),
        e1("B9", reg3, {}, "A8", "A9"),
        e1("B10", reg4R, {}, "A9", "A10"),
        e1("B11", reg5R, {}, "A10", "A11"),
        e1("B12", reg6R, {}, "A11", "A12"),
        e1("B13", reg5L, xB13, "A6", "A6"),
        e1("B14", reg4L, xB14, "A5", "A5"),
        e1("B15", reg3, {}, "A4", "A4"),
        e1("B16", reg5R, xB16, "A11", "A11"),
        e1("B17", reg4R, xB17, "A10", "A10"),
        e1("B18", reg3, {}, "A9", "A9"),
        e1("B19", reg2, x2875, "A3", "A8"),
        e1("B20", reg2, x2875, "A8", deep ? "A13" : "A3"),
        e1("B21", reg1, xB21, "A2", "A2"),
    };
    if (deep) {
        edges.push_back(e1("B22", reg3, {}, "A13", "A14"));
        edges.push_back(e1("B23", reg3, xB23, "A14", "A14"));
        edges.push_back(e1("B24", reg2, x2875, "A13", "A3"));
    }
    fc.cells.insert(fc.cells.end(), edges.begin(), edges.end());
    std::vector<FrontCell> faces = {
        f2c("C1", reg1, "A1", "A2", {{"B2", 1}, {"B21", 1}}, {{"B0", 1}, {"B2", 1}}),
        deep ? f2c("C2", reg2, "A2", "A3", {{"B3", 1}, {"B19", 1}, {"B20", 1}, {"B24", 1}},
                   {{"B21", 1}, {"B3", 1}})
             : f2c("C2", reg2, "A2", "A3", {{"B3", 1}, {"B19", 1}, {"B20", 1}},
                   {{"B21", 1}, {"B3", 1}}),
        deep ? f2c("C3", reg3, "A4", "A9", {{"B15", 1}, {"B4", -1}, {"B19", 1}, {"B9", 1}},
                   {{"B4", -1}, {"B24", -1}, {"B22", 1}, {"B23", 1}, {"B22", -1}, {"B20", -1},
                    {"B9", 1}, {"B18", 1}})
             : f2c("C3", reg3, "A4", "A9", {{"B15", 1}, {"B4", -1}, {"B19", 1}, {"B9", 1}},
                   {{"B4", -1}, {"B20", -1}, {"B9", 1}, {"B18", 1}}),
        f2c("C4", reg4L, "A4", "A5", {{"B5", 1}, {"B14", 1}}, {{"B15", 1}, {"B5", 1}}),
        f2c("C5", reg5L, "A5", "A6", {{"B6", 1}, {"B13", 1}}, {{"B14", 1}, {"B6", 1}}),
        f2c("C6", reg6L, "A6", "A7", {{"B7", 1}, {"B1", 1}}, {{"B13", 1}, {"B7", 1}}),
        f2c("C7", reg7L, "A7", "A7", {{"B1", 1}}, {}),
        f2c("C8", reg4R, "A9", "A10", {{"B10", 1}, {"B17", 1}}, {{"B18", 1}, {"B10", 1}}),
        f2c("C9", reg5R, "A10", "A11", {{"B11", 1}, {"B16", 1}}, {{"B17", 1}, {"B11", 1}}),
        f2c("C10", reg6R, "A11", "A12", {{"B12", 1}, {"B8", 1}}, {{"B16", 1}, {"B12", 1}}),
        f2c("C11", reg7R, "A12", "A12", {{"B8", 1}}, {}),
    };
    if (deep) faces.push_back(f2c("C12", regC12, "A14", "A14", {{"B23", 1}}, {}));
    fc.cells.insert(fc.cells.end(), faces.begin(), faces.end());
    fc.validate();
    return fc;
}

// ---- JSON ----

namespace {

nlohmann::json cell_to_json(const FrontCell& c) {
    nlohmann::json j;
    j["id"] = c.id;
    j["dim"] = c.dim;
    j["sheets"] = nlohmann::json::array();
    for (const auto& s : c.sheets)
        j["sheets"].push_back({{"name", s.name}, {"component", s.component}, {"maslov", s.maslov}});
    j["crossings"] = nlohmann::json::array();
    for (const auto& [x, y] : c.crossings) j["crossings"].push_back({x, y});
    if (c.dim == 1) {
        j["vminus"] = c.vminus;
        j["vplus"] = c.vplus;
    }
    if (c.dim == 2) {
        j["wminus"] = c.wminus;
        j["wplus"] = c.wplus;
        j["gamma_plus"] = nlohmann::json::array();
        for (const auto& [e, s] : c.gamma_plus) j["gamma_plus"].push_back({{"edge", e}, {"eps", s}});
        j["gamma_minus"] = nlohmann::json::array();
        for (const auto& [e, s] : c.gamma_minus) j["gamma_minus"].push_back({{"edge", e}, {"eps", s}});
    }
    return j;
}

FrontCell cell_from_json(const nlohmann::json& j) {
    FrontCell c;
    c.id = j.at("id").get<std::string>();
    c.dim = j.at("dim").get<int>();
    for (const auto& s : j.at("sheets"))
        c.sheets.push_back(SheetDecl{s.at("name").get<std::string>(),
                                     s.at("component").get<std::string>(), s.at("maslov").get<int>()});
    if (j.count("crossings"))
        for (const auto& x : j.at("crossings"))
            c.crossings.push_back({x.at(0).get<std::string>(), x.at(1).get<std::string>()});
    if (c.dim == 1) {
        c.vminus = j.at("vminus").get<std::string>();
        c.vplus = j.at("vplus").get<std::string>();
    }
    if (c.dim == 2) {
        c.wminus = j.at("wminus").get<std::string>();
        c.wplus = j.at("wplus").get<std::string>();
        for (const auto& e : j.at("gamma_plus"))
            c.gamma_plus.push_back({e.at("edge").get<std::string>(), e.at("eps").get<int>()});
        for (const auto& e : j.at("gamma_minus"))
            c.gamma_minus.push_back({e.at("edge").get<std::string>(), e.at("eps").get<int>()});
    }
    return c;
}

}  // namespace

std::string front_to_json(const FrontComplex& f) {
    nlohmann::json j;
    j["name"] = f.name;
    j["components"] = f.components;
    j["cells"] = nlohmann::json::array();
    for (const auto& c : f.cells) j["cells"].push_back(cell_to_json(c));
    return j.dump(2);
}

FrontComplex front_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text, nullptr, true, true);
    FrontComplex f;
    f.name = j.at("name").get<std::string>();
    for (const auto& c : j.at("components")) f.components.push_back(c.get<std::string>());
    for (const auto& c : j.at("cells")) f.cells.push_back(cell_from_json(c));
    f.validate();
    return f;
}

std::string arc_to_json(const ArcFront& a) {
    nlohmann::json j;
    j["name"] = a.name;
    j["components"] = a.components;
    j["origin"] = a.origin;
    if (a.cone_k) j["cone_k"] = *a.cone_k;
    j["cells"] = nlohmann::json::array();
    for (const auto& c : a.cells) j["cells"].push_back(cell_to_json(c));
    return j.dump(2);
}

ArcFront arc_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text, nullptr, true, true);
    ArcFront a;
    a.name = j.at("name").get<std::string>();
    for (const auto& c : j.at("components")) a.components.push_back(c.get<std::string>());
    a.origin = j.value("origin", "");
    if (j.count("cone_k")) a.cone_k = j.at("cone_k").get<int>();
    for (const auto& c : j.at("cells")) a.cells.push_back(cell_from_json(c));
    a.validate();
    return a;
}

}  // namespace dgaw
