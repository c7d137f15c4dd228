#include "dgaw/catalog.h"

#include <chrono>
#include <fstream>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "dgaw/bv.h"
#include "dgaw/homology.h"
#include "dgaw/quiver.h"

namespace dgaw {

std::vector<CatalogEntry> catalog_entries() {
    std::vector<CatalogEntry> out;
    out.push_back({"ginzburg:2,2,2", "ginzburg", "p=2 q=2 r=2", "full worked differential table"});
    for (const char* s : {"3,2,2", "2,3,2", "3,3,2", "2,2,3", "4,3,2"})
        out.push_back({std::string("ginzburg:") + s, "ginzburg", s, "quiver-with-potential family"});
    for (int r = 2; r <= 6; ++r)
        out.push_back({"ar:" + std::to_string(r), "ginzburg", "r=" + std::to_string(r),
                       "linear quiver with zero potential"});
    out.push_back({"cyclic:2,2,2", "cyclic", "p=2 q=2 r=2", "compact cyclic algebra"});
    out.push_back({"lambda_pqr:2,2,2", "cellular", "p=2 q=2 r=2", "surface front, 12+22+11 cells"});
    for (const char* s : {"3,2,2", "2,3,2", "3,3,2"})
        out.push_back({std::string("lambda_pqr:") + s, "cellular", s, "chains over the eyes"});
    for (int r = 2; r <= 6; ++r)
        out.push_back({"lambda_r:" + std::to_string(r), "arc-spin", "r=" + std::to_string(r),
                       "spun chain of unknots"});
    out.push_back({"lambda_110", "arc-spin", "trefoil", "spun trefoil with one cone point"});
    return out;
}

namespace {

std::vector<int> parse_params(const std::string& s) {
    std::vector<int> out;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

}  // namespace

DgaPresentation catalog_build(const std::string& name, Field f) {
    auto colon = name.find(':');
    std::string kind = name.substr(0, colon);
    std::string params = colon == std::string::npos ? "" : name.substr(colon + 1);
    if (kind == "ginzburg") {
        auto p = parse_params(params);
        if (p.size() != 3) throw error("catalog: ginzburg expects p,q,r");
        return builtin_ginzburg_pqr(p[0], p[1], p[2], f);
    }
    if (kind == "ar") {
        return builtin_ginzburg_Ar(std::stoi(params), f);
    }
    if (kind == "lambda_pqr") {
        auto p = parse_params(params);
        if (p.size() != 3) throw error("catalog: lambda_pqr expects p,q,r");
        return cellular_dga(builtin_front_pqr(p[0], p[1], p[2]), f);
    }
    if (kind == "lambda_r") {
        return front_spin(builtin_arc_Kr(std::stoi(params)), f);
    }
    if (kind == "lambda_110") {
        return front_spin(builtin_arc_trefoil(), f);
    }
    throw error("catalog: unknown entry '" + name + "'");
}

namespace {

// decode a cellular generator name into (cell id, m, n)
struct CellRef {
    std::string cell;
    int m = 0, n = 0;
    char species = 0;
};

std::optional<CellRef> parse_cell_gen(const std::string& nm) {
    auto lb = nm.find("^{");
    auto comma = nm.find(',', lb);
    auto rb = nm.find('}', lb);
    if (lb == std::string::npos || comma == std::string::npos || rb == std::string::npos)
        return std::nullopt;
    CellRef r;
    r.species = nm[0];
    std::string num = nm.substr(1, lb - 1);
    r.cell = std::string(1, static_cast<char>(std::toupper(static_cast<unsigned char>(r.species)))) + num;
    r.m = std::stoi(nm.substr(lb + 2, comma - lb - 2));
    r.n = std::stoi(nm.substr(comma + 1, rb - comma - 1));
    return r;
}

}  // namespace

DgaMorphism catalog_phi_pqr(const DgaPresentation& simplified, const DgaPresentation& ginz, int p,
                            int q, int r) {
    FrontComplex fc = builtin_front_pqr(p, q, r);
    Field f = simplified.field();
    DgaMorphism phi;
    phi.source = &simplified;
    phi.target = &ginz;
    auto target_gen = [&](const std::string& nm) {
        int id = ginz.gens().index(nm);
        if (id < 0) throw error("catalog_phi_pqr: missing Ginzburg generator " + nm);
        return NCPoly::gen(f, id);
    };
    auto chain_index = [&](const std::string& sheet) {
        // sheet names like P3p / Q2m: the chain position
        return std::stoi(sheet.substr(1, sheet.size() - 2));
    };
    for (int g = 0; g < simplified.gens().size(); ++g) {
        const std::string& nm = simplified.gens()[g].name;
        auto ref = parse_cell_gen(nm);
        if (!ref) throw error("catalog_phi_pqr: unexpected generator name " + nm);
        const FrontCell& cell = fc.cell(ref->cell);
        std::string x = cell.sheets[static_cast<size_t>(ref->m - 1)].name;
        std::string y = cell.sheets[static_cast<size_t>(ref->n - 1)].name;
        bool left = ref->cell == "B7" || ref->cell == "C7";
        std::string img;
        auto pairs = [&](const char* a, const char* b) { return x == a && y == b; };
        if (ref->species == 'b') {
            if (pairs("R1m", "Ap")) img = "c3";
            else if (pairs("Bm", "R1p")) img = "b3";
            else if (pairs("P1m", "Ap")) img = "c1";
            else if (pairs("Bm", "P1p")) img = "b1";
            else if (pairs("Q1m", "Ap")) img = "c2";
            else if (pairs("Bm", "Q1p")) img = "b2";
            else if (pairs("Bm", "Ap")) img = left ? "a2*" : "a1*";
            else if (x.size() >= 3 && x[0] == 'P' && x.back() == 'm' && y[0] == 'P' && y.back() == 'p')
                img = "x" + std::to_string(chain_index(x));
            else if (x.size() >= 3 && x[0] == 'Q' && x.back() == 'm' && y[0] == 'Q' && y.back() == 'p')
                img = "y" + std::to_string(chain_index(x));
            else if (x.size() >= 3 && x[0] == 'R' && x.back() == 'm' && y[0] == 'R' && y.back() == 'p')
                img = "z" + std::to_string(chain_index(x));
        } else if (ref->species == 'c') {
            if (pairs("Ap", "Bm")) img = left ? "a2" : "a1";
            else if (pairs("P1p", "Bm")) img = "b1*";
            else if (pairs("Q1p", "Bm")) img = "b2*";
            else if (pairs("R1p", "Bm")) img = "b3*";
            else if (pairs("Ap", "P1m")) img = "c1*";
            else if (pairs("Ap", "Q1m")) img = "c2*";
            else if (pairs("Ap", "R1m")) img = "c3*";
            else if (pairs("Bp", "Bm")) img = "zB";
            else if (pairs("Ap", "Am")) img = "zA";
            else if (x[0] == 'P' && y[0] == 'P' && x.back() == 'p' && y.back() == 'm' &&
                     chain_index(x) == chain_index(y))
                img = "zP" + std::to_string(chain_index(x));
            else if (x[0] == 'Q' && y[0] == 'Q' && x.back() == 'p' && y.back() == 'm' &&
                     chain_index(x) == chain_index(y))
                img = "zQ" + std::to_string(chain_index(x));
            else if (x[0] == 'R' && y[0] == 'R' && x.back() == 'p' && y.back() == 'm' &&
                     chain_index(x) == chain_index(y))
                img = "zR" + std::to_string(chain_index(x));
            else if (x[0] == 'P' && y[0] == 'P' && x.back() == 'p' && y.back() == 'm')
                img = "x" + std::to_string(chain_index(y)) + "*";  // (P_{k+1}p, P_k m)
            else if (x[0] == 'Q' && y[0] == 'Q' && x.back() == 'p' && y.back() == 'm')
                img = "y" + std::to_string(chain_index(y)) + "*";
            else if (x[0] == 'R' && y[0] == 'R' && x.back() == 'p' && y.back() == 'm')
                img = "z" + std::to_string(chain_index(y)) + "*";
        }
        if (img.empty())
            throw error("catalog_phi_pqr: no image rule for " + nm + " = (" + x + "," + y + ")");
        phi.images.push_back(target_gen(img));
    }
    // deeper chains can leave the terminal object a tame automorphism away
    // from the generator-for-generator match: repair image by image, in
    // declaration (triangular) order, by solving d x = defect
    for (int g = 0; g < simplified.gens().size(); ++g) {
        NCPoly defect = phi.apply(simplified.diff(g)) - ginz.d(phi.images[static_cast<size_t>(g)]);
        if (defect.is_zero()) continue;
        auto x = solve_primitive(ginz, defect, 5);
        if (!x) throw error("catalog_phi_pqr: unrepairable defect at " +
                            simplified.gens()[g].name);
        phi.images[static_cast<size_t>(g)] += *x;
    }
    return phi;
}

DgaMorphism catalog_phi_ar(const DgaPresentation& simplified, const DgaPresentation& ginz, int r) {
    Field f = simplified.field();
    DgaMorphism phi;
    phi.source = &simplified;
    phi.target = &ginz;
    auto target_gen = [&](const std::string& nm) {
        int id = ginz.gens().index(nm);
        if (id < 0) throw error("catalog_phi_ar: missing Ginzburg generator " + nm);
        return NCPoly::gen(f, id);
    };
    for (int g = 0; g < simplified.gens().size(); ++g) {
        const std::string& nm = simplified.gens()[g].name;
        auto ref = parse_cell_gen(nm);
        if (!ref) throw error("catalog_phi_ar: unexpected generator " + nm);
        std::string img;
        if (nm.rfind("b2^", 0) == 0 && ref->n == ref->m + 1 && ref->m % 2 == 0)
            img = "al" + std::to_string(ref->m / 2);
        else if (nm.rfind("B3^", 0) == 0 && ref->n == ref->m + 1 && ref->m % 2 == 0)
            img = "al" + std::to_string(ref->m / 2) + "*";
        else if (nm == "B3^{1,3}")
            img = "z1";
        else if (nm.rfind("B3^", 0) == 0 && ref->m % 2 == 0 && ref->n == ref->m + 3)
            img = "z" + std::to_string(ref->m / 2 + 1);
        else if (nm.rfind("B3^", 0) == 0 && ref->m == 2 * r - 2 && ref->n == 2 * r)
            img = "z" + std::to_string(r);
        if (img.empty()) throw error("catalog_phi_ar: no image rule for " + nm);
        phi.images.push_back(target_gen(img));
    }
    return phi;
}

std::string content_digest(const std::string& text) {
    // FNV-1a, printed as hex
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

std::string RunReport::to_json() const {
    nlohmann::json j;
    j["pipeline"] = pipeline;
    j["field"] = field;
    j["bounds"] = bounds;
    j["ok"] = ok;
    j["seconds"] = seconds;
    j["digest"] = digest;
    j["checks"] = nlohmann::json::array();
    for (const auto& [k, v] : checks) j["checks"].push_back({{"name", k}, {"result", v}});
    return j.dump(2);
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw error("cannot read " + path);
    std::stringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

std::map<int, int> census(const DgaPresentation& p) {
    std::map<int, int> c;
    for (int g = 0; g < p.gens().size(); ++g) c[p.gens()[g].deg]++;
    return c;
}

}  // namespace

RunReport verify_pipeline(const std::string& name, const std::string& golden_dir) {
    RunReport rep;
    rep.pipeline = name;
    auto t0 = std::chrono::steady_clock::now();
    Field f2 = Field::gf2();
    auto pass = [&](const std::string& what, bool ok) {
        rep.checks.push_back({what, ok ? "pass" : "fail"});
        if (!ok) rep.ok = false;
    };
    rep.ok = true;
    rep.field = "gf2";

    if (name == "lambda222") {
        DgaPresentation raw = catalog_build("lambda_pqr:2,2,2", f2);
        SimplifyResult s = simplify(raw, default_strategy(), false, false);
        pass("terminal generator count == 21", s.pres.gens().size() == 21);
        auto cen = census(s.pres);
        pass("grading census (8,8,5)", cen[0] == 8 && cen[-1] == 8 && cen[-2] == 5);
        std::string dump = s.pres.dump();
        rep.digest = content_digest(dump);
        std::string golden = read_file(golden_dir + "/lambda222_simplified.txt");
        pass("terminal presentation matches the golden file", dump == golden);
        DgaPresentation G = catalog_build("ginzburg:2,2,2", f2);
        DgaMorphism phi = catalog_phi_pqr(s.pres, G, 2, 2, 2);
        pass("Phi is an isomorphism onto the Ginzburg algebra", verify_iso(s.pres, G, phi));
        rep.bounds = "exact";
    } else if (name.rfind("pqr:", 0) == 0) {
        auto p = parse_params(name.substr(4));
        DgaPresentation raw = catalog_build("lambda_pqr:" + name.substr(4), f2);
        // the gap-major key reproduces the worked terminal objects for
        // r = 2; deeper R chains need the degree-major key to avoid a
        // blocked pair at the very end
        SimplifyResult s =
            simplify(raw, p[2] == 2 ? default_strategy() : gap_first_strategy(), false, false);
        DgaPresentation G = catalog_build("ginzburg:" + name.substr(4), f2);
        pass("terminal generator count matches the Ginzburg algebra",
             s.pres.gens().size() == G.gens().size());
        auto cs = census(s.pres), cg = census(G);
        pass("grading census matches", cs == cg);
        DgaMorphism phi = catalog_phi_pqr(s.pres, G, p[0], p[1], p[2]);
        pass("Phi is an isomorphism", verify_iso(s.pres, G, phi));
        rep.digest = content_digest(s.pres.dump());
        rep.bounds = "exact";
    } else if (name.rfind("ar:", 0) == 0) {
        int r = std::stoi(name.substr(3));
        DgaPresentation spun = catalog_build("lambda_r:" + std::to_string(r), f2);
        SimplifyResult s = simplify(spun, default_strategy(), false, false);
        pass("terminal generator count == 3r-2", static_cast<int>(s.pres.gens().size()) == 3 * r - 2);
        auto cen = census(s.pres);
        pass("degree census (r-1, r-1, r)", cen[0] == r - 1 && cen[-1] == r - 1 && cen[-2] == r);
        DgaPresentation G = catalog_build("ar:" + std::to_string(r), f2);
        DgaMorphism phi = catalog_phi_ar(s.pres, G, r);
        pass("isomorphic to the Ginzburg algebra of the A_r quiver", verify_iso(s.pres, G, phi));
        rep.digest = content_digest(s.pres.dump());
        rep.bounds = "exact";
    } else if (name == "trefoil") {
        DgaPresentation spun = catalog_build("lambda_110", f2);
        SimplifyResult s = simplify(spun, default_strategy(), false, false);
        BettiTable t = truncated_cohomology(s.pres, 7, -6, 3);
        bool ok = true;
        for (int d = -6; d <= 3; ++d)
            for (int l = 0; l <= 6; ++l) {
                int want = 0;
                for (int i = 0; i <= l; ++i)
                    for (int j = 0; i + j <= l; ++j)
                        if (i - 2 * j == d && i + j == l) ++want;
                int got = t.strata.count({d, l}) ? t.strata.at({d, l}) : 0;
                if (got != want) ok = false;
            }
        pass("Betti strata match Z/2[x1,x2] monomial counts (len <= 6, deg -6..3)", ok);
        rep.digest = content_digest(t.to_tsv());
        rep.bounds = "len<=6, deg=-6..3";
    } else {
        throw error("verify: unknown pipeline '" + name + "'");
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace dgaw
