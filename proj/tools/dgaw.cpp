#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dgaw/bv.h"
#include "dgaw/catalog.h"
#include "dgaw/front.h"
#include "dgaw/homology.h"
#include "dgaw/quiver.h"
#include "dgaw/simplify.h"

using namespace dgaw;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw error("cannot read " + path);
    std::stringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream os(path);
    if (!os) throw error("cannot write " + path);
    os << text;
}

SignVector load_signs(const std::string& path) {
    // one line per slot: <generator>\t<monomial>\t<+1|-1>
    SignVector sv;
    std::istringstream is(slurp(path));
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto t1 = line.find('\t');
        auto t2 = line.rfind('\t');
        if (t1 == std::string::npos || t2 == t1) throw error("signs: malformed line " + line);
        sv.eps[{line.substr(0, t1), line.substr(t1 + 1, t2 - t1 - 1)}] =
            std::stoi(line.substr(t2 + 1));
    }
    return sv;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for Ginzburg and cellular dg algebras"};
    app.require_subcommand(1);

    std::string field_tag = "gf2", out, in, builtin, front_file, trace_file, relations_file;
    std::vector<int> pqr;
    std::string pipeline, golden_dir = "data/golden", signs_file;
    int rpar = 3, max_len = 6, adams_bound = 6, deg_lo = -4, deg_hi = 2, arity = 6, bound = 3;
    bool do_double = false;

    auto* build = app.add_subcommand("build", "construct a catalog dg algebra");
    auto* bgz = build->add_subcommand("ginzburg", "Ginzburg algebra of (Q_{p,q,r}, w_{p,q,r})");
    bgz->add_option("--pqr", pqr, "parameters p q r (space or comma separated)")->required()->expected(3)->delimiter(',');
    bgz->add_option("--field", field_tag, "gf2 | q | gfP");
    bgz->add_option("--signs", signs_file, "sign-vector file for the decorated variant");
    bgz->add_option("-o,--out", out, "output path (default stdout)");
    auto* bar = build->add_subcommand("ar", "Ginzburg algebra of the A_r quiver, zero potential");
    bar->add_option("--r", rpar)->required();
    bar->add_option("--field", field_tag);
    bar->add_option("-o,--out", out);
    auto* bcell = build->add_subcommand("cellular", "cellular dg algebra of a front");
    bcell->add_option("--builtin", builtin, "lambda_pqr:P,Q,R | lambda_r:N | lambda_110");
    bcell->add_option("--front", front_file, "front.json file");
    bcell->add_option("-o,--out", out);
    auto* bcyc = build->add_subcommand("cyclic", "compact cyclic algebra B(Q_{p,q,r}, w_{p,q,r})");
    bcyc->add_option("--pqr", pqr)->required()->expected(3)->delimiter(',');
    bcyc->add_option("--field", field_tag);
    bcyc->add_option("-o,--out", out);

    auto* simp = app.add_subcommand("simplify", "cancel generator pairs to the terminal object");
    simp->add_option("--in", in, "presentation file")->required();
    simp->add_option("--trace", trace_file, "write the machine-replayable trace here");
    simp->add_option("-o,--out", out);

    auto* rep = app.add_subcommand("replay", "replay a cancellation trace");
    rep->add_option("--in", in)->required();
    rep->add_option("--trace", trace_file)->required();
    rep->add_option("-o,--out", out);

    auto* hom = app.add_subcommand("homology", "truncated cohomology of a presentation");
    hom->add_option("--in", in)->required();
    hom->add_option("--max-len", max_len);
    std::string degrees = "-4..2";
    hom->add_option("--degrees", degrees, "LO..HI");
    hom->add_option("-o,--out", out);

    auto* kd = app.add_subcommand("koszul-dual", "bar-construction Koszul dual of B(Q,w)");
    kd->add_option("--pqr", pqr)->required()->expected(3)->delimiter(',');
    kd->add_option("--adams-bound", adams_bound);
    kd->add_option("--field", field_tag);
    kd->add_flag("--double", do_double, "run the double-dual Betti comparison");
    kd->add_option("-o,--out", out);

    auto* h0 = app.add_subcommand("h0-check", "bounded primitive search in degree 0");
    h0->add_option("--in", in)->required();
    h0->add_option("--relations", relations_file, "one polynomial per line")->required();
    h0->add_option("--bound", bound);
    h0->add_option("-o,--out", out);

    auto* bv = app.add_subcommand("bv-check", "quasi-dilation identity on the cyclic completion");
    bv->add_option("--pqr", pqr)->required()->expected(3)->delimiter(',');
    bv->add_option("--field", field_tag);

    auto* chk = app.add_subcommand("check", "validate a presentation or an A-infinity catalog entry");
    auto* chd2 = chk->add_subcommand("d2", "d^2 = 0 and degree consistency");
    chd2->add_option("--in", in)->required();
    auto* chainf = chk->add_subcommand("ainf", "Stasheff identities of B(Q_{p,q,r}, w)");
    chainf->add_option("--pqr", pqr)->required()->expected(3)->delimiter(',');
    chainf->add_option("--arity", arity);
    chainf->add_option("--field", field_tag);

    auto* cat = app.add_subcommand("catalog", "builtin catalog");
    auto* catlist = cat->add_subcommand("list", "names of all builtin entries");
    static_cast<void>(catlist);

    auto* ver = app.add_subcommand("verify", "end-to-end verification pipelines");
    ver->add_option("--pipeline", pipeline, "lambda222 | pqr:P,Q,R | ar:N | trefoil")->required();
    ver->add_option("--golden", golden_dir);
    ver->add_option("-o,--out", out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        Field f = Field::parse(field_tag);
        if (bgz->parsed()) {
            auto [Q, w] = cy3_from_quadratic(builtin_Apqr(pqr[0], pqr[1], pqr[2], f));
            SignVector sv;
            DgaPresentation G = signs_file.empty()
                                    ? ginzburg(Q, w, f)
                                    : ginzburg(Q, w, f, &(sv = load_signs(signs_file), sv));
            spit(out, G.dump());
        } else if (bar->parsed()) {
            spit(out, builtin_ginzburg_Ar(rpar, f).dump());
        } else if (bcell->parsed()) {
            DgaPresentation pres = !builtin.empty()
                                       ? catalog_build(builtin, f)
                                       : [&] {
                                             std::string js = slurp(front_file);
                                             if (js.find("\"cone_k\"") != std::string::npos ||
                                                 js.find("\"origin\"") != std::string::npos)
                                                 return front_spin(arc_from_json(js), f);
                                             return cellular_dga(front_from_json(js), f);
                                         }();
            spit(out, pres.dump());
        } else if (bcyc->parsed()) {
            auto [Q, w] = cy3_from_quadratic(builtin_Apqr(pqr[0], pqr[1], pqr[2], f));
            auto [B, P] = cyclic_from_potential(Q, w, f);
            spit(out, ainf_to_json(B));
        } else if (simp->parsed()) {
            DgaPresentation pres = DgaPresentation::parse(slurp(in));
            SimplifyResult s = simplify(pres, default_strategy(), false, false);
            if (!trace_file.empty()) spit(trace_file, s.trace.serialize());
            spit(out, s.pres.dump());
        } else if (rep->parsed()) {
            DgaPresentation pres = DgaPresentation::parse(slurp(in));
            DgaPresentation replayed = replay_trace(pres, CancellationTrace::parse(slurp(trace_file)));
            spit(out, replayed.dump());
        } else if (hom->parsed()) {
            DgaPresentation pres = DgaPresentation::parse(slurp(in));
            auto dd = degrees.find("..");
            BettiTable t = truncated_cohomology(pres, max_len, std::stoi(degrees.substr(0, dd)),
                                                std::stoi(degrees.substr(dd + 2)));
            spit(out, t.to_tsv());
        } else if (kd->parsed()) {
            auto [Q, w] = cy3_from_quadratic(builtin_Apqr(pqr[0], pqr[1], pqr[2], f));
            auto [B, P] = cyclic_from_potential(Q, w, f);
            if (do_double) {
                auto repd = double_dual_check(B, adams_bound, -1, 4);
                std::ostringstream os;
                os << (repd.match ? "match" : "mismatch") << "\n" << repd.detail << "\n";
                spit(out, os.str());
                return repd.match ? 0 : 1;
            }
            BarDual E = bar_dual(B, adams_bound, 8);
            spit(out, E.pres.dump());
        } else if (h0->parsed()) {
            DgaPresentation pres = DgaPresentation::parse(slurp(in));
            std::vector<NCPoly> elements;
            std::istringstream is(slurp(relations_file));
            std::string line;
            while (std::getline(is, line)) {
                if (line.empty() || line[0] == '#') continue;
                elements.push_back(parse_ncpoly(pres.gens(), f, line));
            }
            auto res = h0_relations_check(pres, elements, bound);
            std::ostringstream os;
            bool all = true;
            for (const auto& c2 : res) {
                os << c2.element.str(pres.gens()) << "\t";
                if (c2.primitive)
                    os << "primitive: " << c2.primitive->str(pres.gens()) << "\n";
                else {
                    os << "not found within bound " << bound << "\n";
                    all = false;
                }
            }
            spit(out, os.str());
            return all ? 0 : 1;
        } else if (bv->parsed()) {
            AssocAlgebra A =
                quadratic_quotient_algebra(builtin_Apqr_tilting(pqr[0], pqr[1], pqr[2], f), 0);
            bool ok = verify_quasi_dilation(OneWayAlgebra{A}, 3);
            std::cout << (ok ? "quasi-dilation identity holds\n" : "quasi-dilation identity FAILS\n");
            return ok ? 0 : 1;
        } else if (chd2->parsed()) {
            DgaPresentation pres = DgaPresentation::parse(slurp(in));
            auto bad = pres.check_d_squared();
            auto badd = pres.check_degrees();
            if (bad.empty() && badd.empty()) {
                std::cout << "ok: d^2 = 0 and degrees consistent ("
                          << pres.gens().size() << " generators)\n";
                return 0;
            }
            for (int g : badd) std::cout << "degree check fails at " << pres.gens()[g].name << "\n";
            for (int g : bad) std::cout << "d^2 != 0 at " << pres.gens()[g].name << "\n";
            return 1;
        } else if (chainf->parsed()) {
            auto [Q, w] = cy3_from_quadratic(builtin_Apqr(pqr[0], pqr[1], pqr[2], f));
            auto [B, P] = cyclic_from_potential(Q, w, f);
            auto viol = check_ainf_relations(B, arity);
            bool cyc = check_cyclic(B, P, std::min(arity, 4));
            if (viol.empty() && cyc) {
                std::cout << "ok: Stasheff identities to arity " << arity << ", cyclic to arity "
                          << std::min(arity, 4) << "\n";
                return 0;
            }
            for (const auto& v : viol) std::cout << "violated: " << v << "\n";
            if (!cyc) std::cout << "cyclicity fails\n";
            return 1;
        } else if (cat->parsed()) {
            for (const auto& e : catalog_entries())
                std::cout << e.name << "\t" << e.kind << "\t" << e.params << "\t" << e.provenance
                          << "\n";
        } else if (ver->parsed()) {
            RunReport report = verify_pipeline(pipeline, golden_dir);
            spit(out, report.to_json() + "\n");
            return report.ok ? 0 : 1;
        }
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
