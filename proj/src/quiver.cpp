#include "dgaw/quiver.h"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace dgaw {

int Quiver::arrow_index(const std::string& id) const {
    for (size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].id == id) return static_cast<int>(i);
    return -1;
}

namespace {

int vindex(const Quiver& q, const std::string& v) {
    for (size_t i = 0; i < q.vertices.size(); ++i)
        if (q.vertices[i] == v) return static_cast<int>(i);
    throw error("quiver: unknown vertex " + v);
}

// arrow word in product order is a closed composable cycle?
bool closed_cycle(const Quiver& q, const std::vector<int>& word) {
    if (word.empty()) return false;
    for (size_t i = 0; i + 1 < word.size(); ++i)
        if (q.arrows[static_cast<size_t>(word[i])].src != q.arrows[static_cast<size_t>(word[i + 1])].tgt)
            return false;
    return q.arrows[static_cast<size_t>(word.front())].tgt ==
           q.arrows[static_cast<size_t>(word.back())].src;
}

std::vector<int> min_rotation(std::vector<int> w) {
    std::vector<int> best = w;
    for (size_t r = 1; r < w.size(); ++r) {
        std::rotate(w.begin(), w.begin() + 1, w.end());
        if (w < best) best = w;
    }
    return best;
}

}  // namespace

void Potential::add_term(const Quiver& q, Scalar c, std::vector<int> arrow_word) {
    if (!closed_cycle(q, arrow_word)) throw error("potential: term is not a closed cycle");
    if (c.is_zero()) return;
    std::vector<int> canon = min_rotation(std::move(arrow_word));
    for (auto& t : terms_) {
        if (t.arrows == canon) {
            t.coeff += c;
            if (t.coeff.is_zero())
                terms_.erase(std::find_if(terms_.begin(), terms_.end(),
                                          [&](const CycleTerm& u) { return u.arrows == canon; }));
            return;
        }
    }
    terms_.push_back(CycleTerm{c, canon});
}

void Potential::add_term(const Quiver& q, Scalar c, const std::vector<std::string>& arrow_ids) {
    std::vector<int> w;
    for (const auto& id : arrow_ids) {
        int a = q.arrow_index(id);
        if (a < 0) throw error("potential: unknown arrow " + id);
        w.push_back(a);
    }
    add_term(q, std::move(c), std::move(w));
}

bool potential_is_reduced(const Potential& w) {
    for (const auto& t : w.terms())
        if (t.arrows.size() < 3) return false;
    return true;
}

std::vector<std::pair<Scalar, std::vector<int>>> cyclic_derivative(const Quiver& q,
                                                                   const Potential& w,
                                                                   const std::string& arrow) {
    int a = q.arrow_index(arrow);
    if (a < 0) throw error("cyclic_derivative: arrow not in quiver: " + arrow);
    std::vector<std::pair<Scalar, std::vector<int>>> out;
    for (const auto& t : w.terms()) {
        for (size_t i = 0; i < t.arrows.size(); ++i) {
            if (t.arrows[i] != a) continue;
            // word = u a v in product order; contribute v u
            std::vector<int> vu(t.arrows.begin() + static_cast<long>(i) + 1, t.arrows.end());
            vu.insert(vu.end(), t.arrows.begin(), t.arrows.begin() + static_cast<long>(i));
            out.push_back({t.coeff, std::move(vu)});
        }
    }
    return out;
}

namespace {

std::string dual_name(const std::string& a) { return a + "*"; }
std::string loop_name(const std::string& v) { return "z" + v; }

}  // namespace

DgaPresentation ginzburg(const Quiver& q, const Potential& w, Field f, const SignVector* signs) {
    if (!potential_is_reduced(w)) throw error("ginzburg: potential is not reduced");
    BaseRing base{q.vertices};
    GenSet gs(base);
    for (const auto& a : q.arrows) gs.add(a.id, a.src, a.tgt, 0, -1);
    for (const auto& a : q.arrows) gs.add(dual_name(a.id), a.tgt, a.src, -1, -2);
    for (const auto& v : q.vertices) gs.add(loop_name(v), v, v, -2, -3);

    DgaPresentation pres(gs, f);
    const int n_arrows = static_cast<int>(q.arrows.size());

    std::set<std::pair<std::string, std::string>> support;
    auto signed_term = [&](const std::string& gen, const Word& word, Scalar c) -> Scalar {
        if (!signs) return c;
        NCPoly tmp(f);
        tmp.add_term(word, Scalar::one(f));
        std::string key = tmp.str(gs);
        support.insert({gen, key});
        auto it = signs->eps.find({gen, key});
        if (it == signs->eps.end()) return c;
        return it->second < 0 ? -c : c;
    };

    // d a* = circular derivative of the potential
    for (int a = 0; a < n_arrows; ++a) {
        NCPoly da(f);
        std::string dual = dual_name(q.arrows[static_cast<size_t>(a)].id);
        for (auto& [c, word] : cyclic_derivative(q, w, q.arrows[static_cast<size_t>(a)].id)) {
            Word ww;
            ww.factors = word;
            da.add_term(ww, signed_term(dual, ww, c));
        }
        pres.set_diff(gs.index(dual), da);
    }
    // d z_v = e_v (sum over arrows of [a, a*]) e_v with [a,a*] = a a* - a* a
    for (int vi = 0; vi < base.size(); ++vi) {
        NCPoly dz(f);
        std::string zn = loop_name(base.vertices[static_cast<size_t>(vi)]);
        for (int a = 0; a < n_arrows; ++a) {
            int ga = gs.index(q.arrows[static_cast<size_t>(a)].id);
            int gad = ga + n_arrows;
            if (gs[ga].tgt == vi) {
                Word ww{{ga, gad}, -1};  // a a*: loop at the target of a
                dz.add_term(ww, signed_term(zn, ww, Scalar::one(f)));
            }
            if (gs[ga].src == vi) {
                Word ww{{gad, ga}, -1};  // a* a: loop at the source of a
                dz.add_term(ww, signed_term(zn, ww, -Scalar::one(f)));
            }
        }
        pres.set_diff(gs.index(zn), dz);
    }
    if (signs) {
        for (const auto& [key, val] : signs->eps) {
            if (!support.count(key))
                throw error("sign vector keyed off the differential support: " + key.first + " / " +
                            key.second);
            if (val != 1 && val != -1) throw error("sign vector entries must be +1 or -1");
        }
    }
    return pres;
}

std::pair<Quiver, Potential> cy3_from_quadratic(const QuadraticPresentation& pres) {
    Quiver q = pres.quiver;
    Field f = pres.field;
    for (const auto& rel : pres.relations) {
        if (rel.terms.empty()) throw error("cy3_from_quadratic: empty relation " + rel.label);
        // common endpoints of the quadratic words
        int rs = -1, rt = -1;
        for (const auto& [c, pairw] : rel.terms) {
            int a1 = pres.quiver.arrow_index(pairw[1]);  // applied first
            int a2 = pres.quiver.arrow_index(pairw[0]);
            if (a1 < 0 || a2 < 0) throw error("cy3_from_quadratic: unknown arrow in relation");
            const Arrow& f1 = pres.quiver.arrows[static_cast<size_t>(a1)];
            const Arrow& f2 = pres.quiver.arrows[static_cast<size_t>(a2)];
            if (f1.tgt != f2.src) throw error("cy3_from_quadratic: relation term not composable");
            int s = vindex(pres.quiver, f1.src), t = vindex(pres.quiver, f2.tgt);
            if (rs < 0) rs = s, rt = t;
            if (rs != s || rt != t) throw error("cy3_from_quadratic: relation not endpoint-homogeneous");
        }
        // reversing arrow: from the relation target back to its source
        q.arrows.push_back(Arrow{rel.label, pres.quiver.vertices[static_cast<size_t>(rt)],
                                 pres.quiver.vertices[static_cast<size_t>(rs)]});
    }
    Potential w(f);
    // w = sum_j y_j rho_j
    for (const auto& rel : pres.relations) {
        int y = q.arrow_index(rel.label);
        for (const auto& [c, pairw] : rel.terms)
            w.add_term(q, c, {y, q.arrow_index(pairw[0]), q.arrow_index(pairw[1])});
    }
    static_cast<void>(vindex);
    return {std::move(q), std::move(w)};
}

QuadraticPresentation builtin_Apqr_tilting(int p, int q, int r, Field f) {
    // the tilting-algebra presentation: the three displayed relations plus
    // vanishing of all consecutive arm compositions; this is the quotient
    // with Hilbert series matching B(Q,w) = A + A^dual[-3]
    QuadraticPresentation pres = builtin_Apqr(p, q, r, f);
    Scalar one = Scalar::one(f);
    auto arm = [&](char head, const char* b, int len) {
        if (len >= 1) {
            std::string first = std::string(1, head) + "1";
            pres.relations.push_back(
                {"rel_" + first + "_" + b, {{one, {first, b}}}});
        }
        for (int i = 1; i + 1 <= len; ++i) {
            std::string hi = std::string(1, head) + std::to_string(i + 1);
            std::string lo = std::string(1, head) + std::to_string(i);
            pres.relations.push_back({"rel_" + hi + "_" + lo, {{one, {hi, lo}}}});
        }
    };
    arm('x', "b1", p - 2);
    arm('y', "b2", q - 2);
    arm('z', "b3", r - 2);
    return pres;
}

QuadraticPresentation builtin_Apqr(int p, int q, int r, Field f) {
    if (p < 2 || q < 2 || r < 2) throw error("builtin_Apqr: parameters must be >= 2");
    Quiver Q;
    Q.vertices = {"A", "B"};
    for (int i = 1; i <= p - 1; ++i) Q.vertices.push_back("P" + std::to_string(i));
    for (int j = 1; j <= q - 1; ++j) Q.vertices.push_back("Q" + std::to_string(j));
    for (int k = 1; k <= r - 1; ++k) Q.vertices.push_back("R" + std::to_string(k));
    Q.arrows.push_back({"a1", "A", "B"});
    Q.arrows.push_back({"a2", "A", "B"});
    Q.arrows.push_back({"b1", "B", "P1"});
    Q.arrows.push_back({"b2", "B", "Q1"});
    Q.arrows.push_back({"b3", "B", "R1"});
    for (int i = 1; i <= p - 2; ++i)
        Q.arrows.push_back({"x" + std::to_string(i), "P" + std::to_string(i), "P" + std::to_string(i + 1)});
    for (int j = 1; j <= q - 2; ++j)
        Q.arrows.push_back({"y" + std::to_string(j), "Q" + std::to_string(j), "Q" + std::to_string(j + 1)});
    for (int k = 1; k <= r - 2; ++k)
        Q.arrows.push_back({"z" + std::to_string(k), "R" + std::to_string(k), "R" + std::to_string(k + 1)});

    QuadraticPresentation pres;
    pres.quiver = Q;
    pres.field = f;
    Scalar one = Scalar::one(f);
    pres.relations.push_back({"c2", {{one, {"b2", "a1"}}}});
    pres.relations.push_back({"c1", {{one, {"b1", "a2"}}}});
    pres.relations.push_back({"c3", {{one, {"b3", "a1"}}, {-one, {"b3", "a2"}}}});
    return pres;
}

DgaPresentation builtin_ginzburg_pqr(int p, int q, int r, Field f, const SignVector* signs) {
    auto [Q, w] = cy3_from_quadratic(builtin_Apqr(p, q, r, f));
    return ginzburg(Q, w, f, signs);
}

DgaPresentation builtin_ginzburg_Ar(int r, Field f) {
    if (r < 1) throw error("builtin_ginzburg_Ar: r must be >= 1");
    Quiver Q;
    for (int i = 1; i <= r; ++i) Q.vertices.push_back(std::to_string(i));
    for (int i = 1; i <= r - 1; ++i)
        Q.arrows.push_back(
            {"al" + std::to_string(i), std::to_string(i), std::to_string(i + 1)});
    Potential w(f);
    return ginzburg(Q, w, f);
}

std::string quiver_to_json(const Quiver& q, const Potential& w) {
    nlohmann::json j;
    j["vertices"] = q.vertices;
    j["arrows"] = nlohmann::json::array();
    for (const auto& a : q.arrows) j["arrows"].push_back({{"id", a.id}, {"src", a.src}, {"tgt", a.tgt}});
    j["potential"] = nlohmann::json::array();
    for (const auto& t : w.terms()) {
        nlohmann::json jt;
        jt["coeff"] = t.coeff.str();
        jt["cycle"] = nlohmann::json::array();
        for (int a : t.arrows) jt["cycle"].push_back(q.arrows[static_cast<size_t>(a)].id);
        j["potential"].push_back(jt);
    }
    return j.dump(2);
}

std::pair<Quiver, Potential> quiver_from_json(const std::string& text, Field f) {
    auto j = nlohmann::json::parse(text, nullptr, true, true);
    Quiver q;
    for (const auto& v : j.at("vertices")) q.vertices.push_back(v.get<std::string>());
    for (const auto& a : j.at("arrows"))
        q.arrows.push_back({a.at("id").get<std::string>(), a.at("src").get<std::string>(),
                            a.at("tgt").get<std::string>()});
    Potential w(f);
    if (j.count("potential"))
        for (const auto& t : j.at("potential")) {
            std::vector<std::string> cyc;
            for (const auto& s : t.at("cycle")) cyc.push_back(s.get<std::string>());
            w.add_term(q, Scalar::parse(f, t.at("coeff").get<std::string>()), cyc);
        }
    return {std::move(q), std::move(w)};
}

}  // namespace dgaw
