#include "dgaw/presentation.h"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace dgaw {

int BaseRing::index(const std::string& v) const {
    for (size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == v) return static_cast<int>(i);
    throw error("unknown vertex '" + v + "'");
}

int GenSet::add(const std::string& name, int src, int tgt, int deg, std::optional<int> adams) {
    if (byname_.count(name)) throw error("duplicate generator id '" + name + "'");
    if (src < 0 || src >= base_.size() || tgt < 0 || tgt >= base_.size())
        throw error("generator '" + name + "' has endpoints outside the base ring");
    int id = static_cast<int>(gens_.size());
    gens_.push_back(GenInfo{name, src, tgt, deg, adams});
    byname_[name] = id;
    return id;
}

int GenSet::add(const std::string& name, const std::string& src, const std::string& tgt, int deg,
                std::optional<int> adams) {
    return add(name, base_.index(src), base_.index(tgt), deg, adams);
}

int GenSet::index(const std::string& name) const {
    auto it = byname_.find(name);
    return it == byname_.end() ? -1 : it->second;
}

int Word::deg(const GenSet& gs) const {
    int d = 0;
    for (int g : factors) d += gs[g].deg;
    return d;
}

std::optional<int> Word::adams(const GenSet& gs) const {
    int a = 0;
    for (int g : factors) {
        if (!gs[g].adams) return std::nullopt;
        a += *gs[g].adams;
    }
    return a;
}

std::optional<Word> concat(const GenSet& gs, const Word& w2, const Word& w1) {
    if (w2.is_idem()) return w1.tgt(gs) == w2.vertex ? std::optional<Word>(w1) : std::nullopt;
    if (w1.is_idem()) return w2.src(gs) == w1.vertex ? std::optional<Word>(w2) : std::nullopt;
    if (w2.src(gs) != w1.tgt(gs)) return std::nullopt;
    Word r;
    r.factors = w2.factors;
    r.factors.insert(r.factors.end(), w1.factors.begin(), w1.factors.end());
    return r;
}

void NCPoly::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Scalar NCPoly::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
    NCPoly r = *this;
    r += o;
    return r;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    if (field_ != o.field_ && !o.is_zero()) throw error("field-tag mismatch in +");
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

NCPoly NCPoly::operator-(const NCPoly& o) const { return *this + (-o); }

NCPoly NCPoly::operator-() const {
    NCPoly r(field_);
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

NCPoly NCPoly::operator*(const Scalar& c) const {
    NCPoly r(field_);
    if (c.is_zero()) return r;
    for (const auto& [w, k] : terms_) {
        Scalar v = k * c;
        if (!v.is_zero()) r.terms_.emplace(w, v);
    }
    return r;
}

bool NCPoly::endpoints_are(const GenSet& gs, int src, int tgt) const {
    for (const auto& [w, c] : terms_)
        if (w.src(gs) != src || w.tgt(gs) != tgt) return false;
    return true;
}

std::optional<int> NCPoly::homogeneous_deg(const GenSet& gs) const {
    std::optional<int> d;
    for (const auto& [w, c] : terms_) {
        int wd = w.deg(gs);
        if (d && *d != wd) return std::nullopt;
        d = wd;
    }
    return d;
}

NCPoly mul(const GenSet& gs, const NCPoly& p2, const NCPoly& p1) {
    if (p2.field() != p1.field()) throw error("field-tag mismatch in mul");
    NCPoly r(p2.field());
    for (const auto& [w2, c2] : p2.terms())
        for (const auto& [w1, c1] : p1.terms())
            if (auto w = concat(gs, w2, w1)) r.add_term(*w, c2 * c1);
    return r;
}

NCPoly unit_poly(const GenSet& gs, Field f) {
    NCPoly r(f);
    for (int v = 0; v < gs.base().size(); ++v) r.add_term(Word::idem(v), Scalar::one(f));
    return r;
}

Derivation::Derivation(const GenSet& gs, Field f, int der_deg)
    : gs_(&gs), field_(f), der_deg_(der_deg), images_(static_cast<size_t>(gs.size()), NCPoly(f)) {}

void Derivation::set_image(int gen, NCPoly img) { images_[static_cast<size_t>(gen)] = std::move(img); }

NCPoly Derivation::apply_word(const Word& w) const {
    NCPoly r(field_);
    if (w.is_idem()) return r;  // derivations kill the base ring
    int degsum = 0;
    for (size_t i = 0; i < w.factors.size(); ++i) {
        const NCPoly& img = images_[static_cast<size_t>(w.factors[i])];
        if (!img.is_zero()) {
            Word left{std::vector<int>(w.factors.begin(), w.factors.begin() + static_cast<long>(i)), -1};
            Word right{std::vector<int>(w.factors.begin() + static_cast<long>(i) + 1, w.factors.end()), -1};
            NCPoly term = img;
            if (!left.factors.empty()) term = mul(*gs_, NCPoly(field_).added(left, Scalar::one(field_)), term);
            if (!right.factors.empty()) term = mul(*gs_, term, NCPoly(field_).added(right, Scalar::one(field_)));
            int sgn = der_deg_ * degsum;
            if (sgn % 2 != 0) term = -term;
            r += term;
        }
        degsum += (*gs_)[w.factors[i]].deg;
    }
    return r;
}

NCPoly Derivation::apply(const NCPoly& p) const {
    NCPoly r(field_);
    for (const auto& [w, c] : p.terms()) r += apply_word(w) * c;
    return r;
}

DgaPresentation::DgaPresentation(GenSet gs, Field f)
    : gens_(std::move(gs)), field_(f), diff_(static_cast<size_t>(gens_.size()), NCPoly(f)) {}

void DgaPresentation::set_diff(int gen, NCPoly d) { diff_[static_cast<size_t>(gen)] = std::move(d); }

void DgaPresentation::set_diff(const std::string& gen, const NCPoly& d) {
    int id = gens_.index(gen);
    if (id < 0) throw error("set_diff: unknown generator " + gen);
    set_diff(id, d);
}

NCPoly DgaPresentation::d(const NCPoly& p) const {
    Derivation der(gens_, field_, +1);
    for (int g = 0; g < gens_.size(); ++g) der.set_image(g, diff_[static_cast<size_t>(g)]);
    return der.apply(p);
}

std::vector<int> DgaPresentation::check_degrees() const {
    std::vector<int> bad;
    for (int g = 0; g < gens_.size(); ++g) {
        const NCPoly& dg = diff_[static_cast<size_t>(g)];
        if (dg.is_zero()) continue;
        bool ok = dg.endpoints_are(gens_, gens_[g].src, gens_[g].tgt);
        for (const auto& [w, c] : dg.terms())
            if (w.deg(gens_) != gens_[g].deg + 1) ok = false;
        if (!ok) bad.push_back(g);
    }
    return bad;
}

std::vector<int> DgaPresentation::check_d_squared() const {
    std::vector<int> bad;
    for (int g = 0; g < gens_.size(); ++g)
        if (!d(diff_[static_cast<size_t>(g)]).is_zero()) bad.push_back(g);
    return bad;
}

// ---- canonical text form ----

namespace {

struct TermRef {
    const Word* w;
    const Scalar* c;
};

std::string word_str(const GenSet& gs, const Word& w) {
    if (w.is_idem()) return "e_" + gs.base().vertices[static_cast<size_t>(w.vertex)];
    std::string s;
    for (size_t i = 0; i < w.factors.size(); ++i) {
        if (i) s += ' ';
        s += gs[w.factors[i]].name;
    }
    return s;
}

// canonical term order: (source, target, degree, word)
bool term_less(const GenSet& gs, const Word& a, const Word& b) {
    auto ka = std::tuple(a.src(gs), a.tgt(gs), a.deg(gs), a.length());
    auto kb = std::tuple(b.src(gs), b.tgt(gs), b.deg(gs), b.length());
    if (ka != kb) return ka < kb;
    if (a.factors != b.factors) return a.factors < b.factors;
    return a.vertex < b.vertex;
}

}  // namespace

std::string NCPoly::str(const GenSet& gs) const {
    if (terms_.empty()) return "0";
    std::vector<TermRef> ts;
    ts.reserve(terms_.size());
    for (const auto& [w, c] : terms_) ts.push_back({&w, &c});
    std::stable_sort(ts.begin(), ts.end(),
                     [&](const TermRef& a, const TermRef& b) { return term_less(gs, *a.w, *b.w); });
    std::string s;
    for (size_t i = 0; i < ts.size(); ++i) {
        std::string cs = ts[i].c->str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (i == 0) {
            if (neg) s += "- ", cs = cs.substr(1);
        } else {
            s += neg ? " - " : " + ";
            if (neg) cs = cs.substr(1);
        }
        if (cs != "1")
            s += cs + "*" + word_str(gs, *ts[i].w);
        else
            s += word_str(gs, *ts[i].w);
    }
    return s;
}

std::string DgaPresentation::dump() const {
    std::ostringstream os;
    os << "field " << field_.str() << "\n";
    os << "base";
    for (const auto& v : gens_.base().vertices) os << ' ' << v;
    os << "\n";
    for (int g = 0; g < gens_.size(); ++g) {
        const GenInfo& gi = gens_[g];
        os << gi.name << " : " << gens_.base().vertices[static_cast<size_t>(gi.src)] << " -> "
           << gens_.base().vertices[static_cast<size_t>(gi.tgt)] << ", deg=" << gi.deg;
        if (gi.adams) os << ", adams=" << *gi.adams;
        os << "\n";
    }
    for (int g = 0; g < gens_.size(); ++g)
        os << "d " << gens_[g].name << " = " << diff_[static_cast<size_t>(g)].str(gens_) << "\n";
    return os.str();
}

namespace {

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

NCPoly parse_poly(const GenSet& gs, Field f, const std::string& text) {
    NCPoly p(f);
    if (text == "0") return p;
    // split on top-level + / - separated by spaces
    std::vector<std::pair<int, std::string>> pieces;  // sign, chunk
    int sign = 1;
    std::string cur;
    auto flush = [&]() {
        if (!cur.empty()) pieces.push_back({sign, cur});
        cur.clear();
    };
    auto toks = split_ws(text);
    size_t i = 0;
    if (!toks.empty() && toks[0] == "-") {
        sign = -1;
        i = 1;
    }
    for (; i < toks.size(); ++i) {
        if (toks[i] == "+") {
            flush();
            sign = 1;
        } else if (toks[i] == "-") {
            flush();
            sign = -1;
        } else {
            if (!cur.empty()) cur += ' ';
            cur += toks[i];
        }
    }
    flush();
    for (auto& [sg, chunk] : pieces) {
        Scalar c = Scalar::one(f);
        std::string rest = chunk;
        // explicit coefficients start with a digit: "3/2*word"
        if (!chunk.empty() && std::isdigit(static_cast<unsigned char>(chunk[0]))) {
            auto star = chunk.find('*');
            if (star == std::string::npos) throw error("parse: malformed coefficient chunk " + chunk);
            c = Scalar::parse(f, chunk.substr(0, star));
            rest = chunk.substr(star + 1);
        }
        if (sg < 0) c = -c;
        Word w;
        auto fac = split_ws(rest);
        if (fac.size() == 1 && fac[0].rfind("e_", 0) == 0) {
            w = Word::idem(gs.base().index(fac[0].substr(2)));
        } else {
            for (const auto& t : fac) {
                int id = gs.index(t);
                if (id < 0) throw error("parse: unknown generator '" + t + "'");
                w.factors.push_back(id);
            }
        }
        p.add_term(w, c);
    }
    return p;
}

}  // namespace

NCPoly parse_ncpoly(const GenSet& gs, Field f, const std::string& text) {
    return parse_poly(gs, f, text);
}

DgaPresentation DgaPresentation::parse(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    Field f = Field::gf2();
    BaseRing base;
    std::vector<std::tuple<std::string, std::string, std::string, int, std::optional<int>>> gens;
    std::vector<std::pair<std::string, std::string>> diffs;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("field ", 0) == 0) {
            f = Field::parse(line.substr(6));
        } else if (line.rfind("base", 0) == 0) {
            auto toks = split_ws(line.substr(4));
            base.vertices = toks;
        } else if (line.rfind("d ", 0) == 0) {
            auto eq = line.find(" = ");
            if (eq == std::string::npos) throw error("parse: malformed differential line: " + line);
            diffs.push_back({line.substr(2, eq - 2), line.substr(eq + 3)});
        } else {
            // id : src -> tgt, deg=d[, adams=a]
            auto colon = line.find(" : ");
            auto arrow = line.find(" -> ");
            auto comma = line.find(", deg=");
            if (colon == std::string::npos || arrow == std::string::npos || comma == std::string::npos)
                throw error("parse: malformed generator line: " + line);
            std::string name = line.substr(0, colon);
            std::string src = line.substr(colon + 3, arrow - colon - 3);
            std::string tgt = line.substr(arrow + 4, comma - arrow - 4);
            std::string rest = line.substr(comma + 6);
            std::optional<int> adams;
            int deg;
            auto ac = rest.find(", adams=");
            if (ac != std::string::npos) {
                deg = std::stoi(rest.substr(0, ac));
                adams = std::stoi(rest.substr(ac + 8));
            } else {
                deg = std::stoi(rest);
            }
            gens.push_back({name, src, tgt, deg, adams});
        }
    }
    GenSet gs(base);
    for (auto& [n, s, t, dg, ad] : gens) gs.add(n, s, t, dg, ad);
    DgaPresentation pres(gs, f);
    for (auto& [n, poly] : diffs) pres.set_diff(n, parse_poly(pres.gens(), f, poly));
    auto bad = pres.check_degrees();
    if (!bad.empty())
        throw error("parse: degree/endpoint-inconsistent differential for generator '" +
                    pres.gens()[bad[0]].name + "'");
    return pres;
}

Derivation extend_derivation(const DgaPresentation& pres, const std::map<int, NCPoly>& images,
                             int der_deg) {
    const GenSet& gs = pres.gens();
    Derivation der(gs, pres.field(), der_deg);
    for (const auto& [g, img] : images) {
        if (!img.is_zero()) {
            if (!img.endpoints_are(gs, gs[g].src, gs[g].tgt))
                throw error("extend_derivation: endpoint mismatch in image of " + gs[g].name);
            auto hd = img.homogeneous_deg(gs);
            if (!hd || *hd != gs[g].deg + der_deg)
                throw error("extend_derivation: degree mismatch in image of " + gs[g].name);
        }
        der.set_image(g, img);
    }
    return der;
}

NCPoly DgaMorphism::apply(const NCPoly& p) const {
    const GenSet& sgs = source->gens();
    const GenSet& tgs = target->gens();
    NCPoly r(p.field());
    for (const auto& [w, c] : p.terms()) {
        if (w.is_idem()) {
            // vertex labels match up by name across source/target bases
            int v = tgs.base().index(sgs.base().vertices[static_cast<size_t>(w.vertex)]);
            r.add_term(Word::idem(v), c);
            continue;
        }
        NCPoly acc = images[static_cast<size_t>(w.factors[0])];
        for (size_t i = 1; i < w.factors.size(); ++i)
            acc = mul(tgs, acc, images[static_cast<size_t>(w.factors[i])]);
        r += acc * c;
    }
    return r;
}

DgaMorphism identity_morphism(const DgaPresentation& pres) {
    DgaMorphism f;
    f.source = &pres;
    f.target = &pres;
    for (int g = 0; g < pres.gens().size(); ++g)
        f.images.push_back(NCPoly::gen(pres.field(), g));
    return f;
}

bool check_morphism(const DgaMorphism& f) {
    const GenSet& sgs = f.source->gens();
    const GenSet& tgs = f.target->gens();
    if (static_cast<int>(f.images.size()) != sgs.size()) return false;
    for (int g = 0; g < sgs.size(); ++g) {
        const NCPoly& img = f.images[static_cast<size_t>(g)];
        if (img.is_zero()) continue;
        int ts = tgs.base().index(sgs.base().vertices[static_cast<size_t>(sgs[g].src)]);
        int tt = tgs.base().index(sgs.base().vertices[static_cast<size_t>(sgs[g].tgt)]);
        if (!img.endpoints_are(tgs, ts, tt)) return false;
        for (const auto& [w, c] : img.terms())
            if (w.deg(tgs) != sgs[g].deg) return false;
    }
    for (int g = 0; g < sgs.size(); ++g) {
        NCPoly lhs = f.apply(f.source->diff(g));
        NCPoly rhs = f.target->d(f.images[static_cast<size_t>(g)]);
        if (lhs != rhs) return false;
    }
    return true;
}

}  // namespace dgaw
