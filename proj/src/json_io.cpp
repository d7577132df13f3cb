#include "focaljet/json_io.hpp"

namespace focaljet {

namespace {

const json& need(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw SchemaError(std::string("missing field '") + key + "'");
    return j.at(key);
}

int need_int(const json& j, const char* key) {
    const json& v = need(j, key);
    if (!v.is_number_integer()) throw SchemaError(std::string("field '") + key + "' must be an integer");
    return v.get<int>();
}

std::string need_str(const json& j, const char* key) {
    const json& v = need(j, key);
    if (!v.is_string()) throw SchemaError(std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

}  // namespace

json to_json(const Rational& r) { return r.str(); }
json to_json(const GaussRational& g) { return g.str(); }

json to_json(const PiCoeff& c) {
    json out = json::array();
    for (const auto& [k, v] : c.terms())
        out.push_back({{"pi", k}, {"re", v.re.str()}, {"im", v.im.str()}});
    return out;
}

json to_json(const Basis& b) {
    switch (b.kind) {
        case Basis::Kind::xy: return "XY";
        case Basis::Kind::z: return "Z";
        case Basis::Kind::zmu: return json{{"Zmu", b.mu.str()}};
    }
    throw std::logic_error("unreachable basis");
}

json to_json(const SmoothJet& f) {
    json terms = json::array();
    for (const auto& [k, c] : f.terms())
        terms.push_back({{"p", k.first}, {"q", k.second}, {"coeff", to_json(c)}});
    return {{"order", f.order()}, {"basis", to_json(f.basis())}, {"terms", terms}};
}

json to_json(const VPlusJet& g) {
    return {{"order", g.order()},
            {"g", to_json(g.g())},
            {"sign", g.sign() == VPlusJet::Sign::plus ? "+" : "-"}};
}

json to_json(const Mu& mu) { return mu.value().str(); }

json to_json(const SingularPart& s) {
    json neg = json::array();
    for (const auto& [k, c] : s.neg_terms)
        neg.push_back({{"p", k.first}, {"q", k.second}, {"coeff", to_json(c)}});
    return {{"neg_terms", neg}, {"lnz", to_json(s.lnz)}, {"lnzbar", to_json(s.lnzbar)}};
}

json to_json(const LogLaurentGerm& g) {
    json laurent = json::array();
    for (const auto& [k, c] : g.laurent())
        laurent.push_back({{"p", k.first}, {"q", k.second}, {"coeff", to_json(c)}});
    return {{"order", g.order()},
            {"mu", to_json(g.mu())},
            {"laurent", laurent},
            {"lnz", to_json(g.lnz())},
            {"lnzbar", to_json(g.lnzbar())}};
}

namespace {

json label_to_json(int m, int order, const std::vector<SmoothJet>& series,
                   const std::vector<std::vector<SmoothJet>>& g, bool mod2pix) {
    json ts = json::array();
    for (const SmoothJet& t : series) ts.push_back(to_json(t));
    json gm = json::array();
    for (const auto& row : g) {
        json r = json::array();
        for (const SmoothJet& e : row) r.push_back(to_json(e));
        gm.push_back(r);
    }
    json out{{"m", m}, {"order", order}, {"ts", ts}, {"g", gm}};
    if (mod2pix) out["mod2piX"] = true;
    return out;
}

}  // namespace

json to_json(const CompleteFFLabel& l) { return label_to_json(l.m, l.order, l.ts, l.g, false); }
json to_json(const FFLabel& l) { return label_to_json(l.m, l.order, l.s, l.g, true); }

json to_json(const LiftReport& r) {
    json failing = json::array();
    for (const auto& [p, q] : r.failing_coeffs) failing.push_back({p, q});
    return {{"mu", to_json(r.mu)},
            {"liftable", r.liftable},
            {"holomorphic", r.holomorphic},
            {"failing", failing}};
}

json to_json(const EquivalenceCertificate& c) {
    const char* verdict = c.verdict == Verdict::equivalent     ? "equivalent"
                          : c.verdict == Verdict::not_equivalent ? "not-equivalent"
                                                                 : "undecided";
    json corr = json::array();
    for (const SmoothJet& t : c.corrections) corr.push_back(to_json(t));
    return {{"order", c.order},
            {"verdict", verdict},
            {"G", to_json(c.mediator)},
            {"corrections", corr},
            {"residual", to_json(c.residual)},
            {"ts_mismatch", to_json(c.ts_mismatch)},
            {"rotation", c.rotation},
            {"note", c.note}};
}

json to_json(const Point& p) { return json::array({p.x.str(), p.y.str()}); }

json to_json(const IngredientRep& rep) {
    json vertices = json::array();
    for (const Point& v : rep.polygon.vertices) vertices.push_back(to_json(v));
    json points = json::array();
    for (const MarkedPoint& mp : rep.points)
        points.push_back({{"c", to_json(mp.c)}, {"m", mp.multiplicity}});
    json labels = json::array();
    for (const CompleteFFLabel& l : rep.labels) labels.push_back(to_json(l));
    return {{"vertices", vertices}, {"points", points}, {"labels", labels}};
}

json to_json(const ExamplePair& e) {
    return {{"l", to_json(e.l)}, {"lp", to_json(e.lp)}, {"g", to_json(e.mediator)}};
}

Rational rational_from_json(const json& j) {
    if (!j.is_string()) throw SchemaError("rational must be a string \"n/d\"");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw SchemaError(e.what());
    }
}

GaussRational gauss_from_json(const json& j) {
    if (!j.is_string()) throw SchemaError("gaussian rational must be a string");
    try {
        return GaussRational::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw SchemaError(e.what());
    }
}

PiCoeff picoeff_from_json(const json& j) {
    if (!j.is_array()) throw SchemaError("coefficient must be a list of {pi, re, im}");
    PiCoeff c;
    for (const json& t : j) {
        int k = need_int(t, "pi");
        if (k < 0) throw SchemaError("pi exponent must be >= 0");
        Rational re = Rational::parse(need_str(t, "re"));
        Rational im = Rational::parse(need_str(t, "im"));
        c.set(static_cast<unsigned>(k), c.part(k) + GaussRational(re, im));
    }
    return c;
}

Basis basis_from_json(const json& j) {
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "XY") return Basis::XY();
        if (s == "Z") return Basis::Z();
        throw SchemaError("unknown basis '" + s + "'");
    }
    if (j.is_object() && j.contains("Zmu")) return Basis::Zmu(mu_from_json(j.at("Zmu")));
    throw SchemaError("basis must be \"XY\", \"Z\", or {\"Zmu\": mu}");
}

SmoothJet jet_from_json(const json& j) {
    int order = need_int(j, "order");
    if (order < 1) throw SchemaError("order must be >= 1");
    Basis basis = basis_from_json(need(j, "basis"));
    SmoothJet f(order, basis);
    const json& terms = need(j, "terms");
    if (!terms.is_array()) throw SchemaError("terms must be a list");
    for (const json& t : terms) {
        int p = need_int(t, "p"), q = need_int(t, "q");
        try {
            f.set_coeff(p, q, f.coeff(p, q) + picoeff_from_json(need(t, "coeff")));
        } catch (const std::invalid_argument& e) {
            throw SchemaError(e.what());
        }
    }
    return f;
}

VPlusJet vplus_from_json(const json& j) {
    try {
        if (j.is_object() && j.contains("gc")) {
            // alternative form: the complexified jet in the Z basis
            return VPlusJet::from_complex(jet_from_json(j.at("gc")));
        }
        VPlusJet::Sign sign = VPlusJet::Sign::plus;
        if (j.contains("sign")) {
            std::string s = need_str(j, "sign");
            if (s == "-")
                sign = VPlusJet::Sign::minus;
            else if (s != "+")
                throw SchemaError("sign must be \"+\" or \"-\"");
        }
        SmoothJet g = jet_from_json(need(j, "g"));
        if (need_int(j, "order") != g.order()) throw SchemaError("order does not match g");
        return VPlusJet(std::move(g), sign);
    } catch (const std::invalid_argument& e) {
        throw SchemaError(e.what());
    } catch (const std::domain_error& e) {
        throw SchemaError(e.what());
    }
}

Mu mu_from_json(const json& j) {
    try {
        return Mu(gauss_from_json(j));
    } catch (const std::domain_error& e) {
        throw SchemaError(e.what());
    }
}

namespace {

template <typename Label>
Label label_from_json_impl(const json& j, std::vector<SmoothJet> Label::* series) {
    Label l;
    l.m = need_int(j, "m");
    l.order = need_int(j, "order");
    const json& ts = need(j, "ts");
    const json& g = need(j, "g");
    if (!ts.is_array() || !g.is_array()) throw SchemaError("ts and g must be lists");
    for (const json& t : ts) (l.*series).push_back(jet_from_json(t));
    for (const json& row : g) {
        if (!row.is_array()) throw SchemaError("g must be a matrix");
        std::vector<SmoothJet> r;
        for (const json& e : row) r.push_back(jet_from_json(e));
        l.g.push_back(std::move(r));
    }
    return l;
}

}  // namespace

CompleteFFLabel complete_label_from_json(const json& j) {
    if (j.is_object() && j.contains("mod2piX") && j.at("mod2piX").get<bool>())
        throw SchemaError("expected a complete label, got mod2piX data");
    return label_from_json_impl<CompleteFFLabel>(j, &CompleteFFLabel::ts);
}

FFLabel ff_label_from_json(const json& j) {
    return label_from_json_impl<FFLabel>(j, &FFLabel::s);
}

Point point_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw SchemaError("point must be [\"x\",\"y\"]");
    return Point{rational_from_json(j.at(0)), rational_from_json(j.at(1))};
}

IngredientRep rep_from_json(const json& j) {
    IngredientRep rep;
    const json& vs = need(j, "vertices");
    if (!vs.is_array()) throw SchemaError("vertices must be a list");
    for (const json& v : vs) rep.polygon.vertices.push_back(point_from_json(v));
    const json& ps = need(j, "points");
    if (!ps.is_array()) throw SchemaError("points must be a list");
    for (const json& p : ps) {
        MarkedPoint mp;
        mp.c = point_from_json(need(p, "c"));
        mp.multiplicity = need_int(p, "m");
        rep.points.push_back(mp);
    }
    const json& ls = need(j, "labels");
    if (!ls.is_array()) throw SchemaError("labels must be a list");
    for (const json& l : ls) rep.labels.push_back(complete_label_from_json(l));
    return rep;
}

std::vector<VPlusJet> vplus_list_from_json(const json& j) {
    if (!j.is_array()) throw SchemaError("expected a list of jets");
    std::vector<VPlusJet> out;
    for (const json& e : j) out.push_back(vplus_from_json(e));
    return out;
}

}  // namespace focaljet
